use super::{ExactError, MPoly, RatFrac, Var};
use std::fmt;

/// Truncated expansion `sum_{r=0}^{R} c_r * var^{-r}` (for expansions at
/// infinity) or `sum c_r * var^r`. Coefficients past `R` are unknown.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncSeries {
    var: Var,
    inverse: bool,
    coeffs: Vec<RatFrac>,
}

impl TruncSeries {
    pub fn new(var: Var, inverse: bool, coeffs: Vec<RatFrac>) -> TruncSeries {
        assert!(!coeffs.is_empty(), "a series carries at least order 0");
        TruncSeries { var, inverse, coeffs }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn is_inverse(&self) -> bool {
        self.inverse
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[RatFrac] {
        &self.coeffs
    }

    /// Coefficient `r`, or an error beyond the tracked precision.
    pub fn coeff(&self, r: usize) -> Result<&RatFrac, ExactError> {
        self.coeffs.get(r).ok_or(ExactError::PrecisionExhausted {
            requested: r,
            available: self.order(),
        })
    }

    pub fn truncate(&self, order: usize) -> Result<TruncSeries, ExactError> {
        if order > self.order() {
            return Err(ExactError::PrecisionExhausted { requested: order, available: self.order() });
        }
        Ok(TruncSeries { coeffs: self.coeffs[..=order].to_vec(), ..self.clone() })
    }

    fn check_compatible(&self, other: &TruncSeries) {
        assert!(
            self.var == other.var && self.inverse == other.inverse,
            "series in different variables"
        );
    }

    pub fn add(&self, other: &TruncSeries) -> TruncSeries {
        self.check_compatible(other);
        let r = self.order().min(other.order());
        TruncSeries {
            coeffs: (0..=r).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect(),
            ..self.clone()
        }
    }

    pub fn mul(&self, other: &TruncSeries) -> TruncSeries {
        self.check_compatible(other);
        let r = self.order().min(other.order());
        let coeffs = (0..=r)
            .map(|n| (0..=n).map(|i| &self.coeffs[i] * &other.coeffs[n - i]).sum())
            .collect();
        TruncSeries { coeffs, ..self.clone() }
    }

    pub fn scale(&self, c: &RatFrac) -> TruncSeries {
        TruncSeries { coeffs: self.coeffs.iter().map(|x| x * c).collect(), ..self.clone() }
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.inverse { "-" } else { "" };
        for (r, c) in self.coeffs.iter().enumerate() {
            if r > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "[{c}]*{}^{sign}{r}", self.var)?;
        }
        write!(f, " + O({}^{sign}{})", self.var, self.order() + 1)
    }
}

impl fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Expansion of `f` in powers of `1/var` up to `var^{-order}`, by long
/// division in `1/var`.
pub fn series_at_infinity(f: &RatFrac, var: Var, order: usize) -> Result<TruncSeries, ExactError> {
    let num = f.num().split_by(var);
    let den = f.den().split_by(var);
    let dn = num.len().saturating_sub(1);
    let dd = den.len() - 1;
    if !f.is_zero() && dn > dd {
        return Err(ExactError::PoleAtInfinity { num: dn as u32, den: dd as u32 });
    }
    // reversed coefficient lists: a_i multiplies var^{dd - i}
    let a = |i: usize| -> MPoly {
        if i <= dd && dd - i < num.len() {
            num[dd - i].clone()
        } else {
            MPoly::zero()
        }
    };
    let d = |i: usize| -> MPoly {
        if i <= dd {
            den[dd - i].clone()
        } else {
            MPoly::zero()
        }
    };
    let lead = RatFrac::from_poly(d(0));
    let mut coeffs: Vec<RatFrac> = Vec::with_capacity(order + 1);
    for r in 0..=order {
        let mut acc = RatFrac::from_poly(a(r));
        for j in 1..=r {
            let dj = d(j);
            if dj.is_zero() || coeffs[r - j].is_zero() {
                continue;
            }
            acc = &acc - &(&coeffs[r - j] * &RatFrac::from_poly(dj));
        }
        coeffs.push(&acc / &lead);
    }
    Ok(TruncSeries::new(var, true, coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Bindings;

    fn v(x: Var) -> RatFrac {
        RatFrac::var(x)
    }

    #[test]
    fn geometric() {
        let f = RatFrac::one() / (&v(Var::N) - &RatFrac::one());
        let s = series_at_infinity(&f, Var::N, 3).unwrap();
        let want: Vec<RatFrac> = [0, 1, 1, 1].iter().map(|&c| RatFrac::int(c)).collect();
        assert_eq!(s.coeffs(), &want[..]);
    }

    #[test]
    fn pole_detected() {
        let f = &v(Var::N) * &v(Var::N) / (&v(Var::N) + &RatFrac::one());
        assert!(matches!(series_at_infinity(&f, Var::N, 2), Err(ExactError::PoleAtInfinity { .. })));
    }

    #[test]
    fn m_over_n_after_substitution() {
        let one = RatFrac::one();
        let mut bind = Bindings::new();
        bind.insert(Var::M, &v(Var::N) / &(&one - &v(Var::T)));
        let f = (&v(Var::M) / &v(Var::N)).substitute(&bind).unwrap();
        let s = series_at_infinity(&f, Var::N, 2).unwrap();
        assert_eq!(s.coeffs()[0], &one / &(&one - &v(Var::T)));
        assert!(s.coeffs()[1].is_zero() && s.coeffs()[2].is_zero());
    }

    #[test]
    fn precision_is_not_fabricated() {
        let f = RatFrac::one() / (&v(Var::N) - &RatFrac::one());
        let s = series_at_infinity(&f, Var::N, 1).unwrap();
        assert!(s.coeff(2).is_err());
        assert!(s.truncate(3).is_err());
    }
}
