use super::{ExactError, Monomial, RatFrac, Rational, Var};
use num_traits::One;
use std::collections::BTreeMap;
use std::fmt;

/// Which monomials survive truncation: total degree in the graded variables
/// at most `max_total`, plus optional per-variable caps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Truncation {
    pub graded: Vec<Var>,
    pub max_total: u32,
    pub caps: Vec<(Var, u16)>,
}

impl Truncation {
    pub fn total(graded: &[Var], max_total: u32) -> Truncation {
        Truncation { graded: graded.to_vec(), max_total, caps: vec![] }
    }

    pub fn with_cap(mut self, v: Var, cap: u16) -> Truncation {
        self.caps.push((v, cap));
        self
    }

    pub fn grade(&self, m: &Monomial) -> u32 {
        self.graded.iter().map(|v| m.exp(*v) as u32).sum()
    }

    pub fn keeps(&self, m: &Monomial) -> bool {
        self.grade(m) <= self.max_total && self.caps.iter().all(|(v, c)| m.exp(*v) <= *c)
    }
}

/// Polynomial in the universe variables with coefficients in the fraction
/// field; used for truncated generating functions whose coefficients depend
/// on `b` and `t`.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct PolySeries {
    terms: BTreeMap<Monomial, RatFrac>,
}

impl PolySeries {
    pub fn zero() -> PolySeries {
        PolySeries::default()
    }

    pub fn one() -> PolySeries {
        PolySeries::term(Monomial::ONE, RatFrac::one())
    }

    pub fn term(m: Monomial, c: RatFrac) -> PolySeries {
        let mut s = PolySeries::zero();
        s.add_term(m, c);
        s
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &RatFrac)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> RatFrac {
        self.terms.get(m).cloned().unwrap_or_else(RatFrac::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: RatFrac) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &PolySeries) -> PolySeries {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &PolySeries) -> PolySeries {
        self.add(&other.scale(&RatFrac::int(-1)))
    }

    pub fn scale(&self, c: &RatFrac) -> PolySeries {
        let mut out = PolySeries::zero();
        for (m, x) in &self.terms {
            out.add_term(*m, x * c);
        }
        out
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> PolySeries {
        PolySeries { terms: self.terms.iter().map(|(m, c)| (m.mul(mono), c.clone())).collect() }
    }

    /// Product keeping only monomials allowed by `trunc`.
    pub fn mul_trunc(&self, other: &PolySeries, trunc: &Truncation) -> PolySeries {
        let mut out = PolySeries::zero();
        for (m1, c1) in &self.terms {
            if !trunc.keeps(m1) {
                continue;
            }
            for (m2, c2) in &other.terms {
                let m = m1.mul(m2);
                if trunc.keeps(&m) {
                    out.add_term(m, c1 * c2);
                }
            }
        }
        out
    }

    pub fn truncate(&self, trunc: &Truncation) -> PolySeries {
        PolySeries {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| trunc.keeps(m))
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Apply a coefficient map (e.g. a specialization), dropping zeros.
    pub fn map_coeffs<F>(&self, f: F) -> Result<PolySeries, ExactError>
    where
        F: Fn(&RatFrac) -> Result<RatFrac, ExactError>,
    {
        let mut out = PolySeries::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, f(c)?);
        }
        Ok(out)
    }

    /// Partial derivative in `v`.
    pub fn derivative(&self, v: Var) -> PolySeries {
        let mut out = PolySeries::zero();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            if e > 0 {
                out.add_term(m.with(v, e - 1), c.scale(&Rational::from_integer(e.into())));
            }
        }
        out
    }
}

impl fmt::Display for PolySeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "[{c}]*{m}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PolySeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn check_positive_grade(s: &PolySeries, trunc: &Truncation) -> Result<(), ExactError> {
    if s.terms().any(|(m, _)| trunc.grade(m) == 0) {
        return Err(ExactError::NonzeroConstantTerm);
    }
    Ok(())
}

/// `exp(S)` truncated; every term of `S` must have positive grade.
pub fn graded_series_exp(s: &PolySeries, trunc: &Truncation) -> Result<PolySeries, ExactError> {
    check_positive_grade(s, trunc)?;
    let s = s.truncate(trunc);
    let mut out = PolySeries::one();
    let mut power = PolySeries::one();
    let mut fact = Rational::one();
    for m in 1..=trunc.max_total {
        power = power.mul_trunc(&s, trunc);
        if power.is_zero() {
            break;
        }
        fact *= Rational::from_integer(m.into());
        out = out.add(&power.scale(&RatFrac::constant(Rational::one() / &fact)));
    }
    Ok(out)
}

/// `log(S)` truncated; `S - 1` must have positive grade.
pub fn graded_series_log(s: &PolySeries, trunc: &Truncation) -> Result<PolySeries, ExactError> {
    let u = s.sub(&PolySeries::one());
    check_positive_grade(&u, trunc)?;
    let u = u.truncate(trunc);
    let mut out = PolySeries::zero();
    let mut power = PolySeries::one();
    for m in 1..=trunc.max_total {
        power = power.mul_trunc(&u, trunc);
        if power.is_zero() {
            break;
        }
        let sign = if m % 2 == 1 { 1 } else { -1 };
        out = out.add(&power.scale(&RatFrac::constant(Rational::new(sign.into(), m.into()))));
    }
    Ok(out)
}
