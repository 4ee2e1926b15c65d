use super::{ExactError, MPoly, Rational, Var};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Simultaneous substitution `var -> value`.
pub type Bindings = BTreeMap<Var, RatFrac>;

/// Quotient of two polynomials, not necessarily reduced.
///
/// Normalization: the denominator has integer content 1, a positive leading
/// coefficient, and no monomial factor shared with the numerator. Zero is
/// stored as `0/1`.
#[derive(Clone)]
pub struct RatFrac {
    num: MPoly,
    den: MPoly,
}

/// `a.num * b.den == b.num * a.den`.
pub fn frac_equal(a: &RatFrac, b: &RatFrac) -> bool {
    if a.den == b.den {
        return a.num == b.num;
    }
    if a.num.is_zero() || b.num.is_zero() {
        return a.num.is_zero() && b.num.is_zero();
    }
    &a.num * &b.den == &b.num * &a.den
}

impl RatFrac {
    pub fn new(num: MPoly, den: MPoly) -> Result<RatFrac, ExactError> {
        if den.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(RatFrac::normalized(num, den))
    }

    fn normalized(mut num: MPoly, mut den: MPoly) -> RatFrac {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return RatFrac::zero();
        }
        let g = num.monomial_content().gcd(&den.monomial_content());
        if !g.is_one() {
            num = num.div_monomial(&g).unwrap();
            den = den.div_monomial(&g).unwrap();
        }
        let mut c = den.content();
        if den.leading_term().unwrap().1.is_negative() {
            c = -c;
        }
        if !c.is_one() {
            let inv = Rational::one() / c;
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RatFrac { num, den }
    }

    pub fn zero() -> RatFrac {
        RatFrac { num: MPoly::zero(), den: MPoly::one() }
    }

    pub fn one() -> RatFrac {
        RatFrac { num: MPoly::one(), den: MPoly::one() }
    }

    pub fn int(n: i64) -> RatFrac {
        RatFrac::from_poly(MPoly::int(n))
    }

    pub fn constant(c: Rational) -> RatFrac {
        RatFrac::from_poly(MPoly::constant(c))
    }

    pub fn var(v: Var) -> RatFrac {
        RatFrac::from_poly(MPoly::var(v))
    }

    pub fn from_poly(p: MPoly) -> RatFrac {
        RatFrac { num: p, den: MPoly::one() }
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn den(&self) -> &MPoly {
        &self.den
    }

    pub fn into_parts(self) -> (MPoly, MPoly) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    /// The polynomial value when the denominator is 1.
    pub fn as_poly(&self) -> Option<&MPoly> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    /// Polynomial value if the denominator divides the numerator.
    pub fn to_poly(&self) -> Option<MPoly> {
        if self.den.is_one() {
            return Some(self.num.clone());
        }
        self.num.exact_div(&self.den)
    }

    pub fn recip(&self) -> Result<RatFrac, ExactError> {
        RatFrac::new(self.den.clone(), self.num.clone())
    }

    pub fn scale(&self, c: &Rational) -> RatFrac {
        RatFrac::normalized(self.num.scale(c), self.den.clone())
    }

    pub fn pow(&self, e: u32) -> RatFrac {
        RatFrac { num: self.num.pow(e), den: self.den.pow(e) }
    }

    pub fn checked_div(&self, rhs: &RatFrac) -> Result<RatFrac, ExactError> {
        if rhs.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(self * &rhs.recip()?)
    }

    pub fn is_free_of(&self, v: Var) -> bool {
        self.num.is_free_of(v) && self.den.is_free_of(v)
    }

    pub fn specialize(&self, v: Var, value: &Rational) -> Result<RatFrac, ExactError> {
        let den = self.den.specialize(v, value);
        if den.is_zero() {
            return Err(ExactError::DenominatorVanishes);
        }
        Ok(RatFrac::normalized(self.num.specialize(v, value), den))
    }

    /// Ring-homomorphic image under the simultaneous substitution.
    pub fn substitute(&self, bindings: &Bindings) -> Result<RatFrac, ExactError> {
        if bindings.is_empty() {
            return Ok(self.clone());
        }
        // Homogenize both halves with the same denominator powers so that they
        // cancel exactly.
        let mut caps = BTreeMap::new();
        for v in bindings.keys() {
            caps.insert(*v, self.num.degree(*v).max(self.den.degree(*v)));
        }
        let num = homogeneous_substitute(&self.num, bindings, &caps);
        let den = homogeneous_substitute(&self.den, bindings, &caps);
        if den.is_zero() {
            return Err(ExactError::DenominatorVanishes);
        }
        Ok(RatFrac::normalized(num, den))
    }

    /// Evaluate with all variables bound to rationals.
    pub fn eval(&self, value: &dyn Fn(Var) -> Rational) -> Result<Rational, ExactError> {
        let d = self.den.eval(value);
        if d.is_zero() {
            return Err(ExactError::DenominatorVanishes);
        }
        Ok(self.num.eval(value) / d)
    }
}

/// Substitute bound variables, multiplying through by `q_v^{cap_v}` for each
/// binding `p_v / q_v`.
fn homogeneous_substitute(
    poly: &MPoly,
    bindings: &Bindings,
    caps: &BTreeMap<Var, u32>,
) -> MPoly {
    let vars: Vec<Var> = bindings.keys().copied().collect();
    // group terms by the exponents of the bound variables
    let mut groups: BTreeMap<Vec<u16>, MPoly> = BTreeMap::new();
    for (m, c) in poly.terms() {
        let key: Vec<u16> = vars.iter().map(|v| m.exp(*v)).collect();
        let mut rest = *m;
        for v in &vars {
            rest = rest.with(*v, 0);
        }
        groups.entry(key).or_default().add_term(rest, c.clone());
    }
    let mut num_pows: Vec<Vec<MPoly>> = Vec::new();
    let mut den_pows: Vec<Vec<MPoly>> = Vec::new();
    for v in &vars {
        let cap = caps[v] as usize;
        let f = &bindings[v];
        num_pows.push(powers(&f.num, cap));
        den_pows.push(powers(&f.den, cap));
    }
    let mut out = MPoly::zero();
    for (key, rest) in groups {
        let mut term = rest;
        for (i, &e) in key.iter().enumerate() {
            let cap = caps[&vars[i]] as usize;
            let e = e as usize;
            term = &term * &num_pows[i][e];
            term = &term * &den_pows[i][cap - e];
        }
        out += &term;
    }
    out
}

fn powers(p: &MPoly, cap: usize) -> Vec<MPoly> {
    let mut out = Vec::with_capacity(cap + 1);
    out.push(MPoly::one());
    for i in 0..cap {
        let next = &out[i] * p;
        out.push(next);
    }
    out
}

impl PartialEq for RatFrac {
    fn eq(&self, other: &RatFrac) -> bool {
        frac_equal(self, other)
    }
}

impl Eq for RatFrac {}

impl fmt::Debug for RatFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for RatFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &MPoly| {
            if p.num_terms() == 1 && p.constant_term().is_zero() || p.is_constant() {
                format!("{p}")
            } else {
                format!("({p})")
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl From<MPoly> for RatFrac {
    fn from(p: MPoly) -> RatFrac {
        RatFrac::from_poly(p)
    }
}

impl From<Var> for RatFrac {
    fn from(v: Var) -> RatFrac {
        RatFrac::var(v)
    }
}

impl From<i64> for RatFrac {
    fn from(n: i64) -> RatFrac {
        RatFrac::int(n)
    }
}

// ---------------------------------------------------------------------------
// field operations

impl<'a> Add<&'a RatFrac> for &'a RatFrac {
    type Output = RatFrac;
    fn add(self, rhs: &RatFrac) -> RatFrac {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFrac::normalized(&self.num + &rhs.num, self.den.clone());
        }
        if rhs.den.is_one() {
            return RatFrac::normalized(&self.num + &(&rhs.num * &self.den), self.den.clone());
        }
        if self.den.is_one() {
            return RatFrac::normalized(&(&self.num * &rhs.den) + &rhs.num, rhs.den.clone());
        }
        // one denominator a multiple of the other (only tried on small inputs)
        if self.den.num_terms() <= 48 && rhs.den.num_terms() <= 48 {
            if self.den.num_terms() >= rhs.den.num_terms() {
                if let Some(q) = self.den.exact_div(&rhs.den) {
                    return RatFrac::normalized(&self.num + &(&rhs.num * &q), self.den.clone());
                }
            } else if let Some(q) = rhs.den.exact_div(&self.den) {
                return RatFrac::normalized(&(&self.num * &q) + &rhs.num, rhs.den.clone());
            }
        }
        RatFrac::normalized(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl<'a> Sub<&'a RatFrac> for &'a RatFrac {
    type Output = RatFrac;
    fn sub(self, rhs: &RatFrac) -> RatFrac {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatFrac> for &'a RatFrac {
    type Output = RatFrac;
    fn mul(self, rhs: &RatFrac) -> RatFrac {
        if self.is_zero() || rhs.is_zero() {
            return RatFrac::zero();
        }
        // cheap structural cancellations
        if self.num == rhs.den {
            return RatFrac::normalized(rhs.num.clone(), self.den.clone());
        }
        if self.den == rhs.num {
            return RatFrac::normalized(self.num.clone(), rhs.den.clone());
        }
        RatFrac::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<'a> Div<&'a RatFrac> for &'a RatFrac {
    type Output = RatFrac;
    fn div(self, rhs: &RatFrac) -> RatFrac {
        self.checked_div(rhs).expect("division by zero RatFrac")
    }
}

impl Neg for &RatFrac {
    type Output = RatFrac;
    fn neg(self) -> RatFrac {
        RatFrac { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RatFrac {
    type Output = RatFrac;
    fn neg(self) -> RatFrac {
        RatFrac { num: -self.num, den: self.den }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<RatFrac> for RatFrac {
            type Output = RatFrac;
            fn $f(self, rhs: RatFrac) -> RatFrac {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a RatFrac> for RatFrac {
            type Output = RatFrac;
            fn $f(self, rhs: &RatFrac) -> RatFrac {
                (&self).$f(rhs)
            }
        }
        impl<'a> $tr<RatFrac> for &'a RatFrac {
            type Output = RatFrac;
            fn $f(self, rhs: RatFrac) -> RatFrac {
                self.$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl std::iter::Sum for RatFrac {
    fn sum<I: Iterator<Item = RatFrac>>(iter: I) -> RatFrac {
        iter.fold(RatFrac::zero(), |a, b| &a + &b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn v(x: Var) -> RatFrac {
        RatFrac::var(x)
    }

    #[test]
    fn frac_equal_examples() {
        let m_over_n = &v(Var::M) / &v(Var::N);
        assert!(frac_equal(&m_over_n, &m_over_n));
        let nm1 = &v(Var::N) - &RatFrac::one();
        let other = RatFrac::new(
            v(Var::M).num() * &(v(Var::N).num() - &MPoly::one()),
            v(Var::N).num() * &(v(Var::N).num() - &MPoly::one()),
        )
        .unwrap();
        assert!(frac_equal(&m_over_n, &other));
        let _ = nm1;
        assert!(!frac_equal(&m_over_n, &(&v(Var::N) / &v(Var::M))));
    }

    #[test]
    fn substitute_examples() {
        let m_over_n = &v(Var::M) / &v(Var::N);
        let mut bind = Bindings::new();
        bind.insert(Var::M, &v(Var::N) / &(&RatFrac::one() - &v(Var::T)));
        let got = m_over_n.substitute(&bind).unwrap();
        assert_eq!(got, RatFrac::one() / (&RatFrac::one() - &v(Var::T)));

        let bt = &v(Var::B) * &v(Var::T);
        let mut bind = Bindings::new();
        bind.insert(Var::B, RatFrac::one());
        assert_eq!(bt.substitute(&bind).unwrap(), v(Var::T));

        let f = RatFrac::one() / (&(&v(Var::N) + &v(Var::B)) + &RatFrac::one());
        let mut bind = Bindings::new();
        bind.insert(Var::B, &(-&v(Var::N)) - &RatFrac::one());
        assert_eq!(f.substitute(&bind), Err(ExactError::DenominatorVanishes));

        assert_eq!(f.substitute(&Bindings::new()).unwrap(), f);
    }

    #[test]
    fn denominator_sign_and_content_normalized() {
        let f = RatFrac::new(MPoly::var(Var::B), MPoly::var(Var::N).scale(&rat(-6))).unwrap();
        assert!(f.den().leading_term().unwrap().1 > &Rational::zero());
        assert_eq!(f.den().content(), Rational::one());
    }
}
