use super::{rat, ExactError, MPoly, Monomial, Rational, Var};
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Dense univariate polynomial over the rationals, lowest degree first.
/// The variable is contextual (`b` for scalars of the Jucys-Murphy layer, `t`
/// for root analysis).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> UniPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(cs: &[i64]) -> UniPoly {
        UniPoly::new(cs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero() -> UniPoly {
        UniPoly { coeffs: vec![] }
    }

    pub fn one() -> UniPoly {
        UniPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> UniPoly {
        UniPoly::new(vec![c])
    }

    /// The variable itself.
    pub fn x() -> UniPoly {
        UniPoly::from_ints(&[0, 1])
    }

    /// `a*x + c`.
    pub fn linear(a: i64, c: i64) -> UniPoly {
        UniPoly::from_ints(&[c, a])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree; 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn lead(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&(Rational::one() / self.lead()))
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> UniPoly {
        let mut out = UniPoly::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Euclidean division.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let mut rem = self.coeffs.clone();
        let dl = d.lead();
        let dd = d.degree();
        if self.degree() < dd || self.is_zero() {
            return (UniPoly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); self.degree() - dd + 1];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] / &dl;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[i + j] -= &c * dc;
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    pub fn exact_div(&self, d: &UniPoly) -> Option<UniPoly> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(a: &UniPoly, b: &UniPoly) -> UniPoly {
        let mut x = a.clone();
        let mut y = b.clone();
        while !y.is_zero() {
            let r = x.div_rem(&y).1;
            x = y;
            y = r.monic();
        }
        x.monic()
    }

    /// Yun's square-free factorization: `self = c * prod_i f_i^i`, returned
    /// as `(c, [f_1, f_2, ...])` with monic `f_i` (possibly constant 1).
    pub fn square_free(&self) -> (Rational, Vec<UniPoly>) {
        assert!(!self.is_zero());
        let c = self.lead();
        let f = self.monic();
        if f.degree() == 0 {
            return (c, vec![]);
        }
        let mut out = Vec::new();
        let df = f.derivative();
        let a = UniPoly::gcd(&f, &df);
        let mut bq = f.exact_div(&a).unwrap();
        let mut cq = df.exact_div(&a).unwrap();
        let mut dq = &cq - &bq.derivative();
        loop {
            let g = UniPoly::gcd(&bq, &dq);
            out.push(g.clone());
            bq = bq.exact_div(&g).unwrap();
            if bq.degree() == 0 {
                break;
            }
            cq = dq.exact_div(&g).unwrap();
            dq = &cq - &bq.derivative();
        }
        while out.last().is_some_and(|p| p.degree() == 0) {
            out.pop();
        }
        (c, out)
    }

    pub fn square_free_part(&self) -> UniPoly {
        let g = UniPoly::gcd(self, &self.derivative());
        self.exact_div(&g).unwrap().monic()
    }

    /// Embed into the multivariate ring in variable `v`.
    pub fn to_mpoly(&self, v: Var) -> MPoly {
        MPoly::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::var(v, i as u16), c.clone())),
        )
    }

    /// Inverse of `to_mpoly`; `None` if another variable occurs.
    pub fn from_mpoly(p: &MPoly, v: Var) -> Option<UniPoly> {
        let mut coeffs = vec![Rational::zero(); p.degree(v) as usize + 1];
        for (m, c) in p.terms() {
            if m.with(v, 0) != Monomial::ONE {
                return None;
            }
            coeffs[m.exp(v) as usize] = c.clone();
        }
        Some(UniPoly::new(coeffs))
    }

    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if mono.is_empty() {
                s.push_str(&a.to_string());
            } else if a.is_one() {
                s.push_str(&mono);
            } else {
                s.push_str(&format!("{a}*{mono}"));
            }
        }
        s
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

impl<'a> Add<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, c) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * c;
            }
        }
        UniPoly::new(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

// ---------------------------------------------------------------------------
// BFrac

/// Element of the univariate fraction field `Q(b)`, kept in lowest terms
/// with a monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BFrac {
    num: UniPoly,
    den: UniPoly,
}

impl BFrac {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<BFrac, ExactError> {
        if den.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(BFrac::reduce(num, den))
    }

    fn reduce(num: UniPoly, den: UniPoly) -> BFrac {
        if num.is_zero() {
            return BFrac::zero();
        }
        if den.degree() == 0 {
            let l = den.lead();
            return BFrac { num: num.scale(&(Rational::one() / l)), den: UniPoly::one() };
        }
        let g = UniPoly::gcd(&num, &den);
        let (num, den) = if g.degree() > 0 {
            (num.exact_div(&g).unwrap(), den.exact_div(&g).unwrap())
        } else {
            (num, den)
        };
        let l = Rational::one() / den.lead();
        BFrac { num: num.scale(&l), den: den.scale(&l) }
    }

    pub fn zero() -> BFrac {
        BFrac { num: UniPoly::zero(), den: UniPoly::one() }
    }

    pub fn one() -> BFrac {
        BFrac::from_poly(UniPoly::one())
    }

    pub fn int(n: i64) -> BFrac {
        BFrac::from_poly(UniPoly::from_ints(&[n]))
    }

    pub fn constant(c: Rational) -> BFrac {
        BFrac::from_poly(UniPoly::constant(c))
    }

    /// The parameter `b`.
    pub fn b() -> BFrac {
        BFrac::from_poly(UniPoly::x())
    }

    pub fn from_poly(p: UniPoly) -> BFrac {
        BFrac { num: p, den: UniPoly::one() }
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    pub fn is_poly(&self) -> bool {
        self.den.degree() == 0
    }

    /// Degree measure used for pivot choice: `deg num + deg den`.
    pub fn weight(&self) -> usize {
        self.num.degree() + self.den.degree()
    }

    pub fn recip(&self) -> Result<BFrac, ExactError> {
        BFrac::new(self.den.clone(), self.num.clone())
    }

    pub fn scale(&self, c: &Rational) -> BFrac {
        BFrac { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn pow(&self, e: u32) -> BFrac {
        BFrac { num: self.num.pow(e), den: self.den.pow(e) }
    }

    /// Evaluate at `b = x`.
    pub fn eval(&self, x: &Rational) -> Result<Rational, ExactError> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(ExactError::DenominatorVanishes);
        }
        Ok(self.num.eval(x) / d)
    }

    /// Embed into the multivariate fraction field in `b`.
    pub fn to_ratfrac(&self) -> super::RatFrac {
        super::RatFrac::new(self.num.to_mpoly(Var::B), self.den.to_mpoly(Var::B)).unwrap()
    }

    pub fn from_mpoly(p: &MPoly) -> Option<BFrac> {
        Some(BFrac::from_poly(UniPoly::from_mpoly(p, Var::B)?))
    }

    pub fn from_ratfrac(f: &super::RatFrac) -> Option<BFrac> {
        BFrac::new(UniPoly::from_mpoly(f.num(), Var::B)?, UniPoly::from_mpoly(f.den(), Var::B)?).ok()
    }
}

impl fmt::Display for BFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.num.display_in("b");
        if self.den.degree() == 0 {
            return f.write_str(&n);
        }
        let d = self.den.display_in("b");
        let wrap = |s: String, p: &UniPoly| {
            if p.coeffs.iter().filter(|c| !c.is_zero()).count() > 1 {
                format!("({s})")
            } else {
                s
            }
        };
        write!(f, "{}/{}", wrap(n, &self.num), wrap(d, &self.den))
    }
}

impl fmt::Debug for BFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<'a> Add<&'a BFrac> for &'a BFrac {
    type Output = BFrac;
    fn add(self, rhs: &BFrac) -> BFrac {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            if self.den.degree() == 0 {
                return BFrac { num: &self.num + &rhs.num, den: UniPoly::one() };
            }
            return BFrac::reduce(&self.num + &rhs.num, self.den.clone());
        }
        let g = UniPoly::gcd(&self.den, &rhs.den);
        let l = self.den.exact_div(&g).unwrap();
        let r = rhs.den.exact_div(&g).unwrap();
        BFrac::reduce(&(&self.num * &r) + &(&rhs.num * &l), &(&l * &r) * &g)
    }
}

impl<'a> Sub<&'a BFrac> for &'a BFrac {
    type Output = BFrac;
    fn sub(self, rhs: &BFrac) -> BFrac {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a BFrac> for &'a BFrac {
    type Output = BFrac;
    fn mul(self, rhs: &BFrac) -> BFrac {
        if self.is_zero() || rhs.is_zero() {
            return BFrac::zero();
        }
        if self.is_poly() && rhs.is_poly() {
            return BFrac { num: &self.num * &rhs.num, den: UniPoly::one() };
        }
        BFrac::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<'a> Div<&'a BFrac> for &'a BFrac {
    type Output = BFrac;
    fn div(self, rhs: &BFrac) -> BFrac {
        self * &rhs.recip().expect("division by zero in Q(b)")
    }
}

impl Neg for &BFrac {
    type Output = BFrac;
    fn neg(self) -> BFrac {
        BFrac { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! forward_owned {
    ($t:ident, $tr:ident, $f:ident) => {
        impl $tr<$t> for $t {
            type Output = $t;
            fn $f(self, rhs: $t) -> $t {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a $t> for $t {
            type Output = $t;
            fn $f(self, rhs: &$t) -> $t {
                (&self).$f(rhs)
            }
        }
        impl<'a> $tr<$t> for &'a $t {
            type Output = $t;
            fn $f(self, rhs: $t) -> $t {
                self.$f(&rhs)
            }
        }
    };
}
forward_owned!(UniPoly, Add, add);
forward_owned!(UniPoly, Sub, sub);
forward_owned!(UniPoly, Mul, mul);
forward_owned!(BFrac, Add, add);
forward_owned!(BFrac, Sub, sub);
forward_owned!(BFrac, Mul, mul);
forward_owned!(BFrac, Div, div);

impl Neg for BFrac {
    type Output = BFrac;
    fn neg(self) -> BFrac {
        -&self
    }
}

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

impl std::iter::Sum for BFrac {
    fn sum<I: Iterator<Item = BFrac>>(iter: I) -> BFrac {
        iter.fold(BFrac::zero(), |a, b| &a + &b)
    }
}

impl From<i64> for BFrac {
    fn from(n: i64) -> BFrac {
        BFrac::int(n)
    }
}

impl From<UniPoly> for BFrac {
    fn from(p: UniPoly) -> BFrac {
        BFrac::from_poly(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_of_shared_factor() {
        let a = &UniPoly::linear(1, -1) * &UniPoly::linear(1, 2);
        let b = &UniPoly::linear(1, -1) * &UniPoly::linear(1, 5);
        assert_eq!(UniPoly::gcd(&a, &b), UniPoly::linear(1, -1));
    }

    #[test]
    fn yun_recovers_multiplicities() {
        let x = UniPoly::x();
        let xm1 = UniPoly::linear(1, -1);
        let f = &(&x * &xm1.pow(2)) * &UniPoly::linear(1, 3).pow(3);
        let (c, parts) = f.square_free();
        assert_eq!(c, rat(1));
        assert_eq!(parts, vec![x, xm1, UniPoly::linear(1, 3)]);
    }

    #[test]
    fn bfrac_reduces() {
        let b = BFrac::b();
        let one = BFrac::one();
        let f = &(&b * &b - &one) / &(&b + &one);
        assert_eq!(f, &b - &one);
        assert!(f.is_poly());
    }
}
