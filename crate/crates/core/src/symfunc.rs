//! Symmetric functions in the power-sum basis with coefficients in `Q(b)`,
//! monomial/power-sum change of basis, the b-inner product, the
//! Laplace-Beltrami operator `D(b)` and Jack functions `J_λ^(b)`.
//!
//! Jack functions are built by Gram-Schmidt on the monomial basis, taken in
//! increasing lexicographic order (a linear extension of dominance), and
//! scaled so that the coefficient of `m_λ` is `hook_b(λ)`. Dominance support
//! and the eigenvalue equation for `D(b)` are checked afterwards.

use crate::exactnum::{rat, BFrac, FracRecord, RatFrac, Rational, UniPoly};
use crate::memo::Memo;
use crate::partitions::{all_partitions, dominates, hook_products_uni, Partition};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock};

/// Largest `|λ|` for which `jack` computes without an explicit bound.
pub const JACK_DEGREE_BOUND: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymFuncError {
    #[error("degree {degree} exceeds the configured bound {bound}")]
    DegreeBoundExceeded { degree: usize, bound: usize },
    #[error("{values} values supplied for {k} variables")]
    ArityMismatch { values: usize, k: usize },
    #[error("Jack function {0} failed its a-posteriori check: {1}")]
    JackCheckFailed(Partition, String),
}

/// Finite combination of `p_μ = p_{μ_1} p_{μ_2} ...`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SymFunc {
    terms: BTreeMap<Partition, BFrac>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymTermRecord {
    pub partition: Partition,
    pub coefficient: FracRecord,
}

impl SymFunc {
    pub fn zero() -> SymFunc {
        SymFunc::default()
    }

    pub fn one() -> SymFunc {
        SymFunc::p(Partition::empty())
    }

    /// The power-sum monomial `p_μ`.
    pub fn p(mu: Partition) -> SymFunc {
        SymFunc::term(mu, BFrac::one())
    }

    pub fn term(mu: Partition, c: BFrac) -> SymFunc {
        let mut f = SymFunc::zero();
        f.add_term(mu, c);
        f
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, BFrac)>>(it: I) -> SymFunc {
        let mut f = SymFunc::zero();
        for (mu, c) in it {
            f.add_term(mu, c);
        }
        f
    }

    pub fn add_term(&mut self, mu: Partition, c: BFrac) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mu) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = &*e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BFrac)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mu: &Partition) -> BFrac {
        self.terms.get(mu).cloned().unwrap_or_else(BFrac::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Largest `|μ|` in the support.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.size()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut sizes = self.terms.keys().map(|m| m.size());
        match sizes.next() {
            None => true,
            Some(d) => sizes.all(|s| s == d),
        }
    }

    pub fn scale(&self, c: &BFrac) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero();
        }
        SymFunc {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn scale_rat(&self, c: &Rational) -> SymFunc {
        self.scale(&BFrac::constant(c.clone()))
    }

    /// Coefficients at a rational value of `b`.
    pub fn specialize_b(&self, b: &Rational) -> BTreeMap<Partition, Rational> {
        self.terms
            .iter()
            .map(|(m, c)| (m.clone(), c.eval(b).expect("coefficient pole at the chosen b")))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    /// Coefficients as multivariate fractions in `b`.
    pub fn to_ratfrac_terms(&self) -> BTreeMap<Partition, RatFrac> {
        self.terms.iter().map(|(m, c)| (m.clone(), c.to_ratfrac())).collect()
    }

    pub fn to_records(&self) -> Vec<SymTermRecord> {
        self.terms
            .iter()
            .map(|(m, c)| SymTermRecord { partition: m.clone(), coefficient: FracRecord::from_frac(&c.to_ratfrac()) })
            .collect()
    }

    pub fn from_records(records: &[SymTermRecord]) -> Option<SymFunc> {
        let mut f = SymFunc::zero();
        for r in records {
            let c = BFrac::from_ratfrac(&r.coefficient.to_frac().ok()?)?;
            f.add_term(r.partition.clone(), c);
        }
        Some(f)
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (mu, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let p = p_monomial_string(mu);
            if p.is_empty() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                f.write_str(&p)?;
            } else {
                write!(f, "({c})*{p}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn p_monomial_string(mu: &Partition) -> String {
    let mult = mu.multiplicities();
    let mut out = Vec::new();
    for i in (1..mult.len()).rev() {
        match mult[i] {
            0 => {}
            1 => out.push(format!("p_{i}")),
            m => out.push(format!("p_{i}^{m}")),
        }
    }
    out.join("*")
}

impl<'a> Add<&'a SymFunc> for &'a SymFunc {
    type Output = SymFunc;
    fn add(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a SymFunc> for &'a SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        SymFunc {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl<'a> Mul<&'a SymFunc> for &'a SymFunc {
    type Output = SymFunc;
    fn mul(self, rhs: &SymFunc) -> SymFunc {
        let mut out = SymFunc::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let mut parts = m1.parts().to_vec();
                parts.extend_from_slice(m2.parts());
                out.add_term(Partition::from_composition(&parts).unwrap(), c1 * c2);
            }
        }
        out
    }
}

// ---------------------------------------------------------------------------
// change of basis

/// Power sums of degree `n` expressed in monomial symmetric functions,
/// together with the inverse matrix.
struct BasisChange {
    parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// `p_λ = Σ_μ l[λ][μ] m_μ`
    l: Vec<Vec<Rational>>,
    /// `m_μ = Σ_λ inv[μ][λ] p_λ`
    inv: Vec<Vec<Rational>>,
}

/// Number of ways to distribute the parts of `lambda` into labelled bins of
/// sizes `mu` so that every bin is filled exactly.
fn fill_count(lambda: &[usize], mu: &[usize]) -> u64 {
    fn rec(lambda: &[usize], room: &mut [usize]) -> u64 {
        let Some((&first, rest)) = lambda.split_first() else {
            return room.iter().all(|&r| r == 0) as u64;
        };
        let mut total = 0;
        for j in 0..room.len() {
            if room[j] >= first {
                room[j] -= first;
                total += rec(rest, room);
                room[j] += first;
            }
        }
        total
    }
    rec(lambda, &mut mu.to_vec())
}

fn basis_change(n: usize) -> Arc<BasisChange> {
    static MEMO: OnceLock<Memo<usize, Arc<BasisChange>>> = OnceLock::new();
    MEMO.get_or_init(Memo::new).get_or_compute(&n, || {
        let parts = all_partitions(n);
        let d = parts.len();
        let index = parts.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let l: Vec<Vec<Rational>> = parts
            .iter()
            .map(|lam| parts.iter().map(|mu| rat(fill_count(lam.parts(), mu.parts()) as i64)).collect())
            .collect();
        // `l` is lower triangular in reverse-lexicographic order.
        let mut inv = vec![vec![Rational::zero(); d]; d];
        for i in 0..d {
            inv[i][i] = Rational::one() / &l[i][i];
            for j in 0..i {
                let mut s = Rational::zero();
                for k in j..i {
                    if !l[i][k].is_zero() && !inv[k][j].is_zero() {
                        s += &l[i][k] * &inv[k][j];
                    }
                }
                inv[i][j] = -s / &l[i][i];
            }
        }
        Arc::new(BasisChange { parts, index, l, inv })
    })
}

/// `m_μ` in the power-sum basis.
pub fn monomial_in_powersum(mu: &Partition) -> SymFunc {
    let bc = basis_change(mu.size());
    let i = bc.index[mu];
    SymFunc::from_terms(
        bc.parts
            .iter()
            .enumerate()
            .filter(|(j, _)| !bc.inv[i][*j].is_zero())
            .map(|(j, lam)| (lam.clone(), BFrac::constant(bc.inv[i][j].clone()))),
    )
}

/// `p_λ` in the monomial basis, as integer coefficients.
pub fn powersum_in_monomial(lambda: &Partition) -> BTreeMap<Partition, Rational> {
    let bc = basis_change(lambda.size());
    let i = bc.index[lambda];
    bc.parts
        .iter()
        .enumerate()
        .filter(|(j, _)| !bc.l[i][*j].is_zero())
        .map(|(j, mu)| (mu.clone(), bc.l[i][j].clone()))
        .collect()
}

/// Coefficients of `f` in the monomial basis.
pub fn to_monomial_basis(f: &SymFunc) -> BTreeMap<Partition, BFrac> {
    let mut out: BTreeMap<Partition, BFrac> = BTreeMap::new();
    for (lam, c) in f.terms() {
        for (mu, k) in powersum_in_monomial(lam) {
            let add = c.scale(&k);
            let e = out.entry(mu).or_insert_with(BFrac::zero);
            *e = &*e + &add;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Elementary symmetric function `e_r`.
pub fn elementary(r: usize) -> SymFunc {
    SymFunc::from_terms(all_partitions(r).into_iter().map(|mu| {
        let sign = if (r - mu.len()) % 2 == 0 { 1 } else { -1 };
        let z = crate::partitions::z_lambda(&mu);
        (mu, BFrac::constant(Rational::new(sign.into(), z.into())))
    }))
}

/// Complete homogeneous symmetric function `h_r`.
pub fn complete(r: usize) -> SymFunc {
    SymFunc::from_terms(all_partitions(r).into_iter().map(|mu| {
        let z = crate::partitions::z_lambda(&mu);
        (mu, BFrac::constant(Rational::new(1.into(), z.into())))
    }))
}

// ---------------------------------------------------------------------------
// inner product and D(b)

/// `<p_λ, p_λ>_b = (b+1)^ℓ(λ) z_λ`.
pub fn powersum_norm(lambda: &Partition) -> BFrac {
    let z = crate::partitions::z_lambda(lambda);
    BFrac::from_poly(UniPoly::from_ints(&[1, 1]).pow(lambda.len() as u32)).scale(&Rational::from_integer(z.into()))
}

pub fn inner_product_b(f: &SymFunc, g: &SymFunc) -> BFrac {
    let (small, big) = if f.num_terms() <= g.num_terms() { (f, g) } else { (g, f) };
    let mut acc = BFrac::zero();
    for (mu, c) in small.terms() {
        if let Some(d) = big.terms.get(mu) {
            acc = &acc + &(&(c * d) * &powersum_norm(mu));
        }
    }
    acc
}

/// The Laplace-Beltrami operator
///
///   D(b) = 1/2 [ (b+1) Σ ij p_{i+j} ∂_i ∂_j + Σ (i+j) p_i p_j ∂_{i+j}
///                + b Σ i(i-1) p_i ∂_i ].
pub fn laplace_beltrami(f: &SymFunc) -> SymFunc {
    let bp1 = BFrac::from_poly(UniPoly::from_ints(&[1, 1]));
    let b = BFrac::b();
    let mut out = SymFunc::zero();
    for (mu, c) in f.terms() {
        let parts = mu.parts();
        // join two parts
        for a in 0..parts.len() {
            for d in a + 1..parts.len() {
                let mut rest: Vec<usize> =
                    parts.iter().enumerate().filter(|(i, _)| *i != a && *i != d).map(|(_, &x)| x).collect();
                rest.push(parts[a] + parts[d]);
                let w = rat((parts[a] * parts[d]) as i64);
                out.add_term(Partition::from_composition(&rest).unwrap(), (c * &bp1).scale(&w));
            }
        }
        // cut one part
        for a in 0..parts.len() {
            let s = parts[a];
            let rest: Vec<usize> = parts.iter().enumerate().filter(|(i, _)| *i != a).map(|(_, &x)| x).collect();
            for i in 1..s {
                let mut v = rest.clone();
                v.push(i);
                v.push(s - i);
                out.add_term(Partition::from_composition(&v).unwrap(), c.scale(&Rational::new(s.into(), 2.into())));
            }
        }
        // diagonal
        let diag: usize = parts.iter().map(|&s| s * (s - 1)).sum();
        if diag > 0 {
            out.add_term(mu.clone(), (c * &b).scale(&Rational::new(diag.into(), 2.into())));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Jack functions

type JackTable = Result<Arc<BTreeMap<Partition, SymFunc>>, SymFuncError>;

fn jack_table(n: usize) -> JackTable {
    static MEMO: OnceLock<Memo<usize, JackTable>> = OnceLock::new();
    MEMO.get_or_init(Memo::new).get_or_compute(&n, || compute_jacks(n))
}

fn compute_jacks(n: usize) -> JackTable {
    let mut order = all_partitions(n);
    order.reverse();
    let mut done: Vec<(Partition, SymFunc, BFrac)> = Vec::with_capacity(order.len());
    for lam in &order {
        let m = monomial_in_powersum(lam);
        let mut v = m.clone();
        for (_, j, norm) in &done {
            let coef = &inner_product_b(&m, j) / norm;
            if !coef.is_zero() {
                v = &v - &j.scale(&coef);
            }
        }
        let (h, _) = hook_products_uni(lam);
        let jl = v.scale(&BFrac::from_poly(h));
        let norm = inner_product_b(&jl, &jl);
        done.push((lam.clone(), jl, norm));
    }
    let table: BTreeMap<Partition, SymFunc> = done.into_iter().map(|(l, j, _)| (l, j)).collect();
    for (lam, j) in &table {
        check_jack(lam, j)?;
    }
    Ok(Arc::new(table))
}

/// Leading coefficient, dominance support and the eigenvalue equation.
fn check_jack(lam: &Partition, j: &SymFunc) -> Result<(), SymFuncError> {
    let fail = |why: String| Err(SymFuncError::JackCheckFailed(lam.clone(), why));
    let mono = to_monomial_basis(j);
    let (h, _) = hook_products_uni(lam);
    if mono.get(lam) != Some(&BFrac::from_poly(h)) {
        return fail("leading coefficient is not hook_b".into());
    }
    if let Some(mu) = mono.keys().find(|mu| !dominates(lam, mu)) {
        return fail(format!("support on {mu}, not dominated"));
    }
    let eig = BFrac::from_poly(crate::partitions::content_sum_closed_form(lam));
    if laplace_beltrami(j) != j.scale(&eig) {
        return fail("not an eigenvector of D(b)".into());
    }
    Ok(())
}

/// `J_λ^(b)` in the power-sum basis, for `|λ| <= JACK_DEGREE_BOUND`.
pub fn jack(lambda: &Partition) -> Result<SymFunc, SymFuncError> {
    jack_with_bound(lambda, JACK_DEGREE_BOUND)
}

pub fn jack_with_bound(lambda: &Partition, bound: usize) -> Result<SymFunc, SymFuncError> {
    let n = lambda.size();
    if n > bound {
        return Err(SymFuncError::DegreeBoundExceeded { degree: n, bound });
    }
    Ok(jack_table(n)?[lambda].clone())
}

/// All Jack functions of degree `n`.
pub fn jacks_of_degree(n: usize, bound: usize) -> Result<Arc<BTreeMap<Partition, SymFunc>>, SymFuncError> {
    if n > bound {
        return Err(SymFuncError::DegreeBoundExceeded { degree: n, bound });
    }
    jack_table(n)
}

// ---------------------------------------------------------------------------
// evaluation

/// Evaluate `f` at the `k` values given (symmetric polynomials in `k`
/// variables).
pub fn eval_at_multiset(f: &SymFunc, values: &[UniPoly], k: usize) -> Result<BFrac, SymFuncError> {
    if values.len() != k {
        return Err(SymFuncError::ArityMismatch { values: values.len(), k });
    }
    let max_part = f.terms().flat_map(|(m, _)| m.parts().first().copied()).max().unwrap_or(0);
    let mut power_sums = vec![UniPoly::from_ints(&[k as i64])];
    let mut powers: Vec<UniPoly> = values.to_vec();
    for _ in 1..=max_part {
        power_sums.push(powers.iter().fold(UniPoly::zero(), |a, v| &a + v));
        powers = powers.iter().zip(values).map(|(p, v)| p * v).collect();
    }
    let mut acc = BFrac::zero();
    for (mu, c) in f.terms() {
        let prod = mu.parts().iter().fold(UniPoly::one(), |a, &i| &a * &power_sums[i]);
        acc = &acc + &(c * &BFrac::from_poly(prod));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::contents_multiset_uni;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }
    fn bp(cs: &[i64]) -> BFrac {
        BFrac::from_poly(UniPoly::from_ints(cs))
    }

    #[test]
    fn monomial_examples() {
        assert_eq!(monomial_in_powersum(&part("1")), SymFunc::p(part("1")));
        assert_eq!(monomial_in_powersum(&part("2")), SymFunc::p(part("2")));
        let half = BFrac::constant(Rational::new(1.into(), 2.into()));
        let expect = SymFunc::from_terms([(part("1,1"), half.clone()), (part("2"), -&half)]);
        assert_eq!(monomial_in_powersum(&part("1,1")), expect);
    }

    #[test]
    fn inner_product_examples() {
        let p2 = SymFunc::p(part("2"));
        assert_eq!(inner_product_b(&p2, &p2), bp(&[2, 2]));
        assert!(inner_product_b(&p2, &SymFunc::p(part("1,1"))).is_zero());
        let j2 = jack(&part("2")).unwrap();
        let (h, hp) = hook_products_uni(&part("2"));
        assert_eq!(inner_product_b(&j2, &j2), BFrac::from_poly(&h * &hp));
    }

    #[test]
    fn jack_examples() {
        assert_eq!(jack(&Partition::empty()).unwrap(), SymFunc::one());
        assert_eq!(jack(&part("1")).unwrap(), SymFunc::p(part("1")));
        let j11 = SymFunc::from_terms([(part("2"), BFrac::int(-1)), (part("1,1"), BFrac::one())]);
        assert_eq!(jack(&part("1,1")).unwrap(), j11);
        let j21 = SymFunc::from_terms([
            (part("3"), bp(&[-1, -1])),
            (part("2,1"), bp(&[0, 1])),
            (part("1,1,1"), BFrac::one()),
        ]);
        assert_eq!(jack(&part("2,1")).unwrap(), j21);
    }

    #[test]
    fn laplace_beltrami_examples() {
        assert!(laplace_beltrami(&SymFunc::p(part("1"))).is_zero());
        let j2 = jack(&part("2")).unwrap();
        assert_eq!(laplace_beltrami(&j2), j2.scale(&bp(&[1, 1])));
        let j11 = jack(&part("1,1")).unwrap();
        assert_eq!(laplace_beltrami(&j11), j11.scale(&BFrac::int(-1)));
    }

    #[test]
    fn evaluation_examples() {
        let e1 = elementary(1);
        assert_eq!(eval_at_multiset(&e1, &contents_multiset_uni(&part("2")), 2).unwrap(), bp(&[1, 1]));
        let h1 = complete(1);
        assert_eq!(eval_at_multiset(&h1, &contents_multiset_uni(&part("1,1")), 2).unwrap(), BFrac::int(-1));
        let m11 = monomial_in_powersum(&part("1,1"));
        assert_eq!(eval_at_multiset(&m11, &contents_multiset_uni(&part("3")), 3).unwrap(), bp(&[2, 4, 2]));
        assert_eq!(
            eval_at_multiset(&m11, &contents_multiset_uni(&part("3")), 2),
            Err(SymFuncError::ArityMismatch { values: 3, k: 2 })
        );
    }

    #[test]
    fn degree_bound_enforced() {
        assert!(matches!(jack_with_bound(&part("3,1"), 3), Err(SymFuncError::DegreeBoundExceeded { .. })));
    }
}
