//! Exact real-root analysis of polynomials in `t` and the root-conjecture
//! sweeps over bt-monotone Hurwitz numbers.
//!
//! Everything is done over the rationals: Sturm sequences count roots,
//! bisection isolates them, and square-free factorization supplies
//! multiplicities. No floating point is involved.

use crate::exactnum::{Rational, UniPoly, Var};
use crate::hurwitz::{hurwitz_h, Genus};
use crate::partitions::{all_partitions, Partition};
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;
use std::cmp::Ordering;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AnalysisError {
    #[error("endpoint {0} is a root")]
    EndpointIsRoot(String),
    #[error("empty interval ({lo}, {hi}]")]
    EmptyInterval { lo: String, hi: String },
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("b = {0} is excluded from sweeps")]
    ExcludedB(String),
}

/// `p` divided by its positive rational content, so coefficients are
/// coprime integers with unchanged signs.
fn primitive(p: &UniPoly) -> UniPoly {
    use num_integer::Integer;
    let cs = p.coeffs();
    let num = cs.iter().fold(num_bigint::BigInt::zero(), |a, c| a.gcd(c.numer()));
    let den = cs.iter().fold(num_bigint::BigInt::one(), |a, c| a.lcm(c.denom()));
    if num.is_zero() {
        return p.clone();
    }
    p.scale(&Rational::new(den, num))
}

/// The Sturm chain `p, p', -rem(p, p'), ...`, each member rescaled by a
/// positive constant.
pub fn sturm_chain(p: &UniPoly) -> Vec<UniPoly> {
    let mut chain = vec![primitive(p)];
    if p.degree() == 0 {
        return chain;
    }
    chain.push(primitive(&p.derivative()));
    loop {
        let n = chain.len();
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(primitive(&-r));
    }
    chain
}

/// A polynomial with its Sturm chain, for repeated root counts.
struct Sturm {
    poly: UniPoly,
    chain: Vec<UniPoly>,
}

impl Sturm {
    fn new(poly: UniPoly) -> Sturm {
        let chain = sturm_chain(&poly);
        Sturm { poly, chain }
    }

    /// Distinct roots in `(lo, hi]`; endpoints must not be roots.
    fn count(&self, lo: &Rational, hi: &Rational) -> usize {
        variations(&self.chain, lo) - variations(&self.chain, hi)
    }
}

fn variations(chain: &[UniPoly], x: &Rational) -> usize {
    let signs: Vec<bool> = chain.iter().map(|q| q.eval(x)).filter(|v| !v.is_zero()).map(|v| v.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots of `p` in `(lo, hi]`.
pub fn sturm_count(p: &UniPoly, lo: &Rational, hi: &Rational) -> Result<usize, AnalysisError> {
    if p.is_zero() {
        return Err(AnalysisError::ZeroPolynomial);
    }
    if lo >= hi {
        return Err(AnalysisError::EmptyInterval { lo: lo.to_string(), hi: hi.to_string() });
    }
    for e in [lo, hi] {
        if p.eval(e).is_zero() {
            return Err(AnalysisError::EndpointIsRoot(e.to_string()));
        }
    }
    Ok(Sturm::new(p.clone()).count(lo, hi))
}

/// `1 + max |c_i / lead|`: every root lies strictly inside `(-B, B)`.
pub fn cauchy_bound(p: &UniPoly) -> Rational {
    let lead = p.lead().abs();
    let cs = p.coeffs();
    let m = cs[..cs.len() - 1].iter().map(|c| c.abs() / &lead).max().unwrap_or_else(Rational::zero);
    m + Rational::one()
}

/// A real root pinned down exactly or by an open interval containing no
/// other root of the polynomial it was isolated from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum RootLocation {
    Exact(#[serde(serialize_with = "ser_rat")] Rational),
    Open(#[serde(serialize_with = "ser_rat")] Rational, #[serde(serialize_with = "ser_rat")] Rational),
}

fn ser_rat<S: serde::Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

impl RootLocation {
    fn bounds(&self) -> (&Rational, &Rational) {
        match self {
            RootLocation::Exact(x) => (x, x),
            RootLocation::Open(a, b) => (a, b),
        }
    }

    fn order(&self, other: &RootLocation) -> Ordering {
        let (a, b) = self.bounds();
        let (c, d) = other.bounds();
        a.cmp(c).then(b.cmp(d))
    }
}

impl fmt::Display for RootLocation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootLocation::Exact(x) => write!(f, "{x}"),
            RootLocation::Open(a, b) => write!(f, "({a}, {b})"),
        }
    }
}

/// Distinct real roots of `p`, sorted, in pairwise disjoint locations.
pub fn isolate_roots(p: &UniPoly) -> Vec<RootLocation> {
    if p.is_zero() || p.degree() == 0 {
        return Vec::new();
    }
    let s = p.square_free_part();
    let bound = cauchy_bound(&s);
    let mut polys = vec![Sturm::new(s)];
    let mut out = Vec::new();
    let mut stack = vec![(0usize, -bound.clone(), bound)];
    while let Some((qi, lo, hi)) = stack.pop() {
        let q = &polys[qi];
        if q.poly.degree() == 0 {
            continue;
        }
        let n = q.count(&lo, &hi);
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push(RootLocation::Open(lo, hi));
            continue;
        }
        let mid = (&lo + &hi) / Rational::from_integer(2.into());
        if q.poly.eval(&mid).is_zero() {
            out.push(RootLocation::Exact(mid.clone()));
            let defl = q.poly.exact_div(&UniPoly::new(vec![-mid.clone(), Rational::one()])).expect("mid is a root");
            polys.push(Sturm::new(defl));
            let di = polys.len() - 1;
            stack.push((di, lo, mid.clone()));
            stack.push((di, mid, hi));
        } else {
            stack.push((qi, lo, mid.clone()));
            stack.push((qi, mid, hi));
        }
    }
    out.sort_by(|a, b| a.order(b));
    out
}

/// Whether `f` vanishes at the root held by `loc`. `f` must divide a
/// polynomial whose only root in `loc` is that root.
fn vanishes_at(f: &Sturm, loc: &RootLocation) -> bool {
    if f.poly.degree() == 0 {
        return false;
    }
    match loc {
        RootLocation::Exact(x) => f.poly.eval(x).is_zero(),
        RootLocation::Open(lo, hi) => {
            if f.poly.eval(lo).is_zero() || f.poly.eval(hi).is_zero() {
                let mut g = f.poly.clone();
                for e in [lo, hi] {
                    let lin = UniPoly::new(vec![-e.clone(), Rational::one()]);
                    while g.degree() > 0 && g.eval(e).is_zero() {
                        g = g.exact_div(&lin).expect("e is a root");
                    }
                }
                return g.degree() > 0 && Sturm::new(g).count(lo, hi) > 0;
            }
            f.count(lo, hi) > 0
        }
    }
}

fn multiplicity(factors: &[Sturm], loc: &RootLocation) -> usize {
    factors.iter().enumerate().filter(|(_, q)| vanishes_at(q, loc)).map(|(i, _)| i + 1).sum()
}

fn square_free_sturm(p: &UniPoly) -> Vec<Sturm> {
    p.square_free().1.into_iter().map(Sturm::new).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsolatedRoot {
    pub location: RootLocation,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootReport {
    pub degree: usize,
    /// Real roots counted with multiplicity.
    pub real_roots: usize,
    pub roots: Vec<IsolatedRoot>,
}

impl RootReport {
    pub fn is_real_rooted(&self) -> bool {
        self.real_roots == self.degree
    }
}

pub fn root_report(p: &UniPoly) -> Result<RootReport, AnalysisError> {
    if p.is_zero() {
        return Err(AnalysisError::ZeroPolynomial);
    }
    let factors = square_free_sturm(p);
    let roots: Vec<IsolatedRoot> = isolate_roots(p)
        .into_iter()
        .map(|location| {
            let multiplicity = multiplicity(&factors, &location);
            IsolatedRoot { location, multiplicity }
        })
        .collect();
    let real_roots = roots.iter().map(|r| r.multiplicity).sum();
    Ok(RootReport { degree: p.degree(), real_roots, roots })
}

/// Whether every root of `p` is real, with the supporting report.
pub fn is_real_rooted(p: &UniPoly) -> Result<(bool, RootReport), AnalysisError> {
    let report = root_report(p)?;
    Ok((report.is_real_rooted(), report))
}

/// Whether `p` interlaces `q`: `deg q = deg p + 1`, both real-rooted, and
/// the roots weakly alternate `b_1 ≤ a_1 ≤ b_2 ≤ ... ≤ a_n ≤ b_{n+1}`
/// (`a` for `p`, `b` for `q`). A nonzero constant interlaces any affine
/// polynomial.
pub fn interlaces(p: &UniPoly, q: &UniPoly) -> Result<bool, AnalysisError> {
    if p.is_zero() || q.is_zero() {
        return Err(AnalysisError::ZeroPolynomial);
    }
    if q.degree() != p.degree() + 1 {
        return Ok(false);
    }
    let fp = square_free_sturm(p);
    let fq = square_free_sturm(q);
    let locs = isolate_roots(&(p * q));
    let mut a = Vec::new();
    let mut b = Vec::new();
    for (idx, loc) in locs.iter().enumerate() {
        a.extend(std::iter::repeat(idx).take(multiplicity(&fp, loc)));
        b.extend(std::iter::repeat(idx).take(multiplicity(&fq, loc)));
    }
    if a.len() != p.degree() || b.len() != q.degree() {
        return Ok(false);
    }
    Ok((0..a.len()).all(|i| b[i] <= a[i] && a[i] <= b[i + 1]))
}

fn sign_at_infinity(p: &UniPoly, negative: bool) -> bool {
    let positive_lead = p.lead().is_positive();
    if negative && p.degree() % 2 == 1 {
        !positive_lead
    } else {
        positive_lead
    }
}

/// Distinct real roots of `p` on the whole line.
pub fn real_root_count(p: &UniPoly) -> usize {
    if p.is_zero() || p.degree() == 0 {
        return 0;
    }
    let chain = sturm_chain(p);
    let var = |neg: bool| {
        let signs: Vec<bool> = chain.iter().map(|q| sign_at_infinity(q, neg)).collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    };
    var(true) - var(false)
}

/// Real-rootedness without isolating roots: every square-free factor has
/// as many distinct real roots as its degree.
pub fn is_real_rooted_fast(p: &UniPoly) -> Result<bool, AnalysisError> {
    if p.is_zero() {
        return Err(AnalysisError::ZeroPolynomial);
    }
    Ok(p.square_free().1.iter().all(|f| real_root_count(f) == f.degree()))
}

/// Interlacing through the Wronskian: for real-rooted `p`, `q` with
/// `deg q = deg p + 1`, the roots weakly alternate exactly when
/// `p' q - p q'` keeps one sign on the real line, i.e. none of its odd
/// multiplicity factors has a real root.
pub fn interlaces_wronskian(p: &UniPoly, q: &UniPoly) -> Result<bool, AnalysisError> {
    if p.is_zero() || q.is_zero() {
        return Err(AnalysisError::ZeroPolynomial);
    }
    if q.degree() != p.degree() + 1 || !is_real_rooted_fast(p)? || !is_real_rooted_fast(q)? {
        return Ok(false);
    }
    let w = &(&p.derivative() * q) - &(p * &q.derivative());
    let (_, factors) = w.square_free();
    Ok(factors.iter().enumerate().filter(|(i, _)| i % 2 == 0).all(|(_, f)| real_root_count(f) == 0))
}

/// One line of a sweep: a key `(g, μ)` at one value of `b`.
#[derive(Clone, Debug)]
pub struct SweepRow {
    pub g: Genus,
    pub n: usize,
    pub mu: Partition,
    pub b: Rational,
    pub real_rooted: bool,
    pub interlacing_pass: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug)]
pub struct SweepSpec {
    pub genera: Vec<Genus>,
    pub n_max: usize,
    pub size_min: usize,
    pub size_max: usize,
    pub b_values: Vec<Rational>,
}

#[derive(Clone, Debug)]
pub struct SweepReport {
    pub rows: Vec<SweepRow>,
    /// Individual root checks performed (one per real-rootedness test and
    /// one per interlacing pair).
    pub checks: usize,
}

impl SweepReport {
    pub fn failures(&self) -> impl Iterator<Item = &SweepRow> {
        self.rows.iter().filter(|r| !r.real_rooted || !r.interlacing_pass)
    }

    pub fn all_passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["g", "n", "mu", "b", "real_rooted", "interlacing_pass", "witness"]).expect("in-memory write");
        for r in &self.rows {
            w.write_record([
                r.g.to_string(),
                r.n.to_string(),
                r.mu.to_string(),
                r.b.to_string(),
                r.real_rooted.to_string(),
                r.interlacing_pass.to_string(),
                r.witness.clone().unwrap_or_default(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
    }
}

/// `H_{g,n}(μ)` at `b`, as a polynomial in `t`.
pub fn hurwitz_in_t(g: Genus, mu: &Partition, b: &Rational) -> UniPoly {
    UniPoly::from_mpoly(&hurwitz_h(g, mu.parts()).specialize(Var::B, b), Var::T).expect("only t remains")
}

fn increments(mu: &Partition) -> Vec<Partition> {
    let mut out: Vec<Partition> = (0..mu.len())
        .map(|i| {
            let mut v = mu.parts().to_vec();
            v[i] += 1;
            Partition::from_composition(&v).expect("positive parts")
        })
        .collect();
    out.dedup();
    out
}

fn check_key(g: Genus, mu: &Partition, b: &Rational, size_max: usize) -> Option<(SweepRow, usize)> {
    let p = hurwitz_in_t(g, mu, b);
    if p.is_zero() {
        return None;
    }
    let mut checks = 1;
    let real_rooted = is_real_rooted_fast(&p).expect("nonzero");
    let mut witness = (!real_rooted).then(|| {
        let report = root_report(&p).expect("nonzero");
        format!("{} real roots of degree {}", report.real_roots, report.degree)
    });
    let mut interlacing_pass = true;
    if mu.size() < size_max {
        for nu in increments(mu) {
            let q = hurwitz_in_t(g, &nu, b);
            if q.is_zero() {
                continue;
            }
            checks += 1;
            if !interlaces_wronskian(&p, &q).expect("nonzero") {
                interlacing_pass = false;
                witness.get_or_insert_with(|| format!("does not interlace {nu}"));
            }
        }
    }
    Some((SweepRow { g, n: mu.len(), mu: mu.clone(), b: b.clone(), real_rooted, interlacing_pass, witness }, checks))
}

/// Real-rootedness of every nonzero `H_{g,n}(μ)` in the grid at each `b`,
/// and interlacing of `H(μ)` by `H(μ + e_i)` whenever `|μ| < size_max`.
/// Rows are ordered by `(g, n, μ, b)` irrespective of scheduling.
pub fn sweep(spec: &SweepSpec) -> Result<SweepReport, AnalysisError> {
    for b in &spec.b_values {
        if b.is_zero() || *b == -Rational::one() {
            return Err(AnalysisError::ExcludedB(b.to_string()));
        }
    }
    let mut keys = Vec::new();
    for &g in &spec.genera {
        for n in 1..=spec.n_max {
            for size in spec.size_min.max(1)..=spec.size_max {
                for mu in all_partitions(size).into_iter().filter(|m| m.len() == n).rev() {
                    for (bi, b) in spec.b_values.iter().enumerate() {
                        keys.push((g, mu.clone(), bi, b.clone()));
                    }
                }
            }
        }
    }
    let results: Vec<_> = keys.par_iter().map(|(g, mu, _, b)| check_key(*g, mu, b, spec.size_max)).collect();
    let mut rows = Vec::new();
    let mut checks = 0;
    for (row, c) in results.into_iter().flatten() {
        rows.push(row);
        checks += c;
    }
    Ok(SweepReport { rows, checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn up(cs: &[i64]) -> UniPoly {
        UniPoly::from_ints(cs)
    }

    #[test]
    fn sturm_examples() {
        assert_eq!(sturm_count(&up(&[-1, 0, 1]), &rat(-2), &rat(2)).unwrap(), 2);
        assert_eq!(sturm_count(&up(&[1, 0, 1]), &rat(-10), &rat(10)).unwrap(), 0);
        assert_eq!(sturm_count(&up(&[1, 3, 1]), &rat(-3), &rat(0)).unwrap(), 2);
        assert!(matches!(sturm_count(&up(&[-1, 0, 1]), &rat(1), &rat(2)), Err(AnalysisError::EndpointIsRoot(_))));
    }

    #[test]
    fn real_rootedness() {
        assert!(is_real_rooted(&up(&[0, 1, 3, 1])).unwrap().0);
        assert!(!is_real_rooted(&up(&[1, 0, 1])).unwrap().0);
        // (t - 1/2)^2 (t + 3)
        let p = &up(&[-1, 2]).pow(2) * &up(&[3, 1]);
        let (ok, rep) = is_real_rooted(&p).unwrap();
        assert!(ok);
        assert_eq!(rep.roots.len(), 2);
        assert_eq!(rep.roots[1].multiplicity, 2);
    }

    #[test]
    fn interlacing_examples() {
        assert!(interlaces(&up(&[0, 1]), &up(&[0, 1, 1])).unwrap());
        assert!(interlaces(&up(&[1]), &up(&[0, 1])).unwrap());
        assert!(interlaces(&up(&[-1, 1]), &up(&[0, -3, 1])).unwrap());
        assert!(!interlaces(&up(&[-5, 1]), &up(&[0, -3, 1])).unwrap());
        assert!(!interlaces(&up(&[1, 0, 1]), &up(&[0, 1, 0, 1])).unwrap());
    }

    #[test]
    fn fast_checks_agree_on_examples() {
        let cases = [up(&[0, 1]), up(&[0, 1, 1]), up(&[1]), up(&[-1, 1]), up(&[0, -3, 1]), up(&[-5, 1]), up(&[1, 0, 1]), up(&[0, 1, 0, 1]), up(&[0, 0, 1]), up(&[0, 0, 0, 1])];
        for p in &cases {
            assert_eq!(is_real_rooted_fast(p).unwrap(), is_real_rooted(p).unwrap().0, "{p:?}");
            for q in &cases {
                assert_eq!(interlaces_wronskian(p, q).unwrap(), interlaces(p, q).unwrap(), "{p:?} {q:?}");
            }
        }
    }

    #[test]
    fn sweep_rejects_excluded_b() {
        let spec = SweepSpec { genera: vec![Genus(0)], n_max: 1, size_min: 1, size_max: 3, b_values: vec![rat(0)] };
        assert!(matches!(sweep(&spec), Err(AnalysisError::ExcludedB(_))));
    }
}
