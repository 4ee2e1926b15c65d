//! b-deformed Jucys-Murphy operators on the span of pair partitions.
//!
//! `V_k` has basis `P_k`; vectors carry univariate coefficients in `b`.
//! `𝒥_i` sends `m` to `Σ_{a<2i-1} ω((a 2i-1)·m, m) (a 2i-1)·m`, and the
//! classical odd element `J_{2i-1}` is the same sum with unit weights.

use crate::exactnum::{BFrac, Rational, UniPoly};
use crate::memo::Memo;
use crate::pairings::{all_pair_partitions, omega, PairPartition, Weight};
use crate::partitions::{all_partitions, all_tableaux, contents_multiset_uni, hook_products_uni, standard_tableaux, Partition, Tableau};
use crate::symfunc::{complete, elementary, eval_at_multiset, jack, laplace_beltrami, monomial_in_powersum, powersum_norm, SymFunc};
use serde::{Deserialize, Serialize};
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock};

/// Largest level handled without the expensive flag.
pub const DEFAULT_JM_MAX: usize = 4;
/// Largest level handled at all.
pub const JM_HARD_MAX: usize = 5;
/// Environment variable enabling level 5.
pub const EXPENSIVE_ENV: &str = "WGCALC_EXPENSIVE";

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum JmError {
    #[error("operator index {i} outside 1..={k}")]
    IndexOutOfRange { i: usize, k: usize },
    #[error("level {k} exceeds the bound {bound}")]
    BoundExceeded { k: usize, bound: usize },
    #[error("vector is not constant on coset types: {0}")]
    NotCosetTypeInvariant(String),
    #[error("level mismatch: {0} vs {1}")]
    LevelMismatch(usize, usize),
}

/// Whether level 5 computations were requested through the environment.
pub fn expensive_enabled() -> bool {
    std::env::var(EXPENSIVE_ENV).map(|v| v == "1" || v.eq_ignore_ascii_case("true")).unwrap_or(false)
}

// ---------------------------------------------------------------------------
// vectors

#[derive(Clone, PartialEq, Eq)]
pub struct PkVector {
    k: usize,
    coeffs: BTreeMap<PairPartition, BFrac>,
}

impl PkVector {
    pub fn zero(k: usize) -> PkVector {
        PkVector { k, coeffs: BTreeMap::new() }
    }

    pub fn basis(m: &PairPartition) -> PkVector {
        let mut v = PkVector::zero(m.k());
        v.coeffs.insert(m.clone(), BFrac::one());
        v
    }

    /// `𝔢_k`.
    pub fn identity(k: usize) -> PkVector {
        PkVector::basis(&PairPartition::identity(k))
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, m: &PairPartition) -> BFrac {
        self.coeffs.get(m).cloned().unwrap_or_else(BFrac::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PairPartition, &BFrac)> {
        self.coeffs.iter()
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn add_term(&mut self, m: PairPartition, c: &BFrac) {
        debug_assert_eq!(m.k(), self.k);
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                let s = e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &PkVector) -> PkVector {
        assert_eq!(self.k, other.k, "adding vectors of different levels");
        let mut out = self.clone();
        for (m, c) in &other.coeffs {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &PkVector) -> PkVector {
        self.add(&other.scale(&BFrac::int(-1)))
    }

    pub fn scale(&self, c: &BFrac) -> PkVector {
        if c.is_zero() {
            return PkVector::zero(self.k);
        }
        PkVector { k: self.k, coeffs: self.coeffs.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    /// Image under `V_k -> V_{k+1}`, `m -> m↑`.
    pub fn up(&self) -> PkVector {
        PkVector { k: self.k + 1, coeffs: self.coeffs.iter().map(|(m, c)| (m.up(), c.clone())).collect() }
    }

    /// Image in `V_target` by repeated [`PkVector::up`].
    pub fn lift_to(&self, target: usize) -> PkVector {
        let mut v = self.clone();
        while v.k < target {
            v = v.up();
        }
        v
    }

    /// The common coefficient on each coset type, if constant.
    pub fn class_coefficients(&self) -> Result<BTreeMap<Partition, BFrac>, JmError> {
        let mut out: BTreeMap<Partition, BFrac> = BTreeMap::new();
        for m in pk_index(self.k).all.iter() {
            let c = self.coeff(m);
            let lam = m.coset_type();
            match out.get(&lam) {
                None => {
                    out.insert(lam, c);
                }
                Some(prev) if prev == &c => {}
                Some(prev) => {
                    return Err(JmError::NotCosetTypeInvariant(format!("{m} has {c}, its class {lam} has {prev}")));
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        Ok(out)
    }
}

impl fmt::Display for PkVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "[{c}]{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PkVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

// ---------------------------------------------------------------------------
// operators

struct PkIndex {
    all: Vec<PairPartition>,
    pos: HashMap<PairPartition, usize>,
}

fn pk_index(k: usize) -> Arc<PkIndex> {
    static CACHE: OnceLock<Memo<usize, Arc<PkIndex>>> = OnceLock::new();
    CACHE.get_or_init(Memo::new).get_or_compute(&k, || {
        let all = all_pair_partitions(k);
        let pos = all.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        Arc::new(PkIndex { all, pos })
    })
}

/// Sparse matrix of `𝒥_i` (or `J_{2i-1}`) on `V_k`, stored by column in
/// lexicographic `P_k` order. Entries lie in `{1, b}`.
#[derive(Clone, Debug)]
pub struct JOperator {
    k: usize,
    i: usize,
    weighted: bool,
    columns: Vec<Vec<(usize, Weight)>>,
}

impl JOperator {
    pub fn new(k: usize, i: usize, weighted: bool) -> Result<JOperator, JmError> {
        if i == 0 || i > k {
            return Err(JmError::IndexOutOfRange { i, k });
        }
        let idx = pk_index(k);
        let top = 2 * i - 1;
        let columns = idx
            .all
            .iter()
            .map(|m| {
                (1..top)
                    .map(|a| {
                        let target = m.act_unchecked(a, top);
                        let w = if weighted { omega(&target, m) } else { Weight::One };
                        (idx.pos[&target], w)
                    })
                    .collect()
            })
            .collect();
        Ok(JOperator { k, i, weighted, columns })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn index(&self) -> usize {
        self.i
    }

    pub fn is_weighted(&self) -> bool {
        self.weighted
    }

    /// Nonzero entries `(row, weight)` of the column for the `col`-th pair
    /// partition.
    pub fn column(&self, col: usize) -> &[(usize, Weight)] {
        &self.columns[col]
    }

    pub fn apply(&self, v: &PkVector) -> PkVector {
        let idx = pk_index(self.k);
        let b = BFrac::b();
        let mut out = PkVector::zero(self.k);
        for (m, c) in &v.coeffs {
            for (row, w) in &self.columns[idx.pos[m]] {
                let term = match w {
                    Weight::Zero => continue,
                    Weight::One => c.clone(),
                    Weight::B => c * &b,
                };
                out.add_term(idx.all[*row].clone(), &term);
            }
        }
        out
    }
}

fn operator(k: usize, i: usize, weighted: bool) -> Result<Arc<JOperator>, JmError> {
    static CACHE: OnceLock<Memo<(usize, usize, bool), Arc<JOperator>>> = OnceLock::new();
    if i == 0 || i > k {
        return Err(JmError::IndexOutOfRange { i, k });
    }
    Ok(CACHE.get_or_init(Memo::new).get_or_compute(&(k, i, weighted), || Arc::new(JOperator::new(k, i, weighted).unwrap())))
}

/// `𝒥_i · v`.
pub fn j_apply(i: usize, v: &PkVector) -> Result<PkVector, JmError> {
    Ok(operator(v.k, i, true)?.apply(v))
}

/// `J_{2i-1} · v`, the classical odd Jucys-Murphy element.
pub fn odd_jm_apply(i: usize, v: &PkVector) -> Result<PkVector, JmError> {
    Ok(operator(v.k, i, false)?.apply(v))
}

/// `(𝒥_i - c) · v`.
fn j_shift(i: usize, c: &BFrac, v: &PkVector) -> PkVector {
    j_apply(i, v).unwrap().sub(&v.scale(c))
}

// ---------------------------------------------------------------------------
// the orbit space

/// Echelonized subspace of `V_k`.
#[derive(Clone, Debug)]
pub struct SubspaceBasis {
    k: usize,
    spanning: Vec<PkVector>,
    rows: Vec<(PairPartition, PkVector)>,
}

impl SubspaceBasis {
    pub fn new(k: usize) -> SubspaceBasis {
        SubspaceBasis { k, spanning: Vec::new(), rows: Vec::new() }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// The vectors that were accepted as independent, in insertion order.
    pub fn spanning(&self) -> &[PkVector] {
        &self.spanning
    }

    fn reduce(&self, v: &PkVector) -> PkVector {
        let mut w = v.clone();
        for (pivot, row) in &self.rows {
            let c = w.coeff(pivot);
            if !c.is_zero() {
                w = w.sub(&row.scale(&c));
            }
        }
        w
    }

    pub fn contains(&self, v: &PkVector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Add `v` if it is independent of the current rows.
    pub fn insert(&mut self, v: &PkVector) -> bool {
        let w = self.reduce(v);
        if w.is_zero() {
            return false;
        }
        // lowest-degree pivot keeps the rows small
        let (pivot, c) = w
            .coeffs
            .iter()
            .min_by_key(|(_, c)| c.weight())
            .map(|(m, c)| (m.clone(), c.clone()))
            .unwrap();
        let row = w.scale(&c.recip().unwrap());
        self.rows.push((pivot, row));
        self.spanning.push(v.clone());
        true
    }
}

/// `𝒳(k)`: the closure of `{𝔢_k}` under `𝒥_1, ..., 𝒥_k`.
pub fn orbit_space(k: usize) -> Result<SubspaceBasis, JmError> {
    check_level(k)?;
    let mut basis = SubspaceBasis::new(k);
    let mut queue = vec![PkVector::identity(k)];
    basis.insert(&queue[0]);
    while let Some(v) = queue.pop() {
        for i in 1..=k {
            let w = j_apply(i, &v)?;
            if basis.insert(&w) {
                queue.push(w);
            }
        }
    }
    Ok(basis)
}

fn check_level(k: usize) -> Result<(), JmError> {
    let bound = if expensive_enabled() { JM_HARD_MAX } else { DEFAULT_JM_MAX };
    if k > bound {
        return Err(JmError::BoundExceeded { k, bound });
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// the tableau basis

fn content_frac(t: &Tableau, i: usize) -> BFrac {
    BFrac::from_poly(t.content_of(i))
}

/// `𝔴_T`, built by the branching recursion from `𝔴` of the one-box tableau,
/// which is `𝔢_1`.
pub fn w_tableau(t: &Tableau) -> PkVector {
    static CACHE: OnceLock<Memo<Tableau, PkVector>> = OnceLock::new();
    CACHE.get_or_init(Memo::new).get_or_compute(t, || {
        let k = t.size();
        assert!(k >= 1, "tableau has at least one box");
        if k == 1 {
            return PkVector::identity(1);
        }
        let parent = t.remove_max();
        let mut v = w_tableau(&parent).up();
        let ct = content_frac(t, k);
        for s in parent.extensions() {
            if &s == t {
                continue;
            }
            let cs = content_frac(&s, k);
            let den = &ct - &cs;
            v = j_shift(k, &cs, &v).scale(&den.recip().expect("distinct addable corners have distinct contents"));
        }
        v
    })
}

/// `𝔭_λ`: the sum of the pair partitions of coset type `λ`.
pub fn p_vector(lambda: &Partition) -> PkVector {
    let k = lambda.size();
    let mut v = PkVector::zero(k);
    for m in pk_index(k).all.iter() {
        if &m.coset_type() == lambda {
            v.coeffs.insert(m.clone(), BFrac::one());
        }
    }
    v
}

/// `𝔴_λ = (hook_b hook'_b)^{-1} Σ_μ <J_λ, p_μ>_b 𝔭_μ`.
pub fn w_vector(lambda: &Partition) -> PkVector {
    let k = lambda.size();
    let j = jack(lambda).expect("Jack polynomial within the degree bound");
    let (h, hp) = hook_products_uni(lambda);
    let norm = BFrac::from_poly(&h * &hp).recip().unwrap();
    let mut v = PkVector::zero(k);
    for (mu, c) in j.terms() {
        let coeff = &(c * &powersum_norm(mu)) * &norm;
        v = v.add(&p_vector(mu).scale(&coeff));
    }
    v
}

/// The characteristic map `𝔭_μ -> p_μ / ((1+b)^ℓ(μ) z_μ)`.
pub fn ch_b(v: &PkVector) -> Result<SymFunc, JmError> {
    let classes = v.class_coefficients()?;
    let mut out = SymFunc::zero();
    for (mu, c) in classes {
        let coeff = &c * &powersum_norm(&mu).recip().unwrap();
        out.add_term(mu, coeff);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// symmetric functions of the operators

/// Distinct exponent vectors of length `k` that are rearrangements of `nu`.
fn exponent_vectors(nu: &Partition, k: usize) -> Vec<Vec<usize>> {
    if nu.len() > k {
        return Vec::new();
    }
    let mut base: Vec<usize> = nu.parts().to_vec();
    base.resize(k, 0);
    base.sort_unstable();
    let mut out = vec![base.clone()];
    // next lexicographic permutation
    loop {
        let Some(i) = (0..k.saturating_sub(1)).rev().find(|&i| base[i] < base[i + 1]) else { break };
        let j = (i + 1..k).rev().find(|&j| base[j] > base[i]).unwrap();
        base.swap(i, j);
        base[i + 1..].reverse();
        out.push(base.clone());
    }
    out
}

/// `m_ν^≥(𝒥) · v`: each monomial applies the smallest index first.
pub fn monomial_sym_apply(nu: &Partition, v: &PkVector) -> PkVector {
    let k = v.k;
    let mut out = PkVector::zero(k);
    for exps in exponent_vectors(nu, k) {
        let mut w = v.clone();
        for (idx, &e) in exps.iter().enumerate() {
            for _ in 0..e {
                w = j_apply(idx + 1, &w).unwrap();
            }
        }
        out = out.add(&w);
    }
    out
}

pub fn elementary_apply(r: usize, v: &PkVector) -> PkVector {
    if r == 0 {
        return v.clone();
    }
    monomial_sym_apply(&Partition::column(r), v)
}

pub fn complete_apply(r: usize, v: &PkVector) -> PkVector {
    if r == 0 {
        return v.clone();
    }
    all_partitions(r).iter().fold(PkVector::zero(v.k), |acc, nu| acc.add(&monomial_sym_apply(nu, v)))
}

// ---------------------------------------------------------------------------
// verification suite

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CheckKind {
    Conjecture,
    Theorem,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CheckStatus {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check: String,
    pub k: usize,
    pub kind: CheckKind,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl CheckRecord {
    fn new(check: &str, k: usize, kind: CheckKind, witness: Option<String>) -> CheckRecord {
        let status = if witness.is_none() { CheckStatus::Pass } else { CheckStatus::Fail };
        CheckRecord { check: check.to_string(), k, kind, status, witness }
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

/// Which checks to run; everything is on by default.
#[derive(Clone, Debug)]
pub struct SuiteFlags {
    pub max_sym_degree: usize,
}

impl Default for SuiteFlags {
    fn default() -> Self {
        SuiteFlags { max_sym_degree: 3 }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SuiteReport {
    pub k: usize,
    pub orbit_dim: usize,
    pub records: Vec<CheckRecord>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.records.iter().all(|r| r.passed())
    }

    pub fn theorems_passed(&self) -> bool {
        self.records.iter().filter(|r| r.kind == CheckKind::Theorem).all(|r| r.passed())
    }
}

fn first_failure<I: IntoIterator<Item = Option<String>>>(it: I) -> Option<String> {
    it.into_iter().flatten().next()
}

/// Run checks (i)-(vii) at level `k`.
pub fn verify_suite(k: usize, flags: &SuiteFlags) -> Result<SuiteReport, JmError> {
    check_level(k)?;
    let orbit = orbit_space(k)?;
    let tabs = all_tableaux(k);
    let ws: Vec<PkVector> = tabs.iter().map(w_tableau).collect();
    let mut records = Vec::new();

    // (i) commutation on the orbit space
    let mut wit = None;
    'outer: for v in orbit.spanning() {
        for m in 1..=k {
            for n in m + 1..=k {
                let mn = j_apply(m, &j_apply(n, v)?)?;
                let nm = j_apply(n, &j_apply(m, v)?)?;
                if mn != nm {
                    wit = Some(format!("[J_{m}, J_{n}] is nonzero on {v}"));
                    break 'outer;
                }
            }
        }
    }
    records.push(CheckRecord::new("commute", k, CheckKind::Conjecture, wit));

    // (ii) eigenvectors, spanning the orbit space
    let mut wit = first_failure(tabs.iter().zip(&ws).flat_map(|(t, w)| {
        (1..=k).map(move |i| {
            let lhs = j_apply(i, w).unwrap();
            let rhs = w.scale(&content_frac(t, i));
            (lhs != rhs).then(|| format!("J_{i} w_T != c_b(T_{i}) w_T for T = {t:?}"))
        })
    }));
    if wit.is_none() {
        let mut span = SubspaceBasis::new(k);
        for w in &ws {
            if !orbit.contains(w) {
                wit = Some(format!("w_T for {} lies outside X(k)", w));
                break;
            }
            span.insert(w);
        }
        if wit.is_none() && (span.dim() != tabs.len() || span.dim() != orbit.dim()) {
            wit = Some(format!("w_T span dimension {} vs #Tab {} vs dim X(k) {}", span.dim(), tabs.len(), orbit.dim()));
        }
    }
    records.push(CheckRecord::new("eigenbasis", k, CheckKind::Conjecture, wit));

    // (iii) branching sums, including S empty
    let mut wit = None;
    let sum_all = ws.iter().fold(PkVector::zero(k), |a, w| a.add(w));
    if sum_all != PkVector::identity(k) {
        wit = Some("Σ_T w_T != e_k".to_string());
    }
    for j in 1..k {
        if wit.is_some() {
            break;
        }
        for s in all_tableaux(j) {
            let lifted = w_tableau(&s).lift_to(k);
            let sum = tabs.iter().zip(&ws).filter(|(t, _)| t.restrict(j) == s).fold(PkVector::zero(k), |a, (_, w)| a.add(w));
            if lifted != sum {
                wit = Some(format!("branching sum fails below S = {s:?}"));
                break;
            }
        }
    }
    records.push(CheckRecord::new("branching", k, CheckKind::Conjecture, wit));

    // (iv) class idempotents
    let lambdas = all_partitions(k);
    let w_lams: Vec<PkVector> = lambdas.iter().map(w_vector).collect();
    let wit = first_failure(lambdas.iter().zip(&w_lams).map(|(lam, wl)| {
        let sum = standard_tableaux(lam).iter().map(w_tableau).fold(PkVector::zero(k), |a, w| a.add(&w));
        (&sum != wl).then(|| format!("w_λ != Σ_T w_T for λ = {lam}"))
    }));
    records.push(CheckRecord::new("class-sum", k, CheckKind::Conjecture, wit));

    // (v) symmetric functions act by contents
    let mut wit = None;
    'sym: for r in 1..=flags.max_sym_degree {
        let mut tests: Vec<(String, SymFunc, Box<dyn Fn(&PkVector) -> PkVector>)> = vec![
            (format!("e_{r}"), elementary(r), Box::new(move |v: &PkVector| elementary_apply(r, v))),
            (format!("h_{r}"), complete(r), Box::new(move |v: &PkVector| complete_apply(r, v))),
        ];
        for nu in all_partitions(r) {
            let nu2 = nu.clone();
            tests.push((format!("m_{nu}"), monomial_in_powersum(&nu), Box::new(move |v: &PkVector| monomial_sym_apply(&nu2, v))));
        }
        for (name, f, apply) in &tests {
            for (lam, wl) in lambdas.iter().zip(&w_lams) {
                let value = eval_at_multiset(f, &contents_multiset_uni(lam), k).unwrap();
                if apply(wl) != wl.scale(&value) {
                    wit = Some(format!("{name}(J) w_λ != {name}(cont_b λ) w_λ for λ = {lam}"));
                    break 'sym;
                }
            }
        }
    }
    records.push(CheckRecord::new("symmetric-action", k, CheckKind::Conjecture, wit));

    // (vi) Laplace-Beltrami intertwining
    let wit = first_failure(lambdas.iter().map(|lam| {
        let p = p_vector(lam);
        let summed = (1..=k).fold(PkVector::zero(k), |a, i| a.add(&j_apply(i, &p).unwrap()));
        match ch_b(&summed) {
            Err(e) => Some(format!("(Σ J_i) p_λ for λ = {lam}: {e}")),
            Ok(lhs) => {
                let rhs = laplace_beltrami(&ch_b(&p).unwrap());
                (lhs != rhs).then(|| format!("ch((Σ J_i) p_λ) != D(b) ch(p_λ) for λ = {lam}"))
            }
        }
    }));
    records.push(CheckRecord::new("laplace-beltrami", k, CheckKind::Conjecture, wit));

    // (vii) elementary and complete symmetric polynomials on e_k
    let ek = PkVector::identity(k);
    let wit = first_failure((0..=k).map(|r| {
        let lhs = elementary_apply(r, &ek);
        let rhs = lambdas.iter().filter(|l| l.len() == k - r).fold(PkVector::zero(k), |a, l| a.add(&p_vector(l)));
        (lhs != rhs).then(|| format!("e_{r}(J) e_k mismatch"))
    }));
    records.push(CheckRecord::new("elementary-identity", k, CheckKind::Theorem, wit));
    let wit = first_failure((0..=flags.max_sym_degree).map(|r| {
        let lhs = complete_apply(r, &ek);
        let h = complete(r);
        let rhs = lambdas.iter().zip(&w_lams).fold(PkVector::zero(k), |a, (l, wl)| {
            let c = if r == 0 { BFrac::one() } else { eval_at_multiset(&h, &contents_multiset_uni(l), k).unwrap() };
            a.add(&wl.scale(&c))
        });
        (lhs != rhs).then(|| format!("h_{r}(J) e_k mismatch"))
    }));
    records.push(CheckRecord::new("complete-identity", k, CheckKind::Theorem, wit));

    Ok(SuiteReport { k, orbit_dim: orbit.dim(), records })
}

/// `b`-content of a box, handy for examples.
pub fn tableau_contents(t: &Tableau) -> Vec<UniPoly> {
    (1..=t.size()).map(|i| t.content_of(i)).collect()
}

/// Rational scalar as a `b`-fraction.
pub fn scalar(c: i64) -> BFrac {
    BFrac::constant(Rational::from_integer(c.into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pp(s: &str) -> PkVector {
        PkVector::basis(&s.parse().unwrap())
    }

    fn bp(cs: &[i64]) -> BFrac {
        BFrac::from_poly(UniPoly::from_ints(cs))
    }

    fn tab(rows: &[&[usize]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn operator_examples() {
        assert!(j_apply(1, &PkVector::identity(3)).unwrap().is_zero());
        let want = pp("(14|23)").add(&pp("(13|24)"));
        assert_eq!(j_apply(2, &PkVector::identity(2)).unwrap(), want);
        assert_eq!(odd_jm_apply(2, &PkVector::identity(2)).unwrap(), want);
        assert!(matches!(j_apply(3, &PkVector::identity(2)), Err(JmError::IndexOutOfRange { .. })));
    }

    #[test]
    fn column_sums_at_b_one() {
        for k in 1..=3 {
            for i in 1..=k {
                let op = JOperator::new(k, i, true).unwrap();
                for col in 0..pk_index(k).all.len() {
                    assert_eq!(op.column(col).len(), 2 * i - 2);
                }
            }
        }
    }

    #[test]
    fn orbit_dimensions() {
        let dims: Vec<usize> = (1..=4).map(|k| orbit_space(k).unwrap().dim()).collect();
        assert_eq!(dims, vec![1, 2, 4, 10]);
    }

    #[test]
    fn worked_example_level_three() {
        let a = tab(&[&[1], &[2], &[3]]);
        let b = tab(&[&[1, 2], &[3]]);
        let c = tab(&[&[1, 3], &[2]]);
        let d = tab(&[&[1, 2, 3]]);
        // displayed formula for w_A, operators applied right to left
        let e3 = PkVector::identity(3);
        let step = j_shift(3, &bp(&[1, 1]), &e3).scale(&bp(&[-3, -1]).recip().unwrap());
        let w_a = j_shift(2, &bp(&[1, 1]), &step).scale(&bp(&[-2, -1]).recip().unwrap());
        assert_eq!(w_tableau(&a), w_a);
        assert_eq!(j_apply(3, &w_tableau(&d)).unwrap(), w_tableau(&d).scale(&bp(&[2, 2])));
        let eig = [
            (&a, [bp(&[0]), bp(&[-1]), bp(&[-2])]),
            (&b, [bp(&[0]), bp(&[1, 1]), bp(&[-1])]),
            (&c, [bp(&[0]), bp(&[-1]), bp(&[1, 1])]),
            (&d, [bp(&[0]), bp(&[1, 1]), bp(&[2, 2])]),
        ];
        for (t, vals) in eig {
            let w = w_tableau(t);
            for (i, val) in vals.iter().enumerate() {
                assert_eq!(j_apply(i + 1, &w).unwrap(), w.scale(val), "J_{} on {t:?}", i + 1);
            }
        }
        let sum = [&a, &b, &c, &d].iter().fold(PkVector::zero(3), |s, t| s.add(&w_tableau(t)));
        assert_eq!(sum, e3);
    }

    #[test]
    fn p_and_ch() {
        assert_eq!(p_vector(&"1,1".parse().unwrap()), PkVector::identity(2));
        assert_eq!(p_vector(&"2".parse().unwrap()), pp("(13|24)").add(&pp("(14|23)")));
        let ch = ch_b(&p_vector(&"1".parse().unwrap())).unwrap();
        assert_eq!(ch, SymFunc::term("1".parse().unwrap(), bp(&[1, 1]).recip().unwrap()));
        let ch2 = ch_b(&p_vector(&"2".parse().unwrap())).unwrap();
        assert_eq!(ch2, SymFunc::term("2".parse().unwrap(), bp(&[2, 2]).recip().unwrap()));
        assert!(matches!(ch_b(&pp("(13|24)")), Err(JmError::NotCosetTypeInvariant(_))));
    }

    #[test]
    fn elementary_identity_small() {
        let lhs = elementary_apply(1, &PkVector::identity(2));
        assert_eq!(lhs, p_vector(&"2".parse().unwrap()));
    }

    #[test]
    fn suite_through_level_three() {
        for k in 1..=3 {
            let rep = verify_suite(k, &SuiteFlags::default()).unwrap();
            assert!(rep.all_passed(), "{:?}", rep.records);
        }
    }
}
