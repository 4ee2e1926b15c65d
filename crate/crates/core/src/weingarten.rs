//! Weingarten graphs and exact Weingarten functions.
//!
//! All four graph profiles share one engine. A profile fixes the coefficient
//! of the type-B edge, whether type-C edges exist, and whether type-A edges
//! carry the weight `ω`. Values are solved level by level from the
//! orthogonality relations, multiplied through by `N` so the linear systems
//! are polynomial.

use crate::exactnum::{bareiss_solve, frac_equal, ExactError, MPoly, RatFrac, Rational, TruncSeries, UniPoly, Var};
use crate::exactnum::{Bindings, PolyRecord};
use crate::jmops::JOperator;
use crate::memo::Memo;
use crate::pairings::{admissible, all_pair_partitions, omega_b, PairPartition};
use crate::partitions::{all_partitions, Partition};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

/// Default level bound for [`wg_solve`].
pub const DEFAULT_WG_BOUND: usize = 4;
/// Levels up to this one are also solved on the full `P_k` system.
pub const FULL_SOLVE_MAX: usize = 3;
/// Hard ceiling regardless of configuration.
pub const WG_HARD_MAX: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum WeingartenError {
    #[error("the empty pair partition has no outgoing edges")]
    EmptyPairPartition,
    #[error("level {k} exceeds the bound {bound}")]
    BoundExceeded { k: usize, bound: usize },
    #[error("singular orthogonality system at level {0}")]
    SingularSystem(usize),
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("coset-type reduction failed at level {k}: {witness}")]
    InvarianceFailed { k: usize, witness: String },
    #[error(transparent)]
    Exact(#[from] ExactError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ProfileName {
    O,
    A,
    BOnly,
    BT,
}

impl ProfileName {
    pub fn all() -> [ProfileName; 4] {
        [ProfileName::O, ProfileName::A, ProfileName::BOnly, ProfileName::BT]
    }

    /// The profile obtained by setting `b = 1`.
    pub fn at_b_one(self) -> ProfileName {
        match self {
            ProfileName::BOnly => ProfileName::O,
            ProfileName::BT => ProfileName::A,
            p => p,
        }
    }
}

impl fmt::Display for ProfileName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProfileName::O => "O",
            ProfileName::A => "A",
            ProfileName::BOnly => "b",
            ProfileName::BT => "bt",
        })
    }
}

impl FromStr for ProfileName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "o" => Ok(ProfileName::O),
            "a" => Ok(ProfileName::A),
            "b" | "b-only" | "bonly" => Ok(ProfileName::BOnly),
            "bt" => Ok(ProfileName::BT),
            _ => Err(format!("unknown profile '{s}' (expected O, A, b or bt)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AWeightRule {
    One,
    Omega,
}

#[derive(Clone, Debug)]
pub struct GraphProfile {
    pub name: ProfileName,
    pub has_c_edges: bool,
    pub b_edge_coeff: RatFrac,
    pub a_weight: AWeightRule,
}

impl GraphProfile {
    pub fn new(name: ProfileName) -> GraphProfile {
        let t_deformed = matches!(name, ProfileName::A | ProfileName::BT);
        let b_num = if t_deformed { RatFrac::var(Var::M) } else { RatFrac::one() };
        GraphProfile {
            name,
            has_c_edges: t_deformed,
            b_edge_coeff: &b_num / &RatFrac::var(Var::N),
            a_weight: if matches!(name, ProfileName::BOnly | ProfileName::BT) {
                AWeightRule::Omega
            } else {
                AWeightRule::One
            },
        }
    }

    pub fn o() -> GraphProfile {
        GraphProfile::new(ProfileName::O)
    }

    pub fn a() -> GraphProfile {
        GraphProfile::new(ProfileName::A)
    }

    pub fn b_only() -> GraphProfile {
        GraphProfile::new(ProfileName::BOnly)
    }

    pub fn bt() -> GraphProfile {
        GraphProfile::new(ProfileName::BT)
    }

    fn a_weight_poly(&self, m: &PairPartition, n: &PairPartition) -> MPoly {
        match self.a_weight {
            AWeightRule::One => MPoly::one(),
            AWeightRule::Omega => omega_b(m, n),
        }
    }

    /// `N` times the B-edge coefficient.
    fn b_edge_numerator(&self) -> MPoly {
        if self.has_c_edges {
            MPoly::var(Var::M)
        } else {
            MPoly::one()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum EdgeKind {
    A,
    B,
    C,
}

#[derive(Clone, Debug)]
pub struct Edge {
    pub target: PairPartition,
    pub kind: EdgeKind,
    pub weight: RatFrac,
}

/// Outgoing edges of `m` in the profile's Weingarten graph, in the order
/// A-edges by increasing `i`, then the B-edge, then the C-edge.
pub fn neighbors(m: &PairPartition, profile: &GraphProfile) -> Result<Vec<Edge>, WeingartenError> {
    if m.is_empty() {
        return Err(WeingartenError::EmptyPairPartition);
    }
    let minus_inv_n = -(&RatFrac::one() / &RatFrac::var(Var::N));
    let inv_n = &RatFrac::one() / &RatFrac::var(Var::N);
    let mut out = Vec::new();
    for (target, kind, w) in raw_edges(m, profile) {
        let weight = match kind {
            EdgeKind::A => &RatFrac::from_poly(w) * &minus_inv_n,
            EdgeKind::B => profile.b_edge_coeff.clone(),
            EdgeKind::C => inv_n.clone(),
        };
        out.push(Edge { target, kind, weight });
    }
    Ok(out)
}

/// Edges with their polynomial multiplier only: `ω` for A-edges, `1` for B
/// and C edges.
fn raw_edges(m: &PairPartition, profile: &GraphProfile) -> Vec<(PairPartition, EdgeKind, MPoly)> {
    let k = m.k();
    let top = 2 * k - 1;
    let mut out = Vec::with_capacity(2 * k);
    for i in 1..top {
        let n = m.act_unchecked(i, top);
        let w = profile.a_weight_poly(m, &n);
        out.push((n, EdgeKind::A, w));
    }
    if let Some(d) = m.down() {
        out.push((d, EdgeKind::B, MPoly::one()));
    }
    if profile.has_c_edges {
        let i = m.partner(2 * k);
        if i < top {
            let d = m.act_unchecked(i, top).down().expect("C-edge lands on a pair partition containing the top pair");
            out.push((d, EdgeKind::C, MPoly::one()));
        }
    }
    out
}

/// One orthogonality relation times `N`: `Σ lhs·Wg = Σ rhs·Wg` where the
/// left side lives at level `k` and the right side at level `k-1`.
struct Relation {
    lhs: Vec<(PairPartition, MPoly)>,
    rhs: Vec<(PairPartition, MPoly)>,
}

fn relation(m: &PairPartition, profile: &GraphProfile) -> Relation {
    let mut lhs = vec![(m.clone(), MPoly::var(Var::N))];
    let mut rhs = Vec::new();
    for (target, kind, w) in raw_edges(m, profile) {
        match kind {
            EdgeKind::A => lhs.push((target, w)),
            EdgeKind::B => rhs.push((target, profile.b_edge_numerator())),
            EdgeKind::C => rhs.push((target, w)),
        }
    }
    Relation { lhs, rhs }
}

/// Values at one level over a common denominator, keyed by coset type.
#[derive(Debug)]
struct Level {
    den: MPoly,
    nums: BTreeMap<Partition, MPoly>,
    full_checked: bool,
}

impl Level {
    fn base() -> Level {
        let mut nums = BTreeMap::new();
        nums.insert(Partition::empty(), MPoly::one());
        Level { den: MPoly::one(), nums, full_checked: true }
    }

    fn num_of(&self, m: &PairPartition) -> &MPoly {
        &self.nums[&m.coset_type()]
    }
}

/// `Σ c · num(target)` for terms at the previous level.
fn rhs_numerator(rel: &Relation, prev: &Level) -> MPoly {
    let mut acc = MPoly::zero();
    for (target, c) in &rel.rhs {
        acc += &(c * prev.num_of(target));
    }
    acc
}

fn solve_classes(k: usize, profile: &GraphProfile, prev: &Level) -> Result<(MPoly, BTreeMap<Partition, MPoly>), WeingartenError> {
    let classes = all_partitions(k);
    let index: HashMap<&Partition, usize> = classes.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut reps: Vec<Option<PairPartition>> = vec![None; classes.len()];
    for m in all_pair_partitions(k) {
        let slot = &mut reps[index[&m.coset_type()]];
        if slot.is_none() {
            *slot = Some(m);
        }
    }
    let n = classes.len();
    let mut a = vec![vec![MPoly::zero(); n]; n];
    let mut b = vec![vec![MPoly::zero()]; n];
    for (row, rep) in reps.iter().enumerate() {
        let rel = relation(rep.as_ref().expect("every partition is a coset type"), profile);
        for (target, c) in &rel.lhs {
            a[row][index[&target.coset_type()]] += c;
        }
        b[row][0] = rhs_numerator(&rel, prev);
    }
    let sol = bareiss_solve(a, b).map_err(|_| WeingartenError::SingularSystem(k))?;
    let nums = classes.into_iter().zip(sol.numerators).map(|(p, mut col)| (p, col.pop().unwrap())).collect();
    Ok((sol.det, nums))
}

/// Substitute class values into every relation of `P_k`.
fn check_all_relations(k: usize, profile: &GraphProfile, prev: &Level, det: &MPoly, cur: &Level) -> Result<(), WeingartenError> {
    for m in all_pair_partitions(k) {
        let rel = relation(&m, profile);
        let mut lhs = MPoly::zero();
        for (target, c) in &rel.lhs {
            lhs += &(c * cur.num_of(target));
        }
        let rhs = det * &rhs_numerator(&rel, prev);
        if lhs != rhs {
            return Err(WeingartenError::InvarianceFailed {
                k,
                witness: format!("class values violate the relation at {m}"),
            });
        }
    }
    Ok(())
}

/// Solve the full `P_k` system given lower-level values; returns the
/// determinant and one numerator per pair partition (lexicographic order).
fn solve_full(k: usize, profile: &GraphProfile, prev: &Level) -> Result<(MPoly, Vec<(PairPartition, MPoly)>), WeingartenError> {
    let all = all_pair_partitions(k);
    let index: HashMap<&PairPartition, usize> = all.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let n = all.len();
    let mut a = vec![vec![MPoly::zero(); n]; n];
    let mut b = vec![vec![MPoly::zero()]; n];
    for (row, m) in all.iter().enumerate() {
        let rel = relation(m, profile);
        for (target, c) in &rel.lhs {
            a[row][index[target]] += c;
        }
        b[row][0] = rhs_numerator(&rel, prev);
    }
    let sol = bareiss_solve(a, b).map_err(|_| WeingartenError::SingularSystem(k))?;
    let det = sol.det;
    let nums = all.iter().cloned().zip(sol.numerators).map(|(m, mut col)| (m, col.pop().unwrap())).collect();
    Ok((det, nums))
}

fn levels() -> &'static Memo<(ProfileName, usize), Result<Arc<Level>, WeingartenError>> {
    static LEVELS: OnceLock<Memo<(ProfileName, usize), Result<Arc<Level>, WeingartenError>>> = OnceLock::new();
    LEVELS.get_or_init(Memo::new)
}

fn level(k: usize, name: ProfileName) -> Result<Arc<Level>, WeingartenError> {
    if k == 0 {
        return Ok(Arc::new(Level::base()));
    }
    levels().get_or_compute(&(name, k), || {
        let prev = level(k - 1, name)?;
        let profile = GraphProfile::new(name);
        let (det, nums) = solve_classes(k, &profile, &prev)?;
        let mut cur = Level { den: &det * &prev.den, nums, full_checked: false };
        check_all_relations(k, &profile, &prev, &det, &cur)?;
        if k <= FULL_SOLVE_MAX {
            let (full_det, full) = solve_full(k, &profile, &prev)?;
            for (m, num) in &full {
                if &(num * &det) != &(cur.num_of(m) * &full_det) {
                    return Err(WeingartenError::InvarianceFailed {
                        k,
                        witness: format!("full solution at {m} differs from its coset-type class"),
                    });
                }
            }
            cur.full_checked = true;
        }
        Ok(Arc::new(cur))
    })
}

/// Exact Weingarten values at one level.
#[derive(Clone, Debug)]
pub struct WeingartenTable {
    k: usize,
    profile: ProfileName,
    level: Arc<Level>,
}

/// Serialized class value.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WgRecord {
    pub coset_type: Partition,
    pub num: PolyRecord,
    pub den: PolyRecord,
}

impl WeingartenTable {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn profile(&self) -> ProfileName {
        self.profile
    }

    /// Whether this level was also solved on the full pair-partition system.
    pub fn full_checked(&self) -> bool {
        self.level.full_checked
    }

    /// Common denominator of every value in the table.
    pub fn common_denominator(&self) -> &MPoly {
        &self.level.den
    }

    pub fn value_by_type(&self, lambda: &Partition) -> Option<RatFrac> {
        let num = self.level.nums.get(lambda)?;
        Some(RatFrac::new(num.clone(), self.level.den.clone()).expect("common denominator is nonzero"))
    }

    pub fn value(&self, m: &PairPartition) -> Option<RatFrac> {
        if m.k() != self.k {
            return None;
        }
        self.value_by_type(&m.coset_type())
    }

    pub fn class_values(&self) -> BTreeMap<Partition, RatFrac> {
        self.level.nums.keys().map(|p| (p.clone(), self.value_by_type(p).unwrap())).collect()
    }

    /// Values on every pair partition of the level.
    pub fn values(&self) -> BTreeMap<PairPartition, RatFrac> {
        let classes = self.class_values();
        all_pair_partitions(self.k).into_iter().map(|m| {
            let v = classes[&m.coset_type()].clone();
            (m, v)
        }).collect()
    }

    pub fn to_records(&self) -> Vec<WgRecord> {
        self.level
            .nums
            .iter()
            .map(|(p, num)| {
                let v = RatFrac::new(num.clone(), self.level.den.clone()).unwrap();
                WgRecord { coset_type: p.clone(), num: PolyRecord::from_poly(v.num()), den: PolyRecord::from_poly(v.den()) }
            })
            .collect()
    }
}

pub fn wg_solve(k: usize, profile: &GraphProfile) -> Result<WeingartenTable, WeingartenError> {
    wg_solve_bounded(k, profile, DEFAULT_WG_BOUND)
}

pub fn wg_solve_bounded(k: usize, profile: &GraphProfile, bound: usize) -> Result<WeingartenTable, WeingartenError> {
    let bound = bound.min(WG_HARD_MAX);
    if k > bound {
        return Err(WeingartenError::BoundExceeded { k, bound });
    }
    Ok(WeingartenTable { k, profile: profile.name, level: level(k, profile.name)? })
}

/// Solve the full `P_k` system directly (lower levels come from
/// [`wg_solve`]); values are not assumed constant on coset types.
pub fn wg_solve_full(k: usize, profile: &GraphProfile) -> Result<BTreeMap<PairPartition, RatFrac>, WeingartenError> {
    if k == 0 {
        return Ok(BTreeMap::from([(PairPartition::empty(), RatFrac::one())]));
    }
    if k > FULL_SOLVE_MAX + 1 {
        return Err(WeingartenError::BoundExceeded { k, bound: FULL_SOLVE_MAX + 1 });
    }
    let prev = level(k - 1, profile.name)?;
    let (det, full) = solve_full(k, profile, &prev)?;
    let den = &det * &prev.den;
    full.into_iter().map(|(m, num)| Ok((m, RatFrac::new(num, den.clone())?))).collect()
}

/// Weighted path sums from `m` to the empty pair partition, organized by
/// order in `1/N` up to `N^{-order}`. For the t-deformed profiles `M` is
/// replaced by `N/(1-t)`.
///
/// B-edges of the t-deformed profiles contribute at order zero, so every
/// path of order at most `order` is counted, however many B-edges it uses.
pub fn path_series(m: &PairPartition, profile: &GraphProfile, order: usize) -> TruncSeries {
    let mut memo: HashMap<(PairPartition, usize), MPoly> = HashMap::new();
    let k = m.k();
    let t_deformed = profile.has_c_edges;
    let coeffs = (0..=order)
        .map(|r| {
            let p = path_poly(m, r, profile, &mut memo);
            if t_deformed {
                let one_minus_t = &MPoly::one() - &MPoly::var(Var::T);
                RatFrac::new(p, one_minus_t.pow(k as u32)).unwrap()
            } else {
                RatFrac::from_poly(p)
            }
        })
        .collect();
    TruncSeries::new(Var::N, true, coeffs)
}

/// Order-`r` path polynomial. For t-deformed profiles this is
/// `(1-t)^{level}` times the coefficient of `N^{-r}`, which keeps it
/// polynomial in `b` and `t`.
fn path_poly(m: &PairPartition, r: usize, profile: &GraphProfile, memo: &mut HashMap<(PairPartition, usize), MPoly>) -> MPoly {
    if m.is_empty() {
        return if r == 0 { MPoly::one() } else { MPoly::zero() };
    }
    if let Some(v) = memo.get(&(m.clone(), r)) {
        return v.clone();
    }
    let one_minus_t = &MPoly::one() - &MPoly::var(Var::T);
    let mut acc = MPoly::zero();
    for (target, kind, w) in raw_edges(m, profile) {
        match kind {
            EdgeKind::A if r > 0 => acc -= &(&w * &path_poly(&target, r - 1, profile, memo)),
            EdgeKind::B if profile.has_c_edges => acc += &path_poly(&target, r, profile, memo),
            EdgeKind::B if r > 0 => acc += &path_poly(&target, r - 1, profile, memo),
            EdgeKind::C if r > 0 => acc += &(&one_minus_t * &path_poly(&target, r - 1, profile, memo)),
            _ => {}
        }
    }
    memo.insert((m.clone(), r), acc.clone());
    acc
}

/// `Wg` of a t-deformed profile as a series in `1/N` at fixed `t`.
pub fn wg_series(value: &RatFrac, order: usize) -> Result<TruncSeries, ExactError> {
    let mut bind = Bindings::new();
    bind.insert(Var::M, &RatFrac::var(Var::N) / &(&RatFrac::one() - &RatFrac::var(Var::T)));
    let f = value.substitute(&bind)?;
    crate::exactnum::series_at_infinity(&f, Var::N, order)
}

/// Exact moment `∫ A_{i(1)i(2)} ⋯ A_{i(2k-1)i(2k)}` over the real
/// Grassmannian of `M`-planes in `R^N`, through the convolution formula.
pub fn integrate_monomial(i: &[usize], m_val: u64, n_val: u64) -> Result<Rational, WeingartenError> {
    if i.len() % 2 != 0 {
        return Err(WeingartenError::ParameterOutOfRange(format!("index function has odd length {}", i.len())));
    }
    let k = i.len() / 2;
    if m_val == 0 || m_val >= n_val {
        return Err(WeingartenError::ParameterOutOfRange(format!("need 0 < M < N, got M={m_val}, N={n_val}")));
    }
    if k as u64 > n_val {
        return Err(WeingartenError::ParameterOutOfRange(format!("need k <= N, got k={k}, N={n_val}")));
    }
    if let Some(&bad) = i.iter().find(|&&v| v == 0 || v as u64 > n_val) {
        return Err(WeingartenError::ParameterOutOfRange(format!("index {bad} outside 1..={n_val}")));
    }
    let table = wg_solve(k, &GraphProfile::a())?;
    let mval = Rational::from_integer(m_val.into());
    let nval = Rational::from_integer(n_val.into());
    let mut cache: HashMap<Partition, Rational> = HashMap::new();
    let mut total = Rational::from_integer(0.into());
    for m in all_pair_partitions(k) {
        if !admissible(&m, i) {
            continue;
        }
        let lambda = m.coset_type();
        if !cache.contains_key(&lambda) {
            let v = table.value_by_type(&lambda).unwrap();
            cache.insert(lambda.clone(), eval_in_n(&v, &mval, &nval)?);
        }
        total += &cache[&lambda];
    }
    Ok(total)
}

/// Evaluate a function of `M` and `N` after cancelling common factors in `N`,
/// so that removable singularities of the unreduced form do not matter.
fn eval_in_n(f: &RatFrac, m_val: &Rational, n_val: &Rational) -> Result<Rational, WeingartenError> {
    let num = UniPoly::from_mpoly(&f.num().specialize(Var::M, m_val), Var::N);
    let den = UniPoly::from_mpoly(&f.den().specialize(Var::M, m_val), Var::N);
    let (num, den) = match (num, den) {
        (Some(n), Some(d)) => (n, d),
        _ => return Err(WeingartenError::ParameterOutOfRange("value depends on b".into())),
    };
    let g = UniPoly::gcd(&num, &den);
    let (num, den) = (num.exact_div(&g).unwrap(), den.exact_div(&g).unwrap());
    let d = den.eval(n_val);
    if d == Rational::from_integer(0.into()) {
        return Err(WeingartenError::ParameterOutOfRange(format!("pole at N={n_val}")));
    }
    Ok(num.eval(n_val) / d)
}

/// Check `Σ_m Wg(m)·m = Π (M + J_i)/(N + J_i) · e_k` in the span of `P_k`,
/// applying the factor for `i = 1` first. Profile A uses the classical
/// odd Jucys-Murphy elements, profile BT the weighted operators.
pub fn jm_product_check(k: usize, profile: &GraphProfile) -> Result<bool, WeingartenError> {
    let weighted = match profile.name {
        ProfileName::A => false,
        ProfileName::BT => true,
        other => {
            return Err(WeingartenError::ParameterOutOfRange(format!("product formula needs profile A or bt, got {other}")));
        }
    };
    if k > FULL_SOLVE_MAX {
        return Err(WeingartenError::BoundExceeded { k, bound: FULL_SOLVE_MAX });
    }
    let all = all_pair_partitions(k);
    let index: HashMap<&PairPartition, usize> = all.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let n = all.len();
    // running vector num / den
    let mut num = vec![MPoly::zero(); n];
    num[index[&PairPartition::identity(k)]] = MPoly::one();
    let mut den = MPoly::one();
    for i in 1..=k {
        let op = JOperator::new(k, i, weighted).expect("index within level");
        let mut y: Vec<MPoly> = num.iter().map(|c| c * &MPoly::var(Var::M)).collect();
        for (col, c) in num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (row, w) in op.column(col) {
                y[*row] += &(c * &w.to_mpoly());
            }
        }
        let mut a = vec![vec![MPoly::zero(); n]; n];
        for (d, row) in a.iter_mut().enumerate() {
            row[d] = MPoly::var(Var::N);
        }
        for col in 0..n {
            for (row, w) in op.column(col) {
                a[*row][col] += &w.to_mpoly();
            }
        }
        let sol = bareiss_solve(a, y.into_iter().map(|v| vec![v]).collect()).map_err(|_| WeingartenError::SingularSystem(k))?;
        den = &den * &sol.det;
        num = sol.numerators.into_iter().map(|mut c| c.pop().unwrap()).collect();
    }
    let table = wg_solve(k, profile)?;
    for (m, pos) in &index {
        let lhs = RatFrac::new(num[*pos].clone(), den.clone())?;
        if !frac_equal(&lhs, &table.value(m).unwrap()) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pp(s: &str) -> PairPartition {
        s.parse().unwrap()
    }

    fn v(x: Var) -> RatFrac {
        RatFrac::var(x)
    }

    fn c(n: i64) -> RatFrac {
        RatFrac::int(n)
    }

    #[test]
    fn neighbors_of_identity_bt() {
        let edges = neighbors(&PairPartition::identity(2), &GraphProfile::bt()).unwrap();
        let inv_n = &c(1) / &v(Var::N);
        assert_eq!(edges.len(), 3);
        assert_eq!(edges[0].target, pp("(14|23)"));
        assert!(frac_equal(&edges[0].weight, &-&inv_n));
        assert_eq!(edges[1].target, pp("(13|24)"));
        assert!(frac_equal(&edges[1].weight, &-&(&v(Var::B) * &inv_n)));
        assert_eq!((edges[2].kind, &edges[2].target), (EdgeKind::B, &pp("(12)")));
        assert!(frac_equal(&edges[2].weight, &(&v(Var::M) / &v(Var::N))));
    }

    #[test]
    fn c_edge_present() {
        let edges = neighbors(&pp("(14|23)"), &GraphProfile::bt()).unwrap();
        let c_edges: Vec<_> = edges.iter().filter(|e| e.kind == EdgeKind::C).collect();
        assert_eq!(c_edges.len(), 1);
        assert_eq!(c_edges[0].target, pp("(12)"));
        assert!(matches!(neighbors(&PairPartition::empty(), &GraphProfile::o()), Err(WeingartenError::EmptyPairPartition)));
        for name in ProfileName::all() {
            let e = neighbors(&pp("(12)"), &GraphProfile::new(name)).unwrap();
            assert_eq!(e.len(), 1);
            assert_eq!(e[0].kind, EdgeKind::B);
            assert!(e[0].target.is_empty());
        }
    }

    #[test]
    fn level_two_closed_forms() {
        let t = wg_solve(2, &GraphProfile::bt()).unwrap();
        let (b, m, n) = (v(Var::B), v(Var::M), v(Var::N));
        let den = &(&n * &(&(&n + &b) + &c(1))) * &(&n - &c(1));
        let e2 = &(&m * &(&(&(&(&m * &n) + &(&b * &m)) - &b) - &c(1))) / &den;
        let other = &(&m * &(&n - &m)) / &den;
        assert!(frac_equal(&t.value(&pp("(12|34)")).unwrap(), &e2));
        assert!(frac_equal(&t.value(&pp("(14|23)")).unwrap(), &other));
        assert!(frac_equal(&t.value(&pp("(13|24)")).unwrap(), &other));
        assert!(t.full_checked());
        let t1 = wg_solve(1, &GraphProfile::bt()).unwrap();
        assert!(frac_equal(&t1.value(&pp("(12)")).unwrap(), &(&m / &n)));
    }

    #[test]
    fn path_series_small() {
        let s = path_series(&pp("(12)"), &GraphProfile::o(), 2);
        assert_eq!(s.coeffs(), &[c(0), c(1), c(0)]);
        let s = path_series(&PairPartition::identity(2), &GraphProfile::o(), 2);
        assert_eq!(s.coeffs()[2], c(1));
        let s = path_series(&pp("(12)"), &GraphProfile::a(), 1);
        assert!(frac_equal(&s.coeffs()[0], &(&c(1) / &(&c(1) - &v(Var::T)))));
    }

    #[test]
    fn integrate_small() {
        let r = integrate_monomial(&[1, 1], 2, 5).unwrap();
        assert_eq!(r, Rational::new(2.into(), 5.into()));
        let total: Rational = (1..=5).map(|i| integrate_monomial(&[i, i], 2, 5).unwrap()).sum();
        assert_eq!(total, Rational::from_integer(2.into()));
        assert!(integrate_monomial(&[1, 1], 5, 5).is_err());
    }

    #[test]
    fn bound_enforced() {
        assert!(matches!(wg_solve(5, &GraphProfile::o()), Err(WeingartenError::BoundExceeded { .. })));
    }
}
