//! Pair partitions of `{1, ..., 2k}`, the relabelling action of `S_2k`,
//! coset-type, vertex charges and the weight function with values in
//! `{0, 1, b}`.

use crate::exactnum::{BFrac, MPoly, Var};
use crate::partitions::Partition;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PairingError {
    #[error("index {index} outside 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("transposition ({0} {1}) must have distinct entries")]
    DegenerateTransposition(usize, usize),
    #[error("not a perfect matching of 1..2k: {0}")]
    NotAMatching(String),
    #[error("cannot parse pair partition {0:?}")]
    Parse(String),
}

/// A perfect matching of `{1, ..., 2k}` in canonical form: each pair stored
/// with its smaller element first, pairs sorted by first element. The derived
/// order is lexicographic on that list.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<(u8, u8)>", into = "Vec<(u8, u8)>")]
pub struct PairPartition {
    pairs: Vec<(u8, u8)>,
}

impl TryFrom<Vec<(u8, u8)>> for PairPartition {
    type Error = PairingError;
    fn try_from(v: Vec<(u8, u8)>) -> Result<Self, PairingError> {
        PairPartition::from_pairs(v.into_iter().map(|(a, b)| (a as usize, b as usize)))
    }
}

impl From<PairPartition> for Vec<(u8, u8)> {
    fn from(p: PairPartition) -> Self {
        p.pairs
    }
}

/// Value of the weight function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Weight {
    Zero,
    One,
    B,
}

impl Weight {
    pub fn to_mpoly(self) -> MPoly {
        match self {
            Weight::Zero => MPoly::zero(),
            Weight::One => MPoly::one(),
            Weight::B => MPoly::var(Var::B),
        }
    }

    pub fn to_bfrac(self) -> BFrac {
        match self {
            Weight::Zero => BFrac::zero(),
            Weight::One => BFrac::one(),
            Weight::B => BFrac::b(),
        }
    }

    /// Exponent of `b` for a nonzero weight.
    pub fn b_power(self) -> Option<u32> {
        match self {
            Weight::Zero => None,
            Weight::One => Some(0),
            Weight::B => Some(1),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Charge {
    Plus,
    Minus,
}

/// `Γ(m)` with its charge assignment. `charges[v - 1]` is the charge of `v`;
/// each cycle lists its vertices in traversal order, starting from the
/// smallest label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChargedGraph {
    pub charges: Vec<Charge>,
    pub cycles: Vec<Vec<usize>>,
}

impl ChargedGraph {
    pub fn charge(&self, v: usize) -> Charge {
        self.charges[v - 1]
    }
}

/// Partner of `v` in the identity pairing `(1 2|3 4|...)`.
#[inline]
fn e_partner(v: usize) -> usize {
    if v % 2 == 1 {
        v + 1
    } else {
        v - 1
    }
}

impl PairPartition {
    /// The identity pair partition `𝔢_k = (1 2|3 4|...|2k-1 2k)`.
    pub fn identity(k: usize) -> PairPartition {
        PairPartition {
            pairs: (0..k).map(|i| (2 * i as u8 + 1, 2 * i as u8 + 2)).collect(),
        }
    }

    pub fn empty() -> PairPartition {
        PairPartition { pairs: Vec::new() }
    }

    /// Build from arbitrary pairs; validates that they form a matching of
    /// `1..2k` and canonicalizes.
    pub fn from_pairs<I: IntoIterator<Item = (usize, usize)>>(it: I) -> Result<PairPartition, PairingError> {
        let raw: Vec<(usize, usize)> = it.into_iter().collect();
        let n = 2 * raw.len();
        if n > u8::MAX as usize {
            return Err(PairingError::NotAMatching(format!("{} pairs", raw.len())));
        }
        let mut seen = vec![false; n + 1];
        let mut pairs = Vec::with_capacity(raw.len());
        for &(a, b) in &raw {
            for v in [a, b] {
                if v == 0 || v > n {
                    return Err(PairingError::IndexOutOfRange { index: v, max: n });
                }
                if seen[v] {
                    return Err(PairingError::NotAMatching(format!("{v} repeated")));
                }
                seen[v] = true;
            }
            pairs.push((a.min(b) as u8, a.max(b) as u8));
        }
        pairs.sort_unstable();
        Ok(PairPartition { pairs })
    }

    /// `(σ(1) σ(2)|σ(3) σ(4)|...)` for a permutation given in one-line
    /// notation on `1..2k`.
    pub fn from_permutation(sigma: &[usize]) -> Result<PairPartition, PairingError> {
        if sigma.len() % 2 != 0 {
            return Err(PairingError::NotAMatching("odd length".into()));
        }
        PairPartition::from_pairs(sigma.chunks(2).map(|c| (c[0], c[1])))
    }

    fn from_partner(partner: &[usize]) -> PairPartition {
        let mut pairs = Vec::with_capacity(partner.len() / 2);
        for v in 1..partner.len() {
            let w = partner[v];
            if v < w {
                pairs.push((v as u8, w as u8));
            }
        }
        PairPartition { pairs }
    }

    /// Number of pairs `k`.
    pub fn k(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().map(|&(a, b)| (a as usize, b as usize))
    }

    /// Partner table indexed by label; entry 0 unused.
    pub fn partner_table(&self) -> Vec<usize> {
        let mut p = vec![0; 2 * self.k() + 1];
        for &(a, b) in &self.pairs {
            p[a as usize] = b as usize;
            p[b as usize] = a as usize;
        }
        p
    }

    pub fn partner(&self, v: usize) -> usize {
        for &(a, b) in &self.pairs {
            if a as usize == v {
                return b as usize;
            }
            if b as usize == v {
                return a as usize;
            }
        }
        panic!("label {v} not in pair partition {self}")
    }

    pub fn contains_pair(&self, a: usize, b: usize) -> bool {
        let (a, b) = (a.min(b), a.max(b));
        self.pairs.iter().any(|&(x, y)| x as usize == a && y as usize == b)
    }

    pub fn is_identity(&self) -> bool {
        self.pairs.iter().all(|&(a, b)| a % 2 == 1 && b == a + 1)
    }

    /// `𝔪↓`: drop the pair `{2k-1, 2k}`. `None` if it is not present.
    pub fn down(&self) -> Option<PairPartition> {
        let k = self.k();
        if k == 0 || !self.contains_pair(2 * k - 1, 2 * k) {
            return None;
        }
        let mut pairs = self.pairs.clone();
        pairs.retain(|&(a, _)| a as usize != 2 * k - 1);
        Some(PairPartition { pairs })
    }

    /// Append the pair `{2k+1, 2k+2}`.
    pub fn up(&self) -> PairPartition {
        let k = self.k() as u8;
        let mut pairs = self.pairs.clone();
        pairs.push((2 * k + 1, 2 * k + 2));
        PairPartition { pairs }
    }

    /// Relabelling action of the transposition `(a b)`.
    pub fn act(&self, a: usize, b: usize) -> Result<PairPartition, PairingError> {
        let n = 2 * self.k();
        for v in [a, b] {
            if v == 0 || v > n {
                return Err(PairingError::IndexOutOfRange { index: v, max: n });
            }
        }
        if a == b {
            return Err(PairingError::DegenerateTransposition(a, b));
        }
        Ok(self.act_unchecked(a, b))
    }

    pub(crate) fn act_unchecked(&self, a: usize, b: usize) -> PairPartition {
        let mut partner = self.partner_table();
        let (pa, pb) = (partner[a], partner[b]);
        if pa == b {
            return self.clone();
        }
        partner[a] = pb;
        partner[pb] = a;
        partner[b] = pa;
        partner[pa] = b;
        PairPartition::from_partner(&partner)
    }

    /// Relabelling action of a permutation in one-line notation on `1..2k`.
    pub fn permute(&self, sigma: &[usize]) -> Result<PairPartition, PairingError> {
        if sigma.len() != 2 * self.k() {
            return Err(PairingError::NotAMatching(format!(
                "permutation of length {} acting on P_{}",
                sigma.len(),
                self.k()
            )));
        }
        PairPartition::from_pairs(self.pairs().map(|(a, b)| (sigma[a - 1], sigma[b - 1])))
    }

    /// Cycles of `Γ(m)`, each starting at its smallest label and leaving it
    /// along the identity edge.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = 2 * self.k();
        let partner = self.partner_table();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut v = start;
            loop {
                seen[v] = true;
                cyc.push(v);
                let w = e_partner(v);
                seen[w] = true;
                cyc.push(w);
                v = partner[w];
                if v == start {
                    break;
                }
            }
            out.push(cyc);
        }
        out
    }

    /// Half-lengths of the cycles of `Γ(m)`.
    pub fn coset_type(&self) -> Partition {
        let mut parts: Vec<usize> = self.cycles().iter().map(|c| c.len() / 2).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).expect("cycle half-lengths form a partition")
    }

    /// Charge assignment: the largest label of each cycle is `+`, and
    /// charges alternate along the cycle.
    pub fn charges(&self) -> ChargedGraph {
        let n = 2 * self.k();
        let cycles = self.cycles();
        let mut charges = vec![Charge::Minus; n];
        for cyc in &cycles {
            let top = cyc.iter().enumerate().max_by_key(|(_, &v)| v).map(|(j, _)| j).unwrap();
            for (j, &v) in cyc.iter().enumerate() {
                charges[v - 1] = if (j + cyc.len() - top) % 2 == 0 { Charge::Plus } else { Charge::Minus };
            }
        }
        ChargedGraph { charges, cycles }
    }

    /// Weight of the transposition `(i j)` applied to `self`: `1` if `i` and
    /// `j` carry equal charge, `b` otherwise.
    pub fn step_weight(&self, i: usize, j: usize) -> Weight {
        let ch = self.charges();
        if ch.charge(i) == ch.charge(j) {
            Weight::One
        } else {
            Weight::B
        }
    }

    /// A transposition carrying `self` to `other`, if one exists.
    pub fn transposition_to(&self, other: &PairPartition) -> Option<(usize, usize)> {
        if self.k() != other.k() || self.k() == 0 {
            return None;
        }
        if self == other {
            let (a, b) = self.pairs[0];
            return Some((a as usize, b as usize));
        }
        let gone: Vec<(u8, u8)> = self.pairs.iter().filter(|p| !other.pairs.contains(p)).copied().collect();
        if gone.len() != 2 {
            return None;
        }
        let (p, q) = (gone[0], gone[1]);
        for i in [p.0, p.1] {
            for j in [q.0, q.1] {
                let (i, j) = (i as usize, j as usize);
                if &self.act_unchecked(i, j) == other {
                    return Some((i.min(j), i.max(j)));
                }
            }
        }
        None
    }

    /// Every transposition carrying `self` to `other`.
    pub fn all_transpositions_to(&self, other: &PairPartition) -> Vec<(usize, usize)> {
        let n = 2 * self.k();
        let mut out = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                if &self.act_unchecked(i, j) == other {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

/// The weight function on pairs of pair partitions.
pub fn omega(m: &PairPartition, n: &PairPartition) -> Weight {
    if m.k() != n.k() {
        return Weight::Zero;
    }
    if m.k() == 0 {
        return Weight::One;
    }
    match m.transposition_to(n) {
        None => Weight::Zero,
        Some((i, j)) => m.step_weight(i, j),
    }
}

/// The weight function as a polynomial in `b`.
pub fn omega_b(m: &PairPartition, n: &PairPartition) -> MPoly {
    omega(m, n).to_mpoly()
}

/// Whether `ι = (1 2)(3 4)...(2k-1 2k)` together with the given
/// transpositions generates a transitive subgroup of `S_2k`.
pub fn is_connected_factorisation(taus: &[(usize, usize)], k: usize) -> bool {
    let n = 2 * k;
    let mut parent: Vec<usize> = (0..=n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut classes = n;
    let mut union = |a: usize, b: usize, parent: &mut Vec<usize>| {
        let (ra, rb) = (find(parent, a), find(parent, b));
        if ra != rb {
            parent[ra] = rb;
            classes -= 1;
        }
    };
    for i in 0..k {
        union(2 * i + 1, 2 * i + 2, &mut parent);
    }
    for &(a, b) in taus {
        assert!(a >= 1 && b >= 1 && a <= n && b <= n, "transposition ({a} {b}) outside 1..={n}");
        union(a, b, &mut parent);
    }
    classes <= 1
}

/// All of `P_k` in lexicographic order of canonical pair lists.
pub fn all_pair_partitions(k: usize) -> Vec<PairPartition> {
    fn rec(free: &mut Vec<u8>, cur: &mut Vec<(u8, u8)>, out: &mut Vec<PairPartition>) {
        if free.is_empty() {
            out.push(PairPartition { pairs: cur.clone() });
            return;
        }
        let a = free.remove(0);
        for idx in 0..free.len() {
            let b = free.remove(idx);
            cur.push((a, b));
            rec(free, cur, out);
            cur.pop();
            free.insert(idx, b);
        }
        free.insert(0, a);
    }
    let mut free: Vec<u8> = (1..=2 * k as u8).collect();
    let mut out = Vec::new();
    rec(&mut free, &mut Vec::new(), &mut out);
    out
}

/// `i(a) = i(b)` for every pair `{a, b}` of `m`. `index[v - 1]` is `i(v)`.
pub fn admissible(m: &PairPartition, index: &[usize]) -> bool {
    index.len() == 2 * m.k() && m.pairs().all(|(a, b)| index[a - 1] == index[b - 1])
}

/// `i(a) = i(b)` exactly when `{a, b}` is a pair of `m`.
pub fn strongly_admissible(m: &PairPartition, index: &[usize]) -> bool {
    if !admissible(m, index) {
        return false;
    }
    let partner = m.partner_table();
    let n = index.len();
    (1..=n).all(|a| (a + 1..=n).all(|b| partner[a] == b || index[a - 1] != index[b - 1]))
}

impl fmt::Display for PairPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pairs.is_empty() {
            return f.write_str("(~)");
        }
        f.write_str("(")?;
        for (i, (a, b)) in self.pairs.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            write!(f, "{a} {b}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for PairPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for PairPartition {
    type Err = PairingError;

    /// Accepts `(1 4|2 3|5 6)`, `(14|23)` (single-digit labels written
    /// together), `1,4|2,3` and `(~)` for the empty pair partition.
    fn from_str(s: &str) -> Result<PairPartition, PairingError> {
        let bad = || PairingError::Parse(s.to_string());
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if inner.is_empty() || inner == "~" {
            return Ok(PairPartition::empty());
        }
        let mut pairs = Vec::new();
        for block in inner.split('|') {
            let tokens: Vec<&str> = block.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()).collect();
            let (a, b) = match tokens.as_slice() {
                [a, b] => (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?),
                [ab] if ab.len() == 2 && ab.chars().all(|c| c.is_ascii_digit()) => {
                    let d: Vec<usize> = ab.chars().map(|c| c.to_digit(10).unwrap() as usize).collect();
                    (d[0], d[1])
                }
                _ => return Err(bad()),
            };
            pairs.push((a, b));
        }
        PairPartition::from_pairs(pairs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pp(s: &str) -> PairPartition {
        s.parse().unwrap()
    }

    #[test]
    fn act_examples() {
        assert_eq!(PairPartition::identity(2).act(2, 3).unwrap(), pp("(13|24)"));
        assert_eq!(pp("(12|34)").act(1, 2).unwrap(), pp("(12|34)"));
        let m = pp("(1 8|2 6|3 9|4 10|5 7)");
        assert_eq!(m.act(3, 7).unwrap(), pp("(1 8|2 6|3 5|4 10|7 9)"));
        assert!(matches!(m.act(0, 3), Err(PairingError::IndexOutOfRange { .. })));
        assert!(matches!(m.act(3, 11), Err(PairingError::IndexOutOfRange { .. })));
    }

    #[test]
    fn coset_types() {
        assert_eq!(PairPartition::identity(3).coset_type().parts(), &[1, 1, 1]);
        assert_eq!(pp("(13|24)").coset_type().parts(), &[2]);
        let m = pp("(1 8|2 6|3 9|4 10|5 7)");
        assert_eq!(m.coset_type().size(), 5);
    }

    #[test]
    fn charge_examples() {
        let e1 = PairPartition::identity(1).charges();
        assert_eq!(e1.charge(2), Charge::Plus);
        assert_eq!(e1.charge(1), Charge::Minus);
        let m = pp("(1 8|2 6|3 9|4 10|5 7)").charges();
        assert_eq!(m.charge(3), Charge::Plus);
        assert_eq!(m.charge(7), Charge::Minus);
        let c = pp("(13|24)").charges();
        assert_eq!(
            [c.charge(4), c.charge(3), c.charge(2), c.charge(1)],
            [Charge::Plus, Charge::Minus, Charge::Minus, Charge::Plus]
        );
    }

    #[test]
    fn omega_examples() {
        let e2 = PairPartition::identity(2);
        let m = pp("(13|24)");
        assert_eq!(omega(&m, &m), Weight::B);
        assert_eq!(omega(&e2, &e2), Weight::B);
        assert_eq!(omega(&e2, &m), Weight::B);
        assert_eq!(omega(&m, &e2), Weight::One);
        assert_eq!(omega(&e2, &PairPartition::identity(3)), Weight::Zero);
        assert_eq!(omega(&PairPartition::empty(), &PairPartition::empty()), Weight::One);
        let big = pp("(1 8|2 6|3 9|4 10|5 7)");
        assert_eq!(omega(&big, &pp("(1 8|2 6|3 5|4 10|7 9)")), Weight::B);
        assert_eq!(omega_b(&e2, &m), MPoly::var(Var::B));
    }

    #[test]
    fn connectivity_examples() {
        assert!(is_connected_factorisation(&[], 1));
        assert!(!is_connected_factorisation(&[], 2));
        assert!(is_connected_factorisation(&[(2, 3)], 2));
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let p2 = all_pair_partitions(2);
        assert_eq!(p2, vec![pp("(12|34)"), pp("(13|24)"), pp("(14|23)")]);
        for k in 0..=6 {
            let all = all_pair_partitions(k);
            let dfact: usize = (1..=k).map(|i| 2 * i - 1).product();
            assert_eq!(all.len(), dfact);
            assert!(all.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn text_form_round_trips() {
        let m = pp("( 1 4 | 2 3 |5 6 )");
        assert_eq!(m.to_string(), "(1 4|2 3|5 6)");
        assert_eq!(m.to_string().parse::<PairPartition>().unwrap(), m);
        assert_eq!(pp("(~)"), PairPartition::empty());
        assert!("(1 2|2 3)".parse::<PairPartition>().is_err());
    }

    #[test]
    fn admissibility() {
        let m = pp("(12|34)");
        assert!(admissible(&m, &[1, 1, 1, 1]));
        assert!(!strongly_admissible(&m, &[1, 1, 1, 1]));
        assert!(strongly_admissible(&m, &[1, 1, 2, 2]));
        assert!(!admissible(&m, &[1, 2, 2, 2]));
    }
}
