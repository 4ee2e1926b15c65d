//! Integer partitions, b-contents and b-hooks, dominance order, standard
//! Young tableaux.
//!
//! For a box in row `i`, column `j` (1-based):
//!
//!   c_b = (b+1)(j-1) - (i-1)
//!   h_b = (b+1) a + l + 1,   h'_b = (b+1) a + l + b + 1
//!
//! with arm `a` and leg `l`; `hook_b` and `hook'_b` are products over boxes.

use crate::exactnum::{MPoly, UniPoly, Var};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("parts are not weakly decreasing: {0:?}")]
    NotDecreasing(Vec<usize>),
    #[error("zero part in {0:?}")]
    ZeroPart(Vec<usize>),
    #[error("cannot parse partition {0:?}")]
    Parse(String),
}

/// Weakly decreasing list of positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Partition, PartitionError> {
        if parts.contains(&0) {
            return Err(PartitionError::ZeroPart(parts));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing(parts));
        }
        Ok(Partition(parts))
    }

    /// Sort a composition into a partition.
    pub fn from_composition(parts: &[usize]) -> Result<Partition, PartitionError> {
        let mut v = parts.to_vec();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v)
    }

    pub fn empty() -> Partition {
        Partition(vec![])
    }

    /// `(1^k)`.
    pub fn column(k: usize) -> Partition {
        Partition(vec![1; k])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts `l(lambda)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition((1..=first).map(|j| self.0.iter().filter(|&&p| p >= j).count()).collect())
    }

    /// Boxes `(row, col)`, 1-based, row-major.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| (i + 1, j)))
    }

    pub fn arm(&self, i: usize, j: usize) -> usize {
        self.0[i - 1] - j
    }

    pub fn leg(&self, i: usize, j: usize) -> usize {
        self.0[i..].iter().filter(|&&p| p >= j).count()
    }

    /// `m_i(lambda)` for `i = 1..=max part`, index 0 unused.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.0.first().copied().unwrap_or(0) + 1];
        for &p in &self.0 {
            m[p] += 1;
        }
        m
    }

    /// `n(lambda) = sum (i-1) lambda_i`.
    pub fn n_stat(&self) -> usize {
        self.0.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// Remove one part equal to `p` (no-op if absent).
    pub fn without_part(&self, p: usize) -> Partition {
        let mut v = self.0.clone();
        if let Some(pos) = v.iter().position(|&x| x == p) {
            v.remove(pos);
        }
        Partition(v)
    }

    /// Add one part.
    pub fn with_part(&self, p: usize) -> Partition {
        let mut v = self.0.clone();
        v.push(p);
        Partition::from_composition(&v).expect("positive parts")
    }

    /// Product of the parts.
    pub fn part_product(&self) -> u128 {
        self.0.iter().map(|&p| p as u128).product()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Accepts `2,1`, `(2,1)`, `2 1`; composition input is sorted.
impl FromStr for Partition {
    type Err = PartitionError;
    fn from_str(s: &str) -> Result<Partition, PartitionError> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Result<Vec<usize>, _> = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>())
            .collect();
        let parts = parts.map_err(|_| PartitionError::Parse(s.to_string()))?;
        Partition::from_composition(&parts)
    }
}

// ---------------------------------------------------------------------------
// b-statistics

/// `c_b(i, j)` as a polynomial in `b`.
pub fn b_content_uni(i: usize, j: usize) -> UniPoly {
    let (i, j) = (i as i64, j as i64);
    UniPoly::from_ints(&[(j - 1) - (i - 1), j - 1])
}

pub fn b_content(i: usize, j: usize) -> MPoly {
    b_content_uni(i, j).to_mpoly(Var::B)
}

/// `(hook_b, hook'_b)` as polynomials in `b`.
pub fn hook_products_uni(lambda: &Partition) -> (UniPoly, UniPoly) {
    let mut h = UniPoly::one();
    let mut hp = UniPoly::one();
    for (i, j) in lambda.boxes() {
        let a = lambda.arm(i, j) as i64;
        let l = lambda.leg(i, j) as i64;
        h = &h * &UniPoly::from_ints(&[a + l + 1, a]);
        hp = &hp * &UniPoly::from_ints(&[a + l + 1, a + 1]);
    }
    (h, hp)
}

pub fn hook_products(lambda: &Partition) -> (MPoly, MPoly) {
    let (h, hp) = hook_products_uni(lambda);
    (h.to_mpoly(Var::B), hp.to_mpoly(Var::B))
}

/// `cont_b(lambda)` in row-major box order.
pub fn contents_multiset_uni(lambda: &Partition) -> Vec<UniPoly> {
    lambda.boxes().map(|(i, j)| b_content_uni(i, j)).collect()
}

pub fn contents_multiset(lambda: &Partition) -> Vec<MPoly> {
    lambda.boxes().map(|(i, j)| b_content(i, j)).collect()
}

/// `z_lambda = prod_i i^{m_i} m_i!`.
pub fn z_lambda(lambda: &Partition) -> u128 {
    let mut z: u128 = 1;
    for (i, &m) in lambda.multiplicities().iter().enumerate().skip(1) {
        for k in 1..=m {
            z *= (i * k) as u128;
        }
    }
    z
}

/// `dim lambda = |lambda|! / hook_0(lambda)`.
pub fn dimension(lambda: &Partition) -> u128 {
    let n = lambda.size() as u128;
    let fact: u128 = (1..=n).product();
    let hook0: u128 = lambda
        .boxes()
        .map(|(i, j)| (lambda.arm(i, j) + lambda.leg(i, j) + 1) as u128)
        .product();
    fact / hook0
}

// ---------------------------------------------------------------------------
// enumeration and order

/// All partitions of `k` in reverse lexicographic order, `(k)` first.
pub fn all_partitions(k: usize) -> Vec<Partition> {
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, k, &mut Vec::new(), &mut out);
    out
}

/// `lambda` dominates `mu` (weakly); both of the same size.
pub fn dominates(lambda: &Partition, mu: &Partition) -> bool {
    if lambda.size() != mu.size() {
        return false;
    }
    let (mut sl, mut sm) = (0usize, 0usize);
    let n = lambda.len().max(mu.len());
    for i in 0..n {
        sl += lambda.0.get(i).copied().unwrap_or(0);
        sm += mu.0.get(i).copied().unwrap_or(0);
        if sl < sm {
            return false;
        }
    }
    true
}

/// Strict dominance `mu < lambda`.
pub fn dominance_less(mu: &Partition, lambda: &Partition) -> bool {
    mu != lambda && dominates(lambda, mu)
}

// ---------------------------------------------------------------------------
// tableaux

/// Standard Young tableau, stored row-major.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Option<Tableau> {
        let t = Tableau { rows };
        let shape: Vec<usize> = t.rows.iter().map(|r| r.len()).collect();
        Partition::new(shape).ok()?;
        let n = t.size();
        let mut seen = vec![false; n + 1];
        for r in &t.rows {
            for &x in r {
                if x == 0 || x > n || seen[x] {
                    return None;
                }
                seen[x] = true;
            }
        }
        for (i, r) in t.rows.iter().enumerate() {
            for j in 0..r.len() {
                if j > 0 && r[j - 1] >= r[j] {
                    return None;
                }
                if i > 0 && t.rows[i - 1][j] >= r[j] {
                    return None;
                }
            }
        }
        Some(t)
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition(self.rows.iter().map(|r| r.len()).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    /// `(row, col)` of the box labelled `k`, 1-based.
    pub fn position(&self, k: usize) -> Option<(usize, usize)> {
        for (i, r) in self.rows.iter().enumerate() {
            if let Some(j) = r.iter().position(|&x| x == k) {
                return Some((i + 1, j + 1));
            }
        }
        None
    }

    /// `c_b` of the box labelled `k`.
    pub fn content_of(&self, k: usize) -> UniPoly {
        let (i, j) = self.position(k).expect("label present");
        b_content_uni(i, j)
    }

    /// Remove the box with the largest label.
    pub fn remove_max(&self) -> Tableau {
        let n = self.size();
        let mut rows = self.rows.clone();
        for r in rows.iter_mut() {
            r.retain(|&x| x != n);
        }
        rows.retain(|r| !r.is_empty());
        Tableau { rows }
    }

    /// Sub-tableau of labels `1..=j`.
    pub fn restrict(&self, j: usize) -> Tableau {
        let rows: Vec<Vec<usize>> = self
            .rows
            .iter()
            .map(|r| r.iter().copied().filter(|&x| x <= j).collect::<Vec<_>>())
            .filter(|r: &Vec<usize>| !r.is_empty())
            .collect();
        Tableau { rows }
    }

    /// Tableaux obtained by adding a box labelled `size+1` at each addable corner.
    pub fn extensions(&self) -> Vec<Tableau> {
        let next = self.size() + 1;
        let mut out = Vec::new();
        for i in 0..=self.rows.len() {
            let len = self.rows.get(i).map(|r| r.len()).unwrap_or(0);
            let above = if i == 0 { usize::MAX } else { self.rows[i - 1].len() };
            if len < above {
                let mut rows = self.rows.clone();
                if i == rows.len() {
                    rows.push(vec![]);
                }
                rows[i].push(next);
                out.push(Tableau { rows });
            }
        }
        out
    }

    fn flat(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join(" / "))
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All standard Young tableaux of shape `lambda`, ordered lexicographically
/// by their row-major reading.
pub fn standard_tableaux(lambda: &Partition) -> Vec<Tableau> {
    let n = lambda.size();
    let mut level = vec![Tableau { rows: vec![] }];
    for _ in 0..n {
        let mut next = Vec::new();
        for t in &level {
            for e in t.extensions() {
                let fits = e.rows.len() <= lambda.len()
                    && e.rows.iter().zip(lambda.parts()).all(|(r, &p)| r.len() <= p);
                if fits {
                    next.push(e);
                }
            }
        }
        level = next;
    }
    level.sort_by_key(|t| t.flat());
    level
}

/// All standard tableaux with `k` boxes: shapes in `all_partitions` order,
/// tableaux in lexicographic order within each shape.
pub fn all_tableaux(k: usize) -> Vec<Tableau> {
    all_partitions(k).iter().flat_map(standard_tableaux).collect()
}

/// `sum of contents = (b+1) n(lambda') - n(lambda)` as a polynomial in `b`.
pub fn content_sum_closed_form(lambda: &Partition) -> UniPoly {
    let a = lambda.conjugate().n_stat() as i64;
    let c = lambda.n_stat() as i64;
    UniPoly::from_ints(&[a - c, a])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn contents_from_the_figure() {
        assert_eq!(b_content_uni(1, 1), UniPoly::zero());
        assert_eq!(b_content_uni(1, 5), UniPoly::from_ints(&[4, 4]));
        assert_eq!(b_content_uni(4, 1), UniPoly::from_ints(&[-3]));
    }

    #[test]
    fn hook_lengths() {
        let lam = p(&[5, 4, 4, 2]);
        // box (1,1): arm 4, leg 3 -> 4(b+1) + 3 + 1
        let a = lam.arm(1, 1) as i64;
        let l = lam.leg(1, 1) as i64;
        assert_eq!(UniPoly::from_ints(&[a + l + 1, a]), UniPoly::from_ints(&[8, 4]));
        assert_eq!(hook_products_uni(&p(&[1])), (UniPoly::one(), UniPoly::linear(1, 1)));
        let (h, hp) = hook_products_uni(&p(&[2]));
        assert_eq!(h, UniPoly::linear(1, 2));
        assert_eq!(hp, &UniPoly::linear(2, 2) * &UniPoly::linear(1, 1));
    }

    #[test]
    fn tableaux_counts() {
        assert_eq!(standard_tableaux(&p(&[1, 1, 1])).len(), 1);
        assert_eq!(standard_tableaux(&p(&[2, 1])).len(), 2);
        let inv = [1, 2, 4, 10, 26];
        for k in 1..=5 {
            assert_eq!(all_tableaux(k).len(), inv[k - 1]);
        }
    }

    #[test]
    fn z_values() {
        assert_eq!(z_lambda(&p(&[1, 1])), 2);
        assert_eq!(z_lambda(&p(&[2])), 2);
        assert_eq!(z_lambda(&p(&[3, 1, 1])), 6);
    }

    #[test]
    fn partitions_in_reverse_lex() {
        let ps = all_partitions(4);
        let want: Vec<Partition> =
            [&[4][..], &[3, 1], &[2, 2], &[2, 1, 1], &[1, 1, 1, 1]].iter().map(|v| p(v)).collect();
        assert_eq!(ps, want);
        assert!(dominance_less(&p(&[2, 2]), &p(&[3, 1])));
        assert!(!dominance_less(&p(&[3, 3]), &p(&[4, 1, 1])));
        assert!(!dominance_less(&p(&[4, 1, 1]), &p(&[3, 3])));
    }

    #[test]
    fn parse_accepts_compositions() {
        assert_eq!("1,2".parse::<Partition>().unwrap(), p(&[2, 1]));
        assert_eq!("(3, 1,1)".parse::<Partition>().unwrap(), p(&[3, 1, 1]));
        assert!("2,x".parse::<Partition>().is_err());
    }
}
