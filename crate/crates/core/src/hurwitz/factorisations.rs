use super::{factorisation_length, weight_monomial, Genus};
use crate::exactnum::{MPoly, Rational};
use crate::memo::Memo;
use crate::pairings::{is_connected_factorisation, omega, PairPartition, Weight};
use crate::partitions::Partition;
use std::sync::OnceLock;

/// A monotone factorisation `τ_1 ∘ ... ∘ τ_r · m = e_k` with its statistics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorisation {
    /// `(a_i, b_i)` with `a_i < b_i`, `b_i` odd and nondecreasing.
    pub transpositions: Vec<(usize, usize)>,
    pub flip: usize,
    pub hive: usize,
    pub connected: bool,
}

/// The pair partition of coset type `λ` whose blocks are
/// `{s+2, s+3}, ..., {s+2l, s+1}` on consecutive label ranges.
pub fn representative(lambda: &Partition) -> PairPartition {
    let mut pairs = Vec::with_capacity(lambda.size());
    let mut s = 0;
    for &l in lambda.parts() {
        for j in 1..l {
            pairs.push((s + 2 * j, s + 2 * j + 1));
        }
        pairs.push((s + 2 * l, s + 1));
        s += 2 * l;
    }
    PairPartition::from_pairs(pairs).expect("blocks form a matching")
}

struct Walk<'a, F: FnMut(&Factorisation)> {
    k: usize,
    path: Vec<(usize, usize)>,
    need_connected: bool,
    visit: &'a mut F,
}

impl<F: FnMut(&Factorisation)> Walk<'_, F> {
    /// Walk the b-Weingarten graph from `cur` at level `j`; `here` counts the
    /// steps already taken at this level.
    fn go(&mut self, cur: &PairPartition, j: usize, remaining: usize, flip: usize, hive: usize, here: usize) {
        if j == 0 {
            if remaining == 0 {
                let transpositions: Vec<_> = self.path.iter().rev().copied().collect();
                let connected = is_connected_factorisation(&transpositions, self.k);
                if self.need_connected && !connected {
                    return;
                }
                (self.visit)(&Factorisation { transpositions, flip, hive, connected });
            }
            return;
        }
        let lam = cur.coset_type();
        if remaining < lam.size() - lam.len() {
            return;
        }
        if let Some(d) = cur.down() {
            self.go(&d, j - 1, remaining, flip, hive + usize::from(here > 0), 0);
        }
        if remaining == 0 {
            return;
        }
        let top = 2 * j - 1;
        for a in 1..top {
            let next = cur.act_unchecked(a, top);
            let extra = match omega(cur, &next) {
                Weight::One => 0,
                Weight::B => 1,
                Weight::Zero => unreachable!("adjacent vertices have nonzero weight"),
            };
            self.path.push((a, top));
            self.go(&next, j, remaining - 1, flip + extra, hive, here + 1);
            self.path.pop();
        }
    }
}

/// Visit every monotone factorisation of `m` of length exactly `r`.
pub fn for_each_factorisation<F: FnMut(&Factorisation)>(m: &PairPartition, r: usize, connected_only: bool, mut visit: F) {
    let mut walk = Walk { k: m.k(), path: Vec::with_capacity(r), need_connected: connected_only, visit: &mut visit };
    walk.go(m, m.k(), r, 0, 0, 0);
}

pub fn monotone_factorisations(m: &PairPartition, r: usize) -> Vec<Factorisation> {
    let mut out = Vec::new();
    for_each_factorisation(m, r, false, |f| out.push(f.clone()));
    out
}

fn weighted_count(m: &PairPartition, r: usize, connected_only: bool) -> MPoly {
    let mut acc = MPoly::zero();
    let one = Rational::from_integer(1.into());
    for_each_factorisation(m, r, connected_only, |f| acc.add_term(weight_monomial(f.flip, f.hive), one.clone()));
    acc
}

/// `h_r^{(bt)}` at a given pair partition.
pub fn h_bt_at(m: &PairPartition, r: usize) -> MPoly {
    weighted_count(m, r, false)
}

/// `h_r^{(bt)}(λ) = Σ b^flip t^hive` over all monotone factorisations of
/// length `r` of the representative of `λ`.
pub fn h_bt(lambda: &Partition, r: usize) -> MPoly {
    static CACHE: OnceLock<Memo<(Partition, usize), MPoly>> = OnceLock::new();
    CACHE.get_or_init(Memo::new).get_or_compute(&(lambda.clone(), r), || h_bt_at(&representative(lambda), r))
}

/// `H_{g,n}(λ)` from connected factorisations, divided by `Π λ_i`.
pub fn hurwitz_h_enum(g: Genus, lambda: &Partition) -> MPoly {
    let Some(r) = factorisation_length(g, lambda.parts()) else {
        return MPoly::zero();
    };
    let count = weighted_count(&representative(lambda), r, true);
    count.scale(&Rational::new(1.into(), lambda.part_product().into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Var;
    use crate::pairings::all_pair_partitions;

    fn pp(s: &str) -> PairPartition {
        s.parse().unwrap()
    }

    #[test]
    fn representatives_have_their_type() {
        for k in 1..=5 {
            for lam in crate::partitions::all_partitions(k) {
                assert_eq!(representative(&lam).coset_type(), lam);
            }
        }
    }

    #[test]
    fn small_factorisations() {
        let e = monotone_factorisations(&PairPartition::identity(3), 0);
        assert_eq!(e, vec![Factorisation { transpositions: vec![], flip: 0, hive: 0, connected: false }]);
        let f = monotone_factorisations(&pp("(13|24)"), 1);
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].transpositions, vec![(2, 3)]);
        assert_eq!((f[0].flip, f[0].hive, f[0].connected), (0, 1, true));
    }

    #[test]
    fn every_factorisation_reaches_identity() {
        for m in all_pair_partitions(3) {
            for r in 0..=4 {
                for f in monotone_factorisations(&m, r) {
                    let mut cur = m.clone();
                    for &(a, b) in f.transpositions.iter().rev() {
                        cur = cur.act(a, b).unwrap();
                    }
                    assert_eq!(cur, PairPartition::identity(3));
                    assert!(f.transpositions.windows(2).all(|w| w[0].1 <= w[1].1));
                    assert!(f.transpositions.iter().all(|&(a, b)| a < b && b % 2 == 1));
                }
            }
        }
    }

    #[test]
    fn level_zero_counts() {
        assert!(h_bt(&"1,1,1".parse().unwrap(), 0).is_one());
        assert!(h_bt(&"2,1".parse().unwrap(), 0).is_zero());
        assert_eq!(h_bt(&"2".parse().unwrap(), 1), MPoly::var(Var::T));
    }
}
