use proptest::prelude::*;
use std::collections::BTreeMap;
use wgcalc::exactnum::{BFrac, Rational, UniPoly};
use wgcalc::jmops::{ch_b, p_vector, JOperator};
use wgcalc::pairings::{all_pair_partitions, omega, Charge, PairPartition, Weight};
use wgcalc::partitions::{
    all_partitions, contents_multiset_uni, dimension, hook_products_uni, standard_tableaux, Partition,
};
use wgcalc::symfunc::{jack, monomial_in_powersum, powersum_in_monomial, to_monomial_basis, SymFunc};

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..7, 0..6).prop_map(|parts| Partition::from_composition(&parts).unwrap())
}

/// A random element of the hyperoctahedral group `H_k` in one-line
/// notation: permute the blocks `{2i-1, 2i}` and optionally swap inside each.
fn hyperoctahedral(k: usize) -> impl Strategy<Value = Vec<usize>> {
    (Just((0..k).collect::<Vec<_>>()).prop_shuffle(), prop::collection::vec(any::<bool>(), k)).prop_map(move |(blocks, flips)| {
        let mut sigma = vec![0; 2 * k];
        for (i, (&to, &flip)) in blocks.iter().zip(&flips).enumerate() {
            let (a, b) = if flip { (2 * to + 2, 2 * to + 1) } else { (2 * to + 1, 2 * to + 2) };
            sigma[2 * i] = a;
            sigma[2 * i + 1] = b;
        }
        sigma
    })
}

fn pair_partition(max_k: usize) -> impl Strategy<Value = PairPartition> {
    (1..=max_k).prop_flat_map(|k| Just((1..=2 * k).collect::<Vec<_>>()).prop_shuffle()).prop_map(|perm| {
        PairPartition::from_pairs(perm.chunks(2).map(|c| (c[0], c[1]))).unwrap()
    })
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(lam in partition()) {
        prop_assert_eq!(lam.conjugate().conjugate(), lam.clone());
        prop_assert_eq!(lam.conjugate().size(), lam.size());
        prop_assert_eq!(lam.to_string().parse::<Partition>().unwrap(), lam);
    }

    #[test]
    fn content_sum_identity(lam in partition()) {
        // (b+1) n(λ') - n(λ), with n(λ) = Σ (i-1) λ_i
        let n = |p: &Partition| p.parts().iter().enumerate().map(|(i, &x)| (i * x) as i64).sum::<i64>();
        let (a, c) = (n(&lam.conjugate()), n(&lam));
        let sum = contents_multiset_uni(&lam).iter().fold(UniPoly::zero(), |acc, x| &acc + x);
        prop_assert_eq!(sum, UniPoly::from_ints(&[a - c, a]));
    }

    #[test]
    fn hooks_at_zero(lam in partition()) {
        let (h, hp) = hook_products_uni(&lam);
        let zero = Rational::from_integer(0.into());
        let h0 = h.eval(&zero);
        prop_assert_eq!(&h0, &hp.eval(&zero));
        let fact: u128 = (1..=lam.size() as u128).product();
        let q = Rational::from_integer(fact.into()) / h0;
        prop_assert!(q.is_integer() && q > zero);
    }

    #[test]
    fn coset_type_is_hyperoctahedrally_invariant(
        (m, sigma) in (1usize..=4).prop_flat_map(|k| (pair_partition(k).prop_filter("level", move |m| m.k() == k), hyperoctahedral(k)))
    ) {
        prop_assert_eq!(m.permute(&sigma).unwrap().coset_type(), m.coset_type());
    }

    #[test]
    fn pair_partition_text_roundtrip(m in pair_partition(5)) {
        prop_assert_eq!(m.to_string().parse::<PairPartition>().unwrap(), m.clone());
        prop_assert_eq!(m.coset_type().size(), m.k());
    }
}

#[test]
fn tableaux_count_involutions() {
    let involutions = [1, 2, 4, 10, 26, 76];
    for (k, &want) in (1..=6).zip(&involutions) {
        let total: usize = all_partitions(k).iter().map(|l| standard_tableaux(l).len()).sum();
        assert_eq!(total, want, "k = {k}");
        for lam in all_partitions(k) {
            assert_eq!(standard_tableaux(&lam).len() as u128, dimension(&lam), "{lam}");
        }
    }
}

#[test]
fn double_factorial_counts() {
    let mut want = 1usize;
    for k in 1..=6 {
        want *= 2 * k - 1;
        assert_eq!(all_pair_partitions(k).len(), want, "k = {k}");
    }
}

#[test]
fn weight_function_is_well_defined() {
    for k in 2..=3 {
        let all = all_pair_partitions(k);
        for m in &all {
            for n in &all {
                let ts = m.all_transpositions_to(n);
                let w = omega(m, n);
                assert_eq!(w == Weight::Zero, ts.is_empty(), "{m} -> {n}");
                if m != n {
                    assert!(ts.len() <= 2);
                    for &(i, j) in &ts {
                        assert_eq!(m.step_weight(i, j), w, "{m} -> {n} via ({i} {j})");
                    }
                }
            }
        }
    }
}

#[test]
fn charges_are_balanced() {
    for k in 1..=4 {
        for m in all_pair_partitions(k) {
            let ch = m.charges();
            let plus = ch.charges.iter().filter(|&&c| c == Charge::Plus).count();
            assert_eq!(plus, k, "{m}");
            for cycle in &ch.cycles {
                let top = *cycle.iter().max().unwrap();
                assert_eq!(ch.charge(top), Charge::Plus);
                for (a, b) in m.pairs() {
                    assert_ne!(ch.charge(a), ch.charge(b));
                }
                for v in (1..=2 * k).step_by(2) {
                    assert_ne!(ch.charge(v), ch.charge(v + 1));
                }
            }
        }
    }
}

#[test]
fn jm_operator_columns() {
    for k in 1..=4 {
        let n = all_pair_partitions(k).len();
        for i in 1..=k {
            let op = JOperator::new(k, i, true).unwrap();
            for col in 0..n {
                let entries = op.column(col);
                assert!(entries.iter().all(|(_, w)| matches!(w, Weight::One | Weight::B)));
                // at b = 1 every weight is 1
                assert_eq!(entries.len(), 2 * i - 2);
            }
        }
    }
}

#[test]
fn characteristic_map_recovers_the_class() {
    for k in 1..=4 {
        for mu in all_partitions(k) {
            let f = ch_b(&p_vector(&mu)).unwrap();
            let support: Vec<&Partition> = f.terms().map(|(p, _)| p).collect();
            assert_eq!(support, vec![&mu]);
        }
    }
}

#[test]
fn monomial_and_powersum_are_inverse() {
    for k in 1..=6 {
        for mu in all_partitions(k) {
            let back = to_monomial_basis(&monomial_in_powersum(&mu));
            let want: BTreeMap<Partition, BFrac> = [(mu.clone(), BFrac::one())].into();
            assert_eq!(back, want, "m_{mu}");
            let p_in_m = powersum_in_monomial(&mu);
            let mut total = SymFunc::zero();
            for (lam, c) in &p_in_m {
                total = &total + &monomial_in_powersum(lam).scale_rat(c);
            }
            assert_eq!(total, SymFunc::p(mu.clone()), "p_{mu}");
        }
    }
}

/// `χ^λ(μ)` by removing border strips, with the partition encoded as a
/// bead configuration.
fn character(lam: &[usize], mu: &[usize]) -> i64 {
    let Some((&r, rest)) = mu.split_first() else {
        return 1;
    };
    let n = lam.len();
    let beads: Vec<i64> = lam.iter().enumerate().map(|(i, &p)| p as i64 + (n - 1 - i) as i64).collect();
    let mut total = 0;
    for (i, &x) in beads.iter().enumerate() {
        let y = x - r as i64;
        if y < 0 || beads.contains(&y) {
            continue;
        }
        let height = beads.iter().filter(|&&z| z > y && z < x).count();
        let mut next = beads.clone();
        next[i] = y;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<usize> = next.iter().enumerate().map(|(j, &z)| (z - (n - 1 - j) as i64) as usize).filter(|&p| p > 0).collect();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * character(&parts, rest);
    }
    total
}

fn z(mu: &Partition) -> u128 {
    let mut out = 1u128;
    for part in 1..=mu.size() {
        let m = mu.parts().iter().filter(|&&p| p == part).count() as u128;
        for j in 1..=m {
            out *= part as u128 * j;
        }
    }
    out
}

#[test]
fn jack_at_zero_is_a_scaled_schur_function() {
    let zero = Rational::from_integer(0.into());
    for k in 1..=4 {
        for lam in all_partitions(k) {
            let j0 = jack(&lam).unwrap().specialize_b(&zero);
            let fact: u128 = (1..=k as u128).product();
            let scale = Rational::new(fact.into(), dimension(&lam).into());
            for mu in all_partitions(k) {
                let s_coeff = Rational::new(character(lam.parts(), mu.parts()).into(), z(&mu).into());
                let got = j0.get(&mu).cloned().unwrap_or(zero.clone());
                assert_eq!(got, &scale * &s_coeff, "J_{lam} at b = 0, coefficient of p_{mu}");
            }
        }
    }
}
