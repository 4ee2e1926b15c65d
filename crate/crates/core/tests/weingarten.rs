use proptest::prelude::*;
use wgcalc::exactnum::{frac_equal, series_at_infinity, MPoly, RatFrac, Rational, Var};
use wgcalc::hurwitz::h_bt_at;
use wgcalc::pairings::all_pair_partitions;
use wgcalc::weingarten::{
    integrate_monomial, jm_product_check, path_series, wg_series, wg_solve, wg_solve_full, GraphProfile, ProfileName,
};

#[test]
fn values_depend_only_on_coset_type() {
    for name in [ProfileName::O, ProfileName::A, ProfileName::BT] {
        let profile = GraphProfile::new(name);
        for k in 1..=3 {
            let table = wg_solve(k, &profile).unwrap();
            assert!(table.full_checked());
            for (m, v) in wg_solve_full(k, &profile).unwrap() {
                assert!(frac_equal(&v, &table.value(&m).unwrap()), "{name} at {m}");
            }
        }
        // level 4 is checked against every relation of the full system
        assert_eq!(wg_solve(4, &profile).unwrap().values().len(), 105);
    }
}

#[test]
fn b_one_specialization_chain() {
    let one = Rational::from_integer(1.into());
    for (deformed, base) in [(ProfileName::BT, ProfileName::A), (ProfileName::BOnly, ProfileName::O)] {
        assert_eq!(deformed.at_b_one(), base);
        for k in 1..=3 {
            let d = wg_solve(k, &GraphProfile::new(deformed)).unwrap();
            let b = wg_solve(k, &GraphProfile::new(base)).unwrap();
            for (lam, v) in d.class_values() {
                let at_one = v.specialize(Var::B, &one).unwrap();
                assert!(frac_equal(&at_one, &b.value_by_type(&lam).unwrap()), "{deformed} vs {base} at {lam}");
            }
        }
    }
}

#[test]
fn large_n_expansion_counts_factorisations() {
    let one_minus_t = RatFrac::from_poly(&MPoly::one() - &MPoly::var(Var::T));
    for k in 1..=3 {
        let table = wg_solve(k, &GraphProfile::bt()).unwrap();
        for m in all_pair_partitions(k) {
            let s = wg_series(&table.value(&m).unwrap(), 4).unwrap();
            for r in 0..=4 {
                let sign = RatFrac::int(if r % 2 == 0 { 1 } else { -1 });
                let want = &RatFrac::from_poly(h_bt_at(&m, r)) / &one_minus_t.pow(k as u32);
                assert!(frac_equal(&(s.coeff(r).unwrap() * &sign), &want), "{m}, r = {r}");
            }
        }
    }
}

#[test]
fn path_sums_match_the_solution() {
    for name in ProfileName::all() {
        let profile = GraphProfile::new(name);
        for k in 1..=3 {
            let table = wg_solve(k, &profile).unwrap();
            for m in all_pair_partitions(k) {
                let v = table.value(&m).unwrap();
                let exact = if profile.has_c_edges { wg_series(&v, 4) } else { series_at_infinity(&v, Var::N, 4) }.unwrap();
                let paths = path_series(&m, &profile, 4);
                for r in 0..=4 {
                    assert!(frac_equal(exact.coeff(r).unwrap(), paths.coeff(r).unwrap()), "{name} at {m}, order {r}");
                }
            }
        }
    }
}

#[test]
fn product_formula() {
    for k in 1..=3 {
        assert!(jm_product_check(k, &GraphProfile::a()).unwrap(), "A, k = {k}");
        assert!(jm_product_check(k, &GraphProfile::bt()).unwrap(), "bt, k = {k}");
    }
    assert!(jm_product_check(2, &GraphProfile::o()).is_err());
}

#[test]
fn trace_of_the_projection() {
    // Σ_i ∫ A_ii = Tr(I_{M,N}) = M
    for (m, n) in [(1u64, 2u64), (2, 5), (3, 4)] {
        let total: Rational = (1..=n as usize).map(|i| integrate_monomial(&[i, i], m, n).unwrap()).sum();
        assert_eq!(total, Rational::from_integer(m.into()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn moments_are_invariant_under_relabelling(
        index in prop::collection::vec(1usize..=4, 4),
        relabel in Just(vec![1usize, 2, 3, 4]).prop_shuffle(),
        m in 1u64..4,
    ) {
        let n = 4;
        let moved: Vec<usize> = index.iter().map(|&i| relabel[i - 1]).collect();
        prop_assert_eq!(integrate_monomial(&index, m, n).unwrap(), integrate_monomial(&moved, m, n).unwrap());
    }

    #[test]
    fn moments_are_invariant_under_pair_swaps(index in prop::collection::vec(1usize..=5, 4), m in 1u64..5) {
        // A is symmetric, so A_{ab} A_{cd} = A_{ba} A_{dc} = A_{cd} A_{ab}
        let swapped = vec![index[1], index[0], index[3], index[2]];
        let reordered = vec![index[2], index[3], index[0], index[1]];
        let v = integrate_monomial(&index, m, 5).unwrap();
        prop_assert_eq!(&v, &integrate_monomial(&swapped, m, 5).unwrap());
        prop_assert_eq!(&v, &integrate_monomial(&reordered, m, 5).unwrap());
    }
}
