use proptest::prelude::*;
use wgcalc::exactnum::{graded_series_log, MPoly, Monomial, PolySeries, RatFrac, Rational, Truncation, Var};
use wgcalc::hurwitz::{
    commutator_residual, connected_series, factorisation_length, h_bt, h_bt_at, hurwitz_h, hurwitz_h_enum, hurwitz_h_jack,
    lambda_poly_check, random_series, virasoro_apply, z_from_recursion, Genus, VirasoroForm,
};
use wgcalc::pairings::all_pair_partitions;
use wgcalc::partitions::{all_partitions, Partition};

fn compositions(max_size: usize, max_len: usize) -> Vec<Partition> {
    (1..=max_size).flat_map(all_partitions).filter(|p| p.len() <= max_len).collect()
}

#[test]
fn recursion_matches_enumeration() {
    let mut cells = 0;
    for mu in compositions(6, 6) {
        for two_g in 0..=6 {
            let g = Genus(two_g);
            match factorisation_length(g, mu.parts()) {
                Some(r) if r <= 6 => {}
                _ => continue,
            }
            assert_eq!(hurwitz_h(g, mu.parts()), hurwitz_h_enum(g, &mu), "g = {g}, mu = {mu}");
            cells += 1;
        }
    }
    assert!(cells > 40);
}

#[test]
fn recursion_matches_jack_extraction() {
    for mu in compositions(4, 4) {
        for two_g in 0..=3 {
            let g = Genus(two_g);
            if factorisation_length(g, mu.parts()).map_or(true, |r| r > 4) {
                continue;
            }
            assert_eq!(hurwitz_h(g, mu.parts()), hurwitz_h_jack(g, &mu).unwrap(), "g = {g}, mu = {mu}");
        }
    }
}

#[test]
fn disconnected_numbers_ignore_the_representative() {
    for k in 1..=3 {
        for m in all_pair_partitions(k) {
            for r in 0..=5 {
                assert_eq!(h_bt_at(&m, r), h_bt(&m.coset_type(), r), "{m}, r = {r}");
            }
        }
    }
}

#[test]
fn log_of_z_is_the_connected_series() {
    let trunc = Truncation::total(&[Var::Z], 4).with_cap(Var::Hbar, 6);
    let z = z_from_recursion(4, 6).unwrap();
    let f = graded_series_log(&z, &trunc).unwrap();
    assert_eq!(f.sub(&connected_series(4, 6)).truncate(&trunc), PolySeries::zero());
}

#[test]
fn global_factors() {
    let b = MPoly::var(Var::B);
    let b1 = &b + &MPoly::one();
    for mu in compositions(7, 3) {
        for two_g in 0..=3 {
            let h = hurwitz_h(Genus(two_g), mu.parts());
            if h.is_zero() {
                continue;
            }
            if two_g % 2 == 1 {
                assert!(h.exact_div(&b).is_some(), "b does not divide H at g = {}/2, mu = {mu}", two_g);
            }
            let n = mu.len() as u32;
            if n >= 2 {
                assert!(h.exact_div(&b1.pow(n - 1)).is_some(), "(b+1)^{} does not divide H at mu = {mu}", n - 1);
            }
        }
    }
}

#[test]
fn symmetric_in_the_parts() {
    for (a, b) in [(&[2usize, 1][..], &[1usize, 2][..]), (&[3, 1, 2], &[1, 2, 3]), (&[2, 2, 1], &[1, 2, 2])] {
        for two_g in 0..=2 {
            assert_eq!(hurwitz_h(Genus(two_g), a), hurwitz_h(Genus(two_g), b));
        }
    }
}

#[test]
fn lambda_polynomials_at_positive_b() {
    for mu in compositions(6, 3) {
        for two_g in 0..=3 {
            let h = hurwitz_h(Genus(two_g), mu.parts());
            for b in 1..=5 {
                assert!(lambda_poly_check(&h, &Rational::from_integer(b.into())), "g = {}/2, mu = {mu}, b = {b}", two_g);
            }
        }
    }
}

#[test]
fn virasoro_residuals_detect_perturbations() {
    let trunc = Truncation::total(&[Var::Z], 4).with_cap(Var::Hbar, 8);
    let z = z_from_recursion(4, 8).unwrap();
    let mut bad = z.clone();
    let p = |i| Monomial::var(Var::p(i).unwrap(), 1);
    bad.add_term(Monomial::var(Var::Z, 3).mul(&Monomial::var(Var::Hbar, 2)).mul(&p(2)).mul(&p(1)), RatFrac::int(1));
    for m in 1..=3 {
        assert!(virasoro_apply(m, &z, VirasoroForm::BT).truncate(&trunc).is_zero());
        assert!(!virasoro_apply(m, &bad, VirasoroForm::BT).truncate(&trunc).is_zero(), "m = {m}");
    }
    // the b = 1 form of the operators does not annihilate the deformed Z
    assert!(!virasoro_apply(1, &z, VirasoroForm::A).truncate(&trunc).is_zero());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn witt_relation(seed in any::<u64>(), m in 1usize..=4, n in 1usize..=4) {
        let f = random_series(seed, 10);
        prop_assert!(commutator_residual(m, n, &f, m as i64 - n as i64).is_zero());
        if m != n {
            prop_assume!(!f.is_zero());
            // the opposite sign leaves a multiple of L_{m+n} f
            let wrong = commutator_residual(m, n, &f, n as i64 - m as i64);
            let l = virasoro_apply(m + n, &f, VirasoroForm::BT);
            prop_assert_eq!(wrong.is_zero(), l.is_zero());
        }
    }
}
