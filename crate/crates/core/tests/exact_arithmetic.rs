use proptest::prelude::*;
use wgcalc::exactnum::{
    bareiss_solve, frac_equal, series_at_infinity, Bindings, FracRecord, MPoly, Monomial, RatFrac, Rational, UniPoly, Var,
};

fn poly_in(vars: &'static [Var], max_terms: usize) -> impl Strategy<Value = MPoly> {
    prop::collection::vec((prop::collection::vec(0u16..3, vars.len()), -5i64..=5), 0..=max_terms).prop_map(move |terms| {
        let mut p = MPoly::zero();
        for (exps, c) in terms {
            let mono = vars.iter().zip(&exps).fold(Monomial::ONE, |m, (&v, &e)| m.mul(&Monomial::var(v, e)));
            p.add_term(mono, Rational::from_integer(c.into()));
        }
        p
    })
}

fn small_poly() -> impl Strategy<Value = MPoly> {
    poly_in(&[Var::B, Var::T, Var::N], 4)
}

fn nonzero_poly() -> impl Strategy<Value = MPoly> {
    small_poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn unipoly() -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(-6i64..=6, 0..6).prop_map(|cs| UniPoly::from_ints(&cs))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn substitute_is_a_homomorphism(f in nonzero_poly(), g in nonzero_poly(), h in small_poly(), n in 2i64..6) {
        let mut bind = Bindings::new();
        bind.insert(Var::T, RatFrac::from_poly(h));
        bind.insert(Var::N, RatFrac::int(n));
        let (ff, gg) = (RatFrac::from_poly(f), RatFrac::from_poly(g));
        let (Ok(sf), Ok(sg), Ok(sfg)) = (ff.substitute(&bind), gg.substitute(&bind), (&ff * &gg).substitute(&bind)) else {
            return Ok(());
        };
        prop_assert!(frac_equal(&sfg, &(&sf * &sg)));
    }

    #[test]
    fn normalisation_preserves_value(num in small_poly(), den in nonzero_poly(), g in nonzero_poly()) {
        let x = RatFrac::new(num.clone(), den.clone()).unwrap();
        let y = RatFrac::new(&num * &g, &den * &g).unwrap();
        prop_assert!(frac_equal(&x, &y));
        prop_assert_eq!(&x, &y);
        // the stored denominator has unit content
        prop_assert_eq!(y.den().content(), Rational::from_integer(1.into()));
    }

    #[test]
    fn field_operations(a in nonzero_poly(), b in nonzero_poly(), c in nonzero_poly()) {
        let x = RatFrac::new(a, b.clone()).unwrap();
        let y = RatFrac::new(c, b).unwrap();
        prop_assert!(frac_equal(&(&(&x + &y) - &y), &x));
        prop_assert!(frac_equal(&(&(&x * &y) / &y), &x));
        prop_assert!((&x * &x.recip().unwrap()).is_one());
    }

    #[test]
    fn series_of_a_product(p in poly_in(&[Var::B, Var::N], 4), q in poly_in(&[Var::B, Var::N], 4), r in 0usize..5) {
        // f = p / (N^2 + N + 1 + b N)^2 keeps both factors regular at infinity
        let base = MPoly::from_terms([
            (Monomial::var(Var::N, 2), Rational::from_integer(1.into())),
            (Monomial::var(Var::N, 1), Rational::from_integer(1.into())),
            (Monomial::var(Var::B, 1).mul(&Monomial::var(Var::N, 1)), Rational::from_integer(1.into())),
            (Monomial::ONE, Rational::from_integer(1.into())),
        ]);
        let den = base.pow(2);
        let f = RatFrac::new(p, den.clone()).unwrap();
        let g = RatFrac::new(q, den).unwrap();
        let sf = series_at_infinity(&f, Var::N, r).unwrap();
        let sg = series_at_infinity(&g, Var::N, r).unwrap();
        let sfg = series_at_infinity(&(&f * &g), Var::N, r).unwrap();
        let prod = sf.mul(&sg);
        prop_assert_eq!(prod.order(), r);
        for i in 0..=r {
            prop_assert!(frac_equal(sfg.coeff(i).unwrap(), prod.coeff(i).unwrap()));
        }
        prop_assert!(sfg.coeff(r + 1).is_err());
    }

    #[test]
    fn polynomial_division(a in unipoly(), d in unipoly().prop_filter("nonzero", |d| !d.is_zero())) {
        let (q, r) = a.div_rem(&d);
        prop_assert_eq!(&(&q * &d) + &r, a);
        prop_assert!(r.is_zero() || r.degree() < d.degree());
    }

    #[test]
    fn bareiss_solves(entries in prop::collection::vec(-4i64..=4, 9), rhs in prop::collection::vec(-4i64..=4, 3)) {
        let n = 3;
        let a: Vec<Vec<MPoly>> = (0..n)
            .map(|i| (0..n).map(|j| {
                // diagonal shifted by N keeps the system nonsingular
                let c = MPoly::int(entries[i * n + j]);
                if i == j { &c + &MPoly::var(Var::N) } else { c }
            }).collect())
            .collect();
        let b: Vec<Vec<MPoly>> = rhs.iter().map(|&x| vec![MPoly::int(x)]).collect();
        let sol = bareiss_solve(a.clone(), b.clone()).unwrap();
        for i in 0..n {
            let mut lhs = MPoly::zero();
            for j in 0..n {
                lhs += &(&a[i][j] * &sol.numerators[j][0]);
            }
            prop_assert_eq!(lhs, &sol.det * &b[i][0]);
        }
    }

    #[test]
    fn json_roundtrip(num in small_poly(), den in nonzero_poly()) {
        let x = RatFrac::new(num, den).unwrap();
        let json = x.to_json();
        prop_assert!(frac_equal(&RatFrac::from_json(&json).unwrap(), &x));
        prop_assert_eq!(FracRecord::from_frac(&x).to_frac().unwrap(), x);
    }
}

#[test]
fn truncation_past_order_is_an_error() {
    let f = RatFrac::new(MPoly::one(), &MPoly::var(Var::N) - &MPoly::one()).unwrap();
    let s = series_at_infinity(&f, Var::N, 3).unwrap();
    let one = RatFrac::one();
    assert_eq!(s.coeffs(), &[RatFrac::zero(), one.clone(), one.clone(), one]);
    assert!(s.truncate(5).is_err());
    assert!(series_at_infinity(&RatFrac::var(Var::N), Var::N, 2).is_err());
}
