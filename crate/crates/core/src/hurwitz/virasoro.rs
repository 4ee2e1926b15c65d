use super::recursion::{z_from_recursion, z_truncation};
use crate::exactnum::{ExactError, Monomial, PolySeries, RatFrac, Rational, Var, MAX_P};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Which displayed operator to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VirasoroForm {
    /// `L_m^{(bt)}` with symbolic `b` and `t`.
    BT,
    /// `L_m^A`, written out separately with its own constants.
    A,
}

fn p(i: usize) -> Var {
    Var::p(i).expect("p-variable index within range")
}

fn d(f: &PolySeries, i: usize) -> PolySeries {
    if i == 0 || i > MAX_P {
        return PolySeries::zero();
    }
    f.derivative(p(i))
}

fn c(n: i64) -> RatFrac {
    RatFrac::int(n)
}

/// `ħ L_m` applied to `f`, in the variables `x = z/ħ` (carried by `z`),
/// `ħ` and `p_i`. Multiplying by `ħ` clears every negative power.
pub fn virasoro_apply(m: usize, f: &PolySeries, form: VirasoroForm) -> PolySeries {
    assert!(m >= 1, "Virasoro index starts at 1");
    let hbar = Monomial::var(Var::Hbar, 1);
    let x = Monomial::var(Var::Z, 1);
    let (b, b1, t) = match form {
        VirasoroForm::BT => (RatFrac::var(Var::B), &RatFrac::var(Var::B) + &c(1), RatFrac::var(Var::T)),
        VirasoroForm::A => (c(1), c(2), RatFrac::var(Var::T)),
    };
    let dm = d(f, m);
    let mut out = dm.scale(&c(m as i64));

    let mut two = PolySeries::zero();
    for i in 1..m {
        let j = m - i;
        two = two.add(&d(&d(f, j), i).scale(&c((i * j) as i64)));
    }
    match form {
        VirasoroForm::BT => out = out.sub(&two.scale(&b1).mul_monomial(&hbar)),
        VirasoroForm::A => out = out.sub(&two.scale(&c(2)).mul_monomial(&hbar)),
    }

    let mut shift = PolySeries::zero();
    for i in 1..=MAX_P.saturating_sub(m) {
        let di = d(f, i + m);
        if di.is_zero() {
            continue;
        }
        shift = shift.add(&di.mul_monomial(&Monomial::var(p(i), 1)).scale(&c((i + m) as i64)));
    }
    out = out.sub(&shift.mul_monomial(&hbar));

    let diag = (m * (m - 1)) as i64;
    match form {
        VirasoroForm::BT => out = out.sub(&dm.scale(&(&b * &c(diag))).mul_monomial(&hbar)),
        VirasoroForm::A => out = out.sub(&dm.scale(&c(diag)).mul_monomial(&hbar)),
    }

    if m >= 2 {
        let coeff = &(&t - &c(1)) * &c((m - 1) as i64);
        out = out.sub(&d(f, m - 1).scale(&coeff).mul_monomial(&hbar.mul(&x)));
    }

    if m == 1 {
        let inv = match form {
            VirasoroForm::BT => &c(1) / &b1,
            VirasoroForm::A => RatFrac::constant(Rational::new(1.into(), 2.into())),
        };
        out = out.sub(&f.scale(&inv).mul_monomial(&x));
    }
    out
}

/// `ħ L_m Z` for `Z` built from the recursion, truncated to the
/// coefficients that the truncation of `Z` determines exactly: `x`-degree
/// at most `k_max` and `ħ`-degree at most `hbar_order`.
pub fn virasoro_residual(m: usize, k_max: usize, hbar_order: usize) -> Result<PolySeries, ExactError> {
    let z = z_from_recursion(k_max, hbar_order)?;
    Ok(virasoro_apply(m, &z, VirasoroForm::BT).truncate(&z_truncation(k_max, hbar_order)))
}

/// Whether `L_m Z` vanishes on the truncation.
pub fn virasoro_check(m: usize, k_max: usize, hbar_order: usize) -> Result<bool, ExactError> {
    Ok(virasoro_residual(m, k_max, hbar_order)?.is_zero())
}

/// A random polynomial in `x`, `ħ` and `p_1..p_6` with small integer
/// coefficients.
pub fn random_series(seed: u64, terms: usize) -> PolySeries {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut f = PolySeries::zero();
    for _ in 0..terms {
        let mut mono = Monomial::var(Var::Z, rng.gen_range(0..3)).mul(&Monomial::var(Var::Hbar, rng.gen_range(0..3)));
        for _ in 0..rng.gen_range(1..4) {
            mono = mono.mul(&Monomial::var(p(rng.gen_range(1..=6)), 1));
        }
        let coeff: i64 = rng.gen_range(-5..=5);
        f.add_term(mono, c(coeff));
    }
    f
}

/// Witt relation `[L'_m, L'_n] = (m-n) L'_{m+n}` for `L'_m = -L_m`, checked
/// on a random polynomial through `ħL'_m`. With the signs as displayed, `L_m`
/// itself satisfies the relation with `n-m` in place of `m-n`.
pub fn commutator_check(m: usize, n: usize, seed: u64) -> bool {
    let f = random_series(seed, 12);
    commutator_residual(m, n, &f, (m as i64) - (n as i64)).is_zero()
}

/// `[ħL'_m, ħL'_n] f - c ħ · ħL'_{m+n} f` with `L' = -L`.
pub fn commutator_residual(m: usize, n: usize, f: &PolySeries, c_mn: i64) -> PolySeries {
    let form = VirasoroForm::BT;
    let neg = |k: usize, g: &PolySeries| virasoro_apply(k, g, form).scale(&c(-1));
    let lhs = neg(m, &neg(n, f)).sub(&neg(n, &neg(m, f)));
    let rhs = neg(m + n, f).mul_monomial(&Monomial::var(Var::Hbar, 1)).scale(&c(c_mn));
    lhs.sub(&rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_constraints_vanish() {
        assert!(virasoro_check(1, 2, 3).unwrap());
        assert!(virasoro_check(2, 2, 3).unwrap());
    }

    #[test]
    fn commutator_one_two() {
        assert!(commutator_check(1, 2, 7));
        // the displayed operators carry the opposite structure constant
        let f = random_series(7, 12);
        assert!(!commutator_residual(1, 2, &f, 1).is_zero());
    }

    #[test]
    fn b_one_matches_a_form() {
        let f = random_series(3, 10);
        let one = Rational::from_integer(1.into());
        for m in 1..=3 {
            let bt = virasoro_apply(m, &f, VirasoroForm::BT).map_coeffs(|c| c.specialize(Var::B, &one)).unwrap();
            assert_eq!(bt, virasoro_apply(m, &f, VirasoroForm::A));
        }
    }
}
