use super::Genus;
use crate::exactnum::{graded_series_exp, ExactError, MPoly, Monomial, PolySeries, RatFrac, Rational, Truncation, Var};
use crate::memo::Memo;
use crate::partitions::{all_partitions, Partition};
use std::sync::OnceLock;

type Key = (u32, Vec<usize>);

fn memo() -> &'static Memo<Key, MPoly> {
    static CACHE: OnceLock<Memo<Key, MPoly>> = OnceLock::new();
    CACHE.get_or_init(Memo::new)
}

/// `H_{g,n}^{(bt)}(μ_1, ..., μ_n)` by the cut-join-flip recursion, with
/// `H_{0,1}(1) = 1`. Out-of-range keys (empty `μ`, a zero part) give 0.
pub fn hurwitz_h(g: Genus, mu: &[usize]) -> MPoly {
    rec(g.doubled() as i64, mu.to_vec())
}

/// Seed the table with a value computed elsewhere (e.g. read from disk).
pub fn preload(g: Genus, mu: &[usize], value: MPoly) {
    let mut key = mu.to_vec();
    key.sort_unstable_by(|a, b| b.cmp(a));
    memo().insert((g.doubled(), key), value);
}

fn rec(two_g: i64, mut mu: Vec<usize>) -> MPoly {
    if two_g < 0 || mu.is_empty() || mu.contains(&0) {
        return MPoly::zero();
    }
    mu.sort_unstable_by(|a, b| b.cmp(a));
    if two_g == 0 && mu == [1] {
        return MPoly::one();
    }
    let key = (two_g as u32, mu);
    memo().get_or_compute(&key, || compute(two_g, &key.1))
}

fn int(n: usize) -> Rational {
    Rational::from_integer(n.into())
}

fn compute(two_g: i64, mu: &[usize]) -> MPoly {
    let m1 = mu[0];
    let rest = &mu[1..];
    let b = MPoly::var(Var::B);
    let b1 = &b + &MPoly::one();
    let mut acc = MPoly::zero();

    // join
    for i in 0..rest.len() {
        let mut next = vec![m1 + rest[i]];
        next.extend(rest.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &x)| x));
        acc += &rec(two_g, next).scale(&int(m1 + rest[i]));
    }
    acc = &acc * &b1;

    // cut
    for alpha in 1..m1 {
        let beta = m1 - alpha;
        let mut both = vec![alpha, beta];
        both.extend_from_slice(rest);
        let mut cut = rec(two_g - 2, both);
        for g1 in 0..=two_g {
            for mask in 0u32..(1 << rest.len()) {
                let mut left = vec![alpha];
                let mut right = vec![beta];
                for (j, &x) in rest.iter().enumerate() {
                    if mask & (1 << j) != 0 {
                        left.push(x);
                    } else {
                        right.push(x);
                    }
                }
                let l = rec(g1, left);
                if l.is_zero() {
                    continue;
                }
                cut += &(&l * &rec(two_g - g1, right));
            }
        }
        acc += &cut.scale(&int(alpha * beta));
    }

    // flip
    if m1 > 1 {
        acc += &(&b * &rec(two_g - 1, mu.to_vec())).scale(&int(m1 * (m1 - 1)));
    }

    // t-shift
    if m1 > 1 {
        let mut next = vec![m1 - 1];
        next.extend_from_slice(rest);
        let tm1 = &MPoly::var(Var::T) - &MPoly::one();
        acc += &(&tm1 * &rec(two_g, next)).scale(&int(m1 - 1));
    }

    acc.scale(&Rational::new(1.into(), m1.into()))
}

fn p_monomial(mu: &Partition) -> Monomial {
    mu.parts().iter().fold(Monomial::ONE, |m, &i| m.mul(&Monomial::var(Var::p(i).expect("part within p-variable range"), 1)))
}

/// `x^k ħ^r p_μ` where `x = z/ħ` is carried by the variable `z`.
pub(crate) fn z_monomial(k: usize, r: usize, mu: &Partition) -> Monomial {
    Monomial::var(Var::Z, k as u16).mul(&Monomial::var(Var::Hbar, r as u16)).mul(&p_monomial(mu))
}

/// Truncation keeping `x`-degree at most `k_max` and `ħ`-degree at most
/// `hbar_order`.
pub fn z_truncation(k_max: usize, hbar_order: usize) -> Truncation {
    Truncation::total(&[Var::Z], k_max as u32).with_cap(Var::Hbar, hbar_order as u16)
}

fn b_plus_one_pow(n: usize) -> MPoly {
    (&MPoly::var(Var::B) + &MPoly::one()).pow(n as u32)
}

fn factorial(n: usize) -> Rational {
    (1..=n).fold(Rational::from_integer(1.into()), |a, i| a * int(i))
}

/// Connected generating function
/// `F = Σ x^k ħ^{k+2g-2+n} / n! Σ H_{g,n}(μ) p_μ / (b+1)^n` in the
/// variables `x = z/ħ`, `ħ`, `p_i`.
pub fn connected_series(k_max: usize, hbar_order: usize) -> PolySeries {
    let mut f = PolySeries::zero();
    for k in 1..=k_max {
        for mu in all_partitions(k) {
            let n = mu.len();
            let sym = mu.multiplicities().iter().fold(Rational::from_integer(1.into()), |a, &m| a * factorial(m));
            let den = RatFrac::from_poly(b_plus_one_pow(n).scale(&sym));
            for r in (k + n).saturating_sub(2)..=hbar_order {
                let two_g = (r + 2) - (k + n);
                let h = hurwitz_h(Genus(two_g as u32), mu.parts());
                if h.is_zero() {
                    continue;
                }
                f.add_term(z_monomial(k, r, &mu), &RatFrac::from_poly(h) / &den);
            }
        }
    }
    f
}

/// `Z = exp(F)` from the recursion, truncated.
pub fn z_from_recursion(k_max: usize, hbar_order: usize) -> Result<PolySeries, ExactError> {
    graded_series_exp(&connected_series(k_max, hbar_order), &z_truncation(k_max, hbar_order))
}

/// Disconnected numbers `h_r(μ)` read off `exp(F)`: the coefficient of
/// `x^k ħ^r p_μ` is `h_r(μ) / (z_μ (b+1)^ℓ(μ))`.
pub fn disconnected_from_connected(z: &PolySeries, mu: &Partition, r: usize) -> Option<MPoly> {
    let c = z.coeff(&z_monomial(mu.size(), r, mu));
    let scale = RatFrac::from_poly(b_plus_one_pow(mu.len()).scale(&Rational::from_integer(crate::partitions::z_lambda(mu).into())));
    let v = &c * &scale;
    let (num, den) = v.into_parts();
    num.exact_div(&den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::UniPoly;

    fn bt(rows: &[&[i64]]) -> MPoly {
        // rows[j] = coefficients in b of t^j
        let mut acc = MPoly::zero();
        for (j, row) in rows.iter().enumerate() {
            let c = UniPoly::from_ints(row).to_mpoly(Var::B);
            acc += &(&c * &MPoly::var(Var::T).pow(j as u32));
        }
        acc
    }

    #[test]
    fn small_values() {
        assert!(hurwitz_h(Genus(0), &[1]).is_one());
        assert_eq!(hurwitz_h(Genus(0), &[2]), bt(&[&[], &[1]]).scale(&Rational::new(1.into(), 2.into())));
        assert_eq!(hurwitz_h(Genus(1), &[3]), bt(&[&[], &[0, 1], &[0, 1]]));
        assert_eq!(hurwitz_h(Genus(0), &[1, 1]), bt(&[&[], &[1, 1]]));
        assert!(hurwitz_h(Genus(2), &[1]).is_zero());
    }
}
