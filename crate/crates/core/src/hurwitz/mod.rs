//! bt-monotone Hurwitz numbers.
//!
//! Four independent routes to the same numbers live here: enumeration of
//! monotone factorisations of pair partitions, the cut-join-flip recursion,
//! extraction from the Jack expansion of the partition function, and (in
//! [`crate::weingarten`]) the large-`N` expansion of the bt-Weingarten
//! function. A brute-force count over the symmetric group covers the
//! classical `b = 0, t = 1` case.

mod classical;
mod factorisations;
mod jack_oracle;
mod recursion;
mod reference;
mod virasoro;

pub use classical::classical_monotone_hurwitz;
pub use factorisations::{
    for_each_factorisation, h_bt, h_bt_at, hurwitz_h_enum, monotone_factorisations, representative, Factorisation,
};
pub use jack_oracle::{h_from_jack, hurwitz_h_jack, z_truncated_jack, JackSeries};
pub use reference::{ReferenceValue, REFERENCE_VALUES};
pub use recursion::{connected_series, disconnected_from_connected, hurwitz_h, preload, z_from_recursion};
pub use virasoro::{
    commutator_check, commutator_residual, random_series, virasoro_apply, virasoro_check, virasoro_residual, VirasoroForm,
};

use crate::exactnum::{MPoly, Monomial, Rational, UniPoly, Var};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// A genus in `½ℕ`, stored doubled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Genus(pub u32);

impl Genus {
    pub fn from_doubled(two_g: u32) -> Genus {
        Genus(two_g)
    }

    pub fn integer(g: u32) -> Genus {
        Genus(2 * g)
    }

    pub fn doubled(self) -> u32 {
        self.0
    }

    pub fn is_integral(self) -> bool {
        self.0 % 2 == 0
    }
}

impl fmt::Display for Genus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl FromStr for Genus {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || format!("invalid genus '{s}' (expected e.g. 0, 1/2, 1.5)");
        if let Some((n, d)) = s.split_once('/') {
            let (n, d): (u32, u32) = (n.trim().parse().map_err(|_| bad())?, d.trim().parse().map_err(|_| bad())?);
            return match d {
                1 => Ok(Genus(2 * n)),
                2 => Ok(Genus(n)),
                _ => Err(bad()),
            };
        }
        if let Some((w, frac)) = s.split_once('.') {
            let w: u32 = if w.is_empty() { 0 } else { w.parse().map_err(|_| bad())? };
            return match frac.trim_end_matches('0') {
                "" => Ok(Genus(2 * w)),
                "5" => Ok(Genus(2 * w + 1)),
                _ => Err(bad()),
            };
        }
        s.parse::<u32>().map(|g| Genus(2 * g)).map_err(|_| bad())
    }
}

/// `b^flip t^hive`.
pub(crate) fn weight_monomial(flip: usize, hive: usize) -> Monomial {
    Monomial::var(Var::B, flip as u16).mul(&Monomial::var(Var::T, hive as u16))
}

/// Length of factorisations counted by `H_{g,n}(μ)`: `|μ| + 2g - 2 + n`,
/// or `None` when negative.
pub fn factorisation_length(g: Genus, mu: &[usize]) -> Option<usize> {
    let r = mu.iter().sum::<usize>() as i64 + g.0 as i64 - 2 + mu.len() as i64;
    (r >= 0).then_some(r as usize)
}

/// Whether `P(t)`, after `b = b_val`, has nonnegative coefficients forming a
/// palindromic unimodal sequence (ignoring leading and trailing zeros).
pub fn lambda_poly_check(p: &MPoly, b_val: &Rational) -> bool {
    let q = p.specialize(Var::B, b_val);
    let Some(u) = UniPoly::from_mpoly(&q, Var::T) else {
        return false;
    };
    let zero = Rational::from_integer(0.into());
    let cs = u.coeffs();
    let Some(lo) = cs.iter().position(|c| c != &zero) else {
        return true;
    };
    let hi = cs.iter().rposition(|c| c != &zero).unwrap();
    let seq = &cs[lo..=hi];
    if seq.iter().any(|c| c < &zero) {
        return false;
    }
    if seq.iter().ne(seq.iter().rev()) {
        return false;
    }
    let peak = seq.iter().enumerate().max_by(|a, b| a.1.cmp(b.1)).map(|(i, _)| i).unwrap();
    seq[..=peak].windows(2).all(|w| w[0] <= w[1]) && seq[peak..].windows(2).all(|w| w[0] >= w[1])
}

/// The t-coefficients of `P` at `b = b_val`, lowest degree first.
pub fn t_coefficients(p: &MPoly, b_val: &Rational) -> Option<Vec<Rational>> {
    UniPoly::from_mpoly(&p.specialize(Var::B, b_val), Var::T).map(|u| u.coeffs().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tpoly(cs: &[i64]) -> MPoly {
        UniPoly::from_ints(cs).to_mpoly(Var::T)
    }

    #[test]
    fn genus_parsing() {
        assert_eq!("1/2".parse::<Genus>().unwrap(), Genus(1));
        assert_eq!("1.5".parse::<Genus>().unwrap(), Genus(3));
        assert_eq!("2".parse::<Genus>().unwrap(), Genus(4));
        assert_eq!(Genus(3).to_string(), "3/2");
        assert!("1/3".parse::<Genus>().is_err());
    }

    #[test]
    fn lambda_examples() {
        let one = Rational::from_integer(1.into());
        assert!(lambda_poly_check(&tpoly(&[0, 1, 3, 1]), &one));
        assert!(!lambda_poly_check(&tpoly(&[1, 0, 1]), &one));
        assert!(!lambda_poly_check(&tpoly(&[0, 1, 2]), &one));
        assert!(!lambda_poly_check(&tpoly(&[0, -1, -1]), &one));
    }
}
