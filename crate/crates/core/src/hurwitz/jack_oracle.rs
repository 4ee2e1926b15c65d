use super::recursion::{z_monomial, z_truncation};
use super::{factorisation_length, Genus};
use crate::exactnum::{graded_series_log, BFrac, MPoly, PolySeries, RatFrac, Rational, UniPoly, Var};
use crate::partitions::{all_partitions, contents_multiset_uni, hook_products_uni, z_lambda, Partition};
use crate::symfunc::{eval_at_multiset, jacks_of_degree, monomial_in_powersum, SymFunc, SymFuncError, JACK_DEGREE_BOUND};
use std::collections::BTreeMap;

/// The Jack side of the partition function,
///
///   Z = Σ_k (z/ħ)^k Σ_{λ ⊢ k} Π_□ (1 - (1-t) ħ c_b(□)) / (1 - ħ c_b(□)) · J_λ / (hook_b hook'_b),
///
/// stored as symmetric functions indexed by `(k, r, j)` for the coefficient
/// of `(z/ħ)^k ħ^r t^j`.
#[derive(Clone, Debug)]
pub struct JackSeries {
    pub k_max: usize,
    pub hbar_order: usize,
    coeffs: BTreeMap<(usize, usize, usize), SymFunc>,
}

impl JackSeries {
    pub fn coefficient(&self, k: usize, r: usize, t_pow: usize) -> Option<SymFunc> {
        if k > self.k_max || r > self.hbar_order {
            return None;
        }
        Some(self.coeffs.get(&(k, r, t_pow)).cloned().unwrap_or_else(SymFunc::zero))
    }

    /// `h_r(μ) = z_μ (b+1)^ℓ(μ) [p_μ (z/ħ)^{|μ|} ħ^r] Z`, or `None` outside
    /// the truncation.
    pub fn h(&self, mu: &Partition, r: usize) -> Option<MPoly> {
        let k = mu.size();
        if k > self.k_max || r > self.hbar_order {
            return None;
        }
        let norm = BFrac::from_poly(UniPoly::from_ints(&[1, 1]).pow(mu.len() as u32)).scale(&Rational::from_integer(z_lambda(mu).into()));
        let mut acc = MPoly::zero();
        for j in 0..=r {
            let Some(f) = self.coeffs.get(&(k, r, j)) else { continue };
            let c = &f.coeff(mu) * &norm;
            if c.is_zero() {
                continue;
            }
            assert!(c.is_poly(), "Jack extraction produced a non-polynomial coefficient {c}");
            acc += &(&c.num().to_mpoly(Var::B) * &MPoly::var(Var::T).pow(j as u32));
        }
        Some(acc)
    }

    /// The same data as a series in `x = z/ħ`, `ħ` and the power sums.
    pub fn to_polyseries(&self) -> PolySeries {
        let mut out = PolySeries::zero();
        for (&(k, r, j), f) in &self.coeffs {
            let tj = RatFrac::var(Var::T).pow(j as u32);
            for (mu, c) in f.terms() {
                out.add_term(z_monomial(k, r, mu), &c.to_ratfrac() * &tj);
            }
        }
        out
    }
}

/// `Σ_{ν ⊢ r, ℓ(ν) = j} m_ν(values)`: the coefficient of `ħ^r t^j` in
/// `Π (1 + t Σ_{i≥1} (ħ x)^i)`.
fn product_coefficients(values: &[UniPoly], r: usize) -> BTreeMap<usize, BFrac> {
    let mut out = BTreeMap::new();
    if r == 0 {
        out.insert(0, BFrac::one());
        return out;
    }
    for nu in all_partitions(r) {
        if nu.len() > values.len() {
            continue;
        }
        let v = eval_at_multiset(&monomial_in_powersum(&nu), values, values.len()).expect("arity matches");
        let slot = out.entry(nu.len()).or_insert_with(BFrac::zero);
        *slot = &*slot + &v;
    }
    out
}

pub fn z_truncated_jack(k_max: usize, hbar_order: usize) -> Result<JackSeries, SymFuncError> {
    if k_max > JACK_DEGREE_BOUND {
        return Err(SymFuncError::DegreeBoundExceeded { degree: k_max, bound: JACK_DEGREE_BOUND });
    }
    let mut coeffs = BTreeMap::new();
    coeffs.insert((0, 0, 0), SymFunc::one());
    for k in 1..=k_max {
        let jacks = jacks_of_degree(k, JACK_DEGREE_BOUND)?;
        for (lambda, j) in jacks.iter() {
            let (h, hp) = hook_products_uni(lambda);
            let scaled = j.scale(&BFrac::from_poly(&h * &hp).recip().expect("hook products are nonzero"));
            let contents = contents_multiset_uni(lambda);
            for r in 0..=hbar_order {
                for (tj, c) in product_coefficients(&contents, r) {
                    if c.is_zero() {
                        continue;
                    }
                    let slot = coeffs.entry((k, r, tj)).or_insert_with(SymFunc::zero);
                    *slot = &*slot + &scaled.scale(&c);
                }
            }
        }
    }
    coeffs.retain(|_, f| !f.is_zero());
    Ok(JackSeries { k_max, hbar_order, coeffs })
}

/// `h_r(μ)` from the Jack expansion alone.
pub fn h_from_jack(mu: &Partition, r: usize) -> Result<MPoly, SymFuncError> {
    let z = z_truncated_jack(mu.size(), r)?;
    Ok(z.h(mu, r).expect("within truncation"))
}

/// `H_{g,n}(μ)` from the logarithm of the Jack expansion:
/// `H = Π m_i! (b+1)^n [x^{|μ|} ħ^r p_μ] log Z`.
pub fn hurwitz_h_jack(g: Genus, mu: &Partition) -> Result<MPoly, SymFuncError> {
    let Some(r) = factorisation_length(g, mu.parts()) else {
        return Ok(MPoly::zero());
    };
    let z = z_truncated_jack(mu.size(), r)?.to_polyseries();
    let f = graded_series_log(&z, &z_truncation(mu.size(), r)).expect("Z has constant term 1");
    let sym = mu.multiplicities().iter().fold(Rational::from_integer(1.into()), |a, &m| a * Rational::from_integer((1..=m as u64).product::<u64>().into()));
    let scale = RatFrac::from_poly((&MPoly::var(Var::B) + &MPoly::one()).pow(mu.len() as u32).scale(&sym));
    let (num, den) = (&f.coeff(&z_monomial(mu.size(), r, mu)) * &scale).into_parts();
    Ok(num.exact_div(&den).expect("connected Jack coefficient is a polynomial"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn leading_terms() {
        let z = z_truncated_jack(0, 0).unwrap();
        assert_eq!(z.coefficient(0, 0, 0).unwrap(), SymFunc::one());
        let z = z_truncated_jack(1, 0).unwrap();
        let want = SymFunc::term("1".parse().unwrap(), BFrac::from_poly(UniPoly::from_ints(&[1, 1])).recip().unwrap());
        assert_eq!(z.coefficient(1, 0, 0).unwrap(), want);
        assert_eq!(h_from_jack(&"2".parse().unwrap(), 1).unwrap(), MPoly::var(Var::T));
    }

    #[test]
    fn connected_from_log() {
        for (g, mu) in [(0, "1,1"), (1, "2,1"), (2, "3")] {
            let mu: Partition = mu.parse().unwrap();
            assert_eq!(hurwitz_h_jack(Genus(g), &mu).unwrap(), super::super::hurwitz_h(Genus(g), mu.parts()));
        }
    }
}
