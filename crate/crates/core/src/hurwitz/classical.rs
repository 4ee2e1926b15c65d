use crate::exactnum::Rational;
use crate::partitions::Partition;

/// Classical monotone Hurwitz number `H_{g,n}(μ)` by brute force: `1/d!`
/// times the number of monotone transitive tuples of transpositions in
/// `S_d` whose product has labelled cycles of lengths `μ_i`.
pub fn classical_monotone_hurwitz(g: u32, mu: &Partition) -> Rational {
    let d = mu.size();
    let n = mu.len();
    let r = d as i64 + 2 * g as i64 - 2 + n as i64;
    if d == 0 || r < 0 {
        return Rational::from_integer(0.into());
    }
    let mut count: u64 = 0;
    let mut taus = Vec::with_capacity(r as usize);
    search(d, r as usize, 2, &mut taus, mu, &mut count);
    // each unlabelled product matches Π m_i! labellings
    let labellings: u64 = mu.multiplicities().iter().map(|&m| (1..=m as u64).product::<u64>()).product();
    let d_fact: u64 = (1..=d as u64).product();
    Rational::new((count * labellings).into(), d_fact.into())
}

fn search(d: usize, r: usize, min_b: usize, taus: &mut Vec<(usize, usize)>, mu: &Partition, count: &mut u64) {
    if taus.len() == r {
        if transitive(d, taus) && cycle_type(d, taus) == *mu {
            *count += 1;
        }
        return;
    }
    for b in min_b..=d {
        for a in 1..b {
            taus.push((a, b));
            search(d, r, b, taus, mu, count);
            taus.pop();
        }
    }
}

fn transitive(d: usize, taus: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..=d).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            x = p[x];
        }
        x
    }
    for &(a, b) in taus {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra] = rb;
    }
    let root = find(&mut parent, 1);
    (2..=d).all(|v| find(&mut parent, v) == root)
}

/// Cycle type of `τ_1 ∘ ... ∘ τ_r` (rightmost applied first).
fn cycle_type(d: usize, taus: &[(usize, usize)]) -> Partition {
    let mut perm: Vec<usize> = (0..=d).collect();
    for &(a, b) in taus.iter().rev() {
        for x in perm.iter_mut() {
            if *x == a {
                *x = b;
            } else if *x == b {
                *x = a;
            }
        }
    }
    let mut seen = vec![false; d + 1];
    let mut lens = Vec::new();
    for s in 1..=d {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = perm[x];
            len += 1;
        }
        lens.push(len);
    }
    Partition::from_composition(&lens).expect("cycle lengths are positive")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_small_numbers() {
        // one tuple, (1 2), over 2!
        assert_eq!(classical_monotone_hurwitz(0, &"2".parse().unwrap()), Rational::new(1.into(), 2.into()));
        assert_eq!(classical_monotone_hurwitz(0, &"1".parse().unwrap()), Rational::from_integer(1.into()));
        // (1 2)(1 2) with both labellings of the two fixed points
        assert_eq!(classical_monotone_hurwitz(0, &"1,1".parse().unwrap()), Rational::from_integer(1.into()));
    }
}
