use super::{ExactError, MPoly};
use rayon::prelude::*;

/// Solution of `A X = B` as `X = numerators / det` with polynomial entries.
#[derive(Clone, Debug)]
pub struct BareissSolution {
    /// Determinant of `A` up to sign (the sign matches `numerators`).
    pub det: MPoly,
    /// `numerators[i][c] = det * X[i][c]`.
    pub numerators: Vec<Vec<MPoly>>,
}

/// Fraction-free Gaussian elimination (Bareiss) over the polynomial ring.
/// Rows keep their given order unless a zero pivot forces a swap.
pub fn bareiss_solve(a: Vec<Vec<MPoly>>, b: Vec<Vec<MPoly>>) -> Result<BareissSolution, ExactError> {
    let n = a.len();
    assert_eq!(b.len(), n, "right-hand side has the wrong number of rows");
    let ncols = b.first().map(|r| r.len()).unwrap_or(0);
    if n == 0 {
        return Ok(BareissSolution { det: MPoly::one(), numerators: vec![] });
    }
    let mut m: Vec<Vec<MPoly>> = a
        .into_iter()
        .zip(b)
        .map(|(mut row, rhs)| {
            assert_eq!(row.len(), n, "matrix is not square");
            row.extend(rhs);
            row
        })
        .collect();
    let width = n + ncols;
    let mut prev = MPoly::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let r = (k + 1..n).find(|&r| !m[r][k].is_zero()).ok_or(ExactError::SingularSystem)?;
            m.swap(k, r);
        }
        let (head, tail) = m.split_at_mut(k + 1);
        let pivot_row = &head[k];
        let pivot = &pivot_row[k];
        tail.par_iter_mut().for_each(|row| {
            let factor = row[k].clone();
            for j in k + 1..width {
                let mut v = pivot * &row[j];
                if !factor.is_zero() && !pivot_row[j].is_zero() {
                    v -= &(&factor * &pivot_row[j]);
                }
                row[j] = if prev.is_one() {
                    v
                } else {
                    v.exact_div(&prev).expect("Bareiss step is exact")
                };
            }
            row[k] = MPoly::zero();
        });
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if det.is_zero() {
        return Err(ExactError::SingularSystem);
    }
    let mut numerators = vec![vec![MPoly::zero(); ncols]; n];
    for c in 0..ncols {
        for i in (0..n).rev() {
            let mut s = &det * &m[i][n + c];
            for j in i + 1..n {
                if !m[i][j].is_zero() && !numerators[j][c].is_zero() {
                    s -= &(&m[i][j] * &numerators[j][c]);
                }
            }
            numerators[i][c] = s.exact_div(&m[i][i]).expect("back substitution is exact");
        }
    }
    Ok(BareissSolution { det, numerators })
}
