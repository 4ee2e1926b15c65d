use super::Genus;
use crate::exactnum::{MPoly, UniPoly, Var};

/// A reference value of `Π μ_i · H_{g,n}(μ)`. `rows[j]` lists the
/// coefficients in `b`, lowest first, of `t^j`.
#[derive(Clone, Copy, Debug)]
pub struct ReferenceValue {
    pub two_g: u32,
    pub mu: &'static [usize],
    pub rows: &'static [&'static [i64]],
}

impl ReferenceValue {
    pub fn genus(&self) -> Genus {
        Genus(self.two_g)
    }

    /// `Π μ_i · H` as a polynomial in `b` and `t`.
    pub fn scaled(&self) -> MPoly {
        let mut acc = MPoly::zero();
        for (j, row) in self.rows.iter().enumerate() {
            if row.is_empty() {
                continue;
            }
            acc += &(&UniPoly::from_ints(row).to_mpoly(Var::B) * &MPoly::var(Var::T).pow(j as u32));
        }
        acc
    }
}

macro_rules! rv {
    ($g:expr, [$($m:expr),*], [$($row:expr),*]) => {
        ReferenceValue { two_g: $g, mu: &[$($m),*], rows: &[$(&$row),*] }
    };
}

/// Tabulated values for one, two and three boundary components.
pub const REFERENCE_VALUES: &[ReferenceValue] = &[
    rv!(0, [2], [[], [1]]),
    rv!(0, [3], [[], [1], [1]]),
    rv!(0, [4], [[], [1], [3], [1]]),
    rv!(0, [5], [[], [1], [6], [6], [1]]),
    rv!(0, [6], [[], [1], [10], [20], [10], [1]]),
    rv!(1, [2], [[], [0, 1]]),
    rv!(1, [3], [[], [0, 3], [0, 3]]),
    rv!(1, [4], [[], [0, 6], [0, 17], [0, 6]]),
    rv!(1, [5], [[], [0, 10], [0, 55], [0, 55], [0, 10]]),
    rv!(1, [6], [[], [0, 15], [0, 135], [0, 262], [0, 135], [0, 15]]),
    rv!(2, [2], [[], [1, 1, 1]]),
    rv!(2, [3], [[], [5, 5, 7], [5, 5, 7]]),
    rv!(2, [4], [[], [15, 15, 25], [40, 40, 68], [15, 15, 25]]),
    rv!(2, [5], [[], [35, 35, 65], [175, 175, 335], [175, 175, 335], [35, 35, 65]]),
    rv!(2, [6], [[], [70, 70, 140], [560, 560, 1162], [1050, 1050, 2202], [560, 560, 1162], [70, 70, 140]]),
    rv!(3, [2], [[], [0, 2, 2, 1]]),
    rv!(3, [3], [[], [0, 24, 24, 15], [0, 24, 24, 15]]),
    rv!(3, [4], [[], [0, 127, 127, 90], [0, 332, 332, 238], [0, 127, 127, 90]]),
    rv!(3, [5], [[], [0, 455, 455, 350], [0, 2195, 2195, 1720], [0, 2195, 2195, 1720], [0, 455, 455, 350]]),
    rv!(
        3,
        [6],
        [[], [0, 1288, 1288, 1050], [0, 9823, 9823, 8196], [0, 18148, 18148, 15246], [0, 9823, 9823, 8196], [0, 1288, 1288, 1050]]
    ),
    rv!(0, [1, 1], [[], [1, 1]]),
    rv!(0, [2, 1], [[], [2, 2], [2, 2]]),
    rv!(0, [3, 1], [[], [3, 3], [9, 9], [3, 3]]),
    rv!(0, [2, 2], [[], [4, 4], [10, 10], [4, 4]]),
    rv!(1, [1, 1], [[], [0, 1, 1]]),
    rv!(1, [2, 1], [[], [0, 6, 6], [0, 6, 6]]),
    rv!(1, [3, 1], [[], [0, 18, 18], [0, 51, 51], [0, 18, 18]]),
    rv!(1, [2, 2], [[], [0, 22, 22], [0, 56, 56], [0, 22, 22]]),
    rv!(2, [1, 1], [[], [1, 2, 2, 1]]),
    rv!(2, [2, 1], [[], [10, 20, 24, 14], [10, 20, 24, 14]]),
    rv!(2, [3, 1], [[], [45, 90, 120, 75], [120, 240, 324, 204], [45, 90, 120, 75]]),
    rv!(2, [2, 2], [[], [50, 100, 136, 86], [128, 256, 348, 220], [50, 100, 136, 86]]),
    rv!(0, [1, 1, 1], [[], [4, 8, 4], [4, 8, 4]]),
    rv!(0, [2, 1, 1], [[], [10, 20, 10], [28, 56, 28], [10, 20, 10]]),
    rv!(1, [1, 1, 1], [[], [0, 12, 24, 12], [0, 12, 24, 12]]),
    rv!(1, [2, 1, 1], [[], [0, 58, 116, 58], [0, 158, 316, 158], [0, 58, 116, 58]]),
    rv!(2, [1, 1, 1], [[], [20, 60, 88, 76, 28], [20, 60, 88, 76, 28]]),
    rv!(2, [2, 1, 1], [[], [140, 420, 656, 612, 236], [368, 1104, 1732, 1624, 628], [140, 420, 656, 612, 236]]),
];
