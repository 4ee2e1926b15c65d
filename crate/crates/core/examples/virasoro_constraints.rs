use wgcalc::hurwitz::{commutator_check, virasoro_residual};

fn main() {
    for m in 1..=3 {
        let res = virasoro_residual(m, 4, 8).unwrap();
        println!("L_{m} Z: {} nonzero coefficients", res.len());
    }
    for m in 1..=4 {
        for n in (1..=4).filter(|&n| n != m) {
            println!("[L_{m}, L_{n}] = {} L_{}: {}", m as i64 - n as i64, m + n, commutator_check(m, n, 7));
        }
    }
}
