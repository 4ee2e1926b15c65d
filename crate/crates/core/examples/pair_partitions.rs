//! Pair partitions of `{1..2k}`, their coset types and charges, and the
//! weight of a single transposition step.

use wgcalc::pairings::{all_pair_partitions, omega, PairPartition};

fn main() {
    let m: PairPartition = "(1 4|2 6|3 5)".parse().unwrap();
    println!("m = {m}, coset type {}", m.coset_type());
    let ch = m.charges();
    for cycle in &ch.cycles {
        let marks: Vec<String> = cycle.iter().map(|&v| format!("{v}{:?}", ch.charge(v))).collect();
        println!("  cycle {}", marks.join(" "));
    }

    for i in 1..5 {
        let n = m.act(i, 5).unwrap();
        println!("  ({i} 5) . m = {n}  weight {:?}", omega(&m, &n));
    }

    for k in 1..=4 {
        let all = all_pair_partitions(k);
        let identity = all.iter().filter(|p| p.is_identity()).count();
        println!("P_{k}: {} pair partitions, {identity} identity", all.len());
    }
}
