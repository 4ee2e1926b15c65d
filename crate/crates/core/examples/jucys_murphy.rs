//! The b-deformed Jucys-Murphy operators on the span of pair partitions.

use wgcalc::jmops::{j_apply, orbit_space, tableau_contents, verify_suite, w_tableau, PkVector, SuiteFlags};
use wgcalc::partitions::all_tableaux;

fn main() {
    let k = 3;
    println!("orbit space at k = {k}: dim {}", orbit_space(k).unwrap().dim());
    for t in all_tableaux(k) {
        let w = w_tableau(&t);
        let contents: Vec<String> = tableau_contents(&t).iter().map(|c| c.display_in("b")).collect();
        let jw = j_apply(k, &w).unwrap();
        println!("{t}\n  contents {}  J_{k} w_T = c w_T: {}", contents.join(" "), jw == w.scale(&wgcalc::exactnum::BFrac::from_poly(tableau_contents(&t)[k - 1].clone())));
    }

    let e = PkVector::identity(2);
    println!("J_2 e_2 = {}", j_apply(2, &e).unwrap());

    let report = verify_suite(3, &SuiteFlags::default()).unwrap();
    for r in &report.records {
        println!("{:<20} {:?} {:?}", r.check, r.kind, r.status);
    }
}
