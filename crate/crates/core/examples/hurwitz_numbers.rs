//! One Hurwitz number computed four ways: the cut-join-flip recursion,
//! counting monotone factorisations, the Jack expansion of the partition
//! function, and the large-N expansion of a Weingarten value.

use wgcalc::exactnum::{frac_equal, MPoly, RatFrac, Var};
use wgcalc::hurwitz::{h_bt, h_from_jack, hurwitz_h, hurwitz_h_enum, hurwitz_h_jack, representative, Genus};
use wgcalc::partitions::Partition;
use wgcalc::weingarten::{wg_series, wg_solve, GraphProfile};

fn main() {
    let g: Genus = "1/2".parse().unwrap();
    let mu: Partition = "2,1".parse().unwrap();
    println!("recursion   H = {}", hurwitz_h(g, mu.parts()));
    println!("enumeration H = {}", hurwitz_h_enum(g, &mu));
    println!("Jack        H = {}", hurwitz_h_jack(g, &mu).unwrap());

    let lam: Partition = "2,2".parse().unwrap();
    let k = lam.size();
    let wg = wg_solve(k, &GraphProfile::bt()).unwrap().value(&representative(&lam)).unwrap();
    let series = wg_series(&wg, 4).unwrap();
    let one_minus_t = RatFrac::from_poly(&MPoly::one() - &MPoly::var(Var::T));
    for r in 0..=4 {
        let from_wg = &(series.coeff(r).unwrap() * &one_minus_t.pow(k as u32)) * &RatFrac::int(if r % 2 == 0 { 1 } else { -1 });
        let h = h_bt(&lam, r);
        let jack_agrees = h_from_jack(&lam, r).unwrap() == h;
        let wg_agrees = frac_equal(&from_wg, &RatFrac::from_poly(h.clone()));
        println!("h_{r}({lam}) = {h}   jack: {jack_agrees}, Wg: {wg_agrees}");
    }
}
