//! Exact Weingarten values for the four graph profiles, their large-`N`
//! expansion, and moments of the real Grassmannian.

use wgcalc::exactnum::{frac_equal, Rational};
use wgcalc::weingarten::{integrate_monomial, path_series, wg_series, wg_solve, GraphProfile, ProfileName};

fn main() {
    for name in ProfileName::all() {
        let table = wg_solve(2, &GraphProfile::new(name)).unwrap();
        for (lam, v) in table.class_values() {
            println!("Wg^{name}({lam}) = {v}");
        }
    }

    let bt = GraphProfile::bt();
    let m = "(1 4|2 3)".parse().unwrap();
    let v = wg_solve(2, &bt).unwrap().value(&m).unwrap();
    let exact = wg_series(&v, 3).unwrap();
    let paths = path_series(&m, &bt, 3);
    for r in 0..=3 {
        let (e, p) = (exact.coeff(r).unwrap(), paths.coeff(r).unwrap());
        println!("[N^-{r}] {p}   matches exact expansion: {}", frac_equal(e, p));
    }

    // E[A_11 A_22] and E[A_11^2] on the Grassmannian of 2-planes in R^4
    let cross = integrate_monomial(&[1, 1, 2, 2], 2, 4).unwrap();
    let square = integrate_monomial(&[1, 1, 1, 1], 2, 4).unwrap();
    println!("E[A11 A22] = {cross}, E[A11^2] = {square}");
    assert!(square > cross && cross > Rational::from_integer(0.into()));
}
