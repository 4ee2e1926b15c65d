//! Rational functions in several variables, their expansion at infinity and
//! the JSON form used by the cache.

use wgcalc::exactnum::{frac_equal, series_at_infinity, RatFrac, Var};

fn main() {
    let n = RatFrac::var(Var::N);
    let m = RatFrac::var(Var::M);
    let one = RatFrac::one();

    let f = &m / &(&n - &one);
    let g = &(&m * &(&n + &one)) / &(&(&n * &n) - &one);
    println!("f = {f}");
    println!("g = {g}");
    println!("f == g: {}", frac_equal(&f, &g));

    let s = series_at_infinity(&f, Var::N, 4).expect("no pole at infinity");
    for (r, c) in s.coeffs().iter().enumerate() {
        println!("  [N^-{r}] {c}");
    }

    let json = f.to_json();
    println!("{json}");
    assert!(frac_equal(&RatFrac::from_json(&json).unwrap(), &f));
}
