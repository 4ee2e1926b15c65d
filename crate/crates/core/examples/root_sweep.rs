use wgcalc::analysis::{hurwitz_in_t, interlaces, is_real_rooted, sweep, SweepSpec};
use wgcalc::exactnum::Rational;
use wgcalc::hurwitz::Genus;

fn main() {
    let b = Rational::from_integer(2.into());
    let p = hurwitz_in_t(Genus(0), &"3".parse().unwrap(), &b);
    let q = hurwitz_in_t(Genus(0), &"4".parse().unwrap(), &b);
    let (rooted, report) = is_real_rooted(&q).unwrap();
    println!("H_0(4) at b = 2: {}  real-rooted {rooted}", q.display_in("t"));
    for r in &report.roots {
        println!("  root {} x{}", r.location, r.multiplicity);
    }
    println!("H_0(3) interlaces H_0(4): {}", interlaces(&p, &q).unwrap());

    let spec = SweepSpec {
        genera: vec![Genus(0), Genus(1)],
        n_max: 2,
        size_min: 1,
        size_max: 5,
        b_values: [-3, 1, 4].map(|x| Rational::from_integer(x.into())).to_vec(),
    };
    let out = sweep(&spec).unwrap();
    println!("{} rows, {} checks, all passed: {}", out.rows.len(), out.checks, out.all_passed());
    print!("{}", out.to_csv().lines().take(6).collect::<Vec<_>>().join("\n"));
    println!();
}
