use wgcalc::exactnum::{BFrac, Rational};
use wgcalc::partitions::{all_partitions, hook_products_uni, Partition};
use wgcalc::symfunc::{inner_product_b, jack, laplace_beltrami};

fn main() {
    for k in 1..=3 {
        for lam in all_partitions(k) {
            println!("J_({lam}) = {}", jack(&lam).unwrap());
        }
    }

    // (4,1,1) and (3,3) share a Laplace-Beltrami eigenvalue
    let a: Partition = "4,1,1".parse().unwrap();
    let b: Partition = "3,3".parse().unwrap();
    let (ja, jb) = (jack(&a).unwrap(), jack(&b).unwrap());
    let eig = |j: &wgcalc::symfunc::SymFunc| {
        let d = laplace_beltrami(j);
        let (mu, c) = j.terms().next().unwrap();
        &d.coeff(mu) * &c.recip().unwrap()
    };
    println!("eigenvalue on J_(4,1,1): {}", eig(&ja));
    println!("eigenvalue on J_(3,3):   {}", eig(&jb));
    println!("<J_(4,1,1), J_(3,3)>_b = {}", inner_product_b(&ja, &jb));
    let (h, hp) = hook_products_uni(&b);
    assert_eq!(inner_product_b(&jb, &jb), BFrac::from_poly(&h * &hp));

    let zonal = jack(&"2,1".parse().unwrap()).unwrap().specialize_b(&Rational::from_integer(1.into()));
    for (mu, c) in zonal {
        println!("J_(2,1) at b = 1: [p_({mu})] {c}");
    }
}
