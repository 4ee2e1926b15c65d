use wgcalc::partitions::{all_partitions, contents_multiset_uni, dimension, hook_products_uni, standard_tableaux, Partition};

fn main() {
    let lam: Partition = "3,2".parse().unwrap();
    let (h, hp) = hook_products_uni(&lam);
    println!("lambda = {lam}, conjugate = {}", lam.conjugate());
    println!("hook_b  = {}", h.display_in("b"));
    println!("hook'_b = {}", hp.display_in("b"));
    let contents: Vec<String> = contents_multiset_uni(&lam).iter().map(|c| c.display_in("b")).collect();
    println!("b-contents: {}", contents.join(", "));

    println!("standard tableaux of shape {lam} ({}):", dimension(&lam));
    for t in standard_tableaux(&lam) {
        println!("{t}\n");
    }

    for k in 1..=6 {
        let count: usize = all_partitions(k).iter().map(|l| standard_tableaux(l).len()).sum();
        println!("k = {k}: {} partitions, {count} tableaux", all_partitions(k).len());
    }
}
