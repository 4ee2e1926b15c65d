use std::path::Path;
use std::process::{Command, Output};

fn wgcalc(args: &[&str], cache: Option<&Path>, config: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_wgcalc"));
    cmd.args(args).env_remove("WGCALC_CACHE_DIR").env_remove("WGCALC_CONFIG").env_remove("WGCALC_EXPENSIVE");
    if let Some(dir) = cache {
        cmd.env("WGCALC_CACHE_DIR", dir);
    }
    if let Some(file) = config {
        cmd.env("WGCALC_CONFIG", file);
    }
    cmd.output().expect("binary runs")
}

fn run(args: &[&str]) -> Output {
    wgcalc(args, None, None)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["hurwitz", "0", "1", "3"]).status.code(), Some(0));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["hurwitz", "1/3", "1", "3"]).status.code(), Some(2));
    assert_eq!(run(&["hurwitz", "0", "1", "9", "--method", "enum"]).status.code(), Some(3));
    assert_eq!(run(&["jm-verify", "--k", "6"]).status.code(), Some(3));
    assert_eq!(run(&["jm-verify", "--k", "5"]).status.code(), Some(3));
    assert_eq!(run(&["wg", "--k", "7"]).status.code(), Some(3));
    assert_eq!(run(&["sweep", "--b", "-1"]).status.code(), Some(2));
    assert_eq!(run(&["cache", "ls"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn weingarten_closed_forms() {
    let o = run(&["wg", "--profile", "bt", "--pairing", "(1 3|2 4)"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("N*M - M^2"), "{text}");
    let o = run(&["wg", "--profile", "O", "--k", "1"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn methods_agree() {
    let o = run(&["--format", "json", "hurwitz", "1/2", "2", "2,1", "--method", "all"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["agree"], true);
    assert_eq!(v["methods"].as_array().unwrap().len(), 3);
}

#[test]
fn tables_and_virasoro_suites() {
    let o = run(&["verify", "tables"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("38 of 38"));
    let o = run(&["verify", "virasoro", "--k-max", "3", "--commutator-max", "3", "--seeds", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn jm_suite_small() {
    let o = run(&["verify", "jm", "--k", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn sweep_csv() {
    let o = run(&["sweep", "--g", "0,1/2", "--n", "2", "--max-size", "4", "--b", "1,-2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("g,n,mu,b,real_rooted,interlacing_pass,witness"));
    assert!(text.lines().skip(1).all(|l| l.contains(",true,true,")), "{text}");
}

#[test]
fn cache_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["jack", "2,1"];
    let first = wgcalc(&args, Some(dir.path()), None);
    let second = wgcalc(&args, Some(dir.path()), None);
    let uncached = run(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.stdout, uncached.stdout);

    let ls = wgcalc(&["cache", "ls"], Some(dir.path()), None);
    assert_eq!(ls.status.code(), Some(0));
    assert_eq!(stdout(&ls).lines().count(), 1);

    // a corrupted record is dropped by gc and recomputed on the next run
    let record = std::fs::read_dir(dir.path()).unwrap().next().unwrap().unwrap().path();
    std::fs::write(&record, "not json").unwrap();
    let gc = wgcalc(&["cache", "gc"], Some(dir.path()), None);
    assert!(stdout(&gc).contains("removed 1"), "{}", stdout(&gc));
    let third = wgcalc(&args, Some(dir.path()), None);
    assert_eq!(third.stdout, uncached.stdout);
    let all = wgcalc(&["cache", "gc", "--all"], Some(dir.path()), None);
    assert!(stdout(&all).contains("kept 0"));
}

#[test]
fn config_file_bounds() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("wgcalc.toml");
    std::fs::write(&file, "k_max = 2\nmu_max = 3\n").unwrap();
    assert_eq!(wgcalc(&["wg", "--k", "3"], None, Some(&file)).status.code(), Some(3));
    assert_eq!(wgcalc(&["hurwitz", "0", "1", "4"], None, Some(&file)).status.code(), Some(3));
    assert_eq!(wgcalc(&["hurwitz", "0", "1", "3"], None, Some(&file)).status.code(), Some(0));
    std::fs::write(&file, "colour = \"blue\"\n").unwrap();
    assert_eq!(wgcalc(&["hurwitz", "0", "1", "3"], None, Some(&file)).status.code(), Some(2));
}

#[test]
fn in_process_entry_point() {
    assert_eq!(wgcalc::cli::main_with_args(["wgcalc", "hurwitz", "1", "1", "3", "--method", "all"]), 0);
    assert_eq!(wgcalc::cli::main_with_args(["wgcalc", "hurwitz"]), 2);
}
