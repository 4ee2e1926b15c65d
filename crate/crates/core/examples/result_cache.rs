//! The content-addressed result cache behind the command line tool.

use wgcalc::cli::{Cache, CliError};

fn main() -> Result<(), CliError> {
    let dir = tempfile::tempdir().map_err(|e| CliError::Io(e.to_string()))?;
    let cache = Cache::open(dir.path())?;
    let key = "hurwitz g=0 mu=3";
    let mut computed = 0;
    for _ in 0..3 {
        let v = cache.get_or_put(key, || {
            computed += 1;
            Ok(wgcalc::hurwitz::hurwitz_h(wgcalc::hurwitz::Genus(0), &[3]).to_string())
        })?;
        println!("{key} -> {v}");
    }
    println!("computed {computed} time(s); keys: {:?}", cache.list());
    let report = cache.gc(true)?;
    println!("gc: kept {}, removed {}", report.kept, report.removed);
    Ok(())
}
