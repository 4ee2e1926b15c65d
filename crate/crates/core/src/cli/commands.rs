use super::{CacheAction, Cache, CliError, HurwitzArgs, HurwitzMethod, JackArgs, JmArgs, Output, OutputFormat, RootArgs, RunConfig, VirasoroArgs, WgArgs};
use crate::analysis::{sweep, AnalysisError, SweepSpec};
use crate::exactnum::{parse_rational, FracRecord, MPoly, PolyRecord, RatFrac};
use crate::hurwitz::{
    commutator_check, hurwitz_h, hurwitz_h_enum, hurwitz_h_jack, virasoro_residual, Genus, REFERENCE_VALUES,
};
use crate::jmops::{verify_suite, SuiteFlags, SuiteReport, DEFAULT_JM_MAX, JM_HARD_MAX};
use crate::pairings::PairPartition;
use crate::partitions::Partition;
use crate::symfunc::{jack_with_bound, SymFuncError};
use crate::weingarten::{wg_series, wg_solve_bounded, GraphProfile, ProfileName, WeingartenError};
use serde_json::json;
use std::fmt::Write;

/// Largest `|μ|` for the enumeration and Jack methods.
const ENUM_SIZE_MAX: usize = 7;
const JACK_SIZE_MAX: usize = 6;

pub(super) struct Ctx {
    pub cfg: RunConfig,
    pub cache: Option<Cache>,
}

impl Ctx {
    fn format(&self) -> OutputFormat {
        self.cfg.format
    }

    fn cached(&self, key: &str, compute: impl FnOnce() -> Result<String, CliError>) -> Result<String, CliError> {
        let key = format!("{key} format={:?}", self.format());
        match &self.cache {
            Some(c) => c.get_or_put(&key, compute),
            None => compute(),
        }
    }
}

fn usage<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Usage(e.to_string())
}

fn wg_error(e: WeingartenError) -> CliError {
    match e {
        WeingartenError::BoundExceeded { .. } => CliError::Bounds(e.to_string()),
        other => CliError::Usage(other.to_string()),
    }
}

fn sym_error(e: SymFuncError) -> CliError {
    match e {
        SymFuncError::DegreeBoundExceeded { .. } => CliError::Bounds(e.to_string()),
        other => CliError::Usage(other.to_string()),
    }
}

fn json_line(v: serde_json::Value) -> String {
    format!("{}\n", serde_json::to_string(&v).expect("json value serializes"))
}

fn frac_json(f: &RatFrac) -> serde_json::Value {
    serde_json::to_value(FracRecord::from_frac(f)).expect("record serializes")
}

// ---------------------------------------------------------------------------
// wg

pub(super) fn wg(ctx: &Ctx, a: &WgArgs) -> Result<Output, CliError> {
    let name: ProfileName = a.profile.parse().map_err(usage)?;
    let pairing: Option<PairPartition> = a.pairing.as_deref().map(str::parse).transpose().map_err(usage)?;
    let k = pairing.as_ref().map(|p| p.k()).or(a.k).expect("clap requires k or pairing");
    if let Some(r) = a.series {
        if r > ctx.cfg.r_max {
            return Err(CliError::Bounds(format!("series order {r} exceeds r_max {}", ctx.cfg.r_max)));
        }
    }
    let key = format!("wg profile={name} k={k} pairing={} series={:?}", pairing.as_ref().map(|p| p.to_string()).unwrap_or_default(), a.series);
    let out = ctx.cached(&key, || {
        let table = wg_solve_bounded(k, &GraphProfile::new(name), ctx.cfg.k_max).map_err(wg_error)?;
        let rows: Vec<(String, RatFrac)> = match &pairing {
            Some(p) => vec![(p.to_string(), table.value(p).expect("same level"))],
            None => table.class_values().into_iter().map(|(l, v)| (l.to_string(), v)).collect(),
        };
        let mut s = String::new();
        match a.series {
            None => match ctx.format() {
                OutputFormat::Json => {
                    let vals: Vec<_> = rows.iter().map(|(l, v)| json!({"key": l, "value": frac_json(v)})).collect();
                    s = json_line(json!({"profile": name.to_string(), "k": k, "values": vals}));
                }
                OutputFormat::Csv => {
                    s.push_str("key,value\n");
                    for (l, v) in &rows {
                        writeln!(s, "\"{l}\",\"{v}\"").unwrap();
                    }
                }
                OutputFormat::Text => {
                    for (l, v) in &rows {
                        writeln!(s, "Wg^{name}{l} = {v}").unwrap();
                    }
                }
            },
            Some(r) => {
                let mut all = Vec::new();
                for (l, v) in &rows {
                    let ser = wg_series(v, r).map_err(usage)?;
                    all.push((l.clone(), ser.coeffs().to_vec()));
                }
                match ctx.format() {
                    OutputFormat::Json => {
                        let vals: Vec<_> = all
                            .iter()
                            .map(|(l, cs)| json!({"key": l, "coefficients": cs.iter().map(frac_json).collect::<Vec<_>>()}))
                            .collect();
                        s = json_line(json!({"profile": name.to_string(), "k": k, "order": r, "series": vals}));
                    }
                    _ => {
                        for (l, cs) in &all {
                            for (i, c) in cs.iter().enumerate() {
                                writeln!(s, "Wg^{name}{l} [N^-{i}] = {c}").unwrap();
                            }
                        }
                    }
                }
            }
        }
        Ok(s)
    })?;
    Ok(Output::ok(out))
}

// ---------------------------------------------------------------------------
// hurwitz

fn hurwitz_value(method: HurwitzMethod, g: Genus, mu: &Partition) -> Result<MPoly, CliError> {
    match method {
        HurwitzMethod::Recursion => Ok(hurwitz_h(g, mu.parts())),
        HurwitzMethod::Enum => {
            if mu.size() > ENUM_SIZE_MAX {
                return Err(CliError::Bounds(format!("enumeration is limited to |mu| <= {ENUM_SIZE_MAX}")));
            }
            Ok(hurwitz_h_enum(g, mu))
        }
        HurwitzMethod::Jack => {
            if mu.size() > JACK_SIZE_MAX {
                return Err(CliError::Bounds(format!("the Jack method is limited to |mu| <= {JACK_SIZE_MAX}")));
            }
            hurwitz_h_jack(g, mu).map_err(sym_error)
        }
        HurwitzMethod::All => unreachable!("expanded by the caller"),
    }
}

pub(super) fn hurwitz(ctx: &Ctx, a: &HurwitzArgs) -> Result<Output, CliError> {
    let g: Genus = a.g.parse().map_err(CliError::Usage)?;
    let mu: Partition = a.mu.parse().map_err(usage)?;
    if mu.len() != a.n {
        return Err(CliError::Usage(format!("mu = {mu} has {} parts, expected n = {}", mu.len(), a.n)));
    }
    if mu.size() > ctx.cfg.mu_max {
        return Err(CliError::Bounds(format!("|mu| = {} exceeds mu_max {}", mu.size(), ctx.cfg.mu_max)));
    }
    let methods = match a.method {
        HurwitzMethod::All => vec![HurwitzMethod::Recursion, HurwitzMethod::Enum, HurwitzMethod::Jack],
        m => vec![m],
    };
    let mut values = Vec::new();
    for m in &methods {
        let key = format!("hurwitz g={g} mu={mu} method={m:?}");
        let rendered = ctx.cached(&key, || {
            let h = hurwitz_value(*m, g, &mu)?;
            Ok(serde_json::to_string(&PolyRecord::from_poly(&h)).expect("record serializes"))
        })?;
        let rec: PolyRecord = serde_json::from_str(&rendered).map_err(|e| CliError::Io(e.to_string()))?;
        values.push(rec.to_poly().map_err(|e| CliError::Io(e.to_string()))?);
    }
    let agree = values.windows(2).all(|w| w[0] == w[1]);
    let h = &values[0];
    let s = match ctx.format() {
        OutputFormat::Json => json_line(json!({
            "g": g.to_string(),
            "n": a.n,
            "mu": mu.parts(),
            "methods": methods.iter().map(|m| format!("{m:?}").to_lowercase()).collect::<Vec<_>>(),
            "agree": agree,
            "value": PolyRecord::from_poly(h),
        })),
        _ => {
            let mut s = format!("H_{{{g},{}}}{mu} = {h}\n", a.n);
            if !agree {
                for (m, v) in methods.iter().zip(&values) {
                    writeln!(s, "  {m:?}: {v}").unwrap();
                }
            }
            s
        }
    };
    Ok(Output::verdict(s, agree))
}

// ---------------------------------------------------------------------------
// jack

pub(super) fn jack(ctx: &Ctx, a: &JackArgs) -> Result<Output, CliError> {
    let lambda: Partition = a.lambda.parse().map_err(usage)?;
    let b = a.b.as_deref().map(|s| parse_rational(s).ok_or_else(|| CliError::Usage(format!("invalid rational '{s}'")))).transpose()?;
    let key = format!("jack lambda={lambda} b={:?} bound={}", a.b, ctx.cfg.jack_bound);
    let out = ctx.cached(&key, || {
        let j = jack_with_bound(&lambda, ctx.cfg.jack_bound).map_err(sym_error)?;
        Ok(match (ctx.format(), &b) {
            (OutputFormat::Json, None) => json_line(json!({"lambda": lambda.parts(), "terms": j.to_records()})),
            (OutputFormat::Json, Some(b)) => {
                let terms: Vec<_> = j.specialize_b(b).into_iter().map(|(mu, c)| json!({"mu": mu.parts(), "coef": c.to_string()})).collect();
                json_line(json!({"lambda": lambda.parts(), "b": b.to_string(), "terms": terms}))
            }
            (_, None) => format!("J_{lambda} = {j}\n"),
            (_, Some(b)) => {
                let terms: Vec<String> = j.specialize_b(b).into_iter().rev().map(|(mu, c)| format!("{c}*p{mu}")).collect();
                format!("J_{lambda}|b={b} = {}\n", terms.join(" + "))
            }
        })
    })?;
    Ok(Output::ok(out))
}

// ---------------------------------------------------------------------------
// verify

fn render_jm(ctx: &Ctx, reports: &[SuiteReport]) -> String {
    match ctx.format() {
        OutputFormat::Json => json_line(serde_json::to_value(reports).expect("reports serialize")),
        _ => {
            let mut s = String::new();
            for r in reports {
                for c in &r.records {
                    let status = if c.passed() { "PASS" } else { "FAIL" };
                    write!(s, "{status} k={} {:?} {}", r.k, c.kind, c.check).unwrap();
                    if let Some(w) = &c.witness {
                        write!(s, " witness: {w}").unwrap();
                    }
                    s.push('\n');
                }
            }
            s
        }
    }
}

pub(super) fn verify_jm(ctx: &Ctx, a: &JmArgs) -> Result<Output, CliError> {
    if a.k > JM_HARD_MAX {
        return Err(CliError::Bounds(format!("k = {} exceeds the hard limit {JM_HARD_MAX}", a.k)));
    }
    if a.k > DEFAULT_JM_MAX && !ctx.cfg.expensive {
        return Err(CliError::Bounds(format!("k = {} needs --expensive or WGCALC_EXPENSIVE=1", a.k)));
    }
    let flags = SuiteFlags::default();
    let mut reports = Vec::new();
    for k in 1..=a.k {
        reports.push(verify_suite(k, &flags).map_err(|e| CliError::Bounds(e.to_string()))?);
    }
    let passed = reports.iter().all(|r| r.all_passed());
    Ok(Output::verdict(render_jm(ctx, &reports), passed))
}

pub(super) fn verify_virasoro(ctx: &Ctx, a: &VirasoroArgs) -> Result<Output, CliError> {
    let hbar_order = a.hbar_order.unwrap_or(ctx.cfg.hbar_order);
    if a.k_max > ctx.cfg.mu_max || hbar_order > 2 * ctx.cfg.hbar_order.max(1) {
        return Err(CliError::Bounds(format!("k_max {} / hbar order {hbar_order} beyond configured bounds", a.k_max)));
    }
    let mut lines = Vec::new();
    let mut passed = true;
    for m in 1..=a.m_max {
        let res = virasoro_residual(m, a.k_max, hbar_order).map_err(usage)?;
        let ok = res.is_zero();
        passed &= ok;
        lines.push((format!("L_{m} Z = 0 (x^<= {}, hbar^<= {hbar_order})", a.k_max), ok, (!ok).then(|| format!("{} nonzero coefficients", res.len()))));
    }
    for m in 1..=a.commutator_max {
        for n in 1..=a.commutator_max {
            if m == n {
                continue;
            }
            let ok = (0..a.seeds).all(|seed| commutator_check(m, n, seed));
            passed &= ok;
            lines.push((format!("[L_{m}, L_{n}] = ({m}-{n}) L_{}", m + n), ok, None));
        }
    }
    let s = match ctx.format() {
        OutputFormat::Json => json_line(json!(lines.iter().map(|(c, ok, w)| json!({"check": c, "pass": ok, "witness": w})).collect::<Vec<_>>())),
        _ => lines
            .iter()
            .map(|(c, ok, w)| format!("{} {c}{}\n", if *ok { "PASS" } else { "FAIL" }, w.as_ref().map(|w| format!(" witness: {w}")).unwrap_or_default()))
            .collect(),
    };
    Ok(Output::verdict(s, passed))
}

pub(super) fn verify_tables(ctx: &Ctx) -> Result<Output, CliError> {
    let mut rows = Vec::new();
    for rv in REFERENCE_VALUES {
        let prod: usize = rv.mu.iter().product();
        let got = hurwitz_h(rv.genus(), rv.mu).scale(&crate::exactnum::rat(prod as i64));
        let want = rv.scaled();
        rows.push((rv.genus(), rv.mu, got == want, got, want));
    }
    let passed = rows.iter().all(|r| r.2);
    let s = match ctx.format() {
        OutputFormat::Json => json_line(json!(rows
            .iter()
            .map(|(g, mu, ok, got, _)| json!({"g": g.to_string(), "mu": mu, "pass": ok, "value": PolyRecord::from_poly(got)}))
            .collect::<Vec<_>>())),
        OutputFormat::Csv => {
            let mut s = String::from("g,n,mu,pass,scaled_value\n");
            for (g, mu, ok, got, _) in &rows {
                writeln!(s, "{g},{},\"{mu:?}\",{ok},\"{got}\"", mu.len()).unwrap();
            }
            s
        }
        OutputFormat::Text => {
            let mut s = String::new();
            for (g, mu, ok, got, want) in &rows {
                write!(s, "{} g={g} mu={mu:?}: prod(mu)*H = {got}", if *ok { "PASS" } else { "FAIL" }).unwrap();
                if !ok {
                    write!(s, " (expected {want})").unwrap();
                }
                s.push('\n');
            }
            writeln!(s, "{} of {} entries reproduced", rows.iter().filter(|r| r.2).count(), rows.len()).unwrap();
            s
        }
    };
    Ok(Output::verdict(s, passed))
}

fn parse_genera(s: &str) -> Result<Vec<Genus>, CliError> {
    s.split(',').filter(|x| !x.trim().is_empty()).map(|x| x.parse::<Genus>().map_err(CliError::Usage)).collect()
}

pub(super) fn roots(ctx: &Ctx, a: &RootArgs, full: bool) -> Result<Output, CliError> {
    let size_max = a.max_size.unwrap_or(ctx.cfg.mu_max);
    if size_max > ctx.cfg.mu_max {
        return Err(CliError::Bounds(format!("max size {size_max} exceeds mu_max {}", ctx.cfg.mu_max)));
    }
    let b_values = match &a.b {
        Some(s) => super::parse_b_list(s)?,
        None => ctx.cfg.b_set.clone(),
    };
    let spec = SweepSpec { genera: parse_genera(&a.g)?, n_max: a.n, size_min: a.min_size, size_max, b_values };
    let report = sweep(&spec).map_err(|e| match e {
        AnalysisError::ExcludedB(_) => CliError::Usage(e.to_string()),
        other => CliError::Usage(other.to_string()),
    })?;
    let passed = report.all_passed();
    let s = match (ctx.format(), full) {
        (OutputFormat::Json, _) => {
            let rows: Vec<_> = report
                .rows
                .iter()
                .filter(|r| full || !r.real_rooted || !r.interlacing_pass)
                .map(|r| {
                    json!({"g": r.g.to_string(), "n": r.n, "mu": r.mu.parts(), "b": r.b.to_string(),
                           "real_rooted": r.real_rooted, "interlacing_pass": r.interlacing_pass, "witness": r.witness})
                })
                .collect();
            json_line(json!({"keys": report.rows.len(), "checks": report.checks, "passed": passed, "rows": rows}))
        }
        (OutputFormat::Csv, _) | (_, true) => report.to_csv(),
        (OutputFormat::Text, false) => {
            let mut s = String::new();
            for r in report.failures() {
                writeln!(s, "FAIL g={} mu={} b={}: {}", r.g, r.mu, r.b, r.witness.clone().unwrap_or_default()).unwrap();
            }
            writeln!(
                s,
                "{} {} checks over {} (key, b) pairs, {} failing",
                if passed { "PASS" } else { "FAIL" },
                report.checks,
                report.rows.len(),
                report.failures().count()
            )
            .unwrap();
            s
        }
    };
    Ok(Output::verdict(s, passed))
}

// ---------------------------------------------------------------------------
// cache

pub(super) fn cache(ctx: &Ctx, action: &CacheAction) -> Result<Output, CliError> {
    let dir = ctx.cfg.cache_dir.as_ref().ok_or_else(|| CliError::Usage("no cache directory: set WGCALC_CACHE_DIR or --cache-dir".into()))?;
    let cache = Cache::open(dir)?;
    let s = match action {
        CacheAction::Ls => cache.list().into_iter().map(|k| format!("{k}\n")).collect(),
        CacheAction::Gc { all } => {
            let r = cache.gc(*all)?;
            format!("kept {}, removed {}\n", r.kept, r.removed)
        }
    };
    Ok(Output::ok(s))
}
