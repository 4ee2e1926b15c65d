use super::CliError;
use crate::exactnum::{parse_rational, Rational};
use serde::{Deserialize, Serialize};
use std::path::{Path, PathBuf};

pub const CONFIG_ENV: &str = "WGCALC_CONFIG";
pub const CACHE_ENV: &str = "WGCALC_CACHE_DIR";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

/// Keys accepted in the file named by `WGCALC_CONFIG`. Every key is
/// optional.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub k_max: Option<usize>,
    pub mu_max: Option<usize>,
    pub r_max: Option<usize>,
    pub jack_bound: Option<usize>,
    pub hbar_order: Option<usize>,
    pub b_set: Option<Vec<String>>,
    pub cache_dir: Option<PathBuf>,
    pub format: Option<OutputFormat>,
    pub expensive: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    /// Largest Weingarten / JM level.
    pub k_max: usize,
    /// Largest `|μ|` for Hurwitz numbers and sweeps.
    pub mu_max: usize,
    /// Largest series order.
    pub r_max: usize,
    pub jack_bound: usize,
    pub hbar_order: usize,
    pub b_set: Vec<Rational>,
    pub cache_dir: Option<PathBuf>,
    pub format: OutputFormat,
    pub expensive: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            k_max: crate::weingarten::DEFAULT_WG_BOUND,
            mu_max: 10,
            r_max: 8,
            jack_bound: crate::symfunc::JACK_DEGREE_BOUND,
            hbar_order: 8,
            b_set: [-5, -4, -3, -2, 1, 2, 3, 4, 5].iter().map(|&b| Rational::from_integer(b.into())).collect(),
            cache_dir: None,
            format: OutputFormat::Text,
            expensive: crate::jmops::expensive_enabled(),
        }
    }
}

/// Overrides from the command line; `None` leaves the lower layer alone.
#[derive(Clone, Debug, Default)]
pub struct FlagOverrides {
    pub config: Option<PathBuf>,
    pub cache_dir: Option<PathBuf>,
    pub format: Option<OutputFormat>,
    pub expensive: bool,
}

pub fn parse_b_list(s: &str) -> Result<Vec<Rational>, CliError> {
    s.split(',')
        .filter(|x| !x.trim().is_empty())
        .map(|x| parse_rational(x.trim()).ok_or_else(|| CliError::Usage(format!("invalid rational '{x}'"))))
        .collect()
}

impl RunConfig {
    /// Defaults, then the config file, then the environment cache
    /// directory, then flags.
    pub fn load(flags: &FlagOverrides) -> Result<RunConfig, CliError> {
        let mut cfg = RunConfig::default();
        let path = flags.config.clone().or_else(|| std::env::var_os(CONFIG_ENV).map(PathBuf::from));
        if let Some(path) = path {
            cfg.apply_file(&path)?;
        }
        if let Some(dir) = std::env::var_os(CACHE_ENV) {
            cfg.cache_dir = Some(PathBuf::from(dir));
        }
        if let Some(dir) = &flags.cache_dir {
            cfg.cache_dir = Some(dir.clone());
        }
        if let Some(f) = flags.format {
            cfg.format = f;
        }
        cfg.expensive |= flags.expensive;
        cfg.validate()?;
        Ok(cfg)
    }

    fn apply_file(&mut self, path: &Path) -> Result<(), CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
        let file: ConfigFile = toml::from_str(&text).map_err(|e| CliError::Usage(format!("bad config {}: {e}", path.display())))?;
        macro_rules! take {
            ($($f:ident),*) => { $(if let Some(v) = file.$f { self.$f = v; })* };
        }
        take!(k_max, mu_max, r_max, jack_bound, hbar_order, format, expensive);
        if let Some(dir) = file.cache_dir {
            self.cache_dir = Some(dir);
        }
        if let Some(bs) = file.b_set {
            self.b_set = parse_b_list(&bs.join(","))?;
        }
        Ok(())
    }

    fn validate(&self) -> Result<(), CliError> {
        for (name, v) in [("k_max", self.k_max), ("mu_max", self.mu_max), ("r_max", self.r_max), ("jack_bound", self.jack_bound), ("hbar_order", self.hbar_order)] {
            if v == 0 {
                return Err(CliError::Usage(format!("{name} must be positive")));
            }
        }
        Ok(())
    }

    pub fn b_set_string(&self) -> String {
        self.b_set.iter().map(|b| b.to_string()).collect::<Vec<_>>().join(",")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_then_flags() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("wg.toml");
        std::fs::write(&path, "k_max = 3\nb_set = [\"1\", \"-1/2\"]\nformat = \"json\"\n").unwrap();
        let flags = FlagOverrides { config: Some(path.clone()), format: Some(OutputFormat::Csv), ..Default::default() };
        let cfg = RunConfig::load(&flags).unwrap();
        assert_eq!(cfg.k_max, 3);
        assert_eq!(cfg.b_set_string(), "1,-1/2");
        assert_eq!(cfg.format, OutputFormat::Csv);
        std::fs::write(&path, "nonsense = 1\n").unwrap();
        assert!(matches!(RunConfig::load(&flags), Err(CliError::Usage(_))));
    }
}
