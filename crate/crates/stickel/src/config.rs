use std::collections::BTreeSet;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use stickel_core::curve::CurveData;
use stickel_core::groupring::DEFAULT_R_MAX;
use stickel_core::lseries::DEFAULT_DIGITS;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    Theta,
    Ord,
    Norm,
    Funceq,
    Parity,
    Special,
    MazurTate,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::Theta,
        Check::Ord,
        Check::Norm,
        Check::Funceq,
        Check::Parity,
        Check::Special,
        Check::MazurTate,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Theta => "theta",
            Check::Ord => "ord",
            Check::Norm => "norm",
            Check::Funceq => "funceq",
            Check::Parity => "parity",
            Check::Special => "special",
            Check::MazurTate => "mazur-tate",
        }
    }
}

impl FromStr for Check {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| CliError::Usage(format!("unknown check {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    Json,
    Csv,
    #[default]
    Text,
}

impl FromStr for OutputFormat {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "text" => Ok(OutputFormat::Text),
            _ => Err(CliError::Usage(format!("unknown format {s:?} (json|csv|text)"))),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
            OutputFormat::Text => "text",
        })
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub curves: Vec<CurveData>,
    pub moduli: Vec<u64>,
    pub checks: BTreeSet<Check>,
    pub r_max: u32,
    pub digits: u32,
    pub cache_dir: Option<PathBuf>,
    pub format: OutputFormat,
}

impl RunConfig {
    pub fn new(curves: Vec<CurveData>, moduli: Vec<u64>, checks: impl IntoIterator<Item = Check>) -> Self {
        Self {
            curves,
            moduli,
            checks: checks.into_iter().collect(),
            r_max: DEFAULT_R_MAX,
            digits: DEFAULT_DIGITS,
            cache_dir: None,
            format: OutputFormat::Text,
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.checks.is_empty() {
            return Err(CliError::Usage("no checks selected".into()));
        }
        if self.curves.is_empty() {
            return Err(CliError::Usage("no curves selected".into()));
        }
        if self.moduli.is_empty() {
            return Err(CliError::Usage("no moduli given".into()));
        }
        if let Some(m) = self.moduli.iter().find(|&&m| m < 3) {
            return Err(CliError::Usage(format!("modulus {m} is below 3")));
        }
        if !(1..=15).contains(&self.digits) {
            return Err(CliError::Usage("--digits must lie in 1..=15".into()));
        }
        Ok(())
    }

    pub fn wants(&self, check: Check) -> bool {
        self.checks.contains(&check)
    }
}

/// `A..B` (inclusive), `A,B,C`, or a single modulus.
pub fn parse_moduli(s: &str) -> Result<Vec<u64>, CliError> {
    let bad = || CliError::Usage(format!("cannot parse moduli {s:?}"));
    let num = |t: &str| t.trim().parse::<u64>().map_err(|_| bad());
    let mut out = if let Some((a, b)) = s.split_once("..") {
        let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
        if a > b {
            return Err(bad());
        }
        (a..=b).collect()
    } else {
        s.split(',').map(num).collect::<Result<Vec<_>, _>>()?
    };
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// `STICKEL_CACHE`, when set and nonempty, overrides `--cache`.
pub fn cache_dir(flag: Option<PathBuf>) -> Option<PathBuf> {
    std::env::var_os("STICKEL_CACHE")
        .filter(|v| !v.is_empty())
        .map(PathBuf::from)
        .or(flag)
}
