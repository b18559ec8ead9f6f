//! Run configuration shared by every subcommand.

use std::fmt;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use quadrics_core::orbits::Method;
use quadrics_core::Cutoffs;

use crate::CliError;

/// Smallest cutoff that still lets every documented example run.
pub const MIN_CUTOFF: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(CliError::Usage(format!("unknown format {s:?} (text, json, csv)"))),
        }
    }
}

/// `all` or a single route to `b(X_n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MethodSel {
    #[default]
    All,
    One(Method),
}

impl MethodSel {
    pub fn methods(self) -> Vec<Method> {
        match self {
            MethodSel::All => Method::ALL.to_vec(),
            MethodSel::One(m) => vec![m],
        }
    }
}

impl FromStr for MethodSel {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        if s == "all" {
            return Ok(MethodSel::All);
        }
        s.parse::<Method>()
            .map(MethodSel::One)
            .map_err(|e| CliError::Usage(e.to_string()))
    }
}

/// Inclusive `a..b` (also accepts `a..=b` and a bare `n`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NRange(pub RangeInclusive<usize>);

impl NRange {
    pub fn single(n: usize) -> Self {
        NRange(n..=n)
    }

    pub fn start(&self) -> usize {
        *self.0.start()
    }

    pub fn end(&self) -> usize {
        *self.0.end()
    }

    pub fn iter(&self) -> RangeInclusive<usize> {
        self.0.clone()
    }

    pub fn is_single(&self) -> bool {
        self.start() == self.end()
    }

    /// Intersection with `lo..=hi`, `None` if empty.
    pub fn clip(&self, lo: usize, hi: usize) -> Option<NRange> {
        let a = self.start().max(lo);
        let b = self.end().min(hi);
        (a <= b).then_some(NRange(a..=b))
    }
}

impl fmt::Display for NRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_single() {
            write!(f, "{}", self.start())
        } else {
            write!(f, "{}..{}", self.start(), self.end())
        }
    }
}

impl FromStr for NRange {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let bad = || CliError::Usage(format!("bad range {s:?}; expected a..b"));
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        let range = match s.split_once("..") {
            Some((a, b)) => num(a)?..=num(b.strip_prefix('=').unwrap_or(b))?,
            None => {
                let n = num(s)?;
                n..=n
            }
        };
        if range.is_empty() {
            return Err(bad());
        }
        Ok(NRange(range))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Count { range: NRange, method: MethodSel },
    Table { n: usize },
    Verify { range: Option<NRange> },
    Conjecture { range: NRange },
    Sequence { name: String, terms: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub format: Format,
    pub cutoffs: Cutoffs,
    pub cache: Option<PathBuf>,
    pub jobs: Option<usize>,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            format: Format::Text,
            cutoffs: Cutoffs::default(),
            cache: None,
            jobs: None,
        }
    }

    /// Rejects configurations that could not run the documented examples.
    pub fn validate(&self) -> Result<(), CliError> {
        let Cutoffs { perm_scan, boxes } = self.cutoffs;
        if perm_scan < MIN_CUTOFF || boxes < MIN_CUTOFF {
            return Err(CliError::Usage(format!(
                "cutoffs must be at least {MIN_CUTOFF} (got --cutoff-perm {perm_scan}, --cutoff-boxes {boxes})"
            )));
        }
        if perm_scan >= quadrics_core::coxeter::MAX_RANK {
            return Err(CliError::Usage(format!("--cutoff-perm {perm_scan} is too large")));
        }
        if self.jobs == Some(0) {
            return Err(CliError::Usage("--jobs must be positive".into()));
        }
        Ok(())
    }
}
