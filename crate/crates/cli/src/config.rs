//! Flags, `key = value` config files, and their merge into a validated job.

use std::fmt;
use std::path::{Path, PathBuf};

use clap::{Parser, ValueEnum};
use gassner_core::gassner::Basis;

use crate::error::{CliError, CliResult};

pub const DEFAULT_CAP: u32 = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum CommandName {
    Matrix,
    Verify,
    Form,
    Specialize,
    Spectral,
    Decompose,
    Dm,
    Classify,
    Signature,
    Sweep,
}

impl CommandName {
    pub fn as_str(self) -> &'static str {
        match self {
            CommandName::Matrix => "matrix",
            CommandName::Verify => "verify",
            CommandName::Form => "form",
            CommandName::Specialize => "specialize",
            CommandName::Spectral => "spectral",
            CommandName::Decompose => "decompose",
            CommandName::Dm => "dm",
            CommandName::Classify => "classify",
            CommandName::Signature => "signature",
            CommandName::Sweep => "sweep",
        }
    }
}

impl fmt::Display for CommandName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    Reduced,
    Unreduced,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Self {
        match b {
            BasisArg::Reduced => Basis::Reduced,
            BasisArg::Unreduced => Basis::Unreduced,
        }
    }
}

/// Inclusive integer range, written `a..b`, `a..=b` or a single value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Range {
    pub lo: u64,
    pub hi: u64,
}

impl Range {
    pub fn single(&self) -> Option<u64> {
        (self.lo == self.hi).then_some(self.lo)
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> {
        self.lo..=self.hi
    }
}

impl std::str::FromStr for Range {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let num = |t: &str| t.trim().parse::<u64>().map_err(|_| format!("`{s}` is not a number or range"));
        match s.split_once("..") {
            Some((a, b)) => Ok(Range { lo: num(a)?, hi: num(b.strip_prefix('=').unwrap_or(b))? }),
            None => {
                let v = num(s)?;
                Ok(Range { lo: v, hi: v })
            }
        }
    }
}

impl fmt::Display for Range {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.single() {
            Some(v) => write!(f, "{v}"),
            None => write!(f, "{}..{}", self.lo, self.hi),
        }
    }
}

/// Exact braid, form and root-of-unity computations with JSON reports.
#[derive(Clone, Debug, Default, Parser)]
#[command(name = "gassner", version)]
pub struct Flags {
    /// Operation to run; may instead come from `command = ...` in the config file.
    #[arg(value_enum)]
    pub command: Option<CommandName>,

    /// `key = value` file with the same keys as the long flags. Flags win.
    #[arg(long)]
    pub config: Option<PathBuf>,

    /// Rank n (the braid has n + 1 strands). A range `a..b` for sweep.
    #[arg(long)]
    pub n: Option<Range>,

    /// Cyclic order d. A range `a..b` for sweep.
    #[arg(long)]
    pub d: Option<Range>,

    /// Comma-separated weights k_1,...,k_{n+1}.
    #[arg(long)]
    pub k: Option<String>,

    /// Embedding index f, coprime to d.
    #[arg(long)]
    pub f: Option<i64>,

    /// Braid word: `s1 s2^-1`, `A r s[^e]`, `D a b[^e]` or a JSON array of signed letters.
    #[arg(long)]
    pub word: Option<String>,

    #[arg(long, value_enum)]
    pub basis: Option<BasisArg>,

    /// Seed for randomized checks.
    #[arg(long)]
    pub seed: Option<u64>,

    /// Write the report here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,

    /// Largest d a sweep may visit.
    #[arg(long)]
    pub cap: Option<u32>,
}

impl Flags {
    /// Fills every unset field from `other`.
    fn or(self, other: Flags) -> Flags {
        Flags {
            command: self.command.or(other.command),
            config: self.config.or(other.config),
            n: self.n.or(other.n),
            d: self.d.or(other.d),
            k: self.k.or(other.k),
            f: self.f.or(other.f),
            word: self.word.or(other.word),
            basis: self.basis.or(other.basis),
            seed: self.seed.or(other.seed),
            out: self.out.or(other.out),
            cap: self.cap.or(other.cap),
        }
    }
}

/// Parses `key = value` lines; `#` starts a comment.
pub fn parse_config_text(text: &str) -> CliResult<Flags> {
    let mut flags = Flags::default();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = |msg: String| CliError::Config(format!("line {}: {msg}", lineno + 1));
        let (key, value) = line.split_once('=').ok_or_else(|| bad(format!("expected `key = value`, got `{line}`")))?;
        let (key, value) = (key.trim(), value.trim());
        let parse_err = |e: String| bad(format!("{key}: {e}"));
        match key {
            "command" => flags.command = Some(CommandName::from_str(value, true).map_err(parse_err)?),
            "n" => flags.n = Some(value.parse().map_err(parse_err)?),
            "d" => flags.d = Some(value.parse().map_err(parse_err)?),
            "k" => flags.k = Some(value.to_string()),
            "f" => flags.f = Some(value.parse().map_err(|e: std::num::ParseIntError| parse_err(e.to_string()))?),
            "word" => flags.word = Some(value.to_string()),
            "basis" => flags.basis = Some(BasisArg::from_str(value, true).map_err(parse_err)?),
            "seed" => flags.seed = Some(value.parse().map_err(|e: std::num::ParseIntError| parse_err(e.to_string()))?),
            "out" => flags.out = Some(PathBuf::from(value)),
            "cap" => flags.cap = Some(value.parse().map_err(|e: std::num::ParseIntError| parse_err(e.to_string()))?),
            other => return Err(bad(format!("unknown key `{other}`"))),
        }
    }
    Ok(flags)
}

pub fn read_config(path: &Path) -> CliResult<Flags> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
    parse_config_text(&text)
}

pub fn parse_weights(text: &str) -> CliResult<Vec<i64>> {
    text.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| CliError::Config(format!("k: `{t}` is not an integer"))))
        .collect()
}

/// Resolved inputs. Which fields are required depends on the command.
#[derive(Clone, Debug, PartialEq)]
pub struct JobConfig {
    pub command: CommandName,
    pub n: Option<Range>,
    pub d: Option<Range>,
    pub k: Option<Vec<i64>>,
    pub f: Option<i64>,
    pub word: Option<String>,
    pub basis: BasisArg,
    pub seed: u64,
    pub out: Option<PathBuf>,
    pub cap: u32,
}

impl JobConfig {
    /// Merges flags over the config file they name, if any.
    pub fn resolve(flags: Flags) -> CliResult<Self> {
        let merged = match &flags.config {
            Some(path) => {
                let file = read_config(path)?;
                flags.or(file)
            }
            None => flags,
        };
        Self::from_flags(merged)
    }

    pub fn from_flags(flags: Flags) -> CliResult<Self> {
        let command = flags.command.ok_or_else(|| CliError::Config("no command given".into()))?;
        Ok(JobConfig {
            command,
            n: flags.n,
            d: flags.d,
            k: flags.k.as_deref().map(parse_weights).transpose()?,
            f: flags.f,
            word: flags.word,
            basis: flags.basis.unwrap_or(BasisArg::Reduced),
            seed: flags.seed.unwrap_or(0),
            out: flags.out,
            cap: flags.cap.unwrap_or(DEFAULT_CAP),
        })
    }

    /// A command line that reruns this job.
    pub fn reproducer(&self) -> String {
        let mut parts = vec!["gassner".to_string(), self.command.to_string()];
        if let Some(n) = self.n {
            parts.push(format!("--n {n}"));
        }
        if let Some(d) = self.d {
            parts.push(format!("--d {d}"));
        }
        if let Some(k) = &self.k {
            let ks: Vec<String> = k.iter().map(ToString::to_string).collect();
            parts.push(format!("--k {}", ks.join(",")));
        }
        if let Some(f) = self.f {
            parts.push(format!("--f {f}"));
        }
        if let Some(w) = &self.word {
            parts.push(format!("--word '{w}'"));
        }
        if self.basis != BasisArg::Reduced {
            parts.push("--basis unreduced".into());
        }
        if self.seed != 0 {
            parts.push(format!("--seed {}", self.seed));
        }
        if self.command == CommandName::Sweep {
            parts.push(format!("--cap {}", self.cap));
        }
        parts.join(" ")
    }
}
