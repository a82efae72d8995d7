//! Exhaustive sweeps over `(d, n, k)` emitting one JSON line per cover.

use std::io::Write;

use gassner_core::spectral::{burnside_irreducibility, fixed_space_dim, specialize_rep};
use gassner_core::topology::{divisors_from_two, genus_riemann_hurwitz, homology_decomposition, CoverSpec};
use num_integer::Integer;
use serde::Serialize;

use crate::config::{JobConfig, Range};
use crate::error::{CliError, CliResult};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub d: u32,
    pub n: usize,
    pub k: Vec<i64>,
    pub weight_sum: i64,
    pub degenerate_divisors: Vec<u32>,
    pub genus: usize,
    pub genus_rh: usize,
    pub genus_match: bool,
    pub degenerate: bool,
    pub fixed_vector: bool,
    pub span_dim: usize,
    pub reducible: bool,
    pub degeneracy_match: bool,
}

/// Weight tuples of length `len` in `1..d` coprime to `d`, in lexicographic order.
pub fn weight_tuples(d: u32, len: usize) -> Vec<Vec<i64>> {
    let units: Vec<i64> = (1..d as i64).filter(|k| k.gcd(&(d as i64)) == 1).collect();
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                units.iter().map(move |&u| {
                    let mut t = t.clone();
                    t.push(u);
                    t
                })
            })
            .collect();
    }
    out
}

pub fn sweep_row(spec: &CoverSpec) -> CliResult<SweepRow> {
    let genus = homology_decomposition(spec)?.genus;
    let genus_rh = genus_riemann_hurwitz(spec)?;
    let rep = specialize_rep(spec.n, spec.d, &spec.k)?;
    let degenerate = rep.is_degenerate();
    let fixed_vector = fixed_space_dim(&rep) > 0;
    let span_dim = burnside_irreducibility(&rep).span_dim;
    let reducible = span_dim < spec.n * spec.n;
    let sum = spec.weight_sum();
    Ok(SweepRow {
        d: spec.d,
        n: spec.n,
        k: spec.k.clone(),
        weight_sum: sum,
        degenerate_divisors: divisors_from_two(spec.d).into_iter().filter(|&e| sum % e as i64 == 0).collect(),
        genus,
        genus_rh,
        genus_match: genus == genus_rh,
        degenerate,
        fixed_vector,
        span_dim,
        reducible,
        degeneracy_match: degenerate == fixed_vector && degenerate == reducible,
    })
}

fn range(job: &JobConfig, r: Option<Range>, what: &str, min: u64) -> CliResult<Range> {
    let r = r.ok_or_else(|| CliError::Config(format!("sweep needs --{what}")))?;
    if !r.is_empty() && r.lo < min {
        return Err(CliError::Config(format!("sweep range --{what} {r} must start at {min} or above ({})", job.command)));
    }
    Ok(r)
}

/// Rows in order of `d`, then `n`, then `k` lexicographically.
pub fn sweep(job: &JobConfig, out: &mut dyn Write) -> CliResult<()> {
    let d = range(job, job.d, "d", 2)?;
    let n = range(job, job.n, "n", 1)?;
    if !d.is_empty() && d.hi > u64::from(job.cap) {
        return Err(CliError::Config(format!("sweep --d {d} exceeds the cap {}", job.cap)));
    }
    let io = |e: std::io::Error| CliError::Io { path: "output".into(), source: e };
    for dv in d.iter() {
        for nv in n.iter() {
            for k in weight_tuples(dv as u32, nv as usize + 1) {
                let row = sweep_row(&CoverSpec::new(dv as u32, k)?)?;
                let line = serde_json::to_string(&row).expect("rows serialize");
                writeln!(out, "{line}").map_err(io)?;
            }
        }
    }
    Ok(())
}
