//! One function per subcommand, each producing a serializable report.

use std::collections::BTreeMap;
use std::io::Write;

use gassner_core::braid::{permutation_image, BraidWord};
use gassner_core::gassner::{evaluate_word, Basis, TwistedMapJson};
use gassner_core::hermitian::{
    cleared_form_matrix, form_determinant, form_matrix, is_degenerate, signature, signature_report, specialize_form,
    verify_invariance, Signature,
};
use gassner_core::matrix::MatrixStrings;
use gassner_core::spectral::{
    flag_unipotency_check, specialize_rep, specialize_word, spectral_report, FlagReport, SpectralReport,
};
use gassner_core::topology::{
    classify, dm_report, embeddings, genus_riemann_hurwitz, homology_decomposition, kernel_ranks, Classification,
    CoverSpec, DMReport, DecompositionReport, KernelRanks,
};
use serde::Serialize;

use crate::config::{CommandName, JobConfig, Range};
use crate::error::{CliError, CliResult};
use crate::sweep::sweep;

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    command: &'a str,
    #[serde(flatten)]
    body: T,
}

#[derive(Serialize)]
pub struct MatrixReport {
    pub strands: usize,
    pub basis: &'static str,
    pub word: String,
    pub pure: bool,
    #[serde(flatten)]
    pub map: TwistedMapJson,
}

#[derive(Serialize)]
pub struct VerifyReport {
    pub strands: usize,
    pub word: String,
    pub invariance: bool,
}

#[derive(Serialize)]
pub struct FormReport {
    pub n: usize,
    pub form: MatrixStrings,
    pub cleared_form: MatrixStrings,
    pub determinant: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub specialized: Option<SpecializedForm>,
}

#[derive(Serialize)]
pub struct SpecializedForm {
    pub d: u32,
    pub k: Vec<i64>,
    pub degenerate: bool,
    pub form: MatrixStrings,
}

#[derive(Serialize)]
pub struct WordImage {
    pub word: String,
    pub pure: bool,
    pub matrix: MatrixStrings,
}

#[derive(Serialize)]
pub struct SpecializeReport {
    pub n: usize,
    pub d: u32,
    pub k: Vec<i64>,
    pub degenerate: bool,
    pub central_scalar: String,
    pub generators: BTreeMap<String, MatrixStrings>,
    pub form: MatrixStrings,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub word: Option<WordImage>,
}

#[derive(Serialize)]
pub struct SpectralOutput {
    #[serde(flatten)]
    pub report: SpectralReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub flag: Option<FlagReport>,
    pub seed: u64,
}

#[derive(Serialize)]
pub struct DecomposeReport {
    pub spec: CoverSpec,
    pub kernel_ranks: KernelRanks,
    #[serde(flatten)]
    pub decomposition: DecompositionReport,
    pub genus_rh: usize,
    pub genus_match: bool,
}

/// DM data with the weights also written as integers over `d`.
#[derive(Serialize)]
pub struct DmEntry {
    #[serde(flatten)]
    pub report: DMReport,
    pub denominator: u32,
    pub mu_over_d: Vec<i64>,
    pub mu_inf_over_d: i64,
}

#[derive(Serialize)]
pub struct DmOutput {
    pub spec: CoverSpec,
    pub reports: Vec<DmEntry>,
}

#[derive(Serialize)]
pub struct ClassifyOutput {
    pub spec: CoverSpec,
    #[serde(flatten)]
    pub classification: Classification,
}

#[derive(Serialize)]
pub struct SignatureOutput {
    pub spec: CoverSpec,
    pub signatures: Vec<Signature>,
}

fn missing(what: &str, command: CommandName) -> CliError {
    CliError::Config(format!("{command} needs --{what}"))
}

fn single(r: Option<Range>, what: &str, command: CommandName) -> CliResult<u64> {
    let r = r.ok_or_else(|| missing(what, command))?;
    r.single().ok_or_else(|| CliError::Config(format!("{command} needs a single value for --{what}, got {r}")))
}

fn strands(job: &JobConfig) -> CliResult<usize> {
    let n = single(job.n, "n", job.command)? as usize;
    if n == 0 {
        return Err(CliError::Config("--n must be at least 1".into()));
    }
    Ok(n + 1)
}

fn word(job: &JobConfig, strands: usize) -> CliResult<BraidWord> {
    let text = job.word.as_deref().ok_or_else(|| missing("word", job.command))?;
    Ok(BraidWord::parse(strands, text)?)
}

fn cover_spec(job: &JobConfig) -> CliResult<CoverSpec> {
    let d = single(job.d, "d", job.command)?;
    let d = u32::try_from(d).map_err(|_| CliError::Config(format!("--d {d} is too large")))?;
    let k = job.k.clone().ok_or_else(|| missing("k", job.command))?;
    let spec = match job.n {
        Some(_) => CoverSpec::with_n(single(job.n, "n", job.command)? as usize, d, k)?,
        None => CoverSpec::new(d, k)?,
    };
    Ok(spec)
}

fn basis_name(b: Basis) -> &'static str {
    match b {
        Basis::Reduced => "reduced",
        Basis::Unreduced => "unreduced",
    }
}

pub fn matrix(job: &JobConfig) -> CliResult<MatrixReport> {
    let m = strands(job)?;
    let w = word(job, m)?;
    let basis = Basis::from(job.basis);
    Ok(MatrixReport {
        strands: m,
        basis: basis_name(basis),
        word: w.to_string(),
        pure: w.is_pure(),
        map: evaluate_word(&w, basis)?.serialize(),
    })
}

pub fn verify(job: &JobConfig) -> CliResult<VerifyReport> {
    let m = strands(job)?;
    let w = word(job, m)?;
    Ok(VerifyReport { strands: m, word: w.to_string(), invariance: verify_invariance(&w)? })
}

pub fn form(job: &JobConfig) -> CliResult<FormReport> {
    let n = strands(job)? - 1;
    let specialized = match (&job.d, &job.k) {
        (Some(_), Some(_)) => {
            let spec = cover_spec(job)?;
            Some(SpecializedForm {
                d: spec.d,
                k: spec.k.clone(),
                degenerate: is_degenerate(n, spec.d, &spec.k)?,
                form: MatrixStrings::from(&specialize_form(n, spec.d, &spec.k)?),
            })
        }
        _ => None,
    };
    Ok(FormReport {
        n,
        form: MatrixStrings::from(&form_matrix(n)),
        cleared_form: MatrixStrings::from(&cleared_form_matrix(n)),
        determinant: form_determinant(n)?.to_string(),
        specialized,
    })
}

pub fn specialize(job: &JobConfig) -> CliResult<SpecializeReport> {
    let spec = cover_spec(job)?;
    let rep = specialize_rep(spec.n, spec.d, &spec.k)?;
    let generators =
        rep.generators().iter().map(|(&(r, s), m)| (format!("A{r},{s}"), MatrixStrings::from(m))).collect();
    let word = match &job.word {
        Some(_) => {
            let w = word(job, spec.n + 1)?;
            let m = specialize_word(&w, rep.field(), &spec.k)?;
            Some(WordImage { word: w.to_string(), pure: permutation_image(&w).is_identity(), matrix: MatrixStrings::from(&m) })
        }
        None => None,
    };
    Ok(SpecializeReport {
        n: spec.n,
        d: spec.d,
        k: spec.k.clone(),
        degenerate: rep.is_degenerate(),
        central_scalar: rep.central_scalar().to_string(),
        generators,
        form: MatrixStrings::from(&specialize_form(spec.n, spec.d, &spec.k)?),
        word,
    })
}

pub fn spectral(job: &JobConfig) -> CliResult<SpectralOutput> {
    let spec = cover_spec(job)?;
    let report = spectral_report(spec.n, spec.d, &spec.k)?;
    let flag = match report.unipotent_p {
        Some(p) if p <= spec.n => Some(flag_unipotency_check(p, spec.d, &spec.k[..=p], job.seed)?),
        _ => None,
    };
    Ok(SpectralOutput { report, flag, seed: job.seed })
}

pub fn decompose(job: &JobConfig) -> CliResult<DecomposeReport> {
    let spec = cover_spec(job)?;
    let decomposition = homology_decomposition(&spec)?;
    let genus_rh = genus_riemann_hurwitz(&spec)?;
    Ok(DecomposeReport {
        kernel_ranks: kernel_ranks(&spec)?,
        genus_match: decomposition.genus == genus_rh,
        decomposition,
        genus_rh,
        spec,
    })
}

pub fn dm(job: &JobConfig) -> CliResult<DmOutput> {
    let spec = cover_spec(job)?;
    let fs = match job.f {
        Some(f) => vec![f],
        None => embeddings(spec.d),
    };
    let d = spec.d as i64;
    let reports = fs
        .into_iter()
        .map(|f| {
            let report = dm_report(&spec, f)?;
            let scale = |r: &gassner_core::topology::Rational| (r * d).to_integer();
            Ok(DmEntry {
                denominator: spec.d,
                mu_over_d: report.mu.iter().map(scale).collect(),
                mu_inf_over_d: scale(&report.mu_inf),
                report,
            })
        })
        .collect::<CliResult<Vec<_>>>()?;
    Ok(DmOutput { spec, reports })
}

pub fn classify_cmd(job: &JobConfig) -> CliResult<ClassifyOutput> {
    let spec = cover_spec(job)?;
    Ok(ClassifyOutput { classification: classify(&spec)?, spec })
}

pub fn signature_cmd(job: &JobConfig) -> CliResult<SignatureOutput> {
    let spec = cover_spec(job)?;
    let signatures = match job.f {
        Some(f) => vec![signature(spec.n, spec.d, &spec.k, f)?],
        None => signature_report(spec.n, spec.d, &spec.k)?,
    };
    Ok(SignatureOutput { spec, signatures })
}

fn document<T: Serialize>(command: CommandName, body: T) -> String {
    let mut s = serde_json::to_string_pretty(&Envelope { command: command.as_str(), body }).expect("reports serialize");
    s.push('\n');
    s
}

/// Runs the job and writes its output: one pretty JSON document, or JSON lines for sweep.
pub fn run_to(job: &JobConfig, out: &mut dyn Write) -> CliResult<()> {
    let io = |e: std::io::Error| CliError::Io { path: "output".into(), source: e };
    let text = match job.command {
        CommandName::Matrix => document(job.command, matrix(job)?),
        CommandName::Verify => document(job.command, verify(job)?),
        CommandName::Form => document(job.command, form(job)?),
        CommandName::Specialize => document(job.command, specialize(job)?),
        CommandName::Spectral => document(job.command, spectral(job)?),
        CommandName::Decompose => document(job.command, decompose(job)?),
        CommandName::Dm => document(job.command, dm(job)?),
        CommandName::Classify => document(job.command, classify_cmd(job)?),
        CommandName::Signature => document(job.command, signature_cmd(job)?),
        CommandName::Sweep => return sweep(job, out),
    };
    out.write_all(text.as_bytes()).map_err(io)
}

/// Output as a string, for tests and embedding.
pub fn run(job: &JobConfig) -> CliResult<String> {
    let mut buf = Vec::new();
    run_to(job, &mut buf)?;
    Ok(String::from_utf8(buf).expect("JSON is UTF-8"))
}

/// Writes to `--out` when given, otherwise standard output.
pub fn execute(job: &JobConfig) -> CliResult<()> {
    match &job.out {
        Some(path) => {
            let mut buf = Vec::new();
            run_to(job, &mut buf)?;
            std::fs::write(path, buf).map_err(|e| CliError::Io { path: path.display().to_string(), source: e })
        }
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            run_to(job, &mut lock)?;
            lock.flush().map_err(|e| CliError::Io { path: "stdout".into(), source: e })
        }
    }
}
