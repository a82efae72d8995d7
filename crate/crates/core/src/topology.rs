//! Homology bookkeeping for the cyclic covers `y^d = Π (x - a_i)^{k_i}`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rings::{coprime, euler_phi, CyclotomicField, ExponentVector, LaurentPoly, Ring};

pub type Rational = Ratio<i64>;

fn ser_rational<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

fn ser_rationals<S: Serializer>(rs: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(rs.iter().map(ToString::to_string))
}

fn ser_opt_rational<S: Serializer>(r: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_str(&r.to_string()),
        None => s.serialize_none(),
    }
}

/// `n + 1` branch points with weights `k` on a degree `d` cyclic cover.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CoverSpec {
    pub n: usize,
    pub d: u32,
    pub k: Vec<i64>,
}

impl CoverSpec {
    pub fn new(d: u32, k: Vec<i64>) -> Result<Self> {
        if d < 2 {
            return Err(Error::Precondition(format!("cover order d = {d} must be at least 2")));
        }
        if k.len() < 2 {
            return Err(Error::Precondition(format!("need at least two branch points, got {}", k.len())));
        }
        for &ki in &k {
            if ki < 1 || ki >= d as i64 {
                return Err(Error::Precondition(format!("weight {ki} outside 1..={}", d - 1)));
            }
            if !coprime(ki, d as i64) {
                return Err(Error::NotCoprime { value: ki, modulus: d });
            }
        }
        Ok(CoverSpec { n: k.len() - 1, d, k })
    }

    /// As [`CoverSpec::new`], also checking that `k` has `n + 1` entries.
    pub fn with_n(n: usize, d: u32, k: Vec<i64>) -> Result<Self> {
        if k.len() != n + 1 {
            return Err(Error::Precondition(format!("expected {} weights for n = {n}, got {}", n + 1, k.len())));
        }
        Self::new(d, k)
    }

    pub fn weight_sum(&self) -> i64 {
        self.k.iter().sum()
    }

    /// The same branch data viewed on the intermediate cover of degree `e | d`.
    pub fn at_divisor(&self, e: u32) -> Result<Self> {
        if e < 2 || !self.d.is_multiple_of(e) {
            return Err(Error::Precondition(format!("{e} is not a divisor >= 2 of {}", self.d)));
        }
        Self::new(e, self.k.iter().map(|k| k.rem_euclid(e as i64)).collect())
    }
}

impl fmt::Display for CoverSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ks: Vec<String> = self.k.iter().map(ToString::to_string).collect();
        write!(f, "n={} d={} k=({})", self.n, self.d, ks.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelRanks {
    pub free_rank: usize,
    pub invariant_dim: usize,
    pub ni_dim: usize,
}

pub fn kernel_ranks(spec: &CoverSpec) -> Result<KernelRanks> {
    let (n, d) = (spec.n, spec.d as usize);
    let r = KernelRanks { free_rank: 1 + n * d, invariant_dim: n + 1, ni_dim: n * (d - 1) };
    if r.free_rank != r.invariant_dim + r.ni_dim {
        return Err(Error::Invariant(format!("rank identity fails for {spec}")));
    }
    Ok(r)
}

/// Divisors `e >= 2` of `d`, increasing.
pub fn divisors_from_two(d: u32) -> Vec<u32> {
    (2..=d).filter(|e| d.is_multiple_of(*e)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorSummand {
    pub e: u32,
    pub delta: u8,
    pub gassner_dim: usize,
    pub reduced_bar_dim: usize,
    pub q_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub per_divisor: Vec<DivisorSummand>,
    pub open_ni_dim: usize,
    pub closed_dim: usize,
    pub genus: usize,
}

/// `t_1 ... t_{n+1} = 1` at level `e`, evaluated by specializing the monomial `X_1 ... X_{n+1}`.
fn product_is_one_at(spec: &CoverSpec, e: u32) -> Result<bool> {
    let m = spec.n + 1;
    let all = LaurentPoly::monomial(ExponentVector::from_slice(&vec![1; m]), 1);
    let field = CyclotomicField::new(e);
    let k: Vec<i64> = spec.k.iter().map(|k| k.rem_euclid(e as i64)).collect();
    Ok(all.specialize(&field, &k)?.is_one())
}

pub fn homology_decomposition(spec: &CoverSpec) -> Result<DecompositionReport> {
    let n = spec.n;
    let sum = spec.weight_sum();
    let mut per_divisor = Vec::new();
    for e in divisors_from_two(spec.d) {
        let divides = sum.rem_euclid(e as i64) == 0;
        if divides != product_is_one_at(spec, e)? {
            return Err(Error::Invariant(format!("degeneracy tests disagree at e = {e} for {spec}")));
        }
        let delta = u8::from(divides);
        let reduced_bar_dim = n - delta as usize;
        per_divisor.push(DivisorSummand {
            e,
            delta,
            gassner_dim: n,
            reduced_bar_dim,
            q_dim: euler_phi(e) as usize * reduced_bar_dim,
        });
    }
    let open_ni_dim = n * (spec.d as usize - 1);
    let open_sum: usize = per_divisor.iter().map(|s| euler_phi(s.e) as usize * n).sum();
    if open_sum != open_ni_dim {
        return Err(Error::Invariant(format!("open summands sum to {open_sum}, expected {open_ni_dim}")));
    }
    let closed_dim: usize = per_divisor.iter().map(|s| s.q_dim).sum();
    if !closed_dim.is_multiple_of(2) {
        return Err(Error::Invariant(format!("closed homology has odd dimension {closed_dim} for {spec}")));
    }
    Ok(DecompositionReport { per_divisor, open_ni_dim, closed_dim, genus: closed_dim / 2 })
}

/// Genus from `2 - 2g = 2d - (n+1)(d-1) - (d - r)` with `r = gcd(Σk, d)`.
pub fn genus_riemann_hurwitz(spec: &CoverSpec) -> Result<usize> {
    let d = spec.d as i64;
    let r = spec.weight_sum().gcd(&d);
    let euler = 2 * d - (spec.n as i64 + 1) * (d - 1) - (d - r);
    let twice = 2 - euler;
    if twice < 0 || twice % 2 != 0 {
        return Err(Error::Invariant(format!("Riemann-Hurwitz gives 2g = {twice} for {spec}")));
    }
    Ok((twice / 2) as usize)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IntegralityTest {
    Integer,
    HalfInteger,
}

/// An index in `1..=n+1`, or `None` for the point at infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Point(pub Option<usize>);

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0 {
            Some(i) => s.serialize_u64(i as u64),
            None => s.serialize_str("inf"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PairCondition {
    pub i: Point,
    pub j: Point,
    #[serde(serialize_with = "ser_rational")]
    pub mu_sum: Rational,
    pub sum_lt1: bool,
    /// `1 / (1 - μ_i - μ_j)`, absent when the sum is 1.
    #[serde(serialize_with = "ser_opt_rational")]
    pub value: Option<Rational>,
    pub test: IntegralityTest,
    pub integral: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DMReport {
    pub f: i64,
    #[serde(serialize_with = "ser_rationals")]
    pub mu: Vec<Rational>,
    #[serde(serialize_with = "ser_rational")]
    pub mu_inf: Rational,
    pub cond_sum_lt1: bool,
    pub cond_mu_inf_pos: bool,
    pub cond_integrality: bool,
    pub pairs: Vec<PairCondition>,
}

impl DMReport {
    pub fn pair(&self, i: Point, j: Point) -> Option<&PairCondition> {
        self.pairs.iter().find(|p| p.i == i && p.j == j)
    }

    /// All three conditions at once.
    pub fn satisfied(&self) -> bool {
        self.cond_sum_lt1 && self.cond_mu_inf_pos && self.cond_integrality
    }
}

fn fractional(r: Rational) -> Rational {
    r - r.floor()
}

fn check_embedding(spec: &CoverSpec, f: i64) -> Result<()> {
    if !coprime(f.rem_euclid(spec.d as i64), spec.d as i64) {
        return Err(Error::NotCoprime { value: f, modulus: spec.d });
    }
    Ok(())
}

fn mu_values(spec: &CoverSpec, f: i64) -> (Vec<Rational>, Rational) {
    let d = spec.d as i64;
    let mu: Vec<Rational> = spec.k.iter().map(|&k| fractional(Rational::new(k * f, d))).collect();
    let mu_inf = Rational::from_integer(2) - mu.iter().copied().sum::<Rational>();
    (mu, mu_inf)
}

pub fn dm_report(spec: &CoverSpec, f: i64) -> Result<DMReport> {
    check_embedding(spec, f)?;
    let (mu, mu_inf) = mu_values(spec, f);
    let points: Vec<(Point, Rational, Option<i64>)> = spec
        .k
        .iter()
        .enumerate()
        .map(|(i, &k)| (Point(Some(i + 1)), mu[i], Some(k)))
        .chain(std::iter::once((Point(None), mu_inf, None)))
        .collect();
    let mut pairs = Vec::new();
    for a in 0..points.len() {
        for b in a + 1..points.len() {
            let (pi, mi, ki) = points[a];
            let (pj, mj, kj) = points[b];
            let mu_sum = mi + mj;
            let gap = Rational::one() - mu_sum;
            let value = if gap.is_zero() { None } else { Some(gap.recip()) };
            let test = if ki.is_some() && ki == kj { IntegralityTest::HalfInteger } else { IntegralityTest::Integer };
            let integral = match (value, test) {
                (Some(v), IntegralityTest::Integer) => v.is_integer(),
                (Some(v), IntegralityTest::HalfInteger) => (v * Rational::from_integer(2)).is_integer(),
                (None, _) => false,
            };
            pairs.push(PairCondition { i: pi, j: pj, mu_sum, sum_lt1: mu_sum < Rational::one(), value, test, integral });
        }
    }
    Ok(DMReport {
        f,
        cond_sum_lt1: pairs.iter().all(|p| p.sum_lt1),
        cond_mu_inf_pos: mu_inf.is_positive(),
        cond_integrality: pairs.iter().filter(|p| p.sum_lt1).all(|p| p.integral),
        mu,
        mu_inf,
        pairs,
    })
}

/// `μ_∞ > 0`; when it holds, `n <= 2d - 1` is asserted.
pub fn dm_regime_bound(spec: &CoverSpec, f: i64) -> Result<bool> {
    check_embedding(spec, f)?;
    let (_, mu_inf) = mu_values(spec, f);
    let positive = mu_inf.is_positive();
    if positive && spec.n > 2 * spec.d as usize - 1 {
        return Err(Error::Invariant(format!("μ_∞ = {mu_inf} > 0 but n = {} > 2d - 1 for {spec}", spec.n)));
    }
    Ok(positive)
}

/// Embeddings `1 <= f < d` coprime to `d`.
pub fn embeddings(d: u32) -> Vec<i64> {
    (1..d as i64).filter(|&f| coprime(f, d as i64)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    ArithmeticByMainTheorem,
    NonarithmeticKnownWitness,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::ArithmeticByMainTheorem => "ARITHMETIC_BY_MAIN_THEOREM",
            Verdict::NonarithmeticKnownWitness => "NONARITHMETIC_KNOWN_WITNESS",
            Verdict::Inconclusive => "INCONCLUSIVE",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub d: u32,
    pub k: Vec<i64>,
    pub embedding: i64,
    pub note: String,
}

#[derive(Debug, Deserialize)]
struct WitnessTable {
    version: u32,
    witnesses: Vec<Witness>,
}

const WITNESS_DATA: &str = include_str!("../data/witnesses.json");

/// The curated table of known non-arithmetic cases.
pub fn witnesses() -> &'static [Witness] {
    static TABLE: OnceLock<Vec<Witness>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let table: WitnessTable = serde_json::from_str(WITNESS_DATA).expect("witness table parses");
        assert_eq!(table.version, 1, "unsupported witness table version");
        for w in &table.witnesses {
            assert!(w.k.len() - 1 < 2 * w.d as usize, "witness table entries must have n < 2d");
        }
        table.witnesses
    })
}

fn matching_witness(spec: &CoverSpec) -> Option<&'static Witness> {
    let mut k = spec.k.clone();
    k.sort_unstable();
    witnesses().iter().find(|w| {
        let mut wk = w.k.clone();
        wk.sort_unstable();
        w.d == spec.d && wk == k
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DivisorDm {
    pub e: u32,
    pub reports: Vec<DMReport>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Evidence {
    pub rule: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub dm: Vec<DivisorDm>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Classification {
    pub verdict: Verdict,
    pub evidence: Evidence,
}

pub fn classify(spec: &CoverSpec) -> Result<Classification> {
    let arithmetic = spec.n >= 2 * spec.d as usize;
    let witness = matching_witness(spec);
    if arithmetic && witness.is_some() {
        return Err(Error::Invariant(format!("{spec} is both above the bound and a listed witness")));
    }
    if arithmetic {
        return Ok(Classification {
            verdict: Verdict::ArithmeticByMainTheorem,
            evidence: Evidence { rule: format!("n = {} >= 2d = {}", spec.n, 2 * spec.d), witness: None, dm: Vec::new() },
        });
    }
    if let Some(w) = witness {
        return Ok(Classification {
            verdict: Verdict::NonarithmeticKnownWitness,
            evidence: Evidence { rule: "listed witness".into(), witness: Some(w.clone()), dm: Vec::new() },
        });
    }
    let dm = divisors_from_two(spec.d)
        .into_iter()
        .map(|e| {
            let sub = spec.at_divisor(e)?;
            let reports = embeddings(e).into_iter().map(|f| dm_report(&sub, f)).collect::<Result<Vec<_>>>()?;
            Ok(DivisorDm { e, reports })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Classification {
        verdict: Verdict::Inconclusive,
        evidence: Evidence { rule: format!("n = {} < 2d = {} and no listed witness", spec.n, 2 * spec.d), witness: None, dm },
    })
}

/// Everything known about one cover.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TopologyReport {
    pub spec: CoverSpec,
    pub kernel_ranks: KernelRanks,
    pub per_divisor: Vec<DivisorSummand>,
    pub genus: usize,
    pub genus_rh: usize,
    pub dm: Vec<DMReport>,
    pub verdict: Verdict,
    pub evidence: Evidence,
}

pub fn topology_report(spec: &CoverSpec) -> Result<TopologyReport> {
    let decomposition = homology_decomposition(spec)?;
    let class = classify(spec)?;
    Ok(TopologyReport {
        spec: spec.clone(),
        kernel_ranks: kernel_ranks(spec)?,
        per_divisor: decomposition.per_divisor,
        genus: decomposition.genus,
        genus_rh: genus_riemann_hurwitz(spec)?,
        dm: embeddings(spec.d).into_iter().map(|f| dm_report(spec, f)).collect::<Result<_>>()?,
        verdict: class.verdict,
        evidence: class.evidence,
    })
}

/// Count of specs per verdict, for sweeps.
pub fn verdict_histogram<'a>(specs: impl IntoIterator<Item = &'a CoverSpec>) -> Result<BTreeMap<String, usize>> {
    let mut out = BTreeMap::new();
    for s in specs {
        *out.entry(classify(s)?.verdict.to_string()).or_insert(0) += 1;
    }
    Ok(out)
}
