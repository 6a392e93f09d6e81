//! Randomized regression suites.
//!
//! Trial `k` of a run with seed `s` draws its input from ChaCha8 seeded with
//! `s` (via `seed_from_u64`) on stream `k`. Trials are therefore independent
//! of each other and of the thread count, and a single failure replays with
//! `start_offset = k, trials = 1`.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use lorentz_core::embeddings::{
    check_ab_decomposition, check_iljq_endpoints, check_iljq_two_sided, check_ilpq_sandwich, check_interpolation,
    check_interpolation_infinite_top, check_product_bound, check_two_point, check_weak_type_tail, IndexGrid,
};
use lorentz_core::norms::{
    lorentz_norm, lorentz_norm_via_distribution, quadrature_norm_oracle, rearrangement_power_integral,
};
use lorentz_core::sequence::{check_prop22_i, check_prop22_ii, check_seq_iljq, seq_lorentz_norm, seq_lp_norm};
use lorentz_core::{BoundCheck, CheckReport, ExtReal, LorentzIndex, NormSequence, SimpleFunction};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::config::SuiteConfig;
use crate::error::HarnessError;
use crate::generate::{
    generate_index_grid, generate_sequence, generate_shared_pair, generate_step_function, increasing_points,
    log_uniform,
};
use crate::input::Document;

/// Index range for function-space suites.
const FUNCTION_INDICES: (f64, f64) = (0.1, 10.0);
/// Index range for sequence-space suites, which need `p, q >= 1`.
const SEQUENCE_INDICES: (f64, f64) = (1.0, 10.0);
/// Probability of replacing a sampled index by `inf` where that is admissible.
const INF_PROBABILITY: f64 = 0.25;

/// The randomized suites, in the order `check --all` runs them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    /// `sum mass * value^p` against `int_0^inf f*(t)^p dt`.
    Eq2Identity,
    /// Closed form through `f*` against the closed form through `d_f`.
    RouteAgreement,
    /// Closed form against midpoint quadrature.
    OracleAgreement,
    /// `d_f(a) <= (||f||_{p,inf} / a)^p`.
    ChebyshevE6,
    /// Interpolation between two weak spaces.
    Prop31,
    /// Interpolation between a weak space and `L^inf`.
    Prop31Inf,
    /// `||f||_{r,q} <= 2^{1/q} max(||f||_{p1,q}, ||f||_{p2,q})`.
    Prop32,
    /// Sandwich for `sup_q ||f||_{p,q}` over a grid of `q`.
    Eq8Sandwich,
    /// Endpoint bound over a grid of `p` at fixed `q`.
    Prop35Endpoints,
    /// Two-sided endpoint bound over grids of `p` and `q`.
    ThmK,
    /// Product with a bounded function in weak `L_p`.
    Prop36Product,
    /// The intersection decomposition over grids of `p` and `q`.
    Prop37Ab,
    /// `l_{p,p} = l_p`, rearrangement invariance, discrete weak norm.
    SeqDefLp,
    /// Monotonicity of sequence norms in `q`.
    Prop22I,
    /// Monotonicity of sequence norms in `p`.
    Prop22Ii,
    /// The sequence analogue of the two-grid bound.
    PropP15,
}

impl Suite {
    pub const ALL: [Suite; 16] = [
        Suite::Eq2Identity,
        Suite::RouteAgreement,
        Suite::OracleAgreement,
        Suite::ChebyshevE6,
        Suite::Prop31,
        Suite::Prop31Inf,
        Suite::Prop32,
        Suite::Eq8Sandwich,
        Suite::Prop35Endpoints,
        Suite::ThmK,
        Suite::Prop36Product,
        Suite::Prop37Ab,
        Suite::SeqDefLp,
        Suite::Prop22I,
        Suite::Prop22Ii,
        Suite::PropP15,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Eq2Identity => "eq2-identity",
            Suite::RouteAgreement => "route-agreement",
            Suite::OracleAgreement => "oracle-agreement",
            Suite::ChebyshevE6 => "chebyshev-e6",
            Suite::Prop31 => "prop3.1",
            Suite::Prop31Inf => "prop3.1-inf",
            Suite::Prop32 => "prop3.2",
            Suite::Eq8Sandwich => "eq8-sandwich",
            Suite::Prop35Endpoints => "prop3.5-endpoints",
            Suite::ThmK => "thm-K",
            Suite::Prop36Product => "prop3.6-product",
            Suite::Prop37Ab => "prop3.7-ab",
            Suite::SeqDefLp => "seq-def-lp",
            Suite::Prop22I => "prop22-i",
            Suite::Prop22Ii => "prop22-ii",
            Suite::PropP15 => "prop-p15",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = HarnessError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| HarnessError::UnknownSuite(s.to_string()))
    }
}

/// One failed trial, with everything needed to rerun it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FailureRecord {
    /// Stream offset of the trial.
    pub offset: u64,
    /// The sampled input; `f`, `g` and `s` entries are input documents.
    pub input: Value,
    /// The failing check, absent when the check itself returned an error.
    pub report: Option<CheckReport>,
    pub error: Option<String>,
}

/// Aggregate outcome of a suite run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub suite_name: String,
    pub seed: u64,
    pub start_offset: u64,
    pub trials_run: u64,
    /// Sorted by offset.
    pub failures: Vec<FailureRecord>,
    /// Largest `lhs / rhs` over every inequality evaluated.
    pub max_tightness: ExtReal,
    /// Seconds.
    pub wall_time: f64,
}

impl RunReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

struct Trial {
    input: Value,
    outcome: lorentz_core::Result<CheckReport>,
}

/// Runs `config.trials` trials of the configured suite in parallel.
pub fn run_suite(config: &SuiteConfig) -> Result<RunReport, HarnessError> {
    let suite = config.validate()?;
    let start = Instant::now();
    let first = config.start_offset;
    let results: Vec<(u64, Trial)> = (first..first + config.trials)
        .into_par_iter()
        .map(|offset| {
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
            rng.set_stream(offset);
            (offset, run_trial(suite, &mut rng, config))
        })
        .collect();

    let mut failures = Vec::new();
    let mut max_tightness = 0.0f64;
    for (offset, trial) in results {
        match trial.outcome {
            Ok(report) => {
                max_tightness = max_tightness.max(report.tightness());
                if !report.passed {
                    failures.push(FailureRecord { offset, input: trial.input, report: Some(report), error: None });
                }
            }
            Err(e) => {
                failures.push(FailureRecord { offset, input: trial.input, report: None, error: Some(e.to_string()) })
            }
        }
    }
    failures.sort_by_key(|f| f.offset);
    Ok(RunReport {
        suite_name: suite.name().to_string(),
        seed: config.seed,
        start_offset: first,
        trials_run: config.trials,
        failures,
        max_tightness: ExtReal::new(max_tightness).unwrap_or(ExtReal::INFINITY),
        wall_time: start.elapsed().as_secs_f64(),
    })
}

fn ext(x: f64) -> ExtReal {
    ExtReal::new(x).expect("nonnegative, non-NaN")
}

fn index<R: Rng>(rng: &mut R, range: (f64, f64)) -> f64 {
    log_uniform(rng, range.0, range.1)
}

fn maybe_inf<R: Rng>(rng: &mut R, x: f64, p: f64) -> ExtReal {
    if rng.random_bool(p) {
        ExtReal::INFINITY
    } else {
        ext(x)
    }
}

fn doc(f: &SimpleFunction) -> Value {
    serde_json::to_value(Document::from_function(f)).expect("serializable")
}

fn seq_doc(s: &NormSequence) -> Value {
    serde_json::to_value(Document::from_sequence(s)).expect("serializable")
}

fn grid<R: Rng>(rng: &mut R, range: (f64, f64), config: &SuiteConfig) -> IndexGrid {
    generate_index_grid(rng, range.0, range.1, config.grid_size_range)
}

fn equality(label: &str, a: f64, b: f64, rel: f64) -> BoundCheck {
    BoundCheck::equality(label.to_string(), ext(a), ext(b), rel)
}

fn run_trial(suite: Suite, rng: &mut ChaCha8Rng, cfg: &SuiteConfig) -> Trial {
    let tol = cfg.tolerance;
    let fi = FUNCTION_INDICES;
    let si = SEQUENCE_INDICES;
    match suite {
        Suite::Eq2Identity => {
            let f = generate_step_function(rng, cfg);
            let p = index(rng, fi);
            let direct: f64 = f.atoms().iter().map(|a| a.mass * a.value.powf(p)).sum();
            let outcome = rearrangement_power_integral(&f, p).map(|closed| {
                let part = equality("sum mass*value^p = int f*^p", direct, closed, 1e-12);
                CheckReport::from_parts(format!("p={p}"), vec![part])
            });
            Trial { input: json!({ "f": doc(&f), "p": p }), outcome }
        }
        Suite::RouteAgreement => {
            let f = generate_step_function(rng, cfg);
            let (p, s) = (index(rng, fi), index(rng, fi));
            let outcome = LorentzIndex::from_f64(p, s).and_then(|idx| {
                let via_star = lorentz_norm(&f, idx);
                let via_d = lorentz_norm_via_distribution(&f, p, s)?;
                let part = BoundCheck::equality("norm via f* = norm via d_f".into(), via_star, via_d, 1e-12);
                Ok(CheckReport::from_parts(format!("p={p}, s={s}"), vec![part]))
            });
            Trial { input: json!({ "f": doc(&f), "p": p, "s": s }), outcome }
        }
        Suite::OracleAgreement => {
            let f = generate_step_function(rng, cfg);
            let (p, q) = (index(rng, fi), index(rng, fi));
            let outcome = LorentzIndex::from_f64(p, q).and_then(|idx| {
                let quad = quadrature_norm_oracle(&f, idx, cfg.oracle_subdivisions)?;
                let part = BoundCheck::equality("closed form = quadrature".into(), lorentz_norm(&f, idx), quad, 1e-4);
                Ok(CheckReport::from_parts(format!("p={p}, q={q}"), vec![part]))
            });
            Trial { input: json!({ "f": doc(&f), "p": p, "q": q }), outcome }
        }
        Suite::ChebyshevE6 => {
            let f = generate_step_function(rng, cfg);
            let p = index(rng, fi);
            let (lo, hi) = cfg.value_range;
            let mut alphas: Vec<f64> = f.atoms().iter().flat_map(|a| [a.value, 0.5 * a.value]).collect();
            alphas.extend((0..3).map(|_| log_uniform(rng, 0.5 * lo, 2.0 * hi)));
            let outcome = check_weak_type_tail(&f, p, &alphas, tol);
            Trial { input: json!({ "f": doc(&f), "p": p, "alphas": alphas }), outcome }
        }
        Suite::Prop31 => {
            let f = generate_step_function(rng, cfg);
            let ps = increasing_points(rng, 3, fi.0, fi.1);
            let s = index(rng, fi);
            let outcome = check_interpolation(&f, ps[0], ps[2], ps[1], s, tol);
            Trial { input: json!({ "f": doc(&f), "p1": ps[0], "p": ps[1], "p2": ps[2], "s": s }), outcome }
        }
        Suite::Prop31Inf => {
            let f = generate_step_function(rng, cfg);
            let ps = increasing_points(rng, 2, fi.0, fi.1);
            let s = index(rng, fi);
            let outcome = check_interpolation_infinite_top(&f, ps[0], ps[1], s, tol);
            Trial { input: json!({ "f": doc(&f), "p1": ps[0], "p": ps[1], "s": s }), outcome }
        }
        Suite::Prop32 => {
            let f = generate_step_function(rng, cfg);
            let ps = increasing_points(rng, 3, fi.0, fi.1);
            let p2 = maybe_inf(rng, ps[2], 0.1);
            let q = index(rng, fi);
            let q = maybe_inf(rng, q, INF_PROBABILITY);
            let outcome = check_two_point(&f, ps[0], ps[1], p2, q, tol);
            Trial { input: json!({ "f": doc(&f), "p1": ps[0], "r": ps[1], "p2": p2, "q": q }), outcome }
        }
        Suite::Eq8Sandwich => {
            let f = generate_step_function(rng, cfg);
            let p = index(rng, fi);
            let q = grid(rng, fi, cfg);
            let outcome = check_ilpq_sandwich(&f, p, &q, tol);
            Trial { input: json!({ "f": doc(&f), "p": p, "Q": q.points() }), outcome }
        }
        Suite::Prop35Endpoints => {
            let f = generate_step_function(rng, cfg);
            let j = grid(rng, fi, cfg);
            let q = index(rng, fi);
            let q = maybe_inf(rng, q, INF_PROBABILITY);
            let outcome = check_iljq_endpoints(&f, &j, q, tol);
            Trial { input: json!({ "f": doc(&f), "J": j.points(), "q": q }), outcome }
        }
        Suite::ThmK => {
            let f = generate_step_function(rng, cfg);
            let (j, q) = (grid(rng, fi, cfg), grid(rng, fi, cfg));
            let outcome = check_iljq_two_sided(&f, &j, &q, tol);
            Trial { input: json!({ "f": doc(&f), "J": j.points(), "Q": q.points() }), outcome }
        }
        Suite::Prop36Product => {
            let (f, g) = generate_shared_pair(rng, cfg);
            let p = index(rng, fi);
            let p = maybe_inf(rng, p, 0.1);
            let outcome = check_product_bound(&f, &g, p, tol);
            Trial { input: json!({ "f": doc(&f), "g": doc(&g), "p": p }), outcome }
        }
        Suite::Prop37Ab => {
            let f = generate_step_function(rng, cfg);
            let (j, q) = (grid(rng, fi, cfg), grid(rng, fi, cfg));
            let outcome = check_ab_decomposition(&f, &j, &q, tol);
            Trial { input: json!({ "f": doc(&f), "J": j.points(), "Q": q.points() }), outcome }
        }
        Suite::SeqDefLp => {
            let s = generate_sequence(rng, cfg);
            let p = index(rng, si);
            let q = index(rng, si);
            let outcome = seq_def_lp(&s, p, q);
            Trial { input: json!({ "s": seq_doc(&s), "p": p, "q": q }), outcome }
        }
        Suite::Prop22I => {
            let s = generate_sequence(rng, cfg);
            let p = index(rng, si);
            let qs = increasing_points(rng, 2, si.0, si.1);
            let q1 = maybe_inf(rng, qs[1], INF_PROBABILITY);
            let outcome = check_prop22_i(&s, p, qs[0], q1, tol);
            Trial { input: json!({ "s": seq_doc(&s), "p": p, "q": qs[0], "q1": q1 }), outcome }
        }
        Suite::Prop22Ii => {
            let s = generate_sequence(rng, cfg);
            let ps = increasing_points(rng, 2, si.0, si.1);
            let q = index(rng, si);
            let q = maybe_inf(rng, q, INF_PROBABILITY);
            let p1 = if q.is_finite() { maybe_inf(rng, ps[1], INF_PROBABILITY) } else { ext(ps[1]) };
            let outcome = check_prop22_ii(&s, ps[0], p1, q, tol);
            Trial { input: json!({ "s": seq_doc(&s), "p": ps[0], "p1": p1, "q": q }), outcome }
        }
        Suite::PropP15 => {
            let s = generate_sequence(rng, cfg);
            let (j, q) = (grid(rng, si, cfg), grid(rng, si, cfg));
            let outcome = check_seq_iljq(&s, &j, &q, tol);
            Trial { input: json!({ "s": seq_doc(&s), "J": j.points(), "Q": q.points() }), outcome }
        }
    }
}

// l_{p,p} against the classical l_p norm, invariance under reversing the
// terms, and the weak norm of the sequence against that of its unit-mass
// embedding as a simple function.
fn seq_def_lp(s: &NormSequence, p: f64, q: f64) -> lorentz_core::Result<CheckReport> {
    let (pe, qe) = (ext(p), ext(q));
    let diag = seq_lorentz_norm(s, pe, pe)?;
    let classical = ext(seq_lp_norm(s, p)?);
    let mut reversed = s.terms().to_vec();
    reversed.reverse();
    let reversed = NormSequence::new(reversed)?;
    let weak = seq_lorentz_norm(s, pe, ExtReal::INFINITY)?;
    let embedded = lorentz_norm(&s.to_simple_function(), LorentzIndex::new(pe, ExtReal::INFINITY)?);
    let parts = vec![
        BoundCheck::equality("||s||_{p,p} = ||s||_p".into(), diag, classical, 1e-12),
        BoundCheck::equality(
            "||s||_{p,q} = ||reversed s||_{p,q}".into(),
            seq_lorentz_norm(s, pe, qe)?,
            seq_lorentz_norm(&reversed, pe, qe)?,
            1e-12,
        ),
        BoundCheck::equality("||s||_{p,inf} = ||f_s||_{L_{p,inf}}".into(), weak, embedded, 1e-12),
    ];
    Ok(CheckReport::from_parts(format!("p={p}, q={q}"), parts))
}
