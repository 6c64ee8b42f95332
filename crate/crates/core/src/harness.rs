//! Run orchestration: prime sieving, per-prime scheduling, dual-engine
//! comparison, and deterministic aggregation into a sorted report.

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::checks::{self, CheckRecord, CheckSpec, PrimeCtx};
use crate::error::{Error, Result};
use crate::sequences::Engine;

/// Odd primes in [p_min, p_max], ascending (2 is never included).
pub fn sieve_primes(p_min: u64, p_max: u64) -> Vec<u64> {
    assert!(p_max < 1 << 31, "sieve range is for desk-scale runs");
    if p_max < 3 {
        return Vec::new();
    }
    let n = p_max as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            if i as u64 >= p_min.max(3) && i != 2 {
                primes.push(i as u64);
            }
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

/// Which engine(s) drive the Delannoy-family tables during a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EngineChoice {
    Dp,
    Holonomic,
    Both,
}

/// How the per-prime parameter sets (m for the geometric checks, x for the
/// full polynomial sweep) are chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamPolicy {
    Exhaustive,
    /// `count` distinct values drawn from a seeded stream; reproducible, and
    /// decorrelated across primes.
    Sample { count: u64, seed: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Table,
    Csv,
    Jsonl,
}

/// Which registry entries a run covers.
#[derive(Debug, Clone)]
pub enum CheckSelection {
    All,
    /// Everything with proved status (theorem, lemma, corollary, example,
    /// remark, auxiliary).
    Theorems,
    Conjectures,
    Ids(Vec<String>),
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub p_min: u64,
    pub p_max: u64,
    pub checks: CheckSelection,
    pub engine: EngineChoice,
    pub m_policy: ParamPolicy,
    pub x_policy: ParamPolicy,
    pub format: OutputFormat,
    pub out: Option<std::path::PathBuf>,
    pub parallel: bool,
}

impl RunConfig {
    pub fn new(p_min: u64, p_max: u64) -> Self {
        RunConfig {
            p_min,
            p_max,
            checks: CheckSelection::All,
            engine: EngineChoice::Dp,
            m_policy: ParamPolicy::Exhaustive,
            x_policy: ParamPolicy::Exhaustive,
            format: OutputFormat::Table,
            out: None,
            parallel: true,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RunSummary {
    pub primes: usize,
    pub records: usize,
    pub passed: usize,
    pub failed_proved: usize,
    pub failed_conjecture: usize,
    pub engine_mismatches: usize,
    pub elapsed_us: u64,
}

#[derive(Debug, Clone)]
pub struct RunReport {
    pub records: Vec<CheckRecord>,
    pub summary: RunSummary,
}

impl RunReport {
    /// 0 all pass; 2 a proved statement failed; 3 a conjecture failed;
    /// 4 the two engines disagreed (overrides everything else).
    pub fn exit_code(&self) -> i32 {
        if self.summary.engine_mismatches > 0 {
            4
        } else if self.summary.failed_proved > 0 {
            2
        } else if self.summary.failed_conjecture > 0 {
            3
        } else {
            0
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| !r.pass)
    }
}

fn selected_specs(selection: &CheckSelection) -> Result<Vec<&'static CheckSpec>> {
    let all = checks::registry();
    Ok(match selection {
        CheckSelection::All => all.iter().collect(),
        CheckSelection::Theorems => all
            .iter()
            .filter(|c| !c.status.is_conjecture())
            .collect(),
        CheckSelection::Conjectures => {
            all.iter().filter(|c| c.status.is_conjecture()).collect()
        }
        CheckSelection::Ids(ids) => {
            let mut specs = Vec::with_capacity(ids.len());
            for id in ids {
                specs.push(checks::find_check(id)?);
            }
            specs
        }
    })
}

/// `count` distinct values from [start, start + len), ascending; seeded and
/// stream-separated so every (seed, stream) pair is reproducible.
fn sampled_values(start: u64, len: u64, count: u64, seed: u64, stream: u64) -> Vec<u64> {
    if count >= len {
        return (start..start + len).collect();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let mut picks = rand::seq::index::sample(&mut rng, len as usize, count as usize).into_vec();
    picks.sort_unstable();
    picks.into_iter().map(|i| start + i as u64).collect()
}

fn m_values_for(p: u64, policy: ParamPolicy) -> Vec<u64> {
    match policy {
        ParamPolicy::Exhaustive => (1..p).collect(),
        ParamPolicy::Sample { count, seed } => sampled_values(1, p - 1, count, seed, p),
    }
}

fn x_values_for(p: u64, policy: ParamPolicy) -> Vec<u64> {
    match policy {
        ParamPolicy::Exhaustive => (0..p).collect(),
        // separate stream index so x draws differ from m draws
        ParamPolicy::Sample { count, seed } => {
            sampled_values(0, p, count, seed, p | 1 << 32)
        }
    }
}

struct PrimeOutcome {
    records: Vec<CheckRecord>,
    engine_mismatches: usize,
}

fn evaluate_prime(
    p: u64,
    specs: &[&'static CheckSpec],
    config: &RunConfig,
) -> Result<PrimeOutcome> {
    let m_values = m_values_for(p, config.m_policy);
    let x_values = x_values_for(p, config.x_policy);
    let primary_engine = match config.engine {
        EngineChoice::Holonomic => Engine::Holonomic,
        _ => Engine::Dp,
    };
    let ctx = PrimeCtx::with_params(p, primary_engine, m_values.clone(), x_values.clone())?;
    let shadow_ctx = if config.engine == EngineChoice::Both {
        Some(PrimeCtx::with_params(
            p,
            Engine::Holonomic,
            m_values,
            x_values,
        )?)
    } else {
        None
    };

    let mut records = Vec::new();
    let mut engine_mismatches = 0usize;
    for spec in specs {
        if !spec.applicable(p) {
            continue;
        }
        let main = checks::evaluate(spec, &ctx)?;
        match (&shadow_ctx, spec.engine_sensitive) {
            (Some(shadow), true) => {
                let other = checks::evaluate(spec, shadow)?;
                assert_eq!(main.len(), other.len(), "{}: row count mismatch", spec.id);
                for (a, b) in main.into_iter().zip(other) {
                    debug_assert_eq!(a.params, b.params);
                    if (a.lhs, a.rhs) == (b.lhs, b.rhs) {
                        records.push(a);
                    } else {
                        engine_mismatches += 1;
                        records.push(a);
                        records.push(b);
                    }
                }
            }
            _ => records.extend(main),
        }
    }
    Ok(PrimeOutcome {
        records,
        engine_mismatches,
    })
}

/// Evaluates every applicable (check, prime) pair and aggregates a sorted,
/// deterministic report. Worker order never affects the output.
pub fn run(config: &RunConfig) -> Result<RunReport> {
    if config.p_min < 3 || config.p_min > config.p_max {
        return Err(Error::InvalidConfig(format!(
            "prime range [{}, {}] must satisfy 3 <= p_min <= p_max",
            config.p_min, config.p_max
        )));
    }
    if config.p_max >= 1 << 31 {
        return Err(Error::InvalidConfig(
            "p_max must stay below 2^31".into(),
        ));
    }
    let specs = selected_specs(&config.checks)?;
    let primes = sieve_primes(config.p_min, config.p_max);
    let start = Instant::now();

    let outcomes: Vec<Result<PrimeOutcome>> = if config.parallel {
        primes
            .par_iter()
            .map(|&p| evaluate_prime(p, &specs, config))
            .collect()
    } else {
        primes
            .iter()
            .map(|&p| evaluate_prime(p, &specs, config))
            .collect()
    };

    let mut records = Vec::new();
    let mut engine_mismatches = 0usize;
    for outcome in outcomes {
        let outcome = outcome?;
        engine_mismatches += outcome.engine_mismatches;
        records.extend(outcome.records);
    }
    records.sort_by(|a, b| {
        (a.p, a.check_id, &a.params, a.engine)
            .cmp(&(b.p, b.check_id, &b.params, b.engine))
    });

    let mut summary = RunSummary {
        primes: primes.len(),
        records: records.len(),
        engine_mismatches,
        elapsed_us: start.elapsed().as_micros() as u64,
        ..RunSummary::default()
    };
    for r in &records {
        if r.pass {
            summary.passed += 1;
        } else if r.status.is_conjecture() {
            summary.failed_conjecture += 1;
        } else {
            summary.failed_proved += 1;
        }
    }
    Ok(RunReport { records, summary })
}

/// Convenience wrapper: run every check of the given statuses over a range
/// with exhaustive parameters and the DP engine.
pub fn verify_range(p_min: u64, p_max: u64, selection: CheckSelection) -> Result<RunReport> {
    let mut config = RunConfig::new(p_min, p_max);
    config.checks = selection;
    run(&config)
}
