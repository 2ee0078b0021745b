//! Running verifiers over every enumerated instance.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::Arc;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{enumerate_acts, enumerate_monoids};
use crate::act::FiniteAct;
use crate::monoid::FiniteMonoid;
use crate::verify::{
    verify_act_statement, verify_krull_intersection, verify_monoid_krull,
    verify_projective_free_over, verify_unit_symmetry, Conclusion, Counterexample,
    HypothesisStatus, Scope, StatementId, Verdict,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub max_monoid_order: usize,
    pub max_act_size: usize,
    pub statements: Vec<StatementId>,
    /// Statements with fewer non-vacuous checks are listed in
    /// [`SweepReport::under_exercised`].
    #[serde(default)]
    pub require_nonvacuous_count: Option<usize>,
    /// Thread count; `None` uses rayon's default.
    #[serde(default)]
    pub workers: Option<usize>,
    /// Stop after this many verifier calls.
    #[serde(default)]
    pub max_instances: Option<usize>,
    #[serde(default)]
    pub time_limit_ms: Option<u64>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_monoid_order: 4,
            max_act_size: 4,
            statements: StatementId::ALL.to_vec(),
            require_nonvacuous_count: None,
            workers: None,
            max_instances: None,
            time_limit_ms: None,
        }
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum SweepConfigError {
    #[error("bounds must be at least 1")]
    ZeroBound,
    #[error("no statements selected")]
    NoStatements,
    #[error("worker count must be at least 1")]
    ZeroWorkers,
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), SweepConfigError> {
        if self.max_monoid_order == 0 || self.max_act_size == 0 {
            return Err(SweepConfigError::ZeroBound);
        }
        if self.statements.is_empty() {
            return Err(SweepConfigError::NoStatements);
        }
        if self.workers == Some(0) {
            return Err(SweepConfigError::ZeroWorkers);
        }
        Ok(())
    }
}

/// Outcome counts for one statement. `pass + fail + vacuous +
/// not_applicable` is the number of checks.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub vacuous: usize,
    pub not_applicable: usize,
}

impl Tally {
    pub fn total(&self) -> usize {
        self.pass + self.fail + self.vacuous + self.not_applicable
    }

    /// Checks where the hypotheses held.
    pub fn nonvacuous(&self) -> usize {
        self.pass + self.fail
    }

    fn record(&mut self, verdict: &Verdict) {
        match (verdict.hypotheses.status, verdict.conclusion) {
            (HypothesisStatus::NotApplicable, _) => self.not_applicable += 1,
            (_, Conclusion::Vacuous) => self.vacuous += 1,
            (_, Conclusion::Pass) => self.pass += 1,
            (_, Conclusion::Fail) => self.fail += 1,
        }
    }

    fn merge(&mut self, other: &Tally) {
        self.pass += other.pass;
        self.fail += other.fail;
        self.vacuous += other.vacuous;
        self.not_applicable += other.not_applicable;
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepCounterexample {
    pub statement: StatementId,
    pub counterexample: Counterexample,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub config: SweepConfig,
    pub tallies: BTreeMap<StatementId, Tally>,
    /// Sorted by statement, then by serialized instance.
    pub counterexamples: Vec<SweepCounterexample>,
    /// Monoids per order, starting at order 1.
    pub monoids: Vec<usize>,
    /// Acts per size summed over all monoids, starting at size 1.
    pub acts: Vec<usize>,
    pub under_exercised: Vec<StatementId>,
    pub truncated: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

impl SweepReport {
    pub fn has_failures(&self) -> bool {
        !self.counterexamples.is_empty()
    }

    /// JSON without wall time or worker count; identical bounds and
    /// statements give identical text.
    pub fn stable_json(&self) -> String {
        let mut copy = self.clone();
        copy.wall_time_ms = None;
        copy.config.workers = None;
        serde_json::to_string_pretty(&copy).expect("reports serialize")
    }
}

#[derive(Debug, Error)]
pub enum SweepError {
    #[error(transparent)]
    Config(#[from] SweepConfigError),
    #[error("sweep budget exhausted; partial report attached")]
    BudgetExceeded { partial: Box<SweepReport> },
    #[error("could not start worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

/// Everything checked for one monoid.
#[derive(Default)]
struct Partial {
    tallies: BTreeMap<StatementId, Tally>,
    counterexamples: Vec<SweepCounterexample>,
    acts: Vec<usize>,
}

impl Partial {
    fn record(&mut self, verdict: Verdict) {
        self.tallies.entry(verdict.statement).or_default().record(&verdict);
        if let Some(counterexample) = verdict.counterexample {
            self.counterexamples.push(SweepCounterexample {
                statement: verdict.statement,
                counterexample,
            });
        }
    }
}

struct Budget {
    used: AtomicUsize,
    max: Option<usize>,
    deadline: Option<Instant>,
    exhausted: AtomicBool,
}

impl Budget {
    /// Reserves `n` checks, or flags exhaustion.
    fn take(&self, n: usize) -> bool {
        if self.exhausted.load(Ordering::Relaxed) {
            return false;
        }
        let over_time = self.deadline.is_some_and(|d| Instant::now() > d);
        let before = self.used.fetch_add(n, Ordering::Relaxed);
        let over_count = self.max.is_some_and(|max| before + n > max);
        if over_time || over_count {
            self.exhausted.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }
}

/// All verdicts for one monoid and the acts over it, in a fixed order.
pub fn check_monoid(
    monoid: &Arc<FiniteMonoid>,
    acts: &[FiniteAct],
    statements: &[StatementId],
) -> Vec<Verdict> {
    let mut out = Vec::new();
    for &statement in statements {
        match statement {
            StatementId::UnitSymmetry => out.push(verify_unit_symmetry(monoid)),
            StatementId::ProjectiveFree => out.push(verify_projective_free_over(monoid, acts)),
            StatementId::MonoidKrull => out.push(verify_monoid_krull(monoid)),
            _ => {}
        }
    }
    let ideals = monoid.enumerate_right_ideals(false);
    for act in acts {
        for &statement in statements {
            match statement.scope() {
                Scope::Monoid => {}
                Scope::ActIdeal => {
                    out.extend(ideals.iter().map(|&i| verify_krull_intersection(act, i)))
                }
                Scope::Act => out.push(verify_act_statement(statement, act)),
            }
        }
    }
    out
}

fn sweep_monoid(monoid: FiniteMonoid, config: &SweepConfig, budget: &Budget) -> Option<Partial> {
    let monoid = Arc::new(monoid);
    let per_size: Vec<Vec<FiniteAct>> = (1..=config.max_act_size)
        .map(|m| enumerate_acts(&monoid, m))
        .collect();
    let acts: Vec<FiniteAct> = per_size.iter().flatten().cloned().collect();
    let ideal_count = monoid.enumerate_right_ideals(false).len();
    let cost: usize = config
        .statements
        .iter()
        .map(|s| match s.scope() {
            Scope::Monoid => 1,
            Scope::Act => acts.len(),
            Scope::ActIdeal => acts.len() * ideal_count,
        })
        .sum();
    if !budget.take(cost) {
        return None;
    }
    let mut partial = Partial {
        acts: per_size.iter().map(Vec::len).collect(),
        ..Partial::default()
    };
    for verdict in check_monoid(&monoid, &acts, &config.statements) {
        partial.record(verdict);
    }
    Some(partial)
}

/// Applies every configured statement to every monoid of order up to
/// `max_monoid_order` and every act of size up to `max_act_size`.
///
/// Statements about a monoid run once per monoid; [`StatementId::ProjectiveFree`]
/// uses the enumerated acts as its pool. The Krull intersection runs for
/// every right ideal including `S`.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepReport, SweepError> {
    config.validate()?;
    let start = Instant::now();
    let budget = Budget {
        used: AtomicUsize::new(0),
        max: config.max_instances,
        deadline: config.time_limit_ms.map(|ms| start + Duration::from_millis(ms)),
        exhausted: AtomicBool::new(false),
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(w) = config.workers {
        builder = builder.num_threads(w);
    }
    let pool = builder.build()?;

    let monoids: Vec<Vec<FiniteMonoid>> = (1..=config.max_monoid_order).map(enumerate_monoids).collect();
    let all: Vec<FiniteMonoid> = monoids.iter().flatten().cloned().collect();
    log::info!("sweeping {} monoids", all.len());
    let partials: Vec<Option<Partial>> = pool.install(|| {
        all.into_par_iter()
            .map(|m| sweep_monoid(m, config, &budget))
            .collect()
    });

    let mut tallies: BTreeMap<StatementId, Tally> =
        config.statements.iter().map(|&s| (s, Tally::default())).collect();
    let mut counterexamples = Vec::new();
    let mut acts = vec![0; config.max_act_size];
    for partial in partials.iter().flatten() {
        for (s, t) in &partial.tallies {
            tallies.entry(*s).or_default().merge(t);
        }
        counterexamples.extend(partial.counterexamples.iter().cloned());
        for (total, k) in acts.iter_mut().zip(&partial.acts) {
            *total += k;
        }
    }
    counterexamples.sort_by_cached_key(|c| {
        (c.statement, serde_json::to_string(&c.counterexample).expect("serializable"))
    });
    let under_exercised = match config.require_nonvacuous_count {
        Some(need) => tallies
            .iter()
            .filter(|(_, t)| t.nonvacuous() < need)
            .map(|(&s, _)| s)
            .collect(),
        None => Vec::new(),
    };
    let truncated = partials.iter().any(Option::is_none);
    let report = SweepReport {
        config: config.clone(),
        tallies,
        counterexamples,
        monoids: monoids.iter().map(Vec::len).collect(),
        acts,
        under_exercised,
        truncated,
        wall_time_ms: Some(start.elapsed().as_millis() as u64),
    };
    if truncated {
        return Err(SweepError::BudgetExceeded { partial: Box::new(report) });
    }
    Ok(report)
}

/// Search bounds for [`search_counterexample`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub max_monoid_order: usize,
    pub max_act_size: usize,
}

/// The first instance, in enumeration order, where the hypotheses hold and
/// the conclusion fails.
pub fn search_counterexample(statement: StatementId, bounds: Bounds) -> Option<Counterexample> {
    for order in 1..=bounds.max_monoid_order {
        for monoid in enumerate_monoids(order) {
            let monoid = Arc::new(monoid);
            let acts: Vec<FiniteAct> = (1..=bounds.max_act_size)
                .flat_map(|m| enumerate_acts(&monoid, m))
                .collect();
            let found = check_monoid(&monoid, &acts, &[statement])
                .into_iter()
                .find_map(|v| v.counterexample);
            if found.is_some() {
                return found;
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(statements: Vec<StatementId>) -> SweepConfig {
        SweepConfig {
            max_monoid_order: 2,
            max_act_size: 2,
            statements,
            ..SweepConfig::default()
        }
    }

    #[test]
    fn tallies_add_up() {
        let report = run_sweep(&small(StatementId::ALL.to_vec())).unwrap();
        assert_eq!(report.monoids, vec![1, 2]);
        // acts of size 1 and 2 over the three monoids: 1+1+1 and 1+2+2
        assert_eq!(report.acts, vec![3, 5]);
        let acts = 8;
        for (s, t) in &report.tallies {
            let expected = match s.scope() {
                Scope::Monoid => 3,
                Scope::Act => acts,
                Scope::ActIdeal => t.total(),
            };
            assert_eq!(t.total(), expected, "{s}");
        }
        assert!(!report.has_failures());
    }

    #[test]
    fn reports_are_reproducible() {
        let config = SweepConfig { workers: Some(3), ..small(StatementId::ALL.to_vec()) };
        let a = run_sweep(&config).unwrap().stable_json();
        let b = run_sweep(&SweepConfig { workers: Some(1), ..config }).unwrap().stable_json();
        assert_eq!(a, b);
        assert!(!a.contains("wall_time_ms"));
    }

    #[test]
    fn budget_truncates() {
        let config = SweepConfig { max_instances: Some(1), ..small(vec![StatementId::KrullIntersection]) };
        match run_sweep(&config) {
            Err(SweepError::BudgetExceeded { partial }) => assert!(partial.truncated),
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn config_validation() {
        assert_eq!(small(vec![]).validate(), Err(SweepConfigError::NoStatements));
        let zero = SweepConfig { max_act_size: 0, ..SweepConfig::default() };
        assert_eq!(zero.validate(), Err(SweepConfigError::ZeroBound));
    }

    #[test]
    fn underexercised_statements_listed() {
        let config = SweepConfig {
            require_nonvacuous_count: Some(1),
            ..small(vec![StatementId::NakayamaGeneral, StatementId::ZeroGroupRank])
        };
        let report = run_sweep(&config).unwrap();
        // {1, e} with A = {θ, a} exercises the general statement
        assert!(!report.under_exercised.contains(&StatementId::NakayamaGeneral));
    }

    #[test]
    fn no_counterexample_for_krull() {
        let bounds = Bounds { max_monoid_order: 2, max_act_size: 3 };
        assert_eq!(search_counterexample(StatementId::KrullIntersection, bounds), None);
    }
}
