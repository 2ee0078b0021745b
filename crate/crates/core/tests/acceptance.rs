//! Acceptance suite: one line per criterion, nonzero exit if any fails.

mod common;

use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use actlab::act::act_isomorphic;
use actlab::enumerate::{
    enumerate_acts, enumerate_monoids, enumerate_monoids_naive, run_sweep, SweepConfig, SweepReport,
};
use actlab::monoid::monoid_isomorphic;
use actlab::verify::{verify_nakayama_faithful, verify_projective_free, Conclusion, HypothesisStatus, Witness};
use actlab::{FiniteAct, StatementId};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;

const PUBLISHED_MONOID_COUNTS: [usize; 4] = [1, 2, 7, 35];
const ORDER_FOUR_LIMIT: Duration = Duration::from_secs(60);
const FULL_SWEEP_LIMIT: Duration = Duration::from_secs(600);
const MIN_ORACLE_PAIRS: usize = 10_000;
const MIN_NONVACUOUS: usize = 1;

type Criterion = Box<dyn Fn() -> Outcome>;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn sweep(max_monoid_order: usize, max_act_size: usize, statements: &[StatementId]) -> SweepReport {
    let config = SweepConfig {
        max_monoid_order,
        max_act_size,
        statements: statements.to_vec(),
        require_nonvacuous_count: Some(MIN_NONVACUOUS),
        ..SweepConfig::default()
    };
    run_sweep(&config).expect("unbounded sweeps finish")
}

/// Zero failures for each statement, and optionally at least one check with
/// the hypotheses satisfied.
fn sweep_outcome(report: &SweepReport, need_nonvacuous: &[StatementId]) -> Outcome {
    let mut parts = Vec::new();
    let mut pass = !report.has_failures();
    for (s, t) in &report.tallies {
        parts.push(format!("{s}: {} pass / {} fail / {} vacuous / {} n/a", t.pass, t.fail, t.vacuous, t.not_applicable));
        if t.fail > 0 || (need_nonvacuous.contains(s) && t.nonvacuous() < MIN_NONVACUOUS) {
            pass = false;
        }
    }
    outcome(pass, parts.join("; "))
}

fn monoid_counts() -> Outcome {
    let start = Instant::now();
    let smart: Vec<usize> = (1..=4).map(|n| enumerate_monoids(n).len()).collect();
    let elapsed = start.elapsed();
    let naive: Vec<usize> = (1..=4).map(|n| enumerate_monoids_naive(n).len()).collect();
    let pass = smart == PUBLISHED_MONOID_COUNTS && naive == PUBLISHED_MONOID_COUNTS && elapsed < ORDER_FOUR_LIMIT;
    outcome(pass, format!("smart {smart:?}, naive {naive:?}, orders 1-4 in {elapsed:.2?}"))
}

fn unit_symmetry() -> Outcome {
    let mut checked = 0;
    let mut disagreements = 0;
    for s in monoids_up_to(4) {
        let maximal = s.maximal_right_ideal();
        if maximal.is_empty() {
            continue;
        }
        checked += 1;
        if s.is_two_sided(maximal) != s.check_unit_symmetry() {
            disagreements += 1;
        }
    }
    outcome(disagreements == 0 && checked > 0, format!("{checked} monoids, {disagreements} disagreements"))
}

fn projective_free() -> Outcome {
    let mut with_idempotents = 0;
    let mut without = 0;
    let mut failures = 0;
    for s in monoids_up_to(4).iter().filter(|s| s.is_commutative()) {
        let v = verify_projective_free(s, 5);
        let expected_witness = s.idempotents().len() > 1;
        let ok = v.conclusion == Conclusion::Pass
            && match &v.witnesses[0] {
                Witness::ProjectiveNonFree { act, .. } => {
                    expected_witness && act.is_projective().projective && !act.is_free().free
                }
                Witness::ProjectiveActs { .. } => !expected_witness,
                _ => false,
            };
        if expected_witness {
            with_idempotents += 1;
        } else {
            without += 1;
        }
        if !ok {
            failures += 1;
        }
    }
    outcome(
        failures == 0,
        format!("{with_idempotents} with E(S) ≠ {{1}} (eS witnesses), {without} with E(S) = {{1}} (acts up to 5 checked), {failures} failures"),
    )
}

fn oracle_agreement() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut pairs = 0;
    let mut disagreements = 0;
    for n in 1..=4 {
        let monoids = enumerate_monoids(n);
        let mut pool = monoids.clone();
        for m in &monoids {
            for _ in 0..2 {
                let mut p: Vec<usize> = (0..n).collect();
                p.shuffle(&mut rng);
                pool.push(relabel_monoid(m, &p));
            }
        }
        for l in &pool {
            for r in &pool {
                pairs += 1;
                if monoid_isomorphic(l, r).is_some() != brute_monoid_iso(l, r) {
                    disagreements += 1;
                }
            }
        }
    }
    for s in monoids_up_to(3) {
        for m in 1..=4 {
            let acts = enumerate_acts(&s, m);
            let mut pool = acts.clone();
            for a in &acts {
                let mut p: Vec<usize> = (0..m).collect();
                p.shuffle(&mut rng);
                pool.push(relabel_act(a, &p));
            }
            for l in &pool {
                for r in &pool {
                    pairs += 1;
                    if act_isomorphic(l, r).is_some() != brute_act_iso(l, r) {
                        disagreements += 1;
                    }
                }
            }
        }
    }
    outcome(
        disagreements == 0 && pairs >= MIN_ORACLE_PAIRS,
        format!("{pairs} pairs, {disagreements} disagreements"),
    )
}

fn trivial_action() -> Outcome {
    let mut checked = 0;
    let mut bad = 0;
    for s in monoids_up_to(4) {
        if s.maximal_right_ideal().is_empty() {
            continue;
        }
        checked += 1;
        let a = FiniteAct::trivial(Arc::clone(&s), 2);
        let absorbing = s
            .enumerate_right_ideals(true)
            .iter()
            .all(|&i| a.ideal_product(i).unwrap() == a.carrier());
        let v = verify_nakayama_faithful(&a);
        let ok = absorbing
            && a.size() > 1
            && v.hypotheses.status == HypothesisStatus::Fail
            && v.conclusion == Conclusion::Vacuous;
        if !ok {
            bad += 1;
        }
    }
    outcome(bad == 0 && checked > 0, format!("{checked} monoids with 𝔐 ≠ ∅, {bad} mismatches"))
}

fn full_sweep() -> Outcome {
    let config = SweepConfig::default();
    let start = Instant::now();
    let first = run_sweep(&config).expect("default sweep finishes");
    let elapsed = start.elapsed();
    let second = run_sweep(&config).expect("default sweep finishes");
    let stable = first.stable_json() == second.stable_json();
    let fails: usize = first.tallies.values().map(|t| t.fail).sum();
    let checks: usize = first.tallies.values().map(|t| t.total()).sum();
    outcome(
        elapsed < FULL_SWEEP_LIMIT && stable && fails == 0,
        format!(
            "{checks} checks over {:?} monoids and {:?} acts in {elapsed:.2?}, byte-stable {stable}, {fails} failures",
            first.monoids, first.acts
        ),
    )
}

fn main() -> ExitCode {
    use StatementId::*;
    let criteria: Vec<(&str, Criterion)> = vec![
        ("1 monoid counts by two strategies", Box::new(monoid_counts)),
        ("2 maximal ideal two-sided iff unit symmetry", Box::new(unit_symmetry)),
        ("3 general Nakayama sweep", Box::new(|| sweep_outcome(&sweep(3, 4, &[NakayamaGeneral]), &[NakayamaGeneral]))),
        ("4 fixer criterion sweep", Box::new(|| sweep_outcome(&sweep(3, 4, &[FixerCriterion]), &[FixerCriterion]))),
        ("5 faithful Nakayama sweep", Box::new(|| sweep_outcome(&sweep(3, 4, &[NakayamaFaithful]), &[NakayamaFaithful]))),
        (
            "6 union, generator lifting, generating rank sweeps",
            Box::new(|| sweep_outcome(&sweep(3, 4, &[NakayamaUnion, GeneratorLifting, GeneratingRank]), &[])),
        ),
        (
            "7 Krull intersection and Krull zero sweeps",
            Box::new(|| sweep_outcome(&sweep(3, 4, &[KrullIntersection, KrullZero]), &[KrullIntersection])),
        ),
        ("8 projective iff free for commutative monoids", Box::new(projective_free)),
        ("9 isomorphism oracles agree with brute force", Box::new(oracle_agreement)),
        ("10 trivial action regression", Box::new(trivial_action)),
        ("11 full default sweep", Box::new(full_sweep)),
    ];
    let mut failed = 0;
    for (name, check) in &criteria {
        let start = Instant::now();
        let Outcome { pass, detail } = check();
        if !pass {
            failed += 1;
        }
        let tag = if pass { "PASS" } else { "FAIL" };
        println!("[{tag}] {name} ({:.2?}): {detail}", start.elapsed());
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
