//! Nakayama-type statements: two-sidedness of 𝔐, maximal subacts, and the
//! `AI = A` family.

use super::{
    require_non_invertible, Counterexample, StatementId, Verdict, Witness, QSF, TWO_SIDED,
    UNIQUE_ZERO,
};
use crate::act::FiniteAct;
use crate::monoid::FiniteMonoid;
use crate::set::{ActSubset, ElementSet};

/// Compares "𝔐 is two-sided" with "`st = 1` implies `ts = 1`", each
/// computed on its own.
pub fn verify_unit_symmetry(monoid: &FiniteMonoid) -> Verdict {
    let id = StatementId::UnitSymmetry;
    if let Some(v) = require_non_invertible(id, monoid) {
        return v;
    }
    let left = monoid.is_two_sided(monoid.maximal_right_ideal());
    let right = monoid.check_unit_symmetry();
    let counterexample = (left != right).then(|| {
        Counterexample::for_monoid(
            monoid,
            format!("two-sided = {left} but unit symmetry = {right}"),
        )
    });
    Verdict::checked(id, vec![Witness::Equivalence { left, right }], counterexample)
}

pub fn verify_maximal_subact(act: &FiniteAct) -> Verdict {
    let id = StatementId::MaximalSubact;
    if act.unique_zero().is_none() {
        return Verdict::unmet(id, UNIQUE_ZERO);
    }
    if act.size() == 1 {
        return Verdict::unmet(id, "act is not the one-point act");
    }
    let maximal = act.maximal_subacts();
    let full = act.carrier();
    let uncovered = act
        .all_subacts()
        .into_iter()
        .filter(|&b| b != full)
        .find(|b| !maximal.iter().any(|m| b.is_subset(*m)));
    let counterexample = if maximal.is_empty() {
        Some(Counterexample::for_act(act, "no maximal subact"))
    } else {
        uncovered.map(|b| {
            Counterexample::for_act(act, "proper subact not below any maximal subact").with_subact(b)
        })
    };
    Verdict::checked(id, vec![Witness::MaximalSubacts { subacts: maximal }], counterexample)
}

/// `{s | as ∈ B}`.
fn transporter(act: &FiniteAct, a: usize, subact: ActSubset) -> ElementSet {
    act.monoid()
        .elements()
        .filter(|&s| subact.contains(act.act(a, s)))
        .collect()
}

/// All pairs `(B, a)` with `B` a maximal subact, `a ∉ B` and
/// `𝔐 = {s | as ∈ B}`.
pub fn nakayama_witnesses(act: &FiniteAct) -> Vec<(ActSubset, usize)> {
    let maximal_ideal = act.monoid().maximal_right_ideal();
    act.maximal_subacts()
        .into_iter()
        .flat_map(|b| act.carrier().difference(b).iter().map(move |a| (b, a)))
        .filter(|&(b, a)| transporter(act, a, b) == maximal_ideal)
        .collect()
}

/// Proper right ideals `I` with `AI = A`.
fn absorbing_ideals(act: &FiniteAct) -> Vec<ElementSet> {
    act.monoid()
        .enumerate_right_ideals(true)
        .into_iter()
        .filter(|&i| act.subset_times(act.carrier(), i) == act.carrier())
        .collect()
}

pub fn verify_nakayama_general(act: &FiniteAct) -> Verdict {
    let id = StatementId::NakayamaGeneral;
    let monoid = act.monoid();
    if let Some(v) = require_non_invertible(id, monoid) {
        return v;
    }
    if !monoid.is_two_sided(monoid.maximal_right_ideal()) {
        return Verdict::unmet(id, TWO_SIDED);
    }
    let pairs = nakayama_witnesses(act);
    if pairs.is_empty() {
        return Verdict::unmet(id, "a maximal subact B and a ∉ B with 𝔐 = {s | as ∈ B}");
    }
    let witnesses = pairs
        .iter()
        .map(|&(subact, element)| Witness::MaximalPair { subact, element })
        .collect();
    let counterexample = absorbing_ideals(act).first().map(|&i| {
        let (b, a) = pairs[0];
        Counterexample::for_act(act, "AI = A for a proper ideal")
            .with_ideal(i)
            .with_subact(b)
            .with_element(a)
    });
    Verdict::checked(id, witnesses, counterexample)
}

pub fn verify_nakayama_fixer(act: &FiniteAct) -> Verdict {
    let id = StatementId::NakayamaFixer;
    let monoid = act.monoid();
    if let Some(v) = require_non_invertible(id, monoid) {
        return v;
    }
    let maximal_ideal = monoid.maximal_right_ideal();
    if !monoid.is_two_sided(maximal_ideal) {
        return Verdict::unmet(id, TWO_SIDED);
    }
    let maximal = act.maximal_subacts();
    if maximal.is_empty() {
        return Verdict::unmet(id, "act has a maximal subact");
    }
    let ideals = absorbing_ideals(act);
    if ideals.is_empty() {
        return Verdict::unmet(id, "AI = A for some proper ideal I");
    }
    let mut witnesses = Vec::new();
    for &ideal in &ideals {
        for &subact in &maximal {
            for element in act.carrier().difference(subact).iter() {
                match act.fixers(element).intersection(maximal_ideal).first() {
                    Some(fixer) => witnesses.push(Witness::Fixer { ideal, subact, element, fixer }),
                    None => {
                        let cx = Counterexample::for_act(act, "no fixer in 𝔐")
                            .with_ideal(ideal)
                            .with_subact(subact)
                            .with_element(element);
                        return Verdict::checked(id, witnesses, Some(cx));
                    }
                }
            }
        }
    }
    Verdict::checked(id, witnesses, None)
}

/// For each maximal `B` and `a ∉ B`, compares `𝔐 = {s | as ∈ B}` with
/// "`as = a` implies `s ∉ 𝔐`".
pub fn verify_fixer_criterion(act: &FiniteAct) -> Verdict {
    let id = StatementId::FixerCriterion;
    let monoid = act.monoid();
    if let Some(v) = require_non_invertible(id, monoid) {
        return v;
    }
    let maximal = act.maximal_subacts();
    if maximal.is_empty() {
        return Verdict::unmet(id, "act has a maximal subact");
    }
    let maximal_ideal = monoid.maximal_right_ideal();
    let mut count = 0;
    for &subact in &maximal {
        for a in act.carrier().difference(subact).iter() {
            count += 1;
            let ideal_side = transporter(act, a, subact) == maximal_ideal;
            let fixer_side = act.fixers(a).intersection(maximal_ideal).is_empty();
            if ideal_side != fixer_side {
                let cx = Counterexample::for_act(
                    act,
                    format!("ideal condition = {ideal_side}, fixer condition = {fixer_side}"),
                )
                .with_subact(subact)
                .with_element(a);
                return Verdict::checked(id, vec![], Some(cx));
            }
        }
    }
    let witness = Witness::Checked { what: "(maximal subact, element) pairs".into(), count };
    Verdict::checked(id, vec![witness], None)
}

/// Shared hypothesis check for the quasi-strongly-faithful statements.
fn faithful_hypotheses(id: StatementId, act: &FiniteAct, need_unique_zero: bool) -> Option<Verdict> {
    let monoid = act.monoid();
    if let Some(v) = require_non_invertible(id, monoid) {
        return Some(v);
    }
    if !monoid.is_two_sided(monoid.maximal_right_ideal()) {
        return Some(Verdict::unmet(id, TWO_SIDED));
    }
    if need_unique_zero && act.unique_zero().is_none() {
        return Some(Verdict::unmet(id, UNIQUE_ZERO));
    }
    if !act.is_quasi_strongly_faithful() {
        return Some(Verdict::unmet(id, QSF));
    }
    None
}

pub fn verify_nakayama_faithful(act: &FiniteAct) -> Verdict {
    let id = StatementId::NakayamaFaithful;
    if let Some(v) = faithful_hypotheses(id, act, true) {
        return v;
    }
    let ideals = absorbing_ideals(act);
    let witnesses = ideals.iter().map(|&ideal| Witness::AbsorbingIdeal { ideal }).collect();
    let counterexample = (act.size() > 1)
        .then(|| ideals.first().copied())
        .flatten()
        .map(|i| Counterexample::for_act(act, "AI = A for a proper ideal but A ≠ {θ}").with_ideal(i));
    Verdict::checked(id, witnesses, counterexample)
}

/// The statement as written: no unique-zero hypothesis.
pub fn verify_nakayama_union(act: &FiniteAct) -> Verdict {
    let id = StatementId::NakayamaUnion;
    if let Some(v) = faithful_hypotheses(id, act, false) {
        return v;
    }
    let full = act.carrier();
    let subacts = act.all_subacts();
    let ideals = act.monoid().enumerate_right_ideals(true);
    let mut count = 0;
    for &ideal in &ideals {
        let product = act.subset_times(full, ideal);
        for &b in &subacts {
            count += 1;
            if b.union(product) == full && b != full {
                let cx = Counterexample::for_act(act, "B ∪ AI = A but B ≠ A")
                    .with_ideal(ideal)
                    .with_subact(b);
                return Verdict::checked(id, vec![], Some(cx));
            }
        }
    }
    let witness = Witness::Checked { what: "(subact, proper ideal) pairs".into(), count };
    Verdict::checked(id, vec![witness], None)
}
