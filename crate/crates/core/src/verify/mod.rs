//! Executable checks, one per statement about monoids and acts.
//!
//! Every verifier returns a [`Verdict`] that keeps "the hypotheses did not
//! hold" apart from "the conclusion held": a verdict whose hypotheses are not
//! `PASS` always has conclusion `VACUOUS`, and a counterexample is attached
//! exactly when the conclusion is `FAIL`.
//!
//! Most statements assume the monoid has at least one right non-invertible
//! element. For groups those verifiers report `NOT_APPLICABLE`. The
//! exceptions are [`StatementId::MaximalSubact`],
//! [`StatementId::ProjectiveFree`], [`StatementId::ZeroGroupRank`] and
//! [`StatementId::KrullIntersection`], whose statements make sense for every
//! monoid.

mod applications;
mod krull;
mod nakayama;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::act::FiniteAct;
use crate::monoid::FiniteMonoid;
use crate::set::{ActSubset, ElementSet};

pub use applications::{
    verify_generating_rank, verify_generator_lifting, verify_idempotent_ideal,
    verify_projective_free, verify_projective_free_over, verify_zero_group_rank,
};
pub use krull::{
    krull_intersection, verify_krull_intersection, verify_krull_zero, verify_monoid_krull,
    KrullChain,
};
pub use nakayama::{
    nakayama_witnesses, verify_fixer_criterion, verify_maximal_subact, verify_nakayama_faithful,
    verify_nakayama_fixer, verify_nakayama_general, verify_nakayama_union, verify_unit_symmetry,
};

/// The statements this crate can check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StatementId {
    UnitSymmetry,
    MaximalSubact,
    NakayamaGeneral,
    NakayamaFixer,
    FixerCriterion,
    NakayamaFaithful,
    NakayamaUnion,
    IdempotentIdeal,
    ProjectiveFree,
    ZeroGroupRank,
    GeneratorLifting,
    GeneratingRank,
    KrullIntersection,
    KrullZero,
    MonoidKrull,
}

/// What a single check of a statement consumes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    /// One monoid.
    Monoid,
    /// One act (its monoid included).
    Act,
    /// One act together with one right ideal of its monoid.
    ActIdeal,
}

impl StatementId {
    pub const ALL: [StatementId; 15] = [
        StatementId::UnitSymmetry,
        StatementId::MaximalSubact,
        StatementId::NakayamaGeneral,
        StatementId::NakayamaFixer,
        StatementId::FixerCriterion,
        StatementId::NakayamaFaithful,
        StatementId::NakayamaUnion,
        StatementId::IdempotentIdeal,
        StatementId::ProjectiveFree,
        StatementId::ZeroGroupRank,
        StatementId::GeneratorLifting,
        StatementId::GeneratingRank,
        StatementId::KrullIntersection,
        StatementId::KrullZero,
        StatementId::MonoidKrull,
    ];

    pub fn scope(self) -> Scope {
        use StatementId::*;
        match self {
            UnitSymmetry | ProjectiveFree | MonoidKrull => Scope::Monoid,
            KrullIntersection => Scope::ActIdeal,
            _ => Scope::Act,
        }
    }

    pub fn as_str(self) -> &'static str {
        use StatementId::*;
        match self {
            UnitSymmetry => "unit-symmetry",
            MaximalSubact => "maximal-subact",
            NakayamaGeneral => "nakayama-general",
            NakayamaFixer => "nakayama-fixer",
            FixerCriterion => "fixer-criterion",
            NakayamaFaithful => "nakayama-faithful",
            NakayamaUnion => "nakayama-union",
            IdempotentIdeal => "idempotent-ideal",
            ProjectiveFree => "projective-free",
            ZeroGroupRank => "zero-group-rank",
            GeneratorLifting => "generator-lifting",
            GeneratingRank => "generating-rank",
            KrullIntersection => "krull-intersection",
            KrullZero => "krull-zero",
            MonoidKrull => "monoid-krull",
        }
    }

    /// One-line statement of what is checked.
    pub fn summary(self) -> &'static str {
        use StatementId::*;
        match self {
            UnitSymmetry => "𝔐 is two-sided iff st = 1 implies ts = 1",
            MaximalSubact => "an act with a unique zero θ and A ≠ {θ} has a maximal subact above every proper subact",
            NakayamaGeneral => "𝔐 two-sided and 𝔐 = {s | as ∈ B} for a maximal subact B, a ∉ B, imply AI ≠ A for proper I",
            NakayamaFixer => "𝔐 two-sided and AI = A for a proper I imply every a outside a maximal subact has a fixer in 𝔐",
            FixerCriterion => "for maximal B and a ∉ B: 𝔐 = {s | as ∈ B} iff as = a forces s ∉ 𝔐",
            NakayamaFaithful => "𝔐 two-sided, A quasi-strongly faithful with unique zero θ, AI = A for proper I imply A = {θ}",
            NakayamaUnion => "𝔐 two-sided, A quasi-strongly faithful, B ∪ AI = A for proper I imply B = A",
            IdempotentIdeal => "under the general hypotheses, AI ≇ A for proper idempotent I, and AI = A iff I = S",
            ProjectiveFree => "over a commutative monoid every projective act is free iff E(S) = {1}",
            ZeroGroupRank => "over a 0-group, minimal generating sets have equal size",
            GeneratorLifting => "a set generates A iff its image generates A/A𝔐 over S iff over S/𝔐",
            GeneratingRank => "𝔐 two-sided and A quasi-strongly faithful imply minimal generating sets have equal size",
            KrullIntersection => "B = ∩ AIⁿ satisfies BI = B",
            KrullZero => "under the faithful hypotheses, ∩ AIⁿ = {θ} for every proper I",
            MonoidKrull => "S quasi-strongly faithful with unique zero θ: ∩ Iⁿ = {θ} (commutative) and ∩ 𝔐ⁿ = {θ} (𝔐 two-sided)",
        }
    }
}

impl fmt::Display for StatementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for StatementId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        StatementId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| format!("unknown statement `{s}`"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum HypothesisStatus {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypotheses {
    pub status: HypothesisStatus,
    /// The first hypothesis that failed, or why the statement does not apply.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failed: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Conclusion {
    Pass,
    Fail,
    Vacuous,
}

/// Evidence recorded while checking a statement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Both sides of an equivalence, as computed.
    Equivalence { left: bool, right: bool },
    /// A maximal subact `B` and `a ∉ B` with `𝔐 = {s | as ∈ B}`.
    MaximalPair { subact: ActSubset, element: usize },
    MaximalSubacts { subacts: Vec<ActSubset> },
    /// `am = a` with `m ∈ 𝔐`, found for a proper `I` with `AI = A`.
    Fixer {
        ideal: ElementSet,
        subact: ActSubset,
        element: usize,
        fixer: usize,
    },
    /// A proper right ideal with `AI = A`.
    AbsorbingIdeal { ideal: ElementSet },
    ProjectiveNonFree { idempotent: usize, act: FiniteAct },
    ProjectiveActs { checked: usize, projective: usize },
    GeneratingSets { count: usize, size: usize },
    Krull {
        ideal: ElementSet,
        intersection: ActSubset,
        stabilization_index: usize,
    },
    /// Number of cases examined by an exhaustive inner loop.
    Checked { what: String, count: usize },
}

/// A fully serialized failing instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub monoid: FiniteMonoid,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub act: Option<FiniteAct>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal: Option<ElementSet>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subact: Option<ActSubset>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub element: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subset: Option<ActSubset>,
    pub detail: String,
}

impl Counterexample {
    pub fn for_monoid(monoid: &FiniteMonoid, detail: impl Into<String>) -> Self {
        Counterexample {
            monoid: monoid.clone(),
            act: None,
            ideal: None,
            subact: None,
            element: None,
            subset: None,
            detail: detail.into(),
        }
    }

    pub fn for_act(act: &FiniteAct, detail: impl Into<String>) -> Self {
        Counterexample {
            act: Some(act.clone()),
            ..Self::for_monoid(act.monoid(), detail)
        }
    }

    pub fn with_ideal(mut self, ideal: ElementSet) -> Self {
        self.ideal = Some(ideal);
        self
    }

    pub fn with_subact(mut self, subact: ActSubset) -> Self {
        self.subact = Some(subact);
        self
    }

    pub fn with_element(mut self, element: usize) -> Self {
        self.element = Some(element);
        self
    }

    pub fn with_subset(mut self, subset: ActSubset) -> Self {
        self.subset = Some(subset);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub statement: StatementId,
    pub hypotheses: Hypotheses,
    pub conclusion: Conclusion,
    pub witnesses: Vec<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

impl Verdict {
    /// The statement does not apply to this input at all.
    pub fn not_applicable(statement: StatementId, reason: impl Into<String>) -> Self {
        Verdict {
            statement,
            hypotheses: Hypotheses {
                status: HypothesisStatus::NotApplicable,
                failed: Some(reason.into()),
            },
            conclusion: Conclusion::Vacuous,
            witnesses: Vec::new(),
            counterexample: None,
        }
    }

    /// The named hypothesis is false for this input.
    pub fn unmet(statement: StatementId, hypothesis: impl Into<String>) -> Self {
        Verdict {
            statement,
            hypotheses: Hypotheses {
                status: HypothesisStatus::Fail,
                failed: Some(hypothesis.into()),
            },
            conclusion: Conclusion::Vacuous,
            witnesses: Vec::new(),
            counterexample: None,
        }
    }

    /// Hypotheses hold; the conclusion failed iff `counterexample` is given.
    pub fn checked(
        statement: StatementId,
        witnesses: Vec<Witness>,
        counterexample: Option<Counterexample>,
    ) -> Self {
        Verdict {
            statement,
            hypotheses: Hypotheses {
                status: HypothesisStatus::Pass,
                failed: None,
            },
            conclusion: if counterexample.is_some() {
                Conclusion::Fail
            } else {
                Conclusion::Pass
            },
            witnesses,
            counterexample,
        }
    }

    pub fn with_witnesses(mut self, witnesses: Vec<Witness>) -> Self {
        self.witnesses = witnesses;
        self
    }

    pub fn is_failure(&self) -> bool {
        self.conclusion == Conclusion::Fail
    }

    /// The two structural invariants of a verdict.
    pub fn is_well_formed(&self) -> bool {
        let vacuous_iff_unmet =
            (self.conclusion == Conclusion::Vacuous) == (self.hypotheses.status != HypothesisStatus::Pass);
        let counterexample_iff_fail = self.counterexample.is_some() == self.is_failure();
        vacuous_iff_unmet && counterexample_iff_fail
    }
}

/// Returns `NOT_APPLICABLE` when the monoid is a group.
fn require_non_invertible(statement: StatementId, monoid: &FiniteMonoid) -> Option<Verdict> {
    monoid
        .maximal_right_ideal()
        .is_empty()
        .then(|| Verdict::not_applicable(statement, "monoid has no right non-invertible element"))
}

pub(crate) const TWO_SIDED: &str = "maximal right ideal is two-sided";
pub(crate) const UNIQUE_ZERO: &str = "act has a unique zero";
pub(crate) const QSF: &str = "act is quasi-strongly faithful";

/// Runs a statement of act scope, or of monoid scope on the act's monoid.
/// Statements of ideal scope produce one verdict per right ideal.
pub fn verify_on_act(statement: StatementId, act: &FiniteAct, max_act_size: usize) -> Vec<Verdict> {
    use StatementId::*;
    let monoid = act.monoid();
    match statement {
        UnitSymmetry => vec![verify_unit_symmetry(monoid)],
        ProjectiveFree => vec![verify_projective_free(monoid, max_act_size)],
        MonoidKrull => vec![verify_monoid_krull(monoid)],
        KrullIntersection => monoid
            .enumerate_right_ideals(false)
            .into_iter()
            .map(|i| verify_krull_intersection(act, i))
            .collect(),
        _ => vec![verify_act_statement(statement, act)],
    }
}

/// Dispatches a statement of [`Scope::Act`].
///
/// # Panics
///
/// If `statement` is not of act scope.
pub fn verify_act_statement(statement: StatementId, act: &FiniteAct) -> Verdict {
    use StatementId::*;
    match statement {
        MaximalSubact => verify_maximal_subact(act),
        NakayamaGeneral => verify_nakayama_general(act),
        NakayamaFixer => verify_nakayama_fixer(act),
        FixerCriterion => verify_fixer_criterion(act),
        NakayamaFaithful => verify_nakayama_faithful(act),
        NakayamaUnion => verify_nakayama_union(act),
        IdempotentIdeal => verify_idempotent_ideal(act),
        ZeroGroupRank => verify_zero_group_rank(act),
        GeneratorLifting => verify_generator_lifting(act),
        GeneratingRank => verify_generating_rank(act),
        KrullZero => verify_krull_zero(act),
        other => panic!("{other} is not an act-level statement"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::catalog::*;

    #[test]
    fn ids_roundtrip_through_strings() {
        for id in StatementId::ALL {
            assert_eq!(id.as_str().parse::<StatementId>().unwrap(), id);
            let json = serde_json::to_string(&id).unwrap();
            assert_eq!(json, format!("\"{}\"", id.as_str()));
        }
        assert!("bogus".parse::<StatementId>().is_err());
    }

    #[test]
    fn constructors_are_well_formed() {
        let s = mod_mul(4);
        let v = [
            Verdict::not_applicable(StatementId::UnitSymmetry, "group"),
            Verdict::unmet(StatementId::NakayamaFaithful, QSF),
            Verdict::checked(StatementId::UnitSymmetry, vec![], None),
            Verdict::checked(
                StatementId::UnitSymmetry,
                vec![],
                Some(Counterexample::for_monoid(&s, "x")),
            ),
        ];
        for verdict in &v {
            assert!(verdict.is_well_formed());
        }
        assert_eq!(v[1].conclusion, Conclusion::Vacuous);
        assert_eq!(v[3].conclusion, Conclusion::Fail);
    }

    #[test]
    fn verdict_json_field_names() {
        let v = Verdict::unmet(StatementId::NakayamaFaithful, QSF);
        let json: serde_json::Value = serde_json::to_value(&v).unwrap();
        assert_eq!(json["statement"], "nakayama-faithful");
        assert_eq!(json["hypotheses"]["status"], "FAIL");
        assert_eq!(json["conclusion"], "VACUOUS");
        assert!(json["witnesses"].as_array().unwrap().is_empty());
        assert!(json.get("counterexample").is_none());
    }
}
