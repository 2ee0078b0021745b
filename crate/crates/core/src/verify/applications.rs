//! Consequences of the Nakayama-type statements: idempotent ideals,
//! projective acts, and generating sets.

use super::{
    nakayama_witnesses, require_non_invertible, Counterexample, StatementId, Verdict, Witness, QSF,
    TWO_SIDED,
};
use crate::act::{act_isomorphic, induced_quotient_act, FiniteAct};
use crate::enumerate::enumerate_acts;
use crate::monoid::FiniteMonoid;
use crate::set::{ActSubset, ElementSet};
use std::sync::Arc;

/// Checks, over every right ideal `I`:
/// `I² = I` proper gives `AI ≇ A`, `AI = A` iff `I = S`, and for `I² = I`,
/// `AI ≅ A` iff `I = S`.
pub fn verify_idempotent_ideal(act: &FiniteAct) -> Verdict {
    let id = StatementId::IdempotentIdeal;
    let monoid = act.monoid();
    if let Some(v) = require_non_invertible(id, monoid) {
        return v;
    }
    if !monoid.is_two_sided(monoid.maximal_right_ideal()) {
        return Verdict::unmet(id, TWO_SIDED);
    }
    if nakayama_witnesses(act).is_empty() {
        return Verdict::unmet(id, "a maximal subact B and a ∉ B with 𝔐 = {s | as ∈ B}");
    }
    let full = monoid.carrier();
    let ideals = monoid.enumerate_right_ideals(false);
    for &ideal in &ideals {
        let product = act.subset_times(act.carrier(), ideal);
        let is_full = ideal == full;
        if (product == act.carrier()) != is_full {
            let cx = Counterexample::for_act(act, "AI = A does not match I = S").with_ideal(ideal);
            return Verdict::checked(id, vec![], Some(cx));
        }
        if monoid.ideal_product(ideal, ideal) != ideal {
            continue;
        }
        let (restricted, _) = act.restrict(product).expect("AI is a subact");
        let isomorphic = act_isomorphic(&restricted, act).is_some();
        if isomorphic != is_full {
            let detail = if is_full {
                "AS is not isomorphic to A"
            } else {
                "AI ≅ A for a proper idempotent ideal"
            };
            let cx = Counterexample::for_act(act, detail).with_ideal(ideal);
            return Verdict::checked(id, vec![], Some(cx));
        }
    }
    let witness = Witness::Checked { what: "right ideals".into(), count: ideals.len() };
    Verdict::checked(id, vec![witness], None)
}

/// Defers to [`verify_projective_free_over`], enumerating acts of every size
/// up to `max_act_size` only when `E(S) = {1}`.
pub fn verify_projective_free(monoid: &FiniteMonoid, max_act_size: usize) -> Verdict {
    if !monoid.is_commutative() {
        return Verdict::unmet(StatementId::ProjectiveFree, "monoid is commutative");
    }
    if monoid.idempotents().len() > 1 {
        return verify_projective_free_over(monoid, &[]);
    }
    let shared = Arc::new(monoid.clone());
    let acts: Vec<FiniteAct> = (1..=max_act_size)
        .flat_map(|m| enumerate_acts(&shared, m))
        .collect();
    verify_projective_free_over(monoid, &acts)
}

/// With `E(S) = {1}`, every projective act in `acts` must be free.
/// Otherwise `eS` for the smallest idempotent `e ≠ 1` must be projective and
/// not free.
pub fn verify_projective_free_over(monoid: &FiniteMonoid, acts: &[FiniteAct]) -> Verdict {
    let id = StatementId::ProjectiveFree;
    if !monoid.is_commutative() {
        return Verdict::unmet(id, "monoid is commutative");
    }
    let shared = Arc::new(monoid.clone());
    let mut nontrivial = monoid.idempotents();
    nontrivial.remove(monoid.identity());
    if let Some(e) = nontrivial.first() {
        let es = FiniteAct::regular(shared).principal_act(e);
        let projective = es.is_projective().projective;
        let free = es.is_free().free;
        let counterexample = (!projective || free).then(|| {
            Counterexample::for_act(&es, format!("eS has projective = {projective}, free = {free}"))
                .with_element(e)
        });
        let witness = Witness::ProjectiveNonFree { idempotent: e, act: es };
        return Verdict::checked(id, vec![witness], counterexample);
    }
    let mut projective = 0;
    for act in acts {
        if act.is_projective().projective {
            projective += 1;
            if !act.is_free().free {
                let cx = Counterexample::for_act(act, "projective but not free with E(S) = {1}");
                return Verdict::checked(id, vec![], Some(cx));
            }
        }
    }
    let witness = Witness::ProjectiveActs { checked: acts.len(), projective };
    Verdict::checked(id, vec![witness], None)
}

/// Either a witness that all minimal generating sets share one size, or a
/// counterexample naming two of different sizes.
fn equal_generating_sizes(id: StatementId, act: &FiniteAct) -> Verdict {
    let sets = act.minimal_generating_sets();
    let size = sets[0].len();
    match sets.iter().find(|x| x.len() != size) {
        Some(&other) => {
            let cx = Counterexample::for_act(
                act,
                format!("minimal generating sets {} and {} differ in size", sets[0], other),
            )
            .with_subset(other);
            Verdict::checked(id, vec![], Some(cx))
        }
        None => Verdict::checked(id, vec![Witness::GeneratingSets { count: sets.len(), size }], None),
    }
}

pub fn verify_zero_group_rank(act: &FiniteAct) -> Verdict {
    let id = StatementId::ZeroGroupRank;
    if !act.monoid().is_zero_group() {
        return Verdict::unmet(id, "monoid is a 0-group");
    }
    equal_generating_sizes(id, act)
}

fn lifting_hypotheses(id: StatementId, act: &FiniteAct) -> Option<Verdict> {
    let monoid = act.monoid();
    if let Some(v) = require_non_invertible(id, monoid) {
        return Some(v);
    }
    if !monoid.is_two_sided(monoid.maximal_right_ideal()) {
        return Some(Verdict::unmet(id, TWO_SIDED));
    }
    if !act.is_quasi_strongly_faithful() {
        return Some(Verdict::unmet(id, QSF));
    }
    None
}

/// For every nonempty `X ⊆ A`, compares "`X` generates `A`", "`π(X)`
/// generates `A/A𝔐` over `S`" and "`π(X)` generates `A/A𝔐` over `S/𝔐`".
pub fn verify_generator_lifting(act: &FiniteAct) -> Verdict {
    let id = StatementId::GeneratorLifting;
    if let Some(v) = lifting_hypotheses(id, act) {
        return v;
    }
    let maximal_ideal: ElementSet = act.monoid().maximal_right_ideal();
    let induced = match induced_quotient_act(act, maximal_ideal) {
        Ok(induced) => induced,
        Err(e) => {
            let cx = Counterexample::for_act(act, format!("S/𝔐 action on A/A𝔐: {e}"))
                .with_ideal(maximal_ideal);
            return Verdict::checked(id, vec![], Some(cx));
        }
    };
    let pi = &induced.projection.map;
    let subsets = (1u64..1 << act.size()).map(ActSubset::from_bits);
    let mut count = 0;
    for x in subsets {
        count += 1;
        let image: ActSubset = x.iter().map(|a| pi[a]).collect();
        let in_act = act.is_generating(x);
        let over_s = induced.factor.is_generating(image);
        let over_quotient = induced.act.is_generating(image);
        if in_act != over_s || over_s != over_quotient {
            let cx = Counterexample::for_act(
                act,
                format!("generates A = {in_act}, A/A𝔐 over S = {over_s}, over S/𝔐 = {over_quotient}"),
            )
            .with_subset(x);
            return Verdict::checked(id, vec![], Some(cx));
        }
    }
    let witness = Witness::Checked { what: "nonempty subsets".into(), count };
    Verdict::checked(id, vec![witness], None)
}

pub fn verify_generating_rank(act: &FiniteAct) -> Verdict {
    let id = StatementId::GeneratingRank;
    if let Some(v) = lifting_hypotheses(id, act) {
        return v;
    }
    equal_generating_sizes(id, act)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::catalog::*;
    use crate::verify::{Conclusion, HypothesisStatus};

    fn theta_a() -> FiniteAct {
        FiniteAct::from_fn(Arc::new(idempotent_pair()), 2, |a, s| if s == IDEMPOTENT { 0 } else { a })
            .unwrap()
    }

    #[test]
    fn idempotent_ideal_on_theta_a() {
        let v = verify_idempotent_ideal(&theta_a());
        assert_eq!(v.conclusion, Conclusion::Pass);
        assert_eq!(v.witnesses, vec![Witness::Checked { what: "right ideals".into(), count: 2 }]);
    }

    #[test]
    fn projective_free_cases() {
        let v = verify_projective_free(&cyclic_group(2), 4);
        assert_eq!(v.conclusion, Conclusion::Pass);
        match &v.witnesses[0] {
            Witness::ProjectiveActs { checked, projective } => {
                assert!(*checked > 0);
                // S and S ⊔ S are the projective acts of size ≤ 4
                assert_eq!(*projective, 2);
            }
            w => panic!("unexpected witness {w:?}"),
        }

        let v = verify_projective_free(&idempotent_pair(), 3);
        assert_eq!(v.conclusion, Conclusion::Pass);
        assert!(matches!(v.witnesses[0], Witness::ProjectiveNonFree { idempotent: IDEMPOTENT, .. }));

        let z6 = mod_mul(6);
        let v = verify_projective_free_over(&z6, &[]);
        match &v.witnesses[0] {
            Witness::ProjectiveNonFree { idempotent, act } => {
                assert_eq!(*idempotent, 0);
                assert_eq!(act.size(), 1);
            }
            w => panic!("unexpected witness {w:?}"),
        }

        let v = verify_projective_free(&full_transformation(2), 2);
        assert_eq!(v.hypotheses.status, HypothesisStatus::Fail);
    }

    #[test]
    fn zero_group_rank_examples() {
        let s = Arc::new(with_zero(&cyclic_group(3)));
        let reg = FiniteAct::regular(s.clone());
        let v = verify_zero_group_rank(&reg.disjoint_union(&reg).unwrap());
        assert_eq!(v.conclusion, Conclusion::Pass);
        assert_eq!(v.witnesses, vec![Witness::GeneratingSets { count: 9, size: 2 }]);

        let v = verify_zero_group_rank(&FiniteAct::regular(Arc::new(mod_mul(4))));
        assert_eq!(v.hypotheses.status, HypothesisStatus::Fail);
    }

    #[test]
    fn lifting_and_rank_on_regular_acts() {
        for s in [mod_mul(4), mod_mul(9), with_zero(&cyclic_group(2))] {
            let reg = FiniteAct::regular(Arc::new(s));
            let v = verify_generator_lifting(&reg);
            assert_eq!(v.conclusion, Conclusion::Pass, "{v:?}");
            let v = verify_generating_rank(&reg);
            assert_eq!(v.conclusion, Conclusion::Pass, "{v:?}");
        }
    }
}
