mod common;

use std::sync::{Arc, OnceLock};

use actlab::verify::{verify_act_statement, verify_on_act, Conclusion, Verdict};
use actlab::{ElementSet, FiniteAct, FiniteMonoid, StatementId};
use proptest::prelude::*;

use common::*;

fn monoids() -> &'static [Arc<FiniteMonoid>] {
    static CELL: OnceLock<Vec<Arc<FiniteMonoid>>> = OnceLock::new();
    CELL.get_or_init(|| monoids_up_to(4))
}

fn acts() -> &'static [FiniteAct] {
    static CELL: OnceLock<Vec<FiniteAct>> = OnceLock::new();
    CELL.get_or_init(|| acts_up_to(3, 3))
}

fn any_monoid() -> impl Strategy<Value = Arc<FiniteMonoid>> {
    (0..monoids().len()).prop_map(|i| monoids()[i].clone())
}

fn any_act() -> impl Strategy<Value = FiniteAct> {
    (0..acts().len()).prop_map(|i| acts()[i].clone())
}

fn any_subset(n: usize) -> impl Strategy<Value = ElementSet> {
    (1u64..1 << n).prop_map(ElementSet::from_bits)
}

/// A monoid with three arbitrary nonempty subsets.
fn monoid_and_subsets() -> impl Strategy<Value = (Arc<FiniteMonoid>, ElementSet, ElementSet, ElementSet)> {
    any_monoid().prop_flat_map(|s| {
        let n = s.order();
        (Just(s), any_subset(n), any_subset(n), any_subset(n))
    })
}

/// An act with one of its monoid's right ideals.
fn act_and_ideal() -> impl Strategy<Value = (FiniteAct, ElementSet)> {
    any_act().prop_flat_map(|a| {
        let ideals = a.monoid().enumerate_right_ideals(false);
        (Just(a), proptest::sample::select(ideals))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn subset_product_is_associative((s, i, j, k) in monoid_and_subsets()) {
        let left = s.ideal_product(s.ideal_product(i, j), k);
        let right = s.ideal_product(i, s.ideal_product(j, k));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn subset_product_is_monotone((s, i, j, k) in monoid_and_subsets()) {
        let bigger = i.union(k);
        prop_assert!(s.ideal_product(i, j).is_subset(s.ideal_product(bigger, j)));
        prop_assert!(s.ideal_product(j, i).is_subset(s.ideal_product(j, bigger)));
    }

    #[test]
    fn powers_of_right_ideals_descend(s in any_monoid(), pick in any::<prop::sample::Index>(), n in 1usize..5) {
        let ideals = s.enumerate_right_ideals(false);
        let i = ideals[pick.index(ideals.len())];
        let lower = s.ideal_power(i, n + 1).unwrap();
        let upper = s.ideal_power(i, n).unwrap();
        prop_assert!(lower.is_subset(upper));
        prop_assert!(s.is_right_ideal(upper));
    }

    #[test]
    fn act_times_power_is_iterated_product((a, i) in act_and_ideal(), n in 2usize..5) {
        let s = a.monoid();
        let direct = a.subset_times(a.carrier(), s.ideal_power(i, n).unwrap());
        let previous = a.subset_times(a.carrier(), s.ideal_power(i, n - 1).unwrap());
        prop_assert_eq!(direct, a.subset_times(previous, i));
    }

    #[test]
    fn ideal_products_are_subacts((a, i) in act_and_ideal()) {
        let product = a.ideal_product(i).unwrap();
        prop_assert!(a.is_subact(product));
    }

    #[test]
    fn rees_projection_is_an_epimorphism((a, i) in act_and_ideal()) {
        let b = a.ideal_product(i).unwrap();
        let (factor, pi) = a.rees_factor(b).unwrap();
        prop_assert!(pi.is_equivariant(&a, &factor));
        prop_assert!(pi.is_surjective(&factor));
        prop_assert_eq!(factor.size(), a.size() - b.len() + 1);
    }

    #[test]
    fn free_implies_projective(a in any_act()) {
        if a.is_free().free {
            prop_assert!(a.is_projective().projective);
        }
    }

    #[test]
    fn fixer_criterion_never_fails(a in any_act()) {
        let v = verify_act_statement(StatementId::FixerCriterion, &a);
        prop_assert_ne!(v.conclusion, Conclusion::Fail);
    }

    #[test]
    fn verdicts_are_well_formed_and_roundtrip(a in any_act(), k in 0usize..StatementId::ALL.len()) {
        let statement = StatementId::ALL[k];
        for v in verify_on_act(statement, &a, 2) {
            prop_assert!(v.is_well_formed());
            let text = serde_json::to_string(&v).unwrap();
            let back: Verdict = serde_json::from_str(&text).unwrap();
            prop_assert_eq!(&back, &v);
            prop_assert_eq!(serde_json::to_string(&back).unwrap(), text);
        }
    }

    #[test]
    fn isomorphic_copies_share_verdicts(a in any_act(), seed in any::<u64>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut p: Vec<usize> = a.elements().collect();
        p.shuffle(&mut rng);
        let b = relabel_act(&a, &p);
        for statement in [StatementId::NakayamaGeneral, StatementId::NakayamaFaithful, StatementId::GeneratingRank] {
            let va = verify_act_statement(statement, &a);
            let vb = verify_act_statement(statement, &b);
            prop_assert_eq!(va.hypotheses.status, vb.hypotheses.status);
            prop_assert_eq!(va.conclusion, vb.conclusion);
        }
    }
}
