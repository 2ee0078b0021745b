//! Descending chains `AI ⊇ AI² ⊇ …` and their limit.

use serde::{Deserialize, Serialize};

use super::{
    require_non_invertible, Counterexample, StatementId, Verdict, Witness, QSF, TWO_SIDED,
    UNIQUE_ZERO,
};
use crate::act::FiniteAct;
use crate::error::AlgebraError;
use crate::monoid::FiniteMonoid;
use crate::set::{ActSubset, ElementSet};
use std::sync::Arc;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KrullChain {
    /// `chain[k] = AI^(k+1)`, up to and including the first repeat.
    pub chain: Vec<ActSubset>,
    /// `∩ AIⁿ`, the stable value of the chain.
    pub intersection: ActSubset,
    /// Least `n₀` with `AI^(n₀+1) = AI^n₀`.
    pub stabilization_index: usize,
}

pub fn krull_intersection(act: &FiniteAct, ideal: ElementSet) -> Result<KrullChain, AlgebraError> {
    let mut current = act.ideal_product(ideal)?;
    let mut chain = vec![current];
    loop {
        let next = act.subset_times(current, ideal);
        if next == current {
            return Ok(KrullChain {
                stabilization_index: chain.len(),
                intersection: current,
                chain,
            });
        }
        chain.push(next);
        current = next;
    }
}

/// `BI = B` for `B = ∩ AIⁿ`. Holds for every finite act and right ideal.
pub fn verify_krull_intersection(act: &FiniteAct, ideal: ElementSet) -> Verdict {
    let id = StatementId::KrullIntersection;
    let chain = match krull_intersection(act, ideal) {
        Ok(chain) => chain,
        Err(_) => return Verdict::unmet(id, "I is a right ideal"),
    };
    let b = chain.intersection;
    let product = act.subset_times(b, ideal);
    let counterexample = (product != b).then(|| {
        Counterexample::for_act(act, format!("BI = {product} differs from B"))
            .with_ideal(ideal)
            .with_subact(b)
    });
    let witness = Witness::Krull {
        ideal,
        intersection: b,
        stabilization_index: chain.stabilization_index,
    };
    Verdict::checked(id, vec![witness], counterexample)
}

/// `∩ AIⁿ = {θ}` for every proper right ideal `I`.
pub fn verify_krull_zero(act: &FiniteAct) -> Verdict {
    let id = StatementId::KrullZero;
    let monoid = act.monoid();
    if let Some(v) = require_non_invertible(id, monoid) {
        return v;
    }
    if !monoid.is_two_sided(monoid.maximal_right_ideal()) {
        return Verdict::unmet(id, TWO_SIDED);
    }
    let Some(theta) = act.unique_zero() else {
        return Verdict::unmet(id, UNIQUE_ZERO);
    };
    if !act.is_quasi_strongly_faithful() {
        return Verdict::unmet(id, QSF);
    }
    let mut witnesses = Vec::new();
    for ideal in monoid.enumerate_right_ideals(true) {
        let chain = krull_intersection(act, ideal).expect("enumerated ideals are right ideals");
        if chain.intersection != ActSubset::singleton(theta) {
            let cx = Counterexample::for_act(act, format!("∩ AIⁿ = {}", chain.intersection))
                .with_ideal(ideal)
                .with_subact(chain.intersection);
            return Verdict::checked(id, witnesses, Some(cx));
        }
        witnesses.push(Witness::Krull {
            ideal,
            intersection: chain.intersection,
            stabilization_index: chain.stabilization_index,
        });
    }
    Verdict::checked(id, witnesses, None)
}

/// `S` as an act over itself: `∩ Iⁿ = {θ}` for proper `I` when `S` is
/// commutative, and `∩ 𝔐ⁿ = {θ}` when `𝔐` is two-sided.
pub fn verify_monoid_krull(monoid: &FiniteMonoid) -> Verdict {
    let id = StatementId::MonoidKrull;
    if let Some(v) = require_non_invertible(id, monoid) {
        return v;
    }
    let regular = FiniteAct::regular(Arc::new(monoid.clone()));
    let Some(theta) = regular.unique_zero() else {
        return Verdict::unmet(id, "S has a unique zero");
    };
    if !regular.is_quasi_strongly_faithful() {
        return Verdict::unmet(id, "S is quasi-strongly faithful over itself");
    }
    let commutative = monoid.is_commutative();
    let maximal_ideal = monoid.maximal_right_ideal();
    let two_sided = monoid.is_two_sided(maximal_ideal);
    if !commutative && !two_sided {
        return Verdict::unmet(id, "S is commutative or 𝔐 is two-sided");
    }
    let mut ideals = Vec::new();
    if commutative {
        ideals.extend(monoid.enumerate_right_ideals(true));
    }
    if two_sided && !ideals.contains(&maximal_ideal) {
        ideals.push(maximal_ideal);
    }
    let zero = ActSubset::singleton(theta);
    let mut witnesses = Vec::new();
    for ideal in ideals {
        let chain = krull_intersection(&regular, ideal).expect("right ideal");
        if chain.intersection != zero {
            let cx = Counterexample::for_monoid(monoid, format!("∩ Iⁿ = {}", chain.intersection))
                .with_ideal(ideal)
                .with_subact(chain.intersection);
            return Verdict::checked(id, witnesses, Some(cx));
        }
        witnesses.push(Witness::Krull {
            ideal,
            intersection: chain.intersection,
            stabilization_index: chain.stabilization_index,
        });
    }
    Verdict::checked(id, witnesses, None)
}
