use std::sync::Arc;

use super::{ActMorphismWitness, FiniteAct};
use crate::error::AlgebraError;
use crate::monoid::{rees_quotient_monoid, QuotientMonoid};
use crate::set::ElementSet;

/// `A/AI` viewed both as an `S`-act and as an `S/I`-act.
#[derive(Clone, Debug)]
pub struct InducedQuotient {
    pub quotient: QuotientMonoid,
    /// `A/AI` over `S`.
    pub factor: FiniteAct,
    /// `π: A -> A/AI`.
    pub projection: ActMorphismWitness,
    /// `A/AI` over `S/I`, same carrier as `factor`.
    pub act: FiniteAct,
}

/// Builds the `S/I`-act on `A/AI` with `π(a)[s] = π(as)` for `s ∉ I`, and the
/// zero class of `S/I` sending every class to the zero of `A/AI`.
///
/// Every representative of every class is checked; a disagreement is
/// reported as [`AlgebraError::WellDefinednessFailure`].
pub fn induced_quotient_act(act: &FiniteAct, ideal: ElementSet) -> Result<InducedQuotient, AlgebraError> {
    let monoid = act.monoid();
    let quotient = rees_quotient_monoid(monoid, ideal)?;
    let product = act.ideal_product(ideal)?;
    let (factor, projection) = act.rees_factor(product)?;
    let pi = &projection.map;
    let zero_class = pi[product.first().expect("AI is nonempty")];

    let q = &quotient.monoid;
    let mut rows = vec![vec![usize::MAX; q.order()]; factor.size()];
    for a in act.elements() {
        for s in monoid.elements() {
            let class_s = quotient.carrier_map[s];
            let value = if class_s == quotient.zero { zero_class } else { pi[act.act(a, s)] };
            let slot = &mut rows[pi[a]][class_s];
            if *slot == usize::MAX {
                *slot = value;
            } else if *slot != value {
                return Err(AlgebraError::WellDefinednessFailure { class: pi[a], element: class_s });
            }
        }
    }
    let over_quotient = FiniteAct::from_rows(Arc::new(q.clone()), &rows).map_err(|_| {
        AlgebraError::WellDefinednessFailure { class: zero_class, element: quotient.zero }
    })?;
    let name = format!("{} over S/I", factor.name().unwrap_or("A/AI"));
    Ok(InducedQuotient {
        quotient,
        factor,
        projection,
        act: over_quotient.with_name(name),
    })
}
