//! Projective and free acts.
//!
//! An act is projective iff each indecomposable component is isomorphic to
//! `eS` for an idempotent `e`, and free iff each component is isomorphic to
//! `S` itself.

use serde::{Deserialize, Serialize};

use super::{act_isomorphic, FiniteAct};
use crate::set::ActSubset;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectiveComponent {
    pub members: ActSubset,
    /// Smallest idempotent `e` with the component isomorphic to `eS`.
    pub idempotent: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectivityVerdict {
    pub projective: bool,
    pub components: Vec<ProjectiveComponent>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreenessVerdict {
    pub free: bool,
    /// Number of copies of `S` when free.
    pub rank: Option<usize>,
}

impl FiniteAct {
    /// `eS` as an act: the principal right ideal under right multiplication.
    pub fn principal_act(&self, e: usize) -> FiniteAct {
        let regular = FiniteAct::regular(self.monoid().clone());
        let ideal = ActSubset::from_bits(self.monoid().principal_right_ideal(e).bits());
        let (act, _) = regular.restrict(ideal).expect("eS is a subact of S");
        act.with_name(format!("{e}S"))
    }

    pub fn is_projective(&self) -> ProjectivityVerdict {
        let idempotent_acts: Vec<(usize, FiniteAct)> = self
            .monoid()
            .idempotents()
            .iter()
            .map(|e| (e, self.principal_act(e)))
            .collect();
        let components: Vec<ProjectiveComponent> = self
            .decompose_indecomposable()
            .into_iter()
            .map(|members| {
                let (component, _) = self.restrict(members).expect("components are subacts");
                let idempotent = idempotent_acts
                    .iter()
                    .find(|(_, es)| act_isomorphic(&component, es).is_some())
                    .map(|&(e, _)| e);
                ProjectiveComponent { members, idempotent }
            })
            .collect();
        ProjectivityVerdict {
            projective: components.iter().all(|c| c.idempotent.is_some()),
            components,
        }
    }

    pub fn is_free(&self) -> FreenessVerdict {
        let n = self.monoid().order();
        if !self.size().is_multiple_of(n) {
            return FreenessVerdict { free: false, rank: None };
        }
        let regular = FiniteAct::regular(self.monoid().clone());
        let components = self.decompose_indecomposable();
        let free = components.iter().all(|&members| {
            members.len() == n && {
                let (component, _) = self.restrict(members).expect("components are subacts");
                act_isomorphic(&component, &regular).is_some()
            }
        });
        FreenessVerdict { free, rank: free.then_some(components.len()) }
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::monoid::catalog::*;

    #[test]
    fn regular_act_is_free_of_rank_one() {
        let reg = FiniteAct::regular(Arc::new(mod_mul(6)));
        assert_eq!(reg.is_free(), FreenessVerdict { free: true, rank: Some(1) });
        let p = reg.is_projective();
        assert!(p.projective);
        assert_eq!(p.components[0].idempotent, Some(1));
    }

    #[test]
    fn e_s_is_projective_not_free() {
        let u = Arc::new(idempotent_pair());
        let es = FiniteAct::regular(u).principal_act(IDEMPOTENT);
        assert_eq!(es.size(), 1);
        let p = es.is_projective();
        assert!(p.projective);
        assert_eq!(p.components[0].idempotent, Some(IDEMPOTENT));
        assert!(!es.is_free().free);
    }

    #[test]
    fn two_copies_rank_two() {
        let reg = FiniteAct::regular(Arc::new(full_transformation(2)));
        let two = reg.disjoint_union(&reg).unwrap();
        assert_eq!(two.is_free(), FreenessVerdict { free: true, rank: Some(2) });
        assert!(two.is_projective().projective);
    }

    #[test]
    fn trivial_act_over_group_is_not_projective() {
        let c2 = Arc::new(cyclic_group(2));
        let triv = FiniteAct::trivial(c2, 1);
        assert!(!triv.is_projective().projective);
        assert!(!triv.is_free().free);
    }
}
