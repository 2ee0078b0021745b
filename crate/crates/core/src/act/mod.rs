//! Finite right acts over a [`FiniteMonoid`].
//!
//! `action[a][s]` is `a·s`. An act owns a shared handle to its monoid, so
//! acts can be moved between worker threads freely.

mod induced;
mod iso;
mod projective;
mod subact;

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{ActError, AlgebraError};
use crate::io::ActFile;
use crate::monoid::FiniteMonoid;
use crate::set::{ActSubset, MAX_CARRIER};

pub use induced::{induced_quotient_act, InducedQuotient};
pub use iso::{act_isomorphic, act_invariants, ActElementInvariant};
pub use projective::{FreenessVerdict, ProjectiveComponent, ProjectivityVerdict};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ActFile", into = "ActFile")]
pub struct FiniteAct {
    size: usize,
    monoid: Arc<FiniteMonoid>,
    action: Vec<u8>,
    name: Option<String>,
}

/// Validates `rows` (`rows[a][s] = a·s`) as an act over `monoid`.
pub fn validate_act(monoid: Arc<FiniteMonoid>, rows: &[Vec<usize>]) -> Result<FiniteAct, ActError> {
    FiniteAct::from_rows(monoid, rows)
}

/// A map between the carriers of two acts. Equivariance is not assumed;
/// use [`ActMorphismWitness::is_equivariant`] to check it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActMorphismWitness {
    pub map: Vec<usize>,
}

impl ActMorphismWitness {
    /// `f(as) = f(a)s` for all `a`, `s`.
    pub fn is_equivariant(&self, domain: &FiniteAct, codomain: &FiniteAct) -> bool {
        self.map.len() == domain.size()
            && domain.monoid().same_structure(codomain.monoid())
            && self.map.iter().all(|&b| b < codomain.size())
            && domain.elements().all(|a| {
                domain
                    .monoid()
                    .elements()
                    .all(|s| self.map[domain.act(a, s)] == codomain.act(self.map[a], s))
            })
    }

    pub fn is_surjective(&self, codomain: &FiniteAct) -> bool {
        self.image() == codomain.carrier()
    }

    pub fn is_bijective(&self, codomain: &FiniteAct) -> bool {
        self.map.len() == codomain.size() && self.is_surjective(codomain)
    }

    pub fn image(&self) -> ActSubset {
        self.map.iter().copied().collect()
    }
}

impl FiniteAct {
    pub fn from_rows(monoid: Arc<FiniteMonoid>, rows: &[Vec<usize>]) -> Result<Self, ActError> {
        let m = rows.len();
        let n = monoid.order();
        if m == 0 {
            return Err(ActError::EmptyCarrier);
        }
        if m > MAX_CARRIER {
            return Err(ActError::TooLarge { size: m, max: MAX_CARRIER });
        }
        for (row, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(ActError::ShapeMismatch { row, len: r.len(), expected: n });
            }
        }
        let mut action = Vec::with_capacity(m * n);
        for (a, r) in rows.iter().enumerate() {
            for (s, &value) in r.iter().enumerate() {
                if value >= m {
                    return Err(ActError::OutOfRangeEntry { a, s, value, size: m });
                }
                action.push(value as u8);
            }
        }
        Self::from_flat(monoid, m, action)
    }

    pub(crate) fn from_flat(
        monoid: Arc<FiniteMonoid>,
        size: usize,
        action: Vec<u8>,
    ) -> Result<Self, ActError> {
        let n = monoid.order();
        debug_assert_eq!(action.len(), size * n);
        let at = |a: usize, s: usize| action[a * n + s] as usize;
        let e = monoid.identity();
        if let Some(a) = (0..size).find(|&a| at(a, e) != a) {
            return Err(ActError::UnitLawViolation { a });
        }
        for a in 0..size {
            for s in 0..n {
                let as_ = at(a, s);
                for t in 0..n {
                    if at(a, monoid.mul(s, t)) != at(as_, t) {
                        return Err(ActError::CompatibilityViolation { a, s, t });
                    }
                }
            }
        }
        Ok(Self { size, monoid, action, name: None })
    }

    /// Tabulates `op(a, s) = a·s`.
    pub fn from_fn(
        monoid: Arc<FiniteMonoid>,
        size: usize,
        op: impl Fn(usize, usize) -> usize,
    ) -> Result<Self, ActError> {
        let rows: Vec<Vec<usize>> = (0..size)
            .map(|a| monoid.elements().map(|s| op(a, s)).collect())
            .collect();
        Self::from_rows(monoid, &rows)
    }

    /// `S` acting on itself by right multiplication.
    pub fn regular(monoid: Arc<FiniteMonoid>) -> Self {
        let n = monoid.order();
        let action = monoid.flat_table().to_vec();
        let name = format!("{} (regular)", monoid.name().unwrap_or("S"));
        Self { size: n, monoid, action, name: Some(name) }
    }

    /// `size` points, every element acting as the identity map.
    pub fn trivial(monoid: Arc<FiniteMonoid>, size: usize) -> Self {
        assert!((1..=MAX_CARRIER).contains(&size));
        let n = monoid.order();
        let action = (0..size).flat_map(|a| std::iter::repeat_n(a as u8, n)).collect();
        Self { size, monoid, action, name: Some(format!("trivial({size})")) }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn monoid(&self) -> &Arc<FiniteMonoid> {
        &self.monoid
    }

    #[inline]
    pub fn act(&self, a: usize, s: usize) -> usize {
        self.action[a * self.monoid.order() + s] as usize
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    pub fn carrier(&self) -> ActSubset {
        ActSubset::full(self.size)
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.action
            .chunks(self.monoid.order())
            .map(|r| r.iter().map(|&x| x as usize).collect())
            .collect()
    }

    /// Builds an [`ActSubset`] after checking every index is in range.
    pub fn subset(&self, members: impl IntoIterator<Item = usize>) -> Result<ActSubset, AlgebraError> {
        let mut set = ActSubset::empty();
        for i in members {
            if i >= self.size {
                return Err(AlgebraError::ElementOutOfRange { index: i, size: self.size });
            }
            set.insert(i);
        }
        Ok(set)
    }

    /// The coproduct: `self`'s elements first, then `other`'s shifted by
    /// `self.size()`.
    pub fn disjoint_union(&self, other: &FiniteAct) -> Result<FiniteAct, AlgebraError> {
        if !self.monoid.same_structure(&other.monoid) {
            return Err(AlgebraError::HostMismatch);
        }
        let size = self.size + other.size;
        if size > MAX_CARRIER {
            return Err(AlgebraError::ElementOutOfRange { index: size, size: MAX_CARRIER });
        }
        let shift = self.size as u8;
        let mut action = self.action.clone();
        action.extend(other.action.iter().map(|&b| b + shift));
        let name = format!(
            "{} + {}",
            self.name().unwrap_or("A"),
            other.name().unwrap_or("B")
        );
        Ok(FiniteAct { size, monoid: self.monoid.clone(), action, name: Some(name) })
    }
}
