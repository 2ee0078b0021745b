//! Finite monoids as Cayley tables, with the ideal-theoretic predicates used
//! throughout the crate.
//!
//! Convention: `table[s][t]` is the product `st`. Elements are dense indices
//! `0..order`; the identity may sit at any index.

pub mod catalog;
mod iso;
mod quotient;

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, MonoidError};
use crate::io::MonoidFile;
use crate::set::{lattice_order, union_closure, ElementSet, MAX_CARRIER};

pub use iso::{element_invariants, monoid_isomorphic, ElementInvariant};
pub use quotient::{rees_quotient_monoid, QuotientMonoid};

/// A validated finite monoid.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "MonoidFile", into = "MonoidFile")]
pub struct FiniteMonoid {
    order: usize,
    table: Vec<u8>,
    identity: usize,
    name: Option<String>,
}

/// Validates a raw table and locates its identity.
pub fn validate_monoid(rows: &[Vec<usize>]) -> Result<FiniteMonoid, MonoidError> {
    FiniteMonoid::from_rows(rows, None)
}

impl FiniteMonoid {
    /// Builds a monoid from `rows`, where `rows[s][t] = st`.
    ///
    /// When `identity` is given it must be a two-sided identity of the
    /// table; otherwise the (unique) identity is searched for.
    pub fn from_rows(rows: &[Vec<usize>], identity: Option<usize>) -> Result<Self, MonoidError> {
        let n = rows.len();
        if n == 0 {
            return Err(MonoidError::Empty);
        }
        if n > MAX_CARRIER {
            return Err(MonoidError::TooLarge { order: n, max: MAX_CARRIER });
        }
        for (row, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(MonoidError::NotSquare { row, len: r.len(), expected: n });
            }
        }
        let mut table = Vec::with_capacity(n * n);
        for (row, r) in rows.iter().enumerate() {
            for (col, &value) in r.iter().enumerate() {
                if value >= n {
                    return Err(MonoidError::OutOfRangeEntry { row, col, value, order: n });
                }
                table.push(value as u8);
            }
        }
        Self::from_flat(n, table, identity)
    }

    pub(crate) fn from_flat(
        n: usize,
        table: Vec<u8>,
        identity: Option<usize>,
    ) -> Result<Self, MonoidError> {
        debug_assert_eq!(table.len(), n * n);
        if let Some((s, t, u)) = first_non_associative(n, &table) {
            return Err(MonoidError::NotAssociative { s, t, u });
        }
        let is_identity =
            |e: usize| (0..n).all(|x| table[e * n + x] as usize == x && table[x * n + e] as usize == x);
        let identity = match identity {
            Some(e) if e < n && is_identity(e) => e,
            Some(e) => return Err(MonoidError::NoIdentity { claimed: Some(e) }),
            None => (0..n)
                .find(|&e| is_identity(e))
                .ok_or(MonoidError::NoIdentity { claimed: None })?,
        };
        Ok(Self { order: n, table, identity, name: None })
    }

    /// Tabulates `op` over `0..n`; handy for arithmetic examples.
    pub fn from_fn(n: usize, op: impl Fn(usize, usize) -> usize) -> Result<Self, MonoidError> {
        let rows: Vec<Vec<usize>> = (0..n).map(|s| (0..n).map(|t| op(s, t)).collect()).collect();
        Self::from_rows(&rows, None)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, s: usize, t: usize) -> usize {
        self.table[s * self.order + t] as usize
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// Same table and identity; names are ignored.
    pub fn same_structure(&self, other: &FiniteMonoid) -> bool {
        self.identity == other.identity && self.table == other.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order)
            .map(|r| r.iter().map(|&x| x as usize).collect())
            .collect()
    }

    pub(crate) fn flat_table(&self) -> &[u8] {
        &self.table
    }

    pub fn carrier(&self) -> ElementSet {
        ElementSet::full(self.order)
    }

    /// Builds an [`ElementSet`] after checking every index is in range.
    pub fn element_set(
        &self,
        members: impl IntoIterator<Item = usize>,
    ) -> Result<ElementSet, AlgebraError> {
        let mut set = ElementSet::empty();
        for i in members {
            if i >= self.order {
                return Err(AlgebraError::ElementOutOfRange { index: i, size: self.order });
            }
            set.insert(i);
        }
        Ok(set)
    }

    pub fn is_commutative(&self) -> bool {
        self.elements()
            .all(|s| (s + 1..self.order).all(|t| self.mul(s, t) == self.mul(t, s)))
    }

    pub fn is_idempotent(&self, s: usize) -> bool {
        self.mul(s, s) == s
    }

    /// `E(S)`.
    pub fn idempotents(&self) -> ElementSet {
        self.elements().filter(|&s| self.is_idempotent(s)).collect()
    }

    /// Index and period of the monogenic subsemigroup generated by `s`:
    /// the least `i, p >= 1` with `s^(i+p) = s^i`.
    pub fn index_period(&self, s: usize) -> (usize, usize) {
        let mut seen = vec![0usize; self.order];
        let mut power = s;
        let mut k = 1;
        loop {
            if seen[power] != 0 {
                let index = seen[power];
                return (index, k - index);
            }
            seen[power] = k;
            power = self.mul(power, s);
            k += 1;
        }
    }

    /// True iff `st = 1` for some `t`.
    pub fn is_right_invertible(&self, s: usize) -> bool {
        self.elements().any(|t| self.mul(s, t) == self.identity)
    }

    /// True iff `ts = 1` for some `t`.
    pub fn is_left_invertible(&self, s: usize) -> bool {
        self.elements().any(|t| self.mul(t, s) == self.identity)
    }

    /// The set of right non-invertible elements, the unique maximal right
    /// ideal. Empty exactly when the monoid is a group.
    pub fn maximal_right_ideal(&self) -> ElementSet {
        self.elements().filter(|&s| !self.is_right_invertible(s)).collect()
    }

    /// Nonempty and closed under right multiplication by every element.
    pub fn is_right_ideal(&self, set: ElementSet) -> bool {
        !set.is_empty()
            && set
                .iter()
                .all(|x| self.elements().all(|t| set.contains(self.mul(x, t))))
    }

    pub fn is_left_ideal(&self, set: ElementSet) -> bool {
        !set.is_empty()
            && set
                .iter()
                .all(|x| self.elements().all(|t| set.contains(self.mul(t, x))))
    }

    /// A right ideal that is also closed under left multiplication.
    pub fn is_two_sided(&self, set: ElementSet) -> bool {
        self.is_right_ideal(set) && self.is_left_ideal(set)
    }

    /// Whether `st = 1` forces `ts = 1` for all pairs.
    pub fn check_unit_symmetry(&self) -> bool {
        self.unit_symmetry_violation().is_none()
    }

    /// First pair `(s, t)` with `st = 1` but `ts != 1`.
    pub fn unit_symmetry_violation(&self) -> Option<(usize, usize)> {
        let e = self.identity;
        self.elements().find_map(|s| {
            self.elements()
                .find(|&t| self.mul(s, t) == e && self.mul(t, s) != e)
                .map(|t| (s, t))
        })
    }

    /// `sS`.
    pub fn principal_right_ideal(&self, s: usize) -> ElementSet {
        self.elements().map(|t| self.mul(s, t)).collect()
    }

    /// `{st | s in left, t in right}`.
    pub fn ideal_product(&self, left: ElementSet, right: ElementSet) -> ElementSet {
        let mut out = ElementSet::empty();
        for s in left.iter() {
            for t in right.iter() {
                out.insert(self.mul(s, t));
            }
        }
        out
    }

    /// `I^n` for `n >= 1`, computed as `I^(n-1) I`.
    pub fn ideal_power(&self, ideal: ElementSet, n: usize) -> Result<ElementSet, AlgebraError> {
        if n == 0 {
            return Err(AlgebraError::ZeroPower);
        }
        let mut power = ideal;
        for _ in 1..n {
            power = self.ideal_product(power, ideal);
        }
        Ok(power)
    }

    /// All right ideals, optionally excluding `S` itself, ordered by size
    /// and then by bitmask.
    ///
    /// Every right ideal is a union of principal right ideals, so the lattice
    /// is built by union closure over `{sS}`.
    pub fn enumerate_right_ideals(&self, proper_only: bool) -> Vec<ElementSet> {
        let full = self.carrier().bits();
        union_closure(self.elements().map(|s| self.principal_right_ideal(s).bits()))
            .into_iter()
            .filter(|&b| !(proper_only && b == full))
            .map(ElementSet::from_bits)
            .collect()
    }

    /// Reference strategy for [`Self::enumerate_right_ideals`]: test every
    /// nonempty subset. Exponential; only meant for small orders.
    pub fn enumerate_right_ideals_naive(&self, proper_only: bool) -> Vec<ElementSet> {
        let full = self.carrier().bits();
        let mut out: Vec<u64> = (1..=full)
            .filter(|&b| !(proper_only && b == full))
            .filter(|&b| self.is_right_ideal(ElementSet::from_bits(b)))
            .collect();
        out.sort_unstable_by_key(|&b| lattice_order(b));
        out.into_iter().map(ElementSet::from_bits).collect()
    }

    /// The two-sided zero `z` (`zs = sz = z` for all `s`), if there is one.
    pub fn zero_element(&self) -> Option<usize> {
        self.elements()
            .find(|&z| self.elements().all(|s| self.mul(z, s) == z && self.mul(s, z) == z))
    }

    /// A monoid with a zero in which every nonzero element is invertible.
    pub fn is_zero_group(&self) -> bool {
        match self.zero_element() {
            None => false,
            Some(z) => self
                .elements()
                .filter(|&s| s != z)
                .all(|s| self.elements().any(|t| self.mul(s, t) == self.identity && self.mul(t, s) == self.identity)),
        }
    }

    /// Submonoid generated by `generators` (always contains the identity).
    pub fn submonoid_generated(&self, generators: ElementSet) -> ElementSet {
        let mut seen = ElementSet::singleton(self.identity);
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for g in generators.iter() {
                let y = self.mul(x, g);
                if !seen.contains(y) {
                    seen.insert(y);
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    /// A generating set picked greedily: elements that must be added, in order
    /// of decreasing `|S s|` so that elements high in the J-order come first.
    /// Never contains the identity.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut candidates: Vec<usize> =
            self.elements().filter(|&s| s != self.identity).collect();
        let left_size = |s: usize| self.elements().map(|t| self.mul(t, s)).collect::<ElementSet>().len();
        candidates.sort_by_key(|&s| (std::cmp::Reverse(left_size(s)), s));
        let mut generators = Vec::new();
        let mut reached = self.submonoid_generated(ElementSet::empty());
        for s in candidates {
            if !reached.contains(s) {
                generators.push(s);
                reached = self.submonoid_generated(generators.iter().copied().collect());
            }
        }
        // Drop generators made redundant by later choices.
        let mut k = 0;
        while k < generators.len() {
            let without: ElementSet = generators
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .map(|(_, &g)| g)
                .collect();
            if self.submonoid_generated(without) == self.carrier() {
                generators.remove(k);
            } else {
                k += 1;
            }
        }
        generators
    }
}

fn first_non_associative(n: usize, table: &[u8]) -> Option<(usize, usize, usize)> {
    let m = |a: usize, b: usize| table[a * n + b] as usize;
    for s in 0..n {
        for t in 0..n {
            let st = m(s, t);
            for u in 0..n {
                if m(st, u) != m(s, m(t, u)) {
                    return Some((s, t, u));
                }
            }
        }
    }
    None
}
