//! Subacts, zeros, Rees factors, `AI` products and generation.

use std::sync::Arc;

use super::{ActMorphismWitness, FiniteAct};
use crate::error::AlgebraError;
use crate::set::{lattice_order, union_closure, ActSubset, ElementSet};

impl FiniteAct {
    /// Elements `θ` with `θs = θ` for every `s`.
    pub fn zeros(&self) -> ActSubset {
        self.elements()
            .filter(|&a| self.monoid().elements().all(|s| self.act(a, s) == a))
            .collect()
    }

    pub fn unique_zero(&self) -> Option<usize> {
        let zeros = self.zeros();
        (zeros.len() == 1).then(|| zeros.first().unwrap())
    }

    /// The cyclic subact `aS`.
    pub fn orbit(&self, a: usize) -> ActSubset {
        self.monoid().elements().map(|s| self.act(a, s)).collect()
    }

    /// `{s | as = a}`.
    pub fn fixers(&self, a: usize) -> ElementSet {
        self.monoid().elements().filter(|&s| self.act(a, s) == a).collect()
    }

    pub fn is_subact(&self, set: ActSubset) -> bool {
        !set.is_empty()
            && set.is_subset(self.carrier())
            && set.iter().all(|b| self.orbit(b).is_subset(set))
    }

    /// `XS`, the least subact containing `X` (empty for empty `X`).
    pub fn subact_generated(&self, set: ActSubset) -> ActSubset {
        set.iter().fold(ActSubset::empty(), |acc, a| acc.union(self.orbit(a)))
    }

    /// `{xs | x in X, s in I}` for arbitrary `X` and `I`.
    pub fn subset_times(&self, set: ActSubset, ideal: ElementSet) -> ActSubset {
        let mut out = ActSubset::empty();
        for x in set.iter() {
            for s in ideal.iter() {
                out.insert(self.act(x, s));
            }
        }
        out
    }

    /// `AI = {as | a in A, s in I}` for a right ideal `I`.
    pub fn ideal_product(&self, ideal: ElementSet) -> Result<ActSubset, AlgebraError> {
        if !self.monoid().is_right_ideal(ideal) {
            return Err(AlgebraError::NotRightIdeal);
        }
        let product = self.subset_times(self.carrier(), ideal);
        debug_assert!(self.is_subact(product));
        Ok(product)
    }

    /// Every subact, ordered by size then bitmask. Subacts are the nonempty
    /// unions of cyclic subacts.
    pub fn all_subacts(&self) -> Vec<ActSubset> {
        union_closure(self.elements().map(|a| self.orbit(a).bits()))
            .into_iter()
            .map(ActSubset::from_bits)
            .collect()
    }

    /// Reference strategy for [`Self::all_subacts`]: filter all `2^m` subsets.
    pub fn all_subacts_naive(&self) -> Vec<ActSubset> {
        let full = self.carrier().bits();
        let mut out: Vec<u64> = (1..=full)
            .filter(|&b| self.is_subact(ActSubset::from_bits(b)))
            .collect();
        out.sort_unstable_by_key(|&b| lattice_order(b));
        out.into_iter().map(ActSubset::from_bits).collect()
    }

    /// Proper subacts not strictly contained in another proper subact.
    pub fn maximal_subacts(&self) -> Vec<ActSubset> {
        let full = self.carrier();
        let proper: Vec<ActSubset> = self.all_subacts().into_iter().filter(|&b| b != full).collect();
        proper
            .iter()
            .copied()
            .filter(|&b| !proper.iter().any(|&c| b.is_proper_subset(c)))
            .collect()
    }

    /// The Rees factor `A/B` and the canonical epimorphism `π`.
    ///
    /// Classes are numbered by their smallest representative; the collapsed
    /// class `B` is the zero of the factor.
    pub fn rees_factor(&self, subact: ActSubset) -> Result<(FiniteAct, ActMorphismWitness), AlgebraError> {
        if subact.is_empty() {
            return Err(AlgebraError::EmptySubact);
        }
        if !self.is_subact(subact) {
            return Err(AlgebraError::NotASubact);
        }
        let mut map = vec![usize::MAX; self.size()];
        let mut zero = None;
        let mut next = 0;
        for a in self.elements() {
            if subact.contains(a) {
                map[a] = *zero.get_or_insert_with(|| {
                    next += 1;
                    next - 1
                });
            } else {
                map[a] = next;
                next += 1;
            }
        }
        let mut reps = vec![0; next];
        for a in self.elements().rev() {
            reps[map[a]] = a;
        }
        let n = self.monoid().order();
        let action: Vec<u8> = (0..next)
            .flat_map(|c| (0..n).map(move |s| (c, s)))
            .map(|(c, s)| map[self.act(reps[c], s)] as u8)
            .collect();
        let factor = FiniteAct::from_flat(self.monoid().clone(), next, action)
            .expect("Rees factor of a subact is an act");
        let name = format!("{}/B", self.name().unwrap_or("A"));
        Ok((factor.with_name(name), ActMorphismWitness { map }))
    }

    /// The subact `X` as an act in its own right, plus the inclusion (new
    /// index to old index).
    pub fn restrict(&self, subact: ActSubset) -> Result<(FiniteAct, Vec<usize>), AlgebraError> {
        if !self.is_subact(subact) {
            return Err(AlgebraError::NotASubact);
        }
        let members = subact.to_vec();
        let mut index = vec![usize::MAX; self.size()];
        for (i, &a) in members.iter().enumerate() {
            index[a] = i;
        }
        let n = self.monoid().order();
        let action: Vec<u8> = members
            .iter()
            .flat_map(|&a| (0..n).map(move |s| (a, s)))
            .map(|(a, s)| index[self.act(a, s)] as u8)
            .collect();
        let act = FiniteAct::from_flat(Arc::clone(self.monoid()), members.len(), action)
            .expect("a subact is an act");
        Ok((act, members))
    }

    pub fn is_generating(&self, set: ActSubset) -> bool {
        self.subact_generated(set) == self.carrier()
    }

    /// All inclusion-minimal generating sets, by ascending size then bitmask.
    ///
    /// Candidates are scanned by size; any candidate containing an already
    /// found minimal set is skipped, so every generating candidate reached is
    /// minimal.
    pub fn minimal_generating_sets(&self) -> Vec<ActSubset> {
        let m = self.size();
        let full = self.carrier().bits();
        let mut found: Vec<u64> = Vec::new();
        for k in 1..=m {
            let mut layer: Vec<u64> = Vec::new();
            for bits in subsets_of_size(m, k) {
                if found.iter().any(|&f| f & !bits == 0) {
                    continue;
                }
                if self.subact_generated(ActSubset::from_bits(bits)).bits() == full {
                    layer.push(bits);
                }
            }
            found.extend(layer);
        }
        found.into_iter().map(ActSubset::from_bits).collect()
    }

    /// `as = a` forces `s ∉ 𝔐`, for every `a` except the zero when the zero
    /// is unique. An act with several zeros is never quasi-strongly faithful
    /// unless `𝔐` is empty.
    pub fn is_quasi_strongly_faithful(&self) -> bool {
        self.quasi_strong_faithfulness_violation().is_none()
    }

    /// First `(a, m)` with `am = a`, `m ∈ 𝔐`, `a` not the unique zero.
    pub fn quasi_strong_faithfulness_violation(&self) -> Option<(usize, usize)> {
        let maximal = self.monoid().maximal_right_ideal();
        let skip = self.unique_zero();
        self.elements()
            .filter(|&a| Some(a) != skip)
            .find_map(|a| self.fixers(a).intersection(maximal).first().map(|m| (a, m)))
    }

    /// Connected components of the graph `a -- as`, each a subact, ordered
    /// by smallest element.
    pub fn decompose_indecomposable(&self) -> Vec<ActSubset> {
        let mut parent: Vec<usize> = self.elements().collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut root = x;
            while parent[root] != root {
                root = parent[root];
            }
            let mut y = x;
            while parent[y] != root {
                let next = parent[y];
                parent[y] = root;
                y = next;
            }
            root
        }
        for a in self.elements() {
            for s in self.monoid().elements() {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, self.act(a, s)));
                if ra != rb {
                    parent[ra.max(rb)] = ra.min(rb);
                }
            }
        }
        let mut components: Vec<ActSubset> = Vec::new();
        let mut slot = vec![usize::MAX; self.size()];
        for a in self.elements() {
            let r = find(&mut parent, a);
            if slot[r] == usize::MAX {
                slot[r] = components.len();
                components.push(ActSubset::empty());
            }
            components[slot[r]].insert(a);
        }
        components
    }
}

/// All `k`-subsets of `0..m` as masks, in increasing numeric order.
pub(crate) fn subsets_of_size(m: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    let first = if k == 0 { 0 } else { (1u64 << k) - 1 };
    let mut next = if k <= m { Some(first) } else { None };
    std::iter::from_fn(move || {
        let current = next?;
        next = if current == 0 {
            None
        } else {
            // Gosper's hack
            let c = current & current.wrapping_neg();
            let r = current.checked_add(c);
            match r {
                Some(r) if r <= limit => Some((((r ^ current) >> 2) / c) | r),
                _ => None,
            }
        };
        Some(current)
    })
}
