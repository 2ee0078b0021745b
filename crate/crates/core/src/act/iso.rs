use super::{ActMorphismWitness, FiniteAct};
use crate::set::ElementSet;

/// Isomorphism-invariant data for one act element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ActElementInvariant {
    pub orbit_size: usize,
    pub fixers: ElementSet,
    pub preimages: usize,
}

pub fn act_invariants(act: &FiniteAct) -> Vec<ActElementInvariant> {
    let mut preimages = vec![0; act.size()];
    for a in act.elements() {
        for s in act.monoid().elements() {
            preimages[act.act(a, s)] += 1;
        }
    }
    act.elements()
        .map(|a| ActElementInvariant {
            orbit_size: act.orbit(a).len(),
            fixers: act.fixers(a),
            preimages: preimages[a],
        })
        .collect()
}

/// An equivariant bijection `left -> right`, or `None`.
///
/// Once `a ↦ b` is fixed, equivariance forces `as ↦ bs` for every `s`; the
/// search propagates those forced pairs and only branches on elements not yet
/// reached, with candidates restricted to equal orbit size and fixer set.
pub fn act_isomorphic(left: &FiniteAct, right: &FiniteAct) -> Option<ActMorphismWitness> {
    if left.size() != right.size() || !left.monoid().same_structure(right.monoid()) {
        return None;
    }
    let inv_l = act_invariants(left);
    let inv_r = act_invariants(right);
    let mut sorted_l = inv_l.clone();
    let mut sorted_r = inv_r.clone();
    sorted_l.sort();
    sorted_r.sort();
    if sorted_l != sorted_r {
        return None;
    }
    let m = left.size();
    let mut search = Search {
        left,
        right,
        inv_l: &inv_l,
        inv_r: &inv_r,
        forward: vec![usize::MAX; m],
        backward: vec![usize::MAX; m],
        trail: Vec::with_capacity(m),
    };
    search.solve().then_some(ActMorphismWitness { map: search.forward })
}

struct Search<'a> {
    left: &'a FiniteAct,
    right: &'a FiniteAct,
    inv_l: &'a [ActElementInvariant],
    inv_r: &'a [ActElementInvariant],
    forward: Vec<usize>,
    backward: Vec<usize>,
    trail: Vec<usize>,
}

impl Search<'_> {
    fn solve(&mut self) -> bool {
        let Some(a) = self.forward.iter().position(|&y| y == usize::MAX) else {
            return true;
        };
        for b in 0..self.right.size() {
            if self.backward[b] != usize::MAX || self.inv_l[a] != self.inv_r[b] {
                continue;
            }
            let mark = self.trail.len();
            if self.propagate(a, b) && self.solve() {
                return true;
            }
            self.undo(mark);
        }
        false
    }

    fn propagate(&mut self, a: usize, b: usize) -> bool {
        let mut pending = vec![(a, b)];
        while let Some((x, y)) = pending.pop() {
            if self.forward[x] != usize::MAX {
                if self.forward[x] != y {
                    return false;
                }
                continue;
            }
            if self.backward[y] != usize::MAX || self.inv_l[x] != self.inv_r[y] {
                return false;
            }
            self.forward[x] = y;
            self.backward[y] = x;
            self.trail.push(x);
            for s in self.left.monoid().elements() {
                pending.push((self.left.act(x, s), self.right.act(y, s)));
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        for x in self.trail.drain(mark..) {
            self.backward[self.forward[x]] = usize::MAX;
            self.forward[x] = usize::MAX;
        }
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::monoid::catalog::*;

    fn relabel(act: &FiniteAct, perm: &[usize]) -> FiniteAct {
        let mut inv = vec![0; perm.len()];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        FiniteAct::from_fn(act.monoid().clone(), act.size(), |a, s| perm[act.act(inv[a], s)]).unwrap()
    }

    #[test]
    fn relabeled_regular_act() {
        let reg = FiniteAct::regular(Arc::new(full_transformation(2)));
        let other = relabel(&reg, &[2, 0, 3, 1]);
        let w = act_isomorphic(&reg, &other).unwrap();
        assert!(w.is_equivariant(&reg, &other) && w.is_bijective(&other));
    }

    #[test]
    fn different_structures() {
        let s = Arc::new(idempotent_pair());
        let reg = FiniteAct::regular(s.clone());
        let triv = FiniteAct::trivial(s, 2);
        assert!(act_isomorphic(&reg, &triv).is_none());
        let other_host = FiniteAct::trivial(Arc::new(cyclic_group(2)), 2);
        assert!(act_isomorphic(&triv, &other_host).is_none());
    }
}
