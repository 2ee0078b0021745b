use super::FiniteMonoid;
use crate::set::ElementSet;

/// Isomorphism-invariant data attached to one element of a monoid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementInvariant {
    pub is_identity: bool,
    pub is_idempotent: bool,
    pub right_invertible: bool,
    pub left_invertible: bool,
    pub index: usize,
    pub period: usize,
    pub right_ideal_size: usize,
    pub left_ideal_size: usize,
    pub right_stabilizer: usize,
    pub left_stabilizer: usize,
}

pub fn element_invariants(monoid: &FiniteMonoid) -> Vec<ElementInvariant> {
    monoid
        .elements()
        .map(|s| {
            let (index, period) = monoid.index_period(s);
            let left: ElementSet = monoid.elements().map(|t| monoid.mul(t, s)).collect();
            ElementInvariant {
                is_identity: s == monoid.identity(),
                is_idempotent: monoid.is_idempotent(s),
                right_invertible: monoid.is_right_invertible(s),
                left_invertible: monoid.is_left_invertible(s),
                index,
                period,
                right_ideal_size: monoid.principal_right_ideal(s).len(),
                left_ideal_size: left.len(),
                right_stabilizer: monoid.elements().filter(|&t| monoid.mul(s, t) == s).count(),
                left_stabilizer: monoid.elements().filter(|&t| monoid.mul(t, s) == s).count(),
            }
        })
        .collect()
}

/// An isomorphism `S -> T` as the image vector of `S`'s elements, or `None`.
///
/// Elements are only ever matched to elements with equal
/// [`ElementInvariant`]s; the remaining freedom is searched by backtracking
/// with a product-consistency check after each assignment.
pub fn monoid_isomorphic(left: &FiniteMonoid, right: &FiniteMonoid) -> Option<Vec<usize>> {
    let n = left.order();
    if n != right.order() {
        return None;
    }
    let inv_l = element_invariants(left);
    let inv_r = element_invariants(right);
    let mut sorted_l = inv_l.clone();
    let mut sorted_r = inv_r.clone();
    sorted_l.sort();
    sorted_r.sort();
    if sorted_l != sorted_r {
        return None;
    }

    // Most constrained elements first.
    let class_size = |inv: &ElementInvariant| inv_r.iter().filter(|x| *x == inv).count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&s| (class_size(&inv_l[s]), s));
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|s| (0..n).filter(|&t| inv_r[t] == inv_l[s]).collect())
        .collect();

    let mut search = Search {
        left,
        right,
        forward: vec![usize::MAX; n],
        backward: vec![usize::MAX; n],
    };
    if search.extend(&order, &candidates, 0) {
        Some(search.forward)
    } else {
        None
    }
}

struct Search<'a> {
    left: &'a FiniteMonoid,
    right: &'a FiniteMonoid,
    forward: Vec<usize>,
    backward: Vec<usize>,
}

impl Search<'_> {
    fn extend(&mut self, order: &[usize], candidates: &[Vec<usize>], depth: usize) -> bool {
        let Some(&x) = order.get(depth) else {
            return true;
        };
        for &y in &candidates[x] {
            if self.backward[y] != usize::MAX {
                continue;
            }
            self.forward[x] = y;
            self.backward[y] = x;
            if self.consistent(x) && self.extend(order, candidates, depth + 1) {
                return true;
            }
            self.forward[x] = usize::MAX;
            self.backward[y] = usize::MAX;
        }
        false
    }

    /// Checks every product among assigned elements that involves `x`.
    fn consistent(&self, x: usize) -> bool {
        let assigned = |a: usize| self.forward[a] != usize::MAX;
        for a in self.left.elements().filter(|&a| assigned(a)) {
            for (p, q) in [(x, a), (a, x)] {
                let prod = self.left.mul(p, q);
                let image = self.right.mul(self.forward[p], self.forward[q]);
                if assigned(prod) {
                    if self.forward[prod] != image {
                        return false;
                    }
                } else if self.backward[image] != usize::MAX {
                    return false;
                }
            }
        }
        true
    }
}
