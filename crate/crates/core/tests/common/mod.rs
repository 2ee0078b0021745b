//! Brute-force oracles and fixtures shared by the integration tests.
#![allow(dead_code)]

use std::sync::Arc;

use actlab::enumerate::{enumerate_acts, enumerate_monoids};
use actlab::{FiniteAct, FiniteMonoid};
use itertools::Itertools;

/// Every bijection of `0..n`, as image vectors.
pub fn bijections(n: usize) -> Vec<Vec<usize>> {
    (0..n).permutations(n).collect()
}

/// Isomorphism by trying all `n!` bijections.
pub fn brute_monoid_iso(l: &FiniteMonoid, r: &FiniteMonoid) -> bool {
    l.order() == r.order()
        && bijections(l.order()).into_iter().any(|p| {
            l.elements()
                .all(|s| l.elements().all(|t| p[l.mul(s, t)] == r.mul(p[s], p[t])))
        })
}

/// Isomorphism by trying all `m!` bijections.
pub fn brute_act_iso(l: &FiniteAct, r: &FiniteAct) -> bool {
    l.size() == r.size()
        && l.monoid().same_structure(r.monoid())
        && bijections(l.size()).into_iter().any(|p| {
            l.elements()
                .all(|a| l.monoid().elements().all(|s| p[l.act(a, s)] == r.act(p[a], s)))
        })
}

/// `monoid` with element `s` renamed `p[s]`.
pub fn relabel_monoid(monoid: &FiniteMonoid, p: &[usize]) -> FiniteMonoid {
    let n = monoid.order();
    let mut rows = vec![vec![0; n]; n];
    for s in 0..n {
        for t in 0..n {
            rows[p[s]][p[t]] = p[monoid.mul(s, t)];
        }
    }
    FiniteMonoid::from_rows(&rows, None).expect("relabeling keeps the axioms")
}

/// `act` with point `a` renamed `p[a]`, over the same monoid.
pub fn relabel_act(act: &FiniteAct, p: &[usize]) -> FiniteAct {
    let n = act.monoid().order();
    let mut rows = vec![vec![0; n]; act.size()];
    for a in act.elements() {
        for s in 0..n {
            rows[p[a]][s] = p[act.act(a, s)];
        }
    }
    FiniteAct::from_rows(act.monoid().clone(), &rows).expect("relabeling keeps the axioms")
}

/// All monoids of order `1..=max_order`.
pub fn monoids_up_to(max_order: usize) -> Vec<Arc<FiniteMonoid>> {
    (1..=max_order)
        .flat_map(enumerate_monoids)
        .map(Arc::new)
        .collect()
}

/// All acts of size `1..=max_size` over every monoid of order `1..=max_order`.
pub fn acts_up_to(max_order: usize, max_size: usize) -> Vec<FiniteAct> {
    monoids_up_to(max_order)
        .iter()
        .flat_map(|s| (1..=max_size).flat_map(move |m| enumerate_acts(s, m)))
        .collect()
}
