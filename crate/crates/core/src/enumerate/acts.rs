//! All acts of a given size over a fixed monoid, one per isomorphism class.

use std::collections::{BTreeSet, VecDeque};
use std::sync::Arc;

use itertools::Itertools;

use super::canon::{block_relabelings, blocks_by_key, relabel_act};
use crate::act::{act_invariants, FiniteAct};
use crate::monoid::FiniteMonoid;
use crate::set::MAX_CARRIER;

/// Acts of size `m` over `monoid` up to isomorphism, sorted by canonical
/// table.
///
/// An act is a homomorphism from `S` into the full transformation monoid on
/// `m` points. Images are chosen one generator at a time, and after each
/// choice the partial assignment is checked on the submonoid generated so
/// far.
pub fn enumerate_acts(monoid: &Arc<FiniteMonoid>, m: usize) -> Vec<FiniteAct> {
    assert!((1..=MAX_CARRIER).contains(&m), "act size must be in 1..={MAX_CARRIER}");
    let generators = monoid.generating_set();
    let transformations = all_transformations(m);
    let mut images: Vec<Vec<u8>> = Vec::with_capacity(generators.len());
    let mut seen = BTreeSet::new();
    assign(monoid, m, &generators, &transformations, &mut images, &mut seen);
    into_acts(monoid, m, seen)
}

fn into_acts(monoid: &Arc<FiniteMonoid>, m: usize, tables: BTreeSet<Vec<u8>>) -> Vec<FiniteAct> {
    tables
        .into_iter()
        .enumerate()
        .map(|(k, table)| {
            FiniteAct::from_flat(monoid.clone(), m, table)
                .expect("canonical tables are acts")
                .with_name(format!("A{m}.{k}"))
        })
        .collect()
}

fn all_transformations(m: usize) -> Vec<Vec<u8>> {
    (0..m)
        .map(|_| 0..m as u8)
        .multi_cartesian_product()
        .collect()
}

fn assign(
    monoid: &Arc<FiniteMonoid>,
    m: usize,
    generators: &[usize],
    transformations: &[Vec<u8>],
    images: &mut Vec<Vec<u8>>,
    seen: &mut BTreeSet<Vec<u8>>,
) {
    if images.len() == generators.len() {
        let maps = extend(monoid, m, generators, images).expect("checked at the last assignment");
        let n = monoid.order();
        let mut action = vec![0u8; m * n];
        for (s, f) in maps.iter().enumerate() {
            let f = f.as_ref().expect("generators generate S");
            for a in 0..m {
                action[a * n + s] = f[a];
            }
        }
        seen.insert(canonical_action(monoid, m, &action));
        return;
    }
    for f in transformations {
        images.push(f.clone());
        if extend(monoid, m, &generators[..images.len()], images).is_some() {
            assign(monoid, m, generators, transformations, images, seen);
        }
        images.pop();
    }
}

/// Extends generator images to the submonoid they generate, or `None` if
/// two words for the same element act differently. Entry `s` is the map
/// `a ↦ a·s`.
fn extend(
    monoid: &FiniteMonoid,
    m: usize,
    generators: &[usize],
    images: &[Vec<u8>],
) -> Option<Vec<Option<Vec<u8>>>> {
    let mut maps: Vec<Option<Vec<u8>>> = vec![None; monoid.order()];
    let e = monoid.identity();
    maps[e] = Some((0..m as u8).collect());
    let mut queue = VecDeque::from([e]);
    while let Some(s) = queue.pop_front() {
        for (&g, f) in generators.iter().zip(images) {
            let t = monoid.mul(s, g);
            let fs = maps[s].as_ref().expect("queued elements have maps");
            let composed: Vec<u8> = fs.iter().map(|&x| f[x as usize]).collect();
            match &maps[t] {
                Some(existing) if *existing != composed => return None,
                Some(_) => {}
                None => {
                    maps[t] = Some(composed);
                    queue.push_back(t);
                }
            }
        }
    }
    Some(maps)
}

/// Smallest table among relabelings that sort elements by
/// [`act_invariants`].
fn canonical_action(monoid: &Arc<FiniteMonoid>, m: usize, action: &[u8]) -> Vec<u8> {
    let act = FiniteAct::from_flat(monoid.clone(), m, action.to_vec()).expect("homomorphisms are acts");
    let blocks = blocks_by_key(&act_invariants(&act));
    block_relabelings(&blocks, m)
        .iter()
        .map(|map| relabel_act(action, m, monoid.order(), map))
        .min()
        .expect("at least one relabeling")
}

/// The same classes by brute force: every table with the identity column
/// fixed, filtered by the act axioms, deduplicated by the least relabeling
/// over all `m!` bijections. Practical for `|S|, m ≤ 3`.
pub fn enumerate_acts_naive(monoid: &Arc<FiniteMonoid>, m: usize) -> Vec<FiniteAct> {
    assert!((1..=MAX_CARRIER).contains(&m));
    let n = monoid.order();
    let e = monoid.identity();
    let free: Vec<usize> = (0..m)
        .cartesian_product(monoid.elements().filter(|&s| s != e))
        .map(|(a, s)| a * n + s)
        .collect();
    let bijections: Vec<Vec<usize>> = (0..m).permutations(m).collect();
    let mut action = vec![0u8; m * n];
    for a in 0..m {
        action[a * n + e] = a as u8;
    }
    let mut seen = BTreeSet::new();
    for code in 0..m.pow(free.len() as u32) {
        let mut c = code;
        for &cell in &free {
            action[cell] = (c % m) as u8;
            c /= m;
        }
        if FiniteAct::from_flat(monoid.clone(), m, action.clone()).is_err() {
            continue;
        }
        let least = bijections
            .iter()
            .map(|p| relabel_act(&action, m, n, p))
            .min()
            .expect("m ≥ 1");
        seen.insert(least);
    }
    into_acts(monoid, m, seen)
}

/// Number of acts of each size `1..=max_size`; shorthand for reports.
pub fn act_counts(monoid: &Arc<FiniteMonoid>, max_size: usize) -> Vec<usize> {
    (1..=max_size).map(|m| enumerate_acts(monoid, m).len()).collect()
}
