//! All monoids of a given order, one per isomorphism class.

use itertools::Itertools;

use super::canon::{block_relabelings, blocks_by_key, relabel_monoid};
use crate::monoid::{element_invariants, FiniteMonoid};
use crate::set::MAX_CARRIER;

const UNSET: u8 = u8::MAX;

/// Monoids of order `n` up to isomorphism, identity at index 0, sorted by
/// table.
///
/// Tables are filled cell by cell with an associativity check after each
/// assignment. A complete table is kept only if its elements are sorted by
/// [`element_invariants`] and no invariant-preserving relabeling gives a
/// lexicographically smaller table.
pub fn enumerate_monoids(n: usize) -> Vec<FiniteMonoid> {
    assert!((1..=MAX_CARRIER).contains(&n), "order must be in 1..={MAX_CARRIER}");
    let mut table = vec![UNSET; n * n];
    for x in 0..n {
        table[x] = x as u8;
        table[x * n] = x as u8;
    }
    let cells: Vec<(usize, usize)> = (1..n).cartesian_product(1..n).collect();
    let mut out = Vec::new();
    fill(n, &mut table, &cells, 0, &mut out);
    out.sort_by(|a, b| a.flat_table().cmp(b.flat_table()));
    name_all(n, out)
}

fn name_all(n: usize, monoids: Vec<FiniteMonoid>) -> Vec<FiniteMonoid> {
    monoids
        .into_iter()
        .enumerate()
        .map(|(k, m)| m.with_name(format!("M{n}.{k}")))
        .collect()
}

fn fill(n: usize, table: &mut [u8], cells: &[(usize, usize)], k: usize, out: &mut Vec<FiniteMonoid>) {
    let Some(&(i, j)) = cells.get(k) else {
        if let Some(m) = canonical(n, table) {
            out.push(m);
        }
        return;
    };
    for v in 0..n as u8 {
        table[i * n + j] = v;
        if partially_associative(n, table) {
            fill(n, table, cells, k + 1, out);
        }
    }
    table[i * n + j] = UNSET;
}

/// `(xy)z = x(yz)` wherever both sides are already defined.
fn partially_associative(n: usize, t: &[u8]) -> bool {
    for x in 1..n {
        for y in 1..n {
            let xy = t[x * n + y];
            if xy == UNSET {
                continue;
            }
            for z in 1..n {
                let yz = t[y * n + z];
                if yz == UNSET {
                    continue;
                }
                let l = t[xy as usize * n + z];
                let r = t[x * n + yz as usize];
                if l != UNSET && r != UNSET && l != r {
                    return false;
                }
            }
        }
    }
    true
}

fn canonical(n: usize, table: &[u8]) -> Option<FiniteMonoid> {
    let monoid = FiniteMonoid::from_flat(n, table.to_vec(), Some(0)).ok()?;
    let keys: Vec<_> = element_invariants(&monoid)
        .into_iter()
        .map(|inv| (!inv.is_identity, inv))
        .collect();
    if !keys.windows(2).all(|w| w[0] <= w[1]) {
        return None;
    }
    let blocks = blocks_by_key(&keys);
    block_relabelings(&blocks, n)
        .iter()
        .all(|map| relabel_monoid(table, n, map).as_slice() >= table)
        .then_some(monoid)
}

/// The same classes by brute force: every table with identity at 0,
/// filtered for associativity, deduplicated against all identity-fixing
/// relabelings. Practical up to order 4.
pub fn enumerate_monoids_naive(n: usize) -> Vec<FiniteMonoid> {
    assert!((1..=MAX_CARRIER).contains(&n));
    let free: Vec<usize> = (1..n).cartesian_product(1..n).map(|(i, j)| i * n + j).collect();
    let relabelings: Vec<Vec<usize>> = (1..n)
        .permutations(n - 1)
        .map(|p| std::iter::once(0).chain(p).collect())
        .collect();
    let mut reps: Vec<FiniteMonoid> = Vec::new();
    let mut table = vec![0u8; n * n];
    for x in 0..n {
        table[x] = x as u8;
        table[x * n] = x as u8;
    }
    let total = n.pow(free.len() as u32);
    for code in 0..total {
        let mut c = code;
        for &cell in &free {
            table[cell] = (c % n) as u8;
            c /= n;
        }
        let Ok(monoid) = FiniteMonoid::from_flat(n, table.clone(), Some(0)) else {
            continue;
        };
        let known = reps.iter().any(|r| {
            relabelings
                .iter()
                .any(|map| relabel_monoid(&table, n, map).as_slice() == r.flat_table())
        });
        if !known {
            reps.push(monoid);
        }
    }
    reps.sort_by(|a, b| a.flat_table().cmp(b.flat_table()));
    name_all(n, reps)
}
