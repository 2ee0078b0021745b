//! Canonical forms for isomorphism rejection.

use itertools::Itertools;

/// Every relabeling `old -> new` that sends the members of `blocks[k]` onto
/// the positions `starts[k]..starts[k] + blocks[k].len()` in some order.
pub(crate) fn block_relabelings(blocks: &[Vec<usize>], size: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![usize::MAX; size]];
    let mut start = 0;
    for block in blocks {
        let positions: Vec<usize> = (start..start + block.len()).collect();
        start += block.len();
        out = out
            .into_iter()
            .flat_map(|map| {
                positions.iter().copied().permutations(positions.len()).map(move |order| {
                    let mut map = map.clone();
                    for (&old, new) in block.iter().zip(order) {
                        map[old] = new;
                    }
                    map
                })
            })
            .collect();
    }
    out
}

/// Groups `0..keys.len()` by key, in increasing key order.
pub(crate) fn blocks_by_key<K: Ord>(keys: &[K]) -> Vec<Vec<usize>> {
    let order: Vec<usize> = (0..keys.len()).sorted_by(|&a, &b| keys[a].cmp(&keys[b])).collect();
    order
        .into_iter()
        .chunk_by(|&a| &keys[a])
        .into_iter()
        .map(|(_, group)| group.collect())
        .collect()
}

/// `table` (square, `n × n`) with every label passed through `map`.
pub(crate) fn relabel_monoid(table: &[u8], n: usize, map: &[usize]) -> Vec<u8> {
    let mut out = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            out[map[a] * n + map[b]] = map[table[a * n + b] as usize] as u8;
        }
    }
    out
}

/// An act table (`m × n`) with act elements passed through `map`; monoid
/// columns stay put.
pub(crate) fn relabel_act(action: &[u8], m: usize, n: usize, map: &[usize]) -> Vec<u8> {
    let mut out = vec![0; m * n];
    for a in 0..m {
        for s in 0..n {
            out[map[a] * n + s] = map[action[a * n + s] as usize] as u8;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabelings_respect_blocks() {
        let maps = block_relabelings(&[vec![2], vec![0, 1]], 3);
        assert_eq!(maps, vec![vec![1, 2, 0], vec![2, 1, 0]]);
        assert_eq!(block_relabelings(&[], 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn blocks_sorted_by_key() {
        assert_eq!(blocks_by_key(&[3, 1, 3, 2]), vec![vec![1], vec![3], vec![0, 2]]);
    }

    #[test]
    fn relabel_swaps_rows_and_values() {
        // {1, e} with identity at 0, relabeled by the swap
        let t = [0, 1, 1, 1];
        assert_eq!(relabel_monoid(&t, 2, &[1, 0]), vec![0, 0, 0, 1]);
        let act = [0, 0, 1, 0];
        assert_eq!(relabel_act(&act, 2, 2, &[1, 0]), vec![0, 1, 1, 1]);
    }
}
