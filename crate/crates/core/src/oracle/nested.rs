//! Chains of nested optimal sets.
//!
//! Level `i` of the containment DAG holds the optimal sets of volume `i`; an
//! edge joins `A` to `B` when `A ⊂ B`. A chain that stops being extendable by
//! optimal sets is continued greedily, one cell at a time, by the addition of
//! least resulting perimeter.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::grid::{edge_boundary_size, Cell, GridSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NestedChainReport {
    pub max_n: u32,
    /// `p(n)` for `n = 1..=max_n`.
    pub optimal_perimeters: Vec<u64>,
    /// Least perimeter reachable at each volume by a nested sequence that is
    /// optimal as long as possible and greedy afterwards.
    pub best_chain_perimeters: Vec<u64>,
    /// Largest volume reached by a chain of optimal sets from volume 1.
    pub chains_exist_to: u32,
    /// Number of optimal chains from volume 1 to `chains_exist_to`.
    pub optimal_chain_count: u64,
    /// The same count with chains identified under reflection in `y = x`.
    pub optimal_chain_count_up_to_reflection: u64,
    /// One chain realising `best_chain_perimeters`, volumes `1..=max_n`.
    pub representative_chain: Vec<GridSet>,
}

/// Addition of one cell to `set` causes `degree - 2 * (neighbours inside)`.
fn grown_boundary(set: &GridSet, boundary: u64, cell: Cell) -> u64 {
    let inside = cell.neighbors().filter(|&nb| set.contains(nb)).count() as u64;
    boundary + cell.degree() - 2 * inside
}

/// Best single-cell additions over all `frontier` sets. Cells beyond the box
/// `[0, max+2]^2` score the same as the far corners of the box, so the box
/// suffices. Returns the least perimeter and every resulting set, each with
/// the first `(parent, cell)` that produces it.
fn greedy_step(frontier: &[GridSet]) -> (u64, BTreeMap<GridSet, usize>) {
    let mut best = u64::MAX;
    let mut found: BTreeMap<GridSet, usize> = BTreeMap::new();
    for (idx, set) in frontier.iter().enumerate() {
        let boundary = edge_boundary_size(set);
        let mx = set.max_x().unwrap_or(0) + 2;
        let my = set.max_y().unwrap_or(0) + 2;
        for x in 0..=mx {
            for y in 0..=my {
                let cell = Cell::new(x, y);
                if set.contains(cell) {
                    continue;
                }
                let b = grown_boundary(set, boundary, cell);
                if b < best {
                    best = b;
                    found.clear();
                }
                if b == best {
                    found.entry(set.with(cell)).or_insert(idx);
                }
            }
        }
    }
    (best, found)
}

/// Analyse nested chains given the optimal sets of volumes `1..=max_n`
/// (index `i` holds volume `i + 1`).
pub fn analyse(optimal: &[Vec<GridSet>], perimeters: &[u64]) -> NestedChainReport {
    let max_n = optimal.len() as u32;
    assert!(max_n >= 1 && perimeters.len() == optimal.len());

    // ways[i][j]: chains ending at optimal[i][j]; symmetric counts chains made
    // of self-transposed sets only.
    let mut ways: Vec<Vec<u64>> = vec![vec![1; optimal[0].len()]];
    let mut symmetric: Vec<Vec<u64>> = vec![optimal[0]
        .iter()
        .map(|s| u64::from(s.transpose() == *s))
        .collect()];
    let mut parent: Vec<Vec<Option<usize>>> = vec![vec![None; optimal[0].len()]];
    let mut reached = 1u32;
    for i in 1..optimal.len() {
        let mut w = Vec::with_capacity(optimal[i].len());
        let mut sym = Vec::with_capacity(optimal[i].len());
        let mut par = Vec::with_capacity(optimal[i].len());
        for b in &optimal[i] {
            let is_sym = b.transpose() == *b;
            let (mut total, mut total_sym, mut first) = (0u64, 0u64, None);
            for (j, a) in optimal[i - 1].iter().enumerate() {
                if ways[i - 1][j] > 0 && a.is_subset(b) {
                    total += ways[i - 1][j];
                    if is_sym {
                        total_sym += symmetric[i - 1][j];
                    }
                    first.get_or_insert(j);
                }
            }
            w.push(total);
            sym.push(total_sym);
            par.push(first);
        }
        let alive = w.iter().any(|&x| x > 0);
        ways.push(w);
        symmetric.push(sym);
        parent.push(par);
        if !alive {
            break;
        }
        reached = i as u32 + 1;
    }

    let top = reached as usize - 1;
    let optimal_chain_count: u64 = ways[top].iter().sum();
    let fixed: u64 = symmetric[top].iter().sum();
    let frontier_idx: Vec<usize> = (0..optimal[top].len())
        .filter(|&j| ways[top][j] > 0)
        .collect();

    let mut best_chain_perimeters = perimeters[..reached as usize].to_vec();
    let mut frontier: Vec<GridSet> = frontier_idx.iter().map(|&j| optimal[top][j].clone()).collect();
    // Greedy levels: each set remembers the index of its parent one level down.
    let mut greedy: Vec<Vec<(GridSet, usize)>> = Vec::new();
    for _ in reached..max_n {
        let (best, found) = greedy_step(&frontier);
        best_chain_perimeters.push(best);
        let level: Vec<(GridSet, usize)> = found.into_iter().collect();
        frontier = level.iter().map(|(s, _)| s.clone()).collect();
        greedy.push(level);
    }

    // Walk back from the smallest set at the last level.
    let mut chain: Vec<GridSet> = Vec::new();
    let mut idx = 0usize;
    for level in greedy.iter().rev() {
        let (set, up) = &level[idx];
        chain.push(set.clone());
        idx = *up;
    }
    let mut j = frontier_idx.get(idx).copied().unwrap_or(0);
    for i in (0..=top).rev() {
        chain.push(optimal[i][j].clone());
        if i > 0 {
            j = parent[i][j].expect("reachable sets have a parent");
        }
    }
    chain.reverse();

    NestedChainReport {
        max_n,
        optimal_perimeters: perimeters.to_vec(),
        best_chain_perimeters,
        chains_exist_to: reached,
        optimal_chain_count,
        optimal_chain_count_up_to_reflection: (optimal_chain_count + fixed) / 2,
        representative_chain: chain,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn greedy_step_on_a_corner_cell() {
        let (best, found) = greedy_step(&[GridSet::from_coords([(0, 0)])]);
        assert_eq!(best, 6);
        let sets: Vec<&GridSet> = found.keys().collect();
        assert_eq!(
            sets,
            vec![
                &GridSet::from_coords([(0, 0), (0, 1)]),
                &GridSet::from_coords([(0, 0), (1, 0)])
            ]
        );
    }

    #[test]
    fn chain_through_hand_built_levels() {
        let levels = vec![
            vec![GridSet::from_coords([(0, 0)])],
            vec![
                GridSet::from_coords([(0, 0), (0, 1)]),
                GridSet::from_coords([(0, 0), (1, 0)]),
            ],
        ];
        let report = analyse(&levels, &[3, 6]);
        assert_eq!(report.chains_exist_to, 2);
        assert_eq!(report.optimal_chain_count, 2);
        assert_eq!(report.optimal_chain_count_up_to_reflection, 1);
        assert_eq!(report.best_chain_perimeters, vec![3, 6]);
        assert_eq!(report.representative_chain.len(), 2);
    }
}
