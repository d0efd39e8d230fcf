//! Exhaustive enumeration of fixed king-connected polyforms (polyplets).
//!
//! Uses Redelmeier's algorithm: every polyform is anchored at its lowest,
//! then leftmost cell, and the search tree reaches each one along exactly one
//! path, so no deduplication is needed. Each polyform is scored at its
//! normalised position (touching both axes), which is the best placement of
//! its translates in the quadrant.
//!
//! The boundary is maintained incrementally. For a normalised set with `E`
//! internal edges, `m` cells on the y-axis, `r` cells on the x-axis and
//! `corner` in `{0, 1}`:
//!
//! ```text
//! boundary = 8 * size - 3m - 3r + corner - 2E
//! ```

use crate::exec::Exec;

const KING: [(i32, i32); 8] = [
    (1, 0),
    (-1, 0),
    (0, 1),
    (0, -1),
    (1, 1),
    (-1, -1),
    (1, -1),
    (-1, 1),
];

const REACHED: u8 = 1;
const PLACED: u8 = 2;

/// Enumeration results for polyforms of one size.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SizeCensus {
    pub size: u32,
    /// Number of fixed polyforms of this size.
    pub count: u64,
    pub min_boundary: u64,
    /// Every polyform reaching `min_boundary`, normalised, sorted.
    pub optimal: Vec<Vec<(u32, u32)>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    pub max_size: u32,
    /// Index `i` holds size `i + 1`.
    pub sizes: Vec<SizeCensus>,
}

impl Census {
    pub fn size(&self, n: u32) -> &SizeCensus {
        &self.sizes[n as usize - 1]
    }
}

#[derive(Debug, Clone, Copy)]
struct Stats {
    size: u32,
    internal: u32,
    on_x_axis: u32,
    min_x: i32,
    at_min_x: u32,
}

#[derive(Clone)]
struct Board {
    max: u32,
    width: i32,
    margin: i32,
    state: Vec<u8>,
    path: Vec<usize>,
}

impl Board {
    fn new(max: u32) -> Board {
        let margin = max as i32 + 1;
        let width = 2 * margin + 1;
        let height = margin + 2;
        let mut board = Board {
            max,
            width,
            margin,
            state: vec![0; (width * height) as usize],
            path: Vec::with_capacity(max as usize),
        };
        // Cells below the anchor row, left of the anchor, or on the rim can
        // never join a polyform anchored at the origin.
        for y in -1..=margin {
            for x in -margin..=margin {
                let rim = x.abs() == margin || y == margin;
                if y < 0 || (y == 0 && x < 0) || rim {
                    let i = board.index(x, y);
                    board.state[i] = REACHED;
                }
            }
        }
        board
    }

    fn index(&self, x: i32, y: i32) -> usize {
        ((y + 1) * self.width + x + self.margin) as usize
    }

    fn coords(&self, i: usize) -> (i32, i32) {
        let i = i as i32;
        (i % self.width - self.margin, i / self.width - 1)
    }

    fn placed(&self, x: i32, y: i32) -> bool {
        self.state[self.index(x, y)] & PLACED != 0
    }
}

#[derive(Clone)]
struct Tally {
    collect: bool,
    sizes: Vec<SizeCensus>,
}

impl Tally {
    fn new(max: u32, collect: bool) -> Tally {
        Tally {
            collect,
            sizes: (1..=max)
                .map(|size| SizeCensus {
                    size,
                    min_boundary: u64::MAX,
                    ..Default::default()
                })
                .collect(),
        }
    }

    fn record(&mut self, board: &Board, stats: Stats) {
        let corner = u32::from(board.placed(stats.min_x, 0));
        let boundary = 8 * stats.size + corner - 3 * stats.at_min_x - 3 * stats.on_x_axis
            - 2 * stats.internal;
        let boundary = u64::from(boundary);
        let entry = &mut self.sizes[stats.size as usize - 1];
        entry.count += 1;
        if boundary > entry.min_boundary {
            return;
        }
        if boundary < entry.min_boundary {
            entry.min_boundary = boundary;
            entry.optimal.clear();
        }
        if self.collect {
            let mut cells: Vec<(u32, u32)> = board
                .path
                .iter()
                .map(|&i| {
                    let (x, y) = board.coords(i);
                    ((x - stats.min_x) as u32, y as u32)
                })
                .collect();
            cells.sort_unstable();
            entry.optimal.push(cells);
        }
    }

    fn merge(&mut self, other: Tally) {
        for (mine, theirs) in self.sizes.iter_mut().zip(other.sizes) {
            mine.count += theirs.count;
            if theirs.min_boundary < mine.min_boundary {
                mine.min_boundary = theirs.min_boundary;
                mine.optimal = theirs.optimal;
            } else if theirs.min_boundary == mine.min_boundary {
                mine.optimal.extend(theirs.optimal);
            }
        }
    }
}

/// A subtree of the search: the board, the untried cells handed to the child
/// level, and the running statistics.
struct Task {
    board: Board,
    untried: Vec<usize>,
    stats: Stats,
}

struct Search {
    board: Board,
    tally: Tally,
    split: Option<u32>,
    tasks: Vec<Task>,
    levels: Vec<Vec<usize>>,
}

impl Search {
    fn place(&mut self, cell: usize, mut stats: Stats) -> Stats {
        let (x, y) = self.board.coords(cell);
        stats.size += 1;
        stats.internal += KING
            .iter()
            .filter(|&&(dx, dy)| self.board.placed(x + dx, y + dy))
            .count() as u32;
        stats.on_x_axis += u32::from(y == 0);
        if stats.size == 1 || x < stats.min_x {
            stats.min_x = x;
            stats.at_min_x = 1;
        } else if x == stats.min_x {
            stats.at_min_x += 1;
        }
        self.board.state[cell] |= PLACED;
        self.board.path.push(cell);
        stats
    }

    fn unplace(&mut self, cell: usize) {
        self.board.state[cell] &= !PLACED;
        self.board.path.pop();
    }

    /// Expand every polyform reachable from `untried` at `depth`.
    fn grow(&mut self, depth: usize, stats: Stats) {
        while let Some(cell) = self.levels[depth].pop() {
            let child = self.place(cell, stats);
            self.tally.record(&self.board, child);
            if child.size < self.board.max {
                let (x, y) = self.board.coords(cell);
                let mut fresh = Vec::new();
                for &(dx, dy) in &KING {
                    let nb = self.board.index(x + dx, y + dy);
                    if self.board.state[nb] & REACHED == 0 {
                        self.board.state[nb] |= REACHED;
                        fresh.push(nb);
                    }
                }
                let mut next = std::mem::take(&mut self.levels[depth + 1]);
                next.clear();
                next.extend_from_slice(&self.levels[depth]);
                next.extend_from_slice(&fresh);
                if self.split == Some(child.size) {
                    self.tasks.push(Task {
                        board: self.board.clone(),
                        untried: next.clone(),
                        stats: child,
                    });
                    self.levels[depth + 1] = next;
                } else {
                    self.levels[depth + 1] = next;
                    self.grow(depth + 1, child);
                }
                for nb in fresh {
                    self.board.state[nb] &= !REACHED;
                }
            }
            self.unplace(cell);
        }
    }

    fn new(board: Board, collect: bool, split: Option<u32>) -> Search {
        let max = board.max;
        Search {
            board,
            tally: Tally::new(max, collect),
            split,
            tasks: Vec::new(),
            levels: vec![Vec::new(); max as usize + 2],
        }
    }
}

const EMPTY: Stats = Stats {
    size: 0,
    internal: 0,
    on_x_axis: 0,
    min_x: 0,
    at_min_x: 0,
};

/// Enumerate all fixed polyplets of up to `max_size` cells. With `collect`
/// the optimal normalised sets of every size are kept.
pub fn census(max_size: u32, collect: bool, exec: Exec) -> Census {
    assert!(max_size >= 1, "size must be positive");
    let mut board = Board::new(max_size);
    let origin = board.index(0, 0);
    board.state[origin] |= REACHED;
    // Split the tree a few levels down so tasks are numerous but cheap.
    let split = (max_size >= 8).then_some(5);
    let mut root = Search::new(board, collect, split);
    root.levels[0].push(origin);
    root.grow(0, EMPTY);

    let tasks = std::mem::take(&mut root.tasks);
    let tallies = exec.map(&tasks, |task| {
        let mut sub = Search::new(task.board.clone(), collect, None);
        sub.levels[task.stats.size as usize] = task.untried.clone();
        sub.grow(task.stats.size as usize, task.stats);
        sub.tally
    });
    let mut tally = root.tally;
    for t in tallies {
        tally.merge(t);
    }
    for s in &mut tally.sizes {
        s.optimal.sort_unstable();
    }
    Census {
        max_size,
        sizes: tally.sizes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{edge_boundary_size, Cell, GridSet};
    use std::collections::HashSet;

    /// Fixed polyplets by naive growth with hash-set deduplication.
    fn naive_polyplets(max: u32) -> Vec<HashSet<Vec<(i32, i32)>>> {
        let norm = |cells: &[(i32, i32)]| {
            let mx = cells.iter().map(|c| c.0).min().unwrap();
            let my = cells.iter().map(|c| c.1).min().unwrap();
            let mut v: Vec<_> = cells.iter().map(|&(x, y)| (x - mx, y - my)).collect();
            v.sort_unstable();
            v
        };
        let mut levels = vec![HashSet::from([vec![(0, 0)]])];
        for _ in 1..max {
            let mut next = HashSet::new();
            for poly in levels.last().unwrap() {
                for &(x, y) in poly {
                    for (dx, dy) in KING {
                        let c = (x + dx, y + dy);
                        if !poly.contains(&c) {
                            let mut grown = poly.clone();
                            grown.push(c);
                            next.insert(norm(&grown));
                        }
                    }
                }
            }
            levels.push(next);
        }
        levels
    }

    #[test]
    fn matches_naive_enumeration() {
        let naive = naive_polyplets(6);
        let c = census(6, true, Exec::Sequential);
        for (level, s) in naive.iter().zip(&c.sizes) {
            assert_eq!(s.count, level.len() as u64, "size {}", s.size);
            let scored: Vec<u64> = level
                .iter()
                .map(|cells| {
                    let set: GridSet = cells
                        .iter()
                        .map(|&(x, y)| Cell::new(x as u32, y as u32))
                        .collect();
                    edge_boundary_size(&set)
                })
                .collect();
            let best = *scored.iter().min().unwrap();
            assert_eq!(s.min_boundary, best);
            let mut expected: Vec<Vec<(u32, u32)>> = level
                .iter()
                .zip(&scored)
                .filter(|(_, &b)| b == best)
                .map(|(cells, _)| cells.iter().map(|&(x, y)| (x as u32, y as u32)).collect())
                .collect();
            expected.sort_unstable();
            assert_eq!(s.optimal, expected);
        }
    }

    #[test]
    fn split_search_matches_single_tree() {
        let parallel = census(8, true, Exec::Parallel);
        let seq = census(8, true, Exec::Sequential);
        assert_eq!(parallel, seq);
        let counts: Vec<u64> = seq.sizes.iter().map(|s| s.count).collect();
        assert_eq!(counts, vec![1, 4, 20, 110, 638, 3832, 23592, 147941]);
    }
}
