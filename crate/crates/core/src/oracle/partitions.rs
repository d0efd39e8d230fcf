//! Minimum perimeter over all gap-free sets, i.e. over all integer partitions
//! of `n` read as column profiles.

use crate::exec::Exec;
use crate::grid::{count_boundary, Cell, ColumnProfile};

/// Call `f` on every partition of `remaining` into parts `<= max_part`,
/// appended to `parts`, in reverse lexicographic order.
pub fn for_each_partition<F>(remaining: u32, max_part: u32, parts: &mut Vec<u32>, f: &mut F)
where
    F: FnMut(&[u32]),
{
    if remaining == 0 {
        f(parts);
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        parts.push(part);
        for_each_partition(remaining - part, part, parts, f);
        parts.pop();
    }
}

/// Cell-by-cell boundary of the Young diagram with column heights `parts`.
pub fn score(parts: &[u32]) -> u64 {
    let contains = |c: Cell| (c.x as usize) < parts.len() && c.y < parts[c.x as usize];
    let cells = parts
        .iter()
        .enumerate()
        .flat_map(|(x, &h)| (0..h).map(move |y| Cell::new(x as u32, y)));
    count_boundary(cells, contains)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionScan {
    pub n: u64,
    pub p: u64,
    /// Minimising profiles, sorted.
    pub minimizers: Vec<ColumnProfile>,
    /// Number of partitions scored.
    pub candidates: u64,
}

#[derive(Default)]
struct Partial {
    best: Option<u64>,
    minimizers: Vec<Vec<u32>>,
    candidates: u64,
}

impl Partial {
    fn offer(&mut self, parts: &[u32], keep_all: bool) {
        self.candidates += 1;
        let s = score(parts);
        match self.best {
            Some(b) if s > b => {}
            Some(b) if s == b => {
                if keep_all {
                    self.minimizers.push(parts.to_vec());
                } else if self.minimizers.first().is_none_or(|m| parts < m.as_slice()) {
                    self.minimizers = vec![parts.to_vec()];
                }
            }
            _ => {
                self.best = Some(s);
                self.minimizers = vec![parts.to_vec()];
            }
        }
    }

    fn merge(mut self, other: Partial, keep_all: bool) -> Partial {
        self.candidates += other.candidates;
        match (self.best, other.best) {
            (_, None) => {}
            (None, _) => {
                self.best = other.best;
                self.minimizers = other.minimizers;
            }
            (Some(a), Some(b)) if b < a => {
                self.best = other.best;
                self.minimizers = other.minimizers;
            }
            (Some(a), Some(b)) if a == b => {
                self.minimizers.extend(other.minimizers);
                if !keep_all {
                    self.minimizers.sort();
                    self.minimizers.truncate(1);
                }
            }
            _ => {}
        }
        self
    }
}

/// Scan every partition of `n >= 1`, fanning out over the first part. With
/// `keep_all` every minimiser is returned, otherwise the lexicographically
/// smallest one.
pub fn scan(n: u64, keep_all: bool, exec: Exec) -> PartitionScan {
    assert!(n >= 1, "volume must be positive");
    let n32 = n as u32;
    let firsts: Vec<u32> = (1..=n32).rev().collect();
    let partials = exec.map(&firsts, |&first| {
        let mut partial = Partial::default();
        let mut parts = vec![first];
        for_each_partition(n32 - first, first, &mut parts, &mut |p| {
            partial.offer(p, keep_all)
        });
        partial
    });
    let merged = partials
        .into_iter()
        .fold(Partial::default(), |acc, p| acc.merge(p, keep_all));
    let mut minimizers: Vec<ColumnProfile> = merged
        .minimizers
        .into_iter()
        .map(|h| ColumnProfile::new(h).expect("partitions are non-increasing"))
        .collect();
    minimizers.sort();
    PartitionScan {
        n,
        p: merged.best.expect("every n >= 1 has a partition"),
        minimizers,
        candidates: merged.candidates,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{edge_boundary_size, profile_to_set};

    #[test]
    fn partition_counts() {
        let counts: Vec<u64> = (1..=12)
            .map(|n| scan(n, false, Exec::Sequential).candidates)
            .collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
    }

    #[test]
    fn score_matches_grid_count() {
        let mut parts = Vec::new();
        for_each_partition(9, 9, &mut parts, &mut |p| {
            let profile = ColumnProfile::new(p.to_vec()).unwrap();
            assert_eq!(score(p), edge_boundary_size(&profile_to_set(&profile)));
        });
    }

    #[test]
    fn small_minima() {
        let four = scan(4, true, Exec::Sequential);
        assert_eq!(four.p, 9);
        assert_eq!(four.minimizers, vec![ColumnProfile::new(vec![2, 2]).unwrap()]);
        assert_eq!(scan(1, false, Exec::Sequential).p, 3);
        assert_eq!(scan(11, false, Exec::Parallel).p, 16);
    }

    #[test]
    fn strategies_agree() {
        for n in [7, 15, 23] {
            assert_eq!(scan(n, true, Exec::Parallel), scan(n, true, Exec::Sequential));
        }
    }
}
