//! Sequence-level studies over `p(n)`.

use serde::{Deserialize, Serialize};

use crate::canonical::CanonicalShape;
use crate::exec::Exec;
use crate::grid::{edge_boundary_size, profile_to_set, ColumnProfile};
use crate::optimizer::{self, continuous_lower, upper_real, PerimeterResult};

pub fn perimeter_table(lo: u64, hi: u64, exec: Exec) -> Vec<PerimeterResult> {
    optimizer::perimeter_range(lo.max(1), hi, exec)
}

/// Volumes `n` in the table with `p(n+1) < p(n)`.
pub fn monotonicity_violations(table: &[PerimeterResult]) -> Vec<u64> {
    table
        .windows(2)
        .filter(|w| w[1].p < w[0].p)
        .map(|w| w[0].n)
        .collect()
}

/// A maximal run of consecutive volumes sharing one minimum perimeter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlateauRun {
    pub start: u64,
    pub length: u64,
    pub value: u64,
    /// The run continues past the scanned range on at least one side.
    pub clipped: bool,
}

impl PlateauRun {
    pub fn end(&self) -> u64 {
        self.start + self.length - 1
    }
}

/// Maximal constant runs of `table` with length `>= min_len`. `before` and
/// `after` are `p` just outside the table, when known, and only decide the
/// `clipped` flag.
pub fn plateau_runs(
    table: &[PerimeterResult],
    before: Option<u64>,
    after: Option<u64>,
    min_len: u64,
) -> Vec<PlateauRun> {
    let mut runs = Vec::new();
    let mut i = 0;
    while i < table.len() {
        let value = table[i].p;
        let mut j = i;
        while j + 1 < table.len() && table[j + 1].p == value {
            j += 1;
        }
        let clipped = (i == 0 && before == Some(value))
            || (j + 1 == table.len() && after.is_none_or(|a| a == value));
        let length = (j - i + 1) as u64;
        if length >= min_len.max(1) {
            runs.push(PlateauRun {
                start: table[i].n,
                length,
                value,
                clipped,
            });
        }
        i = j + 1;
    }
    runs
}

pub fn plateaus(lo: u64, hi: u64, min_len: u64, exec: Exec) -> Vec<PlateauRun> {
    let lo = lo.max(1);
    let table = perimeter_table(lo, hi, exec);
    let before = (lo > 1).then(|| optimizer::min_perimeter(lo - 1).p);
    let after = Some(optimizer::min_perimeter(hi + 1).p);
    plateau_runs(&table, before, after, min_len)
}

/// Longest constant run inside `[first, N]` for each checkpoint `N`, where
/// `table` starts at volume `first`.
pub fn max_run_lengths(table: &[PerimeterResult], checkpoints: &[u64]) -> Vec<(u64, u64)> {
    let Some(first) = table.first().map(|r| r.n) else {
        return Vec::new();
    };
    let mut best_upto = Vec::with_capacity(table.len());
    let (mut best, mut current) = (0u64, 0u64);
    for (i, r) in table.iter().enumerate() {
        current = if i > 0 && table[i - 1].p == r.p { current + 1 } else { 1 };
        best = best.max(current);
        best_upto.push(best);
    }
    checkpoints
        .iter()
        .filter(|&&n| n >= first && n < first + table.len() as u64)
        .map(|&n| (n, best_upto[(n - first) as usize]))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RatioRow {
    pub n: u64,
    pub p: u64,
    pub p_ratio: f64,
    pub lower_ratio: f64,
    pub upper_ratio: Option<f64>,
}

/// `p(n)/sqrt(n)` against the bound ratios; both bound ratios tend to
/// `2 sqrt(7)`.
pub fn asymptotic_ratios(samples: &[u64], exec: Exec) -> Vec<RatioRow> {
    exec.map(samples, |&n| {
        let root = (n as f64).sqrt();
        let p = optimizer::min_perimeter(n).p;
        RatioRow {
            n,
            p,
            p_ratio: p as f64 / root,
            lower_ratio: continuous_lower(n) / root,
            upper_ratio: upper_real(n).map(|u| u / root),
        }
    })
}

pub const TWO_ROOT_SEVEN: f64 = 5.291_502_622_129_181;

/// The full staircase of volume 105 against its one-row-taller truncation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimplexReport {
    pub simplex: ColumnProfile,
    pub truncated: ColumnProfile,
    pub simplex_volume: u64,
    pub truncated_volume: u64,
    /// Values published alongside the example.
    pub published: (u64, u64),
    pub formula: (u64, u64),
    pub direct: (u64, u64),
    /// Whether the formula is certified exact on each shape.
    pub formula_certified: (bool, bool),
    pub optimum: PerimeterResult,
}

impl SimplexReport {
    pub fn truncation_gain(&self) -> i64 {
        self.direct.0 as i64 - self.direct.1 as i64
    }
}

pub fn simplex_comparison() -> SimplexReport {
    let simplex = ColumnProfile::new((1..=14).rev().collect()).expect("decreasing");
    let truncated = ColumnProfile::new((6..=15).rev().collect()).expect("decreasing");
    let shape = |p: &ColumnProfile| CanonicalShape::from_profile(p).expect("staircases are canonical");
    let (s, t) = (shape(&simplex), shape(&truncated));
    SimplexReport {
        simplex_volume: simplex.volume(),
        truncated_volume: truncated.volume(),
        published: (56, 55),
        formula: (s.perimeter_formula(), t.perimeter_formula()),
        direct: (
            edge_boundary_size(&profile_to_set(&simplex)),
            edge_boundary_size(&profile_to_set(&truncated)),
        ),
        formula_certified: (s.formula_exact(), t.formula_exact()),
        optimum: optimizer::min_perimeter(105),
        simplex,
        truncated,
    }
}
