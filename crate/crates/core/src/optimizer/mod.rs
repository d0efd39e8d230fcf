//! Exact minimum perimeter `p(n)` by integer search over the canonical family.
//!
//! Every feasible `(a, c)` determines one shape of volume `n`; the search
//! minimises over all of them, returning the lexicographically smallest
//! `(p, a, c)`. Pruning uses two facts: the objective is at least `3a`, and
//! for fixed `a` the real relaxation is a convex lower bound of the integer
//! objective in `c`.

pub mod bounds;

use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::canonical::{self, CanonicalShape};
use crate::exec::Exec;

pub use bounds::{
    bound_gap, construction_value, continuous_lower, continuous_minimizer, lower_bound,
    relaxed_objective, upper_bound, upper_real, weakened_gap, weakened_upper, GapReport,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PerimeterResult {
    pub n: u64,
    pub p: u64,
    pub witness: CanonicalShape,
    /// `p` meets the analytic lower bound, so it is optimal without any
    /// appeal to the structural results.
    pub certified: bool,
}

impl PerimeterResult {
    fn new(n: u64, p: u64, witness: CanonicalShape) -> Self {
        PerimeterResult {
            n,
            p,
            witness,
            certified: p == lower_bound(n),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundsPair {
    pub n: u64,
    pub lower: u64,
    pub upper: Option<u64>,
    /// Real-valued gap between the unrounded bounds.
    pub gap: Option<f64>,
}

pub fn bounds(n: u64) -> BoundsPair {
    BoundsPair {
        n,
        lower: lower_bound(n),
        upper: upper_bound(n),
        gap: bound_gap(n).map(|g| g.real),
    }
}

/// Tolerance on the real relaxation when pruning against integer values.
const PRUNE_EPS: f64 = 1e-7;

type Candidate = (u64, u64, u64);

fn consider(best: &mut Option<Candidate>, cand: Candidate) {
    if best.is_none_or(|b| cand < b) {
        *best = Some(cand);
    }
}

fn bound_exceeds(best: &Option<Candidate>, value: f64) -> bool {
    best.is_some_and(|(p, _, _)| value > p as f64 + PRUNE_EPS)
}

/// Scan the flat-column counts of first height `a`, outward from the real
/// minimiser, stopping on each side once the convex relaxation exceeds the
/// incumbent.
fn scan_height(a: u64, n: u64, range: RangeInclusive<u64>, best: &mut Option<Candidate>) {
    let (lo, hi) = (*range.start(), *range.end());
    let af = a as f64;
    let base = 1.0 + 8.0 * (af * (af - 1.0) / 2.0 - n as f64);
    let c_star = (4.0 * af * af / 9.0 - base) / (8.0 * af);
    let relax = |c: u64| relaxed_objective(af, c as f64, n).unwrap_or(f64::INFINITY);
    let clamped = c_star.clamp(lo as f64, hi as f64);
    if bound_exceeds(best, relaxed_objective(af, clamped, n).unwrap_or(f64::INFINITY)) {
        return;
    }
    let start = (clamped.round() as u64).clamp(lo, hi);
    // Returns false once `c` lies beyond the minimiser in the scan direction
    // and the relaxation already exceeds the incumbent.
    let visit = |c: u64, downward: bool, best: &mut Option<Candidate>| -> bool {
        let beyond = if downward {
            (c as f64) <= c_star
        } else {
            (c as f64) >= c_star
        };
        if beyond && bound_exceeds(best, relax(c)) {
            return false;
        }
        if let Ok(p) = canonical::objective(a, c, n) {
            consider(best, (p, a, c));
        }
        true
    };
    for c in (lo..=start).rev() {
        if !visit(c, true, best) {
            break;
        }
    }
    for c in start + 1..=hi {
        if !visit(c, false, best) {
            break;
        }
    }
}

fn search(n: u64) -> Candidate {
    let mut best = None;
    if n >= 2 {
        let (a_star, _) = continuous_minimizer(n);
        let centre = a_star.round() as u64;
        for a in centre.saturating_sub(1).max(1)..=(centre + 1).min(n) {
            if let Some(range) = canonical::feasible_c_range(a, n) {
                scan_height(a, n, range, &mut best);
            }
        }
    }
    for a in 1..=n {
        if best.is_some_and(|(p, _, _)| 3 * a > p) {
            break;
        }
        if let Some(range) = canonical::feasible_c_range(a, n) {
            scan_height(a, n, range, &mut best);
        }
    }
    best.expect("a = n, c = 1 is always feasible")
}

/// Minimum edge boundary over all sets of `n >= 1` cells, with a canonical
/// witness. The witness is re-scored by direct counting before returning.
pub fn min_perimeter(n: u64) -> PerimeterResult {
    assert!(n >= 1, "volume must be positive");
    let (p, a, c) = search(n);
    let witness = canonical::build_shape(a, c, n).expect("search only yields feasible pairs");
    if witness.expand().boundary() != p {
        // The objective agrees with direct counting on every shape the family
        // produces; fall back rather than return an unverified value.
        return min_perimeter_full_scan(n);
    }
    PerimeterResult::new(n, p, witness)
}

/// Reference search: every feasible `(a, c)` built and scored by direct
/// counting. Same tie-break as [`min_perimeter`].
pub fn min_perimeter_full_scan(n: u64) -> PerimeterResult {
    assert!(n >= 1, "volume must be positive");
    let mut best: Option<(u64, u64, u64, CanonicalShape)> = None;
    for a in 1..=n {
        let Some(range) = canonical::feasible_c_range(a, n) else {
            continue;
        };
        for c in range {
            let Ok(shape) = canonical::build_shape(a, c, n) else {
                continue;
            };
            let p = shape.expand().boundary();
            if best.is_none_or(|(bp, ba, bc, _)| (p, a, c) < (bp, ba, bc)) {
                best = Some((p, a, c, shape));
            }
        }
    }
    let (p, _, _, shape) = best.expect("a = n, c = 1 is always feasible");
    PerimeterResult::new(n, p, shape)
}

pub fn perimeter_range(lo: u64, hi: u64, exec: Exec) -> Vec<PerimeterResult> {
    if lo > hi {
        return Vec::new();
    }
    exec.map_range(lo..=hi, min_perimeter)
}

/// The witness with one cell added on top of its last column, when the last
/// column sits at least two below its predecessor. Adding that cell keeps the
/// perimeter unchanged.
pub fn increment_of(result: &PerimeterResult) -> Option<CanonicalShape> {
    let w = result.witness;
    let prev = w.penultimate_height()?;
    if w.c() < w.k() && w.last() + 1 < prev {
        w.with_last(w.last() + 1).ok()
    } else {
        None
    }
}

pub fn increment_witness(n: u64) -> Option<CanonicalShape> {
    increment_of(&min_perimeter(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{edge_boundary_size, profile_to_set};

    #[test]
    fn small_values() {
        assert_eq!(min_perimeter(1).p, 3);
        assert_eq!(min_perimeter(9).p, 14);
        assert_eq!(min_perimeter(11).p, 16);
        let r = min_perimeter(105);
        assert_eq!(r.p, 53);
        assert!(r.certified);
        let direct = edge_boundary_size(&profile_to_set(&r.witness.expand()));
        assert_eq!(direct, 53);
        assert_eq!(r.witness.volume_formula(), 105);
    }

    #[test]
    fn witness_tie_break_for_nine() {
        // (3,2) and (4,1) both reach 14; the smaller first height wins.
        let r = min_perimeter(9);
        assert_eq!(r.witness.expand().heights(), &[3, 3, 2, 1]);
    }

    #[test]
    fn pruned_search_matches_full_scan() {
        for n in 1..=600 {
            assert_eq!(min_perimeter(n), min_perimeter_full_scan(n), "n={n}");
        }
    }

    #[test]
    fn increment_of_single_cell_is_undefined() {
        assert_eq!(increment_witness(1), None);
    }

    #[test]
    fn bounds_pair_fields() {
        let b = bounds(36);
        assert_eq!((b.lower, b.upper), (30, Some(43)));
        assert!(b.gap.unwrap() <= bounds::GAP_LIMIT);
        let b = bounds(10);
        assert_eq!(b.upper, None);
        assert_eq!(b.gap, None);
    }
}
