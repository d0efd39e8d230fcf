use std::collections::HashSet;

use gridperim_core::grid::{
    boundary_by_direction, edge_boundary_size, has_gaps, profile_to_set, set_to_profile,
};
use gridperim_core::{Cell, ColumnProfile, GridSet};
use proptest::prelude::*;

/// Boundary as a set of undirected edges, built from scratch.
fn brute_boundary(set: &GridSet) -> usize {
    let mut edges = HashSet::new();
    for &u in set.cells() {
        for dx in -1i64..=1 {
            for dy in -1i64..=1 {
                if (dx, dy) == (0, 0) {
                    continue;
                }
                let (x, y) = (u.x as i64 + dx, u.y as i64 + dy);
                if x < 0 || y < 0 {
                    continue;
                }
                let v = Cell::new(x as u32, y as u32);
                if !set.contains(v) {
                    edges.insert((u.min(v), u.max(v)));
                }
            }
        }
    }
    edges.len()
}

fn small_set() -> impl Strategy<Value = GridSet> {
    prop::collection::vec((0u32..10, 0u32..10), 1..=30).prop_map(GridSet::from_coords)
}

fn profile() -> impl Strategy<Value = ColumnProfile> {
    prop::collection::vec(1u32..40, 1..25).prop_map(|mut h| {
        h.sort_unstable_by(|a, b| b.cmp(a));
        ColumnProfile::new(h).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn boundary_matches_edge_set(set in small_set()) {
        prop_assert_eq!(edge_boundary_size(&set), brute_boundary(&set) as u64);
    }

    #[test]
    fn directions_sum_to_total(set in small_set()) {
        prop_assert_eq!(boundary_by_direction(&set).total(), edge_boundary_size(&set));
    }

    #[test]
    fn moving_away_from_the_axes_never_helps(set in small_set(), dx in 0i64..4, dy in 0i64..4) {
        let moved = set.translate(dx, dy).unwrap();
        prop_assert!(edge_boundary_size(&moved) >= edge_boundary_size(&set));
        prop_assert!(edge_boundary_size(&set.normalized()) <= edge_boundary_size(&set));
    }

    #[test]
    fn transpose_preserves_boundary(set in small_set()) {
        prop_assert_eq!(edge_boundary_size(&set.transpose()), edge_boundary_size(&set));
    }

    #[test]
    fn profile_boundary_agrees(p in profile()) {
        let set = profile_to_set(&p);
        prop_assert_eq!(p.boundary(), p.boundary_cellwise());
        prop_assert_eq!(p.boundary(), edge_boundary_size(&set));
        prop_assert_eq!(p.conjugate().boundary(), p.boundary());
        prop_assert!(!has_gaps(&set));
        prop_assert_eq!(set_to_profile(&set).unwrap(), p);
    }
}

#[test]
fn corner_and_axis_degrees() {
    assert_eq!(Cell::new(0, 0).degree(), 3);
    assert_eq!(Cell::new(4, 0).degree(), 5);
    assert_eq!(Cell::new(0, 4).degree(), 5);
    assert_eq!(Cell::new(2, 3).degree(), 8);
}
