use gridperim_core::grid::{edge_boundary_size, has_gaps};
use gridperim_core::oracle::{self, polyform, OracleBudget, Witness};
use gridperim_core::{optimizer, Error, Exec};

const FIXED_POLYPLETS: [u64; 10] = [1, 4, 20, 110, 638, 3832, 23592, 147941, 940982, 6053180];

#[test]
fn polyplet_counts() {
    let census = polyform::census(10, false, Exec::Parallel);
    let counts: Vec<u64> = census.sizes.iter().map(|s| s.count).collect();
    assert_eq!(counts, FIXED_POLYPLETS);
}

#[test]
fn optimal_sets_are_closed_under_reflection() {
    let budget = OracleBudget::default();
    for n in 1..=9 {
        let sets = oracle::enumerate_optimal_sets(n, &budget, Exec::Sequential).unwrap();
        let p = optimizer::min_perimeter(n).p;
        for s in &sets {
            assert!(sets.contains(&s.transpose()), "n={n}");
            assert_eq!(edge_boundary_size(s), p);
            assert!(!has_gaps(s), "optimal sets are gap-free");
        }
    }
}

#[test]
fn partition_witnesses_rescore() {
    let budget = OracleBudget::default();
    for n in 1..=30 {
        let r = oracle::min_perimeter_partitions(n, true, &budget, Exec::Sequential).unwrap();
        assert!(oracle::witnesses_rescore(&r));
        assert_eq!(r.p, optimizer::min_perimeter(n).p);
        for w in &r.witnesses {
            assert!(matches!(w, Witness::Profile(_)));
        }
    }
}

#[test]
fn exhaustive_matches_optimizer() {
    let budget = OracleBudget::default();
    let table = oracle::exhaustive_table(10, &budget, Exec::Parallel).unwrap();
    let p: Vec<u64> = (1..=10).map(|n| optimizer::min_perimeter(n).p).collect();
    assert_eq!(table, p);
}

#[test]
fn chains_through_small_volumes() {
    let budget = OracleBudget::default();
    let r = oracle::nested_chain_analysis(8, &budget, Exec::Sequential).unwrap();
    assert_eq!(r.chains_exist_to, 8);
    assert_eq!(r.best_chain_perimeters, r.optimal_perimeters);
    for (i, w) in r.representative_chain.windows(2).enumerate() {
        assert!(w[0].is_subset(&w[1]), "step {i}");
    }
}

#[test]
fn budget_limits_apply() {
    let tight = OracleBudget::parse("partitions=5,exhaustive=4").unwrap();
    assert!(matches!(
        oracle::min_perimeter_exhaustive(5, false, &tight, Exec::Sequential),
        Err(Error::BudgetExceeded { n: 5, limit: 4, .. })
    ));
    assert!(oracle::min_perimeter_partitions(5, false, &tight, Exec::Sequential).is_ok());
    assert!(oracle::min_perimeter_partitions(6, false, &tight, Exec::Sequential).is_err());
}
