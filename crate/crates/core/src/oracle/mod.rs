//! Brute-force ground truth for `p(n)`.
//!
//! Two independent enumerations: all integer partitions of `n` (gap-free
//! sets), and all king-connected sets of `n` cells.

pub mod nested;
pub mod partitions;
pub mod polyform;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::grid::{edge_boundary_size, ColumnProfile, GridSet};

pub use nested::NestedChainReport;

/// Environment variable overriding [`OracleBudget`]. Accepts a bare integer
/// (both limits) or `partitions=P,exhaustive=E` with either key optional.
pub const BUDGET_ENV: &str = "GRIDPERIM_ORACLE_BUDGET";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleBudget {
    pub partitions: u64,
    pub exhaustive: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            partitions: 70,
            exhaustive: 11,
        }
    }
}

impl OracleBudget {
    pub fn parse(text: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("bad {BUDGET_ENV} value {text:?}"));
        let text = text.trim();
        if let Ok(n) = text.parse::<u64>() {
            return Ok(OracleBudget {
                partitions: n,
                exhaustive: n,
            });
        }
        let mut budget = OracleBudget::default();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item.split_once('=').ok_or_else(bad)?;
            let value: u64 = value.trim().parse().map_err(|_| bad())?;
            match key.trim() {
                "partitions" => budget.partitions = value,
                "exhaustive" => budget.exhaustive = value,
                _ => return Err(bad()),
            }
        }
        Ok(budget)
    }

    /// Read [`BUDGET_ENV`], falling back to the defaults when unset.
    pub fn from_env() -> Result<Self> {
        match std::env::var(BUDGET_ENV) {
            Ok(v) => OracleBudget::parse(&v),
            Err(_) => Ok(OracleBudget::default()),
        }
    }

    fn check(&self, mode: Mode, n: u64) -> Result<()> {
        let limit = match mode {
            Mode::Partitions => self.partitions,
            Mode::Exhaustive => self.exhaustive,
        };
        if n > limit {
            return Err(Error::BudgetExceeded {
                mode: mode.name(),
                n,
                limit,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Partitions,
    Exhaustive,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Partitions => "partitions",
            Mode::Exhaustive => "exhaustive",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Witness {
    Profile(ColumnProfile),
    Set(GridSet),
}

impl Witness {
    pub fn to_set(&self) -> GridSet {
        match self {
            Witness::Profile(p) => crate::grid::profile_to_set(p),
            Witness::Set(s) => s.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleResult {
    pub n: u64,
    pub p: u64,
    pub mode: Mode,
    pub witnesses: Vec<Witness>,
    /// Candidates scored: partitions, or connected sets of size `n`.
    pub candidates: u64,
}

pub fn min_perimeter_partitions(
    n: u64,
    all_witnesses: bool,
    budget: &OracleBudget,
    exec: Exec,
) -> Result<OracleResult> {
    if n == 0 {
        return Err(Error::InvalidArgument("volume must be positive".into()));
    }
    budget.check(Mode::Partitions, n)?;
    let scan = partitions::scan(n, all_witnesses, exec);
    Ok(OracleResult {
        n,
        p: scan.p,
        mode: Mode::Partitions,
        witnesses: scan.minimizers.into_iter().map(Witness::Profile).collect(),
        candidates: scan.candidates,
    })
}

fn exhaustive_census(n: u64, budget: &OracleBudget, exec: Exec) -> Result<polyform::Census> {
    if n == 0 {
        return Err(Error::InvalidArgument("volume must be positive".into()));
    }
    budget.check(Mode::Exhaustive, n)?;
    Ok(polyform::census(n as u32, true, exec))
}

fn to_sets(cells: &[Vec<(u32, u32)>]) -> Vec<GridSet> {
    cells.iter().map(|c| GridSet::from_coords(c.iter().copied())).collect()
}

/// Minimum perimeter over all king-connected sets of `n` cells, each placed
/// touching both axes.
pub fn min_perimeter_exhaustive(
    n: u64,
    all_witnesses: bool,
    budget: &OracleBudget,
    exec: Exec,
) -> Result<OracleResult> {
    let census = exhaustive_census(n, budget, exec)?;
    let entry = census.size(n as u32);
    let mut sets = to_sets(&entry.optimal);
    if !all_witnesses {
        sets.truncate(1);
    }
    Ok(OracleResult {
        n,
        p: entry.min_boundary,
        mode: Mode::Exhaustive,
        witnesses: sets.into_iter().map(Witness::Set).collect(),
        candidates: entry.count,
    })
}

/// Exhaustive minima for every volume `1..=max_n` from one enumeration.
pub fn exhaustive_table(max_n: u64, budget: &OracleBudget, exec: Exec) -> Result<Vec<u64>> {
    let census = exhaustive_census(max_n, budget, exec)?;
    Ok(census.sizes.iter().map(|s| s.min_boundary).collect())
}

/// All connected normalised sets of volume `n` reaching `p(n)`.
pub fn enumerate_optimal_sets(n: u64, budget: &OracleBudget, exec: Exec) -> Result<Vec<GridSet>> {
    let census = exhaustive_census(n, budget, exec)?;
    Ok(to_sets(&census.size(n as u32).optimal))
}

pub fn nested_chain_analysis(
    max_n: u64,
    budget: &OracleBudget,
    exec: Exec,
) -> Result<NestedChainReport> {
    let census = exhaustive_census(max_n, budget, exec)?;
    let optimal: Vec<Vec<GridSet>> = census.sizes.iter().map(|s| to_sets(&s.optimal)).collect();
    let perimeters: Vec<u64> = census.sizes.iter().map(|s| s.min_boundary).collect();
    Ok(nested::analyse(&optimal, &perimeters))
}

/// Splits `n = n1 + n2` (with `n1 <= n2`) where `p(n1) + p(n2) > p(n)` fails.
/// `table[i]` is `p(i + 1)`.
pub fn domination_violations(table: &[u64]) -> Vec<(u64, u64, u64)> {
    let p = |v: u64| table[v as usize - 1];
    let mut out = Vec::new();
    for n in 2..=table.len() as u64 {
        for n1 in 1..=n / 2 {
            if p(n1) + p(n - n1) <= p(n) {
                out.push((n, n1, n - n1));
            }
        }
    }
    out
}

/// Splits where even `p(n1) + p(n2) >= p(n)` fails.
pub fn weak_domination_violations(table: &[u64]) -> Vec<(u64, u64, u64)> {
    let p = |v: u64| table[v as usize - 1];
    let mut out = Vec::new();
    for n in 2..=table.len() as u64 {
        for n1 in 1..=n / 2 {
            if p(n1) + p(n - n1) < p(n) {
                out.push((n, n1, n - n1));
            }
        }
    }
    out
}

/// Re-score every witness with direct grid counting.
pub fn witnesses_rescore(result: &OracleResult) -> bool {
    result
        .witnesses
        .iter()
        .all(|w| {
            let set = w.to_set();
            set.volume() == result.n && edge_boundary_size(&set) == result.p
        })
}
