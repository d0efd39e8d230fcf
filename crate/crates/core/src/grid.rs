//! Geometry of the quadrant king graph.
//!
//! Vertices are lattice points `(x, y)` with `x, y >= 0`; two points are
//! adjacent iff their max-norm distance is exactly 1. The axes act as walls:
//! edges that would leave the quadrant do not exist and cost nothing.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const KING_STEPS: [(i64, i64); 8] = [
    (1, 0),
    (-1, 0),
    (0, 1),
    (0, -1),
    (1, 1),
    (-1, -1),
    (1, -1),
    (-1, 1),
];

/// A lattice point of the quadrant. Column 1 of a profile sits at `x = 0`.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize,
)]
pub struct Cell {
    pub x: u32,
    pub y: u32,
}

impl Cell {
    pub const fn new(x: u32, y: u32) -> Self {
        Cell { x, y }
    }

    /// Offset by `(dx, dy)`, or `None` if the result leaves the quadrant.
    pub fn offset(self, dx: i64, dy: i64) -> Option<Cell> {
        let x = u32::try_from(i64::from(self.x) + dx).ok()?;
        let y = u32::try_from(i64::from(self.y) + dy).ok()?;
        Some(Cell { x, y })
    }

    /// King-move neighbours inside the quadrant: 3 at the corner, 5 on an
    /// axis, 8 in the interior.
    pub fn neighbors(self) -> impl Iterator<Item = Cell> {
        KING_STEPS
            .iter()
            .filter_map(move |&(dx, dy)| self.offset(dx, dy))
    }

    /// Number of in-quadrant neighbours.
    pub fn degree(self) -> u64 {
        match (self.x == 0, self.y == 0) {
            (true, true) => 3,
            (true, false) | (false, true) => 5,
            (false, false) => 8,
        }
    }

    pub fn transpose(self) -> Cell {
        Cell {
            x: self.y,
            y: self.x,
        }
    }
}

impl From<(u32, u32)> for Cell {
    fn from((x, y): (u32, u32)) -> Self {
        Cell { x, y }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Boundary edges split by geometric direction.
///
/// An unordered edge between `(x, y)` and `(x+1, y+1)` is `diagonal`; one
/// between `(x, y)` and `(x+1, y-1)` is `anti_diagonal`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct DirectionCounts {
    pub horizontal: u64,
    pub vertical: u64,
    pub diagonal: u64,
    pub anti_diagonal: u64,
}

impl DirectionCounts {
    pub fn total(&self) -> u64 {
        self.horizontal + self.vertical + self.diagonal + self.anti_diagonal
    }
}

/// Direction class of the step `(dx, dy)`, one of the eight king moves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeClass {
    Horizontal,
    Vertical,
    Diagonal,
    AntiDiagonal,
}

impl EdgeClass {
    pub fn of_step(dx: i64, dy: i64) -> EdgeClass {
        if dy == 0 {
            EdgeClass::Horizontal
        } else if dx == 0 {
            EdgeClass::Vertical
        } else if dx == dy {
            EdgeClass::Diagonal
        } else {
            EdgeClass::AntiDiagonal
        }
    }
}

/// Count boundary edges of the set enumerated by `cells`, with membership
/// answered by `contains`. Each boundary edge has exactly one endpoint inside,
/// so counting outside neighbours per inside cell counts every edge once.
pub fn count_boundary<I, F>(cells: I, contains: F) -> u64
where
    I: IntoIterator<Item = Cell>,
    F: Fn(Cell) -> bool,
{
    cells
        .into_iter()
        .map(|cell| cell.neighbors().filter(|&nb| !contains(nb)).count() as u64)
        .sum()
}

/// A finite, duplicate-free set of cells with exact O(1) membership.
#[derive(Clone, Default)]
pub struct GridSet {
    sorted: Vec<Cell>,
    members: HashSet<Cell>,
}

impl GridSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_coords<I>(coords: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        coords.into_iter().map(Cell::from).collect()
    }

    pub fn volume(&self) -> u64 {
        self.sorted.len() as u64
    }

    pub fn is_empty(&self) -> bool {
        self.sorted.is_empty()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.members.contains(&cell)
    }

    /// Cells in `(x, y)` lexicographic order.
    pub fn cells(&self) -> &[Cell] {
        &self.sorted
    }

    pub fn insert(&mut self, cell: Cell) -> bool {
        if !self.members.insert(cell) {
            return false;
        }
        let at = self.sorted.binary_search(&cell).unwrap_err();
        self.sorted.insert(at, cell);
        true
    }

    pub fn with(&self, cell: Cell) -> GridSet {
        let mut out = self.clone();
        out.insert(cell);
        out
    }

    pub fn is_subset(&self, other: &GridSet) -> bool {
        self.volume() <= other.volume() && self.sorted.iter().all(|&c| other.contains(c))
    }

    /// Translate by `(dx, dy)`; `None` if any cell would leave the quadrant.
    pub fn translate(&self, dx: i64, dy: i64) -> Option<GridSet> {
        self.sorted
            .iter()
            .map(|c| c.offset(dx, dy))
            .collect::<Option<GridSet>>()
    }

    /// Reflection in the line `y = x`.
    pub fn transpose(&self) -> GridSet {
        self.sorted.iter().map(|c| c.transpose()).collect()
    }

    pub fn touches_x_axis(&self) -> bool {
        self.sorted.iter().any(|c| c.y == 0)
    }

    pub fn touches_y_axis(&self) -> bool {
        self.sorted.iter().any(|c| c.x == 0)
    }

    pub fn max_x(&self) -> Option<u32> {
        self.sorted.last().map(|c| c.x)
    }

    pub fn max_y(&self) -> Option<u32> {
        self.sorted.iter().map(|c| c.y).max()
    }

    /// Shift down and left until the set touches both axes.
    pub fn normalized(&self) -> GridSet {
        let min_x = self.sorted.iter().map(|c| c.x).min().unwrap_or(0);
        let min_y = self.sorted.iter().map(|c| c.y).min().unwrap_or(0);
        self.translate(-i64::from(min_x), -i64::from(min_y))
            .expect("shifting by the minimum stays in the quadrant")
    }

    pub fn coords(&self) -> Vec<(u32, u32)> {
        self.sorted.iter().map(|c| (c.x, c.y)).collect()
    }
}

impl PartialEq for GridSet {
    fn eq(&self, other: &Self) -> bool {
        self.sorted == other.sorted
    }
}

impl Eq for GridSet {}

impl std::hash::Hash for GridSet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.sorted.hash(state);
    }
}

impl PartialOrd for GridSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GridSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.sorted.cmp(&other.sorted)
    }
}

impl fmt::Debug for GridSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.sorted.iter()).finish()
    }
}

impl FromIterator<Cell> for GridSet {
    fn from_iter<I: IntoIterator<Item = Cell>>(iter: I) -> Self {
        let members: HashSet<Cell> = iter.into_iter().collect();
        let mut sorted: Vec<Cell> = members.iter().copied().collect();
        sorted.sort_unstable();
        GridSet { sorted, members }
    }
}

impl Serialize for GridSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coords().serialize(s)
    }
}

impl<'de> Deserialize<'de> for GridSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(GridSet::from_coords(Vec::<(u32, u32)>::deserialize(d)?))
    }
}

pub fn neighbors(p: Cell) -> Vec<Cell> {
    p.neighbors().collect()
}

/// Number of king-graph edges with exactly one endpoint in `set`.
pub fn edge_boundary_size(set: &GridSet) -> u64 {
    count_boundary(set.cells().iter().copied(), |c| set.contains(c))
}

pub fn boundary_by_direction(set: &GridSet) -> DirectionCounts {
    let mut counts = DirectionCounts::default();
    for &cell in set.cells() {
        for &(dx, dy) in &KING_STEPS {
            let Some(nb) = cell.offset(dx, dy) else {
                continue;
            };
            if set.contains(nb) {
                continue;
            }
            match EdgeClass::of_step(dx, dy) {
                EdgeClass::Horizontal => counts.horizontal += 1,
                EdgeClass::Vertical => counts.vertical += 1,
                EdgeClass::Diagonal => counts.diagonal += 1,
                EdgeClass::AntiDiagonal => counts.anti_diagonal += 1,
            }
        }
    }
    counts
}

/// True iff some missing point lies strictly below (j = 2) or strictly to the
/// left of (j = 1) a member on the same line.
pub fn has_gaps(set: &GridSet) -> bool {
    let mut rows: HashMap<u32, (u32, u64)> = HashMap::new();
    let mut cols: HashMap<u32, (u32, u64)> = HashMap::new();
    for c in set.cells() {
        let r = rows.entry(c.y).or_insert((0, 0));
        r.0 = r.0.max(c.x);
        r.1 += 1;
        let k = cols.entry(c.x).or_insert((0, 0));
        k.0 = k.0.max(c.y);
        k.1 += 1;
    }
    // A line is gap-free iff it is exactly {0, ..., max}.
    rows.values()
        .chain(cols.values())
        .any(|&(max, count)| u64::from(max) + 1 != count)
}

/// Non-increasing sequence of positive column heights (a Young diagram).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct ColumnProfile {
    heights: Vec<u32>,
}

impl ColumnProfile {
    pub fn new(heights: Vec<u32>) -> Result<Self> {
        if heights.contains(&0) {
            return Err(Error::NotAProfile(format!(
                "zero column height in {heights:?}"
            )));
        }
        if heights.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAProfile(format!(
                "increasing column heights in {heights:?}"
            )));
        }
        Ok(ColumnProfile { heights })
    }

    pub fn heights(&self) -> &[u32] {
        &self.heights
    }

    /// Number of columns `k`.
    pub fn columns(&self) -> usize {
        self.heights.len()
    }

    pub fn volume(&self) -> u64 {
        self.heights.iter().map(|&h| u64::from(h)).sum()
    }

    /// Height of the column at `x` (0 past the end).
    pub fn height_at(&self, x: u32) -> u32 {
        self.heights.get(x as usize).copied().unwrap_or(0)
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.y < self.height_at(cell.x)
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.heights
            .iter()
            .enumerate()
            .flat_map(|(x, &h)| (0..h).map(move |y| Cell::new(x as u32, y)))
    }

    /// The profile of the set reflected in `y = x` (conjugate partition).
    pub fn conjugate(&self) -> ColumnProfile {
        let rows = self.heights.first().copied().unwrap_or(0);
        let heights = (0..rows)
            .map(|y| self.heights.iter().take_while(|&&h| h > y).count() as u32)
            .collect();
        ColumnProfile { heights }
    }

    /// Direct neighbour-by-neighbour boundary count, membership by lookup.
    pub fn boundary_cellwise(&self) -> u64 {
        count_boundary(self.cells(), |c| self.contains(c))
    }

    /// Boundary count in O(k) from the column heights.
    ///
    /// Per column `x` (heights `h`, with `h = 0` past the end): one vertical
    /// edge on top, `h[x] - h[x+1]` horizontal edges to the right,
    /// `h[x] - max(0, h[x+1] - 1)` up-right diagonals, and towards the
    /// previous column one up-left edge when the heights tie plus
    /// `max(0, h[x-1] - 1 - h[x])` edges into the cliff.
    pub fn boundary(&self) -> u64 {
        let h = |i: usize| u64::from(self.heights.get(i).copied().unwrap_or(0));
        let k = self.heights.len();
        if k == 0 {
            return 0;
        }
        let vertical = k as u64;
        let horizontal = h(0);
        let up_right: u64 = (0..k).map(|x| h(x) - h(x + 1).saturating_sub(1)).sum();
        let up_left: u64 = (1..=k)
            .map(|x| u64::from(h(x - 1) == h(x)) + h(x - 1).saturating_sub(1 + h(x)))
            .sum();
        vertical + horizontal + up_right + up_left
    }
}

impl TryFrom<Vec<u32>> for ColumnProfile {
    type Error = Error;
    fn try_from(heights: Vec<u32>) -> Result<Self> {
        ColumnProfile::new(heights)
    }
}

impl From<ColumnProfile> for Vec<u32> {
    fn from(p: ColumnProfile) -> Vec<u32> {
        p.heights
    }
}

impl fmt::Display for ColumnProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, h) in self.heights.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{h}")?;
        }
        write!(f, ")")
    }
}

/// Column `t` (1-based) occupies `x = t - 1`, rows `0..h_t`.
pub fn profile_to_set(p: &ColumnProfile) -> GridSet {
    p.cells().collect()
}

pub fn set_to_profile(set: &GridSet) -> Result<ColumnProfile> {
    if has_gaps(set) {
        return Err(Error::NotAProfile(format!("set has gaps: {set:?}")));
    }
    let Some(max_x) = set.max_x() else {
        return Ok(ColumnProfile::default());
    };
    let mut heights = vec![0u32; max_x as usize + 1];
    for c in set.cells() {
        heights[c.x as usize] += 1;
    }
    ColumnProfile::new(heights)
}
