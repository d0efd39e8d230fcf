//! The four-parameter family of candidate optimal sets.
//!
//! A shape `(a, c, k, last)` has `k` columns: the first `c` all of height `a`,
//! then heights `a-1, a-2, ...` down to column `k-1`, and a final column of
//! height `last`. Given `(a, c)` and the volume `n` the rest is determined.
//!
//! Closed forms here run on exact integers: square roots of the radicand
//! `1 + 8(C(a,2) - n + c*a)` go through `isqrt`, which commutes with the
//! surrounding ceiling and floor (see [`solve_k`]).

use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::ColumnProfile;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalShape {
    a: u64,
    c: u64,
    k: u64,
    last: u64,
}

impl CanonicalShape {
    pub fn new(a: u64, c: u64, k: u64, last: u64) -> Result<Self> {
        let bad = |reason| Err(Error::InvalidShape { a, c, k, last, reason });
        if a == 0 || c == 0 || k == 0 || last == 0 {
            return bad("parameters must be positive");
        }
        if c > k {
            return bad("more flat columns than columns");
        }
        if last > a {
            return bad("last column taller than the first");
        }
        if c == k && last != a {
            return bad("a fully flat shape has last = a");
        }
        if k >= c + 2 {
            if k - 1 - c >= a {
                return bad("staircase runs below height 1");
            }
            if last > a - (k - 1 - c) {
                return bad("last column taller than its predecessor");
            }
        }
        Ok(CanonicalShape { a, c, k, last })
    }

    /// Height of the first column, `|A_1|`.
    pub fn a(&self) -> u64 {
        self.a
    }

    /// Number of flat columns of height `a`.
    pub fn c(&self) -> u64 {
        self.c
    }

    /// Total number of columns.
    pub fn k(&self) -> u64 {
        self.k
    }

    /// Height of column `k`.
    pub fn last(&self) -> u64 {
        self.last
    }

    /// Height of column `t`, 1-based; 0 outside `1..=k`.
    pub fn height(&self, t: u64) -> u64 {
        match t {
            0 => 0,
            t if t > self.k => 0,
            t if t == self.k => self.last,
            t if t <= self.c => self.a,
            t => self.a - (t - self.c),
        }
    }

    /// `h_{k-1}`, undefined for a single column.
    pub fn penultimate_height(&self) -> Option<u64> {
        (self.k >= 2).then(|| self.height(self.k - 1))
    }

    pub fn expand(&self) -> ColumnProfile {
        let heights = (1..=self.k).map(|t| self.height(t) as u32).collect();
        ColumnProfile::new(heights).expect("valid shapes expand to non-increasing profiles")
    }

    /// `3a + 2c + k - 3`.
    pub fn perimeter_formula(&self) -> u64 {
        3 * self.a + 2 * self.c + self.k - 3
    }

    /// `(k-1)a + last - (k-c-1)(k-c)/2`.
    pub fn volume_formula(&self) -> u64 {
        let (a, c, k, last) = (
            self.a as i128,
            self.c as i128,
            self.k as i128,
            self.last as i128,
        );
        ((k - 1) * a + last - (k - c - 1) * (k - c) / 2) as u64
    }

    /// The regime where the perimeter formula's derivation holds term by
    /// term: at least two columns, the last one outside the flat block and
    /// strictly shorter than its predecessor.
    pub fn in_formula_regime(&self) -> bool {
        self.k >= 2
            && self.c < self.k
            && self
                .penultimate_height()
                .is_some_and(|h| self.last < h)
    }

    /// Whether [`perimeter_formula`](Self::perimeter_formula) equals the
    /// direct boundary count. Beyond [`in_formula_regime`](Self::in_formula_regime)
    /// this also covers single columns and fully flat blocks; it fails only
    /// when the last column ties a column outside the flat block, where the
    /// formula undercounts by 2.
    pub fn formula_exact(&self) -> bool {
        self.c == self.k || self.in_formula_regime()
    }

    pub fn with_last(&self, last: u64) -> Result<Self> {
        CanonicalShape::new(self.a, self.c, self.k, last)
    }

    /// Recognise a profile of canonical form.
    pub fn from_profile(p: &ColumnProfile) -> Result<Self> {
        let h = p.heights();
        let Some(&first) = h.first() else {
            return Err(Error::NotAProfile("empty profile".into()));
        };
        let a = u64::from(first);
        let k = h.len() as u64;
        let run = h.iter().take_while(|&&x| x == first).count() as u64;
        let c = if run == k { k } else { run };
        for t in (c + 1)..k {
            if u64::from(h[(t - 1) as usize]) + (t - c) != a {
                return Err(Error::NotAProfile(format!(
                    "{p} does not step down by one after the flat block"
                )));
            }
        }
        CanonicalShape::new(a, c, k, u64::from(h[(k - 1) as usize]))
    }

    /// Reflect in `y = x` and re-stack into canonical form.
    ///
    /// The reflected set has `a` columns and first height `k`; moving cells
    /// from its last column onto the run of height `k-1` yields the shape
    /// with first height `k` and `a + c - k` flat columns. When those
    /// parameters are infeasible the plain reflection is used if it is
    /// already canonical, then the reflection re-stacked with its own flat
    /// run kept. A shape none of these fit is returned unchanged.
    pub fn reflect(&self) -> Self {
        let n = self.volume_formula();
        if self.a + self.c > self.k {
            if let Ok(s) = build_shape(self.k, self.a + self.c - self.k, n) {
                return s;
            }
        }
        let conjugate = self.expand().conjugate();
        if let Ok(s) = CanonicalShape::from_profile(&conjugate) {
            return s;
        }
        let h = conjugate.heights();
        let run = h.iter().take_while(|&&x| x == h[0]).count() as u64;
        build_shape(self.k, run, n).unwrap_or(*self)
    }
}

fn binom2(a: u64) -> u64 {
    a * a.saturating_sub(1) / 2
}

/// `1 + 8(C(a,2) - n + c*a)`, which equals `(2a-1)^2 - 8(n - c*a)`.
pub fn radicand(a: u64, c: u64, n: u64) -> i128 {
    1 + 8 * (binom2(a) as i128 - n as i128 + (c as i128) * (a as i128))
}

fn check_feasible(a: u64, c: u64, n: u64) -> Result<()> {
    let no = |reason| Err(Error::Infeasible { a, c, n, reason });
    if n == 0 || a == 0 || c == 0 {
        return no("parameters must be positive");
    }
    if a > n {
        return no("first column taller than the volume");
    }
    if c > a {
        return no("more flat columns than the first height");
    }
    if c * a > n {
        return no("flat block alone exceeds the volume");
    }
    if radicand(a, c, n) < 0 {
        return no("staircase cannot hold the volume");
    }
    Ok(())
}

/// Feasible flat-column counts for first height `a`:
/// `max(1, ceil((n - C(a,2))/a)) <= c <= min(a, n/a)`.
pub fn feasible_c_range(a: u64, n: u64) -> Option<RangeInclusive<u64>> {
    if a == 0 || a > n {
        return None;
    }
    let lo = n.saturating_sub(binom2(a)).div_ceil(a).max(1);
    let hi = a.min(n / a);
    (lo <= hi).then_some(lo..=hi)
}

/// Column count `k = ceil((2a - 1 - sqrt(R))/2) + c`.
///
/// With `s = isqrt(R)` the real root lies in `[s, s+1)`, and the ceiling of
/// `(2a - 1 - sqrt(R))/2` over that interval is `ceil((2a - 1 - s)/2)`, so the
/// integer root gives the exact result.
pub fn solve_k(a: u64, c: u64, n: u64) -> Result<u64> {
    check_feasible(a, c, n)?;
    let s = (radicand(a, c, n) as u128).isqrt() as u64;
    // R <= (2a-1)^2 under feasibility.
    let m = 2 * a - 1 - s;
    Ok(m.div_ceil(2) + c)
}

pub fn build_shape(a: u64, c: u64, n: u64) -> Result<CanonicalShape> {
    let k = solve_k(a, c, n)?;
    let (ai, ci, ki) = (a as i128, c as i128, k as i128);
    let last = n as i128 + (ki - ci - 1) * (ki - ci) / 2 - (ki - 1) * ai;
    if last < 1 {
        return Err(Error::Infeasible {
            a,
            c,
            n,
            reason: "derived last column is empty",
        });
    }
    let shape = CanonicalShape::new(a, c, k, last as u64).map_err(|_| Error::Infeasible {
        a,
        c,
        n,
        reason: "derived last column out of bounds",
    })?;
    debug_assert_eq!(shape.volume_formula(), n);
    Ok(shape)
}

/// `4a + 3c - 3 - floor((1 + sqrt(R))/2)`; equal to the perimeter formula of
/// [`build_shape`]`(a, c, n)`.
pub fn objective(a: u64, c: u64, n: u64) -> Result<u64> {
    check_feasible(a, c, n)?;
    let s = (radicand(a, c, n) as u128).isqrt() as u64;
    // floor((1 + s)/2)
    Ok(4 * a + 3 * c - 3 - s.div_ceil(2))
}
