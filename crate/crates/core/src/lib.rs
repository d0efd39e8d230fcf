//! Exact edge-isoperimetric solver for the quadrant grid ℕ² under king-move
//! (ℓ∞) adjacency.
//!
//! The crate is organised bottom-up:
//!
//! * [`grid`] holds cells, finite cell sets, column profiles and direct
//!   edge-boundary counting.
//! * [`canonical`] is the four-parameter family of optimal shapes and its
//!   closed-form perimeter, volume and column-count expressions.
//! * [`optimizer`] searches the family for the minimum perimeter `p(n)` and
//!   evaluates the analytic lower and upper bounds.
//! * [`oracle`] is independent brute force: integer partitions, exhaustive
//!   king-connected polyforms, and nested-chain analysis.
//! * [`analysis`] runs sequence-level studies over `p(n)`.
//! * [`verify`] bundles the acceptance checks used by the test suite and the
//!   `verify` subcommand.

pub mod analysis;
pub mod canonical;
mod error;
pub mod exec;
pub mod grid;
pub mod optimizer;
pub mod oracle;
pub mod verify;

pub use canonical::CanonicalShape;
pub use error::{Error, Result};
pub use exec::Exec;
pub use grid::{Cell, ColumnProfile, DirectionCounts, GridSet};
pub use optimizer::{BoundsPair, PerimeterResult};

