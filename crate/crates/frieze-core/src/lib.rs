//! Exact-arithmetic library for two kinds of brick-wall number patterns:
//! additive tilings (zero boundary rows, each diamond satisfying
//! `(b + c) - (a + d) = 1`) and multiplicative friezes (boundary rows of
//! ones, each diamond satisfying `bc - ad = 1`).
//!
//! Everything rational is computed exactly over arbitrary-precision
//! fractions, so structural laws (integrality, positivity, closure,
//! periodicity) are decided by strict equality rather than tolerances.
//! The only floating-point surface is the constant frieze built from
//! regular-polygon diagonal lengths.
//!
//! Module map:
//! - [`rational`]: the exact scalar, its text syntax, triangular numbers
//! - [`periodic`]: periodic sequences and rotation equivalence
//! - [`additive`]: additive tilings (first rows, grids, growth, recovery)
//! - [`multiplicative`]: friezes (quiddities, grids, continuants, growth)
//! - [`triangulation`]: convex-polygon triangulations and the
//!   quiddity correspondence in both directions
//! - [`infinite`]: downward propagation of a frieze row under a row of
//!   ones, and the bounded conjecture search
//! - [`document`]: the `.frieze.json` document format and scan reports
//! - [`render`]: deterministic ASCII brick-wall rendering

pub mod additive;
pub mod document;
pub mod infinite;
pub mod multiplicative;
pub mod periodic;
pub mod rational;
pub mod render;
pub mod triangulation;

pub use additive::{AdditiveTiling, FirstRow, ValidationReport};
pub use document::{TilingDocument, TilingKind};
pub use infinite::{InfiniteSeed, PropagationReport, ScanSummary};
pub use multiplicative::{Frieze, Quiddity};
pub use periodic::PeriodicSeq;
pub use rational::{triangular, Rational};
pub use triangulation::Triangulation;
