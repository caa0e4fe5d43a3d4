//! Multi-objective test problems with controllable weak Pareto boundaries
//! (WPBs), quantification of the dominance resistance those boundaries
//! induce, and a small evolutionary engine for measuring how selection
//! schemes are hindered by them.
//!
//! The crate is organized as follows:
//!
//! - [`types`] and [`dominance`]: objective-space primitives and relations.
//! - [`problems`]: two scalable test-problem generators, the case-study
//!   front family, and the EMOP/MOPW instance catalogs.
//! - [`wpb`]: WPB categories, dense boundary samples, distances, and
//!   dominance-resistant-solution counting.
//! - [`volume`]: the enclosed volume behind a reference point (the proxy for
//!   the degree of dominance resistance), by exact polytope decomposition,
//!   Monte Carlo rejection, closed-form limits, and a scalarization integral.
//! - [`metrics`]: hypervolume, IGD, and baseline construction.
//! - [`evolve`]: SBX/PM variation with Pareto-, cone-, and
//!   decomposition-based selection.
//! - [`regress`]: Lasso polynomial fits of volume-distance curves.

pub mod dominance;
pub mod error;
pub mod evolve;
pub mod lattice;
pub mod metrics;
pub mod problems;
pub mod regress;
pub mod types;
pub mod volume;
pub mod wpb;

pub use error::{Error, Result};
pub use types::{FrontBounds, IndexSet, ObjectiveVector, Solution};
