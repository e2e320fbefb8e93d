#![allow(clippy::result_large_err)]

//! Exact log-Futaki invariants of toric Fano surfaces.
//!
//! Everything here is computed in exact rational arithmetic:
//!
//! - [`geometry`]: rationals, points, convex polygons, lattice enumeration.
//! - [`toric`]: reflexive polygons, divisor supports and the built-in catalog.
//! - [`stability`]: the toric log-Futaki line, feasible cone-angle intervals,
//!   the invariant `R(M)` and the optimal toric cone-angle bound.

pub mod error;
pub mod geometry;
pub mod stability;
pub mod toric;

pub use error::{Error, Result};
pub use geometry::{
    convex_hull, int, rat, Hull, Location, Polygon, RatPoint, Rational, Unimodular,
};
pub use stability::{
    beta_interval, brute_force_threshold, futaki_line, log_futaki, q_membership, q_point,
    r_invariant, stability_threshold, BetaInterval, FutakiLine, OracleResult, ThresholdReport,
};
pub use toric::{catalog, lookup, CatalogEntry, DivisorSupport, SupportWarning, ToricFano};
