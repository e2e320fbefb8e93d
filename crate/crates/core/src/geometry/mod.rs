//! Exact rational plane geometry.

mod lattice;
mod point;
mod polygon;
mod rational;

pub use lattice::{primitive, Unimodular};
pub use point::RatPoint;
pub use polygon::{convex_hull, support_value, Hull, Location, Polygon};
pub use rational::{int, parse_rational, rat, Rational};
