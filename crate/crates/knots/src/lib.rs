//! Computational knot theory: Gauss-diagram Vassiliev invariants v2/v3,
//! exact Jones/HOMFLY/Conway polynomials, Seifert data, Vogel braiding,
//! reduction and loop moves, and positivity obstruction batteries.

pub mod build;
pub mod codes;
pub mod error;
pub mod fixtures;
pub mod gauss;
pub mod moves;
pub mod planar;
pub mod positivity;
pub mod poly;
pub mod surfaces;
pub mod vassiliev;

pub use error::KnotError;
