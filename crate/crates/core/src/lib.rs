//! Exact `(q,t)`-weighted Ehrhart functions of flow polytopes of threshold
//! graphs, together with the spanning-tree, parking-function and Tutte
//! polynomial invariants they are compared against.
//!
//! All arithmetic is exact. Polynomial types are generic over the coefficient
//! ring; the aliases below fix it to [`BigInt`], which is what every
//! enumeration in this crate produces.

pub mod error;
pub mod flow;
pub mod graph;
pub mod poly;
pub mod tree;
pub mod verify;

use num_bigint::BigInt;

pub use error::{Error, Result};

/// Bivariate polynomial in `q, t` with unbounded integer coefficients.
pub type QTPolynomial = poly::QtPoly<BigInt>;

/// Laurent polynomial in `q` with unbounded integer coefficients.
pub type QLaurent = poly::LaurentPoly<BigInt>;

pub use flow::{ehrhart_qt, enumerate_flows, IntegerFlow, NetflowVector, TeslerMatrix};
pub use graph::{Dag, Multigraph, PosetPn, ThresholdGraph};
pub use tree::{ParkingFunction, SpanningTree};
