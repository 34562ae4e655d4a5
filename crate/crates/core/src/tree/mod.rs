//! Spanning trees and their inversion statistics, Tutte polynomials of
//! multigraphs, and `G`-parking functions.

mod parking;
mod spanning;
mod tutte;

pub use parking::{
    codeg_pmaj_series, enumerate_parking_functions, maximal_parking_functions, pmaj,
    ParkingFunction,
};
pub use spanning::{
    enumerate_spanning_trees, inversion_enumerator, inversion_enumerator_increasing, tree_weight,
    SpanningTree,
};
pub use tutte::tutte;
