//! Exact invariants of knots presented as grid diagrams.
//!
//! The crate enumerates diagonal grid diagrams (all O's on the
//! top-left to bottom-right diagonal), computes the tau invariant of
//! diagonal knots through the J pairing, computes Alexander polynomials
//! through the winding-number (minesweeper) determinant, and simplifies
//! diagrams with knot-preserving grid moves.

pub mod alexander;
pub mod cli;
pub mod enumerator;
pub mod grid;
pub mod simplifier;
pub mod tau;

pub use alexander::{
    alexander_polynomial, minesweeper_det, winding_numbers, AlexanderError, LaurentPolynomial,
    WindingGrid,
};
pub use grid::{
    diagonal_from_x, torus_grid, validate, Block, Crossing, GridDiagram, GridError, Marking,
};
pub use tau::{
    pair_count_j, tau_diagonal, tau_generator, HalfPoint, TauError, WeightedPointConfig,
};
