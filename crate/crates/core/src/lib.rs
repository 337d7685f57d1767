//! Spectral solver for the quantized three-particle Calogero model.
//!
//! The relative motion separates into an angular problem on the circle with
//! six inverse-square singularities and a radial problem on the half line.
//! Self-adjointness leaves a family of D6-symmetric boundary conditions
//! U(alpha, beta); this crate computes the complete quantized spectrum for
//! any of them, classifies eigenstates under D6, detects impermissible
//! boundary conditions (negative angular eigenvalues make the energy
//! unbounded below), and validates itself against the four exactly
//! solvable cases.

pub mod angular;
pub mod error;
pub mod quad;
pub mod roots;
pub mod specfun;
pub mod symmetry;

pub use error::{Error, Result};
