//! Exact enumeration workbench for the 8VSOS model with domain-wall boundary
//! conditions and a diagonal reflecting end.
//!
//! * [`lattice`] enumerates states and their three-color statistics.
//! * [`algebra`] supplies exact rationals, polynomials and rational functions.
//! * [`tpoly`] evaluates the symmetric determinant polynomial `T` and
//!   recovers `p_{n-1}(z)` from it.
//! * [`pn`] recovers the same polynomial from three-color counts.
//! * [`theta`] evaluates theta functions, model weights and partition
//!   functions numerically.
//! * [`cli`] is the batch front end behind the `ice-colors` binary.

pub mod algebra;
pub mod cli;
pub mod lattice;
pub mod pn;
pub mod theta;
pub mod tpoly;
