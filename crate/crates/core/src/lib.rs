//! Exact computations for even Artin groups: presentations of co-cyclic
//! subgroups, Alexander matrices, ranks on torsion-translated tori and a
//! decision procedure for quasi-projectivity.
//!
//! Algebra is generic over [`Coeff`]. There is no floating-point
//! instantiation: ranks depend on exact zero tests and exact division.

pub mod alexander;
pub mod charvar;
pub mod error;
pub mod exactalg;
pub mod graph;
pub mod presentation;
pub mod qpdecide;

pub use exactalg::{Coeff, CycloNumber, FieldCoeff, Laurent, Monomial};

/// Laurent polynomials with integer coefficients.
pub type LaurentPoly = Laurent<num_bigint::BigInt>;
/// Laurent polynomials with rational coefficients.
pub type QLaurent = Laurent<num_rational::BigRational>;
/// Laurent polynomials over a cyclotomic field.
pub type CycloPoly = Laurent<CycloNumber>;
