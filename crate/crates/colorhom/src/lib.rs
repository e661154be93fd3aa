//! Exact-arithmetic verification and construction engine for
//! finite-dimensional graded (color) Hom-algebras presented by structure
//! constants.
//!
//! The crate models a color Hom-algebra as a graded space over Q with a
//! family of even bilinear products, an even twisting map α and a sign
//! bicharacter ε. On top of that it provides:
//!
//! - a small DSL for multilinear identities ([`dsl`]), in which every axiom
//!   system handled here is expressed as data;
//! - a registry of built-in axiom suites ([`suites`]) covering
//!   Hom-associative, left-symmetric, dialgebra, Poisson, (tri)dendriform,
//!   Lie, post-Lie and Leibniz color structures;
//! - operator checks ([`operators`]): Rota-Baxter of any weight, Nijenhuis,
//!   averaging, centroid membership, and morphisms;
//! - the construction theorems relating these structures
//!   ([`constructions`]): tensor products, Rota-Baxter splittings,
//!   associative sums, commutator brackets, post-Lie structures, Yau
//!   twisting, derived algebras, and centroid twisting — each verifying its
//!   hypotheses before building and its conclusion after;
//! - brute-force operator search over small coefficient grids ([`search`]);
//! - a JSON document format with exact rational coefficients ([`document`]).
//!
//! Everything runs over arbitrary-precision rationals. A check either passes
//! on every basis tuple or reports the lexicographically first failing tuple
//! with its residual.

// error enums deliberately carry witness data (degrees, residual vectors)
#![allow(clippy::result_large_err)]

pub mod algebra;
pub mod constructions;
pub mod document;
pub mod dsl;
pub mod grading;
pub mod operators;
pub mod scalar;
pub mod search;
pub mod suites;

pub use algebra::{GradedSpace, HomAlgebra, LinearMap, Product, Vector};
pub use dsl::{parse_identity, CheckReport, IdentitySchema, Witness};
pub use grading::{Bicharacter, Degree, GradingGroup, Sign};
pub use scalar::Scalar;
pub use suites::{check_multiplicative, check_suite, SuiteReport};
