//! braidcalc — exact symbolic verification engine for q-deformed sphere
//! algebras, braided matrix groups and quantum differential calculi.
//!
//! Everything is computed exactly over rational functions in the deformation
//! parameters; there is no floating point anywhere.  The main layers are
//!
//! * [`scalar`] — the coefficient field: Gaussian-rational multivariate
//!   rational functions with canonical forms;
//! * [`expr`] — a small expression language for entering and printing
//!   algebra elements;
//! * [`freealg`] — noncommutative polynomial algebras presented by oriented
//!   rewrite rules, with confluence and homomorphism checking;
//! * [`rmatrix`] — exact R-matrices, Yang–Baxter and related identities, and
//!   relation generators driven by an R-matrix;
//! * [`hopf`] — matrix quantum groups: coquasitriangular structure,
//!   transmutation, cocycles and cotwisting;
//! * [`dga`] — graded differential calculi over the presented algebras;
//! * [`spheres`] — the sphere family: projectors, traces and the maps
//!   between the sphere presentations;
//! * [`bicross`] — the noncommutative-spacetime model: exact
//!   exponential-polynomial functions, partial derivatives and the wave
//!   operator;
//! * [`report`] and [`suites`] — the named check suites and their reports,
//!   as consumed by the CLI.

pub mod dga;
pub mod expr;
pub mod freealg;
pub mod rmatrix;
pub mod scalar;

pub use expr::{EvalScope, Expr, ExprError};
pub use freealg::{FreeAlgError, NcElement, Presentation, PresentationBuilder};
pub use scalar::{GaussRat, Scalar, ScalarError, Var};
