//! Equivariant combinatorial Euler characteristics of simplicial complexes
//! with group actions, K-theory of boundary crossed products via Gysin
//! sequences, and an exact-rational verifier for the finite geometry behind
//! the combinatorial dual construction.
//!
//! The crate is organised around the pipeline
//!
//! ```text
//! complexes ──> chain complexes ──> Smith normal form ──> (co)homology, K-groups
//!      │                                                        │
//!      └── group actions ──> equivariant Euler decomposition ───┴──> Gysin solver
//! ```
//!
//! with a separate [`dual`] layer that verifies, over exact rationals, the
//! piecewise-linear region lemmas used by the dual construction.
//!
//! See the `examples/` directory for one runnable example per capability,
//! and the `gysinkit` binary for the JSON-speaking command-line front end.

pub mod action;
pub mod builders;
pub mod complex;
pub mod dual;
pub mod error;
pub mod exactness;
pub mod gysin;
pub mod io;
pub mod ktheory;
pub mod linalg;
pub mod report;

pub use error::{Error, Result};
