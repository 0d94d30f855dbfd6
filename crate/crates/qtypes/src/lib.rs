//! Exact computation of orders of contact and q-type invariants.
//!
//! This crate computes, in exact arithmetic over the Gaussian rationals, the
//! finite-type invariants that measure how closely complex-analytic data
//! hugs a point: vanishing orders of pullbacks along holomorphic curve
//! germs, the multiplicity `dim O/I` of a local ring quotient via Mora
//! standard bases, the D'Angelo 1-type with certified bounds, the q-type
//! family obtained by adjoining generic linear forms (seeded random
//! slicing), and the Catlin q-type estimated through cylinder varieties
//! swept along witness curves.
//!
//! Start with the runnable programs under `examples/`; the `qtypes` binary
//! exposes the same operations on text input files, and `verify` replays the
//! inequality and equality laws relating the invariants over built-in
//! corpora.

pub mod catlin;
pub mod contact;
pub mod error;
pub mod ideal;
pub mod linalg;
pub mod local;
pub mod oracle;
pub mod parse;
pub mod poly;
pub mod report;
pub mod sampler;
pub mod scalar;
pub mod series;
pub mod session;
pub mod types;
pub mod value;

pub use error::{Error, Result};
pub use ideal::IdealPresentation;
pub use poly::PolyC;
pub use scalar::GaussianRational;
pub use series::{UniPoly, UniSeries};
pub use value::ExtendedRational;
