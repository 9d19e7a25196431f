#![forbid(unsafe_code)]
//! Exact computation and exhaustive verification of extremal Randic-index
//! structure on connected graphs with a fixed cyclomatic number.
//!
//! The crate provides:
//!
//! * [`graph`] — a small simple-graph type (n <= 64) with degree statistics,
//!   connectivity, and cyclomatic number;
//! * [`graph6`] — bit-exact graph6 encoding and decoding;
//! * [`canon`] — canonical labeling by partition refinement with automorphism
//!   discovery, used for isomorph rejection everywhere else;
//! * [`radical`] — exact arithmetic on numbers of the form `sum q_s * sqrt(s)`
//!   with rational `q_s` and squarefree `s`, with certified sign decisions;
//! * [`randic`] — the Randic index, exact and floating, plus closed-form
//!   values of the extremal families;
//! * [`transform`] — the five local rewritings (T1..T5) with site detection
//!   and exact Randic deltas;
//! * [`family`] — parameterized extremal families: signatures, membership,
//!   and explicit constructions;
//! * [`enumerate`] — isomorph-free exhaustive generation by canonical edge
//!   augmentation;
//! * [`verify`] — the claim harness: exhaustive extremal searches, degree
//!   identities, transformation monotonicity probes, and reports.

pub mod canon;
pub mod enumerate;
pub mod family;
pub mod graph;
pub mod graph6;
pub mod radical;
pub mod randic;
pub mod transform;
pub mod verify;

pub use graph::{DegreeProfile, EdgeTypeSignature, Graph, GraphError};
pub use radical::RadicalValue;
