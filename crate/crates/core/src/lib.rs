//! Certification of genuine multipartite entanglement for few-qubit states.
//!
//! A density matrix that cannot be written as a mixture of states, each of
//! which is positive under partial transposition (PPT) across some
//! bipartition, is genuinely multipartite entangled. Membership in the set of
//! such *PPT mixtures* is decided by a semidefinite program over fully
//! decomposable entanglement witnesses; the same program, with the witness
//! normalization swapped for operator bounds, yields a computable
//! entanglement monotone that reduces to the negativity for two parties.
//!
//! The crate bundles:
//!
//! * [`linalg`] — dense complex linear algebra on tensor-product spaces
//!   (partial transpose/trace, Hermitian eigensolver, Schmidt coefficients,
//!   Pauli strings),
//! * [`states`] — reference states (GHZ, W, Dicke, linear cluster, graph
//!   bases) plus seeded Hilbert–Schmidt and Bures sampling,
//! * [`sdp`] — a block-diagonal primal-dual interior-point solver,
//! * [`witness`] — the witness search in its fully decomposable, fully PPT,
//!   restricted-observable and monotone variants, white-noise tolerances and
//!   volume estimation,
//! * [`cluster`] — analytic fully decomposable witnesses for linear cluster
//!   states of arbitrary size, with machine-checked decompositions,
//! * [`bisep`] — inner approximations that *prove* three-qubit
//!   biseparability,
//! * [`io`] — versioned JSON formats for states, witnesses and
//!   decompositions.

pub mod bisep;
pub mod cluster;
pub mod error;
pub mod io;
pub mod linalg;
pub mod sdp;
pub mod states;
pub mod witness;

pub use error::{Error, Result};
