//! Sufficient conditions for Hamiltonicity and traceability of graphs and
//! bipartite graphs, checked against an exact oracle.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`], [`graph6`], [`family`], [`iso`]: representations, I/O and the
//!   named extremal families;
//! * [`spectral`]: `ρ(G)` and `q(G)` by power iteration plus a dense
//!   Jacobi cross-check;
//! * [`oracle`]: exact Hamiltonian cycle / path decision;
//! * [`conditions`]: one checker per sufficient condition, each returning a
//!   [`conditions::Verdict`];
//! * [`verify`]: exhaustive enumeration and soundness reports.

pub mod conditions;
pub mod error;
pub mod family;
pub mod graph;
pub mod graph6;
pub mod iso;
pub mod oracle;
pub mod spectral;
pub mod verify;

pub use error::{FamilyError, Graph6Error, GraphError, OracleError, SpectralError, VerifyError};
pub use family::{make_family, FamilyGraph, FamilyId};
pub use graph::{BipartiteGraph, DegreeSequence, Graph};
pub use graph6::{parse_graph6, write_graph6};
