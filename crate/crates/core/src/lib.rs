//! Triangle detection, listing and counting on undirected simple graphs.
//!
//! * [`graph`]: CSR graphs with an optional bit-packed adjacency matrix,
//!   degeneracy peeling and summary statistics.
//! * [`triangles`]: exact listing (edge iterator, vertex iterator, spanning
//!   forest rounds, matrix, degree split), `K_ℓ` listing and a brute-force oracle.
//! * [`approx`]: sampling estimator of the triangle count, generic over the
//!   floating-point type.
//! * [`independent`]: greedy independent sets and the independent-set-or-triangle
//!   dichotomy.
//! * [`generators`]: extremal constructions with exact count certificates, and
//!   seeded random graphs.

pub mod approx;
pub mod combinatorics;
pub mod error;
pub mod generators;
pub mod graph;
pub mod independent;
pub mod io;
pub mod triangles;

pub use error::{Error, Result};
pub use graph::{Graph, GraphStats, DEFAULT_MATRIX_BUDGET};
pub use independent::{Dichotomy, IsOrTriangleResult};
pub use triangles::{Algorithm, CliqueTuple, ListingReport, Triangle};

/// Estimator parameters in double precision.
pub type ApproxParams = approx::ApproxParams<f64>;
/// Estimator output in double precision.
pub type ApproxResult = approx::ApproxResult<f64>;
/// Estimator parameters in single precision.
pub type ApproxParamsF32 = approx::ApproxParams<f32>;
/// Estimator output in single precision.
pub type ApproxResultF32 = approx::ApproxResult<f32>;
