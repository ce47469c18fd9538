//! Exact analysis of dual resolution graphs of normal surface singularities.
//!
//! Given the weighted dual graph of a resolution (curves with genus and
//! self-intersection, joined by their intersection points) this crate decides
//! negative definiteness with a positivity certificate, computes the
//! fundamental cycle, Euler characteristics of cycles, discrepancies and the
//! resulting log canonical / log terminal / canonical class, and checks
//! whether the link is a rational homology sphere. A small blowup calculus
//! builds configurations from scripted point blowups.
//!
//! All arithmetic is exact: integers for intersection numbers and
//! arbitrary-precision rationals for linear algebra.

pub mod blowup;
pub mod classify;
pub mod cycles;
pub mod error;
pub mod format;
pub mod graph;
pub mod linalg;
pub mod rational;
pub mod star;
pub mod topology;

pub use classify::{full_report, Classification, DiscrepancyVector, SingularityReport};
pub use error::{AnalysisError, BlowupError, GraphError, LinalgError, NotFoundReason, ParseError};
pub use graph::{build_matrix, canonical_vector, intersect, CurveVertex, Cycle, IntersectionMatrix, ResolutionGraph};
pub use rational::Rational;
