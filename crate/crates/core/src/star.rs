//! The star family `A_{g,d}`: a (−2)-curve meeting `g + 3` disjoint
//! (−d)-curves, all rational.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{build_matrix, ResolutionGraph};
use crate::linalg::{is_negative_definite, verify_certificate, SymmetricMatrix};
use crate::rational::{int, Rational};

/// `v = (g + 2, 1, …, 1)`, a positivity certificate for `−A_{g,d}` once
/// `d ≥ g + 3`.
pub fn star_certificate(genus: u32) -> Vec<Rational> {
    let mut v = vec![int(i64::from(genus) + 2)];
    v.extend(std::iter::repeat_n(int(1), genus as usize + 3));
    v
}

/// Whether `−A_{g,d}` passes [`verify_certificate`] with [`star_certificate`].
pub fn star_certificate_holds(genus: u32, d: i64) -> bool {
    let a = SymmetricMatrix::from(&build_matrix(&ResolutionGraph::star_family(genus, d))).neg();
    verify_certificate(&a, &star_certificate(genus)).expect("−A_{g,d} has non-positive off-diagonal")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StarSearch {
    pub genus: u32,
    /// Smallest `d` with `A_{g,d}` negative definite.
    pub minimal_d: i64,
    /// Whether the certificate `(g + 2, 1, …, 1)` already works at `minimal_d`.
    pub certificate_at_minimal: bool,
    /// The sufficient bound `g + 3`.
    pub certificate_bound: i64,
    pub negative_definite_at_bound: bool,
    pub certificate_at_bound: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("max_d must be at least 1")]
    InvalidRange,
    #[error("no d in [1, {max_d}] makes A_{{{genus},d}} negative definite")]
    NotFound { genus: u32, max_d: i64 },
}

/// Scans `d = 1, …, max_d` with the exact Sylvester test.
pub fn search_star(genus: u32, max_d: i64) -> Result<StarSearch, SearchError> {
    if max_d < 1 {
        return Err(SearchError::InvalidRange);
    }
    let nd = |d| is_negative_definite(&SymmetricMatrix::from(&build_matrix(&ResolutionGraph::star_family(genus, d))));
    let minimal_d = (1..=max_d).find(|&d| nd(d)).ok_or(SearchError::NotFound { genus, max_d })?;
    let bound = i64::from(genus) + 3;
    Ok(StarSearch {
        genus,
        minimal_d,
        certificate_at_minimal: star_certificate_holds(genus, minimal_d),
        certificate_bound: bound,
        negative_definite_at_bound: nd(bound),
        certificate_at_bound: star_certificate_holds(genus, bound),
    })
}
