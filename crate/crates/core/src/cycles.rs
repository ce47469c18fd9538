//! Invariants of cycles supported on the exceptional set: anti-nefness, the
//! Euler characteristic `χ(O_Z)`, the fundamental cycle, minimal ellipticity,
//! rationality and a lower bound for the geometric genus.

use crate::error::AnalysisError;
use crate::graph::{build_matrix, canonical_vector, intersect, Cycle, IntersectionMatrix, ResolutionGraph};
use crate::linalg::{is_negative_definite, SymmetricMatrix};

/// Step cap for the Laufer sequence.
pub const LAUFER_ITERATION_CAP: usize = 1_000_000;

/// Default cap on the number of cycles enumerated by the minimal
/// ellipticity test.
pub const DEFAULT_BOX_LIMIT: u128 = 10_000_000;

/// `Z · E_i ≤ 0` for every vertex.
pub fn is_antinef(z: &Cycle, g: &ResolutionGraph) -> Result<bool, AnalysisError> {
    let az = build_matrix(g).apply(z)?;
    Ok(az.iter().all(|&x| x <= 0))
}

/// `χ(O_Z) = −(Z·Z + Z·K) / 2`.
pub fn chi(z: &Cycle, g: &ResolutionGraph) -> Result<i64, AnalysisError> {
    chi_with(z, &build_matrix(g), &canonical_vector(g))
}

fn chi_with(z: &Cycle, a: &IntersectionMatrix, k: &[i64]) -> Result<i64, AnalysisError> {
    if !z.is_effective() {
        return Err(AnalysisError::NotEffective);
    }
    let zz = intersect(z, z, a)?;
    let zk: i64 = z.coefficients().iter().zip(k).map(|(c, k)| c * k).sum();
    let s = zz + zk;
    if s % 2 != 0 {
        return Err(AnalysisError::ParityViolation(s));
    }
    Ok(-s / 2)
}

/// Rejects graphs without a fundamental cycle.
pub fn check_contractible(g: &ResolutionGraph) -> Result<(), AnalysisError> {
    if !g.is_connected() {
        return Err(AnalysisError::Disconnected);
    }
    if !is_negative_definite(&SymmetricMatrix::from(&build_matrix(g))) {
        return Err(AnalysisError::NotContractible);
    }
    Ok(())
}

/// The minimal nonzero effective anti-nef cycle, by the Laufer sequence:
/// start from `Σ E_i` and add `E_i` while `Z · E_i > 0`, always taking the
/// smallest such index.
pub fn fundamental_cycle(g: &ResolutionGraph) -> Result<Cycle, AnalysisError> {
    let order: Vec<usize> = (0..g.len()).collect();
    fundamental_cycle_with_order(g, &order)
}

/// Same as [`fundamental_cycle`] but ties are broken by the first vertex in
/// `order` that violates anti-nefness. The result does not depend on `order`.
pub fn fundamental_cycle_with_order(g: &ResolutionGraph, order: &[usize]) -> Result<Cycle, AnalysisError> {
    check_contractible(g)?;
    if order.len() != g.len() {
        return Err(AnalysisError::Graph(crate::error::GraphError::DimensionMismatch {
            expected: g.len(),
            found: order.len(),
        }));
    }
    let a = build_matrix(g);
    let start = Cycle::reduced(g.len());
    laufer_from(&a, start, order, |_, _| true)
}

/// Runs the Laufer sequence from `z`, only adding curves `i` accepted by
/// `allow(i, &z)`. Returns the first cycle where no allowed curve has
/// positive intersection.
fn laufer_from(
    a: &IntersectionMatrix,
    mut z: Cycle,
    order: &[usize],
    allow: impl Fn(usize, &Cycle) -> bool,
) -> Result<Cycle, AnalysisError> {
    let n = a.dim();
    let mut az = a.apply(&z)?;
    for _ in 0..LAUFER_ITERATION_CAP {
        let Some(&i) = order.iter().find(|&&i| az[i] > 0 && allow(i, &z)) else {
            return Ok(z);
        };
        z.add_curve(i);
        for (j, x) in az.iter_mut().enumerate().take(n) {
            *x += a.get(j, i);
        }
    }
    Err(AnalysisError::IterationLimit(LAUFER_ITERATION_CAP))
}

/// Odometer over the box `∏ [0, bound_i]` in lexicographic order, last
/// coordinate fastest.
#[derive(Debug, Clone)]
pub struct CycleBox {
    bound: Vec<i64>,
    next: Option<Vec<i64>>,
}

impl CycleBox {
    pub fn new(bound: &Cycle) -> Self {
        let next = bound.is_effective().then(|| vec![0; bound.len()]);
        CycleBox { bound: bound.coefficients().to_vec(), next }
    }

    /// Number of cycles in the box.
    pub fn size(bound: &Cycle) -> u128 {
        bound.coefficients().iter().map(|&c| c.max(-1) as u128 + 1).product()
    }
}

impl Iterator for CycleBox {
    type Item = Cycle;

    fn next(&mut self) -> Option<Cycle> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        for i in (0..succ.len()).rev() {
            if succ[i] < self.bound[i] {
                succ[i] += 1;
                self.next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(Cycle::new(current))
    }
}

/// Outcome of the exhaustive minimal ellipticity test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EllipticityCheck {
    pub fundamental_cycle: Cycle,
    pub chi_fundamental: i64,
    /// Number of cycles `0 < Z' < Z` examined; zero when `χ(Z) ≠ 0` made the
    /// enumeration unnecessary.
    pub subcycles_checked: u64,
    /// Minimum of `χ(Z')` over the examined subcycles.
    pub min_subcycle_chi: Option<i64>,
    pub minimally_elliptic: bool,
}

/// Exhaustive test that `χ(Z) = 0` and `χ(Z') > 0` for all `0 < Z' < Z`,
/// where `Z` is the fundamental cycle.
pub fn check_minimally_elliptic(g: &ResolutionGraph, box_limit: u128) -> Result<EllipticityCheck, AnalysisError> {
    let z = fundamental_cycle(g)?;
    let a = build_matrix(g);
    let k = canonical_vector(g);
    let chi_z = chi_with(&z, &a, &k)?;
    let mut check = EllipticityCheck {
        fundamental_cycle: z.clone(),
        chi_fundamental: chi_z,
        subcycles_checked: 0,
        min_subcycle_chi: None,
        minimally_elliptic: false,
    };
    if chi_z != 0 {
        return Ok(check);
    }
    let size = CycleBox::size(&z);
    if size > box_limit {
        return Err(AnalysisError::BoxTooLarge { size, limit: box_limit });
    }
    let mut all_positive = true;
    for sub in CycleBox::new(&z).filter(|c| c.is_nonzero() && *c != z) {
        let c = chi_with(&sub, &a, &k)?;
        check.subcycles_checked += 1;
        check.min_subcycle_chi = Some(check.min_subcycle_chi.map_or(c, |m| m.min(c)));
        all_positive &= c > 0;
    }
    check.minimally_elliptic = all_positive;
    Ok(check)
}

pub fn is_minimally_elliptic(g: &ResolutionGraph) -> Result<bool, AnalysisError> {
    check_minimally_elliptic(g, DEFAULT_BOX_LIMIT).map(|c| c.minimally_elliptic)
}

/// Artin's criterion: `χ(Z_fund) = 1`.
pub fn is_rational_singularity(g: &ResolutionGraph) -> Result<bool, AnalysisError> {
    Ok(chi(&fundamental_cycle(g)?, g)? == 1)
}

/// Whether `Z` is reached from `Red Z` by adding one curve `E_i` at a time
/// with `Z_k · E_i > 0` before each step. Each such step has
/// `H⁰(O_{E_i}(−Z_k)) = 0`, so `h⁰(O_Z) = h⁰(O_{Red Z})`, which is 1 when the
/// support is connected.
pub fn has_computation_sequence(g: &ResolutionGraph, z: &Cycle) -> Result<bool, AnalysisError> {
    let a = build_matrix(g);
    let order: Vec<usize> = (0..g.len()).collect();
    // Adding a curve never lowers Z·E_j for j ≠ i, so greedy reaches Z
    // whenever any valid sequence does.
    let end = laufer_from(&a, z.support(), &order, |i, cur| cur[i] < z[i])?;
    Ok(&end == z)
}

/// `h¹(O_Z) = 1 − χ(Z)`, a lower bound for the geometric genus. Requires
/// `h⁰(O_Z) = 1`, certified by a connected support and a computation
/// sequence from `Red Z` (see [`has_computation_sequence`]).
pub fn pg_lower_bound(g: &ResolutionGraph, z: &Cycle) -> Result<u64, AnalysisError> {
    if !z.is_effective() {
        return Err(AnalysisError::NotEffective);
    }
    if z.len() != g.len() {
        return Err(AnalysisError::Graph(crate::error::GraphError::DimensionMismatch {
            expected: g.len(),
            found: z.len(),
        }));
    }
    if !z.is_nonzero() {
        return Err(AnalysisError::PreconditionViolation("cycle is zero".into()));
    }
    if !g.is_support_connected(z) {
        return Err(AnalysisError::PreconditionViolation("support is disconnected".into()));
    }
    if !has_computation_sequence(g, z)? {
        return Err(AnalysisError::PreconditionViolation(
            "no computation sequence from Red Z, h0(O_Z) = 1 not certified".into(),
        ));
    }
    let c = chi(z, g)?;
    Ok((1 - c).max(0) as u64)
}
