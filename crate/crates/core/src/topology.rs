//! Topology of the exceptional curve read off its dual graph.

use crate::error::AnalysisError;
use crate::graph::{build_matrix, ResolutionGraph};
use crate::linalg::{is_negative_definite, SymmetricMatrix};

/// First Betti number of the dual graph, counting an edge of multiplicity `m`
/// as `m` parallel edges: `Σ m − n + #components`.
pub fn first_betti(g: &ResolutionGraph) -> u64 {
    let nodes: u64 = g.edges().iter().map(|e| u64::from(e.multiplicity)).sum();
    nodes + g.component_count() as u64 - g.len() as u64
}

/// `h¹(C, O_C) = Σ g_i + #Sing C − n + 1` for a connected SNC curve `C`,
/// summed over components otherwise.
pub fn h1_structure_sheaf(g: &ResolutionGraph) -> u64 {
    let genera: u64 = g.vertices().iter().map(|v| u64::from(v.genus)).sum();
    genera + first_betti(g)
}

/// Connected, all components rational, every intersection a single transverse
/// point and no cycles in the dual graph.
pub fn is_rational_tree(g: &ResolutionGraph) -> bool {
    g.is_connected()
        && g.vertices().iter().all(|v| v.genus == 0)
        && g.edges().iter().all(|e| e.multiplicity == 1)
        && g.edges().len() + 1 == g.len()
}

/// The link of the singularity is a rational homology sphere exactly when the
/// exceptional set is a tree of rational curves.
pub fn is_qhs_link(g: &ResolutionGraph) -> Result<bool, AnalysisError> {
    if !is_negative_definite(&SymmetricMatrix::from(&build_matrix(g))) {
        return Err(AnalysisError::NotContractible);
    }
    Ok(is_rational_tree(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::CurveVertex;

    fn cycle_of_three() -> ResolutionGraph {
        ResolutionGraph::from_parts(
            (0..3).map(|i| CurveVertex::new(format!("E{i}"), 0, -3)).collect(),
            [(0, 1, 1), (1, 2, 1), (0, 2, 1)],
        )
        .unwrap()
    }

    fn single(genus: u32, e: i64) -> ResolutionGraph {
        ResolutionGraph::from_parts(vec![CurveVertex::new("E", genus, e)], []).unwrap()
    }

    #[test]
    fn betti_examples() {
        assert_eq!(first_betti(&ResolutionGraph::star(-2, &[-3; 4])), 0);
        assert_eq!(first_betti(&cycle_of_three()), 1);
        let double =
            ResolutionGraph::from_parts(vec![CurveVertex::new("A", 0, -3), CurveVertex::new("B", 0, -3)], [(0, 1, 2)])
                .unwrap();
        assert_eq!(first_betti(&double), 1);
        assert!(!is_rational_tree(&double));
    }

    #[test]
    fn h1_examples() {
        assert_eq!(h1_structure_sheaf(&ResolutionGraph::star_family(4, 7)), 0);
        assert_eq!(h1_structure_sheaf(&single(1, -1)), 1);
        assert_eq!(h1_structure_sheaf(&cycle_of_three()), 1);
    }

    #[test]
    fn rational_tree_examples() {
        assert!(is_rational_tree(&ResolutionGraph::star(-2, &[-3; 4])));
        assert!(is_rational_tree(&ResolutionGraph::star_family(2, 5)));
        assert!(!is_rational_tree(&single(1, -1)));
        assert!(!is_rational_tree(&cycle_of_three()));
    }

    #[test]
    fn qhs_link_examples() {
        assert_eq!(is_qhs_link(&ResolutionGraph::star(-2, &[-3; 4])), Ok(true));
        for g in 0..=5u32 {
            for d in i64::from(g) + 3..i64::from(g) + 6 {
                assert_eq!(is_qhs_link(&ResolutionGraph::star_family(g, d)), Ok(true));
            }
        }
        assert_eq!(is_qhs_link(&single(1, -1)), Ok(false));
        assert_eq!(is_qhs_link(&single(0, 1)), Err(AnalysisError::NotContractible));
    }
}
