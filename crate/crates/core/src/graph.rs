//! Dual resolution graphs, cycles and intersection matrices.
//!
//! A [`ResolutionGraph`] has one vertex per exceptional curve, weighted by
//! genus and self-intersection, and one edge per pair of curves that meet.
//! Vertex order is declaration order and fixes the row/column order of every
//! matrix and vector derived from the graph.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Index};

use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::rational::{int, Rational};

/// One exceptional curve: name, genus `g_i` and self-intersection `E_i²`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CurveVertex {
    pub name: String,
    pub genus: u32,
    pub self_intersection: i64,
}

impl CurveVertex {
    pub fn new(name: impl Into<String>, genus: u32, self_intersection: i64) -> Self {
        CurveVertex { name: name.into(), genus, self_intersection }
    }
}

/// Intersection of two distinct curves, stored by vertex index with `a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub multiplicity: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionGraph {
    vertices: Vec<CurveVertex>,
    edges: Vec<Edge>,
}

/// Incremental constructor for [`ResolutionGraph`]. Repeated edges between
/// the same pair add up their multiplicities.
#[derive(Debug, Default, Clone)]
pub struct GraphBuilder {
    vertices: Vec<CurveVertex>,
    index: HashMap<String, usize>,
    edges: Vec<Edge>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex(
        &mut self,
        name: impl Into<String>,
        genus: u32,
        self_intersection: i64,
    ) -> Result<&mut Self, GraphError> {
        let name = name.into();
        if self.index.contains_key(&name) {
            return Err(GraphError::DuplicateVertex(name));
        }
        self.index.insert(name.clone(), self.vertices.len());
        self.vertices.push(CurveVertex { name, genus, self_intersection });
        Ok(self)
    }

    pub fn edge(&mut self, a: &str, b: &str, multiplicity: u32) -> Result<&mut Self, GraphError> {
        let ia = *self.index.get(a).ok_or_else(|| GraphError::UnknownVertex(a.to_owned()))?;
        let ib = *self.index.get(b).ok_or_else(|| GraphError::UnknownVertex(b.to_owned()))?;
        self.edge_by_index(ia, ib, multiplicity)
    }

    pub fn edge_by_index(&mut self, a: usize, b: usize, multiplicity: u32) -> Result<&mut Self, GraphError> {
        let n = self.vertices.len();
        for i in [a, b] {
            if i >= n {
                return Err(GraphError::UnknownVertex(format!("#{i}")));
            }
        }
        if a == b {
            return Err(GraphError::SelfLoop(self.vertices[a].name.clone()));
        }
        if multiplicity == 0 {
            return Err(GraphError::ZeroMultiplicity(self.vertices[a].name.clone(), self.vertices[b].name.clone()));
        }
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        match self.edges.iter_mut().find(|e| e.a == a && e.b == b) {
            Some(e) => e.multiplicity += multiplicity,
            None => self.edges.push(Edge { a, b, multiplicity }),
        }
        Ok(self)
    }

    pub fn build(&self) -> Result<ResolutionGraph, GraphError> {
        if self.vertices.is_empty() {
            return Err(GraphError::Empty);
        }
        Ok(ResolutionGraph { vertices: self.vertices.clone(), edges: self.edges.clone() })
    }
}

impl ResolutionGraph {
    /// Builds a graph from vertices and `(a, b, multiplicity)` index triples.
    pub fn from_parts(
        vertices: Vec<CurveVertex>,
        edges: impl IntoIterator<Item = (usize, usize, u32)>,
    ) -> Result<Self, GraphError> {
        let mut b = GraphBuilder::new();
        for v in vertices {
            b.vertex(v.name, v.genus, v.self_intersection)?;
        }
        for (x, y, m) in edges {
            b.edge_by_index(x, y, m)?;
        }
        b.build()
    }

    /// Star with a genus-0 center of self-intersection `center` joined once to
    /// `leaves.len()` genus-0 leaves. Names are `C0`, `C1`, ...
    pub fn star(center: i64, leaves: &[i64]) -> Self {
        let mut vertices = vec![CurveVertex::new("C0", 0, center)];
        vertices.extend(leaves.iter().enumerate().map(|(i, &e)| CurveVertex::new(format!("C{}", i + 1), 0, e)));
        Self::from_parts(vertices, (1..=leaves.len()).map(|i| (0, i, 1))).expect("star graphs are well formed")
    }

    /// The family `A_{g,d}`: a (−2)-center with `g + 3` leaves of
    /// self-intersection `−d`.
    pub fn star_family(genus: u32, d: i64) -> Self {
        Self::star(-2, &vec![-d; genus as usize + 3])
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[CurveVertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.name == name)
    }

    /// `(neighbor, multiplicity)` pairs of vertex `i`.
    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.edges.iter().filter_map(move |e| {
            if e.a == i {
                Some((e.b, e.multiplicity))
            } else if e.b == i {
                Some((e.a, e.multiplicity))
            } else {
                None
            }
        })
    }

    /// Connected-component label for each vertex, labels numbered in order
    /// of first appearance.
    pub fn component_labels(&self) -> Vec<usize> {
        self.component_labels_within(&vec![true; self.len()])
    }

    /// Component labels of the subgraph induced by `mask`; vertices outside
    /// the mask get `usize::MAX`.
    fn component_labels_within(&self, mask: &[bool]) -> Vec<usize> {
        let n = self.len();
        let mut label = vec![usize::MAX; n];
        let mut next = 0;
        for start in 0..n {
            if !mask[start] || label[start] != usize::MAX {
                continue;
            }
            label[start] = next;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for (w, _) in self.neighbors(v) {
                    if mask[w] && label[w] == usize::MAX {
                        label[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        label
    }

    pub fn component_count(&self) -> usize {
        self.component_labels().into_iter().max().map_or(0, |m| m + 1)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// Whether the support of `z` (vertices with nonzero coefficient) is
    /// nonempty and induces a connected subgraph.
    pub fn is_support_connected(&self, z: &Cycle) -> bool {
        let mask: Vec<bool> = z.coefficients().iter().map(|&c| c != 0).collect();
        let labels = self.component_labels_within(&mask);
        let mut seen = labels.iter().filter(|&&l| l != usize::MAX);
        match seen.next() {
            None => false,
            Some(&first) => seen.all(|&l| l == first),
        }
    }

    /// Relabels vertices: vertex `perm[i]` of `self` becomes vertex `i`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.len(), "permutation length");
        let mut inverse = vec![usize::MAX; perm.len()];
        for (new, &old) in perm.iter().enumerate() {
            inverse[old] = new;
        }
        let vertices = perm.iter().map(|&old| self.vertices[old].clone()).collect();
        Self::from_parts(vertices, self.edges.iter().map(|e| (inverse[e.a], inverse[e.b], e.multiplicity)))
            .expect("permutation of a valid graph")
    }

    /// The graph with vertex `i` replaced (genus and self-intersection).
    pub fn with_vertex(&self, i: usize, genus: u32, self_intersection: i64) -> Self {
        let mut g = self.clone();
        g.vertices[i].genus = genus;
        g.vertices[i].self_intersection = self_intersection;
        g
    }

    /// The graph with one more intersection point between `a` and `b`.
    pub fn with_extra_edge(&self, a: usize, b: usize) -> Result<Self, GraphError> {
        Self::from_parts(
            self.vertices.clone(),
            self.edges.iter().map(|e| (e.a, e.b, e.multiplicity)).chain([(a, b, 1)]),
        )
    }
}

/// Symmetric integer matrix `(E_i · E_j)` of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntersectionMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl IntersectionMatrix {
    /// Builds from rows, checking the shape, symmetry and sign invariants.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self, GraphError> {
        let n = rows.len();
        for row in rows {
            if row.len() != n {
                return Err(GraphError::DimensionMismatch { expected: n, found: row.len() });
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && (rows[i][j] < 0 || rows[i][j] != rows[j][i]) {
                    return Err(GraphError::InvalidMatrix { row: i, col: j });
                }
            }
        }
        Ok(IntersectionMatrix { n, entries: rows.concat() })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.n).map(<[i64]>::to_vec).collect()
    }

    pub fn negated(&self) -> Self {
        IntersectionMatrix { n: self.n, entries: self.entries.iter().map(|x| -x).collect() }
    }

    pub fn to_rational_rows(&self) -> Vec<Vec<Rational>> {
        self.entries.chunks(self.n).map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    /// `A · z`.
    pub fn apply(&self, z: &Cycle) -> Result<Vec<i64>, GraphError> {
        check_dim(self.n, z.len())?;
        Ok(self.entries.chunks(self.n).map(|row| row.iter().zip(z.coefficients()).map(|(a, c)| a * c).sum()).collect())
    }
}

impl fmt::Display for IntersectionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.entries.iter().map(|x| x.to_string().len()).max().unwrap_or(1);
        for row in self.entries.chunks(self.n) {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>width$}")).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Integer combination `Σ z_i E_i` in vertex order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Cycle(Vec<i64>);

impl Cycle {
    pub fn new(coefficients: Vec<i64>) -> Self {
        Cycle(coefficients)
    }

    pub fn zero(n: usize) -> Self {
        Cycle(vec![0; n])
    }

    /// `Σ E_i`, the reduced cycle with full support.
    pub fn reduced(n: usize) -> Self {
        Cycle(vec![1; n])
    }

    /// The single curve `E_i` in a graph with `n` vertices.
    pub fn basis(n: usize, i: usize) -> Self {
        let mut c = vec![0; n];
        c[i] = 1;
        Cycle(c)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.0
    }

    pub fn is_effective(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_nonzero(&self) -> bool {
        self.0.iter().any(|&c| c != 0)
    }

    /// Coefficient-wise `self ≤ other`.
    pub fn le(&self, other: &Cycle) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `Red Z`: coefficient 1 on the support, 0 elsewhere.
    pub fn support(&self) -> Cycle {
        Cycle(self.0.iter().map(|&c| i64::from(c != 0)).collect())
    }

    pub fn add_curve(&mut self, i: usize) {
        self.0[i] += 1;
    }
}

impl Index<usize> for Cycle {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl Add for &Cycle {
    type Output = Cycle;
    fn add(self, rhs: &Cycle) -> Cycle {
        assert_eq!(self.len(), rhs.len(), "cycle length mismatch");
        Cycle(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn check_dim(expected: usize, found: usize) -> Result<(), GraphError> {
    if expected == found {
        Ok(())
    } else {
        Err(GraphError::DimensionMismatch { expected, found })
    }
}

/// Intersection matrix of `g`: self-intersections on the diagonal, edge
/// multiplicities off it.
pub fn build_matrix(g: &ResolutionGraph) -> IntersectionMatrix {
    let n = g.len();
    let mut entries = vec![0; n * n];
    for (i, v) in g.vertices.iter().enumerate() {
        entries[i * n + i] = v.self_intersection;
    }
    for e in &g.edges {
        entries[e.a * n + e.b] += i64::from(e.multiplicity);
        entries[e.b * n + e.a] += i64::from(e.multiplicity);
    }
    IntersectionMatrix { n, entries }
}

/// The bilinear form `z1ᵀ A z2`.
pub fn intersect(z1: &Cycle, z2: &Cycle, a: &IntersectionMatrix) -> Result<i64, GraphError> {
    check_dim(a.dim(), z1.len())?;
    let az2 = a.apply(z2)?;
    Ok(z1.coefficients().iter().zip(az2).map(|(x, y)| x * y).sum())
}

/// `K · E_i = −E_i² + 2 g_i − 2` for each vertex, by adjunction.
pub fn canonical_vector(g: &ResolutionGraph) -> Vec<i64> {
    g.vertices.iter().map(|v| -v.self_intersection + 2 * i64::from(v.genus) - 2).collect()
}
