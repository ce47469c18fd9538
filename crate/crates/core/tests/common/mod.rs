#![allow(dead_code)]

use std::path::PathBuf;

use num_traits::{One, Zero};
use rand::Rng;
use resgraph::graph::{CurveVertex, ResolutionGraph};
use resgraph::Rational;

pub fn fixture(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "fixtures", name].iter().collect();
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

/// Determinant by cofactor expansion along the first row. Exponential, but
/// shares nothing with the elimination code under test.
pub fn laplace_det(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    if n == 0 {
        return Rational::one();
    }
    let mut total = Rational::zero();
    for col in 0..n {
        if m[0][col].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Rational>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(j, _)| j != col).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &m[0][col] * laplace_det(&minor);
        if col % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Sylvester's criterion with cofactor-expansion minors.
pub fn sylvester_oracle(m: &[Vec<Rational>]) -> bool {
    (1..=m.len()).all(|k| {
        let block: Vec<Vec<Rational>> = m[..k].iter().map(|r| r[..k].to_vec()).collect();
        laplace_det(&block) > Rational::zero()
    })
}

/// Connected graph on `n` vertices: a random spanning tree plus random extra
/// intersections, genus in `0..=max_genus`, self-intersection in
/// `min_e..=-1`, multiplicities in `1..=max_mult`.
pub fn random_connected_graph(
    rng: &mut impl Rng,
    n: usize,
    max_genus: u32,
    min_e: i64,
    max_mult: u32,
) -> ResolutionGraph {
    let vertices = (0..n)
        .map(|i| CurveVertex::new(format!("E{i}"), rng.gen_range(0..=max_genus), rng.gen_range(min_e..=-1)))
        .collect();
    let mut edges = Vec::new();
    for i in 1..n {
        edges.push((rng.gen_range(0..i), i, rng.gen_range(1..=max_mult)));
    }
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(0.15) {
                edges.push((i, j, 1));
            }
        }
    }
    ResolutionGraph::from_parts(vertices, edges).expect("generated graph is valid")
}

/// Intersection numbers `Z · E_i` straight from the graph data.
pub fn products(g: &ResolutionGraph, z: &[i64]) -> Vec<i64> {
    let mut out: Vec<i64> = g.vertices().iter().zip(z).map(|(v, c)| v.self_intersection * c).collect();
    for e in g.edges() {
        let m = i64::from(e.multiplicity);
        out[e.a] += m * z[e.b];
        out[e.b] += m * z[e.a];
    }
    out
}

/// Coefficient-wise minimum of all nonzero effective anti-nef cycles in
/// `[0, bound]^n`, found by enumeration. `None` if there are none.
pub fn brute_force_fundamental_cycle(g: &ResolutionGraph, bound: i64) -> Option<Vec<i64>> {
    let n = g.len();
    let mut z = vec![0i64; n];
    let mut best: Option<Vec<i64>> = None;
    loop {
        let mut i = n;
        loop {
            if i == 0 {
                return best;
            }
            i -= 1;
            if z[i] < bound {
                z[i] += 1;
                break;
            }
            z[i] = 0;
        }
        if products(g, &z).iter().all(|&p| p <= 0) {
            best = Some(match best {
                None => z.clone(),
                Some(b) => b.iter().zip(&z).map(|(x, y)| *x.min(y)).collect(),
            });
        }
    }
}

/// `χ = −(Z·Z + Z·K)/2` from the graph data, with `K·E_i = −e_i + 2g_i − 2`.
pub fn chi_oracle(g: &ResolutionGraph, z: &[i64]) -> i64 {
    let zz: i64 = products(g, z).iter().zip(z).map(|(p, c)| p * c).sum();
    let zk: i64 =
        g.vertices().iter().zip(z).map(|(v, c)| c * (-v.self_intersection + 2 * i64::from(v.genus) - 2)).sum();
    assert_eq!((zz + zk) % 2, 0);
    -(zz + zk) / 2
}
