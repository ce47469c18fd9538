//! Acceptance criteria. Each test prints one `PASS`/`FAIL` line; run with
//! `cargo test -p resgraph --test acceptance -- --nocapture` to see them.

mod common;

use std::time::Instant;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use resgraph::blowup::run_script;
use resgraph::classify::{classify_discrepancies, discrepancies, is_numerically_gorenstein, Classification};
use resgraph::cycles::{
    check_minimally_elliptic, chi, fundamental_cycle, fundamental_cycle_with_order, pg_lower_bound, DEFAULT_BOX_LIMIT,
};
use resgraph::format::{parse_graph, parse_script};
use resgraph::graph::{build_matrix, canonical_vector, intersect, CurveVertex, Cycle, ResolutionGraph};
use resgraph::linalg::{
    find_certificate, is_negative_definite, is_positive_definite, is_positive_definite_ldlt, verify_certificate,
    RationalMatrix, SymmetricMatrix,
};
use resgraph::rational::{int, ratio};
use resgraph::star::{search_star, star_certificate};
use resgraph::topology::{h1_structure_sheaf, is_qhs_link, is_rational_tree};
use resgraph::Rational;

fn verdict(id: u32, name: &str, failures: &[String], detail: &str) {
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("[{status}] criterion {id}: {name} ({detail})");
    for f in failures.iter().take(10) {
        println!("        {f}");
    }
    assert!(failures.is_empty(), "criterion {id} failed with {} failure(s)", failures.len());
}

fn check(failures: &mut Vec<String>, ok: bool, what: impl Into<String>) {
    if !ok {
        failures.push(what.into());
    }
}

fn four_arm_star_matrix() -> Vec<Vec<i64>> {
    vec![vec![-2, 1, 1, 1, 1], vec![1, -3, 0, 0, 0], vec![1, 0, -3, 0, 0], vec![1, 0, 0, -3, 0], vec![1, 0, 0, 0, -3]]
}

#[test]
fn criterion_1_four_arm_star_golden() {
    let mut f = Vec::new();
    let g = parse_graph(&fixture("ex61.graph")).unwrap();
    let a = build_matrix(&g);
    check(&mut f, a.rows() == four_arm_star_matrix(), "matrix differs from the 5x5 star matrix");
    check(&mut f, is_negative_definite(&SymmetricMatrix::from(&a)), "not negative definite");

    let z = fundamental_cycle(&g).unwrap();
    check(&mut f, z == Cycle::new(vec![2, 1, 1, 1, 1]), format!("fundamental cycle {z}"));
    check(&mut f, chi(&z, &g) == Ok(0), "chi(Z) != 0");

    let ell = check_minimally_elliptic(&g, DEFAULT_BOX_LIMIT).unwrap();
    // Independent enumeration of 0 < Z' < Z.
    let mut proper = 0;
    for c0 in 0..=2 {
        for mask in 0..16u32 {
            let sub: Vec<i64> = std::iter::once(c0).chain((0..4).map(|i| i64::from((mask >> i) & 1))).collect();
            if sub.iter().all(|&c| c == 0) || sub == vec![2, 1, 1, 1, 1] {
                continue;
            }
            proper += 1;
            let c = chi(&Cycle::new(sub.clone()), &g).unwrap();
            check(&mut f, c >= 1, format!("chi({sub:?}) = {c}"));
            check(&mut f, c == chi_oracle(&g, &sub), "chi disagrees with oracle");
        }
    }
    check(&mut f, ell.minimally_elliptic, "not minimally elliptic");
    check(&mut f, ell.subcycles_checked == proper, "subcycle count mismatch");

    let disc = discrepancies(&g).unwrap();
    let expected: Vec<Rational> = [-2, -1, -1, -1, -1].into_iter().map(int).collect();
    check(&mut f, disc.values() == expected.as_slice(), "discrepancies differ");
    check(&mut f, classify_discrepancies(&disc) == Classification::NotLogCanonical, "classification");
    check(&mut f, is_numerically_gorenstein(&disc), "not numerically Gorenstein");
    check(&mut f, is_qhs_link(&g) == Ok(true), "link not QHS");
    check(&mut f, pg_lower_bound(&g, &z) == Ok(1), "pg bound != 1");
    verdict(
        1,
        "star of four (-3)-curves on a (-2)-curve: golden values",
        &f,
        &format!("{proper} proper subcycles enumerated, all chi >= 1"),
    );
}

#[test]
fn criterion_2_four_arm_star_construction() {
    let script = parse_script(&fixture("ex61.blowup")).unwrap();
    let g = run_script(&script).unwrap();
    let mut f = Vec::new();
    check(&mut f, build_matrix(&g).rows() == four_arm_star_matrix(), format!("blowup result:\n{}", build_matrix(&g)));
    verdict(2, "blowup script reproduces the 5x5 star matrix", &f, "exact");
}

#[test]
fn criterion_3_star_family() {
    let mut f = Vec::new();
    for genus in 0..=5u32 {
        let d = i64::from(genus) + 3;
        let g = parse_graph(&fixture(&format!("ex62_g{genus}_d{d}.graph"))).unwrap();
        assert_eq!(g, ResolutionGraph::star_family(genus, d));
        let a = SymmetricMatrix::from(&build_matrix(&g));
        check(&mut f, is_negative_definite(&a), format!("g={genus}: not negative definite"));

        let v = star_certificate(genus);
        let av = a.neg().matrix().mul_vec(&v).unwrap();
        let mut expected = vec![int(i64::from(genus) + 1)];
        expected.extend(std::iter::repeat_n(int(d - i64::from(genus) - 2), genus as usize + 3));
        check(&mut f, av == expected, format!("g={genus}: -A v = {av:?}"));
        check(&mut f, verify_certificate(&a.neg(), &v) == Ok(true), format!("g={genus}: certificate rejected"));

        let mut z = vec![2];
        z.extend(std::iter::repeat_n(1, genus as usize + 3));
        let z = Cycle::new(z);
        check(&mut f, chi(&z, &g) == Ok(1 - i64::from(genus)), format!("g={genus}: chi"));
        check(&mut f, pg_lower_bound(&g, &z) == Ok(u64::from(genus)), format!("g={genus}: pg bound"));
        check(&mut f, is_rational_tree(&g), format!("g={genus}: not a rational tree"));
    }
    verdict(3, "star family A_{g,g+3}, g = 0..5", &f, "exact");
}

fn random_rational(rng: &mut impl Rng, lo: i64, hi: i64) -> Rational {
    let den = rng.gen_range(1..=4);
    // Keep the value inside [lo, hi].
    let num = rng.gen_range(lo * den..=hi * den);
    ratio(num, den)
}

#[test]
fn criterion_4_positive_definiteness_criterion() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut f = Vec::new();
    let (mut pd_count, mut total) = (0, 0);
    while total < 1000 {
        let n = rng.gen_range(1..=6);
        let sparsity = rng.gen_range(0.2..0.9);
        let mut m = vec![vec![Rational::zero(); n]; n];
        for i in 0..n {
            // Mostly non-negative diagonals so both verdicts are well represented.
            m[i][i] =
                if rng.gen_bool(0.85) { random_rational(&mut rng, 0, 10) } else { random_rational(&mut rng, -10, 10) };
            for j in 0..i {
                if rng.gen_bool(sparsity) {
                    let x = random_rational(&mut rng, -10, 0);
                    m[i][j] = x.clone();
                    m[j][i] = x;
                }
            }
        }
        total += 1;
        let a = SymmetricMatrix::new(RationalMatrix::from_rows(m.clone()).unwrap()).unwrap();
        let sylvester = is_positive_definite(&a);
        let pivots = is_positive_definite_ldlt(&a);
        let oracle = sylvester_oracle(&m);
        let certified = match find_certificate(&a) {
            Ok(v) => verify_certificate(&a, &v).unwrap(),
            Err(_) => false,
        };
        pd_count += usize::from(sylvester);
        if !(sylvester == pivots && pivots == certified && certified == oracle) {
            f.push(format!("{m:?}: sylvester={sylvester} ldlt={pivots} cert={certified} oracle={oracle}"));
        }
    }
    check(&mut f, pd_count >= 100 && total - pd_count >= 100, format!("unbalanced sample: {pd_count} PD"));

    for _ in 0..200 {
        let n = rng.gen_range(1..=6);
        let mut m = vec![vec![Rational::zero(); n]; n];
        for i in 0..n {
            for j in 0..i {
                let x = random_rational(&mut rng, -10, 0);
                m[i][j] = x.clone();
                m[j][i] = x;
            }
        }
        for i in 0..n {
            let off: Rational = (0..n).filter(|&j| j != i).map(|j| -m[i][j].clone()).sum();
            m[i][i] = off + ratio(rng.gen_range(1..=40), 4);
        }
        let a = SymmetricMatrix::new(RationalMatrix::from_rows(m.clone()).unwrap()).unwrap();
        check(&mut f, is_positive_definite(&a), format!("diagonally dominant but rejected: {m:?}"));
    }
    verdict(
        4,
        "certificate <=> Sylvester <=> LDL^T, plus diagonal dominance",
        &f,
        &format!("1000 random matrices ({pd_count} positive definite), 200 dominant"),
    );
}

#[test]
fn criterion_5_fundamental_cycle_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut f = Vec::new();
    let (mut accepted, mut rejected_box) = (0, 0);
    while accepted < 200 {
        let n = rng.gen_range(1..=5);
        let g = random_connected_graph(&mut rng, n, 1, -5, 2);
        if !is_negative_definite(&SymmetricMatrix::from(&build_matrix(&g))) {
            continue;
        }
        let Some(brute) = brute_force_fundamental_cycle(&g, 6) else {
            rejected_box += 1;
            continue;
        };
        accepted += 1;
        let laufer = fundamental_cycle(&g).unwrap();
        check(&mut f, laufer.coefficients() == brute.as_slice(), format!("{g:?}: laufer {laufer} brute {brute:?}"));
        check(&mut f, products(&g, &brute).iter().all(|&p| p <= 0), "brute-force minimum is not anti-nef");
        for _ in 0..20 {
            let mut order: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                order.swap(i, rng.gen_range(0..=i));
            }
            let z = fundamental_cycle_with_order(&g, &order).unwrap();
            check(&mut f, z == laufer, format!("order {order:?} gave {z}"));
        }
    }
    verdict(
        5,
        "Laufer sequence = brute-force minimal anti-nef cycle, order independent",
        &f,
        &format!("200 graphs x 20 orders; {rejected_box} samples outside [0,6]^n skipped"),
    );
}

#[test]
fn criterion_6_rational_tree_characterization() {
    let mut f = Vec::new();
    let mut connected = 0;
    for n in 1..=4usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let edge_configs = 3usize.pow(pairs.len() as u32);
        for code in 0..edge_configs {
            let mut c = code;
            let mut edges = Vec::new();
            for &(i, j) in &pairs {
                let m = (c % 3) as u32;
                c /= 3;
                if m > 0 {
                    edges.push((i, j, m));
                }
            }
            for genus_mask in 0..(1u32 << n) {
                let vertices = (0..n).map(|i| CurveVertex::new(format!("E{i}"), (genus_mask >> i) & 1, -2)).collect();
                let g = ResolutionGraph::from_parts(vertices, edges.clone()).unwrap();
                if !g.is_connected() {
                    continue;
                }
                connected += 1;
                let lhs = h1_structure_sheaf(&g) == 0;
                let rhs = is_rational_tree(&g);
                check(&mut f, lhs == rhs, format!("n={n} edges={edges:?} genera={genus_mask:b}"));
            }
        }
    }
    verdict(6, "h1(O_C) = 0 <=> tree of rational curves", &f, &format!("{connected} connected graphs"));
}

#[test]
fn criterion_7_search_star() {
    let mut f = Vec::new();
    // Oracle: scan d with cofactor-expansion minors of -A_{g,d}.
    for (genus, expected) in [(0u32, 2i64), (1, 3)] {
        let oracle_d = (1..=10)
            .find(|&d| {
                let neg = build_matrix(&ResolutionGraph::star_family(genus, d)).negated();
                sylvester_oracle(&neg.to_rational_rows())
            })
            .unwrap();
        check(&mut f, oracle_d == expected, format!("oracle gives {oracle_d} for g={genus}"));
        let s = search_star(genus, 100).unwrap();
        check(&mut f, s.minimal_d == expected, format!("search gives {} for g={genus}", s.minimal_d));
    }
    for genus in 0..=10u32 {
        let d = i64::from(genus) + 3;
        let s = search_star(genus, 100).unwrap();
        check(&mut f, s.negative_definite_at_bound && s.certificate_at_bound, format!("g={genus}: bound fails"));
        // Leading minors of -A_{g,d}: 2, then d^(k-1) (2d - k) for k leaves.
        let minors = resgraph::linalg::leading_principal_minors(
            &SymmetricMatrix::from(&build_matrix(&ResolutionGraph::star_family(genus, d))).neg(),
        );
        for (k, m) in minors.iter().enumerate().skip(1) {
            let k = k as u32;
            let closed = int(d.pow(k - 1) * (2 * d - i64::from(k)));
            check(&mut f, *m == closed, format!("g={genus}: minor {k} = {m}"));
        }
    }
    verdict(7, "search-star minimal d and the g+3 bound", &f, "g=0 -> 2, g=1 -> 3, bound holds for g <= 10");
}

#[test]
fn criterion_8_riemann_roch_and_substitution() {
    let start = Instant::now();
    let mut f = Vec::new();
    let mut fixtures: Vec<ResolutionGraph> = vec![parse_graph(&fixture("ex61.graph")).unwrap()];
    for genus in 0..=5u32 {
        fixtures.push(parse_graph(&fixture(&format!("ex62_g{genus}_d{}.graph", genus + 3))).unwrap());
    }
    fixtures.push(run_script(&parse_script(&fixture("ex62_g2_d5.blowup")).unwrap()).unwrap());

    for g in &fixtures {
        let a = build_matrix(g);
        let disc = discrepancies(g).unwrap();
        let k: Vec<Rational> = canonical_vector(g).into_iter().map(int).collect();
        let ak = RationalMatrix::from(&a).mul_vec(disc.values()).unwrap();
        check(&mut f, ak == k, format!("A a != k for {:?}", g.vertices()));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for trial in 0..500 {
        let g = &fixtures[trial % fixtures.len()];
        let a = build_matrix(g);
        let draw = |rng: &mut ChaCha8Rng| Cycle::new((0..g.len()).map(|_| rng.gen_range(0..=4)).collect());
        let (z1, z2) = (draw(&mut rng), draw(&mut rng));
        let lhs = chi(&(&z1 + &z2), g).unwrap();
        let rhs = chi(&z1, g).unwrap() + chi(&z2, g).unwrap() - intersect(&z1, &z2, &a).unwrap();
        check(&mut f, lhs == rhs, format!("RR fails for {z1} + {z2}"));
    }
    verdict(
        8,
        "Riemann-Roch additivity and A a = k",
        &f,
        &format!("{} fixtures, 500 random cycle pairs, {:?}", fixtures.len(), start.elapsed()),
    );
}
