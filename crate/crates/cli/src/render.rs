use std::fmt::Write as _;

use resgraph::classify::ReportFlags;
use resgraph::rational::to_exact_string;
use resgraph::{Cycle, ResolutionGraph, SingularityReport};

/// `2 C0 + C1 + …`, or `0` for the zero cycle.
pub fn cycle(g: &ResolutionGraph, z: &Cycle) -> String {
    let terms: Vec<String> = g
        .vertices()
        .iter()
        .zip(z.coefficients())
        .filter(|(_, &c)| c != 0)
        .map(|(v, &c)| if c == 1 { v.name.clone() } else { format!("{c} {}", v.name) })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

pub fn flags(f: &ReportFlags) -> String {
    let mut out = String::new();
    let entries = [
        ("rational", f.rational),
        ("minimally elliptic", f.minimally_elliptic),
        ("canonical", f.canonical),
        ("log terminal", f.log_terminal),
        ("log canonical", f.log_canonical),
        ("numerically Gorenstein", f.numerically_gorenstein),
    ];
    for (name, value) in entries {
        if let Some(v) = value {
            writeln!(out, "  {name}: {v}").unwrap();
        }
    }
    out
}

pub fn report(r: &SingularityReport) -> String {
    let mut out = String::new();
    writeln!(out, "vertices: {}", r.vertices.join(" ")).unwrap();
    writeln!(out, "intersection matrix:").unwrap();
    let width = r.matrix.iter().flatten().map(|x| x.to_string().len()).max().unwrap_or(1);
    for row in &r.matrix {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>width$}")).collect();
        writeln!(out, "  {}", cells.join(" ")).unwrap();
    }
    writeln!(out, "negative definite: {}", r.negative_definite).unwrap();
    if let Some(v) = &r.certificate {
        let v: Vec<String> = v.iter().map(to_exact_string).collect();
        writeln!(out, "certificate for -A: ({})", v.join(", ")).unwrap();
    }
    if let Some(z) = &r.fundamental_cycle {
        writeln!(out, "fundamental cycle: {z}").unwrap();
    }
    if let Some(c) = r.chi_fund {
        writeln!(out, "chi(Z): {c}").unwrap();
    }
    if let Some(a) = &r.discrepancies {
        let a: Vec<String> = a.values().iter().map(to_exact_string).collect();
        writeln!(out, "discrepancies: ({})", a.join(", ")).unwrap();
    }
    if let Some(class) = r.classification {
        writeln!(out, "classification: {class}").unwrap();
    }
    let f = flags(&r.flags);
    if !f.is_empty() {
        writeln!(out, "flags:").unwrap();
        out.push_str(&f);
    }
    writeln!(out, "link:").unwrap();
    writeln!(out, "  rational tree: {}", r.link.rational_tree).unwrap();
    writeln!(out, "  first Betti number: {}", r.link.first_betti).unwrap();
    writeln!(out, "  h1(O_E): {}", r.link.h1_structure_sheaf).unwrap();
    if let Some(q) = r.link.qhs_link {
        writeln!(out, "  QHS link: {q}").unwrap();
    }
    if let Some(b) = r.link.h1_bound {
        writeln!(out, "  p_g >= {b}").unwrap();
    }
    for w in &r.warnings {
        writeln!(out, "warning: {w}").unwrap();
    }
    out
}
