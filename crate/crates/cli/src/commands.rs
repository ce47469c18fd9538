use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::Serialize;
use serde_json::{json, Value};

use resgraph::blowup::{run_to_configuration, star_family_script};
use resgraph::classify::{discrepancies, DiscrepancyFlags};
use resgraph::cycles::{chi, fundamental_cycle, is_antinef, pg_lower_bound};
use resgraph::format::{parse_graph, parse_script, write_dot, write_graph};
use resgraph::linalg::{
    find_certificate, is_negative_definite, ldlt, leading_principal_minors, verify_certificate, SymmetricMatrix,
};
use resgraph::rational::to_exact_string;
use resgraph::star::{search_star, SearchError};
use resgraph::{build_matrix, full_report, topology, AnalysisError, Cycle, ResolutionGraph};

use crate::render;
use crate::{Command, Format};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Success = 0,
    Usage = 1,
    NotNegativeDefinite = 2,
}

pub struct Outcome {
    pub output: String,
    pub status: Status,
}

impl Outcome {
    fn new(format: Format, value: &impl Serialize, text: String, status: Status) -> Result<Self> {
        let output = match format {
            Format::Json => serde_json::to_string_pretty(value)? + "\n",
            Format::Text => text,
        };
        Ok(Outcome { output, status })
    }
}

fn status_of(nd: bool) -> Status {
    if nd {
        Status::Success
    } else {
        Status::NotNegativeDefinite
    }
}

fn load_graph(path: &Path) -> Result<ResolutionGraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_graph(&text).with_context(|| format!("parsing {}", path.display()))
}

fn exact_all(v: &[resgraph::Rational]) -> Vec<String> {
    v.iter().map(to_exact_string).collect()
}

fn negative_definite(g: &ResolutionGraph) -> bool {
    is_negative_definite(&SymmetricMatrix::from(&build_matrix(g)))
}

pub fn run(command: Command, format: Format) -> Result<Outcome> {
    match command {
        Command::Analyze { graphs } => analyze(&graphs, format),
        Command::CheckDefinite { graph, certificate } => check_definite(&load_graph(&graph)?, certificate, format),
        Command::FundamentalCycle { graph } => cmd_fundamental_cycle(&load_graph(&graph)?, format),
        Command::Chi { graph, cycle } => cmd_chi(&load_graph(&graph)?, cycle, format),
        Command::Discrepancies { graph } => cmd_discrepancies(&load_graph(&graph)?, format),
        Command::Classify { graph } => classify(&load_graph(&graph)?, format),
        Command::Link { graph } => link(&load_graph(&graph)?, format),
        Command::Blowup { script, emit_graph } => blowup(&script, emit_graph, format),
        Command::SearchStar { genus, max_d } => cmd_search_star(genus, max_d, format),
        Command::StarGraph { genus, d, script } => {
            if d < 1 {
                bail!("d must be at least 1");
            }
            let output = if script {
                star_family_script(genus, d).to_string()
            } else {
                format!("# A_{{{genus},{d}}}\n{}", write_graph(&ResolutionGraph::star_family(genus, d)))
            };
            Ok(Outcome { output, status: Status::Success })
        }
        Command::Dot { graph } => Ok(Outcome { output: write_dot(&load_graph(&graph)?), status: Status::Success }),
    }
}

fn analyze(paths: &[std::path::PathBuf], format: Format) -> Result<Outcome> {
    if paths.is_empty() {
        bail!("analyze needs at least one graph file");
    }
    let mut reports = Vec::new();
    for path in paths {
        reports.push((path, full_report(&load_graph(path)?)));
    }
    let status = reports.iter().map(|(_, r)| status_of(r.negative_definite)).max().unwrap_or(Status::Success);
    if let [(_, report)] = reports.as_slice() {
        return Outcome::new(format, report, render::report(report), status);
    }
    let value: Vec<Value> =
        reports.iter().map(|(p, r)| json!({ "file": p.display().to_string(), "report": r })).collect();
    let text = reports
        .iter()
        .map(|(p, r)| format!("== {}\n{}", p.display(), render::report(r)))
        .collect::<Vec<_>>()
        .join("\n");
    Outcome::new(format, &value, text, status)
}

fn check_definite(g: &ResolutionGraph, certificate: bool, format: Format) -> Result<Outcome> {
    let neg = SymmetricMatrix::from(&build_matrix(g)).neg();
    let minors = leading_principal_minors(&neg);
    let nd = minors.iter().all(|m| m > &resgraph::rational::int(0));
    let pivots = match ldlt(&neg) {
        Ok(f) => json!({ "pivots": exact_all(&f.d) }),
        Err(p) => json!({ "zero_pivot": p.index }),
    };
    let mut value = json!({
        "negative_definite": nd,
        "leading_minors_of_negated": exact_all(&minors),
        "ldlt": pivots,
    });
    let mut text = format!("negative definite: {nd}\nleading minors of -A: {}\n", exact_all(&minors).join(" "));
    if certificate {
        match find_certificate(&neg) {
            Ok(v) => {
                let verified = verify_certificate(&neg, &v)?;
                let image = neg.matrix().mul_vec(&v)?;
                value["certificate"] = json!({
                    "vector": exact_all(&v),
                    "image": exact_all(&image),
                    "verified": verified,
                });
                text += &format!(
                    "certificate v: {}\n-A v: {}\nverified: {verified}\n",
                    exact_all(&v).join(" "),
                    exact_all(&image).join(" ")
                );
            }
            Err(e) => {
                value["certificate"] = json!({ "error": e.to_string() });
                text += &format!("certificate: {e}\n");
            }
        }
    }
    Outcome::new(format, &value, text, status_of(nd))
}

fn analysis_failure(e: AnalysisError, format: Format) -> Result<Outcome> {
    let status = match e {
        AnalysisError::NotContractible => Status::NotNegativeDefinite,
        AnalysisError::Disconnected => Status::Success,
        _ => bail!(e),
    };
    let value = json!({ "negative_definite": status == Status::Success, "error": e.to_string() });
    Outcome::new(format, &value, format!("{e}\n"), status)
}

fn cmd_fundamental_cycle(g: &ResolutionGraph, format: Format) -> Result<Outcome> {
    let z = match fundamental_cycle(g) {
        Ok(z) => z,
        Err(e) => return analysis_failure(e, format),
    };
    let products = build_matrix(g).apply(&z)?;
    let chi_z = chi(&z, g)?;
    let value = json!({ "fundamental_cycle": z, "intersections": products, "chi": chi_z });
    let text = format!("fundamental cycle: {}\nZ.E_i: {:?}\nchi: {chi_z}\n", render::cycle(g, &z), products);
    Outcome::new(format, &value, text, Status::Success)
}

fn cmd_chi(g: &ResolutionGraph, coefficients: Vec<i64>, format: Format) -> Result<Outcome> {
    if coefficients.len() != g.len() {
        bail!("--cycle has {} coefficients, graph has {} vertices", coefficients.len(), g.len());
    }
    let z = Cycle::new(coefficients);
    let chi_z = chi(&z, g)?;
    let antinef = is_antinef(&z, g)?;
    let bound = pg_lower_bound(g, &z).ok();
    let value = json!({ "cycle": z, "chi": chi_z, "antinef": antinef, "pg_lower_bound": bound });
    let mut text = format!("Z = {}\nchi: {chi_z}\nanti-nef: {antinef}\n", render::cycle(g, &z));
    if let Some(b) = bound {
        text += &format!("p_g >= {b}\n");
    }
    Outcome::new(format, &value, text, Status::Success)
}

fn cmd_discrepancies(g: &ResolutionGraph, format: Format) -> Result<Outcome> {
    let a = match discrepancies(g) {
        Ok(a) => a,
        Err(e) => return analysis_failure(e, format),
    };
    let names: Vec<&str> = g.vertices().iter().map(|v| v.name.as_str()).collect();
    let min = a.min().map(to_exact_string);
    let value = json!({ "vertices": names, "discrepancies": a, "min_discrepancy": min });
    let text = names.iter().zip(a.values()).map(|(n, q)| format!("a({n}) = {}\n", to_exact_string(q))).collect();
    Outcome::new(format, &value, text, Status::Success)
}

fn classify(g: &ResolutionGraph, format: Format) -> Result<Outcome> {
    let a = match discrepancies(g) {
        Ok(a) => a,
        Err(e) => return analysis_failure(e, format),
    };
    let flags = DiscrepancyFlags::of(&a);
    let class = flags.classification();
    let report = full_report(g);
    let value = json!({
        "classification": class,
        "canonical": flags.canonical,
        "log_terminal": flags.log_terminal,
        "log_canonical": flags.log_canonical,
        "numerically_gorenstein": report.flags.numerically_gorenstein,
        "rational": report.flags.rational,
        "minimally_elliptic": report.flags.minimally_elliptic,
    });
    let text = format!("{class}\n{}", render::flags(&report.flags));
    Outcome::new(format, &value, text, Status::Success)
}

fn link(g: &ResolutionGraph, format: Format) -> Result<Outcome> {
    let nd = negative_definite(g);
    let qhs = topology::is_qhs_link(g).ok();
    let value = json!({
        "negative_definite": nd,
        "first_betti": topology::first_betti(g),
        "h1_structure_sheaf": topology::h1_structure_sheaf(g),
        "rational_tree": topology::is_rational_tree(g),
        "qhs_link": qhs,
    });
    let mut text = format!(
        "first Betti number: {}\nh1(O_E): {}\nrational tree: {}\n",
        topology::first_betti(g),
        topology::h1_structure_sheaf(g),
        topology::is_rational_tree(g)
    );
    text += &match qhs {
        Some(q) => format!("QHS link: {q}\n"),
        None => "QHS link: undefined (not negative definite)\n".into(),
    };
    Outcome::new(format, &value, text, status_of(nd))
}

fn blowup(path: &Path, emit_graph: bool, format: Format) -> Result<Outcome> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let script = parse_script(&text).with_context(|| format!("parsing {}", path.display()))?;
    let (config, names) = run_to_configuration(&script)?;
    let g = config.select(&names)?;
    if emit_graph {
        return Ok(Outcome { output: write_graph(&g), status: Status::Success });
    }
    let matrix = build_matrix(&g);
    let curves: Vec<Value> = config
        .curves()
        .iter()
        .map(|c| json!({ "name": c.name, "genus": c.genus, "self_intersection": c.self_intersection }))
        .collect();
    let value = json!({
        "curves": curves,
        "selected": names,
        "matrix": matrix.rows(),
        "negative_definite": negative_definite(&g),
    });
    let text = format!("{} curves after blowups; selected {}\n{}", config.len(), names.join(" "), matrix);
    Outcome::new(format, &value, text, Status::Success)
}

fn cmd_search_star(genus: u32, max_d: i64, format: Format) -> Result<Outcome> {
    match search_star(genus, max_d) {
        Ok(s) => {
            let text = format!(
                "minimal d: {}\ncertificate (g+2,1,...,1) at minimal d: {}\nbound g+3 = {}: negative definite {}, certificate {}\n",
                s.minimal_d,
                s.certificate_at_minimal,
                s.certificate_bound,
                s.negative_definite_at_bound,
                s.certificate_at_bound
            );
            Outcome::new(format, &s, text, Status::Success)
        }
        Err(SearchError::InvalidRange) => bail!(SearchError::InvalidRange),
        Err(e @ SearchError::NotFound { .. }) => {
            let value = json!({ "genus": genus, "max_d": max_d, "error": e.to_string() });
            Outcome::new(format, &value, format!("{e}\n"), Status::NotNegativeDefinite)
        }
    }
}
