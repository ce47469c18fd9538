//! Discrepancies and the singularity classes they determine.
//!
//! Writing `K_Y = f*K_X + Σ a_i E_i` and intersecting with each `E_j` kills
//! the pullback term, so the discrepancy vector `a` solves `A a = k` where
//! `A` is the intersection matrix and `k_j = K · E_j`.

use std::fmt;
use std::ops::Index;

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::cycles::{self, check_minimally_elliptic, DEFAULT_BOX_LIMIT};
use crate::error::AnalysisError;
use crate::graph::{build_matrix, canonical_vector, Cycle, ResolutionGraph};
use crate::linalg::{find_certificate, is_negative_definite, solve_linear, SymmetricMatrix};
use crate::rational::{int, serde_exact, Rational};
use crate::topology;

/// `a_i = a(E_i, X)` in vertex order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DiscrepancyVector(#[serde(with = "serde_exact::vec")] Vec<Rational>);

impl DiscrepancyVector {
    pub fn new(values: Vec<Rational>) -> Self {
        DiscrepancyVector(values)
    }

    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn min(&self) -> Option<&Rational> {
        self.0.iter().min()
    }
}

impl Index<usize> for DiscrepancyVector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

/// Exact solution of `A a = k`.
pub fn discrepancies(g: &ResolutionGraph) -> Result<DiscrepancyVector, AnalysisError> {
    let a = SymmetricMatrix::from(&build_matrix(g));
    if !is_negative_definite(&a) {
        return Err(AnalysisError::NotContractible);
    }
    let k: Vec<Rational> = canonical_vector(g).into_iter().map(int).collect();
    let values = solve_linear(a.matrix(), &k).map_err(|_| AnalysisError::NotContractible)?;
    Ok(DiscrepancyVector(values))
}

/// Strongest class implied by the discrepancies. Terminal is never reported.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    Canonical,
    LogTerminal,
    LogCanonical,
    NotLogCanonical,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::Canonical => "canonical",
            Classification::LogTerminal => "log terminal",
            Classification::LogCanonical => "log canonical",
            Classification::NotLogCanonical => "not log canonical",
        })
    }
}

/// Each class as an independent predicate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscrepancyFlags {
    pub canonical: bool,
    pub log_terminal: bool,
    pub log_canonical: bool,
}

impl DiscrepancyFlags {
    pub fn of(a: &DiscrepancyVector) -> Self {
        let minus_one = int(-1);
        DiscrepancyFlags {
            canonical: a.values().iter().all(|x| !x.is_negative()),
            log_terminal: a.values().iter().all(|x| *x > minus_one),
            log_canonical: a.values().iter().all(|x| *x >= minus_one),
        }
    }

    pub fn classification(self) -> Classification {
        if self.canonical {
            Classification::Canonical
        } else if self.log_terminal {
            Classification::LogTerminal
        } else if self.log_canonical {
            Classification::LogCanonical
        } else {
            Classification::NotLogCanonical
        }
    }
}

/// Canonical iff `min a_i ≥ 0`, log terminal iff `> −1`, log canonical iff
/// `≥ −1`.
pub fn classify_discrepancies(a: &DiscrepancyVector) -> Classification {
    DiscrepancyFlags::of(a).classification()
}

/// All discrepancies are integers.
pub fn is_numerically_gorenstein(a: &DiscrepancyVector) -> bool {
    a.values().iter().all(Rational::is_integer)
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ReportFlags {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rational: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minimally_elliptic: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub log_terminal: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub log_canonical: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub canonical: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub numerically_gorenstein: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkReport {
    pub rational_tree: bool,
    pub first_betti: u64,
    pub h1_structure_sheaf: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub qhs_link: Option<bool>,
    /// `h¹(O_Z)` of the fundamental cycle, a lower bound for `p_g`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h1_bound: Option<u64>,
}

/// Everything computable from one resolution graph. Fields that need a
/// negative definite (or connected) graph are `None` when it is not.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularityReport {
    pub vertices: Vec<String>,
    pub matrix: Vec<Vec<i64>>,
    pub negative_definite: bool,
    /// `v > 0` with `−A v > 0`.
    #[serde(default, skip_serializing_if = "Option::is_none", with = "opt_rational_vec")]
    pub certificate: Option<Vec<Rational>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fundamental_cycle: Option<Cycle>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chi_fund: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub discrepancies: Option<DiscrepancyVector>,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "opt_rational")]
    pub min_discrepancy: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<Classification>,
    pub flags: ReportFlags,
    pub link: LinkReport,
    pub warnings: Vec<String>,
}

/// Runs every analysis on `g`. Never fails: degenerate inputs show up as
/// absent fields and warnings.
pub fn full_report(g: &ResolutionGraph) -> SingularityReport {
    let matrix = build_matrix(g);
    let a = SymmetricMatrix::from(&matrix);
    let negative_definite = is_negative_definite(&a);
    let mut warnings = Vec::new();

    for v in g.vertices() {
        if v.genus == 0 && v.self_intersection == -1 {
            warnings.push(format!("non-minimal resolution: `{}` is a rational (-1)-curve", v.name));
        }
    }

    let mut report = SingularityReport {
        vertices: g.vertices().iter().map(|v| v.name.clone()).collect(),
        matrix: matrix.rows(),
        negative_definite,
        certificate: None,
        fundamental_cycle: None,
        chi_fund: None,
        discrepancies: None,
        min_discrepancy: None,
        classification: None,
        flags: ReportFlags::default(),
        link: LinkReport {
            rational_tree: topology::is_rational_tree(g),
            first_betti: topology::first_betti(g),
            h1_structure_sheaf: topology::h1_structure_sheaf(g),
            qhs_link: None,
            h1_bound: None,
        },
        warnings,
    };

    if !negative_definite {
        report.warnings.push("intersection matrix is not negative definite".into());
        return report;
    }

    report.certificate = find_certificate(&a.neg()).ok();
    report.link.qhs_link = topology::is_qhs_link(g).ok();

    if let Ok(disc) = discrepancies(g) {
        let flags = DiscrepancyFlags::of(&disc);
        report.flags.canonical = Some(flags.canonical);
        report.flags.log_terminal = Some(flags.log_terminal);
        report.flags.log_canonical = Some(flags.log_canonical);
        report.flags.numerically_gorenstein = Some(is_numerically_gorenstein(&disc));
        report.classification = Some(flags.classification());
        report.min_discrepancy = disc.min().cloned();
        report.discrepancies = Some(disc);
    }

    match check_minimally_elliptic(g, DEFAULT_BOX_LIMIT) {
        Ok(check) => {
            report.flags.rational = Some(check.chi_fundamental == 1);
            report.flags.minimally_elliptic = Some(check.minimally_elliptic);
            report.chi_fund = Some(check.chi_fundamental);
            report.link.h1_bound = cycles::pg_lower_bound(g, &check.fundamental_cycle).ok();
            report.fundamental_cycle = Some(check.fundamental_cycle);
        }
        Err(AnalysisError::BoxTooLarge { size, limit }) => {
            if let Ok(z) = cycles::fundamental_cycle(g) {
                let chi = cycles::chi(&z, g).ok();
                report.flags.rational = chi.map(|c| c == 1);
                report.chi_fund = chi;
                report.link.h1_bound = cycles::pg_lower_bound(g, &z).ok();
                report.fundamental_cycle = Some(z);
            }
            report.warnings.push(format!("minimal ellipticity undecided: {size} subcycles exceed the limit {limit}"));
        }
        Err(e) => report.warnings.push(format!("no fundamental cycle: {e}")),
    }
    report
}

mod opt_rational {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::rational::{serde_exact, Rational};

    pub fn serialize<S: Serializer>(q: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        match q {
            Some(q) => serde_exact::serialize(q, s),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
        #[derive(Deserialize)]
        struct Wrap(#[serde(with = "serde_exact")] Rational);
        Option::<Wrap>::deserialize(d).map(|w| w.map(|Wrap(q)| q))
    }
}

mod opt_rational_vec {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::rational::{serde_exact, Rational};

    pub fn serialize<S: Serializer>(v: &Option<Vec<Rational>>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(v) => serde_exact::vec::serialize(v, s),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Vec<Rational>>, D::Error> {
        #[derive(Deserialize)]
        struct Wrap(#[serde(with = "serde_exact::vec")] Vec<Rational>);
        Option::<Wrap>::deserialize(d).map(|w| w.map(|Wrap(v)| v))
    }
}

impl SingularityReport {
    /// Checks the implications canonical ⟹ log terminal ⟹ log canonical.
    pub fn flags_consistent(&self) -> bool {
        let f = &self.flags;
        let implies = |a: Option<bool>, b: Option<bool>| !(a == Some(true) && b != Some(true));
        implies(f.canonical, f.log_terminal) && implies(f.log_terminal, f.log_canonical)
    }
}
