//! Blowup calculus on configurations of curves in a smooth surface.
//!
//! Only self-intersections and pairwise intersection numbers are tracked.
//! Blowing up a general point of a curve lowers its self-intersection by one
//! and adds a (−1)-curve meeting it once. Blowing up a transverse
//! intersection point of two curves lowers both self-intersections and their
//! mutual intersection by one, and adds a (−1)-curve meeting each once.

use std::fmt;

use crate::error::BlowupError;
use crate::graph::{CurveVertex, ResolutionGraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    curves: Vec<CurveVertex>,
    /// Symmetric with zero diagonal.
    pairwise: Vec<Vec<u32>>,
}

impl Configuration {
    pub fn new() -> Self {
        Configuration { curves: Vec::new(), pairwise: Vec::new() }
    }

    pub fn curves(&self) -> &[CurveVertex] {
        &self.curves
    }

    pub fn len(&self) -> usize {
        self.curves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.curves.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.curves.iter().position(|c| c.name == name)
    }

    fn require(&self, name: &str) -> Result<usize, BlowupError> {
        self.index_of(name).ok_or_else(|| BlowupError::UnknownCurve(name.to_owned()))
    }

    pub fn curve(&self, name: &str) -> Option<&CurveVertex> {
        self.index_of(name).map(|i| &self.curves[i])
    }

    /// Intersection number of two distinct curves (0 for a curve with itself).
    pub fn pairwise(&self, a: &str, b: &str) -> Option<u32> {
        Some(self.pairwise[self.index_of(a)?][self.index_of(b)?])
    }

    pub fn pairwise_table(&self) -> &[Vec<u32>] {
        &self.pairwise
    }

    /// Adds a curve disjoint from everything else.
    pub fn with_curve(&self, name: &str, genus: u32, self_intersection: i64) -> Result<Self, BlowupError> {
        if self.index_of(name).is_some() {
            return Err(BlowupError::DuplicateCurve(name.to_owned()));
        }
        let mut c = self.clone();
        c.curves.push(CurveVertex::new(name, genus, self_intersection));
        for row in &mut c.pairwise {
            row.push(0);
        }
        c.pairwise.push(vec![0; c.curves.len()]);
        Ok(c)
    }

    /// Subconfiguration in the order of `names`, as a resolution graph.
    pub fn select(&self, names: &[String]) -> Result<ResolutionGraph, BlowupError> {
        if names.is_empty() {
            return Err(BlowupError::EmptySelection);
        }
        let idx = names.iter().map(|n| self.require(n)).collect::<Result<Vec<_>, _>>()?;
        let vertices = idx.iter().map(|&i| self.curves[i].clone()).collect();
        let mut edges = Vec::new();
        for (p, &i) in idx.iter().enumerate() {
            for (q, &j) in idx.iter().enumerate().skip(p + 1) {
                if self.pairwise[i][j] > 0 {
                    edges.push((p, q, self.pairwise[i][j]));
                }
            }
        }
        Ok(ResolutionGraph::from_parts(vertices, edges)?)
    }
}

impl Default for Configuration {
    fn default() -> Self {
        Self::new()
    }
}

/// Blows up a point of `curve` lying on no other curve of the configuration.
pub fn apply_blowup_on(c: &Configuration, curve: &str, new_name: &str) -> Result<Configuration, BlowupError> {
    let i = c.require(curve)?;
    let mut out = c.with_curve(new_name, 0, -1)?;
    let e = out.curves.len() - 1;
    out.curves[i].self_intersection -= 1;
    out.pairwise[i][e] = 1;
    out.pairwise[e][i] = 1;
    Ok(out)
}

/// Blows up one transverse intersection point of `c1` and `c2`.
pub fn apply_blowup_at(c: &Configuration, c1: &str, c2: &str, new_name: &str) -> Result<Configuration, BlowupError> {
    let i = c.require(c1)?;
    let j = c.require(c2)?;
    if i == j {
        return Err(BlowupError::SameCurve(c1.to_owned()));
    }
    if c.pairwise[i][j] == 0 {
        return Err(BlowupError::NotIntersecting(c1.to_owned(), c2.to_owned()));
    }
    let mut out = c.with_curve(new_name, 0, -1)?;
    let e = out.curves.len() - 1;
    out.curves[i].self_intersection -= 1;
    out.curves[j].self_intersection -= 1;
    out.pairwise[i][j] -= 1;
    out.pairwise[j][i] -= 1;
    for k in [i, j] {
        out.pairwise[k][e] = 1;
        out.pairwise[e][k] = 1;
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instruction {
    Start { name: String, genus: u32, self_intersection: i64 },
    BlowupOn { curve: String, new_name: String },
    BlowupAt { first: String, second: String, new_name: String },
    Select { names: Vec<String> },
}

impl fmt::Display for Instruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Instruction::Start { name, genus, self_intersection } => {
                write!(f, "start {name} g={genus} e={self_intersection}")
            }
            Instruction::BlowupOn { curve, new_name } => write!(f, "blowup_on {curve} -> {new_name}"),
            Instruction::BlowupAt { first, second, new_name } => {
                write!(f, "blowup_at {first} {second} -> {new_name}")
            }
            Instruction::Select { names } => write!(f, "select {}", names.join(" ")),
        }
    }
}

/// A sequence of instructions ending in exactly one `select`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BlowupScript {
    pub instructions: Vec<Instruction>,
}

impl BlowupScript {
    pub fn new(instructions: Vec<Instruction>) -> Self {
        BlowupScript { instructions }
    }

    pub fn start(&mut self, name: &str, genus: u32, self_intersection: i64) -> &mut Self {
        self.instructions.push(Instruction::Start { name: name.into(), genus, self_intersection });
        self
    }

    pub fn blowup_on(&mut self, curve: &str, new_name: &str) -> &mut Self {
        self.instructions.push(Instruction::BlowupOn { curve: curve.into(), new_name: new_name.into() });
        self
    }

    pub fn blowup_at(&mut self, first: &str, second: &str, new_name: &str) -> &mut Self {
        self.instructions.push(Instruction::BlowupAt {
            first: first.into(),
            second: second.into(),
            new_name: new_name.into(),
        });
        self
    }

    pub fn select<S: AsRef<str>>(&mut self, names: &[S]) -> &mut Self {
        self.instructions.push(Instruction::Select { names: names.iter().map(|s| s.as_ref().to_owned()).collect() });
        self
    }
}

impl fmt::Display for BlowupScript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for ins in &self.instructions {
            writeln!(f, "{ins}")?;
        }
        Ok(())
    }
}

/// Applies one non-select instruction.
pub fn apply(c: &Configuration, ins: &Instruction) -> Result<Configuration, BlowupError> {
    match ins {
        Instruction::Start { name, genus, self_intersection } => c.with_curve(name, *genus, *self_intersection),
        Instruction::BlowupOn { curve, new_name } => apply_blowup_on(c, curve, new_name),
        Instruction::BlowupAt { first, second, new_name } => apply_blowup_at(c, first, second, new_name),
        Instruction::Select { .. } => Ok(c.clone()),
    }
}

/// Executes every instruction before the final `select`, returning the
/// configuration reached.
pub fn run_to_configuration(s: &BlowupScript) -> Result<(Configuration, Vec<String>), BlowupError> {
    let at = |index: usize| move |e: BlowupError| BlowupError::Script { index, source: Box::new(e) };
    let mut config = Configuration::new();
    let mut selection = None;
    for (index, ins) in s.instructions.iter().enumerate() {
        if selection.is_some() {
            return Err(at(index)(BlowupError::TrailingInstructions));
        }
        match ins {
            Instruction::Select { names } => {
                if names.is_empty() {
                    return Err(at(index)(BlowupError::EmptySelection));
                }
                selection = Some((index, names.clone()));
            }
            _ => config = apply(&config, ins).map_err(at(index))?,
        }
    }
    let (index, names) = selection.ok_or(BlowupError::NoSelection)?;
    // Validate names here so the error carries the select's index.
    config.select(&names).map_err(at(index))?;
    Ok((config, names))
}

/// Runs the script and extracts the selected curves as a resolution graph.
pub fn run_script(s: &BlowupScript) -> Result<ResolutionGraph, BlowupError> {
    let (config, names) = run_to_configuration(s)?;
    config.select(&names)
}

/// Zero section of `O(2)` on `P¹`, blown up at four points, then twice more
/// on each exceptional curve. Selects `C0, C1, …, C4`.
pub fn four_arm_star_script() -> BlowupScript {
    star_script(2, 4, 3)
}

/// Builds `A_{g,d}`: a center of self-intersection `g + 1`, blown up at
/// `g + 3` points, then each exceptional curve blown up `d − 1` more times.
pub fn star_family_script(genus: u32, d: i64) -> BlowupScript {
    star_script(i64::from(genus) + 1, genus as usize + 3, d)
}

/// Center `C0` of self-intersection `start` blown up at `leaves` points
/// (exceptional curves `C1..`), then each `Ci` blown up at `leaf_d − 1`
/// further points (curves `Fi_k`) so that `Ci² = −leaf_d`.
fn star_script(start: i64, leaves: usize, leaf_d: i64) -> BlowupScript {
    let mut s = BlowupScript::default();
    s.start("C0", 0, start);
    for i in 1..=leaves {
        s.blowup_on("C0", &format!("C{i}"));
    }
    for i in 1..=leaves {
        for k in 1..leaf_d {
            s.blowup_on(&format!("C{i}"), &format!("F{i}_{k}"));
        }
    }
    let names: Vec<String> = (0..=leaves).map(|i| format!("C{i}")).collect();
    s.select(&names);
    s
}
