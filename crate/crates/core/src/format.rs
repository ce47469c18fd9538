//! Text formats for resolution graphs and blowup scripts.
//!
//! Graph files list vertices before the edges that use them:
//!
//! ```text
//! # comment
//! vertex C0 genus=0 self=-2
//! vertex C1 genus=0 self=-3
//! edge C0 C1 mult=1
//! ```
//!
//! `mult` defaults to 1 and repeated edges add up. Script files hold one
//! instruction per line:
//!
//! ```text
//! start C0 g=0 e=2
//! blowup_on C0 -> C1
//! blowup_at C0 C1 -> E
//! select C0 C1
//! ```
//!
//! Everything after `#` on a line is ignored. Line numbers in errors are
//! 1-based; line 0 refers to the file as a whole.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::blowup::{BlowupScript, Instruction};
use crate::error::{GraphError, ParseError};
use crate::graph::{GraphBuilder, ResolutionGraph};

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn logical_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let content = line.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

fn key_value<T: FromStr>(line: usize, token: &str, key: &str) -> Result<T, ParseError> {
    let value = token
        .strip_prefix(key)
        .and_then(|rest| rest.strip_prefix('='))
        .ok_or_else(|| ParseError::new(line, format!("expected `{key}=<int>`, found `{token}`")))?;
    value.parse().map_err(|_| ParseError::new(line, format!("invalid value for `{key}`: `{value}`")))
}

fn graph_error(line: usize, e: GraphError) -> ParseError {
    ParseError::new(line, e.to_string())
}

pub fn parse_graph(text: &str) -> Result<ResolutionGraph, ParseError> {
    let mut b = GraphBuilder::new();
    for (line, tokens) in logical_lines(text) {
        match tokens.as_slice() {
            ["vertex", name, rest @ ..] => {
                let (mut genus, mut self_int) = (None, None);
                for token in rest {
                    if token.starts_with("genus=") {
                        genus = Some(key_value::<u32>(line, token, "genus")?);
                    } else if token.starts_with("self=") {
                        self_int = Some(key_value::<i64>(line, token, "self")?);
                    } else {
                        return Err(ParseError::new(line, format!("unexpected token `{token}`")));
                    }
                }
                let genus = genus.ok_or_else(|| ParseError::new(line, "missing `genus=`"))?;
                let self_int = self_int.ok_or_else(|| ParseError::new(line, "missing `self=`"))?;
                b.vertex(*name, genus, self_int).map_err(|e| graph_error(line, e))?;
            }
            ["edge", a, c, rest @ ..] => {
                let mult = match rest {
                    [] => 1,
                    [token] => key_value::<u32>(line, token, "mult")?,
                    _ => return Err(ParseError::new(line, "too many tokens in edge")),
                };
                b.edge(a, c, mult).map_err(|e| graph_error(line, e))?;
            }
            [keyword, ..] => return Err(ParseError::new(line, format!("unknown or incomplete directive `{keyword}`"))),
            [] => unreachable!("blank lines are skipped"),
        }
    }
    b.build().map_err(|e| graph_error(0, e))
}

/// Writes `g` in the graph format; [`parse_graph`] reads it back unchanged.
pub fn write_graph(g: &ResolutionGraph) -> String {
    let mut out = String::new();
    for v in g.vertices() {
        writeln!(out, "vertex {} genus={} self={}", v.name, v.genus, v.self_intersection).unwrap();
    }
    for e in g.edges() {
        let (a, b) = (&g.vertices()[e.a].name, &g.vertices()[e.b].name);
        if e.multiplicity == 1 {
            writeln!(out, "edge {a} {b}").unwrap();
        } else {
            writeln!(out, "edge {a} {b} mult={}", e.multiplicity).unwrap();
        }
    }
    out
}

/// Graphviz rendering of the dual graph.
pub fn write_dot(g: &ResolutionGraph) -> String {
    let mut out = String::from("graph resolution {\n");
    for v in g.vertices() {
        writeln!(out, "  \"{}\" [label=\"{}\\ng={} e={}\"];", v.name, v.name, v.genus, v.self_intersection).unwrap();
    }
    for e in g.edges() {
        let (a, b) = (&g.vertices()[e.a].name, &g.vertices()[e.b].name);
        for _ in 0..e.multiplicity {
            writeln!(out, "  \"{a}\" -- \"{b}\";").unwrap();
        }
    }
    out.push_str("}\n");
    out
}

pub fn parse_script(text: &str) -> Result<BlowupScript, ParseError> {
    let mut instructions = Vec::new();
    for (line, tokens) in logical_lines(text) {
        let ins = match tokens.as_slice() {
            ["start", name, g, e] => Instruction::Start {
                name: (*name).to_owned(),
                genus: key_value(line, g, "g")?,
                self_intersection: key_value(line, e, "e")?,
            },
            ["blowup_on", curve, "->", new_name] => {
                Instruction::BlowupOn { curve: (*curve).to_owned(), new_name: (*new_name).to_owned() }
            }
            ["blowup_at", first, second, "->", new_name] => Instruction::BlowupAt {
                first: (*first).to_owned(),
                second: (*second).to_owned(),
                new_name: (*new_name).to_owned(),
            },
            ["select", names @ ..] => Instruction::Select { names: names.iter().map(|s| (*s).to_owned()).collect() },
            [keyword, ..] => {
                return Err(ParseError::new(line, format!("malformed `{keyword}` instruction")));
            }
            [] => unreachable!("blank lines are skipped"),
        };
        instructions.push(ins);
    }
    Ok(BlowupScript::new(instructions))
}
