//! The graph file format and DOT export.
//!
//! Line-oriented text: `#` starts a comment, tokens are separated by
//! whitespace. Statements are `vertex <name>` and `arc <tail> <head>
//! [<color>]` with color 1 or 2; a file is either uniformly colored or
//! uniformly uncolored. Vertex names may not contain whitespace, `#` or
//! `,`.

use std::collections::BTreeSet;

use bikernel::{BicoloredDigraph, Color, Digraph};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FileError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("expected a bicolored graph file, found uncolored arcs")]
    ExpectedColored,
    #[error("expected an uncolored digraph file, found colored arcs")]
    ExpectedUncolored,
}

/// Parsed statements of one graph file.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct GraphFile {
    pub vertices: Vec<String>,
    pub colored_arcs: Vec<(String, String, Color)>,
    pub uncolored_arcs: Vec<(String, String)>,
}

fn check_name(line: usize, name: &str) -> Result<(), FileError> {
    if name.contains(',') {
        return Err(FileError::Parse {
            line,
            message: format!("illegal vertex name {name:?}: ',' is reserved"),
        });
    }
    Ok(())
}

pub fn parse(text: &str) -> Result<GraphFile, FileError> {
    let mut file = GraphFile::default();
    let mut seen_colored: BTreeSet<(String, String, Color)> = BTreeSet::new();
    let mut seen_uncolored: BTreeSet<(String, String)> = BTreeSet::new();

    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let err = |message: String| Err(FileError::Parse { line, message });
        match tokens.as_slice() {
            [] => {}
            ["vertex", name] => {
                check_name(line, name)?;
                file.vertices.push((*name).to_string());
            }
            ["vertex", ..] => return err("vertex statement takes exactly one name".into()),
            ["arc", tail, head, rest @ ..] => {
                check_name(line, tail)?;
                check_name(line, head)?;
                if tail == head {
                    return err(format!("self-loop at {tail:?}"));
                }
                match rest {
                    [] => {
                        if !file.colored_arcs.is_empty() {
                            return err("uncolored arc in a colored file".into());
                        }
                        let arc = ((*tail).to_string(), (*head).to_string());
                        if !seen_uncolored.insert(arc.clone()) {
                            return err(format!("duplicate arc {tail} {head}"));
                        }
                        file.uncolored_arcs.push(arc);
                    }
                    [color] => {
                        let color = color
                            .parse::<u8>()
                            .ok()
                            .and_then(Color::from_u8)
                            .ok_or_else(|| FileError::Parse {
                                line,
                                message: format!("bad color token {color:?} (expected 1 or 2)"),
                            })?;
                        if !file.uncolored_arcs.is_empty() {
                            return err("colored arc in an uncolored file".into());
                        }
                        let arc = ((*tail).to_string(), (*head).to_string(), color);
                        if !seen_colored.insert(arc.clone()) {
                            return err(format!("duplicate arc {tail} {head} {color}"));
                        }
                        file.colored_arcs.push(arc);
                    }
                    _ => return err("arc statement takes tail, head and an optional color".into()),
                }
            }
            ["arc", ..] => {
                return err("arc statement takes tail, head and an optional color".into())
            }
            [stmt, ..] => return err(format!("unknown statement {stmt:?}")),
        }
    }
    Ok(file)
}

impl GraphFile {
    /// Interprets the file as a bicolored digraph. Arc-free files qualify.
    pub fn to_bicolored(&self) -> Result<BicoloredDigraph, FileError> {
        if !self.uncolored_arcs.is_empty() {
            return Err(FileError::ExpectedColored);
        }
        let vertices: Vec<&str> = self.vertices.iter().map(String::as_str).collect();
        let arcs: Vec<(&str, &str, Color)> = self
            .colored_arcs
            .iter()
            .map(|(t, h, c)| (t.as_str(), h.as_str(), *c))
            .collect();
        BicoloredDigraph::from_arcs(&vertices, &arcs).map_err(|e| FileError::Parse {
            line: 0,
            message: e.to_string(),
        })
    }

    /// Interprets the file as an uncolored digraph. Arc-free files qualify.
    pub fn to_digraph(&self) -> Result<Digraph, FileError> {
        if !self.colored_arcs.is_empty() {
            return Err(FileError::ExpectedUncolored);
        }
        let vertices: Vec<&str> = self.vertices.iter().map(String::as_str).collect();
        let arcs: Vec<(&str, &str)> = self
            .uncolored_arcs
            .iter()
            .map(|(t, h)| (t.as_str(), h.as_str()))
            .collect();
        Digraph::from_arcs(&vertices, &arcs).map_err(|e| FileError::Parse {
            line: 0,
            message: e.to_string(),
        })
    }
}

/// Canonical form: `vertex` lines for isolated vertices only, then arc
/// lines, all sorted. Parsing the output reproduces the graph exactly.
pub fn serialize_bicolored(g: &BicoloredDigraph) -> String {
    let mut out = String::new();
    for v in g.vertices() {
        if g.arcs().iter().all(|a| a.tail != v && a.head != v) {
            out.push_str(&format!("vertex {}\n", g.name(v)));
        }
    }
    for arc in g.arcs() {
        out.push_str(&format!(
            "arc {} {} {}\n",
            g.name(arc.tail),
            g.name(arc.head),
            arc.color
        ));
    }
    out
}

pub fn serialize_digraph(d: &Digraph) -> String {
    let mut out = String::new();
    for v in d.vertices() {
        if d.arcs().iter().all(|&(t, h)| t != v && h != v) {
            out.push_str(&format!("vertex {}\n", d.name(v)));
        }
    }
    for &(t, h) in d.arcs() {
        out.push_str(&format!("arc {} {}\n", d.name(t), d.name(h)));
    }
    out
}

fn dot_quote(name: &str) -> String {
    format!("\"{}\"", name.replace('\\', "\\\\").replace('"', "\\\""))
}

/// DOT rendering: color 1 arcs blue, color 2 arcs red.
pub fn export_dot_bicolored(g: &BicoloredDigraph) -> String {
    let mut out = String::from("digraph G {\n");
    for v in g.vertices() {
        out.push_str(&format!("  {};\n", dot_quote(g.name(v))));
    }
    for arc in g.arcs() {
        let color = match arc.color {
            Color::One => "blue",
            Color::Two => "red",
        };
        out.push_str(&format!(
            "  {} -> {} [color={}];\n",
            dot_quote(g.name(arc.tail)),
            dot_quote(g.name(arc.head)),
            color
        ));
    }
    out.push_str("}\n");
    out
}

pub fn export_dot_digraph(d: &Digraph) -> String {
    let mut out = String::from("digraph G {\n");
    for v in d.vertices() {
        out.push_str(&format!("  {};\n", dot_quote(d.name(v))));
    }
    for &(t, h) in d.arcs() {
        out.push_str(&format!(
            "  {} -> {};\n",
            dot_quote(d.name(t)),
            dot_quote(d.name(h))
        ));
    }
    out.push_str("}\n");
    out
}
