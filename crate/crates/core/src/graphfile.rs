//! Plain-text graph files.
//!
//! ```text
//! # family hyperbanana 3 2
//! 3 8 18
//! 0 1
//! 0 2
//! ...
//! ```
//!
//! The header is `d n m`, followed by exactly `m` edge lines `u v` with
//! 0-based labels. Lines starting with `#` are comments; a leading
//! `# family <name> <params..>` comment records how the graph was generated.
//! Blank lines are ignored. Serialization writes edges in canonical order, so
//! serializing a parsed canonical file reproduces it byte for byte.

use std::fmt::Write as _;

use crate::constructions::Family;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphFile {
    pub d: usize,
    pub graph: Graph,
    pub family: Option<Family>,
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_fields(line_no: usize, line: &str, expected: usize, what: &str) -> Result<Vec<usize>> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != expected {
        return Err(parse_err(
            line_no,
            format!("{what} needs {expected} fields, found {}", fields.len()),
        ));
    }
    fields
        .iter()
        .map(|f| {
            f.parse::<usize>()
                .map_err(|_| parse_err(line_no, format!("`{f}` is not a non-negative integer")))
        })
        .collect()
}

impl GraphFile {
    pub fn new(d: usize, graph: Graph) -> Self {
        GraphFile {
            d,
            graph,
            family: None,
        }
    }

    pub fn from_family(family: Family) -> Result<Self> {
        let d = match family {
            Family::Complete { k } => k.saturating_sub(1).max(1),
            Family::Banana { d, .. }
            | Family::Hyperbanana { d, .. }
            | Family::EvenHyperbanana { d, .. } => d,
        };
        Ok(GraphFile {
            d,
            graph: family.build()?,
            family: Some(family),
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut family = None;
        let mut header: Option<(usize, usize, usize)> = None;
        let mut graph = Graph::empty(0);
        let mut last_line = 0;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            last_line = line_no;
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(comment) = line.strip_prefix('#') {
                let mut words = comment.split_whitespace();
                if header.is_none() && words.next() == Some("family") {
                    let name = words
                        .next()
                        .ok_or_else(|| parse_err(line_no, "family comment without a name"))?;
                    let params = words
                        .map(|w| {
                            w.parse::<usize>().map_err(|_| {
                                parse_err(line_no, format!("bad family parameter `{w}`"))
                            })
                        })
                        .collect::<Result<Vec<_>>>()?;
                    family = Some(Family::from_parts(name, &params).ok_or_else(|| {
                        parse_err(line_no, format!("unknown family `{name}` {params:?}"))
                    })?);
                }
                continue;
            }
            match header {
                None => {
                    let f = parse_fields(line_no, line, 3, "header `d n m`")?;
                    if f[0] == 0 {
                        return Err(parse_err(line_no, "dimension must be positive"));
                    }
                    header = Some((f[0], f[1], f[2]));
                    graph = Graph::empty(f[1]);
                }
                Some((_, _, m)) => {
                    let f = parse_fields(line_no, line, 2, "edge line `u v`")?;
                    if graph.m() == m {
                        return Err(parse_err(
                            line_no,
                            format!("more edge lines than the declared {m}"),
                        ));
                    }
                    graph
                        .add_edge(f[0], f[1])
                        .map_err(|e| parse_err(line_no, e.to_string()))?;
                }
            }
        }
        let (d, _, m) =
            header.ok_or_else(|| parse_err(last_line.max(1), "missing header `d n m`"))?;
        if graph.m() != m {
            return Err(parse_err(
                last_line,
                format!("header declares {m} edges but {} were listed", graph.m()),
            ));
        }
        Ok(GraphFile { d, graph, family })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(f) = &self.family {
            out.push_str("# family ");
            out.push_str(f.name());
            for p in f.params() {
                let _ = write!(out, " {p}");
            }
            out.push('\n');
        }
        let _ = writeln!(out, "{} {} {}", self.d, self.graph.n(), self.graph.m());
        for (u, v) in self.graph.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}
