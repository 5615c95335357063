//! JSON instance files.
//!
//! ```json
//! {"graph": {"n": 4, "edges": [[0, 1], [1, 2], [2, 3]]},
//!  "A": [0], "B": [3], "rule": "CS", "multiset": [1]}
//! ```
//!
//! `"graph_file"` may replace `"graph"`; it names a file in the plain text
//! graph format, relative to the instance file. `"rule"` and `"multiset"`
//! are optional.

use std::fs;
use std::path::{Path, PathBuf};

use ccr::{Graph, Rule, SizeMultiset};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.n(),
            edges: g.edges().collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph_file: Option<PathBuf>,
    #[serde(rename = "A")]
    pub a: Vec<usize>,
    #[serde(rename = "B")]
    pub b: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rule: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multiset: Option<Vec<usize>>,
}

/// A parsed and validated instance.
#[derive(Debug, Clone)]
pub struct Instance {
    pub graph: Graph,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub rule: Option<Rule>,
    pub multiset: Option<SizeMultiset>,
}

pub fn load_graph_text(path: &Path) -> Result<Graph, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::invalid("io", format!("{}: {e}", path.display())))?;
    Ok(text.parse()?)
}

fn vertex_set(name: &str, vs: &[usize], n: usize) -> Result<Vec<usize>, CliError> {
    let mut sorted = vs.to_vec();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(CliError::invalid(
            "invalid-instance",
            format!("{name} lists vertex {} twice", w[0]),
        ));
    }
    if let Some(v) = sorted.iter().find(|&&v| v >= n) {
        return Err(CliError::invalid(
            "invalid-instance",
            format!("{name} has vertex {v}, but n = {n}"),
        ));
    }
    Ok(sorted)
}

impl Instance {
    /// Validates a decoded instance; `base` resolves `graph_file`.
    pub fn from_file(file: InstanceFile, base: &Path) -> Result<Self, CliError> {
        let graph = match (file.graph, file.graph_file) {
            (Some(g), None) => Graph::new(g.n, g.edges)?,
            (None, Some(p)) => load_graph_text(&base.join(p))?,
            _ => {
                return Err(CliError::invalid(
                    "invalid-instance",
                    "exactly one of \"graph\" and \"graph_file\" is required",
                ))
            }
        };
        let a = vertex_set("A", &file.a, graph.n())?;
        let b = vertex_set("B", &file.b, graph.n())?;
        let rule = file.rule.as_deref().map(str::parse).transpose()?;
        let multiset = file.multiset.map(SizeMultiset::new).transpose()?;
        if let Some(m) = &multiset {
            for (name, set) in [("A", &a), ("B", &b)] {
                let got = graph.cc_multiset(set)?;
                if &got != m {
                    return Err(CliError::invalid(
                        "invalid-instance",
                        format!("m({name}) = {got} differs from the given multiset {m}"),
                    ));
                }
            }
        }
        Ok(Instance {
            graph,
            a,
            b,
            rule,
            multiset,
        })
    }

    pub fn parse(text: &str, base: &Path) -> Result<Self, CliError> {
        Instance::from_file(serde_json::from_str(text)?, base)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::invalid("io", format!("{}: {e}", path.display())))?;
        Instance::parse(&text, path.parent().unwrap_or(Path::new(".")))
    }
}

/// Parses `"2,3,3"` into a multiset.
pub fn parse_multiset(text: &str) -> Result<SizeMultiset, CliError> {
    let sizes = text
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>().map_err(|_| {
                CliError::invalid("invalid-input", format!("bad multiset entry {s:?}"))
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SizeMultiset::new(sizes)?)
}
