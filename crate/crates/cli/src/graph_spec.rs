//! Graph arguments: a family spec such as `Kn:4`, `Hamming:4,2` or `LineK:5`,
//! or a path to a graph file.

use std::path::PathBuf;
use std::str::FromStr;

use anyhow::Context;
use hamming_bootstrap::{make_complete, make_line_graph, Graph, HammingSpace};

pub const KNOWN_FAMILIES: &str = "Kn:<n>, Hamming:<n>,<d>, LineK:<n>";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphSpec {
    Complete(usize),
    Hamming(usize, usize),
    LineOfComplete(usize),
    File(PathBuf),
}

impl FromStr for GraphSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<GraphSpec, String> {
        let Some((family, args)) = s.split_once(':') else {
            return Ok(GraphSpec::File(PathBuf::from(s)));
        };
        let nums = args
            .split(',')
            .map(|a| a.trim().parse::<usize>().map_err(|e| format!("bad parameter `{a}` in `{s}`: {e}")))
            .collect::<Result<Vec<_>, _>>()?;
        match (family, nums.as_slice()) {
            ("Kn", [n]) => Ok(GraphSpec::Complete(*n)),
            ("Hamming", [n, d]) => Ok(GraphSpec::Hamming(*n, *d)),
            ("LineK", [n]) => Ok(GraphSpec::LineOfComplete(*n)),
            ("Kn" | "Hamming" | "LineK", _) => Err(format!("wrong number of parameters in `{s}` (known: {KNOWN_FAMILIES})")),
            _ => Err(format!("unknown graph family `{family}` (known: {KNOWN_FAMILIES})")),
        }
    }
}

impl GraphSpec {
    pub fn build(&self) -> anyhow::Result<Graph> {
        Ok(match self {
            GraphSpec::Complete(n) => make_complete(*n),
            GraphSpec::Hamming(n, d) => HammingSpace::new(*n, *d)?.graph()?,
            GraphSpec::LineOfComplete(n) => make_line_graph(&make_complete(*n)).0,
            GraphSpec::File(path) => {
                let text = std::fs::read_to_string(path).with_context(|| format!("reading graph file {}", path.display()))?;
                Graph::from_text(&text)?
            }
        })
    }
}
