use std::fmt::Write;

use super::Graph;
use crate::error::{Error, ParseError};
use crate::text::Tokens;

/// Reads the `n m` header followed by `m` lines of `u v`.
pub fn parse_edge_list(input: &[u8]) -> Result<Graph, ParseError> {
    let mut toks = Tokens::from_bytes(input)?;
    let (n, _) = toks.expect_usize("vertex count")?;
    let (m, _) = toks.expect_usize("edge count")?;
    let mut g = Graph::empty(n);
    for _ in 0..m {
        let (u, off) = toks.expect_usize("edge endpoint")?;
        let (v, _) = toks.expect_usize("edge endpoint")?;
        g.add_edge(u, v).map_err(|e| match e {
            Error::InvalidGraph(msg) => ParseError::new(off, msg),
            other => ParseError::new(off, other.to_string()),
        })?;
    }
    if !toks.at_end() {
        return Err(ParseError::new(toks.offset(), format!("trailing data after {m} edges")));
    }
    Ok(g)
}

pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
