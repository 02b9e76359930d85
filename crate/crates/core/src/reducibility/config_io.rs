//! The configuration file format: a name line, the triple count `T`, `T`
//! lines of three vertex ids, then two graphs given as `n` followed by the
//! upper triangle of the adjacency matrix (`2` = edge, `1` = non-edge). The
//! first graph is the base graph, the second adds the extra edges.

use std::fmt::Write;

use super::Configuration;
use crate::error::{Error, ParseError};
use crate::graph::Graph;
use crate::text::Tokens;

pub fn parse_config_file(input: &[u8]) -> Result<Vec<Configuration>, ParseError> {
    let mut toks = Tokens::from_bytes(input)?;
    let mut out = Vec::new();
    while let Some((name, record_start)) = toks.next_line() {
        let (t, _) = toks.expect_usize("triple count")?;
        let mut triples = Vec::with_capacity(t);
        let mut id_offsets = Vec::with_capacity(3 * t);
        for _ in 0..t {
            let mut tr = [0usize; 3];
            for slot in &mut tr {
                let (v, off) = toks.expect_usize("triple vertex")?;
                if let Some(&(_, first)) = id_offsets.iter().find(|&&(w, _)| w == v) {
                    return Err(ParseError::new(off, format!("vertex {v} repeats the triple vertex at byte {first}")));
                }
                id_offsets.push((v, off));
                *slot = v;
            }
            triples.push(tr);
        }
        let base = parse_matrix(&mut toks, None)?;
        let extra = parse_matrix(&mut toks, Some(base.n()))?;
        if let Some(&(v, off)) = id_offsets.iter().find(|&&(v, _)| v >= base.n()) {
            return Err(ParseError::new(off, format!("vertex {v} out of range for n={}", base.n())));
        }
        let cfg = Configuration::new(name, base, extra, triples).map_err(|e| match e {
            Error::InvalidConfig { message, .. } => ParseError::new(record_start, message),
            other => ParseError::new(record_start, other.to_string()),
        })?;
        out.push(cfg);
    }
    Ok(out)
}

fn parse_matrix(toks: &mut Tokens<'_>, expect_n: Option<usize>) -> Result<Graph, ParseError> {
    let (n, off) = toks.expect_usize("vertex count")?;
    if let Some(m) = expect_n {
        if m != n {
            return Err(ParseError::new(off, format!("extra graph has {n} vertices, base has {m}")));
        }
    }
    let mut g = Graph::empty(n);
    for x in 0..n {
        for y in x + 1..n {
            match toks.next_token() {
                None => {
                    return Err(ParseError::new(toks.offset(), format!("matrix truncated at entry ({x},{y})")));
                }
                Some(("2", _)) => g.add_edge(x, y).expect("each pair visited once"),
                Some(("1", _)) => {}
                Some((tok, off)) => {
                    return Err(ParseError::new(off, format!("matrix entry must be 1 or 2, found `{tok}`")));
                }
            }
        }
    }
    Ok(g)
}

fn write_matrix(out: &mut String, g: &Graph) {
    write!(out, "{}", g.n()).unwrap();
    for x in 0..g.n() {
        out.push(' ');
        for y in x + 1..g.n() {
            out.push_str(if g.has_edge(x, y) { " 2" } else { " 1" });
        }
    }
    out.push('\n');
}

pub fn write_config(cfg: &Configuration) -> String {
    let mut out = String::new();
    writeln!(out, "{}", cfg.name).unwrap();
    writeln!(out, "{}", cfg.triples.len()).unwrap();
    for [b, p1, p2] in &cfg.triples {
        writeln!(out, "{b} {p1} {p2}").unwrap();
    }
    write_matrix(&mut out, &cfg.base);
    write_matrix(&mut out, &cfg.extra);
    out
}

pub fn write_configs(cfgs: &[Configuration]) -> String {
    cfgs.iter().map(write_config).collect::<Vec<_>>().join("\n")
}
