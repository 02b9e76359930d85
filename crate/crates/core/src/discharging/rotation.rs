use std::collections::HashMap;
use std::fmt::Write;

use crate::error::{Error, ParseError, Result};
use crate::graph::Graph;

/// Cyclic order of the neighbors around every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationSystem {
    orders: Vec<Vec<usize>>,
    /// `position[v][w]`: index of `w` in `orders[v]`.
    position: Vec<HashMap<usize, usize>>,
}

impl RotationSystem {
    pub fn new(g: &Graph, orders: Vec<Vec<usize>>) -> Result<Self> {
        if orders.len() != g.n() {
            return Err(Error::InvalidRotation(format!("{} rows for {} vertices", orders.len(), g.n())));
        }
        for (v, row) in orders.iter().enumerate() {
            let mut sorted = row.clone();
            sorted.sort_unstable();
            if sorted != g.neighbors(v) {
                return Err(Error::InvalidRotation(format!(
                    "row {v} is {row:?}, not a permutation of the neighbors {:?}",
                    g.neighbors(v)
                )));
            }
        }
        let position = orders.iter().map(|row| row.iter().enumerate().map(|(i, &w)| (w, i)).collect()).collect();
        Ok(RotationSystem { orders, position })
    }

    /// Rotation whose faces are the given vertex cycles. The cycles are
    /// oriented consistently first, so their direction does not matter.
    pub fn from_faces(g: &Graph, faces: &[Vec<usize>]) -> Result<Self> {
        let oriented = orient(faces)?;
        // around v, the neighbor after `u` is `w` whenever u -> v -> w is on a face
        let mut succ: Vec<HashMap<usize, usize>> = vec![HashMap::new(); g.n()];
        for f in &oriented {
            let k = f.len();
            for i in 0..k {
                let (u, v, w) = (f[i], f[(i + 1) % k], f[(i + 2) % k]);
                if succ[v].insert(u, w).is_some() {
                    return Err(Error::InvalidRotation(format!("corner {u}-{v} used twice")));
                }
            }
        }
        let mut orders = Vec::with_capacity(g.n());
        for v in 0..g.n() {
            let nb = g.neighbors(v);
            let mut row = Vec::with_capacity(nb.len());
            if let Some(&start) = nb.first() {
                let mut cur = start;
                loop {
                    row.push(cur);
                    cur = match succ[v].get(&cur) {
                        Some(&w) => w,
                        None if nb.len() == 1 => start,
                        None => return Err(Error::InvalidRotation(format!("faces leave a gap at vertex {v}"))),
                    };
                    if cur == start {
                        break;
                    }
                    if row.len() > nb.len() {
                        return Err(Error::InvalidRotation(format!("faces do not close up at vertex {v}")));
                    }
                }
            }
            orders.push(row);
        }
        RotationSystem::new(g, orders)
    }

    pub fn orders(&self) -> &[Vec<usize>] {
        &self.orders
    }

    /// Neighbor following `u` in the rotation at `v`.
    pub fn next_after(&self, v: usize, u: usize) -> usize {
        let row = &self.orders[v];
        row[(self.position[v][&u] + 1) % row.len()]
    }

    /// Line `i` lists the neighbors of vertex `i` in cyclic order.
    pub fn parse(input: &[u8], g: &Graph) -> std::result::Result<Self, ParseError> {
        let text = std::str::from_utf8(input).map_err(|e| ParseError::new(e.valid_up_to(), "input is not valid UTF-8"))?;
        let mut orders = vec![Vec::new(); g.n()];
        let mut offset = 0;
        for (i, line) in text.split('\n').enumerate() {
            let line_start = offset;
            offset += line.len() + 1;
            let body = line.trim_end_matches('\r');
            if i >= g.n() {
                if body.trim().is_empty() {
                    continue;
                }
                return Err(ParseError::new(line_start, format!("more than {} rotation lines", g.n())));
            }
            let mut col = 0;
            for tok in body.split_ascii_whitespace() {
                let at = line_start + body[col..].find(tok).unwrap() + col;
                col = at - line_start + tok.len();
                let w: usize = tok.parse().map_err(|_| ParseError::new(at, format!("bad vertex `{tok}`")))?;
                orders[i].push(w);
            }
        }
        RotationSystem::new(g, orders).map_err(|e| ParseError::new(0, e.to_string()))
    }

    pub fn write(&self) -> String {
        let mut out = String::new();
        for row in &self.orders {
            let parts: Vec<String> = row.iter().map(usize::to_string).collect();
            writeln!(out, "{}", parts.join(" ")).unwrap();
        }
        out
    }
}

/// Orients vertex cycles so that adjacent cycles run through their shared
/// edges in opposite directions.
fn orient(faces: &[Vec<usize>]) -> Result<Vec<Vec<usize>>> {
    let edge_key = |a: usize, b: usize| (a.min(b), a.max(b));
    let mut by_edge: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (i, f) in faces.iter().enumerate() {
        for j in 0..f.len() {
            by_edge.entry(edge_key(f[j], f[(j + 1) % f.len()])).or_default().push(i);
        }
    }
    let mut out: Vec<Option<Vec<usize>>> = vec![None; faces.len()];
    for root in 0..faces.len() {
        if out[root].is_some() {
            continue;
        }
        out[root] = Some(faces[root].clone());
        let mut stack = vec![root];
        while let Some(i) = stack.pop() {
            let f = out[i].clone().unwrap();
            for j in 0..f.len() {
                let (a, b) = (f[j], f[(j + 1) % f.len()]);
                for &other in &by_edge[&edge_key(a, b)] {
                    if other == i {
                        continue;
                    }
                    let g = &faces[other];
                    let forward = (0..g.len()).any(|k| g[k] == a && g[(k + 1) % g.len()] == b);
                    let want: Vec<usize> = if forward { g.iter().rev().copied().collect() } else { g.clone() };
                    match &out[other] {
                        None => {
                            out[other] = Some(want);
                            stack.push(other);
                        }
                        Some(have) => {
                            let runs_ab = (0..have.len()).any(|k| have[k] == a && have[(k + 1) % have.len()] == b);
                            if runs_ab {
                                return Err(Error::InvalidRotation("faces cannot be oriented consistently".into()));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(out.into_iter().map(Option::unwrap).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn parse_round_trip() {
        let (g, rot) = named::planar_embedding("cube").unwrap();
        let text = rot.write();
        assert_eq!(RotationSystem::parse(text.as_bytes(), &g).unwrap(), rot);
        assert!(RotationSystem::parse(b"1 2\n", &g).is_err());
    }

    #[test]
    fn rejects_non_permutation() {
        let g = named::complete(3).unwrap();
        assert!(RotationSystem::new(&g, vec![vec![1, 2], vec![0, 2], vec![0, 0]]).is_err());
        assert!(RotationSystem::new(&g, vec![vec![1, 2], vec![0, 2], vec![0, 1]]).is_ok());
    }
}
