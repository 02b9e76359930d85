use serde::{Deserialize, Serialize};

use super::{DistanceOracle, Graph};
use crate::error::{Error, Result};

/// Largest graph for which the independence number is computed.
pub const INDEPENDENCE_LIMIT: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureReport {
    pub max_degree: usize,
    pub is_cubic: bool,
    /// `None` when the graph is disconnected.
    pub diameter: Option<u32>,
    pub independence_number: usize,
    /// `None` for forests.
    pub girth: Option<u32>,
}

pub fn structure_report(g: &Graph) -> Result<StructureReport> {
    let oracle = DistanceOracle::new(g);
    Ok(StructureReport {
        max_degree: g.max_degree(),
        is_cubic: g.n() > 0 && (0..g.n()).all(|v| g.degree(v) == 3),
        diameter: oracle.is_connected().then(|| oracle.max_finite()),
        independence_number: independence_number(g)?,
        girth: girth(g),
    })
}

/// Exact independence number by branching on the lowest remaining vertex.
pub fn independence_number(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n > INDEPENDENCE_LIMIT {
        return Err(Error::SizeLimit { n, limit: INDEPENDENCE_LIMIT });
    }
    let closed: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(1u64 << v, |m, &w| m | 1 << w))
        .collect();
    fn go(set: u64, closed: &[u64]) -> usize {
        if set == 0 {
            return 0;
        }
        let v = set.trailing_zeros() as usize;
        let take = 1 + go(set & !closed[v], closed);
        if closed[v] & set == 1 << v {
            // isolated within `set`: always take it
            return take;
        }
        take.max(go(set & !(1u64 << v), closed))
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    Ok(go(all, &closed))
}

/// Length of a shortest cycle.
pub fn girth(g: &Graph) -> Option<u32> {
    let n = g.n();
    let mut best: Option<u32> = None;
    for root in 0..n {
        let mut dist = vec![u32::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                if dist[y] == u32::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if parent[x] != y {
                    let len = dist[x] + dist[y] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}
