use serde::{Deserialize, Serialize};

use super::{extend, prove_uncolorable, verify, Coloring, PackingSpec, ProveOptions};
use crate::error::Error;
use crate::graph::{DistanceOracle, Graph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetReport {
    pub checks: Vec<GadgetCheck>,
    /// A (1,2^5)-coloring of the doubled graph, when one was found.
    pub doubled_coloring: Option<Coloring>,
    pub refutation_nodes: Option<u64>,
}

impl GadgetReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect()
    }
}

/// Two copies of `g1` joined by an edge between the copies of `v1`.
pub fn double_at(g1: &Graph, v1: usize) -> Graph {
    let mut d = g1.disjoint_union(g1);
    d.add_edge(v1, v1 + g1.n()).expect("copies are disjoint");
    d
}

/// Checks the properties a sharpness gadget must have: seven vertices,
/// subcubic with `v1` of degree 2, diameter 2, the other six vertices split
/// into two disjoint triangles, and a doubled graph that admits a
/// (1,2^5)-coloring but no (1,2^4)-coloring.
pub fn validate_sharpness_gadget(g1: &Graph, v1: usize) -> GadgetReport {
    let mut checks = Vec::new();
    let mut push = |name: &str, passed: bool, detail: String| {
        checks.push(GadgetCheck { name: name.to_string(), passed, detail });
    };
    let n = g1.n();
    push("order", n == 7, format!("{n} vertices"));

    if v1 >= n {
        push("v1", false, format!("vertex {v1} out of range"));
        return GadgetReport { checks, doubled_coloring: None, refutation_nodes: None };
    }
    let max_deg = g1.max_degree();
    push("max_degree", max_deg <= 3, format!("max degree {max_deg}"));
    push("v1_degree", g1.degree(v1) == 2, format!("deg(v1) = {}", g1.degree(v1)));

    let oracle = DistanceOracle::new(g1);
    let diameter = oracle.is_connected().then(|| oracle.max_finite());
    push("diameter", diameter == Some(2), format!("diameter {diameter:?}"));

    let rest: Vec<usize> = (0..n).filter(|&v| v != v1).collect();
    let cover = triangle_cover(g1, &rest);
    push(
        "triangle_cover",
        cover.is_some(),
        match cover {
            Some((a, b)) => format!("{a:?} {b:?}"),
            None => "no two disjoint triangles cover the other vertices".into(),
        },
    );

    let doubled = double_at(g1, v1);
    let five = PackingSpec::one_and_twos(5);
    let found = extend(&doubled, &five, &Coloring::uncolored(doubled.n())).ok().flatten();
    let verified = found.as_ref().is_some_and(|c| verify(&doubled, &five, c).map(|r| r.valid).unwrap_or(false));
    push(
        "doubled_1_2^5_colorable",
        verified,
        match &found {
            Some(c) => format!("coloring {c}"),
            None => "no coloring".into(),
        },
    );

    let four = PackingSpec::one_and_twos(4);
    let (refuted, nodes) = match prove_uncolorable(&doubled, &four, ProveOptions::default()) {
        Ok(cert) => (cert.exhaustive, Some(cert.node_count)),
        Err(Error::Colorable { coloring }) => {
            push("doubled_not_1_2^4_colorable", false, format!("coloring {coloring}"));
            return GadgetReport { checks, doubled_coloring: found, refutation_nodes: None };
        }
        Err(_) => (false, None),
    };
    push("doubled_not_1_2^4_colorable", refuted, format!("{} search nodes", nodes.unwrap_or(0)));
    GadgetReport { checks, doubled_coloring: found, refutation_nodes: nodes }
}

fn triangle_cover(g: &Graph, rest: &[usize]) -> Option<([usize; 3], [usize; 3])> {
    if rest.len() != 6 {
        return None;
    }
    let is_tri = |t: [usize; 3]| g.has_edge(t[0], t[1]) && g.has_edge(t[1], t[2]) && g.has_edge(t[0], t[2]);
    let first = rest[0];
    for i in 1..6 {
        for j in i + 1..6 {
            let a = [first, rest[i], rest[j]];
            let b: Vec<usize> = rest.iter().copied().filter(|v| !a.contains(v)).collect();
            let b = [b[0], b[1], b[2]];
            if is_tri(a) && is_tri(b) {
                return Some((a, b));
            }
        }
    }
    None
}
