use super::Graph;
use crate::error::{Error, Result};

/// Connected components, each sorted, ordered by smallest member.
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut head = 0;
        while head < comp.len() {
            let x = comp[head];
            head += 1;
            for &y in g.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    comp.push(y);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Bridges of `g` with edge `skip` treated as absent. Iterative low-link DFS.
fn bridges_without(g: &Graph, skip: Option<(usize, usize)>) -> Vec<(usize, usize)> {
    let n = g.n();
    let skipped = |a: usize, b: usize| matches!(skip, Some((x, y)) if (x == a && y == b) || (x == b && y == a));
    let mut order = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut clock = 0;
    let mut out = Vec::new();
    for root in 0..n {
        if order[root] != usize::MAX {
            continue;
        }
        order[root] = clock;
        low[root] = clock;
        clock += 1;
        // (vertex, parent, next neighbor index)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(&mut (v, parent, ref mut next)) = stack.last_mut() {
            if let Some(&w) = g.neighbors(v).get(*next) {
                *next += 1;
                if w == parent || skipped(v, w) {
                    continue;
                }
                if order[w] == usize::MAX {
                    order[w] = clock;
                    low[w] = clock;
                    clock += 1;
                    stack.push((w, v, 0));
                } else {
                    low[v] = low[v].min(order[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] > order[parent] {
                        out.push((parent.min(v), parent.max(v)));
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// All minimal edge cuts with at most `max_size` (1 or 2) edges.
///
/// Single bridges come first in the combined lexicographic order; a pair
/// `{e, f}` is reported when neither edge is a bridge and `f` is a bridge of
/// `g - e`.
pub fn find_edge_cuts(g: &Graph, max_size: usize) -> Result<Vec<Vec<(usize, usize)>>> {
    if !(1..=2).contains(&max_size) {
        return Err(Error::InvalidGraph(format!("cut size must be 1 or 2, got {max_size}")));
    }
    let comps = connected_components(g);
    if comps.len() > 1 {
        return Err(Error::Disconnected { components: comps });
    }
    let bridges = bridges_without(g, None);
    let mut cuts: Vec<Vec<(usize, usize)>> = bridges.iter().map(|&e| vec![e]).collect();
    if max_size == 2 {
        for e in g.edges() {
            if bridges.binary_search(&e).is_ok() {
                continue;
            }
            for f in bridges_without(g, Some(e)) {
                if f > e && bridges.binary_search(&f).is_err() {
                    cuts.push(vec![e, f]);
                }
            }
        }
    }
    cuts.sort();
    Ok(cuts)
}
