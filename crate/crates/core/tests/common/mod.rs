#![allow(dead_code, clippy::needless_range_loop)]

pub mod configs;

use packing_core::graph::Graph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random graph of maximum degree 3 on `n` vertices with up to `tries` edges attempted.
pub fn random_subcubic<R: Rng>(rng: &mut R, n: usize, tries: usize) -> Graph {
    let mut g = Graph::empty(n);
    if n < 2 {
        return g;
    }
    for _ in 0..tries {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v && !g.has_edge(u, v) && g.degree(u) < 3 && g.degree(v) < 3 {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

/// Random connected graph of maximum degree 3: a random tree plus extra edges.
pub fn random_connected_subcubic<R: Rng>(rng: &mut R, n: usize, extra: usize) -> Graph {
    let mut g = Graph::empty(n);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for i in 1..n {
        loop {
            let p = order[rng.gen_range(0..i)];
            if g.degree(p) < 3 {
                g.add_edge(p, order[i]).unwrap();
                break;
            }
        }
    }
    for _ in 0..extra {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v && !g.has_edge(u, v) && g.degree(u) < 3 && g.degree(v) < 3 {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

/// All-pairs distances by Floyd-Warshall; `u32::MAX` when unreachable.
pub fn floyd(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.n();
    let inf = u32::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for &v in g.neighbors(u) {
            d[u][v] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    for row in &mut d {
        for x in row.iter_mut() {
            if *x >= inf {
                *x = u32::MAX;
            }
        }
    }
    d
}

/// Whether a total assignment (colors 1..=k) is a packing coloring.
pub fn is_packing(dist: &[Vec<u32>], radii: &[u32], colors: &[u8]) -> bool {
    let n = colors.len();
    for u in 0..n {
        for v in u + 1..n {
            let c = colors[u];
            if c != 0 && c == colors[v] && dist[u][v] <= radii[c as usize - 1] {
                return false;
            }
        }
    }
    true
}

/// Every assignment of colors `1..=k` to `n` vertices, in odometer order.
pub fn for_each_assignment(n: usize, k: u8, mut f: impl FnMut(&[u8]) -> bool) {
    let mut a = vec![1u8; n];
    loop {
        if f(&a) {
            return;
        }
        let mut i = 0;
        loop {
            if i == n {
                return;
            }
            if a[i] < k {
                a[i] += 1;
                break;
            }
            a[i] = 1;
            i += 1;
        }
    }
}
