//! Named graphs and configurations.

use super::Graph;
use crate::discharging::RotationSystem;
use crate::error::{Error, Result};
use crate::reducibility::{named_config, Configuration};

pub enum Named {
    Graph(Graph),
    Config(Configuration),
}

pub const GRAPH_NAMES: &[&str] = &[
    "petersen",
    "cycle(n)",
    "complete(n)",
    "sharpness_gadget",
    "sharpness_doubled",
    "cube",
    "dodecahedron",
    "truncated_tetrahedron",
    "chorded_ring",
];

pub const CONFIG_NAMES: &[&str] = &["cfg_3_7_4", "cfg_5_5_5_I", "cfg_3_5_3"];

pub fn build_named(name: &str) -> Result<Named> {
    if let Some(cfg) = named_config(name) {
        return Ok(Named::Config(cfg));
    }
    named_graph(name).map(Named::Graph)
}

pub fn named_graph(name: &str) -> Result<Graph> {
    let unknown = || Error::UnknownName(name.to_string());
    let sized = |prefix: &str| -> Option<usize> {
        name.strip_prefix(prefix)?.strip_suffix(')')?.parse().ok()
    };
    if let Some(n) = sized("cycle(") {
        return cycle(n);
    }
    if let Some(n) = sized("complete(") {
        return complete(n);
    }
    match name {
        "petersen" => Ok(petersen()),
        "sharpness_gadget" => Ok(sharpness_gadget()),
        "sharpness_doubled" => Ok(sharpness_doubled()),
        "cube" => Ok(cube()),
        "dodecahedron" => Ok(dodecahedron()),
        "truncated_tetrahedron" => Ok(truncated_tetrahedron()),
        "chorded_ring" => Ok(chorded_ring()),
        "k4" => complete(4),
        _ => Err(unknown()),
    }
}

fn from_edges(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges).expect("builder edges form a simple graph")
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidGraph(format!("cycle needs at least 3 vertices, got {n}")));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(from_edges(n, &edges))
}

pub fn complete(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Ok(from_edges(n, &edges))
}

/// Outer 5-cycle 0..4, spokes `i - i+5`, inner pentagram on 5..9.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    from_edges(10, &edges)
}

/// Seven vertices `v1..v7` as ids 0..6; `v1` (id 0) has degree 2 and the
/// rest split into triangles `v2 v3 v7` and `v4 v5 v6`.
pub fn sharpness_gadget() -> Graph {
    from_edges(7, &SHARPNESS_EDGES)
}

const SHARPNESS_EDGES: [(usize, usize); 10] =
    [(0, 1), (0, 3), (1, 2), (1, 6), (2, 6), (2, 5), (3, 4), (3, 5), (4, 5), (4, 6)];

/// Faces of the gadget's plane drawing.
const SHARPNESS_FACES: [&[usize]; 5] = [&[1, 2, 6], &[3, 4, 5], &[0, 1, 2, 5, 3], &[0, 1, 6, 4, 3], &[2, 6, 4, 5]];

/// Two gadget copies (ids 0..6 and 7..13) joined by an edge between the
/// degree-2 vertices.
pub fn sharpness_doubled() -> Graph {
    let g = sharpness_gadget();
    let mut d = g.disjoint_union(&g);
    d.add_edge(0, 7).expect("fresh edge");
    d
}

/// Vertex ids are 3-bit coordinates.
pub fn cube() -> Graph {
    let mut edges = Vec::new();
    for v in 0..8usize {
        for bit in [1, 2, 4] {
            if v & bit == 0 {
                edges.push((v, v | bit));
            }
        }
    }
    from_edges(8, &edges)
}

const CUBE_FACES: [[usize; 4]; 6] =
    [[0, 2, 6, 4], [1, 3, 7, 5], [0, 1, 5, 4], [2, 3, 7, 6], [0, 1, 3, 2], [4, 5, 7, 6]];

/// Outer pentagon 0..4, middle 10-cycle 5..14, inner pentagon 15..19.
pub fn dodecahedron() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((15 + i, 15 + (i + 1) % 5));
        edges.push((i, 5 + 2 * i));
        edges.push((15 + i, 5 + 2 * i + 1));
    }
    for j in 0..10 {
        edges.push((5 + j, 5 + (j + 1) % 10));
    }
    from_edges(20, &edges)
}

fn dodecahedron_faces() -> Vec<Vec<usize>> {
    let b = |j: usize| 5 + j % 10;
    let mut faces = vec![(0..5).collect::<Vec<_>>(), (15..20).collect()];
    for i in 0..5 {
        faces.push(vec![i, (i + 1) % 5, b(2 * i + 2), b(2 * i + 1), b(2 * i)]);
        faces.push(vec![15 + i, 15 + (i + 1) % 5, b(2 * i + 3), b(2 * i + 2), b(2 * i + 1)]);
    }
    faces
}

/// Corner `(i, j)` of the truncated tetrahedron sits near tetrahedron vertex
/// `i` towards `j`.
fn tt_id(i: usize, j: usize) -> usize {
    3 * i + if j < i { j } else { j - 1 }
}

pub fn truncated_tetrahedron() -> Graph {
    let mut edges = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            if i == j {
                continue;
            }
            if i < j {
                edges.push((tt_id(i, j), tt_id(j, i)));
            }
            for k in j + 1..4 {
                if k != i {
                    edges.push((tt_id(i, j), tt_id(i, k)));
                }
            }
        }
    }
    from_edges(12, &edges)
}

fn truncated_tetrahedron_faces() -> Vec<Vec<usize>> {
    let mut faces = Vec::new();
    for i in 0..4 {
        faces.push((0..4).filter(|&j| j != i).map(|j| tt_id(i, j)).collect());
    }
    for skip in 0..4 {
        let t: Vec<usize> = (0..4).filter(|&v| v != skip).collect();
        let (i, j, k) = (t[0], t[1], t[2]);
        faces.push(vec![tt_id(i, j), tt_id(j, i), tt_id(j, k), tt_id(k, j), tt_id(k, i), tt_id(i, k)]);
    }
    faces
}

/// A 14-cycle with three chords cutting off a triangle, a 4-face and a 5-face
/// on one side.
pub fn chorded_ring() -> Graph {
    let mut edges: Vec<_> = (0..14).map(|i| (i, (i + 1) % 14)).collect();
    edges.extend([(0, 2), (4, 7), (9, 13)]);
    from_edges(14, &edges)
}

fn chorded_ring_faces() -> Vec<Vec<usize>> {
    vec![
        (0..14).collect(),
        vec![0, 1, 2],
        vec![4, 5, 6, 7],
        vec![9, 10, 11, 12, 13],
        vec![0, 2, 3, 4, 7, 8, 9, 13],
    ]
}

/// Planar graph together with a rotation system for one of its plane drawings.
pub fn planar_embedding(name: &str) -> Result<(Graph, RotationSystem)> {
    let g = named_graph(name)?;
    let faces: Vec<Vec<usize>> = match name {
        "k4" | "complete(4)" => vec![vec![0, 1, 2], vec![0, 2, 3], vec![0, 3, 1], vec![1, 3, 2]],
        "cube" => CUBE_FACES.iter().map(|f| f.to_vec()).collect(),
        "dodecahedron" => dodecahedron_faces(),
        "truncated_tetrahedron" => truncated_tetrahedron_faces(),
        "chorded_ring" => chorded_ring_faces(),
        "sharpness_gadget" => SHARPNESS_FACES.iter().map(|f| f.to_vec()).collect(),
        "sharpness_doubled" => {
            let single = RotationSystem::from_faces(&sharpness_gadget(), &sharpness_faces())?;
            let mut order: Vec<Vec<usize>> = single.orders().to_vec();
            order.extend(single.orders().iter().map(|l| l.iter().map(|v| v + 7).collect::<Vec<_>>()));
            order[0].push(7);
            order[7].push(0);
            return Ok((g.clone(), RotationSystem::new(&g, order)?));
        }
        _ if name.starts_with("cycle(") => {
            let n = g.n();
            vec![(0..n).collect(), (0..n).rev().collect()]
        }
        _ => return Err(Error::UnknownName(format!("{name} (no stored embedding)"))),
    };
    let rot = RotationSystem::from_faces(&g, &faces)?;
    Ok((g, rot))
}

fn sharpness_faces() -> Vec<Vec<usize>> {
    SHARPNESS_FACES.iter().map(|f| f.to_vec()).collect()
}
