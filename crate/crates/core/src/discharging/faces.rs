use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::RotationSystem;
use crate::graph::Graph;

/// A closed walk of directed edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    pub darts: Vec<(usize, usize)>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    pub fn vertices(&self) -> Vec<usize> {
        self.darts.iter().map(|&(u, _)| u).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceSet {
    pub faces: Vec<Face>,
    face_of: HashMap<(usize, usize), usize>,
}

impl FaceSet {
    /// Face containing the directed edge `(u, v)`.
    pub fn face_of(&self, u: usize, v: usize) -> usize {
        self.face_of[&(u, v)]
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.faces.iter().map(Face::len).collect()
    }
}

/// Faces by the next-edge rule: `(u, v)` is followed by `(v, w)` where `w`
/// comes after `u` in the rotation at `v`. Faces are numbered by their
/// smallest starting dart.
pub fn trace_faces(g: &Graph, rot: &RotationSystem) -> FaceSet {
    let mut face_of = HashMap::new();
    let mut faces = Vec::new();
    for u in 0..g.n() {
        for &v in g.neighbors(u) {
            if face_of.contains_key(&(u, v)) {
                continue;
            }
            let id = faces.len();
            let mut darts = Vec::new();
            let (mut a, mut b) = (u, v);
            while face_of.insert((a, b), id).is_none() {
                darts.push((a, b));
                let c = rot.next_after(b, a);
                (a, b) = (b, c);
            }
            faces.push(Face { darts });
        }
    }
    FaceSet { faces, face_of }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn k4_and_cube() {
        let (g, rot) = named::planar_embedding("k4").unwrap();
        assert_eq!(trace_faces(&g, &rot).lengths(), vec![3; 4]);
        let (g, rot) = named::planar_embedding("cube").unwrap();
        let f = trace_faces(&g, &rot);
        assert_eq!(f.lengths(), vec![4; 6]);
        assert_eq!(f.lengths().iter().sum::<usize>(), 24);
    }

    #[test]
    fn single_edge_and_path() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let rot = RotationSystem::new(&g, vec![vec![1], vec![0]]).unwrap();
        let f = trace_faces(&g, &rot);
        assert_eq!(f.lengths(), vec![2]);
        let p = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let rot = RotationSystem::new(&p, vec![vec![1], vec![0, 2], vec![1]]).unwrap();
        assert_eq!(trace_faces(&p, &rot).lengths(), vec![4]);
    }

    #[test]
    fn stored_faces_are_recovered() {
        let (g, rot) = named::planar_embedding("chorded_ring").unwrap();
        let mut lens = trace_faces(&g, &rot).lengths();
        lens.sort();
        assert_eq!(lens, vec![3, 4, 5, 8, 14]);
    }
}
