//! Signed rotation systems: per-vertex cyclic orders of incident edges with
//! +-1 edge signs, encoding cellular embeddings in possibly nonorientable
//! surfaces. Face tracing follows the standard rule: crossing an edge of
//! negative sign flips the local orientation, and the next edge is read from
//! the rotation in the flipped direction.
//!
//! Also the concrete embeddings derived from the rectangle drawings: the
//! grid family and Y_k on the Klein bottle, Z_k on the projective plane.

use std::collections::HashMap;

use serde_json::json;

use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::quad::{XGraph, YGraph, ZGraph};

/// A closed facial walk: the vertices visited, one per traversed edge side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceWalk {
    pub vertices: Vec<usize>,
}

impl FaceWalk {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// A signed rotation system over a host graph.
pub struct SignedEmbedding {
    vertex_count: usize,
    /// Edge id -> endpoints (u < v), lexicographic by id.
    edges: Vec<(usize, usize)>,
    /// Vertex -> cyclic order of incident edge ids.
    rotations: Vec<Vec<usize>>,
    /// Edge id -> +1 or -1.
    signs: Vec<i8>,
    /// (vertex, edge id) -> position in the rotation.
    position: HashMap<(usize, usize), usize>,
}

impl SignedEmbedding {
    /// Builds an embedding from per-vertex cyclic neighbor lists and per-edge
    /// signs keyed by endpoint pairs. Every rotation list must be a
    /// permutation of the vertex's neighborhood in `g`, and every edge must
    /// have a sign.
    pub fn new(
        g: &LabeledGraph,
        neighbor_rotations: Vec<Vec<usize>>,
        edge_signs: &HashMap<(usize, usize), i8>,
    ) -> Result<Self> {
        let n = g.vertex_count();
        if neighbor_rotations.len() != n {
            return Err(Error::InvalidEmbedding(format!(
                "{} rotation lists for {n} vertices",
                neighbor_rotations.len()
            )));
        }
        let edges = g.edges();
        let edge_id: HashMap<(usize, usize), usize> =
            edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut rotations = Vec::with_capacity(n);
        for (v, nbrs) in neighbor_rotations.iter().enumerate() {
            let mut expected: Vec<usize> = g.neighbors(v).collect();
            expected.sort_unstable();
            let mut got = nbrs.clone();
            got.sort_unstable();
            if expected != got {
                return Err(Error::InvalidEmbedding(format!(
                    "rotation at vertex {v} is not a permutation of its neighborhood"
                )));
            }
            rotations.push(
                nbrs.iter()
                    .map(|&u| edge_id[&(v.min(u), v.max(u))])
                    .collect::<Vec<usize>>(),
            );
        }
        let mut signs = vec![0i8; edges.len()];
        for (i, &(u, v)) in edges.iter().enumerate() {
            match edge_signs.get(&(u, v)) {
                Some(&s) if s == 1 || s == -1 => signs[i] = s,
                Some(&s) => {
                    return Err(Error::InvalidEmbedding(format!("sign {s} on edge ({u},{v})")))
                }
                None => {
                    return Err(Error::InvalidEmbedding(format!("edge ({u},{v}) has no sign")))
                }
            }
        }
        let mut position = HashMap::new();
        for (v, rot) in rotations.iter().enumerate() {
            for (p, &e) in rot.iter().enumerate() {
                position.insert((v, e), p);
            }
        }
        Ok(SignedEmbedding { vertex_count: n, edges, rotations, signs, position })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn sign(&self, edge: usize) -> i8 {
        self.signs[edge]
    }

    fn dart_head(&self, dart: usize) -> usize {
        let (u, v) = self.edges[dart / 2];
        if dart % 2 == 0 {
            v
        } else {
            u
        }
    }

    fn dart_tail(&self, dart: usize) -> usize {
        let (u, v) = self.edges[dart / 2];
        if dart % 2 == 0 {
            u
        } else {
            v
        }
    }

    /// Transition of the face-tracing permutation on (dart, flag) states.
    /// States are encoded as dart * 2 + (flag == -1).
    fn next_state(&self, state: usize) -> usize {
        let dart = state / 2;
        let flag = if state % 2 == 0 { 1i8 } else { -1 };
        let e = dart / 2;
        let v = self.dart_head(dart);
        let flag2 = flag * self.signs[e];
        let rot = &self.rotations[v];
        let p = self.position[&(v, e)] as isize;
        let d = rot.len() as isize;
        let q = if flag2 == 1 { (p + 1) % d } else { (p - 1 + d) % d };
        let f = rot[q as usize];
        let (a, _) = self.edges[f];
        let out_dart = if a == v { 2 * f } else { 2 * f + 1 };
        out_dart * 2 + usize::from(flag2 == -1)
    }

    /// Reversal involution pairing the two traversals of each face.
    fn reverse_state(&self, state: usize) -> usize {
        let dart = state / 2;
        let flag = if state % 2 == 0 { 1i8 } else { -1 };
        let e = dart / 2;
        let rev_dart = dart ^ 1;
        let new_flag = -flag * self.signs[e];
        rev_dart * 2 + usize::from(new_flag == -1)
    }

    /// Traces all faces. Each face is found twice (once per traversal
    /// direction); one representative per pair is returned, deterministic by
    /// smallest contained state.
    pub fn trace_faces(&self) -> Result<Vec<FaceWalk>> {
        let states = 4 * self.edges.len();
        let mut orbit_of = vec![usize::MAX; states];
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        for s0 in 0..states {
            if orbit_of[s0] != usize::MAX {
                continue;
            }
            let id = orbits.len();
            let mut orbit = Vec::new();
            let mut s = s0;
            loop {
                if orbit_of[s] != usize::MAX {
                    if s != s0 || orbit.is_empty() {
                        return Err(Error::InvalidEmbedding(
                            "face tracing is not a permutation".into(),
                        ));
                    }
                    break;
                }
                orbit_of[s] = id;
                orbit.push(s);
                s = self.next_state(s);
            }
            orbits.push(orbit);
        }
        // Pair each orbit with its reversal; keep the one holding the
        // smaller minimum state.
        let mut faces = Vec::new();
        for orbit in &orbits {
            let rev = orbit_of[self.reverse_state(orbit[0])];
            let rev_min = orbits[rev][0];
            if rev == orbit_of[orbit[0]] {
                return Err(Error::InvalidEmbedding(
                    "a facial walk coincides with its own reversal".into(),
                ));
            }
            if orbit[0] < rev_min {
                faces.push(FaceWalk {
                    vertices: orbit.iter().map(|&s| self.dart_tail(s / 2)).collect(),
                });
            }
        }
        let total: usize = faces.iter().map(|f| f.len()).sum();
        if total != 2 * self.edges.len() {
            return Err(Error::InvalidEmbedding(format!(
                "faces cover {total} edge sides, expected {}",
                2 * self.edges.len()
            )));
        }
        Ok(faces)
    }

    /// V - E + F of the embedded (closed, cellular) surface.
    pub fn euler_characteristic(&self) -> Result<i64> {
        let f = self.trace_faces()?.len() as i64;
        Ok(self.vertex_count as i64 - self.edges.len() as i64 + f)
    }

    /// The surface is orientable iff every cycle has positive sign product:
    /// propagate signs over a spanning forest and check the non-tree edges.
    pub fn is_orientable(&self) -> bool {
        let n = self.vertex_count;
        let mut rho = vec![0i8; n];
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            adj[u].push((v, i));
            adj[v].push((u, i));
        }
        for root in 0..n {
            if rho[root] != 0 {
                continue;
            }
            rho[root] = 1;
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                for &(v, e) in &adj[u] {
                    if rho[v] == 0 {
                        rho[v] = rho[u] * self.signs[e];
                        stack.push(v);
                    }
                }
            }
        }
        self.edges
            .iter()
            .enumerate()
            .all(|(e, &(u, v))| self.signs[e] == rho[u] * rho[v])
    }

    /// All faces are quadrilaterals.
    pub fn is_quadrangulation(&self) -> Result<bool> {
        Ok(self.trace_faces()?.iter().all(|f| f.len() == 4))
    }

    /// Histogram of face lengths, sorted by length.
    pub fn face_histogram(&self) -> Result<Vec<(usize, usize)>> {
        let mut counts: std::collections::BTreeMap<usize, usize> = Default::default();
        for f in self.trace_faces()? {
            *counts.entry(f.len()).or_insert(0) += 1;
        }
        Ok(counts.into_iter().collect())
    }

    /// Serializes as {"rotations": {vertex: [edgeId, ...]}, "signs": {edgeId: s}}.
    pub fn to_json(&self) -> serde_json::Value {
        let rotations: serde_json::Map<String, serde_json::Value> = self
            .rotations
            .iter()
            .enumerate()
            .map(|(v, rot)| (v.to_string(), json!(rot)))
            .collect();
        let signs: serde_json::Map<String, serde_json::Value> = self
            .signs
            .iter()
            .enumerate()
            .map(|(e, &s)| (e.to_string(), json!(s)))
            .collect();
        json!({ "rotations": rotations, "signs": signs })
    }
}

/// Shared plumbing for the rectangle drawings: a grid of host vertices with
/// slot-by-slot neighbor rules.
struct GridEmbedding {
    host_of: HashMap<(u32, u32), usize>,
    rotations: Vec<Vec<usize>>,
    signs: HashMap<(usize, usize), i8>,
}

impl GridEmbedding {
    fn new(rows: u32, cols: u32, n: usize, host: impl Fn(u32, u32) -> usize) -> Self {
        let mut host_of = HashMap::new();
        for r in 1..=rows {
            for c in 1..=cols {
                host_of.insert((r, c), host(r, c));
            }
        }
        GridEmbedding { host_of, rotations: vec![Vec::new(); n], signs: HashMap::new() }
    }

    fn push(&mut self, from: (u32, u32), to: (u32, u32), sign: i8) {
        let u = self.host_of[&from];
        let v = self.host_of[&to];
        self.rotations[u].push(v);
        self.signs.insert((u.min(v), u.max(v)), sign);
    }

    fn finish(self, g: &LabeledGraph) -> Result<SignedEmbedding> {
        SignedEmbedding::new(g, self.rotations, &self.signs)
    }
}

/// The Klein-bottle grid drawing shared by the grid family and the even Y_k:
/// `rows` x `cols` grid, vertical wraps direct (sign +1), horizontal wraps
/// with a row flip (sign -1). Slot order is (up, right, down, left).
fn klein_grid_embedding(
    rows: u32,
    cols: u32,
    g: &LabeledGraph,
    host: impl Fn(u32, u32) -> usize,
) -> Result<SignedEmbedding> {
    let mut grid = GridEmbedding::new(rows, cols, g.vertex_count(), host);
    for r in 1..=rows {
        for c in 1..=cols {
            let v = (r, c);
            if r > 1 {
                grid.push(v, (r - 1, c), 1);
            } else {
                grid.push(v, (rows, c), 1);
            }
            if c < cols {
                grid.push(v, (r, c + 1), 1);
            } else {
                grid.push(v, (rows + 1 - r, 1), -1);
            }
            if r < rows {
                grid.push(v, (r + 1, c), 1);
            } else {
                grid.push(v, (1, c), 1);
            }
            if c > 1 {
                grid.push(v, (r, c - 1), 1);
            } else {
                grid.push(v, (rows + 1 - r, cols), -1);
            }
        }
    }
    grid.finish(g)
}

/// The Klein-bottle drawing of the grid family: 2h-1 rows by n/2 columns.
/// Needs n >= 6 (at n = 4 the middle row would carry a doubled edge).
pub fn embed_x(x: &XGraph) -> Result<SignedEmbedding> {
    let (h, n) = (x.h, x.n);
    if n < 6 {
        return Err(Error::InvalidParameter(
            "the grid drawing needs perimeter at least 6".into(),
        ));
    }
    let rows = 2 * h - 1;
    let cols = n / 2;
    klein_grid_embedding(rows, cols, &x.graph, |r, c| {
        if r <= h {
            x.vertex(r, c)
        } else {
            x.vertex(2 * h - r, c + n / 2)
        }
    })
}

/// The Klein-bottle drawing of Y_k.
///
/// Even k: the same centrally symmetric grid as the grid family. Odd k: the
/// skew drawing — the vertical lines' boundary segments connect the top of
/// each column to the bottom of the next, the top-right vertex has degree 3,
/// and one extra edge joins the two bottom corners, crossing both boundary
/// identifications.
pub fn embed_y(y: &YGraph) -> Result<SignedEmbedding> {
    let k = y.k;
    if k % 2 == 0 {
        let h = (k + 2) / 2;
        let rows = k + 1;
        return klein_grid_embedding(rows, k + 1, &y.graph, |r, c| {
            if r <= h {
                y.vertex(r, c)
            } else {
                y.vertex(2 * h - r, c + k + 1)
            }
        });
    }
    let side = k + 1;
    let mid = (k + 1) / 2;
    let host = |r: u32, c: u32| {
        if r <= mid {
            y.vertex(r, c + k + 1)
        } else {
            y.vertex(k + 2 - r, c)
        }
    };
    let mut grid = GridEmbedding::new(side, side, y.graph.vertex_count(), host);
    for r in 1..=side {
        for c in 1..=side {
            let v = (r, c);
            // Up: interior, or the skew edge into the next column's bottom;
            // the top-right vertex has no up slot.
            if r > 1 {
                grid.push(v, (r - 1, c), 1);
            } else if c < side {
                grid.push(v, (side, c + 1), 1);
            }
            // Right: interior or flipped horizontal wrap.
            if c < side {
                grid.push(v, (r, c + 1), 1);
            } else {
                grid.push(v, (side + 1 - r, 1), -1);
            }
            // The extra corner edge sits between the right and down slots of
            // the bottom-right vertex.
            if r == side && c == side {
                grid.push(v, (side, 1), -1);
            }
            // Down: interior, skew from the previous column's top, or the
            // extra corner edge at the bottom-left vertex.
            if r < side {
                grid.push(v, (r + 1, c), 1);
            } else if c > 1 {
                grid.push(v, (1, c - 1), 1);
            } else {
                grid.push(v, (side, side), -1);
            }
            // Left: interior or flipped horizontal wrap.
            if c > 1 {
                grid.push(v, (r, c - 1), 1);
            } else {
                grid.push(v, (side + 1 - r, side), -1);
            }
        }
    }
    grid.finish(&y.graph)
}

/// The projective-plane drawing of Z_k: the (k+1) x (k+1) grid with both
/// boundary identifications antipodal (all wraps sign -1) and the two corner
/// pairs joined by single edges (their vertical duplicates are absent).
pub fn embed_z(z: &ZGraph) -> Result<SignedEmbedding> {
    let k = z.k;
    let side = k + 1;
    let host: Box<dyn Fn(u32, u32) -> usize> = if k % 2 == 0 {
        let h = (k + 2) / 2;
        Box::new(move |r: u32, c: u32| {
            if r <= h {
                z.vertex(r, c)
            } else {
                z.vertex(2 * h - r, c + k + 1)
            }
        })
    } else {
        let mid = (k + 1) / 2;
        Box::new(move |r: u32, c: u32| {
            if r <= mid {
                z.vertex(r, c + k + 1)
            } else {
                z.vertex(k + 2 - r, c)
            }
        })
    };
    let mut grid = GridEmbedding::new(side, side, z.graph.vertex_count(), &host);
    for r in 1..=side {
        for c in 1..=side {
            let v = (r, c);
            if r > 1 {
                grid.push(v, (r - 1, c), 1);
            } else if c > 1 && c < side {
                grid.push(v, (side, side + 1 - c), -1);
            }
            if c < side {
                grid.push(v, (r, c + 1), 1);
            } else {
                grid.push(v, (side + 1 - r, 1), -1);
            }
            if r < side {
                grid.push(v, (r + 1, c), 1);
            } else if c > 1 && c < side {
                grid.push(v, (1, side + 1 - c), -1);
            }
            if c > 1 {
                grid.push(v, (r, c - 1), 1);
            } else {
                grid.push(v, (side + 1 - r, side), -1);
            }
        }
    }
    grid.finish(&z.graph)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cycle;

    #[test]
    fn four_cycle_on_the_sphere() {
        let g = cycle(4).unwrap();
        let rotations = (0..4)
            .map(|v| g.neighbors(v).collect::<Vec<_>>())
            .collect::<Vec<_>>();
        let signs = g.edges().into_iter().map(|e| (e, 1i8)).collect();
        let emb = SignedEmbedding::new(&g, rotations, &signs).unwrap();
        let faces = emb.trace_faces().unwrap();
        assert_eq!(faces.len(), 2);
        assert_eq!(emb.euler_characteristic().unwrap(), 2);
        assert!(emb.is_orientable());
        assert!(emb.is_quadrangulation().unwrap());
    }

    #[test]
    fn embedding_validation() {
        let g = cycle(4).unwrap();
        // Wrong rotation content.
        let bad = vec![vec![1, 2], vec![0, 2], vec![1, 3], vec![2, 0]];
        let signs = g.edges().into_iter().map(|e| (e, 1i8)).collect();
        assert!(SignedEmbedding::new(&g, bad, &signs).is_err());
        // Missing sign.
        let rotations = (0..4)
            .map(|v| g.neighbors(v).collect::<Vec<_>>())
            .collect::<Vec<_>>();
        let empty = HashMap::new();
        assert!(SignedEmbedding::new(&g, rotations, &empty).is_err());
    }

    #[test]
    fn x_family_quadrangulates_the_klein_bottle() {
        for h in 2..=4u32 {
            for n in (6..=12u32).step_by(2) {
                let x = XGraph::new(h, n).unwrap();
                let emb = embed_x(&x).unwrap();
                assert_eq!(emb.euler_characteristic().unwrap(), 0, "(h,n)=({h},{n})");
                assert!(!emb.is_orientable(), "(h,n)=({h},{n})");
                assert!(emb.is_quadrangulation().unwrap(), "(h,n)=({h},{n})");
            }
        }
    }

    #[test]
    fn y_family_quadrangulates_the_klein_bottle() {
        for k in 2..=6u32 {
            let y = YGraph::new(k).unwrap();
            let emb = embed_y(&y).unwrap();
            assert_eq!(emb.edge_count(), 2 * emb.vertex_count(), "k={k}");
            assert_eq!(emb.euler_characteristic().unwrap(), 0, "k={k}");
            assert!(!emb.is_orientable(), "k={k}");
            assert!(emb.is_quadrangulation().unwrap(), "k={k}");
        }
    }

    #[test]
    fn z_family_quadrangulates_the_projective_plane() {
        for k in 2..=6u32 {
            let z = ZGraph::new(k).unwrap();
            let emb = embed_z(&z).unwrap();
            assert_eq!(emb.edge_count(), 2 * (emb.vertex_count() - 1), "k={k}");
            assert_eq!(emb.euler_characteristic().unwrap(), 1, "k={k}");
            assert!(!emb.is_orientable(), "k={k}");
            assert!(emb.is_quadrangulation().unwrap(), "k={k}");
        }
    }

    #[test]
    fn small_cases_counts() {
        let z2 = ZGraph::new(2).unwrap();
        let emb = embed_z(&z2).unwrap();
        assert_eq!(emb.vertex_count(), 9);
        assert_eq!(emb.edge_count(), 16);
        assert_eq!(emb.trace_faces().unwrap().len(), 8);

        let y2 = YGraph::new(2).unwrap();
        let emb = embed_y(&y2).unwrap();
        assert_eq!(emb.vertex_count(), 9);
        assert_eq!(emb.edge_count(), 18);
        assert_eq!(emb.trace_faces().unwrap().len(), 9);

        let y3 = YGraph::new(3).unwrap();
        let emb = embed_y(&y3).unwrap();
        assert_eq!(emb.vertex_count(), 16);
        assert_eq!(emb.edge_count(), 32);
        assert_eq!(emb.trace_faces().unwrap().len(), 16);
    }
}
