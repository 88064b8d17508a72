//! The graph families around surface quadrangulations: Moebius ladders, the
//! bottom-layer graphs L_k, the two-layer gadgets U_k, the grid family
//! X_{h,n}, and the spanning subgraphs Y_k (Klein bottle) and Z_k (projective
//! plane) of the 4-chromatic Schrijver graphs, plus the 4-chromatic graph Q.

use std::collections::HashMap;

use crate::drum::ReducedDrum;
use crate::error::{Error, Result};
use crate::graph::{cartesian_product, cycle, identify_vertices, path, LabeledGraph, VertexLabel};
use crate::schrijver::mod1;

/// The Moebius ladder M_n: the even cycle C_n plus all antipodal chords.
pub fn mobius_ladder(n: u32) -> Result<LabeledGraph> {
    if n < 4 || n % 2 != 0 {
        return Err(Error::InvalidParameter(format!(
            "Moebius ladder needs even n >= 4, got {n}"
        )));
    }
    let g = cycle(n)?;
    let chords: Vec<_> = (0..n as usize / 2).map(|i| (i, i + n as usize / 2)).collect();
    g.add_edges(&chords)
}

/// True iff {a, b} (1-based positions on C_{2k+2}) is an edge of L_k.
pub(crate) fn is_ell_edge(k: u32, a: u32, b: u32) -> bool {
    let n = 2 * k + 2;
    let (a, b) = (a.min(b), a.max(b));
    let cyclic = b - a == 1 || (a == 1 && b == n);
    if cyclic {
        return true;
    }
    if k % 2 == 0 {
        b - a == n / 2
    } else {
        // Extra edges i(i+k) for i in [k+1].
        b - a == k && a <= k + 1
    }
}

/// The bottom-layer graph L_k on C_{2k+2}: for even k the Moebius ladder
/// M_{2k+2}; for odd k the cycle plus the extra edges i(i+k) for i in [k+1].
/// Bipartite for every k.
pub fn ell(k: u32) -> Result<LabeledGraph> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("ell needs k >= 2, got {k}")));
    }
    let n = 2 * k + 2;
    if k % 2 == 0 {
        return mobius_ladder(n);
    }
    let g = cycle(n)?;
    let chords: Vec<_> = (1..=k + 1)
        .map(|i| ((i - 1) as usize, (i + k - 1) as usize))
        .collect();
    g.add_edges(&chords)
}

/// The two-layer gadget U_k on P_2 square C_{2k+2}: the bottom layer induces
/// L_k; for odd k the top layer additionally gets the antipodal chords.
pub struct UGraph {
    pub k: u32,
    pub graph: LabeledGraph,
}

impl UGraph {
    pub fn new(k: u32) -> Result<Self> {
        if k < 3 {
            return Err(Error::InvalidParameter(format!("u_graph needs k >= 3, got {k}")));
        }
        let n = 2 * k + 2;
        let base = cartesian_product(&path(2)?, &cycle(n)?)?;
        let mut extra = Vec::new();
        // Bottom-layer extra edges of L_k (the cycle edges are already there).
        if k % 2 == 0 {
            for i in 1..=n / 2 {
                extra.push((Self::idx(n, 1, i), Self::idx(n, 1, i + n / 2)));
            }
        } else {
            for i in 1..=k + 1 {
                extra.push((Self::idx(n, 1, i), Self::idx(n, 1, i + k)));
            }
            // Top-layer antipodal chords.
            for i in 1..=k + 1 {
                extra.push((Self::idx(n, 2, i), Self::idx(n, 2, i + k + 1)));
            }
        }
        let graph = base.add_edges(&extra)?;
        Ok(UGraph { k, graph })
    }

    fn idx(n: u32, i: u32, j: u32) -> usize {
        ((i - 1) * n + (mod1(j as i64, n) - 1)) as usize
    }

    pub fn vertex(&self, i: u32, j: u32) -> usize {
        Self::idx(2 * self.k + 2, i, j)
    }

    /// The extra edges of U_k: the non-cycle chords of L_k in the bottom
    /// layer, as (j, j') position pairs, lexicographic.
    pub fn extra_edges(&self) -> Vec<(u32, u32)> {
        let k = self.k;
        if k % 2 == 0 {
            (1..=k + 1).map(|i| (i, i + k + 1)).collect()
        } else {
            (1..=k + 1).map(|i| (i, i + k)).collect()
        }
    }
}

pub fn u_graph(k: u32) -> Result<LabeledGraph> {
    Ok(UGraph::new(k)?.graph)
}

/// The 4-regular family X_{h,n}: P_h square C_n with antipodal chords added
/// on the bottom layer and antipodal pairs identified on the top layer.
/// (For n = 4 the collapsed top makes two vertices of degree 3.)
pub struct XGraph {
    pub h: u32,
    pub n: u32,
    pub graph: LabeledGraph,
    by_coord: HashMap<(u32, u32), usize>,
}

impl XGraph {
    pub fn new(h: u32, n: u32) -> Result<Self> {
        if h < 2 {
            return Err(Error::InvalidParameter(format!("x_graph needs h >= 2, got {h}")));
        }
        if n < 4 || n % 2 != 0 {
            return Err(Error::InvalidParameter(format!(
                "x_graph needs even n >= 4, got {n}"
            )));
        }
        let base = cartesian_product(&path(h)?, &cycle(n)?)?;
        let idx = |i: u32, j: u32| ((i - 1) * n + (j - 1)) as usize;
        let chords: Vec<_> = (1..=n / 2).map(|i| (idx(1, i), idx(1, i + n / 2))).collect();
        let with_chords = base.add_edges(&chords)?;
        let pairs: Vec<_> = (1..=n / 2).map(|i| (idx(h, i), idx(h, i + n / 2))).collect();
        let graph = identify_vertices(&with_chords, &pairs)?;
        let mut by_coord = HashMap::new();
        for v in 0..graph.vertex_count() {
            match graph.label(v) {
                VertexLabel::Pair(i, j) => {
                    by_coord.insert((*i as u32, *j as u32), v);
                }
                VertexLabel::Merged(a, b) => {
                    for part in [a.as_ref(), b.as_ref()] {
                        if let VertexLabel::Pair(i, j) = part {
                            by_coord.insert((*i as u32, *j as u32), v);
                        }
                    }
                }
                other => {
                    return Err(Error::CheckFailed(format!("unexpected label {other}")));
                }
            }
        }
        Ok(XGraph { h, n, graph, by_coord })
    }

    pub fn vertex(&self, i: u32, j: u32) -> usize {
        self.by_coord[&(i, mod1(j as i64, self.n))]
    }
}

pub fn x_graph(h: u32, n: u32) -> Result<LabeledGraph> {
    Ok(XGraph::new(h, n)?.graph)
}

/// The Klein-bottle quadrangulating spanning subgraph Y_k of SG(2k+2, k):
/// the reduced drum of height k+1 with its bottom layer thinned from the
/// complete bipartite graph to L_k.
pub struct YGraph {
    pub k: u32,
    pub graph: LabeledGraph,
    pub drum: ReducedDrum,
}

impl YGraph {
    pub fn new(k: u32) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidParameter(format!("y_graph needs k >= 2, got {k}")));
        }
        let n = 2 * k + 2;
        let drum = ReducedDrum::new(k + 1, n)?;
        let mut doomed = Vec::new();
        for (u, v) in drum.graph.edges() {
            let (iu, ju) = drum.reps[u];
            let (iv, jv) = drum.reps[v];
            if iu == 1 && iv == 1 && !is_ell_edge(k, ju, jv) {
                doomed.push((u, v));
            }
        }
        let graph = drum.graph.remove_edges(&doomed)?;
        Ok(YGraph { k, graph, drum })
    }

    /// Vertex carrying the drum coordinate (i, j).
    pub fn vertex(&self, i: u32, j: u32) -> usize {
        self.drum.vertex(i, mod1(j as i64, 2 * self.k + 2))
    }

    pub fn top_layer(&self) -> u32 {
        self.drum.top_layer()
    }
}

pub fn y_graph(k: u32) -> Result<LabeledGraph> {
    Ok(YGraph::new(k)?.graph)
}

/// The projective-plane quadrangulating spanning subgraph Z_k of SG(2k+2, k):
/// the reduced drum with its bottom layer replaced by the cycle C_{2k+2}
/// plus the diagonals {a, b} with a + b = 1 mod 2k+2.
pub struct ZGraph {
    pub k: u32,
    pub graph: LabeledGraph,
    pub drum: ReducedDrum,
}

impl ZGraph {
    pub fn new(k: u32) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidParameter(format!("z_graph needs k >= 2, got {k}")));
        }
        let n = 2 * k + 2;
        let drum = ReducedDrum::new(k + 1, n)?;
        let keep = |a: u32, b: u32| {
            let (a, b) = (a.min(b), a.max(b));
            let cyclic = b - a == 1 || (a == 1 && b == n);
            cyclic || (a + b) % n == 1 % n
        };
        let mut doomed = Vec::new();
        for (u, v) in drum.graph.edges() {
            let (iu, ju) = drum.reps[u];
            let (iv, jv) = drum.reps[v];
            if iu == 1 && iv == 1 && !keep(ju, jv) {
                doomed.push((u, v));
            }
        }
        let graph = drum.graph.remove_edges(&doomed)?;
        Ok(ZGraph { k, graph, drum })
    }

    pub fn vertex(&self, i: u32, j: u32) -> usize {
        self.drum.vertex(i, mod1(j as i64, 2 * self.k + 2))
    }
}

pub fn z_graph(k: u32) -> Result<LabeledGraph> {
    Ok(ZGraph::new(k)?.graph)
}

/// The 4-chromatic graph Q: Y_3 with the two extra edges (1,2)(1,5) and
/// (1,3)(1,6) deleted.
pub fn q_graph() -> Result<LabeledGraph> {
    let y = YGraph::new(3)?;
    y.graph.remove_edges(&[
        (y.vertex(1, 2), y.vertex(1, 5)),
        (y.vertex(1, 3), y.vertex(1, 6)),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexMap;
    use crate::schrijver::Schrijver;

    #[test]
    fn mobius_ladder_4_is_complete() {
        let g = mobius_ladder(4).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 6);
        assert!(mobius_ladder(5).is_err());
    }

    #[test]
    fn ell_counts_and_bipartiteness() {
        let g = ell(4).unwrap();
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(g.edge_count(), 15);

        let g = ell(3).unwrap();
        assert_eq!(g.vertex_count(), 8);
        for (a, b) in [(1u32, 4u32), (2, 5), (3, 6), (4, 7)] {
            assert!(g.has_edge(a as usize - 1, b as usize - 1));
        }
        // Bipartite for all k: two-colorable.
        for k in 2..=7u32 {
            let g = ell(k).unwrap();
            let cfg = crate::solver::SolverConfig::unbounded();
            assert!(crate::solver::exists_q_coloring(&g, 2, &cfg).unwrap().is_some(), "k={k}");
        }
    }

    #[test]
    fn u_graph_layers() {
        let u4 = UGraph::new(4).unwrap();
        // Bottom layer induces M_10, top layer the plain cycle.
        assert_eq!(u4.graph.vertex_count(), 20);
        assert!(u4.graph.has_edge(u4.vertex(1, 1), u4.vertex(1, 6)));
        assert!(!u4.graph.has_edge(u4.vertex(2, 1), u4.vertex(2, 6)));

        let u5 = UGraph::new(5).unwrap();
        assert!(u5.graph.has_edge(u5.vertex(2, 1), u5.vertex(2, 7)));
        assert!(u5.graph.has_edge(u5.vertex(1, 1), u5.vertex(1, 6)));
        assert!(u_graph(2).is_err());
    }

    #[test]
    fn u3_is_isomorphic_to_y3() {
        let u = UGraph::new(3).unwrap();
        let y = YGraph::new(3).unwrap();
        assert_eq!(u.graph.vertex_count(), 16);
        assert_eq!(y.graph.vertex_count(), 16);
        let mut map = vec![0usize; 16];
        for i in 1..=2u32 {
            for j in 1..=8u32 {
                map[u.vertex(i, j)] = y.vertex(i, j);
            }
        }
        let m = VertexMap::new(&u.graph, &y.graph, map).unwrap();
        assert!(m.verify_isomorphism());
    }

    #[test]
    fn x_graph_basics() {
        let x = x_graph(2, 6).unwrap();
        assert_eq!(x.vertex_count(), 9);
        assert_eq!(x.edge_count(), 18);
        assert!(x.degree_sequence().iter().all(|&d| d == 4));

        // Vertex count (h-1) n + n/2 in general.
        for h in 2..=4u32 {
            for n in (6..=12u32).step_by(2) {
                let x = x_graph(h, n).unwrap();
                assert_eq!(x.vertex_count() as u32, (h - 1) * n + n / 2);
                assert!(x.degree_sequence().iter().all(|&d| d == 4), "(h,n)=({h},{n})");
            }
        }
    }

    #[test]
    fn x_graph_is_subgraph_of_reduced_drum_for_odd_half_perimeter() {
        for (h, n) in [(2u32, 6u32), (3, 10), (4, 14)] {
            let x = XGraph::new(h, n).unwrap();
            let rd = ReducedDrum::new(2 * h - 1, n).unwrap();
            for (u, v) in x.graph.edges() {
                let tu = rd.vertex(coord_of(&x, u).0, coord_of(&x, u).1);
                let tv = rd.vertex(coord_of(&x, v).0, coord_of(&x, v).1);
                assert!(rd.graph.has_edge(tu, tv), "(h,n)=({h},{n})");
            }
        }
    }

    fn coord_of(x: &XGraph, v: usize) -> (u32, u32) {
        match x.graph.label(v).rep() {
            VertexLabel::Pair(i, j) => (*i as u32, *j as u32),
            _ => unreachable!(),
        }
    }

    #[test]
    fn y2_is_schrijver_6_2() {
        let y = y_graph(2).unwrap();
        let rd = ReducedDrum::new(3, 6).unwrap();
        // No thinning at k = 2: L_2 already covers the whole bottom layer.
        assert_eq!(y.edge_count(), rd.graph.edge_count());
        let sg = Schrijver::new(6, 2).unwrap();
        let iso = crate::drum::sg_isomorphism(2, &rd, &sg).unwrap();
        assert!(iso.verify_isomorphism());
    }

    #[test]
    fn y3_counts() {
        let y = y_graph(3).unwrap();
        assert_eq!(y.vertex_count(), 16);
        assert_eq!(y.edge_count(), 32);
    }

    #[test]
    fn y_graph_edge_count_is_twice_vertex_count() {
        for k in 2..=6u32 {
            let y = y_graph(k).unwrap();
            assert_eq!(y.edge_count(), 2 * y.vertex_count(), "k={k}");
        }
    }

    #[test]
    fn z_graph_edge_count() {
        for k in 2..=6u32 {
            let z = z_graph(k).unwrap();
            assert_eq!(z.edge_count(), 2 * (z.vertex_count() - 1), "k={k}");
        }
    }

    #[test]
    fn z_subgraph_relations_with_y() {
        // Z_2 is a subgraph of Y_2, but Z_3 is not a subgraph of Y_3.
        let y2 = y_graph(2).unwrap();
        let z2 = z_graph(2).unwrap();
        assert!(y2.contains_labelwise(&z2));

        let y3 = y_graph(3).unwrap();
        let z3 = z_graph(3).unwrap();
        assert!(!y3.contains_labelwise(&z3));
    }

    #[test]
    fn y_and_z_are_spanning_subgraphs_of_the_reduced_drum() {
        for k in 2..=6u32 {
            let rd = ReducedDrum::new(k + 1, 2 * k + 2).unwrap();
            let y = y_graph(k).unwrap();
            let z = z_graph(k).unwrap();
            assert!(rd.graph.contains_labelwise(&y), "Y_{k}");
            assert!(rd.graph.contains_labelwise(&z), "Z_{k}");
        }
    }

    #[test]
    fn z_bottom_boundary_is_bipartite() {
        // The bottom layer of Z_k (cycle plus diagonals) is bipartite: it is
        // isomorphic to P_{k+1} square P_2.
        for k in 2..=6u32 {
            let z = ZGraph::new(k).unwrap();
            let n = 2 * k + 2;
            let bottom: Vec<usize> = (1..=n).map(|j| z.vertex(1, j)).collect();
            let mut edges = Vec::new();
            for a in 0..n as usize {
                for b in a + 1..n as usize {
                    if z.graph.has_edge(bottom[a], bottom[b]) {
                        edges.push((a, b));
                    }
                }
            }
            assert_eq!(edges.len() as u32, 3 * k + 1, "k={k}");
            // Parity two-coloring: position parity works since diagonals pair
            // positions of opposite parity (a + b odd).
            for (a, b) in edges {
                assert_ne!((a + 1) % 2, (b + 1) % 2, "k={k}");
            }
        }
    }

    #[test]
    fn x_4_14_is_y6() {
        let x = XGraph::new(4, 14).unwrap();
        let y = YGraph::new(6).unwrap();
        let map: Vec<usize> = (0..x.graph.vertex_count())
            .map(|v| match x.graph.label(v).rep() {
                VertexLabel::Pair(i, j) => y.vertex(*i as u32, *j as u32),
                _ => unreachable!(),
            })
            .collect();
        let m = VertexMap::new(&x.graph, &y.graph, map).unwrap();
        assert!(m.verify_isomorphism());
    }

    #[test]
    fn z_graphs_are_four_chromatic_and_nonbipartite() {
        let cfg = crate::solver::SolverConfig::unbounded();
        for k in 2..=4u32 {
            let z = z_graph(k).unwrap();
            assert_eq!(crate::solver::chromatic_number(&z, &cfg).unwrap(), 4, "k={k}");
        }
    }

    #[test]
    fn q_graph_shape() {
        let q = q_graph().unwrap();
        assert_eq!(q.vertex_count(), 16);
        assert_eq!(q.edge_count(), 30);
        let y = YGraph::new(3).unwrap();
        assert!(!q.has_edge(y.vertex(1, 2), y.vertex(1, 5)));
        assert!(!q.has_edge(y.vertex(1, 3), y.vertex(1, 6)));
    }
}
