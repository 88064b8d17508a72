//! Finite simple graphs with distinct vertex labels, plus the constructions
//! used throughout the crate: paths, cycles, complete bipartite graphs,
//! Cartesian products and vertex identification, together with verification
//! of homomorphisms, covers, double covers and explicit isomorphisms.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// A vertex label. Labels are carried metadata; vertex identity is by index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexLabel {
    Int(i64),
    /// A subset of [n], stored sorted ascending.
    Subset(Vec<u32>),
    /// A grid coordinate (i, j).
    Pair(i64, i64),
    /// Result of identifying two vertices; the first component is the
    /// canonical representative.
    Merged(Box<VertexLabel>, Box<VertexLabel>),
}

impl VertexLabel {
    pub fn pair(i: i64, j: i64) -> Self {
        VertexLabel::Pair(i, j)
    }

    pub fn subset(mut elems: Vec<u32>) -> Self {
        elems.sort_unstable();
        VertexLabel::Subset(elems)
    }

    /// Canonical representative: the label itself, or the first component of
    /// a merged label.
    pub fn rep(&self) -> &VertexLabel {
        match self {
            VertexLabel::Merged(a, _) => a.rep(),
            other => other,
        }
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Int(x) => write!(f, "{x}"),
            VertexLabel::Subset(s) => {
                write!(f, "{{")?;
                for (idx, e) in s.iter().enumerate() {
                    if idx > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{e}")?;
                }
                write!(f, "}}")
            }
            VertexLabel::Pair(i, j) => write!(f, "({i},{j})"),
            VertexLabel::Merged(a, b) => write!(f, "{a}~{b}"),
        }
    }
}

/// A finite simple graph with pairwise distinct vertex labels.
///
/// Immutable after construction; all operations that change the graph return
/// a new one. Adjacency is kept as bitset rows, so edge queries are O(1).
#[derive(Clone)]
pub struct LabeledGraph {
    labels: Vec<VertexLabel>,
    words: usize,
    adj: Vec<u64>,
    edge_count: usize,
    by_label: HashMap<VertexLabel, usize>,
}

impl LabeledGraph {
    /// Builds a graph from labels and an edge list over vertex indices.
    ///
    /// Rejects loops, out-of-range indices and duplicate labels. Duplicate
    /// edges are collapsed (adjacency is a set).
    pub fn new(labels: Vec<VertexLabel>, edges: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut by_label = HashMap::with_capacity(n);
        for (i, l) in labels.iter().enumerate() {
            if by_label.insert(l.clone(), i).is_some() {
                return Err(Error::InvalidParameter(format!("duplicate label {l}")));
            }
        }
        let words = n.div_ceil(64).max(1);
        let mut g = LabeledGraph {
            labels,
            words,
            adj: vec![0; n * words],
            edge_count: 0,
            by_label,
        };
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    fn insert_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.labels.len();
        if u >= n || v >= n {
            return Err(Error::InvalidParameter(format!(
                "edge ({u},{v}) out of range for {n} vertices"
            )));
        }
        if u == v {
            return Err(Error::InvalidParameter(format!("loop at vertex {u}")));
        }
        if !self.has_edge(u, v) {
            self.adj[u * self.words + v / 64] |= 1 << (v % 64);
            self.adj[v * self.words + u / 64] |= 1 << (u % 64);
            self.edge_count += 1;
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn label(&self, v: usize) -> &VertexLabel {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn vertex_by_label(&self, l: &VertexLabel) -> Option<usize> {
        self.by_label.get(l).copied()
    }

    /// Finds the vertex whose canonical representative label equals `l`.
    pub fn vertex_by_rep(&self, l: &VertexLabel) -> Option<usize> {
        (0..self.vertex_count()).find(|&v| self.labels[v].rep() == l)
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.adj[u * self.words..(u + 1) * self.words];
        row.iter().enumerate().flat_map(|(w, &bits)| {
            let mut bits = bits;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(w * 64 + b)
                }
            })
        })
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u * self.words..(u + 1) * self.words]
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    /// Edges in lexicographic order of (min endpoint, max endpoint).
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.vertex_count() {
            for v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        (0..self.vertex_count()).map(|v| self.degree(v)).collect()
    }

    /// Returns a copy with the given extra edges inserted.
    pub fn add_edges(&self, extra: &[(usize, usize)]) -> Result<Self> {
        let mut g = self.clone();
        for &(u, v) in extra {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    /// Returns a copy with the edge (u, v) removed.
    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Self> {
        if !self.has_edge(u, v) {
            return Err(Error::InvalidParameter(format!("({u},{v}) is not an edge")));
        }
        let mut g = self.clone();
        g.adj[u * g.words + v / 64] &= !(1 << (v % 64));
        g.adj[v * g.words + u / 64] &= !(1 << (u % 64));
        g.edge_count -= 1;
        Ok(g)
    }

    /// Returns a copy with all listed edges removed.
    pub fn remove_edges(&self, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = self.clone();
        for &(u, v) in edges {
            g = g.remove_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == n
    }

    /// Hash of the structure (vertex count plus edge list) used as a cache key.
    /// Stable for a fixed construction order.
    pub fn structure_hash(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.vertex_count().hash(&mut h);
        for e in self.edges() {
            e.hash(&mut h);
        }
        h.finish()
    }

    /// True if `other` has the same vertex set (by label, in order) and its
    /// edge set is a subset of this graph's, matching vertices label-wise.
    pub fn contains_labelwise(&self, other: &LabeledGraph) -> bool {
        if self.vertex_count() != other.vertex_count() {
            return false;
        }
        let mut map = Vec::with_capacity(other.vertex_count());
        for v in 0..other.vertex_count() {
            match self.vertex_by_label(other.label(v)) {
                Some(u) => map.push(u),
                None => return false,
            }
        }
        other.edges().iter().all(|&(u, v)| self.has_edge(map[u], map[v]))
    }
}

impl fmt::Debug for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "LabeledGraph(n={}, m={})",
            self.vertex_count(),
            self.edge_count()
        )
    }
}

/// The path P_m on vertex set [m], edges between consecutive integers.
pub fn path(m: u32) -> Result<LabeledGraph> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!("path needs m >= 2, got {m}")));
    }
    path_unchecked(m)
}

/// Internal: also allows the single-vertex path used by degenerate grids.
pub(crate) fn path_unchecked(m: u32) -> Result<LabeledGraph> {
    let labels = (1..=m as i64).map(VertexLabel::Int).collect();
    let edges: Vec<_> = (0..m as usize - 1).map(|i| (i, i + 1)).collect();
    LabeledGraph::new(labels, &edges)
}

/// The cycle C_m on vertex set [m]: P_m plus the edge {m, 1}.
pub fn cycle(m: u32) -> Result<LabeledGraph> {
    if m < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs m >= 3, got {m}")));
    }
    let g = path(m)?;
    g.add_edges(&[(m as usize - 1, 0)])
}

/// Complete bipartite graph with sides [1..a] and [a+1..a+b].
pub fn complete_bipartite(a: u32, b: u32) -> Result<LabeledGraph> {
    if a < 1 || b < 1 {
        return Err(Error::InvalidParameter(format!(
            "complete bipartite graph needs both sides nonempty, got ({a},{b})"
        )));
    }
    let labels = (1..=(a + b) as i64).map(VertexLabel::Int).collect();
    let mut edges = Vec::with_capacity((a * b) as usize);
    for i in 0..a as usize {
        for j in 0..b as usize {
            edges.push((i, a as usize + j));
        }
    }
    LabeledGraph::new(labels, &edges)
}

/// Cartesian product F □ G: vertices V(F) x V(G); (a,c)(b,d) is an edge iff
/// a = b and cd in E(G), or ab in E(F) and c = d.
///
/// Both factors must carry integer labels; the product is labeled with pairs.
/// Vertices are ordered F-major, so {a} x V(G) blocks (the layers) are
/// contiguous.
pub fn cartesian_product(f: &LabeledGraph, g: &LabeledGraph) -> Result<LabeledGraph> {
    if f.vertex_count() == 0 || g.vertex_count() == 0 {
        return Err(Error::InvalidParameter("product of empty graph".into()));
    }
    let int_of = |gr: &LabeledGraph, v: usize| -> Result<i64> {
        match gr.label(v) {
            VertexLabel::Int(x) => Ok(*x),
            other => Err(Error::InvalidParameter(format!(
                "cartesian product requires integer labels, found {other}"
            ))),
        }
    };
    let nf = f.vertex_count();
    let ng = g.vertex_count();
    let mut labels = Vec::with_capacity(nf * ng);
    for a in 0..nf {
        for c in 0..ng {
            labels.push(VertexLabel::Pair(int_of(f, a)?, int_of(g, c)?));
        }
    }
    let idx = |a: usize, c: usize| a * ng + c;
    let mut edges = Vec::new();
    for a in 0..nf {
        for (c, d) in g.edges() {
            edges.push((idx(a, c), idx(a, d)));
        }
    }
    for (a, b) in f.edges() {
        for c in 0..ng {
            edges.push((idx(a, c), idx(b, c)));
        }
    }
    LabeledGraph::new(labels, &edges)
}

/// Identifies each listed pair of vertices, replacing it with a single merged
/// vertex adjacent to the union of the pair's neighborhoods.
///
/// Pairs must be pairwise disjoint and non-adjacent (an adjacent pair would
/// create a loop). Duplicate edges arising from the merge are collapsed.
/// Merged vertices take the label `Merged(label(a), label(b))` for the pair
/// (a, b) as given, and sit at the position of the pair's smaller index.
pub fn identify_vertices(g: &LabeledGraph, pairs: &[(usize, usize)]) -> Result<LabeledGraph> {
    let n = g.vertex_count();
    let mut partner = vec![usize::MAX; n];
    for &(a, b) in pairs {
        if a >= n || b >= n {
            return Err(Error::InvalidParameter(format!("pair ({a},{b}) out of range")));
        }
        if a == b {
            return Err(Error::InvalidParameter(format!("pair ({a},{a}) is degenerate")));
        }
        if partner[a] != usize::MAX || partner[b] != usize::MAX {
            return Err(Error::InvalidParameter(format!(
                "pair ({a},{b}) overlaps another pair"
            )));
        }
        if g.has_edge(a, b) {
            return Err(Error::LoopCreated(format!(
                "vertices {} and {} are adjacent",
                g.label(a),
                g.label(b)
            )));
        }
        partner[a] = b;
        partner[b] = a;
    }
    // New indices in order of first occurrence (the smaller index of each pair).
    let mut new_index = vec![usize::MAX; n];
    let mut labels = Vec::new();
    for v in 0..n {
        if new_index[v] != usize::MAX {
            continue;
        }
        let p = partner[v];
        if p == usize::MAX {
            new_index[v] = labels.len();
            labels.push(g.label(v).clone());
        } else {
            new_index[v] = labels.len();
            new_index[p] = labels.len();
            // v < p here, but keep the label order of the pair as supplied.
            let (first, second) = pairs
                .iter()
                .find(|&&(a, b)| a == v || b == v)
                .map(|&(a, b)| (a, b))
                .unwrap();
            labels.push(VertexLabel::Merged(
                Box::new(g.label(first).clone()),
                Box::new(g.label(second).clone()),
            ));
        }
    }
    let mut edges = Vec::with_capacity(g.edge_count());
    for (u, v) in g.edges() {
        let (nu, nv) = (new_index[u], new_index[v]);
        debug_assert_ne!(nu, nv, "adjacent pair slipped through the loop check");
        edges.push((nu, nv));
    }
    LabeledGraph::new(labels, &edges)
}

/// A total map between the vertex sets of two graphs.
#[derive(Clone)]
pub struct VertexMap<'a> {
    pub domain: &'a LabeledGraph,
    pub codomain: &'a LabeledGraph,
    pub map: Vec<usize>,
}

impl<'a> VertexMap<'a> {
    pub fn new(
        domain: &'a LabeledGraph,
        codomain: &'a LabeledGraph,
        map: Vec<usize>,
    ) -> Result<Self> {
        if map.len() != domain.vertex_count() {
            return Err(Error::InvalidParameter(format!(
                "map covers {} of {} domain vertices",
                map.len(),
                domain.vertex_count()
            )));
        }
        if let Some(&bad) = map.iter().find(|&&t| t >= codomain.vertex_count()) {
            return Err(Error::InvalidParameter(format!(
                "map target {bad} out of range"
            )));
        }
        Ok(VertexMap { domain, codomain, map })
    }

    pub fn apply(&self, v: usize) -> usize {
        self.map[v]
    }

    /// Every edge of the domain maps to an edge of the codomain.
    pub fn is_homomorphism(&self) -> bool {
        self.domain
            .edges()
            .iter()
            .all(|&(u, v)| {
                let (fu, fv) = (self.map[u], self.map[v]);
                fu != fv && self.codomain.has_edge(fu, fv)
            })
    }

    /// A cover maps the neighborhood of every vertex bijectively onto the
    /// neighborhood of its image. Requires a homomorphism.
    pub fn is_cover(&self) -> Result<bool> {
        if !self.is_homomorphism() {
            return Err(Error::ContractViolation(
                "cover check requires a homomorphism".into(),
            ));
        }
        for v in 0..self.domain.vertex_count() {
            let fv = self.map[v];
            if self.domain.degree(v) != self.codomain.degree(fv) {
                return Ok(false);
            }
            let mut images: Vec<usize> = self.domain.neighbors(v).map(|u| self.map[u]).collect();
            images.sort_unstable();
            images.dedup();
            if images.len() != self.domain.degree(v) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// A double cover is a cover in which every codomain vertex has exactly
    /// two preimages.
    pub fn is_double_cover(&self) -> Result<bool> {
        if !self.is_cover()? {
            return Ok(false);
        }
        let mut fiber = vec![0usize; self.codomain.vertex_count()];
        for &t in &self.map {
            fiber[t] += 1;
        }
        Ok(fiber.iter().all(|&c| c == 2))
    }

    /// Checks that the map is a bijection and both it and its inverse are
    /// homomorphisms. Verification only; no isomorphism search.
    pub fn verify_isomorphism(&self) -> bool {
        match self.inverse_map() {
            None => false,
            Some(inv) => {
                self.is_homomorphism()
                    && VertexMap {
                        domain: self.codomain,
                        codomain: self.domain,
                        map: inv,
                    }
                    .is_homomorphism()
            }
        }
    }

    fn inverse_map(&self) -> Option<Vec<usize>> {
        if self.domain.vertex_count() != self.codomain.vertex_count() {
            return None;
        }
        let mut inv = vec![usize::MAX; self.codomain.vertex_count()];
        for (v, &t) in self.map.iter().enumerate() {
            if inv[t] != usize::MAX {
                return None;
            }
            inv[t] = v;
        }
        Some(inv)
    }

    /// The inverse of a bijective map.
    pub fn inverse(&self) -> Option<VertexMap<'a>> {
        self.inverse_map().map(|map| VertexMap {
            domain: self.codomain,
            codomain: self.domain,
            map,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_smallest_and_counts() {
        let p2 = path(2).unwrap();
        assert_eq!(p2.vertex_count(), 2);
        assert_eq!(p2.edge_count(), 1);
        let p4 = path(4).unwrap();
        assert_eq!(p4.vertex_count(), 4);
        assert_eq!(p4.edge_count(), 3);
        let p10 = path(10).unwrap();
        let mut expected = vec![2; 10];
        expected[0] = 1;
        expected[9] = 1;
        assert_eq!(p10.degree_sequence(), expected);
        assert!(path(1).is_err());
    }

    #[test]
    fn cycle_basics() {
        let c3 = cycle(3).unwrap();
        assert_eq!(c3.vertex_count(), 3);
        assert_eq!(c3.edge_count(), 3);
        let c4 = cycle(4).unwrap();
        assert!(c4.degree_sequence().iter().all(|&d| d == 2));
        assert!(c4.is_connected());
        let c5 = cycle(5).unwrap();
        assert_eq!(c5.vertex_count(), 5);
        assert_eq!(c5.edge_count(), 5);
        assert!(cycle(2).is_err());
    }

    #[test]
    fn complete_bipartite_counts() {
        assert_eq!(complete_bipartite(3, 3).unwrap().edge_count(), 9);
        assert_eq!(complete_bipartite(1, 1).unwrap().edge_count(), 1);
        assert_eq!(complete_bipartite(4, 4).unwrap().edge_count(), 16);
        assert!(complete_bipartite(0, 2).is_err());
    }

    #[test]
    fn product_counts_and_layers() {
        let g = cartesian_product(&path(2).unwrap(), &cycle(4).unwrap()).unwrap();
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.edge_count(), 12);

        let h = cartesian_product(&path(3).unwrap(), &cycle(6).unwrap()).unwrap();
        assert_eq!(h.vertex_count(), 18);
        // Middle layer vertices have degree 4: two inside their layer cycle,
        // one up, one down.
        for j in 0..6 {
            assert_eq!(h.degree(6 + j), 4);
        }

        let square = cartesian_product(&path(2).unwrap(), &path(2).unwrap()).unwrap();
        assert_eq!(square.vertex_count(), 4);
        assert_eq!(square.edge_count(), 4);
        assert!(square.degree_sequence().iter().all(|&d| d == 2));
    }

    #[test]
    fn layers_of_product_are_isomorphic_to_second_factor() {
        let f = path(3).unwrap();
        let g = cycle(5).unwrap();
        let prod = cartesian_product(&f, &g).unwrap();
        for a in 0..3 {
            // The layer {a} x V(G) occupies indices a*5..(a+1)*5 in order.
            for (c, d) in g.edges() {
                assert!(prod.has_edge(a * 5 + c, a * 5 + d));
            }
            let layer_degrees: usize = (0..5)
                .map(|c| {
                    (0..5)
                        .filter(|&d| prod.has_edge(a * 5 + c, a * 5 + d))
                        .count()
                })
                .sum();
            assert_eq!(layer_degrees, 2 * g.edge_count());
        }
    }

    #[test]
    fn identify_opposite_pairs_of_even_cycles() {
        // C_6 with opposite pairs identified is a triangle.
        let c6 = cycle(6).unwrap();
        let t = identify_vertices(&c6, &[(0, 3), (1, 4), (2, 5)]).unwrap();
        assert_eq!(t.vertex_count(), 3);
        assert_eq!(t.edge_count(), 3);

        // C_8 with opposite pairs identified is a 4-cycle.
        let c8 = cycle(8).unwrap();
        let q = identify_vertices(&c8, &[(0, 4), (1, 5), (2, 6), (3, 7)]).unwrap();
        assert_eq!(q.vertex_count(), 4);
        assert_eq!(q.edge_count(), 4);
        assert!(q.degree_sequence().iter().all(|&d| d == 2));
        assert!(q.is_connected());
    }

    #[test]
    fn identify_single_pair_collapses_duplicates() {
        let c4 = cycle(4).unwrap();
        let g = identify_vertices(&c4, &[(0, 2)]).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn identify_rejects_bad_pairs() {
        let c4 = cycle(4).unwrap();
        assert!(matches!(
            identify_vertices(&c4, &[(0, 1)]),
            Err(Error::LoopCreated(_))
        ));
        assert!(matches!(
            identify_vertices(&c4, &[(0, 2), (2, 3)]),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn homomorphism_checks() {
        let c5 = cycle(5).unwrap();
        let id = VertexMap::new(&c5, &c5, (0..5).collect()).unwrap();
        assert!(id.is_homomorphism());

        let constant = VertexMap::new(&c5, &c5, vec![0; 5]).unwrap();
        assert!(!constant.is_homomorphism());

        let c6 = cycle(6).unwrap();
        let c3 = cycle(3).unwrap();
        let quotient = VertexMap::new(&c6, &c3, vec![0, 1, 2, 0, 1, 2]).unwrap();
        assert!(quotient.is_homomorphism());
        assert!(quotient.is_double_cover().unwrap());
    }

    #[test]
    fn identity_is_cover_but_not_double() {
        let c5 = cycle(5).unwrap();
        let id = VertexMap::new(&c5, &c5, (0..5).collect()).unwrap();
        assert!(id.is_cover().unwrap());
        assert!(!id.is_double_cover().unwrap());
    }

    #[test]
    fn cover_requires_homomorphism() {
        let c4 = cycle(4).unwrap();
        let bad = VertexMap::new(&c4, &c4, vec![0, 0, 1, 2]).unwrap();
        assert!(matches!(bad.is_cover(), Err(Error::ContractViolation(_))));
    }

    #[test]
    fn isomorphism_verification() {
        let c5 = cycle(5).unwrap();
        let id = VertexMap::new(&c5, &c5, (0..5).collect()).unwrap();
        assert!(id.verify_isomorphism());
        // Symmetry: the inverse verifies too.
        assert!(id.inverse().unwrap().verify_isomorphism());

        let c6 = cycle(6).unwrap();
        let c3 = cycle(3).unwrap();
        let quotient = VertexMap::new(&c6, &c3, vec![0, 1, 2, 0, 1, 2]).unwrap();
        assert!(!quotient.verify_isomorphism());

        // Graphs of different sizes never verify.
        let k2 = complete_bipartite(1, 1).unwrap();
        let c4 = cycle(4).unwrap();
        assert_ne!(k2.vertex_count(), c4.vertex_count());
        let m = VertexMap::new(&k2, &c4, vec![0, 1]).unwrap();
        assert!(!m.verify_isomorphism());

        // Same vertex count, different edge counts: the identity P_4 -> C_4
        // is a bijective homomorphism but its inverse is not one.
        let p4 = path(4).unwrap();
        let m = VertexMap::new(&p4, &c4, (0..4).collect()).unwrap();
        assert!(m.is_homomorphism());
        assert!(!m.verify_isomorphism());
    }

    #[test]
    fn product_count_formula() {
        let f = cycle(5).unwrap();
        let g = path(4).unwrap();
        let p = cartesian_product(&f, &g).unwrap();
        assert_eq!(p.vertex_count(), f.vertex_count() * g.vertex_count());
        assert_eq!(
            p.edge_count(),
            f.vertex_count() * g.edge_count() + f.edge_count() * g.vertex_count()
        );
    }
}
