//! Kneser and Schrijver graphs and the per-vertex combinatorics on the
//! ambient cycle: complement edges, interlacing edges, regular vertices and
//! vertex length.

use std::collections::HashMap;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{LabeledGraph, VertexLabel};

/// A k-subset of [n], stored as a bitmask (bit i-1 = element i). n <= 64.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetVertex {
    pub n: u32,
    pub mask: u64,
}

impl SubsetVertex {
    pub fn new(n: u32, elems: &[u32]) -> Result<Self> {
        if n == 0 || n > 64 {
            return Err(Error::InvalidParameter(format!("n = {n} out of range 1..=64")));
        }
        let mut mask = 0u64;
        for &e in elems {
            if e < 1 || e > n {
                return Err(Error::InvalidParameter(format!("element {e} outside [{n}]")));
            }
            if mask >> (e - 1) & 1 == 1 {
                return Err(Error::InvalidParameter(format!("repeated element {e}")));
            }
            mask |= 1 << (e - 1);
        }
        Ok(SubsetVertex { n, mask })
    }

    pub fn size(&self) -> u32 {
        self.mask.count_ones()
    }

    pub fn members(&self) -> Vec<u32> {
        (1..=self.n).filter(|&e| self.contains(e)).collect()
    }

    pub fn contains(&self, e: u32) -> bool {
        self.mask >> (e - 1) & 1 == 1
    }

    pub fn is_disjoint(&self, other: &SubsetVertex) -> bool {
        self.mask & other.mask == 0
    }

    /// Independent in the cycle C_n: no two cyclically consecutive elements.
    pub fn is_independent(&self) -> bool {
        let rotated = rotate_mask(self.mask, 1, self.n);
        self.mask & rotated == 0
    }

    pub fn label(&self) -> VertexLabel {
        VertexLabel::Subset(self.members())
    }
}

/// Cyclic rotation of a width-n bitmask by r positions (element e -> e + r).
pub(crate) fn rotate_mask(mask: u64, r: u32, n: u32) -> u64 {
    let low = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let r = r % n;
    if r == 0 {
        return mask & low;
    }
    ((mask << r) | (mask >> (n - r))) & low
}

/// A set of edges of the ambient cycle C_n; index a stands for the edge
/// {a, a+1} (computed cyclically, so index n is the edge {n, 1}).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleEdgeSet {
    pub n: u32,
    /// Sorted ascending edge indices in [1, n].
    pub edges: Vec<u32>,
}

/// 1-based representative of x modulo n, in [1, n].
pub fn mod1(x: i64, n: u32) -> u32 {
    let n = n as i64;
    (((x - 1) % n + n) % n + 1) as u32
}

/// All k-subsets of [n] in lexicographic order of their sorted element lists.
fn all_k_subsets(n: u32, k: u32) -> Vec<SubsetVertex> {
    (1..=n)
        .combinations(k as usize)
        .map(|c| SubsetVertex::new(n, &c).unwrap())
        .collect()
}

fn disjointness_graph(verts: &[SubsetVertex]) -> LabeledGraph {
    let labels: Vec<VertexLabel> = verts.iter().map(|v| v.label()).collect();
    let mut edges = Vec::new();
    for i in 0..verts.len() {
        for j in i + 1..verts.len() {
            if verts[i].is_disjoint(&verts[j]) {
                edges.push((i, j));
            }
        }
    }
    LabeledGraph::new(labels, &edges).expect("distinct subset labels")
}

fn check_params(n: u32, k: u32) -> Result<()> {
    if k < 1 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    if n < 2 * k {
        return Err(Error::InvalidParameter(format!("need n >= 2k, got n={n}, k={k}")));
    }
    if n > 64 {
        return Err(Error::InvalidParameter(format!("n = {n} exceeds bitmask width 64")));
    }
    Ok(())
}

/// Kneser graph: vertices are all k-subsets of [n], edges join disjoint sets.
pub fn kneser(n: u32, k: u32) -> Result<LabeledGraph> {
    check_params(n, k)?;
    Ok(disjointness_graph(&all_k_subsets(n, k)))
}

/// Schrijver graph: the subgraph of the Kneser graph induced by the subsets
/// independent in the cycle C_n.
pub fn schrijver(n: u32, k: u32) -> Result<LabeledGraph> {
    Ok(Schrijver::new(n, k)?.graph)
}

/// A Schrijver graph together with its vertex combinatorics.
pub struct Schrijver {
    pub n: u32,
    pub k: u32,
    pub graph: LabeledGraph,
    /// Vertices in lexicographic order, parallel to graph indices.
    pub vertices: Vec<SubsetVertex>,
    by_mask: HashMap<u64, usize>,
}

impl Schrijver {
    pub fn new(n: u32, k: u32) -> Result<Self> {
        check_params(n, k)?;
        let vertices: Vec<SubsetVertex> = all_k_subsets(n, k)
            .into_iter()
            .filter(|v| v.is_independent())
            .collect();
        let graph = disjointness_graph(&vertices);
        let by_mask = vertices.iter().enumerate().map(|(i, v)| (v.mask, i)).collect();
        Ok(Schrijver { n, k, graph, vertices, by_mask })
    }

    pub fn index_of(&self, v: &SubsetVertex) -> Option<usize> {
        self.by_mask.get(&v.mask).copied()
    }

    pub fn vertex(&self, i: usize) -> &SubsetVertex {
        &self.vertices[i]
    }

    /// Index of the unique vertex v with complement_cycle_edges(v) = {e_a, e_b},
    /// if one exists. Only total for n = 2k + 2.
    pub fn vertex_with_complement_edges(&self, a: u32, b: u32) -> Option<usize> {
        let targets = [a.min(b), a.max(b)];
        self.vertices.iter().position(|v| {
            let e = complement_cycle_edges(v).expect("stored vertices are independent");
            e.edges == targets
        })
    }
}

/// The edges of C_n with neither endpoint in v. For a Schrijver vertex of
/// SG(n,k) there are exactly n - 2k of them.
pub fn complement_cycle_edges(v: &SubsetVertex) -> Result<CycleEdgeSet> {
    if !v.is_independent() {
        return Err(Error::ContractViolation(format!(
            "{:?} is not independent in the cycle",
            v.members()
        )));
    }
    let edges = (1..=v.n)
        .filter(|&a| !v.contains(a) && !v.contains(mod1(a as i64 + 1, v.n)))
        .collect();
    Ok(CycleEdgeSet { n: v.n, edges })
}

/// True iff the elements of the two disjoint sets alternate around C_n.
pub fn is_interlacing(x: &SubsetVertex, y: &SubsetVertex) -> Result<bool> {
    if !x.is_disjoint(y) {
        return Err(Error::ContractViolation(
            "interlacing is defined for disjoint vertex sets".into(),
        ));
    }
    let n = x.n;
    let tags: Vec<bool> = (1..=n)
        .filter_map(|e| {
            if x.contains(e) {
                Some(true)
            } else if y.contains(e) {
                Some(false)
            } else {
                None
            }
        })
        .collect();
    if tags.is_empty() {
        return Ok(false);
    }
    let m = tags.len();
    Ok((0..m).all(|i| tags[i] != tags[(i + 1) % m]))
}

/// A vertex is regular if it meets every window of three cyclically
/// consecutive positions.
pub fn is_regular(v: &SubsetVertex) -> bool {
    (1..=v.n).all(|i| {
        v.contains(i) || v.contains(mod1(i as i64 + 1, v.n)) || v.contains(mod1(i as i64 + 2, v.n))
    })
}

/// Cyclic distance between the two elements of a 2-subset vertex.
pub fn vertex_length(v: &SubsetVertex) -> Result<u32> {
    if v.size() != 2 {
        return Err(Error::InvalidParameter(format!(
            "vertex length is defined for 2-subsets, got size {}",
            v.size()
        )));
    }
    let m = v.members();
    let d = m[1] - m[0];
    Ok(d.min(v.n - d))
}

/// Exact vertex count of SG(n, k): (n / (n-k)) * C(n-k, k).
pub fn schrijver_vertex_count(n: u64, k: u64) -> u64 {
    let mut binom = 1u64;
    for i in 0..k {
        binom = binom * (n - k - i) / (i + 1);
    }
    n * binom / (n - k)
}
