//! Drums and reduced drums, and the explicit double cover realizing the
//! isomorphism between the reduced drum of height k+1 and perimeter 2k+2 and
//! the Schrijver graph SG(2k+2, k).

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{
    cartesian_product, cycle, identify_vertices, path_unchecked, LabeledGraph, VertexLabel,
    VertexMap,
};
use crate::schrijver::{mod1, Schrijver};

fn check_drum_params(h: u32, n: u32) -> Result<()> {
    if h < 2 {
        return Err(Error::InvalidParameter(format!("drum height must be >= 2, got {h}")));
    }
    if n < 4 || n % 2 != 0 {
        return Err(Error::InvalidParameter(format!(
            "drum perimeter must be even and >= 4, got {n}"
        )));
    }
    Ok(())
}

/// The drum D_{h,n}: the product P_h square C_n with the bottom and top layer
/// cycles completed to K_{n/2,n/2} (all edges (i,j)(i,k) with i in {1,h} and
/// j - k odd).
pub fn drum(h: u32, n: u32) -> Result<LabeledGraph> {
    check_drum_params(h, n)?;
    let base = cartesian_product(&path_unchecked(h)?, &cycle(n)?)?;
    let idx = |i: u32, j: u32| ((i - 1) * n + (j - 1)) as usize;
    let mut extra = Vec::new();
    for &i in &[1, h] {
        for j in 1..=n {
            for l in j + 1..=n {
                if (l - j) % 2 == 1 {
                    extra.push((idx(i, j), idx(i, l)));
                }
            }
        }
    }
    base.add_edges(&extra)
}

/// The opposite of (i, j) in D_{h,n} is (h+1-i, j+n/2); an involution.
pub fn opposite(v: (u32, u32), h: u32, n: u32) -> (u32, u32) {
    let (i, j) = v;
    (h + 1 - i, mod1(j as i64 + (n / 2) as i64, n))
}

/// A reduced drum together with its canonical coordinates.
///
/// Vertices are indexed in lexicographic order of their canonical
/// representatives (i, j): the pair representative with the smaller layer, and
/// j <= n/2 within the self-paired middle layer of odd heights.
pub struct ReducedDrum {
    pub h: u32,
    pub n: u32,
    pub graph: LabeledGraph,
    /// Canonical representative (i, j) of each vertex.
    pub reps: Vec<(u32, u32)>,
    by_coord: HashMap<(u32, u32), usize>,
}

impl ReducedDrum {
    pub fn new(h: u32, n: u32) -> Result<Self> {
        let d = drum(h, n)?;
        let idx = |i: u32, j: u32| ((i - 1) * n + (j - 1)) as usize;
        let mut pairs = Vec::new();
        for i in 1..=h {
            for j in 1..=n {
                let (oi, oj) = opposite((i, j), h, n);
                // Keep each pair once, listed with its canonical member first.
                if (i, j) < (oi, oj) {
                    pairs.push((idx(i, j), idx(oi, oj)));
                }
            }
        }
        let graph = identify_vertices(&d, &pairs)?;
        let mut reps = Vec::with_capacity(graph.vertex_count());
        let mut by_coord = HashMap::new();
        for v in 0..graph.vertex_count() {
            let rep = match graph.label(v).rep() {
                VertexLabel::Pair(i, j) => (*i as u32, *j as u32),
                other => {
                    return Err(Error::CheckFailed(format!("unexpected quotient label {other}")))
                }
            };
            reps.push(rep);
            by_coord.insert(rep, v);
            by_coord.insert(opposite(rep, h, n), v);
        }
        Ok(ReducedDrum { h, n, graph, reps, by_coord })
    }

    /// Vertex carrying the pair that contains drum coordinate (i, j).
    pub fn vertex(&self, i: u32, j: u32) -> usize {
        self.by_coord[&(i, j)]
    }

    /// Number of layers in the half-drum view: ceil(h/2).
    pub fn top_layer(&self) -> u32 {
        self.h.div_ceil(2)
    }
}

/// The reduced drum D'_{h,n} as the quotient of D_{h,n} identifying all
/// opposite pairs.
pub fn reduced_drum(h: u32, n: u32) -> Result<LabeledGraph> {
    Ok(ReducedDrum::new(h, n)?.graph)
}

/// The reduced drum built directly from half of the drum.
///
/// For even h: P_{h/2} square C_n plus the complete-bipartite edges on the
/// bottom layer and the antipodal edges on the top layer. For odd h:
/// P_{(h+1)/2} square C_n plus the bottom edges, then the top layer's
/// antipodal pairs identified.
pub fn reduced_drum_direct(h: u32, n: u32) -> Result<LabeledGraph> {
    check_drum_params(h, n)?;
    let half = h.div_ceil(2);
    let base = cartesian_product(&path_unchecked(half)?, &cycle(n)?)?;
    let idx = |i: u32, j: u32| ((i - 1) * n + (j - 1)) as usize;
    let mut extra = Vec::new();
    for j in 1..=n {
        for l in j + 1..=n {
            if (l - j) % 2 == 1 {
                extra.push((idx(1, j), idx(1, l)));
            }
        }
    }
    if h % 2 == 0 {
        for j in 1..=n / 2 {
            extra.push((idx(half, j), idx(half, j + n / 2)));
        }
        base.add_edges(&extra)
    } else {
        let g = base.add_edges(&extra)?;
        let pairs: Vec<_> = (1..=n / 2)
            .map(|j| (idx(half, j), idx(half, j + n / 2)))
            .collect();
        identify_vertices(&g, &pairs)
    }
}

/// The isomorphism from `reduced_drum_direct(h, n)` to `reduced_drum(h, n)`
/// that sends coordinate (i, j) of the half-drum to the opposite-pair class
/// of drum coordinate (i, j).
pub fn half_drum_isomorphism<'a>(
    direct: &'a LabeledGraph,
    quotient: &'a ReducedDrum,
) -> Result<VertexMap<'a>> {
    let mut map = Vec::with_capacity(direct.vertex_count());
    for v in 0..direct.vertex_count() {
        let (i, j) = match direct.label(v).rep() {
            VertexLabel::Pair(i, j) => (*i as u32, *j as u32),
            other => {
                return Err(Error::ContractViolation(format!(
                    "half-drum label {other} is not a coordinate"
                )))
            }
        };
        map.push(quotient.vertex(i, j));
    }
    VertexMap::new(direct, &quotient.graph, map)
}

/// The covering map from the drum D_{k+1,2k+2} onto SG(2k+2, k): drum
/// coordinate (i, j) goes to the unique Schrijver vertex whose complement
/// cycle edges are indexed i+j-1 and j-i (mod 2k+2).
///
/// The Schrijver vertex is resolved through a precomputed table from edge
/// index pairs to vertices. Requires k >= 2; k = 1 degenerates to K_4 and is
/// handled directly by `sg_isomorphism`.
pub fn sg_cover_map<'a>(
    k: u32,
    d: &'a LabeledGraph,
    sg: &'a Schrijver,
) -> Result<VertexMap<'a>> {
    if k < 2 {
        return Err(Error::InvalidParameter(
            "the cover construction needs k >= 2; k = 1 is the complete-graph case".into(),
        ));
    }
    let n = 2 * k + 2;
    if sg.n != n || sg.k != k {
        return Err(Error::ContractViolation(format!(
            "expected SG({n},{k}), got SG({},{})",
            sg.n, sg.k
        )));
    }
    if d.vertex_count() != ((k + 1) * n) as usize {
        return Err(Error::ContractViolation("domain is not the drum of height k+1".into()));
    }
    // e(v) -> v table over all Schrijver vertices.
    let mut table: HashMap<[u32; 2], usize> = HashMap::new();
    for (i, v) in sg.vertices.iter().enumerate() {
        let e = crate::schrijver::complement_cycle_edges(v)?;
        table.insert([e.edges[0], e.edges[1]], i);
    }
    let mut map = Vec::with_capacity(d.vertex_count());
    for v in 0..d.vertex_count() {
        let (i, j) = match d.label(v) {
            VertexLabel::Pair(i, j) => (*i, *j),
            other => {
                return Err(Error::ContractViolation(format!(
                    "drum label {other} is not a coordinate"
                )))
            }
        };
        let a = mod1(i + j - 1, n);
        let b = mod1(j - i, n);
        let key = [a.min(b), a.max(b)];
        let target = table.get(&key).copied().ok_or_else(|| {
            Error::CheckFailed(format!("no Schrijver vertex with complement edges {key:?}"))
        })?;
        map.push(target);
    }
    VertexMap::new(d, &sg.graph, map)
}

/// The isomorphism from the reduced drum D'_{k+1,2k+2} to SG(2k+2, k): the
/// factor of the covering map through the opposite-pair quotient. For k = 1
/// both graphs are K_4 and the map is the identity on index order.
pub fn sg_isomorphism<'a>(
    k: u32,
    rd: &'a ReducedDrum,
    sg: &'a Schrijver,
) -> Result<VertexMap<'a>> {
    let n = 2 * k + 2;
    if rd.h != k + 1 || rd.n != n {
        return Err(Error::ContractViolation(format!(
            "expected the reduced drum of height {} and perimeter {n}",
            k + 1
        )));
    }
    if sg.n != n || sg.k != k {
        return Err(Error::ContractViolation(format!("expected SG({n},{k})")));
    }
    if k == 1 {
        return VertexMap::new(&rd.graph, &sg.graph, (0..4).collect());
    }
    let d = drum(k + 1, n)?;
    let cover = sg_cover_map(k, &d, sg)?;
    let idx = |i: u32, j: u32| ((i - 1) * n + (j - 1)) as usize;
    let map = rd
        .reps
        .iter()
        .map(|&(i, j)| cover.map[idx(i, j)])
        .collect();
    VertexMap::new(&rd.graph, &sg.graph, map)
}
