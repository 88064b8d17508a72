//! Colorings and the explicit coloring constructions: the parity 2-coloring
//! and layered 4-coloring of reduced drums, basic colorings, the recoloring
//! procedure witnessing criticality of regular-regular edges, the edge
//! colorings of SG(n,2), and the 3-colorings of U_k minus an extra edge with
//! their extension to Y_k.
//!
//! Every constructor re-verifies its output before returning it.

use serde_json::json;

use crate::drum::ReducedDrum;
use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::quad::{UGraph, YGraph};
use crate::schrijver::{
    is_interlacing, is_regular, mod1, rotate_mask, vertex_length, Schrijver, SubsetVertex,
};
use crate::winding::ThreeColoring;

/// A total coloring with q named colors; per-vertex color indices are < q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<u32>,
    q: u32,
    names: Vec<String>,
}

impl Coloring {
    pub fn new(colors: Vec<u32>, q: u32) -> Result<Self> {
        let names = (0..q).map(|c| c.to_string()).collect();
        Coloring::with_names(colors, q, names)
    }

    pub fn with_names(colors: Vec<u32>, q: u32, names: Vec<String>) -> Result<Self> {
        if names.len() != q as usize {
            return Err(Error::InvalidParameter(format!(
                "{} names for {q} colors",
                names.len()
            )));
        }
        if let Some(&bad) = colors.iter().find(|&&c| c >= q) {
            return Err(Error::InvalidParameter(format!("color {bad} outside 0..{q}")));
        }
        Ok(Coloring { colors, q, names })
    }

    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn name_of(&self, v: usize) -> &str {
        &self.names[self.colors[v] as usize]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Number of colors actually used.
    pub fn used_colors(&self) -> u32 {
        let mut seen = vec![false; self.q as usize];
        for &c in &self.colors {
            seen[c as usize] = true;
        }
        seen.iter().filter(|&&s| s).count() as u32
    }

    /// Serializes as {"colors": {vertexIndex: colorName}}.
    pub fn to_json(&self) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> = self
            .colors
            .iter()
            .enumerate()
            .map(|(v, &c)| (v.to_string(), json!(self.names[c as usize])))
            .collect();
        json!({ "colors": map })
    }

    pub fn to_three_coloring(&self) -> Result<ThreeColoring> {
        let colors = self
            .colors
            .iter()
            .map(|&c| {
                u8::try_from(c)
                    .ok()
                    .filter(|&c| c < 3)
                    .ok_or_else(|| Error::InvalidParameter(format!("color {c} outside {{0,1,2}}")))
            })
            .collect::<Result<Vec<u8>>>()?;
        ThreeColoring::new(colors)
    }
}

/// True iff the coloring is total on the graph and no edge is monochromatic.
pub fn is_proper(g: &LabeledGraph, c: &Coloring) -> Result<bool> {
    Ok(monochromatic_edges(g, c)?.is_empty())
}

/// Monochromatic edges, in lexicographic order of endpoint indices.
pub fn monochromatic_edges(g: &LabeledGraph, c: &Coloring) -> Result<Vec<(usize, usize)>> {
    if c.colors.len() != g.vertex_count() {
        return Err(Error::InvalidParameter(format!(
            "coloring covers {} of {} vertices",
            c.colors.len(),
            g.vertex_count()
        )));
    }
    Ok(g.edges()
        .into_iter()
        .filter(|&(u, v)| c.colors[u] == c.colors[v])
        .collect())
}

fn parity_color_names() -> Vec<String> {
    vec!["0".into(), "1".into()]
}

/// The parity 2-coloring of the reduced drum, defined when h + n/2 is odd:
/// the vertex with canonical coordinate (i, j) gets color (i + j) mod 2.
pub fn two_coloring_reduced_drum(h: u32, n: u32) -> Result<Coloring> {
    let rd = ReducedDrum::new(h, n)?;
    if (h + n / 2) % 2 == 0 {
        return Err(Error::InvalidParameter(format!(
            "the parity 2-coloring needs h + n/2 odd, got h={h}, n={n}"
        )));
    }
    let colors = rd.reps.iter().map(|&(i, j)| (i + j) % 2).collect();
    let c = Coloring::with_names(colors, 2, parity_color_names())?;
    if !is_proper(&rd.graph, &c)? {
        return Err(Error::CheckFailed("parity 2-coloring is not proper".into()));
    }
    Ok(c)
}

/// The layered 4-coloring of the reduced drum, defined when h + n/2 is even.
///
/// The top layer of the half-drum view is colored greedily from {1,2,3,4};
/// every lower vertex (i, j) takes a color of the parity of i+j, the layer
/// directly below the top avoiding its unique top neighbor's color. The
/// degenerate h = 2 case (a single layer, 4 | n) is colored by quadrant.
pub fn four_coloring_reduced_drum(h: u32, n: u32) -> Result<Coloring> {
    let rd = ReducedDrum::new(h, n)?;
    if (h + n / 2) % 2 == 1 {
        return Err(Error::InvalidParameter(format!(
            "the layered 4-coloring needs h + n/2 even, got h={h}, n={n}"
        )));
    }
    // Work with the colors 1..4; shift to 0-based at the end.
    let mut palette = vec![0u32; rd.graph.vertex_count()];
    if h == 2 {
        // Single layer: complete bipartite sides get odd/even colors, and the
        // antipodal matching (present since 4 | n here) splits each side.
        for (v, &(_, j)) in rd.reps.iter().enumerate() {
            palette[v] = match (j % 2 == 1, j <= n / 2) {
                (true, true) => 1,
                (true, false) => 3,
                (false, true) => 2,
                (false, false) => 4,
            };
        }
    } else {
        let top = rd.top_layer();
        // Greedy over the induced top layer, by position.
        let top_verts: Vec<usize> = (0..rd.graph.vertex_count())
            .filter(|&v| rd.reps[v].0 == top)
            .collect();
        for &v in &top_verts {
            let mut used = 0u64;
            for u in rd.graph.neighbors(v) {
                if rd.reps[u].0 == top && palette[u] != 0 {
                    used |= 1 << palette[u];
                }
            }
            palette[v] = (1..=4).find(|&c| used >> c & 1 == 0).ok_or_else(|| {
                Error::CheckFailed("top layer needed more than four colors".into())
            })?;
        }
        for (v, &(i, j)) in rd.reps.iter().enumerate() {
            if i == top {
                continue;
            }
            let (lo, hi) = if (i + j) % 2 == 1 { (1, 3) } else { (2, 4) };
            palette[v] = if i + 1 == top {
                // Unique neighbor in the top layer.
                let up = rd.graph.neighbors(v).find(|&u| rd.reps[u].0 == top).ok_or_else(
                    || Error::CheckFailed(format!("({i},{j}) has no top neighbor")),
                )?;
                if palette[up] == lo {
                    hi
                } else {
                    lo
                }
            } else {
                lo
            };
        }
    }
    let colors: Vec<u32> = palette.iter().map(|&c| c - 1).collect();
    let names = (1..=4).map(|c| c.to_string()).collect();
    let c = Coloring::with_names(colors, 4, names)?;
    if !is_proper(&rd.graph, &c)? {
        return Err(Error::CheckFailed("layered 4-coloring is not proper".into()));
    }
    Ok(c)
}

fn require_edge(sg: &Schrijver, v: &SubsetVertex, w: &SubsetVertex) -> Result<(usize, usize)> {
    let vi = sg
        .index_of(v)
        .ok_or_else(|| Error::InvalidParameter(format!("{:?} is not a vertex", v.members())))?;
    let wi = sg
        .index_of(w)
        .ok_or_else(|| Error::InvalidParameter(format!("{:?} is not a vertex", w.members())))?;
    if !sg.graph.has_edge(vi, wi) {
        return Err(Error::InvalidParameter(format!(
            "{:?}-{:?} is not an edge",
            v.members(),
            w.members()
        )));
    }
    Ok((vi, wi))
}

/// The basic coloring for the edge VW: colors are the elements of
/// [n] \ (V u W) plus one special color; a vertex U takes the largest element
/// of U outside V u W, or the special color when there is none.
pub fn basic_coloring(sg: &Schrijver, v: &SubsetVertex, w: &SubsetVertex) -> Result<Coloring> {
    require_edge(sg, v, w)?;
    let n = sg.n;
    let outside = !(v.mask | w.mask) & if n == 64 { u64::MAX } else { (1 << n) - 1 };
    let d_elems: Vec<u32> = (1..=n).filter(|&e| outside >> (e - 1) & 1 == 1).collect();
    let color_of_elem: std::collections::HashMap<u32, u32> = d_elems
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, i as u32))
        .collect();
    let special = d_elems.len() as u32;
    let colors = sg
        .vertices
        .iter()
        .map(|u| {
            let inter = u.mask & outside;
            if inter == 0 {
                special
            } else {
                let max_elem = 64 - inter.leading_zeros();
                color_of_elem[&max_elem]
            }
        })
        .collect();
    let mut names: Vec<String> = d_elems.iter().map(|e| e.to_string()).collect();
    names.push("special".into());
    Coloring::with_names(colors, special + 1, names)
}

/// Whether the basic coloring for this edge is guaranteed to have VW as its
/// only monochromatic edge: the cycle induced on V u W is connected, or has
/// two components both of odd size.
pub fn basic_coloring_is_decisive(n: u32, v: &SubsetVertex, w: &SubsetVertex) -> bool {
    let union = v.mask | w.mask;
    // Component sizes of C_n[V u W]: maximal runs of consecutive members.
    let mut sizes = Vec::new();
    let total = union.count_ones();
    if total == n {
        return true; // the whole cycle, a single component
    }
    // Walk from a position not in the union.
    let start = (1..=n).find(|&e| union >> (e - 1) & 1 == 0).unwrap();
    let mut run = 0u32;
    for off in 1..=n {
        let e = mod1(start as i64 + off as i64, n);
        if union >> (e - 1) & 1 == 1 {
            run += 1;
        } else if run > 0 {
            sizes.push(run);
            run = 0;
        }
    }
    if run > 0 {
        sizes.push(run);
    }
    sizes.len() == 1 || (sizes.len() == 2 && sizes.iter().all(|&s| s % 2 == 1))
}

/// An (n-2k+1)-coloring whose unique monochromatic edge is the given edge
/// between two regular vertices, obtained from the max-rule basic coloring by
/// recoloring one endpoint of every other monochromatic edge.
pub fn regular_edge_coloring(
    sg: &Schrijver,
    v: &SubsetVertex,
    w: &SubsetVertex,
) -> Result<Coloring> {
    let (vi, wi) = require_edge(sg, v, w)?;
    if !is_regular(v) || !is_regular(w) {
        return Err(Error::InvalidParameter(
            "both endpoints must be regular vertices".into(),
        ));
    }
    let n = sg.n;
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    // Rotate so that 1 lies in V.
    let v0 = v.members()[0];
    let r = (n - (v0 - 1)) % n;
    let rot: Vec<u64> = sg
        .vertices
        .iter()
        .map(|u| rotate_mask(u.mask, r, n))
        .collect();
    let vm = rotate_mask(v.mask, r, n);
    let wm = rotate_mask(w.mask, r, n);
    debug_assert_eq!(vm & 1, 1, "rotation must bring 1 into V");
    let union = vm | wm;
    let outside = !union & full;
    let d_elems: Vec<u32> = (1..=n).filter(|&e| outside >> (e - 1) & 1 == 1).collect();
    let elem_color: std::collections::HashMap<u32, u32> = d_elems
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, i as u32))
        .collect();
    let special = d_elems.len() as u32;

    // Max-rule basic coloring in rotated coordinates.
    let mut colors: Vec<u32> = rot
        .iter()
        .map(|&m| {
            let inter = m & outside;
            if inter == 0 {
                special
            } else {
                elem_color[&(64 - inter.leading_zeros())]
            }
        })
        .collect();

    // Monochromatic edges of the basic coloring: special pairs partitioning
    // V u W. Recolor one endpoint of each, except the target edge itself.
    let by_rot: std::collections::HashMap<u64, usize> =
        rot.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    for x in 0..sg.vertices.len() {
        if colors[x] != special {
            continue;
        }
        let xm = rot[x];
        let ym = union & !xm;
        let Some(&y) = by_rot.get(&ym) else { continue };
        if y <= x || colors[y] != special {
            continue;
        }
        if (x == vi && y == wi) || (x == wi && y == vi) {
            continue;
        }
        // One of the pair contains the element 1.
        let (holder, other, hm, om) = if xm & 1 == 1 {
            (x, y, xm, ym)
        } else {
            (y, x, ym, xm)
        };
        let a = (hm & !vm).trailing_zeros() + 1;
        let b = (om & !wm).trailing_zeros() + 1;
        debug_assert!(a >= 2 && b >= 2 && a != b);
        if b < a {
            colors[holder] = elem_color[&(b - 1)];
        } else {
            colors[other] = elem_color[&(a - 1)];
        }
    }

    // Color names in original coordinates: un-rotate the cycle elements.
    let mut names: Vec<String> = d_elems
        .iter()
        .map(|&e| mod1(e as i64 + v0 as i64 - 1, n).to_string())
        .collect();
    names.push("special".into());
    let c = Coloring::with_names(colors, special + 1, names)?;
    let mono = monochromatic_edges(&sg.graph, &c)?;
    if mono != vec![(vi.min(wi), vi.max(wi))] {
        return Err(Error::CheckFailed(format!(
            "recoloring left monochromatic edges {mono:?}"
        )));
    }
    Ok(c)
}

/// An (n-3)-coloring of SG(n, 2) whose unique monochromatic edge is the given
/// interlacing edge with an endpoint of length at most 3.
pub fn sg_n2_edge_coloring(
    sg: &Schrijver,
    x: &SubsetVertex,
    y: &SubsetVertex,
) -> Result<Coloring> {
    if sg.k != 2 {
        return Err(Error::InvalidParameter(format!(
            "this construction is for 2-subset vertices, got k={}",
            sg.k
        )));
    }
    let (xi, yi) = require_edge(sg, x, y)?;
    if !is_interlacing(x, y)? {
        return Err(Error::InvalidParameter("the edge must be interlacing".into()));
    }
    let (lx, ly) = (vertex_length(x)?, vertex_length(y)?);
    if lx.min(ly) > 3 {
        return Err(Error::InvalidParameter(
            "one endpoint must have length at most 3".into(),
        ));
    }
    let n = sg.n;
    if lx == 2 || ly == 2 {
        let c = basic_coloring(sg, x, y)?;
        let mono = monochromatic_edges(&sg.graph, &c)?;
        if mono != vec![(xi.min(yi), xi.max(yi))] {
            return Err(Error::CheckFailed(format!(
                "basic coloring left monochromatic edges {mono:?}"
            )));
        }
        return Ok(c);
    }

    // Length-3 branch. Normalize by a rotation (and possibly a reflection) of
    // the cycle so that the length-3 endpoint becomes {1,4} and the other
    // endpoint {2,i}.
    let (three, _other) = if lx == 3 { (x, y) } else { (y, x) };
    let m = three.members();
    // p with p+3 = other member cyclically.
    let p = if mod1(m[0] as i64 + 3, n) == m[1] { m[0] } else { m[1] };
    let sigma: Vec<u32> = (0..=n)
        .map(|e| if e == 0 { 0 } else { mod1(e as i64 - p as i64 + 1, n) })
        .collect();
    let apply = |perm: &[u32], elems: &[u32]| -> Vec<u32> {
        let mut out: Vec<u32> = elems.iter().map(|&e| perm[e as usize]).collect();
        out.sort_unstable();
        out
    };
    let other_sigma = apply(&sigma, &if lx == 3 { y.members() } else { x.members() });
    // After the rotation the inner element is 2 or 3; reflect if it is 3.
    let needs_flip = other_sigma.contains(&3);
    let perm: Vec<u32> = (0..=n)
        .map(|e| {
            if e == 0 {
                0
            } else if needs_flip {
                mod1(5 - sigma[e as usize] as i64, n)
            } else {
                sigma[e as usize]
            }
        })
        .collect();
    let inv_perm = {
        let mut inv = vec![0u32; n as usize + 1];
        for e in 1..=n {
            inv[perm[e as usize] as usize] = e;
        }
        inv
    };
    let norm_other = apply(&perm, &if lx == 3 { y.members() } else { x.members() });
    debug_assert_eq!(apply(&perm, &m), vec![1, 4]);
    debug_assert_eq!(norm_other[0], 2);
    let i = norm_other[1];

    // Color classes in normalized coordinates.
    let big: Vec<u32> = (5..=n).filter(|&j| j != i).collect();
    let mut names: Vec<String> = big.iter().map(|&j| inv_perm[j as usize].to_string()).collect();
    names.push("0".into());
    names.push("-1".into());
    let zero_class = big.len() as u32;
    let minus_class = zero_class + 1;
    let big_color: std::collections::HashMap<u32, u32> = big
        .iter()
        .enumerate()
        .map(|(idx, &j)| (j, idx as u32))
        .collect();
    let colors = sg
        .vertices
        .iter()
        .map(|u| {
            let elems = apply(&perm, &u.members());
            if let Some(&j) = elems.iter().rev().find(|&&j| j > 4 && j != i) {
                return Ok(big_color[&j]);
            }
            let pair = (elems[0], elems[1]);
            match pair {
                (1, 3) => Ok(zero_class),
                (1, 4) | (2, 4) => Ok(minus_class),
                (1, j) | (3, j) if j == i => Ok(zero_class),
                (2, j) | (4, j) if j == i => Ok(minus_class),
                _ => Err(Error::CheckFailed(format!("unclassified vertex {pair:?}"))),
            }
        })
        .collect::<Result<Vec<u32>>>()?;
    let q = minus_class + 1;
    if q != n - 3 {
        return Err(Error::CheckFailed(format!("used {q} colors, expected {}", n - 3)));
    }
    let c = Coloring::with_names(colors, q, names)?;
    let mono = monochromatic_edges(&sg.graph, &c)?;
    if mono != vec![(xi.min(yi), xi.max(yi))] {
        return Err(Error::CheckFailed(format!(
            "coloring left monochromatic edges {mono:?}"
        )));
    }
    Ok(c)
}

fn expand(groups: &[(&str, usize)]) -> Vec<u8> {
    let mut out = Vec::new();
    for &(s, reps) in groups {
        for _ in 0..reps {
            out.extend(s.bytes().map(|b| b - b'0'));
        }
    }
    out
}

/// The explicit 3-coloring of U_k minus the extra edge (1,1)(1,k+2), for even
/// k >= 4, giving identical colors to antipodal vertices of the second layer.
fn uk_even_strings(k: u32) -> (Vec<u8>, Vec<u8>) {
    let t = (k / 2 - 1) as usize;
    let s1 = expand(&[("012", 1), ("01", t), ("020", 1), ("12", t)]);
    let s2 = expand(&[("201", 1), ("20", t), ("201", 1), ("20", t)]);
    (s1, s2)
}

/// The explicit 3-coloring of U_k minus the extra edge (1,1)(1,k+1), for odd k.
fn uk_odd_boundary_strings(k: u32) -> (Vec<u8>, Vec<u8>) {
    let t = ((k - 1) / 2) as usize;
    let s1 = expand(&[("0", 1), ("21", t), ("0", 1), ("10", t), ("21", 1)]);
    let s2 = expand(&[("1", 1), ("02", t), ("1", 1), ("01", t), ("02", 1)]);
    (s1, s2)
}

/// Builds the coloring of U_k from per-position color strings transformed by
/// a position permutation: color(i, j) = s_i[tau(j)].
fn coloring_from_strings(
    u: &UGraph,
    s1: &[u8],
    s2: &[u8],
    tau: impl Fn(u32) -> u32,
) -> Result<ThreeColoring> {
    let n = 2 * u.k + 2;
    let mut colors = vec![0u8; u.graph.vertex_count()];
    for j in 1..=n {
        let p = tau(j) as usize - 1;
        colors[u.vertex(1, j)] = s1[p];
        colors[u.vertex(2, j)] = s2[p];
    }
    ThreeColoring::new(colors)
}

/// A proper 3-coloring of U_k minus the extra edge (1,a)(1,b); for even k the
/// coloring additionally gives identical colors to antipodal second-layer
/// vertices. For k = 3 the two middle extra edges admit no such coloring.
pub fn uk_minus_edge_coloring(k: u32, a: u32, b: u32) -> Result<ThreeColoring> {
    let u = UGraph::new(k)?;
    let n = 2 * k + 2;
    let (a, b) = (a.min(b), a.max(b));
    if !u.extra_edges().contains(&(a, b)) {
        return Err(Error::InvalidParameter(format!(
            "(1,{a})(1,{b}) is not an extra edge of this gadget"
        )));
    }
    let coloring = if k % 2 == 0 {
        // Rotate the explicit strings from (1, k+2) onto (a, b).
        let (s1, s2) = uk_even_strings(k);
        coloring_from_strings(&u, &s1, &s2, |j| mod1(j as i64 - a as i64 + 1, n))?
    } else if a == 1 || b == 2 * k + 1 {
        // Boundary edges (1, k+1) and (k+1, 2k+1); the latter by reflection.
        let (s1, s2) = uk_odd_boundary_strings(k);
        if a == 1 {
            coloring_from_strings(&u, &s1, &s2, |j| j)?
        } else {
            coloring_from_strings(&u, &s1, &s2, |j| mod1(2 * (k as i64) + 2 - j as i64, n))?
        }
    } else {
        // Middle edge (a, a+k), 2 <= a <= k: also an extra edge of the even
        // gadget one size down; extend that coloring by two new positions.
        if k == 3 {
            return Err(Error::NoColoringExists(format!(
                "(1,{a})(1,{b}) cannot be deleted alone at k = 3: the two middle \
                 extra edges are the non-critical pair"
            )));
        }
        let prev = UGraph::new(k - 1)?;
        let small = uk_minus_edge_coloring(k - 1, a, b)?;
        let m = 2 * k; // positions of the smaller gadget
        let mut colors = vec![u8::MAX; u.graph.vertex_count()];
        for j in 1..=m {
            colors[u.vertex(1, j)] = small.color(prev.vertex(1, j));
            colors[u.vertex(2, j)] = small.color(prev.vertex(2, j));
        }
        colors[u.vertex(1, m + 1)] = colors[u.vertex(1, 1)];
        colors[u.vertex(2, m + 1)] = colors[u.vertex(2, 1)];
        // (2, 2k+2): neighbors (2, 2k+1) and (2, 1) share a color, plus the
        // antipodal chord partner (2, k+1).
        let c = |x: u8, y: u8| (0..3u8).find(|&c| c != x && c != y).unwrap();
        colors[u.vertex(2, m + 2)] = c(colors[u.vertex(2, 1)], colors[u.vertex(2, k + 1)]);
        colors[u.vertex(1, m + 2)] = c(colors[u.vertex(1, 1)], colors[u.vertex(2, m + 2)]);
        ThreeColoring::new(colors)?
    };
    // The deleted edge must be the only monochromatic one, and for even k the
    // second layer must agree on antipodal pairs.
    let target = {
        let (p, q) = (u.vertex(1, a), u.vertex(1, b));
        (p.min(q), p.max(q))
    };
    let mono = coloring.monochromatic_edges_on(&u.graph);
    if mono != vec![target] {
        return Err(Error::CheckFailed(format!(
            "expected only (1,{a})(1,{b}) monochromatic, found {mono:?}"
        )));
    }
    if k % 2 == 0 {
        for j in 1..=k + 1 {
            if coloring.color(u.vertex(2, j)) != coloring.color(u.vertex(2, j + k + 1)) {
                return Err(Error::CheckFailed(format!(
                    "second layer disagrees on the antipodal pair at position {j}"
                )));
            }
        }
    }
    Ok(coloring)
}

/// Extends a coloring of the two-layer gadget to the full Klein-bottle
/// subgraph Y_k: layers one and two are copied, and each further layer is the
/// previous one shifted by one position.
pub fn extend_to_yk(k: u32, c: &ThreeColoring) -> Result<ThreeColoring> {
    let u = UGraph::new(k)?;
    let y = YGraph::new(k)?;
    if c.len() != u.graph.vertex_count() {
        return Err(Error::InvalidParameter(format!(
            "expected a coloring of the {}-vertex gadget",
            u.graph.vertex_count()
        )));
    }
    let n = 2 * k + 2;
    let top = y.top_layer();
    // Virtual full-cycle colors per layer; layer i >= 3 is layer i-1 shifted.
    let mut layer: Vec<Vec<u8>> = vec![Vec::new(); top as usize + 1];
    layer[1] = (1..=n).map(|j| c.color(u.vertex(1, j))).collect();
    if top >= 2 {
        layer[2] = (1..=n).map(|j| c.color(u.vertex(2, j))).collect();
    }
    for i in 3..=top {
        layer[i as usize] = (1..=n)
            .map(|j| layer[i as usize - 1][(mod1(j as i64 + 1, n) - 1) as usize])
            .collect();
    }
    let mut colors = vec![u8::MAX; y.graph.vertex_count()];
    for (v, &(i, j)) in y.drum.reps.iter().enumerate() {
        colors[v] = layer[i as usize][j as usize - 1];
        if k % 2 == 0 && i == top {
            // Merged top layer: the shifted colors must agree antipodally.
            let partner = layer[i as usize][(mod1(j as i64 + (k as i64) + 1, n) - 1) as usize];
            if partner != colors[v] {
                return Err(Error::CheckFailed(format!(
                    "top layer colors disagree on the identified pair at (\
                     {i},{j})"
                )));
            }
        }
    }
    let out = ThreeColoring::new(colors)?;
    // The extension must not introduce monochromatic edges beyond the ones
    // already present in the gadget's bottom layer.
    let mut mono_u: Vec<_> = c
        .monochromatic_edges_on(&u.graph)
        .into_iter()
        .map(|(p, q)| {
            let mut key = [usize::MAX; 2];
            for (slot, v) in [p, q].into_iter().enumerate() {
                let j = (v % n as usize) as u32 + 1;
                let i = (v / n as usize) as u32 + 1;
                key[slot] = y.vertex(i, j);
            }
            key.sort_unstable();
            (key[0], key[1])
        })
        .collect();
    mono_u.sort_unstable();
    let mono_y = out.monochromatic_edges_on(&y.graph);
    if mono_y != mono_u {
        return Err(Error::CheckFailed(format!(
            "extension changed the monochromatic edge set: {mono_u:?} vs {mono_y:?}"
        )));
    }
    Ok(out)
}
