//! Exact graph coloring: a complete backtracking search over vertices in
//! degeneracy order, with color-symmetry breaking on a greedily found clique
//! and forward checking on color domains. Deterministic; never returns a
//! wrong answer — a configurable time budget yields an explicit timeout.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::Rng;

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::LabeledGraph;

#[derive(Clone, Debug)]
pub struct SolverConfig {
    /// Per-query time budget. `None` means unbounded.
    pub timeout: Option<Duration>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { timeout: Some(Duration::from_secs(60)) }
    }
}

impl SolverConfig {
    pub fn unbounded() -> Self {
        SolverConfig { timeout: None }
    }

    pub fn with_timeout_secs(secs: u64) -> Self {
        SolverConfig { timeout: Some(Duration::from_secs(secs)) }
    }
}

/// Degeneracy order: repeatedly remove a minimum-degree vertex (ties by
/// index); vertices are then colored in reverse removal order, so each has
/// at most `degeneracy` earlier neighbors.
fn degeneracy_order(g: &LabeledGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut removal = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (deg[v], v))
            .unwrap();
        removed[v] = true;
        removal.push(v);
        for u in g.neighbors(v) {
            if !removed[u] {
                deg[u] -= 1;
            }
        }
    }
    removal.reverse();
    removal
}

/// Greedy clique: start from the maximum-degree vertex, repeatedly add the
/// smallest-index vertex adjacent to everything chosen so far.
pub(crate) fn greedy_clique(g: &LabeledGraph) -> Vec<usize> {
    let n = g.vertex_count();
    if n == 0 {
        return Vec::new();
    }
    let start = (0..n).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))).unwrap();
    let mut clique = vec![start];
    loop {
        let next = (0..n).find(|&v| {
            !clique.contains(&v) && clique.iter().all(|&u| g.has_edge(u, v))
        });
        match next {
            Some(v) => clique.push(v),
            None => break,
        }
    }
    clique.sort_unstable();
    clique
}

/// Greedy coloring along the given vertex order; returns per-vertex colors.
pub(crate) fn greedy_coloring_in_order(g: &LabeledGraph, order: &[usize]) -> Vec<u32> {
    let mut colors = vec![u32::MAX; g.vertex_count()];
    let mut used = Vec::new();
    for &v in order {
        used.clear();
        used.resize(g.degree(v) + 1, false);
        for u in g.neighbors(v) {
            if colors[u] != u32::MAX && (colors[u] as usize) < used.len() {
                used[colors[u] as usize] = true;
            }
        }
        colors[v] = used.iter().position(|&b| !b).unwrap() as u32;
    }
    colors
}

struct Search<'g> {
    g: &'g LabeledGraph,
    q: u32,
    order: Vec<usize>,
    colors: Vec<u32>,
    /// Available-color bitmask per vertex (forward checking).
    domains: Vec<u64>,
    deadline: Option<Instant>,
    nodes: u64,
}

impl<'g> Search<'g> {
    fn check_time(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes % 1024 == 0 {
            if let Some(d) = self.deadline {
                if Instant::now() > d {
                    return Err(Error::Timeout(Duration::default()));
                }
            }
        }
        Ok(())
    }

    /// Tries to complete the coloring from position `pos` in the order.
    /// `max_used` is the largest color index assigned so far; new colors must
    /// be introduced in increasing order (canonical colorings only).
    fn run(&mut self, pos: usize, max_used: u32) -> Result<bool> {
        self.check_time()?;
        if pos == self.order.len() {
            return Ok(true);
        }
        let v = self.order[pos];
        if self.colors[v] != u32::MAX {
            return self.run(pos + 1, max_used);
        }
        let cap = (max_used + 2).min(self.q);
        let candidates = self.domains[v] & ((1u64 << cap) - 1);
        let mut bits = candidates;
        while bits != 0 {
            let c = bits.trailing_zeros();
            bits &= bits - 1;
            let mut touched = Vec::new();
            let mut dead_end = false;
            for u in self.g.neighbors(v) {
                if self.colors[u] == u32::MAX && self.domains[u] >> c & 1 == 1 {
                    self.domains[u] &= !(1u64 << c);
                    touched.push(u);
                    if self.domains[u] == 0 {
                        dead_end = true;
                        break;
                    }
                }
            }
            if !dead_end {
                self.colors[v] = c;
                if self.run(pos + 1, max_used.max(c))? {
                    return Ok(true);
                }
                self.colors[v] = u32::MAX;
            }
            for u in touched {
                self.domains[u] |= 1u64 << c;
            }
        }
        Ok(false)
    }
}

/// Finds a proper q-coloring if one exists. Complete and deterministic.
pub fn exists_q_coloring(
    g: &LabeledGraph,
    q: u32,
    config: &SolverConfig,
) -> Result<Option<Coloring>> {
    if q < 1 {
        return Err(Error::InvalidParameter("need at least one color".into()));
    }
    let n = g.vertex_count();
    if n == 0 {
        return Ok(Some(Coloring::new(Vec::new(), q)?));
    }
    if q > 63 {
        return Err(Error::InvalidParameter("color universe capped at 63".into()));
    }
    let clique = greedy_clique(g);
    if clique.len() as u32 > q {
        return Ok(None);
    }
    let deadline = config.timeout.map(|t| Instant::now() + t);
    let order = degeneracy_order(g);
    let full = (1u64 << q) - 1;
    let mut search = Search {
        g,
        q,
        order,
        colors: vec![u32::MAX; n],
        domains: vec![full; n],
        deadline,
        nodes: 0,
    };
    // Symmetry breaking: pin the clique to colors 0..len-1.
    for (c, &v) in clique.iter().enumerate() {
        let c = c as u32;
        if search.domains[v] >> c & 1 == 0 {
            return Ok(None);
        }
        search.colors[v] = c;
        for u in g.neighbors(v) {
            if search.colors[u] == u32::MAX {
                search.domains[u] &= !(1u64 << c);
                if search.domains[u] == 0 {
                    return Ok(None);
                }
            }
        }
    }
    let max_used = clique.len() as u32 - 1;
    match search.run(0, max_used) {
        Ok(true) => Ok(Some(Coloring::new(search.colors, q)?)),
        Ok(false) => Ok(None),
        Err(Error::Timeout(_)) => Err(Error::Timeout(config.timeout.unwrap_or_default())),
        Err(e) => Err(e),
    }
}

/// The least q admitting a proper q-coloring.
pub fn chromatic_number(g: &LabeledGraph, config: &SolverConfig) -> Result<u32> {
    if g.vertex_count() == 0 {
        return Ok(0);
    }
    let lower = greedy_clique(g).len() as u32;
    let order = degeneracy_order(g);
    let greedy = greedy_coloring_in_order(g, &order);
    let upper = greedy.iter().max().unwrap() + 1;
    if lower > 63 {
        return Err(Error::InvalidParameter(format!(
            "a clique of size {lower} exceeds the supported color range"
        )));
    }
    for q in lower..upper.min(64) {
        if exists_q_coloring(g, q, config)?.is_some() {
            return Ok(q);
        }
    }
    if upper > 64 {
        return Err(Error::InvalidParameter(
            "chromatic number exceeds the supported color range".into(),
        ));
    }
    Ok(upper)
}

/// Memo for chromatic numbers keyed by the structure hash of the graph.
#[derive(Default)]
pub struct ChromaticCache {
    map: HashMap<u64, u32>,
}

impl ChromaticCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn chromatic_number(&mut self, g: &LabeledGraph, config: &SolverConfig) -> Result<u32> {
        let key = g.structure_hash();
        if let Some(&chi) = self.map.get(&key) {
            return Ok(chi);
        }
        let chi = chromatic_number(g, config)?;
        self.map.insert(key, chi);
        Ok(chi)
    }
}

/// Calls `f` with every proper q-coloring of the graph, in lexicographic
/// order of the color vector. Plain enumeration, no symmetry breaking.
pub fn for_each_proper_coloring<F: FnMut(&[u8])>(g: &LabeledGraph, q: u8, mut f: F) {
    let n = g.vertex_count();
    let mut colors = vec![0u8; n];
    fn rec<F: FnMut(&[u8])>(g: &LabeledGraph, q: u8, v: usize, colors: &mut Vec<u8>, f: &mut F) {
        if v == g.vertex_count() {
            f(colors);
            return;
        }
        'next: for c in 0..q {
            for u in g.neighbors(v) {
                if u < v && colors[u] == c {
                    continue 'next;
                }
            }
            colors[v] = c;
            rec(g, q, v + 1, colors, f);
        }
    }
    rec(g, q, 0, &mut colors, &mut f);
}

/// A uniformly seeded (not uniformly distributed) random proper q-coloring:
/// backtracking with per-vertex shuffled color order.
pub fn random_proper_coloring<R: Rng>(g: &LabeledGraph, q: u8, rng: &mut R) -> Option<Vec<u8>> {
    let n = g.vertex_count();
    let mut colors = vec![u8::MAX; n];
    fn rec<R: Rng>(g: &LabeledGraph, q: u8, v: usize, colors: &mut Vec<u8>, rng: &mut R) -> bool {
        if v == g.vertex_count() {
            return true;
        }
        let mut cs: Vec<u8> = (0..q).collect();
        cs.shuffle(rng);
        'next: for c in cs {
            for u in g.neighbors(v) {
                if u < v && colors[u] == c {
                    continue 'next;
                }
            }
            colors[v] = c;
            if rec(g, q, v + 1, colors, rng) {
                return true;
            }
        }
        colors[v] = u8::MAX;
        false
    }
    if rec(g, q, 0, &mut colors, rng) {
        Some(colors)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_bipartite, cycle, path};
    use crate::schrijver::schrijver;

    fn naive_exists(g: &LabeledGraph, q: u32) -> bool {
        // Independent oracle: iterate all q^n assignments.
        let n = g.vertex_count();
        let edges = g.edges();
        let mut assignment = vec![0u32; n];
        loop {
            if edges.iter().all(|&(u, v)| assignment[u] != assignment[v]) {
                return true;
            }
            let mut i = 0;
            loop {
                if i == n {
                    return false;
                }
                assignment[i] += 1;
                if assignment[i] < q {
                    break;
                }
                assignment[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn solver_agrees_with_naive_enumeration() {
        let cfg = SolverConfig::unbounded();
        let mut graphs = vec![
            path(5).unwrap(),
            cycle(5).unwrap(),
            cycle(6).unwrap(),
            complete_bipartite(3, 4).unwrap(),
            schrijver(6, 2).unwrap(),
        ];
        // A few seeded random graphs on <= 12 vertices.
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for n in [6usize, 9, 12] {
            let labels = (0..n as i64).map(crate::graph::VertexLabel::Int).collect();
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.random_bool(0.4) {
                        edges.push((u, v));
                    }
                }
            }
            graphs.push(LabeledGraph::new(labels, &edges).unwrap());
        }
        for g in &graphs {
            for q in 1..=4u32 {
                let found = exists_q_coloring(g, q, &cfg).unwrap();
                assert_eq!(found.is_some(), naive_exists(g, q));
                if let Some(c) = found {
                    assert!(crate::coloring::is_proper(g, &c).unwrap());
                }
            }
        }
    }

    #[test]
    fn chromatic_numbers_of_standard_graphs() {
        let cfg = SolverConfig::unbounded();
        assert_eq!(chromatic_number(&cycle(4).unwrap(), &cfg).unwrap(), 2);
        assert_eq!(chromatic_number(&cycle(5).unwrap(), &cfg).unwrap(), 3);
        assert_eq!(chromatic_number(&complete_bipartite(4, 4).unwrap(), &cfg).unwrap(), 2);
        assert_eq!(chromatic_number(&schrijver(6, 2).unwrap(), &cfg).unwrap(), 4);
    }

    #[test]
    fn enumeration_counts_proper_colorings_of_cycles() {
        // Chromatic polynomial of C_m at 3: 2^m + 2 (-1)^m.
        for m in 3..=10u32 {
            let g = cycle(m).unwrap();
            let mut count = 0u64;
            for_each_proper_coloring(&g, 3, |_| count += 1);
            let expected = if m % 2 == 0 { (1u64 << m) + 2 } else { (1u64 << m) - 2 };
            assert_eq!(count, expected, "m={m}");
        }
    }

    #[test]
    fn random_colorings_are_proper_and_seeded() {
        use rand::SeedableRng;
        let g = cycle(7).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(12345);
        let a = random_proper_coloring(&g, 3, &mut rng).unwrap();
        for (u, v) in g.edges() {
            assert_ne!(a[u], a[v]);
        }
        let mut rng2 = rand_chacha::ChaCha8Rng::seed_from_u64(12345);
        let b = random_proper_coloring(&g, 3, &mut rng2).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn cache_returns_consistent_values() {
        let cfg = SolverConfig::unbounded();
        let mut cache = ChromaticCache::new();
        let g = schrijver(6, 2).unwrap();
        assert_eq!(cache.chromatic_number(&g, &cfg).unwrap(), 4);
        assert_eq!(cache.chromatic_number(&g, &cfg).unwrap(), 4);
    }
}
