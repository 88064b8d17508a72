//! Winding numbers of proper 3-colorings around oriented cycles: the signed
//! sum of the +-1 edge weights divided by three. This is the elementary
//! obstruction used to rule out 3-colorings of reduced drums.

use crate::error::{Error, Result};
use crate::graph::LabeledGraph;

/// A total coloring with colors {0, 1, 2}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeColoring {
    colors: Vec<u8>,
}

impl ThreeColoring {
    pub fn new(colors: Vec<u8>) -> Result<Self> {
        if let Some(&bad) = colors.iter().find(|&&c| c > 2) {
            return Err(Error::InvalidParameter(format!("color {bad} outside {{0,1,2}}")));
        }
        Ok(ThreeColoring { colors })
    }

    pub fn color(&self, v: usize) -> u8 {
        self.colors[v]
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// True iff no edge of `g` is monochromatic.
    pub fn is_proper_on(&self, g: &LabeledGraph) -> bool {
        g.edges().iter().all(|&(u, v)| self.colors[u] != self.colors[v])
    }

    /// Monochromatic edges in lexicographic order.
    pub fn monochromatic_edges_on(&self, g: &LabeledGraph) -> Vec<(usize, usize)> {
        g.edges()
            .into_iter()
            .filter(|&(u, v)| self.colors[u] == self.colors[v])
            .collect()
    }
}

/// An oriented cycle in a host graph: a sequence of at least three distinct
/// vertices, cyclically consecutive ones adjacent.
#[derive(Clone, Debug)]
pub struct OrientedCycle {
    vertices: Vec<usize>,
}

impl OrientedCycle {
    pub fn new(g: &LabeledGraph, vertices: Vec<usize>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::InvalidParameter(format!(
                "a cycle needs at least 3 vertices, got {}",
                vertices.len()
            )));
        }
        let mut seen = std::collections::HashSet::new();
        for &v in &vertices {
            if v >= g.vertex_count() {
                return Err(Error::InvalidParameter(format!("vertex {v} out of range")));
            }
            if !seen.insert(v) {
                return Err(Error::InvalidParameter(format!("vertex {v} repeats on the cycle")));
            }
        }
        let m = vertices.len();
        for i in 0..m {
            let (a, b) = (vertices[i], vertices[(i + 1) % m]);
            if !g.has_edge(a, b) {
                return Err(Error::InvalidParameter(format!("({a},{b}) is not an edge")));
            }
        }
        Ok(OrientedCycle { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn reversed(&self) -> OrientedCycle {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        OrientedCycle { vertices }
    }
}

/// The weight of the oriented edge a -> b: the unique w in {-1, +1} with
/// w = f(b) - f(a) mod 3. Monochromatic edges have no weight.
pub fn edge_weight(f: &ThreeColoring, a: usize, b: usize) -> Result<i64> {
    let (ca, cb) = (f.color(a), f.color(b));
    if ca == cb {
        return Err(Error::MonochromaticEdge { a, b });
    }
    Ok(match (cb + 3 - ca) % 3 {
        1 => 1,
        _ => -1,
    })
}

/// The signed winding number of `f` around the oriented cycle: one third of
/// the sum of edge weights. Reversing the orientation negates it.
pub fn winding_number(f: &ThreeColoring, c: &OrientedCycle) -> Result<i64> {
    let m = c.len();
    let mut total = 0i64;
    for i in 0..m {
        total += edge_weight(f, c.vertices[i], c.vertices[(i + 1) % m])?;
    }
    debug_assert_eq!(total.rem_euclid(3), 0, "weight sum around a cycle is divisible by 3");
    Ok(total / 3)
}

/// The absolute winding number.
pub fn absolute_winding_number(f: &ThreeColoring, c: &OrientedCycle) -> Result<u64> {
    Ok(winding_number(f, c)?.unsigned_abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cycle;
    use crate::solver::for_each_proper_coloring;

    #[test]
    fn edge_weight_examples() {
        let f = ThreeColoring::new(vec![0, 1, 2]).unwrap();
        assert_eq!(edge_weight(&f, 0, 1).unwrap(), 1);
        assert_eq!(edge_weight(&f, 0, 2).unwrap(), -1);
        assert_eq!(edge_weight(&f, 2, 0).unwrap(), 1);
        let g = ThreeColoring::new(vec![1, 1]).unwrap();
        assert!(matches!(
            edge_weight(&g, 0, 1),
            Err(Error::MonochromaticEdge { a: 0, b: 1 })
        ));
    }

    #[test]
    fn triangle_winds_once() {
        let g = cycle(3).unwrap();
        let c = OrientedCycle::new(&g, vec![0, 1, 2]).unwrap();
        let f = ThreeColoring::new(vec![0, 1, 2]).unwrap();
        assert_eq!(winding_number(&f, &c).unwrap(), 1);
        assert_eq!(winding_number(&f, &c.reversed()).unwrap(), -1);
    }

    #[test]
    fn four_cycles_have_winding_zero() {
        let g = cycle(4).unwrap();
        let c = OrientedCycle::new(&g, vec![0, 1, 2, 3]).unwrap();
        for_each_proper_coloring(&g, 3, |colors| {
            let f = ThreeColoring::new(colors.to_vec()).unwrap();
            assert_eq!(winding_number(&f, &c).unwrap(), 0);
        });
    }

    #[test]
    fn six_cycle_example() {
        let g = cycle(6).unwrap();
        let c = OrientedCycle::new(&g, vec![0, 1, 2, 3, 4, 5]).unwrap();
        let f = ThreeColoring::new(vec![0, 1, 2, 0, 1, 2]).unwrap();
        assert_eq!(winding_number(&f, &c).unwrap(), 2);
        assert_eq!(winding_number(&f, &c.reversed()).unwrap(), -2);
        assert_eq!(absolute_winding_number(&f, &c).unwrap(), 2);
    }

    #[test]
    fn winding_parity_matches_cycle_length() {
        for m in 3..=12u32 {
            let g = cycle(m).unwrap();
            let c = OrientedCycle::new(&g, (0..m as usize).collect()).unwrap();
            for_each_proper_coloring(&g, 3, |colors| {
                let f = ThreeColoring::new(colors.to_vec()).unwrap();
                let w = winding_number(&f, &c).unwrap();
                assert_eq!(w.rem_euclid(2), (m as i64).rem_euclid(2), "m={m}");
                assert!(w.unsigned_abs() * 3 <= m as u64);
            });
        }
    }

    #[test]
    fn cycle_validation() {
        let g = cycle(5).unwrap();
        assert!(OrientedCycle::new(&g, vec![0, 1]).is_err());
        assert!(OrientedCycle::new(&g, vec![0, 1, 3]).is_err());
        assert!(OrientedCycle::new(&g, vec![0, 1, 2, 1]).is_err());
        assert!(OrientedCycle::new(&g, vec![0, 1, 2, 3, 4]).is_ok());
    }
}
