//! Property-based checks of the structural invariants.

use proptest::prelude::*;

use drumgraph::graph::{cartesian_product, cycle, identify_vertices, LabeledGraph, VertexLabel};
use drumgraph::winding::{winding_number, OrientedCycle, ThreeColoring};

fn arb_graph(max_n: usize) -> impl Strategy<Value = LabeledGraph> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let labels = (0..n as i64).map(VertexLabel::Int).collect();
            let mut edges = Vec::new();
            let mut idx = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[idx] {
                        edges.push((u, v));
                    }
                    idx += 1;
                }
            }
            LabeledGraph::new(labels, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn cartesian_product_counts(f in arb_graph(6), g in arb_graph(6)) {
        let p = cartesian_product(&f, &g).unwrap();
        prop_assert_eq!(p.vertex_count(), f.vertex_count() * g.vertex_count());
        prop_assert_eq!(
            p.edge_count(),
            f.vertex_count() * g.edge_count() + f.edge_count() * g.vertex_count()
        );
    }

    #[test]
    fn identification_shrinks(g in arb_graph(10), pair_seed in any::<u64>()) {
        // Pick one non-adjacent pair deterministically from the seed, if any.
        let n = g.vertex_count();
        let mut candidates = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if !g.has_edge(a, b) {
                    candidates.push((a, b));
                }
            }
        }
        prop_assume!(!candidates.is_empty());
        let pair = candidates[(pair_seed % candidates.len() as u64) as usize];
        let q = identify_vertices(&g, &[pair]).unwrap();
        prop_assert_eq!(q.vertex_count(), n - 1);
        prop_assert!(q.edge_count() <= g.edge_count());
    }

    #[test]
    fn winding_reverses_sign_and_is_bounded(m in 3u32..=12, colors in proptest::collection::vec(0u8..3, 12)) {
        let g = cycle(m).unwrap();
        let f = ThreeColoring::new(colors[..m as usize].to_vec()).unwrap();
        let c = OrientedCycle::new(&g, (0..m as usize).collect()).unwrap();
        match winding_number(&f, &c) {
            Ok(w) => {
                prop_assert_eq!(winding_number(&f, &c.reversed()).unwrap(), -w);
                prop_assert!(w.unsigned_abs() * 3 <= m as u64);
                prop_assert_eq!(w.rem_euclid(2), (m as i64).rem_euclid(2));
            }
            Err(_) => {
                // Some cycle edge is monochromatic; nothing to check.
            }
        }
    }
}
