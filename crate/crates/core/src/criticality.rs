//! Color-critical edges: the brute-force oracle (does deleting the edge drop
//! the chromatic number?), the closed-form predictions for Schrijver graphs,
//! and exhaustive comparison of the two.

use serde::Serialize;

use crate::drum::ReducedDrum;
use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::schrijver::{is_interlacing, is_regular, vertex_length, Schrijver};
use crate::solver::{chromatic_number, exists_q_coloring, SolverConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Prediction {
    Critical,
    NonCritical,
    Unknown,
}

/// Which characterization produced a prediction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PredictionRule {
    /// Non-interlacing edges are never critical.
    NonInterlacing,
    /// In the 4-chromatic family (n = 2k+2), critical = interlacing.
    FourChromaticInterlacing,
    /// Edges between two regular vertices are critical.
    RegularEndpoints,
    /// For k = 2: critical = interlacing with an endpoint of length <= 3.
    PairLengthCharacterization,
    /// Outside every known characterization.
    OpenRegime,
}

/// The verdict for a single edge of a Schrijver graph.
#[derive(Clone, Debug, Serialize)]
pub struct EdgeVerdict {
    /// Vertex indices in the canonical ordering of SG(n, k).
    pub edge: (usize, usize),
    /// The endpoint subsets, for readability.
    pub endpoints: (Vec<u32>, Vec<u32>),
    pub interlacing: bool,
    pub endpoint_regular: (bool, bool),
    pub predicted: Prediction,
    pub prediction_source: PredictionRule,
    /// Exact answer, when computed: chi(G - e) < chi(G).
    pub brute: Option<bool>,
}

/// Exact criticality of an edge: compares the chromatic numbers with and
/// without it.
pub fn is_critical_brute(g: &LabeledGraph, e: (usize, usize), config: &SolverConfig) -> Result<bool> {
    if !g.has_edge(e.0, e.1) {
        return Err(Error::InvalidParameter(format!("{e:?} is not an edge")));
    }
    let chi = chromatic_number(g, config)?;
    is_critical_given_chi(g, e, chi, config)
}

/// Exact criticality when chi(G) is already known: a single query for a
/// (chi-1)-coloring of G - e.
pub fn is_critical_given_chi(
    g: &LabeledGraph,
    e: (usize, usize),
    chi: u32,
    config: &SolverConfig,
) -> Result<bool> {
    if chi <= 1 {
        return Ok(false);
    }
    let without = g.remove_edge(e.0, e.1)?;
    Ok(exists_q_coloring(&without, chi - 1, config)?.is_some())
}

/// Prediction for an edge of SG(n, k) from the known characterizations.
pub fn predict_schrijver_edge(sg: &Schrijver, e: (usize, usize)) -> Result<EdgeVerdict> {
    let (a, b) = e;
    if !sg.graph.has_edge(a, b) {
        return Err(Error::InvalidParameter(format!("{e:?} is not an edge")));
    }
    let (va, vb) = (sg.vertex(a), sg.vertex(b));
    let interlacing = is_interlacing(va, vb)?;
    let endpoint_regular = (is_regular(va), is_regular(vb));
    let (predicted, rule) = if !interlacing {
        (Prediction::NonCritical, PredictionRule::NonInterlacing)
    } else if sg.n == 2 * sg.k + 2 {
        (Prediction::Critical, PredictionRule::FourChromaticInterlacing)
    } else if endpoint_regular.0 && endpoint_regular.1 {
        (Prediction::Critical, PredictionRule::RegularEndpoints)
    } else if sg.k == 2 {
        let short = vertex_length(va)?.min(vertex_length(vb)?) <= 3;
        (
            if short { Prediction::Critical } else { Prediction::NonCritical },
            PredictionRule::PairLengthCharacterization,
        )
    } else {
        (Prediction::Unknown, PredictionRule::OpenRegime)
    };
    Ok(EdgeVerdict {
        edge: (a.min(b), a.max(b)),
        endpoints: (va.members(), vb.members()),
        interlacing,
        endpoint_regular,
        predicted,
        prediction_source: rule,
        brute: None,
    })
}

/// The edge partition of the reduced drum of height k+1: the non-critical
/// edges are exactly the bottom-layer edges added to complete the cycle to a
/// bipartite graph; everything else (including the bottom cycle) is critical.
#[derive(Debug, Serialize)]
pub struct DrumEdgeClasses {
    pub critical: Vec<(usize, usize)>,
    pub non_critical: Vec<(usize, usize)>,
}

pub fn classify_reduced_drum_edges(k: u32) -> Result<DrumEdgeClasses> {
    if k < 1 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let n = 2 * k + 2;
    let rd = ReducedDrum::new(k + 1, n)?;
    let mut classes = DrumEdgeClasses { critical: Vec::new(), non_critical: Vec::new() };
    for (u, v) in rd.graph.edges() {
        let (iu, ju) = rd.reps[u];
        let (iv, jv) = rd.reps[v];
        let bottom = iu == 1 && iv == 1;
        let (lo, hi) = (ju.min(jv), ju.max(jv));
        let cycle_edge = hi - lo == 1 || (lo == 1 && hi == n);
        // Only the completion chords (odd position difference, not on the
        // cycle) are non-critical; at height 2 the quotient also folds the
        // vertical matching into the bottom layer as even-difference pairs,
        // and those stay critical.
        if bottom && (hi - lo) % 2 == 1 && !cycle_edge {
            classes.non_critical.push((u, v));
        } else {
            classes.critical.push((u, v));
        }
    }
    Ok(classes)
}

/// Prediction-versus-oracle sweep over every edge of SG(n, k).
#[derive(Debug, Serialize)]
pub struct ComparisonReport {
    pub n: u32,
    pub k: u32,
    pub chromatic_number: u32,
    pub verdicts: Vec<EdgeVerdict>,
    /// Indices into `verdicts` where a non-Unknown prediction contradicts
    /// the oracle.
    pub mismatches: Vec<usize>,
    /// Indices into `verdicts` where the solver timed out.
    pub timeouts: Vec<usize>,
}

pub fn compare_all(n: u32, k: u32, config: &SolverConfig) -> Result<ComparisonReport> {
    let sg = Schrijver::new(n, k)?;
    let chi = chromatic_number(&sg.graph, config)?;
    let mut report = ComparisonReport {
        n,
        k,
        chromatic_number: chi,
        verdicts: Vec::new(),
        mismatches: Vec::new(),
        timeouts: Vec::new(),
    };
    for e in sg.graph.edges() {
        let mut verdict = predict_schrijver_edge(&sg, e)?;
        match is_critical_given_chi(&sg.graph, e, chi, config) {
            Ok(brute) => {
                verdict.brute = Some(brute);
                let contradiction = match verdict.predicted {
                    Prediction::Critical => !brute,
                    Prediction::NonCritical => brute,
                    Prediction::Unknown => false,
                };
                if contradiction {
                    report.mismatches.push(report.verdicts.len());
                }
            }
            Err(Error::Timeout(_)) => {
                report.timeouts.push(report.verdicts.len());
            }
            Err(e) => return Err(e),
        }
        report.verdicts.push(verdict);
    }
    Ok(report)
}

/// Removes every non-interlacing edge incident to the fixed vertex and
/// returns the resulting graph (the chromatic number should not drop).
pub fn remove_non_interlacing_at(sg: &Schrijver, v: usize) -> Result<LabeledGraph> {
    let doomed: Vec<(usize, usize)> = sg
        .graph
        .neighbors(v)
        .filter(|&u| !is_interlacing(sg.vertex(v), sg.vertex(u)).unwrap_or(false))
        .map(|u| (v.min(u), v.max(u)))
        .collect();
    sg.graph.remove_edges(&doomed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cycle;
    use crate::quad::mobius_ladder;

    fn cfg() -> SolverConfig {
        SolverConfig::unbounded()
    }

    #[test]
    fn complete_graph_edges_are_critical() {
        let k4 = mobius_ladder(4).unwrap();
        for e in k4.edges() {
            assert!(is_critical_brute(&k4, e, &cfg()).unwrap());
        }
    }

    #[test]
    fn even_cycle_edges_are_not_critical() {
        let c4 = cycle(4).unwrap();
        for e in c4.edges() {
            assert!(!is_critical_brute(&c4, e, &cfg()).unwrap());
        }
    }

    #[test]
    fn long_interlacing_edge_of_sg_8_2_is_not_critical() {
        let sg = Schrijver::new(8, 2).unwrap();
        let x = crate::schrijver::SubsetVertex::new(8, &[1, 5]).unwrap();
        let y = crate::schrijver::SubsetVertex::new(8, &[3, 7]).unwrap();
        let e = (sg.index_of(&x).unwrap(), sg.index_of(&y).unwrap());
        assert!(is_interlacing(&x, &y).unwrap());
        assert!(!is_critical_brute(&sg.graph, e, &cfg()).unwrap());
    }

    #[test]
    fn predictions_on_sg_8_3() {
        let sg = Schrijver::new(8, 3).unwrap();
        for e in sg.graph.edges() {
            let v = predict_schrijver_edge(&sg, e).unwrap();
            if v.interlacing {
                assert_eq!(v.predicted, Prediction::Critical);
                assert_eq!(v.prediction_source, PredictionRule::FourChromaticInterlacing);
            } else {
                assert_eq!(v.predicted, Prediction::NonCritical);
            }
        }
    }

    #[test]
    fn prediction_example_9_2() {
        let sg = Schrijver::new(9, 2).unwrap();
        let x = crate::schrijver::SubsetVertex::new(9, &[1, 4]).unwrap();
        let y = crate::schrijver::SubsetVertex::new(9, &[2, 6]).unwrap();
        let e = (sg.index_of(&x).unwrap(), sg.index_of(&y).unwrap());
        let v = predict_schrijver_edge(&sg, e).unwrap();
        assert_eq!(v.predicted, Prediction::Critical);
        assert_eq!(v.prediction_source, PredictionRule::PairLengthCharacterization);
    }

    #[test]
    fn drum_edge_classes_counts() {
        // k = 2: three long chords of the bottom complete bipartite layer.
        let c2 = classify_reduced_drum_edges(2).unwrap();
        assert_eq!(c2.non_critical.len(), 3);
        // k = 3: all of K_{4,4} except the 8-cycle.
        let c3 = classify_reduced_drum_edges(3).unwrap();
        assert_eq!(c3.non_critical.len(), 16 - 8);
    }

    #[test]
    fn drum_edge_classes_match_brute_force() {
        for k in 1..=4u32 {
            let rd = ReducedDrum::new(k + 1, 2 * k + 2).unwrap();
            let classes = classify_reduced_drum_edges(k).unwrap();
            let chi = chromatic_number(&rd.graph, &cfg()).unwrap();
            assert_eq!(chi, 4);
            for &e in &classes.critical {
                assert!(is_critical_given_chi(&rd.graph, e, chi, &cfg()).unwrap(), "k={k}");
            }
            for &e in &classes.non_critical {
                assert!(!is_critical_given_chi(&rd.graph, e, chi, &cfg()).unwrap(), "k={k}");
            }
        }
    }

    #[test]
    fn compare_all_on_6_2() {
        let report = compare_all(6, 2, &cfg()).unwrap();
        assert_eq!(report.chromatic_number, 4);
        assert!(report.mismatches.is_empty());
        assert!(report.timeouts.is_empty());
        assert!(report
            .verdicts
            .iter()
            .all(|v| v.predicted != Prediction::Unknown));
    }

    #[test]
    fn removing_non_interlacing_edges_at_a_vertex_preserves_chi_6_2() {
        let sg = Schrijver::new(6, 2).unwrap();
        for v in 0..sg.graph.vertex_count() {
            let g = remove_non_interlacing_at(&sg, v).unwrap();
            assert_eq!(chromatic_number(&g, &cfg()).unwrap(), 4);
        }
    }

    #[test]
    fn removing_non_interlacing_edges_at_a_vertex_preserves_chi_8_2() {
        let sg = Schrijver::new(8, 2).unwrap();
        assert_eq!(chromatic_number(&sg.graph, &cfg()).unwrap(), 6);
        for v in 0..sg.graph.vertex_count() {
            let g = remove_non_interlacing_at(&sg, v).unwrap();
            assert_eq!(chromatic_number(&g, &cfg()).unwrap(), 6, "vertex {v}");
        }
    }
}
