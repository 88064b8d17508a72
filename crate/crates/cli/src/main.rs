//! Command-line front end: generate/export the graph families, run the exact
//! coloring solver, build the explicit colorings, and run the verification
//! suites. Reports go to standard output as JSON; a human-readable summary
//! goes to standard error. Exit codes: 0 pass, 1 check failed, 2 usage
//! error, 3 solver timeout.

use std::io::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use drumgraph::coloring::{
    basic_coloring, extend_to_yk, four_coloring_reduced_drum, regular_edge_coloring,
    sg_n2_edge_coloring, two_coloring_reduced_drum, uk_minus_edge_coloring,
};
use drumgraph::criticality::{compare_all, is_critical_brute, predict_schrijver_edge};
use drumgraph::embedding::{embed_x, embed_y, embed_z, SignedEmbedding};
use drumgraph::error::Error;
use drumgraph::graph::LabeledGraph;
use drumgraph::io::{graph_to_dot, graph_to_json};
use drumgraph::quad::{mobius_ladder, q_graph, u_graph, UGraph, XGraph, YGraph, ZGraph};
use drumgraph::schrijver::{Schrijver, SubsetVertex};
use drumgraph::solver::{chromatic_number, exists_q_coloring, SolverConfig};
use drumgraph::verify::{self, Report};
use drumgraph::winding::{absolute_winding_number, winding_number, OrientedCycle, ThreeColoring};

#[derive(Parser)]
#[command(name = "drumgraph", version, about = "Schrijver graphs, drums, windings, critical edges and quadrangulations")]
struct Cli {
    /// Per-solver-query timeout in seconds (overrides DRUMGRAPH_TIMEOUT_SECS).
    #[arg(long, global = true)]
    timeout_secs: Option<u64>,
    /// Seed for randomized checks.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Kneser,
    Schrijver,
    Drum,
    #[value(name = "reduced_drum")]
    ReducedDrum,
    Mobius,
    L,
    U,
    X,
    Y,
    Z,
    Q,
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long, value_enum, ignore_case = true)]
    family: Family,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    h: Option<u32>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Construction {
    #[value(name = "two-drum")]
    TwoDrum,
    #[value(name = "four-drum")]
    FourDrum,
    Basic,
    #[value(name = "regular-edge")]
    RegularEdge,
    #[value(name = "sg2-edge")]
    Sg2Edge,
    #[value(name = "uk-minus")]
    UkMinus,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Iso,
    Chromatic,
    Winding,
    Critical,
    Quad,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a graph family member and print it to standard output.
    Generate {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Construct a graph family member and write it to a file.
    Export {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        output: std::path::PathBuf,
    },
    /// Exact chromatic number (or q-colorability with --q) of a family member.
    Chromatic {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        q: Option<u32>,
    },
    /// Build one of the explicit colorings and print it as JSON.
    ColorConstruct {
        #[arg(long, value_enum)]
        construction: Construction,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        h: Option<u32>,
        /// First endpoint subset, comma-separated elements (basic/regular-edge/sg2-edge).
        #[arg(long)]
        v: Option<String>,
        /// Second endpoint subset.
        #[arg(long)]
        w: Option<String>,
        /// Bottom-layer positions of the deleted extra edge (uk-minus).
        #[arg(long)]
        a: Option<u32>,
        #[arg(long)]
        b: Option<u32>,
        /// Also extend the gadget coloring to the full Klein-bottle subgraph.
        #[arg(long)]
        extend: bool,
    },
    /// Run a named verification suite.
    Verify {
        #[arg(long, value_enum, ignore_case = true)]
        suite: Suite,
        #[arg(long, value_enum, ignore_case = true)]
        family: Option<Family>,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        h: Option<u32>,
    },
    /// Edge criticality of Schrijver graphs: prediction, brute force, or both.
    Critical {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        /// A single edge as two vertex indices "a,b"; default sweeps all edges.
        #[arg(long)]
        edge: Option<String>,
        #[arg(long, conflicts_with_all = ["brute", "compare"])]
        predict: bool,
        #[arg(long, conflicts_with = "compare")]
        brute: bool,
        #[arg(long)]
        compare: bool,
    },
    /// Winding number of a coloring around a cycle of a family member.
    Winding {
        #[command(flatten)]
        family: FamilyArgs,
        /// Comma-separated vertex indices of the cycle, in orientation order.
        #[arg(long)]
        cycle: String,
        /// Coloring as an inline JSON map {"vertexIndex": color}.
        #[arg(long, conflicts_with = "coloring_file")]
        coloring: Option<String>,
        /// Path to a JSON file holding the coloring map.
        #[arg(long)]
        coloring_file: Option<std::path::PathBuf>,
    },
    /// Surface statistics (V/E/F, Euler characteristic, orientability, face
    /// histogram) of an embedded family member.
    Quad {
        #[command(flatten)]
        family: FamilyArgs,
        /// Fail (exit 1) unless the embedding matches the expected surface.
        #[arg(long)]
        verify: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let timeout = cli
        .timeout_secs
        .or_else(|| {
            std::env::var("DRUMGRAPH_TIMEOUT_SECS")
                .ok()
                .and_then(|s| s.parse().ok())
        })
        .unwrap_or(60);
    let config = SolverConfig::with_timeout_secs(timeout);
    let seed = cli.seed.unwrap_or(verify::DEFAULT_SEED);
    match run(cli.command, &config, seed) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Timeout(_) => ExitCode::from(3),
                Error::CheckFailed(_) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn require(opt: Option<u32>, name: &str) -> Result<u32, Error> {
    opt.ok_or_else(|| Error::InvalidParameter(format!("--{name} is required for this family")))
}

/// Builds the requested family member plus its serialization metadata.
fn build_family(args: &FamilyArgs) -> Result<(LabeledGraph, &'static str, Value), Error> {
    let (n, k, h) = (args.n, args.k, args.h);
    Ok(match args.family {
        Family::Kneser => {
            let (n, k) = (require(n, "n")?, require(k, "k")?);
            (drumgraph::schrijver::kneser(n, k)?, "kneser", json!({"n": n, "k": k}))
        }
        Family::Schrijver => {
            let (n, k) = (require(n, "n")?, require(k, "k")?);
            (drumgraph::schrijver::schrijver(n, k)?, "schrijver", json!({"n": n, "k": k}))
        }
        Family::Drum => {
            let (h, n) = (require(h, "h")?, require(n, "n")?);
            (drumgraph::drum::drum(h, n)?, "drum", json!({"h": h, "n": n}))
        }
        Family::ReducedDrum => {
            let (h, n) = (require(h, "h")?, require(n, "n")?);
            (drumgraph::drum::reduced_drum(h, n)?, "reduced_drum", json!({"h": h, "n": n}))
        }
        Family::Mobius => {
            let n = require(n, "n")?;
            (mobius_ladder(n)?, "mobius", json!({"n": n}))
        }
        Family::L => {
            let k = require(k, "k")?;
            (drumgraph::quad::ell(k)?, "L", json!({"k": k}))
        }
        Family::U => {
            let k = require(k, "k")?;
            (u_graph(k)?, "U", json!({"k": k}))
        }
        Family::X => {
            let (h, n) = (require(h, "h")?, require(n, "n")?);
            (drumgraph::quad::x_graph(h, n)?, "X", json!({"h": h, "n": n}))
        }
        Family::Y => {
            let k = require(k, "k")?;
            (drumgraph::quad::y_graph(k)?, "Y", json!({"k": k}))
        }
        Family::Z => {
            let k = require(k, "k")?;
            (drumgraph::quad::z_graph(k)?, "Z", json!({"k": k}))
        }
        Family::Q => (q_graph()?, "Q", json!({})),
    })
}

fn render(g: &LabeledGraph, name: &str, params: Value, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(&graph_to_json(g, name, params)).unwrap(),
        Format::Dot => graph_to_dot(g, name),
    }
}

fn parse_subset(n: u32, s: &str) -> Result<SubsetVertex, Error> {
    let elems: Vec<u32> = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("bad element {t:?}")))
        })
        .collect::<Result<_, _>>()?;
    SubsetVertex::new(n, &elems)
}

fn parse_indices(s: &str) -> Result<Vec<usize>, Error> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("bad index {t:?}")))
        })
        .collect()
}

fn emit_report(report: &Report) -> ExitCode {
    println!("{}", serde_json::to_string_pretty(report).unwrap());
    for check in &report.checks {
        eprintln!("{:ticks$} {:?}", check.name, check.status, ticks = 44);
    }
    if report.passed() {
        eprintln!("suite {}: pass", report.suite);
        ExitCode::SUCCESS
    } else if report.checks.iter().any(|c| c.status == verify::CheckStatus::Timeout) {
        eprintln!("suite {}: timeout", report.suite);
        ExitCode::from(3)
    } else {
        eprintln!("suite {}: FAIL", report.suite);
        ExitCode::from(1)
    }
}

fn run(command: Command, config: &SolverConfig, seed: u64) -> Result<ExitCode, Error> {
    match command {
        Command::Generate { family, format } => {
            let (g, name, params) = build_family(&family)?;
            println!("{}", render(&g, name, params, format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Export { family, format, output } => {
            let (g, name, params) = build_family(&family)?;
            let text = render(&g, name, params, format);
            let mut f = std::fs::File::create(&output)
                .map_err(|e| Error::InvalidParameter(format!("cannot write {output:?}: {e}")))?;
            f.write_all(text.as_bytes())
                .map_err(|e| Error::InvalidParameter(format!("write failed: {e}")))?;
            eprintln!("wrote {}", output.display());
            Ok(ExitCode::SUCCESS)
        }
        Command::Chromatic { family, q } => {
            let (g, name, params) = build_family(&family)?;
            let result = match q {
                Some(q) => {
                    let coloring = exists_q_coloring(&g, q, config)?;
                    json!({
                        "family": name, "params": params, "q": q,
                        "colorable": coloring.is_some(),
                        "coloring": coloring.map(|c| c.to_json()),
                    })
                }
                None => {
                    let chi = chromatic_number(&g, config)?;
                    let witness = exists_q_coloring(&g, chi, config)?
                        .expect("a chromatic-number witness must exist");
                    json!({
                        "family": name, "params": params,
                        "chromatic_number": chi,
                        "coloring": witness.to_json(),
                    })
                }
            };
            println!("{}", serde_json::to_string_pretty(&result).unwrap());
            Ok(ExitCode::SUCCESS)
        }
        Command::ColorConstruct { construction, n, k, h, v, w, a, b, extend } => {
            let need_vw = |n: u32| -> Result<(SubsetVertex, SubsetVertex), Error> {
                let v = parse_subset(
                    n,
                    v.as_deref()
                        .ok_or_else(|| Error::InvalidParameter("--v is required".into()))?,
                )?;
                let w = parse_subset(
                    n,
                    w.as_deref()
                        .ok_or_else(|| Error::InvalidParameter("--w is required".into()))?,
                )?;
                Ok((v, w))
            };
            let out = match construction {
                Construction::TwoDrum => {
                    let (h, n) = (require(h, "h")?, require(n, "n")?);
                    two_coloring_reduced_drum(h, n)?.to_json()
                }
                Construction::FourDrum => {
                    let (h, n) = (require(h, "h")?, require(n, "n")?);
                    four_coloring_reduced_drum(h, n)?.to_json()
                }
                Construction::Basic => {
                    let (n, k) = (require(n, "n")?, require(k, "k")?);
                    let sg = Schrijver::new(n, k)?;
                    let (v, w) = need_vw(n)?;
                    basic_coloring(&sg, &v, &w)?.to_json()
                }
                Construction::RegularEdge => {
                    let (n, k) = (require(n, "n")?, require(k, "k")?);
                    let sg = Schrijver::new(n, k)?;
                    let (v, w) = need_vw(n)?;
                    regular_edge_coloring(&sg, &v, &w)?.to_json()
                }
                Construction::Sg2Edge => {
                    let n = require(n, "n")?;
                    let sg = Schrijver::new(n, 2)?;
                    let (v, w) = need_vw(n)?;
                    sg_n2_edge_coloring(&sg, &v, &w)?.to_json()
                }
                Construction::UkMinus => {
                    let k = require(k, "k")?;
                    let (a, b) = (require(a, "a")?, require(b, "b")?);
                    let c = uk_minus_edge_coloring(k, a, b)?;
                    if extend {
                        let ext = extend_to_yk(k, &c)?;
                        json!({
                            "gadget": three_coloring_json(&c),
                            "extended": three_coloring_json(&ext),
                        })
                    } else {
                        three_coloring_json(&c)
                    }
                }
            };
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, family, n, k, h } => {
            let report = match suite {
                Suite::Iso => verify::iso_suite(require(k, "k")?)?,
                Suite::Chromatic => match family {
                    Some(Family::ReducedDrum) => verify::chromatic_reduced_drum_suite(
                        require(h, "h")?,
                        require(n, "n")?,
                        config,
                    )?,
                    Some(Family::Schrijver) => {
                        verify::schrijver_four_chromatic_suite(require(k, "k")?, config)?
                    }
                    Some(Family::X) => {
                        verify::chromatic_x_suite(require(h, "h")?, require(n, "n")?, config)?
                    }
                    _ => {
                        return Err(Error::InvalidParameter(
                            "verify chromatic needs --family reduced_drum, schrijver or x".into(),
                        ))
                    }
                },
                Suite::Winding => verify::winding_suite(seed)?,
                Suite::Critical => verify::critical_suite(require(n, "n")?, require(k, "k")?, config)?,
                Suite::Quad => match family {
                    Some(Family::Y) => verify::quad_suite("Y", require(k, "k")?, 0, 0)?,
                    Some(Family::Z) => verify::quad_suite("Z", require(k, "k")?, 0, 0)?,
                    Some(Family::X) => {
                        verify::quad_suite("X", 0, require(h, "h")?, require(n, "n")?)?
                    }
                    _ => {
                        return Err(Error::InvalidParameter(
                            "verify quad needs --family y, z or x".into(),
                        ))
                    }
                },
            };
            Ok(emit_report(&report))
        }
        Command::Critical { n, k, edge, predict, brute, compare } => {
            let sg = Schrijver::new(n, k)?;
            let mode_compare = compare || (!predict && !brute);
            if let Some(raw) = edge {
                let idx = parse_indices(&raw)?;
                if idx.len() != 2 {
                    return Err(Error::InvalidParameter("--edge wants two indices".into()));
                }
                let e = (idx[0], idx[1]);
                let mut verdict = predict_schrijver_edge(&sg, e)?;
                if brute || mode_compare {
                    verdict.brute = Some(is_critical_brute(&sg.graph, e, config)?);
                }
                println!("{}", serde_json::to_string_pretty(&json!([verdict])).unwrap());
                let mismatch = matches!(
                    (&verdict.predicted, verdict.brute),
                    (drumgraph::criticality::Prediction::Critical, Some(false))
                        | (drumgraph::criticality::Prediction::NonCritical, Some(true))
                );
                return Ok(if mismatch && mode_compare {
                    ExitCode::from(1)
                } else {
                    ExitCode::SUCCESS
                });
            }
            if predict {
                let verdicts: Vec<_> = sg
                    .graph
                    .edges()
                    .into_iter()
                    .map(|e| predict_schrijver_edge(&sg, e))
                    .collect::<Result<_, _>>()?;
                println!("{}", serde_json::to_string_pretty(&verdicts).unwrap());
                return Ok(ExitCode::SUCCESS);
            }
            let report = compare_all(n, k, config)?;
            println!("{}", serde_json::to_string_pretty(&report.verdicts).unwrap());
            eprintln!(
                "SG({n},{k}): chi = {}, {} edges, {} mismatches, {} timeouts",
                report.chromatic_number,
                report.verdicts.len(),
                report.mismatches.len(),
                report.timeouts.len()
            );
            if !report.timeouts.is_empty() {
                Ok(ExitCode::from(3))
            } else if mode_compare && !report.mismatches.is_empty() {
                Ok(ExitCode::from(1))
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
        Command::Winding { family, cycle, coloring, coloring_file } => {
            let (g, name, params) = build_family(&family)?;
            let indices = parse_indices(&cycle)?;
            let oriented = OrientedCycle::new(&g, indices)?;
            let raw = match (coloring, coloring_file) {
                (Some(inline), None) => inline,
                (None, Some(path)) => std::fs::read_to_string(&path)
                    .map_err(|e| Error::InvalidParameter(format!("cannot read {path:?}: {e}")))?,
                _ => {
                    return Err(Error::InvalidParameter(
                        "pass exactly one of --coloring or --coloring-file".into(),
                    ))
                }
            };
            let map: std::collections::HashMap<String, u8> = serde_json::from_str(&raw)
                .map_err(|e| Error::InvalidParameter(format!("bad coloring JSON: {e}")))?;
            let mut colors = vec![u8::MAX; g.vertex_count()];
            for (key, c) in map {
                let v: usize = key
                    .parse()
                    .map_err(|_| Error::InvalidParameter(format!("bad vertex index {key:?}")))?;
                if v >= colors.len() {
                    return Err(Error::InvalidParameter(format!("vertex {v} out of range")));
                }
                colors[v] = c;
            }
            if colors.contains(&u8::MAX) {
                return Err(Error::InvalidParameter("the coloring must be total".into()));
            }
            let f = ThreeColoring::new(colors)?;
            let signed = winding_number(&f, &oriented)?;
            let result = json!({
                "family": name, "params": params,
                "cycle": oriented.vertices(),
                "winding": signed,
                "absolute_winding": absolute_winding_number(&f, &oriented)?,
            });
            println!("{}", serde_json::to_string_pretty(&result).unwrap());
            Ok(ExitCode::SUCCESS)
        }
        Command::Quad { family, verify: check } => {
            let (stats, ok) = quad_stats(&family)?;
            println!("{}", serde_json::to_string_pretty(&stats).unwrap());
            if check && !ok {
                eprintln!("quad verification FAILED");
                return Ok(ExitCode::from(1));
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn three_coloring_json(c: &ThreeColoring) -> Value {
    let map: serde_json::Map<String, Value> = c
        .colors()
        .iter()
        .enumerate()
        .map(|(v, &col)| (v.to_string(), json!(col.to_string())))
        .collect();
    json!({ "colors": map })
}

/// Graph plus embedding statistics for the quad subcommand; the boolean says
/// whether the embedding matched the expected surface.
fn quad_stats(args: &FamilyArgs) -> Result<(Value, bool), Error> {
    let (embedding, graph, name, params, expected_chi): (
        Option<SignedEmbedding>,
        LabeledGraph,
        &str,
        Value,
        Option<i64>,
    ) = match args.family {
        Family::Y => {
            let k = require(args.k, "k")?;
            let y = YGraph::new(k)?;
            let emb = embed_y(&y)?;
            (Some(emb), y.graph.clone(), "Y", json!({"k": k}), Some(0))
        }
        Family::Z => {
            let k = require(args.k, "k")?;
            let z = ZGraph::new(k)?;
            let emb = embed_z(&z)?;
            (Some(emb), z.graph.clone(), "Z", json!({"k": k}), Some(1))
        }
        Family::X => {
            let (h, n) = (require(args.h, "h")?, require(args.n, "n")?);
            let x = XGraph::new(h, n)?;
            let emb = embed_x(&x)?;
            (Some(emb), x.graph.clone(), "X", json!({"h": h, "n": n}), Some(0))
        }
        Family::U => {
            let k = require(args.k, "k")?;
            let u = UGraph::new(k)?;
            (None, u.graph.clone(), "U", json!({"k": k}), None)
        }
        Family::Q => (None, q_graph()?, "Q", json!({}), None),
        _ => {
            return Err(Error::InvalidParameter(
                "quad supports families y, z, x, u and q".into(),
            ))
        }
    };
    let (v, e) = (graph.vertex_count(), graph.edge_count());
    match embedding {
        None => Ok((
            json!({
                "family": name, "params": params,
                "V": v, "E": e,
                "embedding": Value::Null,
            }),
            true,
        )),
        Some(emb) => {
            let faces = emb.trace_faces()?;
            let chi = v as i64 - e as i64 + faces.len() as i64;
            let orientable = emb.is_orientable();
            let quadrangulation = faces.iter().all(|f| f.len() == 4);
            let histogram = emb.face_histogram()?;
            let ok = Some(chi) == expected_chi && !orientable && quadrangulation;
            Ok((
                json!({
                    "family": name, "params": params,
                    "V": v, "E": e, "F": faces.len(),
                    "euler_characteristic": chi,
                    "orientable": orientable,
                    "quadrangulation": quadrangulation,
                    "face_histogram": histogram,
                    "embedding": emb.to_json(),
                }),
                ok,
            ))
        }
    }
}
