use std::fs;
use std::io::{self, BufReader};

use curvex::construct::{
    algorithm1_embed_with, attach_pendants, basket_jailbreak, basket_potential, jailbreak_basket_index,
    realize_rational_index_with, Composition, EgyptianStrategy, EmbedOptions, MergePolicy, Placement,
    RealizeOptions,
};
use curvex::enumeration::{census, enumerate_connected, gnp_experiment, scan_graph6};
use curvex::graph::{parse_graph6, serialize_graph6, ConstructionTrace, Family};
use curvex::index::{
    curvature_index, index_via_pseudoinverse, is_distance_exceptional, modified_index,
    steinerberger_curvature, verify_families, wiener_index, DxCertificate, IndexValue, Potential,
};
use curvex::linalg::{format_rat, parse_rat, rat_to_f64, Rat};
use curvex::{Error, Graph};
use serde_json::{json, Map, Value};

use crate::{Cli, Command, CompositionArg, EgyptianArg, GraphArgs, MergeArg};

pub enum Failure {
    Domain(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Domain(e.into())
    }
}

type Outcome = Result<String, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn need(v: Option<usize>, flag: &str, family: &str) -> Result<usize, Failure> {
    v.ok_or_else(|| usage(format!("family `{family}` needs --{flag}")))
}

fn load_graph(a: &GraphArgs) -> Result<Graph, Failure> {
    if let Some(s) = &a.source.graph6 {
        return Ok(parse_graph6(s)?);
    }
    let name = a.source.family.as_deref().expect("clap enforces one source");
    let family = match name {
        "path" => Family::Path(need(a.n, "n", name)?),
        "cycle" => Family::Cycle(need(a.n, "n", name)?),
        "complete" => Family::Complete(need(a.n, "n", name)?),
        "empty" => Family::Empty(need(a.n, "n", name)?),
        "multipartite" => {
            if a.parts.is_empty() {
                return Err(usage("family `multipartite` needs --parts"));
            }
            Family::CompleteMultipartite(a.parts.clone())
        }
        "hypercube" => Family::Hypercube(need(a.d, "d", name)?),
        "grid" => Family::Grid(need(a.n, "n", name)?, need(a.m, "m", name)?),
        "torus" => Family::Torus {
            n: need(a.n, "n", name)?,
            d: need(a.d, "d", name)?,
        },
        "basket" => Family::Basket(need(a.k, "k", name)?),
        other => return Err(usage(format!("unknown family `{other}`"))),
    };
    Ok(family.build()?)
}

fn rat(r: &Rat) -> Value {
    Value::String(format_rat(r))
}

fn rats(v: &[Rat]) -> Value {
    Value::Array(v.iter().map(rat).collect())
}

fn index(v: &IndexValue) -> Value {
    Value::String(v.to_string())
}

fn approx(v: &IndexValue) -> Value {
    match v {
        IndexValue::Finite(r) => json!(rat_to_f64(r)),
        IndexValue::Infinite => json!("inf"),
    }
}

fn render(v: Value) -> Outcome {
    Ok(v.to_string())
}

fn object(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => unreachable!("json! object literal"),
    }
}

/// The certificate schema shared by `index`, `realize` and friends.
fn certificate(value: &IndexValue, potential: Option<&Potential>) -> Map<String, Value> {
    object(json!({
        "index": index(value),
        "dx": value.is_zero(),
        "potential": potential.map_or(Value::Null, |p| rats(p.x())),
        "constant": potential.map_or(Value::Null, |p| rat(p.constant())),
    }))
}

fn describe(g: &Graph) -> Map<String, Value> {
    object(json!({
        "graph6": serialize_graph6(g),
        "n": g.n(),
        "edges": g.edge_count(),
    }))
}

fn merged(parts: Vec<Map<String, Value>>) -> Value {
    Value::Object(parts.into_iter().flatten().collect())
}

fn trace_value(t: &ConstructionTrace) -> Value {
    serde_json::to_value(&t.steps).expect("trace serializes")
}

fn strategy(e: EgyptianArg) -> EgyptianStrategy {
    match e {
        EgyptianArg::Greedy => EgyptianStrategy::Greedy,
        EgyptianArg::Compact => EgyptianStrategy::Compact,
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let approx_on = cli.approx;
    match &cli.command {
        Command::Index(a) => {
            let g = load_graph(a)?;
            let (value, potential) = curvature_index(&g)?;
            let mut extra = object(json!({
                "modified_index": index(&modified_index(&g)),
                "wiener": wiener_index(&g)?,
            }));
            if approx_on {
                extra.insert("index_approx".into(), approx(&value));
            }
            render(merged(vec![
                describe(&g),
                certificate(&value, potential.as_ref()),
                extra,
            ]))
        }
        Command::DxCheck(a) => {
            let g = load_graph(a)?;
            let v = is_distance_exceptional(&g)?;
            let cert = match &v.certificate {
                DxCertificate::Kernel { potential } => {
                    json!({ "kind": "kernel", "vector": rats(potential.x()) })
                }
                DxCertificate::Potential { potential } => json!({
                    "kind": "potential",
                    "vector": rats(potential.x()),
                    "constant": rat(potential.constant()),
                }),
                DxCertificate::InfiniteIndex => json!({ "kind": "infinite_index" }),
            };
            let mut out = object(json!({ "dx": v.is_dx, "index": index(&v.index), "certificate": cert }));
            if approx_on {
                out.insert("index_approx".into(), approx(&v.index));
            }
            render(merged(vec![describe(&g), out]))
        }
        Command::Curvature(a) => {
            let g = load_graph(a)?;
            let kappa = steinerberger_curvature(&g)?;
            let via = match index_via_pseudoinverse(&g) {
                Ok(v) => index(&v),
                Err(Error::DistanceExceptional) => Value::Null,
                Err(e) => return Err(e.into()),
            };
            let mut out = object(json!({
                "dx": kappa.is_none(),
                "kappa": kappa.as_deref().map_or(Value::Null, rats),
                "index_via_pseudoinverse": via,
            }));
            if approx_on {
                let k = kappa.as_deref().map_or(Value::Null, |k| {
                    Value::Array(k.iter().map(|r| json!(rat_to_f64(r))).collect())
                });
                out.insert("kappa_approx".into(), k);
            }
            render(merged(vec![describe(&g), out]))
        }
        Command::Embed {
            graph,
            merge_vertex,
            seed,
            egyptian,
            trace_out,
        } => {
            let merge = match (merge_vertex, seed) {
                (MergeArg::First, _) => MergePolicy::First,
                (MergeArg::Spread, _) => MergePolicy::Spread,
                (MergeArg::Random, Some(s)) => MergePolicy::Random { seed: *s },
                (MergeArg::Random, None) => return Err(usage("--merge-vertex random needs --seed")),
            };
            let g = load_graph(graph)?;
            let opts = EmbedOptions {
                merge,
                strategy: strategy(*egyptian),
            };
            let r = algorithm1_embed_with(&g, &opts)?;
            if let Some(path) = trace_out {
                fs::write(path, r.trace.to_jsonl())?;
            }
            let value = IndexValue::Finite(r.potential.constant().clone());
            let out = object(json!({
                "joined": r.joined,
                "map": r.map,
                "induced": true,
                "isometric": r.embedding.isometric,
                "trace": trace_value(&r.trace),
            }));
            render(merged(vec![
                describe(&r.graph),
                certificate(&value, Some(&r.potential)),
                out,
            ]))
        }
        Command::Replay { trace } => {
            let text = fs::read_to_string(trace)?;
            let t = ConstructionTrace::from_jsonl(&text)?;
            let g = t.replay()?;
            let (value, _) = curvature_index(&g)?;
            let out = object(json!({
                "recorded_index": index(t.final_index()),
                "index": index(&value),
                "consistent": &value == t.final_index(),
                "steps": t.steps.len(),
            }));
            render(merged(vec![describe(&g), out]))
        }
        Command::Realize {
            q,
            egyptian,
            composition,
        } => {
            let q = parse_rat(q)?;
            let opts = RealizeOptions {
                strategy: strategy(*egyptian),
                composition: match composition {
                    CompositionArg::Coalescence => Composition::Coalescence,
                    CompositionArg::Product => Composition::Product,
                },
            };
            let r = realize_rational_index_with(&q, &opts)?;
            let value = IndexValue::Finite(r.potential.constant().clone());
            let mut out = object(json!({ "q": rat(&q), "trace": trace_value(&r.trace) }));
            if approx_on {
                out.insert("index_approx".into(), approx(&value));
            }
            render(merged(vec![
                describe(&r.graph),
                certificate(&value, Some(&r.potential)),
                out,
            ]))
        }
        Command::Jailbreak {
            j,
            seed,
            pendants,
            placement,
        } => {
            let s = jailbreak_basket_index(*j)?;
            let place = match (placement, seed) {
                (Some(p), _) => Placement::Explicit(p.clone()),
                (None, Some(seed)) => Placement::Random { seed: *seed },
                (None, None) => return Err(usage("jailbreak needs --seed or --placement")),
            };
            let r = match pendants {
                None => basket_jailbreak(*j, &place)?,
                Some(count) => {
                    let k = 2 * j + 1;
                    let b = basket_potential(k)?;
                    attach_pendants(&Family::Basket(k).build()?, &b.potential, *count, &place)?
                }
            };
            let value = r.index();
            let out = object(json!({
                "j": j,
                "basket_index": s,
                "pendants": r.placements.len(),
                "placements": r.placements,
            }));
            render(merged(vec![
                describe(&r.graph),
                certificate(&value, Some(&r.potential)),
                out,
            ]))
        }
        Command::Scan { input, jobs, csv } => {
            let report = if input == "-" {
                scan_graph6(io::stdin().lock(), *jobs)?
            } else {
                let f = fs::File::open(input)?;
                scan_graph6(BufReader::new(f), *jobs)?
            };
            if let Some(path) = csv {
                fs::write(path, report.histogram_csv())?;
            }
            render(serde_json::to_value(&report).expect("report serializes"))
        }
        Command::Enumerate {
            n,
            census: do_census,
            jobs,
        } => {
            let graphs = enumerate_connected(*n)?;
            if *do_census {
                let report = census(&graphs, *jobs)?;
                return render(serde_json::to_value(&report).expect("report serializes"));
            }
            let list: Vec<String> = graphs.iter().map(serialize_graph6).collect();
            render(json!({ "n": n, "count": list.len(), "graphs": list }))
        }
        Command::Gnp {
            n,
            p,
            trials,
            seed,
            jobs,
        } => {
            let p = parse_rat(p)?;
            let sample = gnp_experiment(*n, &p, *trials, *seed, *jobs)?;
            render(serde_json::to_value(&sample).expect("sample serializes"))
        }
        Command::VerifyFamilies { kmax, seed } => {
            let report = verify_families(*kmax, *seed)?;
            if !report.all_pass() {
                return Err(Error::CertificateViolation(format!(
                    "{} family formula(s) disagree with direct computation",
                    report.failures
                ))
                .into());
            }
            render(json!({
                "checks": report.checks.len(),
                "failures": report.failures,
                "all_pass": true,
                "results": report.checks,
            }))
        }
        Command::Dot { graph, raw } => {
            let g = load_graph(graph)?;
            let dot = g.to_dot();
            if *raw {
                Ok(dot.trim_end().to_string())
            } else {
                render(json!({ "dot": dot }))
            }
        }
    }
}
