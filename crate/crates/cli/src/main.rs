mod args;
mod input;
mod output;

use std::fs;
use std::process::ExitCode;

use clap::Parser;
use serde_json::{json, Map, Value};

use rigikit::catalog::{self, FIXED_NAMES};
use rigikit::constructions;
use rigikit::enumerate::{count, enumerate, EnumerationFilter, Filter};
use rigikit::field::generic_rank;
use rigikit::graph::encode_graph6;
use rigikit::rc;
use rigikit::verify::{self, BoundKind, VerificationReport};
use rigikit::{Graph, RigidityOracle};

use args::{ChainInput, Claim, Cli, Command, Common, FilterKind, GraphDim, Operation, PairingKind};

/// Why a run did not succeed.
pub enum Failure {
    /// Bad flags or input; exit code 2.
    Usage(String),
    /// A verification found violations; exit code 1. Carries the record to print.
    Violations(Map<String, Value>),
}

impl From<rigikit::Error> for Failure {
    fn from(e: rigikit::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Run = Result<Map<String, Value>, Failure>;

fn oracle(g: &GraphDim, seed: u64) -> Result<RigidityOracle, Failure> {
    Ok(RigidityOracle::new(input::load(&g.input)?, g.dim, seed)?)
}

fn record(pairs: Value) -> Map<String, Value> {
    match pairs {
        Value::Object(m) => m,
        _ => unreachable!("records are objects"),
    }
}

fn edge_list(edges: &[(usize, usize)]) -> Value {
    edges.iter().map(|&(u, v)| json!([u, v])).collect()
}

fn rc_values(o: &RigidityOracle, vertex: Option<usize>, samples: Option<usize>, star: bool, seed: u64) -> Run {
    let vertices: Vec<usize> = match vertex {
        Some(v) => vec![v],
        None => (0..o.graph().n()).collect(),
    };
    let mut values = Vec::new();
    for &v in &vertices {
        let entry = match samples {
            None => {
                let exact = if star { rc::rc_star_exact(o, v)? } else { rc::rc_exact(o, v)? };
                json!({ "vertex": v, "value": exact, "approx": exact.to_f64() })
            }
            Some(m) => {
                let est = if star { rc::rc_star_monte_carlo(o, v, m, seed)? } else { rc::rc_monte_carlo(o, v, m, seed)? };
                json!({ "vertex": v, "value": est.mean, "approx": est.mean.to_f64(), "std_error": est.std_error, "samples": m })
            }
        };
        values.push(entry);
    }
    let mut out = record(json!({
        "quantity": if star { "rcstar" } else { "rc" },
        "dim": o.dim(),
        "seed": seed,
    }));
    if vertex.is_some() {
        let one = values.pop().expect("one vertex");
        for (k, v) in one.as_object().expect("object").clone() {
            out.insert(k, v);
        }
    } else {
        if samples.is_none() {
            let mut total = rc::ExactRational::zero();
            for v in &vertices {
                total = total + if star { rc::rc_star_exact(o, *v)? } else { rc::rc_exact(o, *v)? };
            }
            out.insert("sum".into(), json!(total));
            out.insert("rank".into(), json!(o.rank()));
        }
        out.insert("values".into(), Value::Array(values));
    }
    Ok(out)
}

fn parse_pairs(items: &[String]) -> Result<Vec<(usize, usize)>, Failure> {
    items
        .iter()
        .map(|s| {
            let (a, b) = s.split_once('-').ok_or_else(|| Failure::Usage(format!("pair `{s}` is not of the form a-b")))?;
            let num = |t: &str| t.trim().parse::<usize>().map_err(|e| Failure::Usage(format!("pair `{s}`: {e}")));
            Ok((num(a)?, num(b)?))
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn construct(g: &Graph, op: Operation, d: usize, set: &[usize], edge: &[usize], vertex: Option<usize>, nu: &[usize], nv: &[usize], pairs: &[String]) -> Result<Graph, Failure> {
    let need_vertex = || vertex.ok_or_else(|| Failure::Usage("--vertex is required for splits".into()));
    Ok(match op {
        Operation::ZeroExt => constructions::zero_extension(g, d, set)?,
        Operation::OneExt => {
            let [u, w] = edge else {
                return Err(Failure::Usage("--edge must be two vertices u,w".into()));
            };
            constructions::one_extension(g, d, (*u, *w), set)?
        }
        Operation::VertexSplit => constructions::vertex_split(g, d, need_vertex()?, nu, nv)?,
        Operation::SpiderSplit => constructions::spider_split(g, d, need_vertex()?, nu, nv)?,
        Operation::Cone => g.cone(),
        Operation::CycleAttach => constructions::cycle_attach(g, &parse_pairs(pairs)?)?,
    })
}

fn filter_of(kind: FilterKind, bound: i64) -> Result<Filter, Failure> {
    let unsigned = || usize::try_from(bound).map_err(|_| Failure::Usage(format!("--bound {bound} must be non-negative")));
    Ok(match kind {
        FilterKind::All => Filter::All,
        FilterKind::MinDegree => Filter::MinDegree(unsigned()?),
        FilterKind::Eta => Filter::EtaAtLeast(bound),
        FilterKind::ComplementEdgeSum => Filter::ComplementEdgeDegreeSumAtMost(unsigned()?),
    })
}

fn need(value: Option<usize>, flag: &str, claim: Claim) -> Result<usize, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("--{flag} is required for {claim:?}")))
}

fn run_verify(claim: Claim, n: Option<usize>, dim: Option<usize>, kind: Option<&str>, instances: usize, seed: u64) -> Result<VerificationReport, Failure> {
    use Claim::*;
    let n_ = || need(n, "n", claim);
    let d_ = || need(dim, "dim", claim);
    Ok(match claim {
        R3 => verify::verify_theorem_r3(n_()?, seed)?,
        R2 => verify::verify_theorem_r2(n_()?, seed)?,
        Global2d => verify::verify_global_2d(n_()?, seed)?,
        Ecount => verify::verify_ecount(n_()?, d_()?)?,
        DegreeSum => {
            let kind: BoundKind = kind.ok_or_else(|| Failure::Usage("--kind is required for degree-sum".into()))?.parse()?;
            verify::verify_degree_sum(n_()?, d_()?, kind, seed)?
        }
        SimplicialVertex => verify::verify_simplicial_vertex(n_()?, d_()?, seed)?,
        Minlarge => verify::verify_minlarge(n_()?, d_()?, seed)?,
        Minlarge3 => verify::verify_minlarge3(n_()?, seed)?,
        Claim2 => verify::verify_claim2(n_()?, seed)?,
        SmallCircuits => verify::verify_small_circuits(n_()?, seed)?,
        Easybound => verify::verify_easybound(n_()?, d_()?, seed)?,
        S1s2s3 => verify::verify_s1s2s3(n_()?, d_()?, seed)?,
        RcSum => verify::verify_rc_sum(n_()?, d_()?, seed)?,
        RcBounds => verify::verify_rc_bounds(n_()?, d_()?, seed)?,
        Coning => verify::verify_coning(n_()?, d_()?, seed)?,
        Preservation => verify::verify_preservation(instances, seed)?,
        CycleConstruction => verify::verify_cycle_construction(instances, seed)?,
    })
}

fn write_witnesses(common: &Common, lines: &[String]) -> Result<(), Failure> {
    if let Some(path) = &common.witness_out {
        let mut text = lines.join("\n");
        if !text.is_empty() {
            text.push('\n');
        }
        fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn chain_graph(input: &ChainInput, seed: u64) -> Result<Graph, Failure> {
    match input.n {
        Some(n) => Ok(catalog::gnp_graph(n, 0.5, seed)?),
        None => input::load(&input.graph_input()),
    }
}

fn run(command: Command, common: &Common) -> Run {
    let seed = common.seed;
    Ok(match command {
        Command::Rank { g, trials } => {
            let graph = input::load(&g.input)?;
            if g.dim == 0 {
                return Err(Failure::Usage("--dim must be at least 1".into()));
            }
            let rank = generic_rank(&graph, g.dim, trials, seed);
            let rigid_rank = rigikit::field::rigid_rank(graph.n(), g.dim);
            record(json!({
                "n": graph.n(), "edges": graph.edge_count(), "dim": g.dim, "rank": rank,
                "rigid_rank": rigid_rank, "trials": trials, "seed": seed,
            }))
        }
        Command::Rigid { g } => {
            let o = oracle(&g, seed)?;
            record(json!({ "rigid": o.is_rigid(), "dof": o.dof(), "dim": g.dim, "seed": seed }))
        }
        Command::Dof { g } => {
            let o = oracle(&g, seed)?;
            record(json!({ "dof": o.dof(), "rank": o.rank(), "dim": g.dim, "seed": seed }))
        }
        Command::Closure { g } => {
            let o = oracle(&g, seed)?;
            let closure = o.closure();
            let added: Vec<(usize, usize)> = o.graph().non_edges().into_iter().filter(|&(u, v)| closure.has_edge(u, v)).collect();
            record(json!({
                "closure": encode_graph6(&closure), "closed": added.is_empty(),
                "added": edge_list(&added), "dim": g.dim, "seed": seed,
            }))
        }
        Command::Linked { g, pair } => {
            let o = oracle(&g, seed)?;
            record(json!({ "linked": o.is_linked(pair.u, pair.v)?, "u": pair.u, "v": pair.v, "dim": g.dim, "seed": seed }))
        }
        Command::Bridge { g, pair } => {
            let o = oracle(&g, seed)?;
            record(json!({ "bridge": o.is_bridge(pair.u, pair.v)?, "u": pair.u, "v": pair.v, "dim": g.dim, "seed": seed }))
        }
        Command::Circuit { g, u, v } => {
            let o = oracle(&g, seed)?;
            let circuit = match (u, v) {
                (Some(u), Some(v)) => Some(o.fundamental_circuit(u, v)?),
                _ => o.find_circuit(),
            };
            record(json!({
                "independent": o.is_independent(),
                "circuit": circuit.as_deref().map(edge_list),
                "dim": g.dim, "seed": seed,
            }))
        }
        Command::Rup { g } => {
            let o = oracle(&g, seed)?;
            record(json!({ "rup": o.rup(), "dim": g.dim, "seed": seed }))
        }
        Command::Rc { g, vertex, samples } => rc_values(&oracle(&g, seed)?, vertex, samples, false, seed)?,
        Command::Rcstar { g, vertex, samples, bounds } => {
            let o = oracle(&g, seed)?;
            let mut out = rc_values(&o, vertex, samples, true, seed)?;
            if bounds {
                let vertices: Vec<usize> = vertex.map_or_else(|| (0..o.graph().n()).collect(), |v| vec![v]);
                let mut checks = Vec::new();
                for v in vertices {
                    checks.push(rc::check_rc_tbound(&o, v)?);
                    checks.push(rc::check_rc_kfree(&o, v)?);
                    checks.push(rc::check_rc_geq_d(&o, v)?);
                }
                out.insert("bounds".into(), serde_json::to_value(checks).expect("serializable"));
            }
            out
        }
        Command::Construct { input, op, dim, set, edge, vertex, nu, nv, pairs } => {
            let g = input::load(&input)?;
            let out = construct(&g, op, dim, &set, &edge, vertex, &nu, &nv, &pairs)?;
            record(json!({ "graph6": encode_graph6(&out), "n": out.n(), "edges": out.edge_count() }))
        }
        Command::Catalog { name: None } => record(json!({ "names": FIXED_NAMES })),
        Command::Catalog { name: Some(name) } => {
            let entry = catalog::catalog(&name)?;
            let mismatches: Vec<String> = entry.verify(seed).iter().map(ToString::to_string).collect();
            record(json!({
                "name": entry.name, "graph6": encode_graph6(&entry.graph),
                "expected": entry.expected, "mismatches": mismatches, "seed": seed,
            }))
        }
        Command::Enumerate { n, filter, bound, count: only_count } => {
            let f = EnumerationFilter::new(n, filter_of(filter, bound)?);
            if only_count {
                record(json!({ "n": n, "filter": f.filter, "count": count(&f)? }))
            } else {
                let graphs: Vec<String> = enumerate(&f)?.iter().map(encode_graph6).collect();
                write_witnesses(common, &graphs)?;
                record(json!({ "n": n, "filter": f.filter, "count": graphs.len(), "graphs": graphs }))
            }
        }
        Command::ComputeF { n, dim } | Command::ComputeG { n, dim } => {
            let is_f = matches!(command, Command::ComputeF { .. });
            eprintln!("computing {}({n},{dim})", if is_f { "f" } else { "g" });
            let t = if is_f { verify::compute_f(n, dim, seed)? } else { verify::compute_g(n, dim, seed)? };
            write_witnesses(common, t.witness.as_slice())?;
            output::to_record(&t)
        }
        Command::Verify { claim, n, dim, kind, instances } => {
            eprintln!("verifying {claim:?}");
            let mut report = run_verify(claim, n, dim, kind.as_deref(), instances, seed)?;
            eprintln!("examined {} graphs, {} violations", report.counts.examined, report.counts.violations);
            if !common.timings {
                report.millis = None;
            }
            let mut lines = report.violations.clone();
            lines.extend(report.witnesses.iter().cloned());
            write_witnesses(common, &lines)?;
            let out = output::to_record(&report);
            if !report.pass {
                return Err(Failure::Violations(out));
            }
            out
        }
        Command::RandomExperiment { n, p, dim, samples } => {
            eprintln!("sampling {samples} graphs from G({n},{p})");
            output::to_record(&verify::random_rigidity_experiment(n, p, dim, samples, seed)?)
        }
        Command::ChainCheck { input, dim, pairing, attempts } => {
            let g = chain_graph(&input, seed)?;
            let chosen = match pairing {
                PairingKind::Default => Some(verify::default_pairing(g.n())),
                PairingKind::Greedy => Some(verify::greedy_pairing(&g)?),
                PairingKind::Search => verify::search_pairing(&g, dim, attempts, seed)?,
            };
            // A failed search still reports the default chain.
            let used = chosen.clone().unwrap_or_else(|| verify::default_pairing(g.n()));
            let report = verify::verify_contraction_chain(&g, &used, dim, seed)?;
            let mut out = output::to_record(&report);
            out.insert("graph6".into(), json!(encode_graph6(&g)));
            out.insert("pairing".into(), edge_list(&used));
            out.insert("pairing_found".into(), json!(chosen.is_some()));
            out
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.common.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let format = cli.common.format;
    match run(cli.command, &cli.common) {
        Ok(out) => {
            print!("{}", output::render(&out, format));
            ExitCode::SUCCESS
        }
        Err(Failure::Violations(out)) => {
            print!("{}", output::render(&out, format));
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
