mod generate;
mod report;

use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use axicover::hypergraph::{HypergraphDoc, ParseOptions};
use axicover::labeling::binomial;
use axicover::projection::{planar_hypergraph, PlanarInstance};
use axicover::reduction::{max_matching_of_points, GadgetInstance};
use axicover::representation::{fixed_labeling, PointSetDoc, Violation};
use axicover::separability::AxisComponents;
use axicover::svg::emit_representation_svg;
use axicover::{
    brute_force_max_independent_set, brute_force_max_matching, build_matching_instance, emit_svg,
    hypergraph_from_points, is_edge_separable, is_vertex_separable, matching_target, project_to_plane,
    recognize, verify_gadget_instance, verify_representation, Error, LabelingMode,
    PartitionedHypergraph, Recognition, Representation, SimpleGraph,
};

use report::{digest, Artifact, Outcome, RunReport};

const EXIT_OK: i32 = 0;
const EXIT_NEGATIVE: i32 = 1;
const EXIT_INPUT: i32 = 2;
const EXIT_CAP: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "axicover", version, about = "Axis-aligned point-subspace cover representations of hypergraphs")]
struct Cli {
    /// Print a machine-readable run report on stdout.
    #[arg(long, global = true)]
    json: bool,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true)]
    d: Option<usize>,
    #[arg(long, global = true)]
    ell: Option<usize>,
    #[arg(long, global = true, default_value = "fixed")]
    labeling: LabelingMode,
    /// Write the artifact here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Drop vertices that lie in no hyperedge instead of rejecting the input.
    #[arg(long, global = true)]
    prune_isolated: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide representability; emit a representation or a witness.
    Recognize { input: PathBuf },
    /// Build the incidence hypergraph of a point set.
    FromPoints { input: PathBuf },
    /// Check a representation against a hypergraph.
    Verify { hypergraph: PathBuf, representation: PathBuf },
    /// Build the matching instance of a simple graph.
    ReduceIs { input: PathBuf },
    /// Exact maximum matching of a point set, gadget instance or hypergraph.
    MatchBrute { input: PathBuf },
    /// Exact independence number of a simple graph.
    IsBrute { input: PathBuf },
    /// Project a line representation to a planar instance.
    Project {
        /// Point set or hypergraph document.
        input: PathBuf,
        /// Representation of the hypergraph; recognized when omitted.
        representation: Option<PathBuf>,
    },
    /// Render a planar instance or a 2D point set.
    Svg { input: PathBuf },
    /// Generate a seeded random instance.
    GenRandom {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Summarize a hypergraph.
    Stats { input: PathBuf },
}

#[derive(Subcommand, Debug)]
enum GenKind {
    /// Distinct points in [0, range)^d (uses --d, --ell).
    Points {
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, default_value_t = 4)]
        range: i64,
    },
    /// Random k-partite k-uniform hypergraph.
    Hypergraph {
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, default_value_t = 8)]
        edges: usize,
        #[arg(long, default_value_t = 3)]
        part_size: usize,
    },
    /// Random bipartite graph as a 2-partite hypergraph.
    Bipartite {
        #[arg(long, default_value_t = 4)]
        left: usize,
        #[arg(long, default_value_t = 4)]
        right: usize,
        #[arg(long, default_value_t = 6)]
        edges: usize,
    },
    /// Random simple graph.
    Graph {
        #[arg(long, default_value_t = 5)]
        n: usize,
        #[arg(long, default_value_t = 5)]
        edges: usize,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::SizeCap { .. } | Error::RetriesExhausted(_) => EXIT_CAP,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::from(Error::from(e))
    }
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: message.into(),
    }
}

struct Done {
    outcome: Outcome,
    artifact: Artifact,
    summary: String,
    details: Value,
    exit: i32,
}

impl Done {
    fn ok(artifact: Artifact, summary: String, details: Value) -> Self {
        Done {
            outcome: Outcome::Completed,
            artifact,
            summary,
            details,
            exit: EXIT_OK,
        }
    }
}

struct Inputs {
    digest_parts: Vec<Vec<u8>>,
}

impl Inputs {
    fn read(&mut self, path: &Path) -> Result<String, Failure> {
        let mut text = String::new();
        if path.as_os_str() == "-" {
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| input_error(format!("stdin: {e}")))?;
        } else {
            text = fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
        }
        self.digest_parts.push(text.as_bytes().to_vec());
        Ok(text)
    }
}

pub fn run() -> i32 {
    let cli = Cli::parse();
    let started = Instant::now();
    let name = command_name(&cli.command);
    let mut inputs = Inputs {
        digest_parts: Vec::new(),
    };
    let result = dispatch(&cli, &mut inputs);
    let elapsed = started.elapsed().as_secs_f64() * 1000.0;
    let digest = if inputs.digest_parts.is_empty() {
        None
    } else {
        let parts: Vec<&[u8]> = inputs.digest_parts.iter().map(|p| p.as_slice()).collect();
        Some(digest(&parts))
    };
    match result {
        Ok(done) => {
            if let Some(path) = &cli.output {
                if let Err(e) = fs::write(path, done.artifact.bytes()) {
                    return fail(&cli, name, digest, elapsed, input_error(format!("{}: {e}", path.display())));
                }
            }
            let mut stdout = std::io::stdout().lock();
            if cli.json {
                let report = RunReport::new(name, digest, done.outcome, done.details, elapsed)
                    .with_artifact(&done.artifact, cli.output.as_deref());
                let _ = writeln!(stdout, "{}", report.to_json());
            } else {
                if cli.output.is_none() {
                    let _ = write!(stdout, "{}", done.artifact.bytes());
                }
                eprintln!("{name}: {}", done.summary);
            }
            done.exit
        }
        Err(failure) => fail(&cli, name, digest, elapsed, failure),
    }
}

fn fail(cli: &Cli, name: &str, digest: Option<String>, elapsed: f64, failure: Failure) -> i32 {
    if cli.json {
        let report = RunReport::new(name, digest, Outcome::Failed, Value::Null, elapsed).with_error(failure.message.clone());
        println!("{}", report.to_json());
    }
    eprintln!("{name}: error: {}", failure.message);
    failure.code
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Recognize { .. } => "recognize",
        Command::FromPoints { .. } => "from-points",
        Command::Verify { .. } => "verify",
        Command::ReduceIs { .. } => "reduce-is",
        Command::MatchBrute { .. } => "match-brute",
        Command::IsBrute { .. } => "is-brute",
        Command::Project { .. } => "project",
        Command::Svg { .. } => "svg",
        Command::GenRandom { .. } => "gen-random",
        Command::Stats { .. } => "stats",
    }
}

fn dispatch(cli: &Cli, inputs: &mut Inputs) -> Result<Done, Failure> {
    match &cli.command {
        Command::Recognize { input } => cmd_recognize(cli, &inputs.read(input)?),
        Command::FromPoints { input } => cmd_from_points(cli, &inputs.read(input)?),
        Command::Verify {
            hypergraph,
            representation,
        } => {
            let g = inputs.read(hypergraph)?;
            let r = inputs.read(representation)?;
            cmd_verify(cli, &g, &r)
        }
        Command::ReduceIs { input } => cmd_reduce_is(&inputs.read(input)?),
        Command::MatchBrute { input } => cmd_match_brute(cli, &inputs.read(input)?),
        Command::IsBrute { input } => cmd_is_brute(&inputs.read(input)?),
        Command::Project { input, representation } => {
            let text = inputs.read(input)?;
            let rep = match representation {
                Some(p) => Some(inputs.read(p)?),
                None => None,
            };
            cmd_project(cli, &text, rep.as_deref())
        }
        Command::Svg { input } => cmd_svg(&inputs.read(input)?),
        Command::GenRandom { kind } => cmd_gen_random(cli, kind),
        Command::Stats { input } => cmd_stats(cli, &inputs.read(input)?),
    }
}

fn parse_graph(cli: &Cli, text: &str) -> Result<PartitionedHypergraph, Failure> {
    let doc: HypergraphDoc = serde_json::from_str(text)?;
    let parsed = PartitionedHypergraph::from_document(
        doc,
        ParseOptions {
            prune_isolated: cli.prune_isolated,
        },
    )?;
    if !parsed.pruned.is_empty() {
        eprintln!("pruned isolated vertices: {}", parsed.pruned.join(", "));
    }
    Ok(parsed.graph)
}

/// `(d, ell)` from the flags, then the document labeling, then `(k, 1)`.
fn resolve_dims(cli: &Cli, g: &PartitionedHypergraph) -> Result<(usize, usize), Failure> {
    let k = g.part_count();
    let doc = g.labeling().map(|l| (l.d(), l.ell()));
    let dims = match (cli.d, cli.ell) {
        (Some(d), Some(ell)) => Some((d, ell)),
        (Some(d), None) => match doc {
            Some((dd, ell)) if dd == d => Some((d, ell)),
            _ => (1..d).find(|&ell| binomial(d, ell) == k).map(|ell| (d, ell)),
        },
        (None, Some(ell)) => match doc {
            Some((d, e)) if e == ell => Some((d, ell)),
            _ => (ell + 1..=k + ell).find(|&d| binomial(d, ell) == k).map(|d| (d, ell)),
        },
        (None, None) => Some(doc.unwrap_or((k, 1))),
    };
    dims.ok_or_else(|| input_error(format!("no (d, ell) with C(d, ell) = {k} matches the flags")))
}

fn cmd_recognize(cli: &Cli, text: &str) -> Result<Done, Failure> {
    let g = parse_graph(cli, text)?;
    let (d, ell) = resolve_dims(cli, &g)?;
    let mode = match cli.labeling {
        LabelingMode::Fixed => "fixed",
        LabelingMode::Enumerate => "enumerate",
    };
    match recognize(&g, d, ell, cli.labeling)? {
        Recognition::Represented(rep) => Ok(Done {
            outcome: Outcome::Representable,
            artifact: Artifact::Json(rep.to_json(&g)),
            summary: format!("representable in (d, ell) = ({d}, {ell})"),
            details: json!({"d": d, "ell": ell, "labeling_mode": mode, "labeling": rep.labeling().to_document()}),
            exit: EXIT_OK,
        }),
        Recognition::NotRepresentable {
            labeling,
            witness,
            labelings_tried,
        } => Ok(Done {
            outcome: Outcome::NotRepresentable,
            artifact: Artifact::Json(witness.to_json(&g)),
            summary: format!("not representable in (d, ell) = ({d}, {ell}); {labelings_tried} labeling(s) tried"),
            details: json!({
                "d": d,
                "ell": ell,
                "labeling_mode": mode,
                "witness_labeling": labeling.to_document(),
                "labelings_tried": labelings_tried,
            }),
            exit: EXIT_NEGATIVE,
        }),
    }
}

fn parse_points(cli: &Cli, text: &str) -> Result<PointSetDoc, Failure> {
    let mut doc: PointSetDoc = serde_json::from_str(text)?;
    if let Some(ell) = cli.ell {
        doc.ell = ell;
    }
    if let Some(p) = doc.points.iter().find(|p| p.len() != doc.d) {
        return Err(input_error(format!("point {p:?} does not have d = {} coordinates", doc.d)));
    }
    Ok(doc)
}

fn cmd_from_points(cli: &Cli, text: &str) -> Result<Done, Failure> {
    let doc = parse_points(cli, text)?;
    let fp = hypergraph_from_points(&doc.points, doc.ell)?;
    let g = &fp.graph;
    Ok(Done::ok(
        Artifact::Json(g.to_json()),
        format!("{} edges, {} vertices in {} parts", g.edge_count(), g.vertex_count(), g.part_count()),
        json!({"d": doc.d, "ell": doc.ell, "edges": g.edge_count(), "vertices": g.vertex_count()}),
    ))
}

fn cmd_verify(cli: &Cli, graph: &str, rep: &str) -> Result<Done, Failure> {
    let g = parse_graph(cli, graph)?;
    let rep = Representation::from_json(rep, &g)?;
    Ok(match verify_representation(&g, &rep) {
        Ok(()) => Done {
            outcome: Outcome::Verified,
            artifact: Artifact::json(&json!({"valid": true})),
            summary: "representation verified".into(),
            details: json!({"d": rep.d(), "ell": rep.ell()}),
            exit: EXIT_OK,
        },
        Err(v) => failed_verification(&v),
    })
}

fn failed_verification(v: &Violation) -> Done {
    Done {
        outcome: Outcome::Failed,
        artifact: Artifact::json(&json!({"valid": false, "violation": v.to_string()})),
        summary: v.to_string(),
        details: Value::Null,
        exit: EXIT_NEGATIVE,
    }
}

fn cmd_reduce_is(text: &str) -> Result<Done, Failure> {
    let g = SimpleGraph::from_json(text)?;
    let inst = build_matching_instance(&g)?;
    verify_gadget_instance(&inst).map_err(|v| input_error(format!("internal layout error: {v}")))?;
    let base = matching_target(g.n(), g.m(), 0);
    Ok(Done::ok(
        Artifact::Json(inst.to_json()),
        format!(
            "{} points; maximum matching = {base} + alpha (n = {}, m = {})",
            inst.points.len(),
            g.n(),
            g.m()
        ),
        json!({"n": g.n(), "m": g.m(), "points": inst.points.len(), "target_without_alpha": base}),
    ))
}

fn cmd_match_brute(cli: &Cli, text: &str) -> Result<Done, Failure> {
    let value: Value = serde_json::from_str(text)?;
    let (maximum, mut details) = if value.get("roles").is_some() {
        let inst = GadgetInstance::from_json(text)?;
        let maximum = max_matching_of_points(&inst.coordinates())?;
        let (n, m) = (inst.graph.n(), inst.graph.m());
        let mut details = json!({"points": inst.points.len(), "n": n, "m": m});
        if let Ok(alpha) = brute_force_max_independent_set(&inst.graph) {
            details["alpha"] = json!(alpha);
            details["target"] = json!(matching_target(n, m, alpha));
        }
        (maximum, details)
    } else if value.get("k").is_some() {
        let g = parse_graph(cli, text)?;
        (brute_force_max_matching(&g)?, json!({"edges": g.edge_count()}))
    } else {
        let doc = parse_points(cli, text)?;
        let g = hypergraph_from_points(&doc.points, doc.ell)?.graph;
        (brute_force_max_matching(&g)?, json!({"points": doc.points.len()}))
    };
    details["maximum"] = json!(maximum);
    let summary = match (details.get("n"), details.get("m"), details.get("alpha")) {
        (Some(n), Some(m), Some(a)) => {
            let (n, m, a) = (n.as_u64().unwrap(), m.as_u64().unwrap(), a.as_u64().unwrap());
            format!("maximum {maximum}; n^2 - 2n + alpha + 2m = {} - {} + {a} + {}", n * n, 2 * n, 2 * m)
        }
        _ => format!("maximum {maximum}"),
    };
    Ok(Done::ok(Artifact::json(&details), summary, details.clone()))
}

fn cmd_is_brute(text: &str) -> Result<Done, Failure> {
    let g = SimpleGraph::from_json(text)?;
    let alpha = brute_force_max_independent_set(&g)?;
    let details = json!({"n": g.n(), "m": g.m(), "alpha": alpha});
    Ok(Done::ok(Artifact::json(&details), format!("alpha = {alpha}"), details))
}

fn cmd_project(cli: &Cli, text: &str, rep_text: Option<&str>) -> Result<Done, Failure> {
    let value: Value = serde_json::from_str(text)?;
    let rep = if value.get("k").is_some() {
        let g = parse_graph(cli, text)?;
        match rep_text {
            Some(r) => {
                let rep = Representation::from_json(r, &g)?;
                if let Err(v) = verify_representation(&g, &rep) {
                    return Ok(failed_verification(&v));
                }
                rep
            }
            None => {
                let (d, ell) = resolve_dims(cli, &g)?;
                match recognize(&g, d, ell, cli.labeling)? {
                    Recognition::Represented(rep) => rep,
                    Recognition::NotRepresentable { witness, .. } => {
                        return Ok(Done {
                            outcome: Outcome::NotRepresentable,
                            artifact: Artifact::Json(witness.to_json(&g)),
                            summary: "hypergraph is not representable; nothing to project".into(),
                            details: json!({"d": d, "ell": ell}),
                            exit: EXIT_NEGATIVE,
                        })
                    }
                }
            }
        }
    } else {
        let doc = parse_points(cli, text)?;
        hypergraph_from_points(&doc.points, doc.ell)?.representation
    };
    let proj = project_to_plane(&rep, cli.seed)?;
    Ok(Done::ok(
        Artifact::Json(proj.instance.to_json()),
        format!(
            "{} points, {} lines, {} directions; seed {} after {} attempt(s)",
            proj.instance.points.len(),
            proj.instance.lines.len(),
            proj.instance.class_count(),
            proj.seed,
            proj.attempts
        ),
        json!({"attempts": proj.attempts, "seed_used": proj.seed, "matrix": proj.matrix.rows}),
    ))
}

fn cmd_svg(text: &str) -> Result<Done, Failure> {
    let value: Value = serde_json::from_str(text)?;
    let (svg, details) = if value.get("lines").is_some() {
        let inst = PlanarInstance::from_json(text)?;
        let details = json!({"points": inst.points.len(), "lines": inst.lines.len(), "classes": inst.class_count()});
        (emit_svg(&inst), details)
    } else {
        let doc: PointSetDoc = serde_json::from_str(text)?;
        if doc.d != 2 || doc.ell != 1 {
            return Err(input_error("svg renders planar instances or (2, 1) point sets"));
        }
        let rep = hypergraph_from_points(&doc.points, 1)?.representation;
        (emit_representation_svg(&rep)?, json!({"points": doc.points.len(), "lines": rep.subspaces().len()}))
    };
    Ok(Done::ok(Artifact::Text(svg), format!("{details}"), details))
}

fn cmd_gen_random(cli: &Cli, kind: &GenKind) -> Result<Done, Failure> {
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let (artifact, summary) = match *kind {
        GenKind::Points { count, range } => {
            let d = cli.d.unwrap_or(3);
            let ell = cli.ell.unwrap_or(1);
            (Artifact::json(&generate::points(&mut rng, d, ell, count, range)?), format!("{count} points in Z^{d}"))
        }
        GenKind::Hypergraph { k, edges, part_size } => (
            Artifact::json(&generate::hypergraph(&mut rng, &vec![part_size; k], edges)?),
            format!("{edges} edges, k = {k}"),
        ),
        GenKind::Bipartite { left, right, edges } => (
            Artifact::json(&generate::hypergraph(&mut rng, &[left, right], edges)?),
            format!("{edges} edges between {left} and {right} candidates"),
        ),
        GenKind::Graph { n, edges } => (
            Artifact::Json(generate::graph(&mut rng, n, edges)?.to_json()),
            format!("graph with n = {n}, m = {edges}"),
        ),
    };
    Ok(Done::ok(artifact, summary, json!({"seed": cli.seed})))
}

fn cmd_stats(cli: &Cli, text: &str) -> Result<Done, Failure> {
    let value: Value = serde_json::from_str(text)?;
    if value.get("lines").is_some() {
        let inst = PlanarInstance::from_json(text)?;
        let g = planar_hypergraph(&inst)?;
        let details = json!({
            "points": inst.points.len(),
            "lines": inst.lines.len(),
            "classes": inst.class_count(),
            "parts": (0..g.part_count()).map(|p| g.part_size(p)).collect::<Vec<_>>(),
        });
        return Ok(Done::ok(Artifact::json(&details), format!("{details}"), details));
    }
    let g = parse_graph(cli, text)?;
    let mut details = json!({
        "k": g.part_count(),
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "part_sizes": (0..g.part_count()).map(|p| g.part_size(p)).collect::<Vec<_>>(),
    });
    let labeled = resolve_dims(cli, &g).and_then(|(d, ell)| Ok((d, ell, fixed_labeling(&g, d, ell)?)));
    if let Ok((d, ell, labeling)) = labeled {
        if let Ok(comps) = AxisComponents::build(&g, &labeling) {
            details["d"] = json!(d);
            details["ell"] = json!(ell);
            details["components_per_axis"] =
                json!(comps.partitions().iter().map(|p| p.component_count()).collect::<Vec<_>>());
            details["vertex_separable"] = json!(is_vertex_separable(&g, &labeling)?.is_separable());
            details["edge_separable"] = json!(is_edge_separable(&g, &labeling)?.is_separable());
        }
    }
    Ok(Done::ok(Artifact::json(&details), format!("{details}"), details))
}
