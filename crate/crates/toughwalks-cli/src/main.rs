//! Command-line front end: parse graphs, run the pipeline stages, emit JSON
//! witnesses and certificates, and re-verify everything before reporting.
//!
//! Exit codes: 0 = witness produced and self-verified, 1 = sound negative
//! certificate produced, 2 = input or precondition error, 3 = search budget
//! exhausted. JSON goes to stdout only; stderr is for humans.

use std::io::Read;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use toughwalks::domcycle::{find_edge_dominating_cycle, find_edge_dominating_cycle_with_triangle};
use toughwalks::format::{
    emit_edge_list, emit_graph6, graph_digest, parse_edge_list, parse_graph6,
};
use toughwalks::generators::{
    fixture_net, gen_2k2_free_perturbed, gen_complete_multipartite, gen_split_graph,
};
use toughwalks::kwalk::{build_k_walk, KWalk, KWalkOutcome, ToughnessCertificate};
use toughwalks::oracles::{
    brute_force_dominating_cycle, brute_force_hamiltonian, brute_force_toughness,
    check_edge_dominating, check_k_walk, check_prism_cycle, Budget, OracleError, Toughness,
};
use toughwalks::prism::{prism_hamiltonian_with_budget, PrismCycle, PrismError, PrismHamOutcome};
use toughwalks::recognition::{find_induced_2k2, find_triangle};
use toughwalks::{DomCycleError, DominatingWitness, Graph, Ratio};

const BUDGET_ENV: &str = "TOUGHWALKS_BUDGET";

#[derive(Parser)]
#[command(
    name = "toughwalks",
    version,
    about = "Edge-dominating cycles, k-walks and Hamiltonian prisms in 2K2-free graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArgs {
    /// Input file; stdin when omitted
    #[arg(long = "in", value_name = "PATH")]
    input: Option<std::path::PathBuf>,
    /// Input graph format
    #[arg(long, value_enum, default_value_t = GraphFormat::Edgelist)]
    format: GraphFormat,
}

#[derive(Copy, Clone, ValueEnum)]
enum GraphFormat {
    Edgelist,
    Graph6,
}

#[derive(Subcommand)]
enum Command {
    /// Decide 2K2-freeness; a violation ships the induced 2K2 as witness
    #[command(name = "check-2k2free")]
    Check2k2Free(InputArgs),
    /// Find an edge-dominating cycle (or vertex/edge witness on trees)
    DomCycle {
        #[command(flatten)]
        input: InputArgs,
        /// Keep a triangle cyclically consecutive on the output cycle
        #[arg(long)]
        triangle: bool,
        /// Include the growth trace in the report
        #[arg(long)]
        trace: bool,
    },
    /// Build a k-walk from the dominating-cycle pipeline
    Kwalk {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        k: usize,
    },
    /// Build a Hamiltonian cycle in the prism, or a toughness certificate
    PrismHam {
        #[command(flatten)]
        input: InputArgs,
        /// Node budget for the triangle-free fallback search
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Re-verify a witness report produced by another subcommand
    Verify {
        /// Report JSON emitted by dom-cycle, kwalk, prism-ham or check-2k2free
        report: std::path::PathBuf,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Exact brute-force oracles (exponential; budgeted)
    Oracle {
        #[command(subcommand)]
        which: OracleCommand,
    },
    /// Emit graphs from the seeded generator families
    Gen {
        #[command(subcommand)]
        family: GenCommand,
    },
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Node budget override (also via TOUGHWALKS_BUDGET)
    #[arg(long)]
    budget: Option<u64>,
    /// Lift the instance-size caps
    #[arg(long)]
    force: bool,
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Exact toughness by exhaustive cutset scan
    Toughness(OracleArgs),
    /// Exact Hamiltonian cycle search
    Ham(OracleArgs),
    /// Exact shortest edge-dominating cycle
    Domcycle(OracleArgs),
}

#[derive(Args)]
struct GenOutputArgs {
    /// Output graph format
    #[arg(long, value_enum, default_value_t = GraphFormat::Edgelist)]
    emit: GraphFormat,
}

#[derive(Subcommand)]
enum GenCommand {
    /// The 6-vertex net fixture
    Net(GenOutputArgs),
    /// Seeded random split graph
    Split {
        #[arg(long)]
        n: usize,
        /// Cross-edge probability as an exact fraction, e.g. 1/2
        #[arg(long, default_value = "1/2")]
        density: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: GenOutputArgs,
    },
    /// Complete multipartite graph
    Multipartite {
        /// Comma-separated part sizes, e.g. 2,2,3
        #[arg(long)]
        parts: String,
        #[command(flatten)]
        out: GenOutputArgs,
    },
    /// Split graph with extra random 2K2-freeness-preserving edges
    Perturbed {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "1/3")]
        density: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// How many extra edges to try to add
        #[arg(long, default_value_t = 3)]
        extra: u64,
        #[command(flatten)]
        out: GenOutputArgs,
    },
}

struct Failure {
    kind: &'static str,
    message: String,
    extra: Value,
    code: u8,
}

impl Failure {
    fn input(kind: &'static str, message: impl Into<String>) -> Self {
        Failure {
            kind,
            message: message.into(),
            extra: Value::Null,
            code: 2,
        }
    }

    fn with_extra(mut self, extra: Value) -> Self {
        self.extra = extra;
        self
    }

    fn budget(message: impl Into<String>) -> Self {
        Failure {
            kind: "budget_exceeded",
            message: message.into(),
            extra: Value::Null,
            code: 3,
        }
    }
}

#[derive(Serialize)]
struct RunReport {
    command: String,
    input_digest: String,
    result: &'static str,
    payload: Value,
    elapsed_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<Value>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            let mut body = json!({ "kind": f.kind, "message": f.message });
            if !f.extra.is_null() {
                body["details"] = f.extra;
            }
            println!("{}", json!({ "error": body }));
            ExitCode::from(f.code)
        }
    }
}

fn read_graph(args: &InputArgs) -> Result<Graph, Failure> {
    let text = match &args.input {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Failure::input("io", format!("cannot read {}: {e}", path.display())))?,
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Failure::input("io", format!("cannot read stdin: {e}")))?;
            buf
        }
    };
    let parsed = match args.format {
        GraphFormat::Edgelist => parse_edge_list(&text),
        GraphFormat::Graph6 => parse_graph6(&text),
    };
    parsed.map_err(|e| Failure::input("parse", e.to_string()))
}

fn env_budget() -> Option<u64> {
    std::env::var(BUDGET_ENV).ok().and_then(|v| v.parse().ok())
}

fn resolve_budget(flag: Option<u64>, default_nodes: u64, force: bool) -> Budget {
    let nodes = flag.or_else(env_budget).unwrap_or(default_nodes);
    let mut b = Budget::nodes(nodes);
    if force {
        b = b.forced();
    }
    b
}

fn report(
    command: &str,
    g: &Graph,
    result: &'static str,
    payload: Value,
    started: Instant,
    trace: Option<Value>,
) -> RunReport {
    RunReport {
        command: command.to_string(),
        input_digest: graph_digest(g),
        result,
        payload,
        elapsed_ms: started.elapsed().as_millis() as u64,
        trace,
    }
}

fn emit(report: &RunReport, code: u8) -> Result<u8, Failure> {
    println!(
        "{}",
        serde_json::to_string(report).expect("report serializes")
    );
    Ok(code)
}

fn self_check(ok: bool, what: &str) -> Result<(), Failure> {
    if ok {
        Ok(())
    } else {
        Err(Failure {
            kind: "self_verification_failed",
            message: format!("internal error: produced {what} failed its oracle check"),
            extra: Value::Null,
            code: 2,
        })
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Check2k2Free(input) => {
            let g = read_graph(&input)?;
            let started = Instant::now();
            match find_induced_2k2(&g) {
                None => emit(
                    &report(
                        "check-2k2free",
                        &g,
                        "witness",
                        json!({ "free": true }),
                        started,
                        None,
                    ),
                    0,
                ),
                Some(w) => {
                    self_check(w.is_valid(&g), "induced 2K2 witness")?;
                    emit(
                        &report(
                            "check-2k2free",
                            &g,
                            "certificate",
                            json!({ "free": false, "witness": w }),
                            started,
                            None,
                        ),
                        1,
                    )
                }
            }
        }
        Command::DomCycle {
            input,
            triangle,
            trace,
        } => {
            let g = read_graph(&input)?;
            let started = Instant::now();
            let (witness, growth) = if triangle {
                let t = find_triangle(&g).ok_or_else(|| {
                    Failure::input(
                        "no_triangle",
                        "graph is triangle-free; --triangle needs one",
                    )
                })?;
                let (cycle, growth) =
                    find_edge_dominating_cycle_with_triangle(&g, t).map_err(dom_cycle_failure)?;
                (DominatingWitness::cycle(&cycle), growth)
            } else {
                find_edge_dominating_cycle(&g).map_err(dom_cycle_failure)?
            };
            self_check(check_edge_dominating(&g, &witness), "dominating witness")?;
            if triangle {
                let ids = witness.vertex_ids();
                self_check(
                    toughwalks::domcycle::triple_is_consecutive(&g, &ids),
                    "consecutive triangle",
                )?;
            }
            let trace_json =
                trace.then(|| serde_json::to_value(&growth).expect("trace serializes"));
            emit(
                &report(
                    "dom-cycle",
                    &g,
                    "witness",
                    serde_json::to_value(&witness).expect("witness serializes"),
                    started,
                    trace_json,
                ),
                0,
            )
        }
        Command::Kwalk { input, k } => {
            let g = read_graph(&input)?;
            let started = Instant::now();
            if k < 2 {
                return Err(Failure::input(
                    "k_too_small",
                    format!("k = {k} unsupported; k-walk construction needs k >= 2"),
                ));
            }
            let (witness, _) = find_edge_dominating_cycle(&g).map_err(dom_cycle_failure)?;
            match build_k_walk(&g, &witness, k).map_err(kwalk_failure)? {
                KWalkOutcome::Walk(walk) => {
                    self_check(check_k_walk(&g, &walk), "k-walk")?;
                    emit(
                        &report(
                            "kwalk",
                            &g,
                            "witness",
                            serde_json::to_value(&walk).expect("walk serializes"),
                            started,
                            None,
                        ),
                        0,
                    )
                }
                KWalkOutcome::Certificate(cert) => {
                    self_check(
                        cert.is_valid(&g) && cert.bound < Ratio::new(1, k as i64 - 1),
                        "toughness certificate",
                    )?;
                    emit(
                        &report(
                            "kwalk",
                            &g,
                            "certificate",
                            serde_json::to_value(&cert).expect("certificate serializes"),
                            started,
                            None,
                        ),
                        1,
                    )
                }
            }
        }
        Command::PrismHam { input, budget } => {
            let g = read_graph(&input)?;
            let started = Instant::now();
            let budget = resolve_budget(budget, 1_000_000, false);
            match prism_hamiltonian_with_budget(&g, &budget).map_err(prism_failure)? {
                PrismHamOutcome::Cycle(pc) => {
                    self_check(check_prism_cycle(&g, &pc), "prism cycle")?;
                    emit(
                        &report(
                            "prism-ham",
                            &g,
                            "witness",
                            serde_json::to_value(&pc).expect("prism cycle serializes"),
                            started,
                            None,
                        ),
                        0,
                    )
                }
                PrismHamOutcome::Certificate(cert) => {
                    self_check(
                        cert.is_valid(&g) && cert.bound <= Ratio::from(1),
                        "toughness certificate",
                    )?;
                    emit(
                        &report(
                            "prism-ham",
                            &g,
                            "certificate",
                            serde_json::to_value(&cert).expect("certificate serializes"),
                            started,
                            None,
                        ),
                        1,
                    )
                }
                PrismHamOutcome::SearchExhausted { explored, complete } => emit(
                    &report(
                        "prism-ham",
                        &g,
                        "failure",
                        json!({
                            "reason": "search_exhausted",
                            "explored": explored,
                            "complete": complete,
                        }),
                        started,
                        None,
                    ),
                    3,
                ),
            }
        }
        Command::Verify {
            report: path,
            input,
        } => {
            let g = read_graph(&input)?;
            let started = Instant::now();
            let text = std::fs::read_to_string(&path).map_err(|e| {
                Failure::input("io", format!("cannot read {}: {e}", path.display()))
            })?;
            let value: Value = serde_json::from_str(&text)
                .map_err(|e| Failure::input("parse", format!("report is not JSON: {e}")))?;
            let (valid, checked) = verify_report(&g, &value)?;
            emit(
                &report(
                    "verify",
                    &g,
                    if valid { "witness" } else { "failure" },
                    json!({ "valid": valid, "checked": checked }),
                    started,
                    None,
                ),
                u8::from(!valid),
            )
        }
        Command::Oracle { which } => run_oracle(which),
        Command::Gen { family } => run_gen(family),
    }
}

fn dom_cycle_failure(e: DomCycleError) -> Failure {
    match e {
        DomCycleError::NotConnected => Failure::input("not_connected", e.to_string()),
        DomCycleError::Not2K2Free(ref w) => {
            let extra = json!({ "witness": w });
            Failure::input("not_2k2_free", e.to_string()).with_extra(extra)
        }
        DomCycleError::NotATriangle(_) => Failure::input("not_a_triangle", e.to_string()),
    }
}

fn kwalk_failure(e: toughwalks::KwalkError) -> Failure {
    Failure::input("kwalk_precondition", e.to_string())
}

fn prism_failure(e: PrismError) -> Failure {
    match e {
        PrismError::Not2K2Free(ref w) => {
            let extra = json!({ "witness": w });
            Failure::input("not_2k2_free", e.to_string()).with_extra(extra)
        }
        PrismError::NotConnected => Failure::input("not_connected", e.to_string()),
        PrismError::GraphTooSmall => Failure::input("graph_too_small", e.to_string()),
        other => Failure::input("prism_precondition", other.to_string()),
    }
}

/// Re-checks a report against the graph: digest first, then the payload
/// under the reporting command's oracle.
fn verify_report(g: &Graph, value: &Value) -> Result<(bool, String), Failure> {
    let command = value["command"]
        .as_str()
        .ok_or_else(|| Failure::input("parse", "report has no command field"))?;
    let digest = value["input_digest"]
        .as_str()
        .ok_or_else(|| Failure::input("parse", "report has no input_digest field"))?;
    if digest != graph_digest(g) {
        return Err(Failure::input(
            "digest_mismatch",
            "report was produced for a different graph",
        ));
    }
    let payload = &value["payload"];
    let result = value["result"].as_str().unwrap_or("witness");
    let verdict = match (command, result) {
        ("dom-cycle", "witness") => {
            let w: DominatingWitness = serde_json::from_value(payload.clone())
                .map_err(|e| Failure::input("parse", format!("bad witness payload: {e}")))?;
            (
                check_edge_dominating(g, &w),
                "edge-dominating witness".to_string(),
            )
        }
        ("kwalk", "witness") => {
            let w: KWalk = serde_json::from_value(payload.clone())
                .map_err(|e| Failure::input("parse", format!("bad k-walk payload: {e}")))?;
            (check_k_walk(g, &w), format!("{}-walk", w.k()))
        }
        ("prism-ham", "witness") => {
            let pc: PrismCycle = serde_json::from_value(payload.clone())
                .map_err(|e| Failure::input("parse", format!("bad prism cycle payload: {e}")))?;
            (
                check_prism_cycle(g, &pc),
                "prism Hamiltonian cycle".to_string(),
            )
        }
        ("check-2k2free", "certificate") => {
            let w: toughwalks::InducedMatchingWitness =
                serde_json::from_value(payload["witness"].clone())
                    .map_err(|e| Failure::input("parse", format!("bad 2K2 payload: {e}")))?;
            (w.is_valid(g), "induced 2K2".to_string())
        }
        (_, "certificate") => {
            let cert: ToughnessCertificate = serde_json::from_value(payload.clone())
                .map_err(|e| Failure::input("parse", format!("bad certificate payload: {e}")))?;
            (cert.is_valid(g), "toughness certificate".to_string())
        }
        other => {
            return Err(Failure::input(
                "parse",
                format!("cannot verify report ({}, {})", other.0, other.1),
            ))
        }
    };
    Ok(verdict)
}

fn run_oracle(which: OracleCommand) -> Result<u8, Failure> {
    match which {
        OracleCommand::Toughness(args) => {
            let g = read_graph(&args.input)?;
            let started = Instant::now();
            let budget = resolve_budget(args.budget, 10_000_000, args.force);
            let payload = match brute_force_toughness(&g, &budget).map_err(oracle_failure)? {
                Toughness::Infinite => json!({ "toughness": "infinite" }),
                Toughness::Finite(cert) => json!({
                    "toughness": cert.bound,
                    "cutset": cert.cutset,
                    "components": cert.components,
                }),
            };
            emit(
                &report("oracle toughness", &g, "witness", payload, started, None),
                0,
            )
        }
        OracleCommand::Ham(args) => {
            let g = read_graph(&args.input)?;
            let started = Instant::now();
            let budget = resolve_budget(args.budget, 10_000_000, args.force);
            match brute_force_hamiltonian(&g, &budget).map_err(oracle_failure)? {
                Some(c) => emit(
                    &report(
                        "oracle ham",
                        &g,
                        "witness",
                        json!({ "cycle": c.vertices() }),
                        started,
                        None,
                    ),
                    0,
                ),
                None => emit(
                    &report(
                        "oracle ham",
                        &g,
                        "certificate",
                        json!({ "cycle": Value::Null }),
                        started,
                        None,
                    ),
                    1,
                ),
            }
        }
        OracleCommand::Domcycle(args) => {
            let g = read_graph(&args.input)?;
            let started = Instant::now();
            let budget = resolve_budget(args.budget, 10_000_000, args.force);
            match brute_force_dominating_cycle(&g, &budget).map_err(oracle_failure)? {
                Some(c) => emit(
                    &report(
                        "oracle domcycle",
                        &g,
                        "witness",
                        json!({ "cycle": c.vertices() }),
                        started,
                        None,
                    ),
                    0,
                ),
                None => emit(
                    &report(
                        "oracle domcycle",
                        &g,
                        "certificate",
                        json!({ "cycle": Value::Null }),
                        started,
                        None,
                    ),
                    1,
                ),
            }
        }
    }
}

fn oracle_failure(e: OracleError) -> Failure {
    match e {
        OracleError::BudgetExceeded { .. } => Failure::budget(e.to_string()),
        OracleError::TooLarge { .. } => Failure {
            kind: "too_large",
            message: e.to_string(),
            extra: Value::Null,
            code: 3,
        },
    }
}

fn parse_density(text: &str) -> Result<Ratio, Failure> {
    let parse = |s: &str| {
        s.parse::<i64>()
            .map_err(|_| Failure::input("parse", format!("bad density component in '{text}'")))
    };
    let r = match text.split_once('/') {
        Some((a, b)) => {
            let den = parse(b)?;
            if den == 0 {
                return Err(Failure::input("parse", "density denominator is zero"));
            }
            Ratio::new(parse(a)?, den)
        }
        None => Ratio::from(parse(text)?),
    };
    if r < Ratio::from(0) || r > Ratio::from(1) {
        return Err(Failure::input("parse", "density must lie in [0, 1]"));
    }
    Ok(r)
}

fn run_gen(family: GenCommand) -> Result<u8, Failure> {
    let (g, out) = match family {
        GenCommand::Net(out) => (fixture_net(), out),
        GenCommand::Split {
            n,
            density,
            seed,
            out,
        } => {
            if n == 0 {
                return Err(Failure::input("parse", "n must be at least 1"));
            }
            (gen_split_graph(n, parse_density(&density)?, seed), out)
        }
        GenCommand::Multipartite { parts, out } => {
            let sizes: Result<Vec<usize>, _> = parts
                .split(',')
                .map(|s| s.trim().parse::<usize>())
                .collect();
            let sizes =
                sizes.map_err(|_| Failure::input("parse", format!("bad part sizes '{parts}'")))?;
            if sizes.is_empty() || sizes.contains(&0) {
                return Err(Failure::input("parse", "part sizes must be positive"));
            }
            (gen_complete_multipartite(&sizes), out)
        }
        GenCommand::Perturbed {
            n,
            density,
            seed,
            extra,
            out,
        } => {
            if n == 0 {
                return Err(Failure::input("parse", "n must be at least 1"));
            }
            let base = gen_split_graph(n, parse_density(&density)?, seed);
            (
                gen_2k2_free_perturbed(&base, extra as usize, seed ^ 0x5eed),
                out,
            )
        }
    };
    match out.emit {
        GraphFormat::Edgelist => print!("{}", emit_edge_list(&g)),
        GraphFormat::Graph6 => println!(
            "{}",
            emit_graph6(&g).map_err(|e| Failure::input("encode", e.to_string()))?
        ),
    }
    Ok(0)
}
