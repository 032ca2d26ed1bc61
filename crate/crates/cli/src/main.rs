use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use recomp::atlas::{self, Relation, SweepOptions, TheoremId};
use recomp::constructions::{self as cons, ConstructedPair};
use recomp::graphkit::{self, graph6, Graph};
use recomp::hypomorphy;
use recomp::incidence;
use recomp::CODE_VERSION;

#[derive(Parser)]
#[command(name = "recomp", version, about = "Hypomorphy and reconstruction up to complementation")]
struct Cli {
    /// Report format on stdout
    #[arg(long, global = true, value_enum, default_value = "human")]
    output: Output,
    /// Worker threads for sweeps (default: RECOMP_JOBS, else all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Human,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Hypo,
    HypoUtc,
    EdgesUtc,
    Parity,
    H3,
}

#[derive(Clone, Copy, ValueEnum)]
enum RelationArg {
    S,
    R,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants and basic properties of one graph
    Analyze {
        /// graph6 string or a file whose first line is one
        graph: String,
    },
    /// Compare two graphs on their k-subsets
    CheckPair {
        g: String,
        g_prime: String,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum)]
        mode: Mode,
    },
    /// Build an inclusion matrix and check its rank
    Matrix {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        v: usize,
        /// prime modulus; exact rational rank when absent
        #[arg(long)]
        p: Option<u64>,
    },
    /// Graphs in the mod-2 kernel of the pair-versus-k-subset matrix
    Kernel {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        v: usize,
    },
    /// Emit a named construction
    Construct {
        /// clique-pair V | cycle-swap V | lemma-five | k7 V | remark K V | nonn3 M R |
        /// paley Q | lex-paley Q1 Q2 | star V | claw
        name: String,
        params: Vec<usize>,
    },
    /// Run a statement's checker over all pairs of one order
    Verify {
        /// k0mod4 | k1mod4 | principal | clawfree | down | corkk1 | kaplus | class-g
        theorem: String,
        #[arg(long)]
        v: usize,
        #[arg(long)]
        k: Option<usize>,
        /// allow order-7 sweeps
        #[arg(long)]
        long: bool,
    },
    /// Decide membership of (v, k) in S or R
    Atlas {
        #[arg(long, value_enum, ignore_case = true)]
        relation: RelationArg,
        #[arg(long)]
        v: usize,
        #[arg(long)]
        k: usize,
        /// JSON-lines log: reuse a stored record, append new ones
        #[arg(long)]
        resume: Option<PathBuf>,
        /// also write the record as a CSV table
        #[arg(long)]
        csv: Option<PathBuf>,
        /// also write the witness pair as graph6 into this directory
        #[arg(long)]
        witness_dir: Option<PathBuf>,
        /// allow order-7 sweeps
        #[arg(long)]
        long: bool,
    },
    /// Look for circulant class-G graphs of order n
    SearchClassG {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
    },
}

/// What a command produced: a JSON report, its human rendering, and whether
/// a checked statement was falsified.
struct Outcome {
    report: Value,
    human: String,
    falsified: bool,
}

impl Outcome {
    fn ok(report: Value, human: impl Into<String>) -> Self {
        Outcome {
            report,
            human: human.into(),
            falsified: false,
        }
    }
}

fn read_graph(arg: &str) -> Result<Graph> {
    let text = if Path::new(arg).is_file() {
        let s = std::fs::read_to_string(arg).with_context(|| format!("reading {arg}"))?;
        s.lines().next().unwrap_or_default().trim().to_string()
    } else {
        arg.to_string()
    };
    Ok(graph6::decode(&text)?)
}

fn analyze(graph: &str) -> Result<Outcome> {
    let g = read_graph(graph)?;
    let inv = graphkit::invariants(&g);
    let small = g.order() <= graphkit::MAX_EXACT_ORDER;
    let sc = if small { Some(graphkit::is_self_complementary(&g)?) } else { None };
    let report = json!({
        "graph6": graph6::encode(&g),
        "invariants": inv,
        "degrees": g.degrees(),
        "regular": g.is_regular(),
        "self_complementary": sc,
        "claw_free": graphkit::is_claw_free(&g),
    });
    let human = format!(
        "n={} e={} e_bar={} a0={} a1={} a2={} t={} h3={}\nregular={} self_complementary={} claw_free={}",
        inv.n,
        inv.e,
        inv.e_bar,
        inv.a0,
        inv.a1,
        inv.a2,
        inv.t,
        inv.h3,
        g.is_regular(),
        sc.map_or("n/a".to_string(), |b| b.to_string()),
        graphkit::is_claw_free(&g)
    );
    Ok(Outcome::ok(report, human))
}

fn check_pair(g: &str, h: &str, k: usize, mode: Mode) -> Result<Outcome> {
    let (g, h) = (read_graph(g)?, read_graph(h)?);
    let verdict = match mode {
        Mode::Hypo => hypomorphy::k_hypomorphic(&g, &h, k)?,
        Mode::HypoUtc => hypomorphy::k_hypomorphic_utc(&g, &h, k)?,
        Mode::EdgesUtc => hypomorphy::same_edge_counts_utc(&g, &h, k)?,
        Mode::Parity => hypomorphy::same_parity(&g, &h, k)?,
        Mode::H3 => hypomorphy::same_h3_counts(&g, &h, k)?,
    };
    let human = match verdict.witness {
        None => format!("holds=true (k={k})"),
        Some(w) => format!("holds=false (k={k}), first failing subset {:?}", w.to_vec()),
    };
    Ok(Outcome::ok(serde_json::to_value(verdict)?, human))
}

fn matrix(t: usize, k: usize, v: usize, p: Option<u64>) -> Result<Outcome> {
    let r = match p {
        Some(p) => incidence::verify_wilson(t, k, v, p)?,
        None => incidence::verify_gottlieb_kantor(t, k, v)?,
    };
    let field = p.map_or("Q".to_string(), |p| format!("GF({p})"));
    let human = format!(
        "W_{{{t},{k}}} on {v} points over {field}: expected {}, computed {}, {}",
        r.expected_rank,
        r.computed_rank,
        if r.pass { "pass" } else { "FAIL" }
    );
    Ok(Outcome {
        falsified: !r.pass,
        report: serde_json::to_value(&r)?,
        human,
    })
}

fn kernel(k: usize, v: usize) -> Result<Outcome> {
    let graphs = incidence::kernel_graphs_mod2(k, v)?;
    let mut counts = std::collections::BTreeMap::<String, usize>::new();
    let entries: Vec<Value> = graphs
        .iter()
        .map(|g| {
            let kind = format!("{:?}", graphkit::classify_bipartite_kernel(g));
            *counts.entry(kind.clone()).or_default() += 1;
            json!({"graph6": graph6::encode(g), "kind": kind})
        })
        .collect();
    let mut human = format!("kernel of W_{{2,{k}}} mod 2 on {v} points: {} graphs", graphs.len());
    for (kind, c) in &counts {
        human.push_str(&format!("\n  {kind}: {c}"));
    }
    Ok(Outcome::ok(json!({"size": graphs.len(), "classification": counts, "graphs": entries}), human))
}

fn params<const N: usize>(name: &str, p: &[usize]) -> Result<[usize; N]> {
    p.try_into()
        .map_err(|_| anyhow::Error::new(recomp::Error::Domain(format!("{name} takes {N} parameter(s), got {}", p.len()))))
}

fn pair_outcome(pairs: Vec<ConstructedPair>) -> Outcome {
    let human = pairs
        .iter()
        .map(|p| {
            let claims: Vec<String> = p.claimed_properties.iter().map(|c| c.to_string()).collect();
            format!(
                "{}\n{}\n{}\nverified: {}",
                p.provenance,
                graph6::encode(&p.g),
                graph6::encode(&p.g_prime),
                claims.join(", ")
            )
        })
        .collect::<Vec<_>>()
        .join("\n\n");
    let mut values: Vec<Value> = pairs.iter().map(ConstructedPair::to_json).collect();
    let report = if values.len() == 1 { values.remove(0) } else { Value::Array(values) };
    Outcome::ok(report, human)
}

fn graph_outcome(g: &Graph) -> Outcome {
    let code = graph6::encode(g);
    Outcome::ok(json!({ "graph6": code }), code)
}

fn construct(name: &str, p: &[usize]) -> Result<Outcome> {
    Ok(match name {
        "clique-pair" => pair_outcome(vec![cons::clique_pair_counterexample(params::<1>(name, p)?[0])?]),
        "cycle-swap" => pair_outcome(vec![cons::cycle_swap_pair(params::<1>(name, p)?[0])?]),
        "lemma-five" => {
            params::<0>(name, p)?;
            pair_outcome(cons::lemma_five_pairs()?)
        }
        "k7" => pair_outcome(vec![cons::k7_counterexample(params::<1>(name, p)?[0])?]),
        "remark" => {
            let [k, v] = params::<2>(name, p)?;
            pair_outcome(vec![cons::remark_example(k, v)?])
        }
        "nonn3" => {
            let [m, r] = params::<2>(name, p)?;
            pair_outcome(vec![cons::nonn3_pair(m, r)?])
        }
        "paley" => graph_outcome(&cons::paley_graph(params::<1>(name, p)?[0] as u64)?),
        "lex-paley" => {
            let [a, b] = params::<2>(name, p)?;
            let (ga, gb) = (cons::paley_graph(a as u64)?, cons::paley_graph(b as u64)?);
            let g = cons::lex_product(&ga, &gb)?;
            let maps = cons::lex_product_certificates(&cons::paley_certificates(a as u64)?, &cons::paley_certificates(b as u64)?)?;
            let verdict = cons::class_g_member_certified(&g, &maps)?;
            if !verdict.member {
                bail!("composed certificates fail on lex product of P{a} and P{b}");
            }
            let code = graph6::encode(&g);
            Outcome::ok(json!({"graph6": code, "class_g_certified": true}), code)
        }
        "star" => graph_outcome(&cons::star_graph(params::<1>(name, p)?[0])?),
        "claw" => {
            params::<0>(name, p)?;
            graph_outcome(&cons::claw())
        }
        other => return Err(recomp::Error::Domain(format!("unknown construction {other:?}")).into()),
    })
}

fn verify(theorem: &str, v: usize, k: Option<usize>, long: bool) -> Result<Outcome> {
    if theorem == "class-g" {
        let r = cons::verify_class_g_characterization(v)?;
        let human = format!(
            "order {v} ({}, {} examined): members {:?}, self-complementary vertex-transitive {:?}: {}",
            r.scope,
            r.classes_examined,
            r.members,
            r.sc_vt,
            if r.holds { "agree" } else { "DISAGREE" }
        );
        return Ok(Outcome {
            falsified: !r.holds,
            report: serde_json::to_value(&r)?,
            human,
        });
    }
    let id = TheoremId::parse(theorem)?;
    let r = atlas::sweep_theorem(id, v, k, SweepOptions { allow_long: long })?;
    let mut human = format!(
        "{} v={v}{}: {} pairs ({}), {} evaluations, hypothesis held in {}, {} violations",
        id.name(),
        k.map_or(String::new(), |k| format!(" k={k}")),
        r.pairs,
        r.space,
        r.evaluations,
        r.hypothesis_satisfied,
        r.violation_count
    );
    for x in &r.violations {
        human.push_str(&format!("\n  violation: {} {}", x.g, x.g_prime));
    }
    Ok(Outcome {
        falsified: r.violation_count > 0,
        report: serde_json::to_value(&r)?,
        human,
    })
}

#[allow(clippy::too_many_arguments)]
fn run_atlas(
    relation: RelationArg,
    v: usize,
    k: usize,
    resume: Option<&Path>,
    csv: Option<&Path>,
    witness_dir: Option<&Path>,
    long: bool,
) -> Result<Outcome> {
    let relation = match relation {
        RelationArg::S => Relation::S,
        RelationArg::R => Relation::R,
    };
    let stored = match resume {
        Some(path) => atlas::find_record(&atlas::load_log(path)?, relation, v, k).cloned(),
        None => None,
    };
    let (record, resumed) = match stored {
        Some(r) => (r, true),
        None => {
            let r = atlas::membership(relation, v, k, SweepOptions { allow_long: long })?;
            if let Some(path) = resume {
                atlas::append_record(path, &r)?;
            }
            (r, false)
        }
    };
    if !record.verify_witness()? {
        bail!("stored witness for ({v},{k}) does not re-verify");
    }
    if let Some(path) = csv {
        atlas::write_csv(path, std::slice::from_ref(&record))?;
    }
    if let Some(dir) = witness_dir {
        atlas::write_witness(dir, &record)?;
    }
    let mut human = format!("({v},{k}) {:?}: {:?} after {} pairs", relation, record.verdict, record.pairs_examined);
    if let Some((a, b)) = &record.witness {
        human.push_str(&format!("\nwitness: {a} {b}"));
    }
    if resumed {
        human.push_str("\n(from log)");
    }
    Ok(Outcome::ok(serde_json::to_value(record.without_timing())?, human))
}

fn search(n: usize, budget: u64) -> Result<Outcome> {
    let r = cons::search_class_g(n, budget)?;
    let mut human = format!(
        "order {n}: examined {} of {} circulant candidates ({}), {} member(s) found",
        r.examined,
        r.candidates_total,
        if r.exhaustive { "exhaustive" } else { "partial" },
        r.members.len()
    );
    for m in &r.members {
        human.push_str(&format!("\n{m}"));
    }
    Ok(Outcome::ok(serde_json::to_value(&r)?, human))
}

/// The subcommand's name and arguments, embedded in every JSON report.
fn describe(c: &Command) -> (&'static str, Value) {
    match c {
        Command::Analyze { graph } => ("analyze", json!({ "graph": graph })),
        Command::CheckPair { g, g_prime, k, mode } => (
            "check-pair",
            json!({"g": g, "g_prime": g_prime, "k": k, "mode": mode.to_possible_value().map(|v| v.get_name().to_string())}),
        ),
        Command::Matrix { t, k, v, p } => ("matrix", json!({"t": t, "k": k, "v": v, "p": p})),
        Command::Kernel { k, v } => ("kernel", json!({"k": k, "v": v})),
        Command::Construct { name, params } => ("construct", json!({"name": name, "params": params})),
        Command::Verify { theorem, v, k, long } => ("verify", json!({"theorem": theorem, "v": v, "k": k, "long": long})),
        Command::Atlas { relation, v, k, long, .. } => (
            "atlas",
            json!({"relation": relation.to_possible_value().map(|v| v.get_name().to_uppercase()), "v": v, "k": k, "long": long}),
        ),
        Command::SearchClassG { n, budget } => ("search-class-g", json!({"n": n, "budget": budget})),
    }
}

fn dispatch(c: &Command) -> Result<Outcome> {
    match c {
        Command::Analyze { graph } => analyze(graph),
        Command::CheckPair { g, g_prime, k, mode } => check_pair(g, g_prime, *k, *mode),
        Command::Matrix { t, k, v, p } => matrix(*t, *k, *v, *p),
        Command::Kernel { k, v } => kernel(*k, *v),
        Command::Construct { name, params } => construct(name, params),
        Command::Verify { theorem, v, k, long } => verify(theorem, *v, *k, *long),
        Command::Atlas {
            relation,
            v,
            k,
            resume,
            csv,
            witness_dir,
            long,
        } => run_atlas(*relation, *v, *k, resume.as_deref(), csv.as_deref(), witness_dir.as_deref(), *long),
        Command::SearchClassG { n, budget } => search(*n, *budget),
    }
}

fn jobs(flag: Option<usize>) -> Result<Option<usize>> {
    if flag.is_some() {
        return Ok(flag);
    }
    match std::env::var("RECOMP_JOBS") {
        Ok(s) => Ok(Some(s.trim().parse().context("RECOMP_JOBS must be a positive integer")?)),
        Err(_) => Ok(None),
    }
}

fn emit_error(json_mode: bool, kind: &str, message: &str) {
    if json_mode {
        println!("{}", json!({"error": {"kind": kind, "message": message}, "code_version": CODE_VERSION}));
    } else {
        eprintln!("error: {message}");
    }
}

/// Whether the raw arguments ask for JSON; used when they fail to parse.
fn wants_json(args: &[String]) -> bool {
    args.windows(2).any(|w| w[0] == "--output" && w[1] == "json") || args.iter().any(|a| a == "--output=json")
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            if wants_json(&args) {
                emit_error(true, "usage", e.to_string().trim());
            } else {
                let _ = e.print();
            }
            return ExitCode::from(2);
        }
    };
    let json_mode = cli.output == Output::Json;
    let pool = jobs(cli.jobs).and_then(|n| {
        if n == Some(0) {
            bail!("--jobs must be positive");
        }
        let mut b = rayon::ThreadPoolBuilder::new();
        if let Some(n) = n {
            b = b.num_threads(n);
        }
        b.build_global().context("starting worker pool")
    });
    if let Err(e) = pool {
        emit_error(json_mode, "usage", &format!("{e:#}"));
        return ExitCode::from(2);
    }
    match dispatch(&cli.command) {
        Ok(out) => {
            if json_mode {
                let (command, params) = describe(&cli.command);
                let report = json!({
                    "command": command,
                    "params": params,
                    "code_version": CODE_VERSION,
                    "falsified": out.falsified,
                    "result": out.report,
                });
                println!("{report}");
            } else {
                println!("{}", out.human);
            }
            if out.falsified {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            let kind = if e.downcast_ref::<recomp::Error>().is_some() { "domain" } else { "runtime" };
            emit_error(json_mode, kind, &format!("{e:#}"));
            ExitCode::from(2)
        }
    }
}
