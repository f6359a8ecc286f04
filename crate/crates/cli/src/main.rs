use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use dn_cluster::export::{category_dot, module_quiver_dot, quiver_dot};
use dn_cluster::tilted::loewy_text;
use dn_cluster::triangulation::enumerate_triangulations_bounded;
use dn_cluster::verify::{run_suite, Suite, SuiteReport};
use dn_cluster::*;

/// Writes to stdout, leaving quietly when the reader has gone away.
fn emit(args: std::fmt::Arguments<'_>) {
    if let Err(e) = io::stdout().lock().write_fmt(args) {
        if e.kind() == io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        panic!("writing to stdout: {e}");
    }
}

macro_rules! out {
    ($($t:tt)*) => { emit(format_args!($($t)*)) };
}

macro_rules! outln {
    () => { emit(format_args!("\n")) };
    ($($t:tt)*) => {{ emit(format_args!($($t)*)); emit(format_args!("\n")) }};
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Parser, Debug)]
#[command(name = "dncluster", version, about = "Tagged edges, crossings and cluster-tilted algebras of a punctured polygon")]
struct Cli {
    /// Number of polygon vertices.
    #[arg(long, short, global = true, default_value_t = 4)]
    n: usize,
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    /// Seed for randomized subcommands.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest n for which maximal non-crossing sets are enumerated.
    #[arg(long, global = true, default_value_t = 6)]
    max_enum: usize,
    /// Report the quiver of End(T) instead of its opposite.
    #[arg(long, global = true)]
    no_op: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List all tagged edges with positions, translates and moves.
    Edges,
    /// Crossing numbers of all pairs.
    Crossings,
    /// Morphism space Hom(M, N) in the cluster category.
    Hom {
        m: String,
        target: String,
        /// Restrict to one component Hom((0, M), (k, N)).
        #[arg(long)]
        shift: Option<i64>,
    },
    /// dim Ext^1(M, N) next to the crossing number.
    Ext { m: String, target: String },
    /// Run verification suites; exits nonzero if any check fails.
    Verify {
        /// Suite name, or "all". May be repeated.
        #[arg(long, default_value = "all")]
        suite: Vec<String>,
    },
    /// Enumerate all triangulations.
    Triangulations,
    /// Flip along a script of edges, or along a seeded random walk.
    Flipwalk {
        #[arg(long = "T", short = 't')]
        t: String,
        /// Comma-separated edges to flip in order. An edge not in the
        /// current triangulation flips in from its unique exchange partner.
        #[arg(long, conflicts_with = "steps")]
        script: Option<String>,
        /// Number of random flips.
        #[arg(long)]
        steps: Option<usize>,
    },
    /// Quiver, vanishing paths, dimension vectors and module AR quiver of T.
    Report {
        #[arg(long = "T", short = 't')]
        t: String,
        /// Directory to write the artifacts into instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// AR quiver of the cluster category, or of mod End(T)^op with --T.
    ArQuiver {
        #[arg(long = "T", short = 't')]
        t: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn print_json(v: &impl Serialize) -> Result<()> {
    outln!("{}", serde_json::to_string_pretty(v)?);
    Ok(())
}

fn no_dot(what: &str) -> Result<bool> {
    bail!("--format dot is not available for {what}")
}

fn edge(n: usize, s: &str) -> Result<TaggedEdge> {
    TaggedEdge::parse(n, s).with_context(|| format!("edge {s:?}"))
}

/// Returns whether every requested check passed.
fn run(cli: &Cli) -> Result<bool> {
    let n = cli.n;
    match &cli.command {
        Command::Edges => cmd_edges(cli),
        Command::Crossings => {
            let c = crossing_matrix(n)?;
            match cli.format {
                Format::Text => out!("{}", c.to_text()),
                Format::Json => print_json(&c.to_json())?,
                Format::Dot => return no_dot("crossings"),
            }
            Ok(true)
        }
        Command::Hom { m, target, shift } => cmd_hom(cli, &edge(n, m)?, &edge(n, target)?, *shift),
        Command::Ext { m, target } => {
            let (m, x) = (edge(n, m)?, edge(n, target)?);
            let engine = MeshEngine::new(n)?;
            let ext = engine.ext1_dim(&m, &x)?;
            let cr = crossing_number(&m, &x)?;
            match cli.format {
                Format::Text => outln!("dim Ext1({m}, {x}) = {ext}\ne({m}, {x}) = {cr}"),
                Format::Json => print_json(&json!({"m": m, "target": x, "ext1": ext, "crossing": cr}))?,
                Format::Dot => return no_dot("ext"),
            }
            Ok(ext == cr as usize)
        }
        Command::Verify { suite } => cmd_verify(cli, suite),
        Command::Triangulations => {
            let all = enumerate_triangulations_bounded(n, cli.max_enum)?;
            match cli.format {
                Format::Text => {
                    for t in &all {
                        outln!("{t}");
                    }
                    outln!("{} triangulations", all.len());
                }
                Format::Json => print_json(&json!({"n": n, "count": all.len(), "triangulations": all}))?,
                Format::Dot => return no_dot("triangulations"),
            }
            Ok(true)
        }
        Command::Flipwalk { t, script, steps } => cmd_flipwalk(cli, t, script.as_deref(), *steps),
        Command::Report { t, out } => cmd_report(cli, t, out.as_deref()),
        Command::ArQuiver { t } => cmd_ar_quiver(cli, t.as_deref()),
    }
}

#[derive(Serialize)]
struct EdgeRow {
    index: usize,
    edge: TaggedEdge,
    delta_len: usize,
    position: Position,
    tau: TaggedEdge,
    moves: Vec<TaggedEdge>,
}

fn cmd_edges(cli: &Cli) -> Result<bool> {
    let rows: Vec<EdgeRow> = enumerate_tagged_edges(cli.n)?
        .into_iter()
        .map(|m| EdgeRow {
            index: m.index(),
            edge: m,
            delta_len: m.delta_len(),
            position: m.pos(),
            tau: m.tau(),
            moves: m.elementary_moves(),
        })
        .collect();
    match cli.format {
        Format::Text => {
            outln!("{:>5}  {:<6} {:>3}  {:<8} {:<6} moves", "index", "edge", "|d|", "pos", "tau");
            for r in &rows {
                let moves: Vec<String> = r.moves.iter().map(|x| x.to_string()).collect();
                outln!(
                    "{:>5}  {:<6} {:>3}  {:<8} {:<6} {}",
                    r.index,
                    r.edge.to_string(),
                    r.delta_len,
                    r.position.to_string(),
                    r.tau.to_string(),
                    moves.join(" ")
                );
            }
        }
        Format::Json => print_json(&rows)?,
        Format::Dot => out!("{}", category_dot(&ar_quiver_of_category(cli.n)?)),
    }
    Ok(true)
}

fn path_text(p: &[MeshVertex]) -> String {
    p.iter()
        .map(|v| format!("({},{})", v.shift, v.edge))
        .collect::<Vec<_>>()
        .join(" -> ")
}

fn cmd_hom(cli: &Cli, m: &TaggedEdge, x: &TaggedEdge, shift: Option<i64>) -> Result<bool> {
    let engine = MeshEngine::new(cli.n)?;
    if let Some(k) = shift {
        let d = engine.hom_dim_mesh(m, x, k)?;
        match cli.format {
            Format::Text => outln!("dim Hom((0,{m}), ({k},{x})) = {d}"),
            Format::Json => print_json(&json!({"m": m, "target": x, "shift": k, "dim": d}))?,
            Format::Dot => return no_dot("hom"),
        }
        return Ok(true);
    }
    let space = engine.hom_space(m, x)?;
    let closed = hom_dim_closed_form(m, x)?;
    match cli.format {
        Format::Text => {
            outln!("dim Hom({m}, {x}) = {} (closed form {closed})", space.dim());
            for c in &space.components {
                outln!("  shift {}: dim {}", c.shift, c.dim);
                for p in &c.basis {
                    outln!("    {}", path_text(&p.vertices));
                }
            }
        }
        Format::Json => print_json(&json!({"space": space, "dim": space.dim(), "closed_form": closed}))?,
        Format::Dot => return no_dot("hom"),
    }
    Ok(space.dim() == closed as usize)
}

fn selected_suites(names: &[String]) -> Result<Vec<Suite>> {
    let mut out = Vec::new();
    for s in names {
        if s == "all" {
            out.extend(Suite::ALL);
        } else {
            out.push(s.parse::<Suite>()?);
        }
    }
    out.dedup();
    Ok(out)
}

fn cmd_verify(cli: &Cli, names: &[String]) -> Result<bool> {
    let suites = selected_suites(names)?;
    let reports: Vec<SuiteReport> = suites
        .iter()
        .map(|&s| run_suite(s, cli.n, cli.max_enum))
        .collect::<dn_cluster::Result<_>>()?;
    let passed = reports.iter().all(SuiteReport::passed);
    match cli.format {
        Format::Text => {
            for r in &reports {
                let verdict = if r.passed() { "pass" } else { "FAIL" };
                outln!("{} n={}: {verdict}, {} checked, {}", r.suite, r.n, r.checked, r.summary);
                for f in r.failures.iter().take(20) {
                    outln!("  {f}");
                }
            }
        }
        Format::Json => print_json(&json!({"n": cli.n, "passed": passed, "suites": reports}))?,
        Format::Dot => return no_dot("verify"),
    }
    if !passed {
        let failures: Vec<_> = reports
            .iter()
            .filter(|r| !r.passed())
            .map(|r| json!({"suite": r.suite, "n": r.n, "failures": r.failures}))
            .collect();
        eprintln!("{}", serde_json::to_string(&failures)?);
    }
    Ok(passed)
}

#[derive(Serialize)]
struct FlipStep {
    step: usize,
    exchange: serde_json::Value,
    result: Triangulation,
}

fn cmd_flipwalk(cli: &Cli, t: &str, script: Option<&str>, steps: Option<usize>) -> Result<bool> {
    let n = cli.n;
    let mut t = Triangulation::parse(n, t)?;
    let start = t.clone();
    let engine = MeshEngine::new(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let choices: Vec<Option<TaggedEdge>> = match (script, steps) {
        (Some(s), _) => s
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(|s| edge(n, s.trim()).map(Some))
            .collect::<Result<_>>()?,
        (None, Some(k)) => vec![None; k],
        (None, None) => bail!("flipwalk needs --script or --steps"),
    };
    let mut trace = Vec::new();
    let mut ok = true;
    for (i, choice) in choices.into_iter().enumerate() {
        let m = match choice {
            Some(m) => m,
            None => *t.edges().choose(&mut rng).expect("nonempty triangulation"),
        };
        let m = if t.contains(&m) {
            m
        } else {
            // an edge outside T asks for the flip that brings it in
            match t.edges().iter().find(|x| flip(&t, x).is_ok_and(|(_, nn)| nn == m)) {
                Some(x) => *x,
                None => bail!("step {}: {m} is neither in nor one flip away from the current triangulation {t}", i + 1),
            }
        };
        let ex = exchange_sides(&engine, &t, &m)?;
        let (next, _) = flip(&t, &m)?;
        ok &= ex.crossing == 1 && next.len() == n;
        if cli.format == Format::Text {
            outln!("{:>3}. {}   e = {}", i + 1, ex.relation_text(), ex.crossing);
        }
        trace.push(FlipStep {
            step: i + 1,
            exchange: ex.to_json(),
            result: next.clone(),
        });
        t = next;
    }
    match cli.format {
        Format::Text => {
            outln!("start: {start}");
            outln!("final: {t}");
        }
        Format::Json => print_json(&json!({"n": n, "start": start, "steps": trace, "final": t}))?,
        Format::Dot => return no_dot("flipwalk"),
    }
    Ok(ok)
}

struct Report {
    quiver: QuiverPresentation,
    modules: tilted::ModuleCategoryQuiver,
    loewy: Vec<String>,
}

fn build_report(cli: &Cli, t: &Triangulation) -> Result<Report> {
    let engine = MeshEngine::new(t.n())?;
    let morphisms = quiver_of_triangulation(&engine, t)?;
    // Loewy layers follow the quiver of End(T)^op whatever is displayed
    let op = morphisms.opposite();
    let quiver = if cli.no_op { morphisms } else { op.clone() };
    let quiver = quiver.with_vanishing_paths(&engine, t.n())?;
    let modules = ar_quiver_of_tilted(t)?;
    let arrows = op.arrow_pairs();
    let loewy = modules
        .vertices
        .iter()
        .map(|v| loewy_text(&v.dimvec, &arrows, |i| (i + 1).to_string()))
        .collect();
    Ok(Report { quiver, modules, loewy })
}

fn report_text(r: &Report) -> String {
    let q = &r.quiver;
    let mut s = String::new();
    let algebra = if q.opposite { "End(T)^op" } else { "End(T)" };
    s.push_str(&format!("quiver of {algebra}\n"));
    for (i, v) in q.vertices.iter().enumerate() {
        s.push_str(&format!("  {}: {v}\n", i + 1));
    }
    for (a, b) in q.arrow_pairs() {
        s.push_str(&format!("  {} -> {}\n", a + 1, b + 1));
    }
    let zero: Vec<_> = q.vanishing_paths.iter().filter(|p| p.zero).collect();
    s.push_str(&format!(
        "vanishing paths ({} of {} paths of length >= 2)\n",
        zero.len(),
        q.vanishing_paths.len()
    ));
    for p in zero {
        let vs: Vec<String> = p.vertices.iter().map(|v| (v + 1).to_string()).collect();
        s.push_str(&format!("  {}\n", vs.join(" -> ")));
    }
    s.push_str(&format!("modules ({})\n", r.modules.vertices.len()));
    for (v, l) in r.modules.vertices.iter().zip(&r.loewy) {
        let d: Vec<String> = v.dimvec.coords.iter().map(|c| c.to_string()).collect();
        s.push_str(&format!("  {:<6} ({})  {l}\n", v.edge.to_string(), d.join(",")));
    }
    s.push_str("irreducible maps between modules\n");
    for (a, b) in &r.modules.arrows {
        s.push_str(&format!("  {a} -> {b}\n"));
    }
    s
}

fn report_json(r: &Report) -> serde_json::Value {
    let zero: Vec<_> = r.quiver.vanishing_paths.iter().filter(|p| p.zero).collect();
    let dimvecs: Vec<_> = r
        .modules
        .vertices
        .iter()
        .zip(&r.loewy)
        .map(|(v, l)| json!({"edge": v.edge, "dimvec": v.dimvec, "loewy": l}))
        .collect();
    json!({
        "n": r.modules.n,
        "T": r.modules.t,
        "quiver": r.quiver,
        "vanishing": zero,
        "dimension_vectors": dimvecs,
        "modules": r.modules.to_json(),
    })
}

fn write_file(dir: &Path, name: &str, contents: &str) -> Result<()> {
    let p = dir.join(name);
    fs::write(&p, contents).with_context(|| format!("writing {}", p.display()))
}

fn cmd_report(cli: &Cli, t: &str, out: Option<&Path>) -> Result<bool> {
    let t = Triangulation::parse(cli.n, t)?;
    let r = build_report(cli, &t)?;
    if let Some(dir) = out {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        write_file(dir, "quiver.dot", &quiver_dot(&r.quiver))?;
        write_file(dir, "modules.dot", &module_quiver_dot(&r.modules))?;
        write_file(dir, "report.txt", &report_text(&r))?;
        write_file(dir, "report.json", &serde_json::to_string_pretty(&report_json(&r))?)?;
        write_file(dir, "modules.json", &serde_json::to_string_pretty(&r.modules.to_json())?)?;
        outln!("wrote quiver.dot modules.dot report.txt report.json modules.json to {}", dir.display());
        return Ok(true);
    }
    match cli.format {
        Format::Text => out!("{}", report_text(&r)),
        Format::Json => print_json(&report_json(&r))?,
        Format::Dot => {
            out!("{}", quiver_dot(&r.quiver));
            out!("{}", module_quiver_dot(&r.modules));
        }
    }
    Ok(true)
}

fn cmd_ar_quiver(cli: &Cli, t: Option<&str>) -> Result<bool> {
    match t {
        Some(t) => {
            let t = Triangulation::parse(cli.n, t)?;
            let q = ar_quiver_of_tilted(&t)?;
            match cli.format {
                Format::Text => {
                    for v in &q.vertices {
                        let d: Vec<String> = v.dimvec.coords.iter().map(|c| c.to_string()).collect();
                        outln!("{:<6} ({})", v.edge.to_string(), d.join(","));
                    }
                    for (a, b) in &q.arrows {
                        outln!("{a} -> {b}");
                    }
                    for (a, b) in &q.tau {
                        outln!("tau {a} = {b}");
                    }
                }
                Format::Json => print_json(&q.to_json())?,
                Format::Dot => out!("{}", module_quiver_dot(&q)),
            }
            Ok(q.mesh_additivity_violations().is_empty())
        }
        None => {
            let q = ar_quiver_of_category(cli.n)?;
            match cli.format {
                Format::Text => {
                    for (a, b) in &q.arrows {
                        outln!("{a} -> {b}");
                    }
                    for (a, b) in &q.tau {
                        outln!("tau {a} = {b}");
                    }
                }
                Format::Json => print_json(&q)?,
                Format::Dot => out!("{}", category_dot(&q)),
            }
            Ok(q.translation_violations().is_empty())
        }
    }
}
