//! `twoclub` command-line driver.
//!
//! Exit status: 0 when everything checked out, 1 when a verification failed
//! (a disagreeing sweep row, a certificate or forward image that does not
//! verify, a solver mismatch), 2 on usage, parse or guard errors.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use twoclub::reduction::target_size_formula;
use twoclub::report::{Report, Solution};
use twoclub::solvers::find_s_club_of_size;
use twoclub::sweep::{
    graph_from_mask, map_maybe_parallel, pair_count, run_equivalence_sweep, EquivalenceRow,
    SweepOptions,
};
use twoclub::{
    brute_force_max_clique, brute_force_max_s_club, emit_graph, extract_clique, forward_map,
    is_s_club, max_clique, max_s_club, min_deletion_to_s_club_cluster, parse_graph_auto, reduce,
    target_size, validate_gadget, verify_deletion, Graph, GraphFormat, SolveResult,
};

/// Largest source graph `verify` will solve the gadget for without
/// `--guard-override` (178-vertex gadget).
const VERIFY_GUARD: usize = 5;
/// Largest vertex count for `oracle-check --exhaustive` without override.
const EXHAUSTIVE_GUARD: usize = 6;

#[derive(Debug, Parser)]
#[command(name = "twoclub", version, about = "Exact 2-club / clique solvers and gadget checks")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
struct Common {
    /// Write a JSON report to this path
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    /// Worker threads for sweeps and oracle checks
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    /// Seed for random corpora
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Lift the default size guards
    #[arg(long, global = true)]
    guard_override: bool,
    /// Record wall-clock time in reports (makes them non-reproducible)
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Dimacs,
    Edgelist,
}

impl From<FormatArg> for GraphFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Dimacs => GraphFormat::Dimacs,
            FormatArg::Edgelist => GraphFormat::EdgeList,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum EngineArg {
    Branching,
    Brute,
}

impl From<EngineArg> for twoclub::sweep::Engine {
    fn from(e: EngineArg) -> Self {
        match e {
            EngineArg::Branching => twoclub::sweep::Engine::Branching,
            EngineArg::Brute => twoclub::sweep::Engine::Brute,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build the 2-club gadget of a source graph
    Reduce {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Role sidecar, one `<id> <role>` line per vertex
        #[arg(long)]
        roles: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "dimacs")]
        format: FormatArg,
    },
    /// Maximum clique
    SolveClique {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "branching")]
        engine: EngineArg,
    },
    /// Maximum s-club (s = 2 unless --s is given)
    #[command(name = "solve-2club")]
    Solve2Club {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 2)]
        s: usize,
        #[arg(long, value_enum, default_value = "branching")]
        engine: EngineArg,
    },
    /// Check both directions of the reduction for one source graph and k
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        /// Clique size; k <= 0 is trivially yes, k > n compares against the formula target
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
    },
    /// Check the equivalence for every labeled source graph on n vertices
    Sweep {
        /// Source vertex count (at most 3 with the branching engine, 2 with brute)
        #[arg(long)]
        n: usize,
        /// Smallest k to check [default: 1]
        #[arg(long)]
        k_min: Option<usize>,
        /// Largest k to check [default: n]
        #[arg(long)]
        k_max: Option<usize>,
        #[arg(long, value_enum, default_value = "branching")]
        engine: EngineArg,
        #[arg(long, hide = true, default_value_t = 0, allow_negative_numbers = true)]
        target_offset: isize,
    },
    /// Minimum vertex deletion to an s-club cluster graph
    Distance {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 2)]
        s: usize,
        /// Largest deletion set to try (at most 4)
        #[arg(long, default_value_t = 2)]
        dmax: usize,
    },
    /// Cross-check the branching solvers against exhaustive search
    OracleCheck {
        /// Random graphs to test
        #[arg(long, default_value_t = 500)]
        count: usize,
        #[arg(long, default_value_t = 8)]
        min_n: usize,
        #[arg(long, default_value_t = 16)]
        max_n: usize,
        /// Test every labeled graph on this many vertices instead
        #[arg(long)]
        exhaustive: Option<usize>,
    },
}

/// What a subcommand concluded.
enum Verdict {
    Ok,
    Failed(String),
}

struct Session {
    report: Report,
    common: Common,
}

impl Session {
    fn stats(&mut self, nodes: u64, elapsed: std::time::Duration) {
        self.report.stats.nodes_explored += nodes;
        if self.common.timing {
            self.report.stats.elapsed_ms += elapsed.as_millis() as u64;
        }
    }

    fn add_solution(&mut self, problem: &str, r: &SolveResult) {
        self.report.solutions.push(Solution::from_result(problem, r));
        self.stats(r.nodes_explored, r.elapsed);
    }
}

pub fn cli_main<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(Verdict::Ok) => ExitCode::SUCCESS,
        Ok(Verdict::Failed(why)) => {
            eprintln!("verification failed: {why}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn read_graph(path: &Path) -> anyhow::Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_graph_auto(&text).with_context(|| format!("parsing {}", path.display()))
}

fn write_file(path: &Path, text: &str) -> anyhow::Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn run(cli: Cli) -> anyhow::Result<Verdict> {
    let name = command_name(&cli.command);
    let mut ctx = Session {
        report: Report::new(name),
        common: cli.common,
    };
    let verdict = match cli.command {
        Command::Reduce {
            input,
            out,
            roles,
            format,
        } => cmd_reduce(&input, &out, roles.as_deref(), format.into())?,
        Command::SolveClique { input, engine } => cmd_solve_clique(&mut ctx, &input, engine)?,
        Command::Solve2Club { input, s, engine } => cmd_solve_club(&mut ctx, &input, s, engine)?,
        Command::Verify { input, k } => cmd_verify(&mut ctx, &input, k)?,
        Command::Sweep {
            n,
            k_min,
            k_max,
            engine,
            target_offset,
        } => cmd_sweep(&mut ctx, n, k_min, k_max, engine, target_offset)?,
        Command::Distance { input, s, dmax } => cmd_distance(&mut ctx, &input, s, dmax)?,
        Command::OracleCheck {
            count,
            min_n,
            max_n,
            exhaustive,
        } => cmd_oracle_check(&mut ctx, count, min_n, max_n, exhaustive)?,
    };
    if let Some(path) = &ctx.common.json {
        let mut text = serde_json::to_string_pretty(&ctx.report)?;
        text.push('\n');
        write_file(path, &text)?;
    }
    Ok(verdict)
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Reduce { .. } => "reduce",
        Command::SolveClique { .. } => "solve-clique",
        Command::Solve2Club { .. } => "solve-2club",
        Command::Verify { .. } => "verify",
        Command::Sweep { .. } => "sweep",
        Command::Distance { .. } => "distance",
        Command::OracleCheck { .. } => "oracle-check",
    }
}

fn format_set(ids: &[usize]) -> String {
    let parts: Vec<String> = ids.iter().map(usize::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

fn cmd_reduce(
    input: &Path,
    out: &Path,
    roles: Option<&Path>,
    format: GraphFormat,
) -> anyhow::Result<Verdict> {
    let h = read_graph(input)?;
    let inst = reduce(&h)?;
    write_file(out, &emit_graph(&inst.graph, format))?;
    if let Some(path) = roles {
        write_file(path, &inst.layout.emit_roles())?;
    }
    println!(
        "gadget: {} vertices, {} edges (source n = {})",
        inst.graph.n_vertices(),
        inst.graph.n_edges(),
        inst.n
    );
    Ok(Verdict::Ok)
}

fn cmd_solve_clique(ctx: &mut Session, input: &Path, engine: EngineArg) -> anyhow::Result<Verdict> {
    let g = read_graph(input)?;
    let r = match engine {
        EngineArg::Branching => max_clique(&g)?,
        EngineArg::Brute => brute_force_max_clique(&g)?,
    };
    println!("max clique: {} {}", r.best_size, format_set(&r.best_set));
    ctx.add_solution("clique", &r);
    Ok(Verdict::Ok)
}

fn cmd_solve_club(
    ctx: &mut Session,
    input: &Path,
    s: usize,
    engine: EngineArg,
) -> anyhow::Result<Verdict> {
    let g = read_graph(input)?;
    let r = match engine {
        EngineArg::Branching => max_s_club(&g, s)?,
        EngineArg::Brute => brute_force_max_s_club(&g, s)?,
    };
    println!("max {s}-club: {} {}", r.best_size, format_set(&r.best_set));
    ctx.add_solution(&format!("{s}-club"), &r);
    Ok(Verdict::Ok)
}

fn cmd_verify(ctx: &mut Session, input: &Path, k: i64) -> anyhow::Result<Verdict> {
    let h = read_graph(input)?;
    let n = h.n_vertices();
    let inst = reduce(&h)?;
    let mut failures = Vec::new();
    if let Err(v) = validate_gadget(&inst) {
        failures.push(format!("gadget invalid: {v}"));
    }

    let l = inst.layout;
    let hubs = [l.special_a(), l.special_b()];
    let cert_ok = verify_deletion(&inst.graph, &hubs, 2)?;
    ctx.report.add_certificate(&hubs);
    println!("certificate {{a, b}} = {}: {}", format_set(&hubs), pass(cert_ok));
    if !cert_ok {
        failures.push("deletion certificate {a, b} does not verify".into());
    }

    let omega = max_clique(&h)?;
    ctx.add_solution("clique", &omega);
    println!("omega(H) = {} {}", omega.best_size, format_set(&omega.best_set));

    if k <= 0 {
        println!("k = {k} <= 0: both sides trivially yes");
        ctx.report.rows.push(EquivalenceRow {
            h_id: mask_or_zero(&h),
            n,
            k: 0,
            omega: omega.best_size,
            target: 0,
            max_2club: 0,
            clique_yes: true,
            club_yes: true,
            agree: true,
            formula_consistent: true,
            decision_yes: None,
        });
        return Ok(verdict_from(failures));
    }
    let k = k as usize;
    if n > VERIFY_GUARD && !ctx.common.guard_override {
        bail!("source has {n} vertices; gadget solving is guarded at {VERIFY_GUARD} (use --guard-override)");
    }

    let club = max_s_club(&inst.graph, 2)?;
    ctx.add_solution("2-club", &club);
    let formula_consistent = club.best_size == target_size_formula(n, omega.best_size);

    let (target, clique_yes, decision_yes) = if k > n {
        let target = target_size_formula(n, k);
        println!("k = {k} > n = {n}: clique side trivially no; formula target {target}");
        (target, false, None)
    } else {
        let target = target_size(n, k)?;
        let clique_yes = omega.best_size >= k;
        if clique_yes {
            let s = &omega.best_set[..k];
            let image = forward_map(&inst, s)?;
            let ok = image.len() == target && is_s_club(&inst.graph, &image, 2)?;
            println!("forward image of {}: {} vertices, 2-club: {}", format_set(s), image.len(), pass(ok));
            if !ok {
                failures.push("forward image is not a 2-club of the target size".into());
            }
        }
        let found = find_s_club_of_size(&inst.graph, 2, target)?;
        if let Some(r) = &found {
            ctx.stats(r.nodes_explored, r.elapsed);
            let back = extract_clique(&inst, &r.best_set);
            let ok = back.len() >= k && h.first_non_edge(&back).is_none();
            println!("extracted clique {}: {}", format_set(&back), pass(ok));
            if !ok {
                failures.push("2-club above target does not map back to a k-clique".into());
            }
        }
        (target, clique_yes, Some(found.is_some()))
    };

    let club_yes = club.best_size >= target;
    let row = EquivalenceRow {
        h_id: mask_or_zero(&h),
        n,
        k,
        omega: omega.best_size,
        target,
        max_2club: club.best_size,
        clique_yes,
        club_yes,
        agree: clique_yes == club_yes,
        formula_consistent,
        decision_yes,
    };
    println!(
        "n = {n}, k = {k}: target {target}, max 2-club {}, clique {} / club {} -> {}",
        club.best_size,
        yes_no(clique_yes),
        yes_no(club_yes),
        if row.verified() { "agree" } else { "DISAGREE" }
    );
    if !row.verified() {
        failures.push(format!("equivalence row failed: {row:?}"));
    }
    ctx.report.rows.push(row);
    Ok(verdict_from(failures))
}

/// Source graphs too large for a 64-bit edge mask report id 0.
fn mask_or_zero(h: &Graph) -> u64 {
    if pair_count(h.n_vertices()) <= 64 {
        twoclub::sweep::mask_of_graph(h)
    } else {
        0
    }
}

fn cmd_sweep(
    ctx: &mut Session,
    n: usize,
    k_min: Option<usize>,
    k_max: Option<usize>,
    engine: EngineArg,
    target_offset: isize,
) -> anyhow::Result<Verdict> {
    let ks = k_min.unwrap_or(1)..=k_max.unwrap_or(n);
    let options = SweepOptions {
        engine: engine.into(),
        guard_override: ctx.common.guard_override,
        threads: ctx.common.threads,
        target_offset,
    };
    let outcome = run_equivalence_sweep(n, ks, &options)?;
    println!("h_id\tk\tomega\ttarget\tmax_2club\tclique\tclub\tagree");
    for r in &outcome.rows {
        println!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            r.h_id,
            r.k,
            r.omega,
            r.target,
            r.max_2club,
            yes_no(r.clique_yes),
            yes_no(r.club_yes),
            if r.verified() { "yes" } else { "NO" }
        );
    }
    let bad = outcome.rows.iter().filter(|r| !r.verified()).count();
    println!("{} rows, {} failed", outcome.rows.len(), bad);
    ctx.stats(outcome.nodes_explored, outcome.elapsed);
    ctx.report.rows = outcome.rows;
    Ok(if bad == 0 {
        Verdict::Ok
    } else {
        Verdict::Failed(format!("{bad} sweep rows disagree"))
    })
}

fn cmd_distance(ctx: &mut Session, input: &Path, s: usize, dmax: usize) -> anyhow::Result<Verdict> {
    let g = read_graph(input)?;
    match min_deletion_to_s_club_cluster(&g, s, dmax)? {
        Some(cert) => {
            let ok = cert.verify(&g)?;
            println!(
                "distance to {s}-club cluster: {} via {} ({})",
                cert.deleted.len(),
                format_set(&cert.deleted),
                pass(ok)
            );
            ctx.report.add_certificate(&cert.deleted);
            if !ok {
                return Ok(Verdict::Failed("certificate does not re-verify".into()));
            }
        }
        None => println!("distance to {s}-club cluster exceeds {dmax}"),
    }
    Ok(Verdict::Ok)
}

#[derive(Debug)]
struct OracleMismatch {
    graph: String,
    s: usize,
    branching: usize,
    brute: usize,
}

fn oracle_compare(g: &Graph) -> twoclub::Result<(Vec<OracleMismatch>, u64)> {
    let mut mismatches = Vec::new();
    let omega = max_clique(g)?;
    let brute_omega = brute_force_max_clique(g)?;
    let mut nodes = omega.nodes_explored;
    let describe = |s, a, b| OracleMismatch {
        graph: emit_graph(g, GraphFormat::EdgeList),
        s,
        branching: a,
        brute: b,
    };
    if omega.best_size != brute_omega.best_size {
        mismatches.push(describe(0, omega.best_size, brute_omega.best_size));
    }
    for s in 1..=3 {
        let fast = max_s_club(g, s)?;
        nodes += fast.nodes_explored;
        let slow = brute_force_max_s_club(g, s)?;
        if fast.best_size != slow.best_size {
            mismatches.push(describe(s, fast.best_size, slow.best_size));
        }
        if s == 1 && fast.best_size != omega.best_size {
            mismatches.push(describe(1, fast.best_size, omega.best_size));
        }
    }
    Ok((mismatches, nodes))
}

fn cmd_oracle_check(
    ctx: &mut Session,
    count: usize,
    min_n: usize,
    max_n: usize,
    exhaustive: Option<usize>,
) -> anyhow::Result<Verdict> {
    let graphs: Vec<Graph> = match exhaustive {
        Some(n) => {
            if n > EXHAUSTIVE_GUARD && !ctx.common.guard_override {
                bail!("exhaustive check is guarded at {EXHAUSTIVE_GUARD} vertices (use --guard-override)");
            }
            if n == 0 || pair_count(n) >= 64 {
                bail!("--exhaustive must be between 1 and 11");
            }
            (0..1u64 << pair_count(n)).map(|m| graph_from_mask(n, m)).collect()
        }
        None => {
            if min_n == 0 || min_n > max_n {
                bail!("need 1 <= --min-n <= --max-n");
            }
            let mut rng = ChaCha8Rng::seed_from_u64(ctx.common.seed);
            (0..count)
                .map(|_| {
                    let n = rng.gen_range(min_n..=max_n);
                    let p: f64 = rng.gen_range(0.15..0.7);
                    let edges: Vec<(usize, usize)> = (0..n)
                        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                        .filter(|_| rng.gen_bool(p))
                        .collect();
                    Graph::new(n, edges).expect("valid random graph")
                })
                .collect()
        }
    };
    let results = map_maybe_parallel(&graphs, ctx.common.threads, oracle_compare);
    let mut mismatches = Vec::new();
    for r in results {
        let (m, nodes) = r?;
        ctx.stats(nodes, Default::default());
        mismatches.extend(m);
    }
    println!(
        "{} graphs checked for s in {{1, 2, 3}} and max clique: {} mismatches",
        graphs.len(),
        mismatches.len()
    );
    for m in mismatches.iter().take(5) {
        println!("mismatch at s={} (0 = clique): branching {} vs {}\n{}", m.s, m.branching, m.brute, m.graph);
    }
    Ok(if mismatches.is_empty() {
        Verdict::Ok
    } else {
        Verdict::Failed(format!("{} oracle mismatches", mismatches.len()))
    })
}

fn verdict_from(failures: Vec<String>) -> Verdict {
    if failures.is_empty() {
        Verdict::Ok
    } else {
        Verdict::Failed(failures.join("; "))
    }
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAILED"
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
