//! Command-line front end: classify formulas, search for diverse or
//! dissimilar pairs, build k-tuples, generate instances and cross-check
//! solvers against brute force.

pub mod input;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use divsat::dissimilar::dissimilar_pair_2sat;
use divsat::diverse::{
    diverse_pair_double_horn, diverse_pair_xp, k_diverse_double_horn, DiversePairResult,
    SearchStats,
};
use divsat::formula::dimacs::{emit_dimacs, emit_xdimacs};
use divsat::formula::{classify, eval, Assignment, CnfFormula, FormulaClassSet};
use divsat::graph::{emit_dimacs_graph, parse_dimacs_graph, Graph};
use divsat::oracle::{max_hamming_pair, max_induced_bipartite_bruteforce, OracleCaps};
use divsat::reductions::{
    emit_set_system, graph_to_2cnf, random_instance, set_splitting_to_cnf, GenParams, Instance,
    InstanceKind, Polarity, SetSystem,
};
use divsat::sat::{gauss_solve, solve_2sat, solve_dual_horn, solve_horn};
use divsat::xor::{dissimilar_pair_xor, diverse_pair_xor, xor_to_system, KernelSearchConfig};
use divsat::Error;

pub use input::{load, parse_formula, Loaded};
pub use report::{Params, RunReport, Stats, Status};

#[derive(Debug, Parser)]
#[command(
    name = "divsat",
    version,
    about = "Diverse and dissimilar pairs of satisfying assignments"
)]
pub struct Cli {
    /// Print a JSON report instead of a summary line.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for parallel searches.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report the syntactic classes of a formula.
    Classify { input: PathBuf },
    /// Search for a pair at distance >= d (diverse) or >= n - s (dissimilar).
    Solve {
        input: PathBuf,
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        /// Force a dispatch path instead of the detected class.
        #[arg(long, value_enum)]
        class: Option<ClassArg>,
        /// Largest XOR kernel dimension enumerated.
        #[arg(long)]
        cap: Option<usize>,
        /// Split XOR kernel enumeration into two halves.
        #[arg(long)]
        meet_in_middle: bool,
    },
    /// Maximize the summed pairwise distance of k solutions (double Horn).
    KDiverse {
        input: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Write a seeded random instance.
    Gen {
        #[arg(value_enum)]
        kind: GenKind,
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value_t = 10)]
        m: usize,
        /// Widest clause or set.
        #[arg(long, default_value_t = 3)]
        width: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Keep only clauses satisfied by a hidden assignment.
        #[arg(long)]
        planted: bool,
        #[arg(long, conflicts_with = "monotone")]
        antimonotone: bool,
        #[arg(long)]
        monotone: bool,
        /// Graph file (DIMACS edge list) for graph-2cnf.
        #[arg(long)]
        from: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run the solver and brute force side by side.
    Check {
        input: PathBuf,
        #[arg(long, value_enum)]
        mode: Mode,
        /// Single threshold; all of 0..=n when omitted.
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long, value_enum)]
        class: Option<ClassArg>,
        /// Largest variable count scanned by brute force.
        #[arg(long)]
        cap: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Diverse,
    Dissimilar,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ClassArg {
    #[value(name = "2cnf")]
    TwoCnf,
    Horn,
    DualHorn,
    DoubleHorn,
    Xor,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    #[value(name = "2cnf")]
    TwoCnf,
    Horn,
    DualHorn,
    DoubleHorn,
    Xor,
    Graph,
    Sets,
    SetSplitting,
    #[value(name = "graph-2cnf")]
    Graph2Cnf,
}

impl ClassArg {
    fn label(self) -> &'static str {
        match self {
            ClassArg::TwoCnf => "2cnf",
            ClassArg::Horn => "horn",
            ClassArg::DualHorn => "dual-horn",
            ClassArg::DoubleHorn => "double-horn",
            ClassArg::Xor => "xor",
        }
    }

    fn holds(self, c: &FormulaClassSet) -> bool {
        match self {
            ClassArg::TwoCnf => c.is_2cnf(),
            ClassArg::Horn => c.horn,
            ClassArg::DualHorn => c.dual_horn,
            ClassArg::DoubleHorn => c.double_horn,
            ClassArg::Xor => false,
        }
    }
}

/// Most specific supported class of a CNF formula.
fn detect(c: &FormulaClassSet) -> Option<ClassArg> {
    [
        ClassArg::DoubleHorn,
        ClassArg::Horn,
        ClassArg::DualHorn,
        ClassArg::TwoCnf,
    ]
    .into_iter()
    .find(|k| k.holds(c))
}

/// Algorithm chosen for a solve request.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    Xp,
    DoubleHorn,
    Xor,
    Dissimilar2Sat,
    DissimilarXor,
}

/// Picks the algorithm, or explains why the request is unsupported.
pub fn route(
    loaded: &Loaded,
    mode: Mode,
    forced: Option<ClassArg>,
) -> std::result::Result<(Route, ClassArg), String> {
    let class = match loaded {
        Loaded::Xor { .. } => match forced {
            None | Some(ClassArg::Xor) => ClassArg::Xor,
            Some(other) => return Err(format!("an XOR formula is not {}", other.label())),
        },
        Loaded::Cnf(phi) => {
            let flags = classify(phi);
            match forced {
                Some(ClassArg::Xor) => return Err("a CNF formula is not xor".into()),
                Some(k) if !k.holds(&flags) => {
                    return Err(format!("formula ({flags}) is not {}", k.label()))
                }
                Some(k) => k,
                None => detect(&flags)
                    .ok_or_else(|| format!("no supported class for a formula of class {flags}"))?,
            }
        }
    };
    let route = match (mode, class) {
        (Mode::Diverse, ClassArg::Xor) => Route::Xor,
        (Mode::Dissimilar, ClassArg::Xor) => Route::DissimilarXor,
        (_, ClassArg::DoubleHorn) => Route::DoubleHorn,
        (Mode::Diverse, _) => Route::Xp,
        (Mode::Dissimilar, ClassArg::TwoCnf) => Route::Dissimilar2Sat,
        (Mode::Dissimilar, ClassArg::Horn | ClassArg::DualHorn) => {
            let is_2cnf = matches!(loaded, Loaded::Cnf(phi) if classify(phi).is_2cnf());
            if is_2cnf && forced.is_none() {
                Route::Dissimilar2Sat
            } else {
                return Err(format!(
                    "dissimilar pairs of {} formulas are NP-hard already for s = 0",
                    class.label()
                ));
            }
        }
    };
    let class = if route == Route::Dissimilar2Sat {
        ClassArg::TwoCnf
    } else {
        class
    };
    Ok((route, class))
}

/// Solver signature used by `check`, so tests can substitute a faulty one.
pub type SolveFn<'a> = &'a dyn Fn(&Loaded, Mode, usize) -> Result<DiversePairResult>;

/// The production solver with automatic dispatch.
pub fn solve_auto(loaded: &Loaded, mode: Mode, threshold: usize) -> Result<DiversePairResult> {
    solve_with(loaded, mode, threshold, None, KernelSearchConfig::default())
}

fn solve_with(
    loaded: &Loaded,
    mode: Mode,
    threshold: usize,
    forced: Option<ClassArg>,
    cfg: KernelSearchConfig,
) -> Result<DiversePairResult> {
    let (route, _) =
        route(loaded, mode, forced).map_err(|m| anyhow!(Error::UnsupportedClass(m)))?;
    let n = loaded.num_vars();
    let dissimilar_d = n.saturating_sub(threshold);
    let none = || DiversePairResult {
        pair: None,
        distance: 0,
        stats: SearchStats::default(),
    };
    Ok(match (route, loaded) {
        (Route::Xp, Loaded::Cnf(phi)) => diverse_pair_xp(phi, threshold)?,
        (Route::DoubleHorn, Loaded::Cnf(phi)) => {
            let d = if mode == Mode::Diverse {
                threshold
            } else {
                dissimilar_d
            };
            diverse_pair_double_horn(phi, d)?
        }
        (Route::Dissimilar2Sat, Loaded::Cnf(phi)) => dissimilar_pair_2sat(phi, threshold)?,
        (Route::Xor, Loaded::Xor { phi, consistent }) => {
            if !consistent {
                none()
            } else {
                diverse_pair_xor(phi, threshold, cfg)?
            }
        }
        (Route::DissimilarXor, Loaded::Xor { phi, consistent }) => {
            if !consistent {
                none()
            } else {
                dissimilar_pair_xor(phi, threshold)?
            }
        }
        _ => unreachable!("route matches the input kind"),
    })
}

fn satisfiable(loaded: &Loaded) -> Result<Option<bool>> {
    Ok(match loaded {
        Loaded::Xor { phi, consistent } => {
            Some(*consistent && gauss_solve(&xor_to_system(phi)).particular.is_some())
        }
        Loaded::Cnf(phi) => {
            let c = classify(phi);
            if c.horn {
                Some(solve_horn(phi)?.is_some())
            } else if c.dual_horn {
                Some(solve_dual_horn(phi)?.is_some())
            } else if c.is_2cnf() {
                Some(solve_2sat(phi)?.is_some())
            } else {
                None
            }
        }
    })
}

fn holds(loaded: &Loaded, alpha: &Assignment) -> Result<bool> {
    Ok(match loaded {
        Loaded::Cnf(phi) => eval(phi, alpha)?,
        Loaded::Xor { phi, consistent } => *consistent && eval(phi, alpha)?,
    })
}

fn class_text(loaded: &Loaded) -> String {
    match loaded {
        Loaded::Cnf(phi) => classify(phi).to_string(),
        Loaded::Xor { .. } => "xor".into(),
    }
}

fn error_kind_status(e: &anyhow::Error) -> Status {
    match e.downcast_ref::<Error>() {
        Some(Error::UnsupportedClass(_)) => Status::UnsupportedClass,
        _ => Status::Error,
    }
}

fn mode_params(mode: Mode, d: Option<usize>, s: Option<usize>, n: usize) -> Params {
    Params {
        mode: Some(
            match mode {
                Mode::Diverse => "diverse",
                Mode::Dissimilar => "dissimilar",
            }
            .into(),
        ),
        d,
        s,
        num_vars: n,
        ..Params::default()
    }
}

fn threshold(mode: Mode, d: Option<usize>, s: Option<usize>) -> Result<usize> {
    match mode {
        Mode::Diverse => d.ok_or_else(|| anyhow!("--d is required in diverse mode")),
        Mode::Dissimilar => s.ok_or_else(|| anyhow!("--s is required in dissimilar mode")),
    }
}

fn cmd_solve(
    path: &Path,
    mode: Mode,
    d: Option<usize>,
    s: Option<usize>,
    forced: Option<ClassArg>,
    cfg: KernelSearchConfig,
) -> RunReport {
    let start = Instant::now();
    let loaded = match load(path) {
        Ok(l) => l,
        Err(e) => {
            return RunReport::new(Status::Error, Params::default()).with_message(format!("{e:#}"))
        }
    };
    let mut params = mode_params(mode, d, s, loaded.num_vars());
    let t = match threshold(mode, d, s) {
        Ok(t) => t,
        Err(e) => return RunReport::new(Status::Error, params).with_message(e.to_string()),
    };
    let (_, class) = match route(&loaded, mode, forced) {
        Ok(r) => r,
        Err(msg) => {
            params.class = Some(class_text(&loaded));
            return RunReport::new(Status::UnsupportedClass, params).with_message(msg);
        }
    };
    params.class = Some(class.label().into());
    let outcome = solve_with(&loaded, mode, t, forced, cfg);
    let mut report = match outcome {
        Err(e) => RunReport::new(error_kind_status(&e), params).with_message(format!("{e:#}")),
        Ok(r) => {
            let mut report = match &r.pair {
                Some((a1, a2)) => {
                    let mut rep = RunReport::new(Status::Found, params);
                    rep.distance = Some(r.distance as u64);
                    rep.alpha1 = Some(a1.to_string());
                    rep.alpha2 = Some(a2.to_string());
                    rep
                }
                None => {
                    let status = match satisfiable(&loaded) {
                        Ok(Some(false)) => Status::Unsat,
                        _ => Status::NotFound,
                    };
                    RunReport::new(status, params)
                }
            };
            report.stats.branches = r.stats.branches;
            report.stats.guesses = r.stats.guesses;
            report
        }
    };
    report.stats.elapsed_ms = start.elapsed().as_millis() as u64;
    report
}

fn cmd_k_diverse(path: &Path, k: usize) -> RunReport {
    let start = Instant::now();
    let loaded = match load(path) {
        Ok(l) => l,
        Err(e) => {
            return RunReport::new(Status::Error, Params::default()).with_message(format!("{e:#}"))
        }
    };
    let mut params = Params {
        k: Some(k),
        num_vars: loaded.num_vars(),
        class: Some(class_text(&loaded)),
        ..Params::default()
    };
    let Loaded::Cnf(phi) = &loaded else {
        return RunReport::new(Status::UnsupportedClass, params)
            .with_message("k-diverse needs a double Horn formula");
    };
    if !classify(phi).double_horn {
        return RunReport::new(Status::UnsupportedClass, params)
            .with_message("k-diverse needs a double Horn formula");
    }
    params.class = Some("double-horn".into());
    let mut report = match k_diverse_double_horn(phi, k) {
        Ok(r) => {
            let mut rep = RunReport::new(Status::Found, params);
            rep.distance = Some(r.objective);
            rep.tuple = Some(r.assignments.iter().map(ToString::to_string).collect());
            rep
        }
        Err(Error::Unsatisfiable) => RunReport::new(Status::Unsat, params),
        Err(e) => RunReport::new(Status::Error, params).with_message(e.to_string()),
    };
    report.stats.elapsed_ms = start.elapsed().as_millis() as u64;
    report
}

/// Solver-versus-oracle comparison over one or all thresholds.
pub fn check_report(
    loaded: &Loaded,
    mode: Mode,
    thresholds: &[usize],
    caps: &OracleCaps,
    solver: SolveFn<'_>,
) -> RunReport {
    let start = Instant::now();
    let n = loaded.num_vars();
    let mut params = mode_params(mode, None, None, n);
    params.class = Some(class_text(loaded));
    let best = match loaded {
        Loaded::Cnf(phi) => max_hamming_pair(phi, caps),
        Loaded::Xor { phi, consistent } => {
            max_hamming_pair(phi, caps).map(|b| b.filter(|_| *consistent))
        }
    };
    let best = match best {
        Ok(b) => b.map(|(_, d)| d),
        Err(e) => return RunReport::new(Status::Error, params).with_message(e.to_string()),
    };
    let mut guesses = 0;
    let mut branches = 0;
    for &t in thresholds {
        let required = match mode {
            Mode::Diverse => t,
            Mode::Dissimilar => n.saturating_sub(t),
        };
        let expected = best.is_some_and(|b| b >= required);
        let got = match solver(loaded, mode, t) {
            Ok(r) => r,
            Err(e) => {
                return RunReport::new(error_kind_status(&e), params).with_message(format!("{e:#}"))
            }
        };
        guesses += got.stats.guesses;
        branches += got.stats.branches;
        let valid = match &got.pair {
            None => true,
            Some((a1, a2)) => {
                holds(loaded, a1).unwrap_or(false)
                    && holds(loaded, a2).unwrap_or(false)
                    && a1
                        .hamming(a2)
                        .is_ok_and(|d| d >= required && d == got.distance)
            }
        };
        if got.found() != expected || !valid {
            let pair = got
                .pair
                .as_ref()
                .map(|(a1, a2)| format!(" ({a1}, {a2})"))
                .unwrap_or_default();
            let rep = RunReport::new(Status::Disagree, params).with_message(format!(
                "threshold {t}: solver {}{pair}, brute force {}",
                if !valid {
                    "returned an invalid pair"
                } else if got.found() {
                    "found a pair"
                } else {
                    "found none"
                },
                if expected {
                    "found a pair"
                } else {
                    "found none"
                }
            ));
            return rep;
        }
    }
    let mut rep = RunReport::new(Status::Agree, params).with_message(format!(
        "{} threshold(s) checked, max distance {}",
        thresholds.len(),
        best.map_or("none".to_string(), |b| b.to_string())
    ));
    rep.stats = Stats {
        elapsed_ms: start.elapsed().as_millis() as u64,
        branches,
        guesses,
    };
    rep
}

fn cmd_check(
    path: &Path,
    mode: Mode,
    d: Option<usize>,
    s: Option<usize>,
    forced: Option<ClassArg>,
    cap: Option<usize>,
) -> RunReport {
    let loaded = match load(path) {
        Ok(l) => l,
        Err(e) => {
            return RunReport::new(Status::Error, Params::default()).with_message(format!("{e:#}"))
        }
    };
    let n = loaded.num_vars();
    let single = match mode {
        Mode::Diverse => d,
        Mode::Dissimilar => s,
    };
    let thresholds: Vec<usize> = match single {
        Some(t) => vec![t],
        None => (0..=n).collect(),
    };
    let caps = OracleCaps {
        max_vars: cap.unwrap_or(OracleCaps::default().max_vars),
        ..OracleCaps::default()
    };
    let solver =
        |l: &Loaded, m: Mode, t: usize| solve_with(l, m, t, forced, KernelSearchConfig::default());
    let mut rep = check_report(&loaded, mode, &thresholds, &caps, &solver);
    rep.params.d = d;
    rep.params.s = s;
    rep
}

fn set_splittable(ss: &SetSystem) -> Option<bool> {
    let u = ss.universe_size();
    (u <= 20).then(|| {
        (0u64..1 << u).any(|mask| {
            let side = Assignment::from_bools((0..u).map(|i| mask >> i & 1 == 1));
            ss.is_split_by(&side)
        })
    })
}

#[allow(clippy::too_many_arguments)]
fn cmd_gen(
    kind: GenKind,
    n: usize,
    m: usize,
    width: usize,
    seed: u64,
    planted: bool,
    monotone: bool,
    from: Option<&Path>,
) -> Result<(String, Vec<String>)> {
    let params = GenParams {
        num_vars: n,
        num_clauses: m,
        max_width: width,
        planted,
    };
    let polarity = if monotone {
        Polarity::Monotone
    } else {
        Polarity::Antimonotone
    };
    let header = |meta: &[String]| {
        let name = kind
            .to_possible_value()
            .map(|v| v.get_name().to_string())
            .unwrap_or_default();
        let mut out = format!("c generated by divsat gen {name} n={n} m={m} seed={seed}\n");
        for line in meta {
            out.push_str(&format!("c {line}\n"));
        }
        out
    };
    let simple = |k: InstanceKind| -> Result<String> {
        Ok(match random_instance(k, params, seed)? {
            Instance::Cnf(phi) => emit_dimacs(&phi),
            Instance::Xor(phi) => emit_xdimacs(&phi),
            Instance::Graph(g) => emit_dimacs_graph(&g, &[]),
            Instance::Sets(ss) => emit_set_system(&ss),
        })
    };
    let (body, meta) = match kind {
        GenKind::TwoCnf => (simple(InstanceKind::TwoCnf)?, vec![]),
        GenKind::Horn => (simple(InstanceKind::Horn)?, vec![]),
        GenKind::DualHorn => (simple(InstanceKind::DualHorn)?, vec![]),
        GenKind::DoubleHorn => (simple(InstanceKind::DoubleHorn)?, vec![]),
        GenKind::Xor => (simple(InstanceKind::Xor)?, vec![]),
        GenKind::Graph => (simple(InstanceKind::Graph)?, vec![]),
        GenKind::Sets => (simple(InstanceKind::SetSystem)?, vec![]),
        GenKind::SetSplitting => {
            let Instance::Sets(ss) = random_instance(InstanceKind::SetSystem, params, seed)? else {
                unreachable!()
            };
            let phi = set_splitting_to_cnf(&ss, polarity);
            let mut meta = vec![format!("sets: {}", ss.sets().len())];
            if let Some(split) = set_splittable(&ss) {
                meta.push(format!("splittable: {}", if split { "yes" } else { "no" }));
                meta.push(format!(
                    "pair at distance {}: {}",
                    ss.universe_size(),
                    if split { "yes" } else { "no" }
                ));
            }
            (emit_dimacs(&phi), meta)
        }
        GenKind::Graph2Cnf => {
            let g: Graph = match from {
                Some(p) => {
                    let bytes =
                        std::fs::read(p).with_context(|| format!("reading {}", p.display()))?;
                    parse_dimacs_graph(&bytes)?
                }
                None => match random_instance(InstanceKind::Graph, params, seed)? {
                    Instance::Graph(g) => g,
                    _ => unreachable!(),
                },
            };
            let phi: CnfFormula = graph_to_2cnf(&g, polarity);
            let mut meta = vec![];
            if let Ok(b) = max_induced_bipartite_bruteforce(&g, &OracleCaps::default()) {
                meta.push(format!("max induced bipartite: {b}"));
                meta.push(format!("max pair distance: {b}"));
            }
            (emit_dimacs(&phi), meta)
        }
    };
    Ok((format!("{}{body}", header(&meta)), meta))
}

/// Runs the command line `args` (including the program name) and returns
/// the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            if code == 0 {
                let _ = write!(out, "{e}");
            } else {
                let _ = write!(err, "{e}");
            }
            return code;
        }
    };
    let pool = match cli.threads {
        Some(t) => rayon::ThreadPoolBuilder::new().num_threads(t).build(),
        None => rayon::ThreadPoolBuilder::new().build(),
    };
    let pool = match pool {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    let (code, o, e) = pool.install(|| {
        let (mut o, mut e) = (Vec::new(), Vec::new());
        let code = dispatch(&cli, &mut o, &mut e);
        (code, o, e)
    });
    let _ = out.write_all(&o);
    let _ = err.write_all(&e);
    code
}

fn emit(report: &RunReport, json: bool, out: &mut dyn Write) -> i32 {
    let text = if json {
        serde_json::to_string(report).expect("report serializes")
    } else {
        report.to_string()
    };
    let _ = writeln!(out, "{text}");
    report.exit_code()
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match &cli.command {
        Command::Classify { input } => match load(input) {
            Ok(loaded) => {
                let class = class_text(&loaded);
                let line = if cli.json {
                    serde_json::json!({ "class": class, "num_vars": loaded.num_vars() }).to_string()
                } else {
                    class
                };
                let _ = writeln!(out, "{line}");
                0
            }
            Err(e) => {
                let _ = writeln!(err, "error: {e:#}");
                2
            }
        },
        Command::Solve {
            input,
            mode,
            d,
            s,
            class,
            cap,
            meet_in_middle,
        } => {
            let cfg = KernelSearchConfig {
                enumeration_cap: cap.unwrap_or(KernelSearchConfig::default().enumeration_cap),
                meet_in_middle: *meet_in_middle,
            };
            emit(&cmd_solve(input, *mode, *d, *s, *class, cfg), cli.json, out)
        }
        Command::KDiverse { input, k } => emit(&cmd_k_diverse(input, *k), cli.json, out),
        Command::Check {
            input,
            mode,
            d,
            s,
            class,
            cap,
        } => emit(
            &cmd_check(input, *mode, *d, *s, *class, *cap),
            cli.json,
            out,
        ),
        Command::Gen {
            kind,
            n,
            m,
            width,
            seed,
            planted,
            antimonotone: _,
            monotone,
            from,
            output,
        } => {
            let generated = cmd_gen(
                *kind,
                *n,
                *m,
                *width,
                *seed,
                *planted,
                *monotone,
                from.as_deref(),
            );
            match generated {
                Ok((text, meta)) => {
                    match output {
                        Some(path) => {
                            if let Err(e) = std::fs::write(path, &text) {
                                let _ = writeln!(err, "error: writing {}: {e}", path.display());
                                return 2;
                            }
                            for line in meta {
                                let _ = writeln!(out, "{line}");
                            }
                        }
                        None => {
                            let _ = write!(out, "{text}");
                        }
                    }
                    0
                }
                Err(e) => {
                    let _ = writeln!(err, "error: {e:#}");
                    2
                }
            }
        }
    }
}

/// Fails unless `report` has the expected status; handy in scripts.
pub fn expect_status(report: &RunReport, status: Status) -> Result<()> {
    if report.status != status {
        bail!("expected {status:?}, got {report}");
    }
    Ok(())
}
