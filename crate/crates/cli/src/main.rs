//! `sga`: analysis of signed graphs and their hyperplane arrangements.
//!
//! Exit codes: 0 decided, 1 internal error, 2 parse or usage error,
//! 3 unknown verdict, 4 hypothesis violation.

mod crosscheck;
mod render;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use sga_core::chordal::build_csg;
use sga_core::decide::zaslavsky_ss_decide;
use sga_core::gen::{self, GraphClass, LoopPolicy};
use sga_core::oracle::{characteristic_polynomial, freeness_decide_with, realize, OracleLimits};
use sga_core::poly::chromatic_polynomial;
use sga_core::signed::balanced_cycle_witness;
use sga_core::{decide_with, parse_graph, to_canonical_json, DecideOptions, SignedGraph, Ternary, Verdict};

use crosscheck::Mode;

#[derive(Parser, Debug)]
#[command(name = "sga", version, about = "Freeness and supersolvability of signed-graphic arrangements")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Loops applied to input or generated graphs; `as-given` keeps input
    /// loops and uses each command's default when generating.
    #[arg(long, global = true, value_enum, default_value_t = LoopArg::AsGiven)]
    loops: LoopArg,

    /// Seed for every random choice; SGA_SEED takes precedence when set.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Cross-check theorem verdicts against the arrangement oracle.
    #[arg(long, global = true)]
    verify: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full verdict: balanced chordality, supersolvability and freeness.
    Analyze {
        path: PathBuf,
        /// Report Unknown instead of running the oracle when no theorem applies.
        #[arg(long)]
        no_fallback: bool,
    },
    /// Chromatic polynomial by colouring counts.
    Chromatic { path: PathBuf },
    /// Characteristic polynomial from the intersection lattice.
    Characteristic { path: PathBuf },
    /// Freeness by the exact logarithmic-derivation computation.
    Freeness { path: PathBuf },
    /// Supersolvability from the graph structure.
    Supersolvable { path: PathBuf },
    /// Balanced chordality with a witness cycle when it fails.
    BalancedChordal { path: PathBuf },
    /// Clique-separator graph of the positive part.
    Csg { path: PathBuf },
    /// Random graphs, one canonical JSON line each.
    Random {
        #[arg(short, long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = ClassArg::General)]
        class: ClassArg,
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
    /// Compare theorem-level procedures against the oracle on many graphs.
    Crosscheck {
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long, default_value_t = 4)]
        max_vertices: u32,
        /// Random samples per vertex count above four.
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// Where a minimal disagreeing graph is written.
        #[arg(long, default_value = "crosscheck-failure.json")]
        dump: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum LoopArg {
    Full,
    None,
    Random,
    AsGiven,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ClassArg {
    General,
    NegativeWithinPositive,
    CompletePositive,
}

impl From<ClassArg> for GraphClass {
    fn from(c: ClassArg) -> Self {
        match c {
            ClassArg::General => GraphClass::General,
            ClassArg::NegativeWithinPositive => GraphClass::NegativeWithinPositive,
            ClassArg::CompletePositive => GraphClass::CompletePositive,
        }
    }
}

/// A failure with the exit code it maps to.
#[derive(Debug)]
enum Failure {
    Internal(String),
    Usage(String),
    Hypothesis(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Internal(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Hypothesis(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Internal(m) | Failure::Usage(m) | Failure::Hypothesis(m) => m,
        }
    }
}

/// What a successful command prints, and whether its verdict was decided.
struct Output {
    text: String,
    decided: bool,
}

impl Output {
    fn decided(text: String) -> Self {
        Output { text, decided: true }
    }
}

struct Context {
    format: Format,
    loops: LoopArg,
    seed: u64,
    verify: bool,
}

impl Context {
    fn read(&self, path: &Path) -> Result<SignedGraph, Failure> {
        let text = std::fs::read_to_string(path).map_err(|e| Failure::Internal(format!("{}: {e}", path.display())))?;
        let g = parse_graph(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        Ok(self.apply_loops(g))
    }

    fn apply_loops(&self, g: SignedGraph) -> SignedGraph {
        let loops: Vec<u32> = match self.loops {
            LoopArg::AsGiven => return g,
            LoopArg::Full => g.vertices().collect(),
            LoopArg::None => vec![],
            LoopArg::Random => {
                use rand::Rng;
                let mut r = gen::rng(self.seed);
                g.vertices().filter(|_| r.random_bool(0.5)).collect()
            }
        };
        g.with_loops(loops).expect("loops on existing vertices")
    }

    /// Loop policy for generated graphs; `as-given` falls back to `default`.
    fn generation_policy(&self, default: LoopPolicy) -> LoopPolicy {
        match self.loops {
            LoopArg::Full => LoopPolicy::Full,
            LoopArg::None => LoopPolicy::None,
            LoopArg::Random => LoopPolicy::Random,
            LoopArg::AsGiven => default,
        }
    }

    fn emit<T: Serialize>(&self, value: &T, text: impl FnOnce() -> String) -> Result<String, Failure> {
        match self.format {
            Format::Json => Ok(serde_json::to_string_pretty(value).expect("serializable") + "\n"),
            Format::Text => Ok(text()),
            Format::Dot => Err(Failure::Usage("DOT output is available for csg and random only".into())),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let seed = match std::env::var("SGA_SEED") {
        Ok(s) => match s.trim().parse() {
            Ok(v) => v,
            Err(_) => {
                eprintln!("error: SGA_SEED must be an unsigned 64-bit integer, got {s:?}");
                return ExitCode::from(2);
            }
        },
        Err(_) => cli.seed,
    };
    let ctx = Context { format: cli.format, loops: cli.loops, seed, verify: cli.verify };
    match run(&ctx, cli.command) {
        Ok(out) => {
            print!("{}", out.text);
            if out.decided {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn run(ctx: &Context, command: Command) -> Result<Output, Failure> {
    match command {
        Command::Analyze { path, no_fallback } => analyze(ctx, &ctx.read(&path)?, !no_fallback),
        Command::Chromatic { path } => {
            let p = chromatic_polynomial(&ctx.read(&path)?);
            let text = ctx.emit(&json!({ "polynomial": p.to_string(), "coefficients": p }), || format!("{p}\n"))?;
            Ok(Output::decided(text))
        }
        Command::Characteristic { path } => {
            let g = ctx.read(&path)?;
            let p = characteristic_polynomial(&realize(&g)).map_err(|e| Failure::Hypothesis(e.to_string()))?;
            let text = ctx.emit(&json!({ "polynomial": p.to_string(), "coefficients": p }), || format!("{p}\n"))?;
            Ok(Output::decided(text))
        }
        Command::Freeness { path } => {
            let g = ctx.read(&path)?;
            let result = freeness_decide_with(&realize(&g), &OracleLimits::default())
                .map_err(|e| Failure::Hypothesis(e.to_string()))?;
            let text = ctx.emit(&result, || {
                if result.is_free() {
                    format!("free, exponents {:?}\n", result.exponents)
                } else {
                    "not free\n".to_string()
                }
            })?;
            Ok(Output::decided(text))
        }
        Command::Supersolvable { path } => {
            let g = ctx.read(&path)?;
            let v = zaslavsky_ss_decide(&g);
            if ctx.verify {
                let lattice = sga_core::oracle::is_supersolvable_lattice(&realize(&g))
                    .map_err(|e| Failure::Hypothesis(e.to_string()))?;
                if Ternary::from(lattice.supersolvable) != v.supersolvable {
                    return Err(Failure::Internal(format!(
                        "supersolvability: structure says {:?}, lattice says {}",
                        v.supersolvable, lattice.supersolvable
                    )));
                }
            }
            let value = json!({ "supersolvable": v.supersolvable, "certificate": v.supersolvable_certificate });
            let text = ctx.emit(&value, || format!("supersolvable: {}\n", render::ternary(v.supersolvable)))?;
            Ok(Output::decided(text))
        }
        Command::BalancedChordal { path } => {
            let g = ctx.read(&path)?;
            let witness = balanced_cycle_witness(&g);
            let value = json!({ "balanced_chordal": witness.is_none(), "witness": witness });
            let text = ctx.emit(&value, || match &witness {
                None => "balanced chordal: yes\n".to_string(),
                Some(w) => format!("balanced chordal: no\nwitness: {}\n", render::cycle(&w.cycle)),
            })?;
            Ok(Output::decided(text))
        }
        Command::Csg { path } => {
            let g = ctx.read(&path)?;
            let csg = build_csg(&g.positive_graph()).map_err(|e| Failure::Hypothesis(e.to_string()))?;
            let text = match ctx.format {
                Format::Dot => csg.to_dot(),
                Format::Json => serde_json::to_string_pretty(&csg).expect("serializable") + "\n",
                Format::Text => render::csg(&csg),
            };
            Ok(Output::decided(text))
        }
        Command::Random { n, class, count } => {
            if n == 0 {
                return Err(Failure::Usage("n must be at least 1".into()));
            }
            let policy = ctx.generation_policy(LoopPolicy::Random);
            let mut r = gen::rng(ctx.seed);
            let mut text = String::new();
            for _ in 0..count {
                let g = gen::random_graph(&mut r, n, class.into(), policy);
                match ctx.format {
                    Format::Dot => text.push_str(&render::graph_dot(&g)),
                    _ => {
                        text.push_str(&to_canonical_json(&g));
                        text.push('\n');
                    }
                }
            }
            Ok(Output::decided(text))
        }
        Command::Crosscheck { mode, max_vertices, samples, dump } => {
            let policy = ctx.generation_policy(mode.default_loops());
            let report = crosscheck::run(mode, max_vertices, samples, policy, ctx.seed).map_err(Failure::Hypothesis)?;
            let text = ctx.emit(&report, || render::crosscheck(&report))?;
            if let Some(g) = &report.minimal_failure {
                std::fs::write(&dump, to_canonical_json(g) + "\n")
                    .map_err(|e| Failure::Internal(format!("{}: {e}", dump.display())))?;
                print!("{text}");
                return Err(Failure::Internal(format!(
                    "{} disagreements; smallest written to {}",
                    report.disagreements,
                    dump.display()
                )));
            }
            Ok(Output::decided(text))
        }
    }
}

#[derive(Serialize)]
struct Analysis<'a> {
    #[serde(flatten)]
    verdict: &'a Verdict,
    rank: usize,
}

fn analyze(ctx: &Context, g: &SignedGraph, oracle_fallback: bool) -> Result<Output, Failure> {
    let opts = DecideOptions { verify: ctx.verify, oracle_fallback, ..DecideOptions::default() };
    let verdict = decide_with(g, &opts).map_err(|e| Failure::Internal(e.to_string()))?;
    let analysis = Analysis { verdict: &verdict, rank: g.rank() };
    let text = ctx.emit(&analysis, || render::verdict(&verdict, g.rank()))?;
    Ok(Output { text, decided: verdict.free != Ternary::Unknown })
}
