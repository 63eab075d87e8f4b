use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use treepath::generate::{generate, GenConfig, PriorityMode, Shape};
use treepath_cli::{commands, CliError, InputError, Instance, Solution};

/// Coloring, multicut and kernel solvers for dipaths in directed trees.
#[derive(Parser)]
#[command(name = "treepath", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Color the dipaths with as many colors as the maximum arc load.
    Color(SolveArgs),
    /// Maximum arc-disjoint packing with a multicut of the same size.
    Multicut(SolveArgs),
    /// Kernel under the instance's priority block.
    Kernel(SolveArgs),
    /// Check a solution file against an instance.
    Verify {
        instance: PathBuf,
        /// Solution file; `-` reads standard input.
        solution: PathBuf,
    },
    /// Print a random instance.
    Gen(GenArgs),
    /// Graphviz rendering of an instance and, optionally, a solution.
    ExportDot {
        input: Option<PathBuf>,
        #[arg(long)]
        solution: Option<PathBuf>,
    },
}

#[derive(Args)]
struct SolveArgs {
    /// Instance file; standard input when absent or `-`.
    input: Option<PathBuf>,
    /// Root vertex, overriding the instance's `root` record.
    #[arg(long)]
    root: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Tables instead of records (text format only).
    #[arg(long)]
    pretty: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ShapeArg {
    Chain,
    Star,
    Random,
    Caterpillar,
}

#[derive(Clone, Copy, ValueEnum)]
enum PriorityArg {
    None,
    Global,
    Arc,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, short = 'n', default_value_t = 10)]
    vertices: usize,
    #[arg(long, short = 'p', default_value_t = 10)]
    paths: usize,
    #[arg(long, value_enum, default_value_t = ShapeArg::Random)]
    shape: ShapeArg,
    #[arg(long, value_enum, default_value_t = PriorityArg::None)]
    priority: PriorityArg,
    /// Probability of growing a dipath by one more arc.
    #[arg(long, default_value_t = 0.8)]
    extend: f64,
    /// Orient every arc away from vertex 0.
    #[arg(long)]
    outward: bool,
    #[arg(long)]
    root: Option<usize>,
}

fn read(path: Option<&Path>) -> Result<String, InputError> {
    let mut text = String::new();
    match path {
        None => io::stdin().read_to_string(&mut text).map(|_| text),
        Some(p) if p == Path::new("-") => io::stdin().read_to_string(&mut text).map(|_| text),
        Some(p) => std::fs::read_to_string(p),
    }
    .map_err(|source| InputError::Io { path: path.map_or("<stdin>".into(), |p| p.display().to_string()), source })
}

fn solve(args: &SolveArgs, f: fn(&Instance, Option<usize>) -> Result<Solution, CliError>) -> Result<String, CliError> {
    let inst = Instance::parse(&read(args.input.as_deref())?)?;
    let sol = f(&inst, args.root)?;
    Ok(match args.format {
        Format::Json if args.pretty => serde_json::to_string_pretty(&sol).expect("serializable") + "\n",
        Format::Json => serde_json::to_string(&sol).expect("serializable") + "\n",
        Format::Text if args.pretty => sol.pretty(),
        Format::Text => sol.emit(),
    })
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.cmd {
        Cmd::Color(a) => solve(&a, commands::color),
        Cmd::Multicut(a) => solve(&a, commands::multicut),
        Cmd::Kernel(a) => solve(&a, commands::kernel),
        Cmd::Verify { instance, solution } => {
            let inst = Instance::parse(&read(Some(&instance))?)?;
            let sol = Solution::parse(&read(Some(&solution))?)?;
            commands::verify(&inst, &sol)?;
            Ok(format!("ok {}\n", sol.kind()))
        }
        Cmd::Gen(g) => {
            let shape = match g.shape {
                ShapeArg::Chain => Shape::Chain,
                ShapeArg::Star => Shape::Star,
                ShapeArg::Random => Shape::Random,
                ShapeArg::Caterpillar => Shape::Caterpillar,
            };
            let priority = match g.priority {
                PriorityArg::None => PriorityMode::None,
                PriorityArg::Global => PriorityMode::Global,
                PriorityArg::Arc => PriorityMode::PerArc,
            };
            if g.vertices == 0 || !(g.extend > 0.0 && g.extend <= 1.0) {
                return Err(InputError::Invalid("need at least one vertex and 0 < extend <= 1".into()).into());
            }
            let mut cfg = GenConfig::new(g.seed, g.vertices, g.paths, shape).priority(priority).extend(g.extend);
            if g.outward {
                cfg = cfg.outward();
            }
            let mut inst = Instance::from_generated(&generate(&cfg));
            inst.root = g.root;
            inst.load()?;
            Ok(inst.emit())
        }
        Cmd::ExportDot { input, solution } => {
            let inst = Instance::parse(&read(input.as_deref())?)?;
            let sol = solution.map(|s| read(Some(&s)).and_then(|t| Solution::parse(&t))).transpose()?;
            commands::export_dot(&inst, sol.as_ref())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let _ = io::stdout().write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("treepath: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
