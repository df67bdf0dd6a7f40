use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use parkres::commands::{self, Context, Format, ResolveFlags, SandpileAction};
use parkres::input::{build_graph, parse_graph};
use parkres::{InputError, RunOutcome};
use parkres_core::Limits;

/// Exact combinatorics of a connected multigraph with a sink: parking
/// ideal generators, the bounded complex of the sliced graphical
/// arrangement, minimal cellular resolutions with independent verification,
/// sandpile dynamics, Alexander duals and Whitney numbers.
#[derive(Parser)]
#[command(name = "parkres", version, about, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Graph file: edge list ("i j [m]" per line, # comments) or a DOT
    /// subset (undirected "i -- j" lines).
    file: PathBuf,
    /// Sink vertex (1-based). Defaults to the largest vertex index.
    #[arg(long)]
    sink: Option<usize>,
    /// Output format.
    #[arg(long, value_enum, default_value_t = FormatArg::Pretty)]
    format: FormatArg,
    /// Seed recorded in the manifest for reproducibility of seeded sweeps.
    #[arg(long)]
    seed: Option<u64>,
    /// Vertex bound for the exponential enumerations.
    #[arg(long)]
    max_vertices: Option<usize>,
    /// Generator bound for lcm-lattice closures and the Betti oracle.
    #[arg(long)]
    max_generators: Option<usize>,
    /// Write the output to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Pretty,
}

#[derive(Subcommand)]
enum Command {
    /// Minimal generators of the parking ideal, with the redundant subset
    /// monomials and why they are redundant.
    Gens(Common),
    /// The labeled bounded complex: cells, faces, labels, coordinates.
    Complex(Common),
    /// Graded Betti numbers; optionally verify the resolution and compare
    /// against the independent homological oracle.
    Resolve {
        #[command(flatten)]
        common: Common,
        /// Run the five resolution checks.
        #[arg(long)]
        verify: bool,
        /// Also compare finely against the upper Koszul Betti oracle
        /// (implies --verify).
        #[arg(long)]
        oracle: bool,
        /// Also compare cell counts against contraction orientations,
        /// maximal parking functions and Whitney numbers.
        #[arg(long)]
        counts: bool,
        /// Emit the signed boundary matrices as dense integer arrays.
        #[arg(long)]
        matrices: bool,
        /// Report integral torsion coefficients of the complex.
        #[arg(long)]
        torsion: bool,
        /// Testing hook: corrupt the label of one cell first.
        #[arg(long, hide = true)]
        corrupt_cell: Option<usize>,
    },
    /// Chip-firing: stabilization, the sandpile group, parking functions.
    Sandpile {
        #[command(flatten)]
        common: Common,
        /// Stabilize a configuration, given as comma-separated chip counts
        /// on the non-sink vertices.
        #[arg(long, value_name = "CHIPS")]
        stabilize: Option<String>,
        /// Invariant factors of the sandpile group.
        #[arg(long)]
        group: bool,
        /// All parking functions.
        #[arg(long)]
        parking: bool,
        /// Componentwise-maximal parking functions.
        #[arg(long)]
        maximal: bool,
    },
    /// The Alexander dual ideal, the colabeled dual subcomplex, and the
    /// dual's oracle Betti numbers.
    Dual(Common),
    /// Whitney numbers and the chromatic polynomial of the lattice of
    /// connected partitions.
    Whitney(Common),
}

impl Command {
    fn common(&self) -> &Common {
        match self {
            Command::Gens(c) | Command::Complex(c) | Command::Dual(c) | Command::Whitney(c) => c,
            Command::Resolve { common, .. } => common,
            Command::Sandpile { common, .. } => common,
        }
    }
}

fn build_context(common: &Common, started: Instant) -> Result<Context, InputError> {
    let text = fs::read_to_string(&common.file)
        .map_err(|e| InputError(format!("{}: {e}", common.file.display())))?;
    let parsed = parse_graph(&text)?;
    let graph = build_graph(&parsed, common.sink)?;
    let defaults = Limits::default();
    let limits = Limits {
        max_vertices: common.max_vertices.unwrap_or(defaults.max_vertices),
        max_generators: common.max_generators.unwrap_or(defaults.max_generators),
    };
    Ok(Context {
        graph,
        limits,
        format: match common.format {
            FormatArg::Json => Format::Json,
            FormatArg::Pretty => Format::Pretty,
        },
        input_path: common.file.display().to_string(),
        seed: common.seed,
        started,
    })
}

fn run(cli: &Cli, started: Instant) -> Result<RunOutcome, InputError> {
    let ctx = build_context(cli.command.common(), started)?;
    match &cli.command {
        Command::Gens(_) => commands::run_gens(&ctx),
        Command::Complex(_) => commands::run_complex(&ctx),
        Command::Resolve {
            verify,
            oracle,
            counts,
            matrices,
            torsion,
            corrupt_cell,
            ..
        } => commands::run_resolve(
            &ctx,
            &ResolveFlags {
                verify: *verify,
                oracle: *oracle,
                counts: *counts,
                matrices: *matrices,
                torsion: *torsion,
                corrupt_cell: *corrupt_cell,
            },
        ),
        Command::Sandpile {
            stabilize,
            group,
            parking,
            maximal,
            ..
        } => {
            let action = match (stabilize, group, parking, maximal) {
                (Some(chips), false, false, false) => {
                    let parsed: Result<Vec<u64>, _> = chips
                        .split(',')
                        .map(|t| t.trim().parse::<u64>())
                        .collect();
                    let chips = parsed
                        .map_err(|_| InputError(format!("bad configuration `{chips}`")))?;
                    if chips.len() != ctx.graph.non_sink_count() {
                        return Err(InputError(format!(
                            "configuration has {} entries, expected {}",
                            chips.len(),
                            ctx.graph.non_sink_count()
                        )));
                    }
                    SandpileAction::Stabilize(chips)
                }
                (None, true, false, false) => SandpileAction::Group,
                (None, false, true, false) => SandpileAction::Parking,
                (None, false, false, true) => SandpileAction::Maximal,
                _ => {
                    return Err(InputError(
                        "choose exactly one of --stabilize, --group, --parking, --maximal".into(),
                    ))
                }
            };
            commands::run_sandpile(&ctx, &action)
        }
        Command::Dual(_) => commands::run_dual(&ctx),
        Command::Whitney(_) => commands::run_whitney(&ctx),
    }
}

fn main() -> ExitCode {
    let started = Instant::now();
    let cli = Cli::parse();
    let out_path = cli.command.common().out.clone();
    match run(&cli, started) {
        Ok(outcome) => {
            match out_path {
                Some(path) => {
                    if let Err(e) = fs::write(&path, &outcome.rendered) {
                        eprintln!("error: {}: {e}", path.display());
                        return ExitCode::from(1);
                    }
                }
                None => print!("{}", outcome.rendered),
            }
            ExitCode::from(outcome.exit_code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
