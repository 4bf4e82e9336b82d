//! Command line front end: validation, orderings, drawings, verifiers and
//! corpus generation.
//!
//! Exit codes: 0 success / verification passed, 1 usage or I/O error,
//! 2 verification failure, 3 precondition rejection (e.g. the input has a
//! separating triangle).

use clap::{Args, Parser, Subcommand};
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use tricanon::gen::{double_wheel, random_4ct};
use tricanon::graph::Embedding;
use tricanon::order::{compute_31_ordering, verify_ordering, CanonicalOrdering};
use tricanon::rectdual::{build_rect_dual, verify_rect_dual, RectLayout};
use tricanon::ri::{build_ri_drawing, verify_ri, PointDrawing};
use tricanon::svg::{rect_dual_svg, ri_svg};
use tricanon::{Error, VerifyReport};

const EXIT_IO: u8 = 1;
const EXIT_VERIFY: u8 = 2;
const EXIT_PRECONDITION: u8 = 3;

#[derive(Parser)]
#[command(
    name = "tricanon",
    version,
    about = "Canonical orderings of 4-connected planar triangulations, \
             rectangular duals and rectangle-of-influence drawings"
)]
struct Cli {
    /// Emit machine-readable JSON diagnostics on failure
    #[arg(long, global = true)]
    json_errors: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a graph file is a 4-connected triangulation
    Validate { input: PathBuf },

    /// Compute a canonical ordering and emit it as JSON
    Order {
        input: PathBuf,
        /// Output path (stdout when omitted)
        #[arg(short, long)]
        output: Option<PathBuf>,
    },

    /// Build the rectangular dual of G - (u1,u2)
    Rd {
        input: PathBuf,
        /// Use a precomputed ordering instead of computing one
        #[arg(long)]
        ordering: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Also write an SVG rendering
        #[arg(long)]
        svg: Option<PathBuf>,
    },

    /// Build the rectangle-of-influence drawing of G - (u1,u2)
    Ri {
        input: PathBuf,
        #[arg(long)]
        ordering: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Overlay the closed influence rectangle of every edge in the SVG
        #[arg(long)]
        rects: bool,
    },

    /// Verify ordering files against graphs (alternating GRAPH ORDERING pairs)
    CheckOrder(CheckArgs),

    /// Verify rectangular-dual layouts (alternating GRAPH LAYOUT pairs)
    CheckRd(CheckArgs),

    /// Verify rectangle-of-influence drawings (alternating GRAPH DRAWING pairs)
    CheckRi(CheckArgs),

    /// Generate graphs in the JSON format used by the other commands
    #[command(subcommand)]
    Gen(GenCommand),
}

#[derive(Args)]
struct CheckArgs {
    /// Alternating graph/artifact file pairs
    #[arg(required = true, num_args = 2..)]
    files: Vec<PathBuf>,

    /// Verify pairs concurrently on up to N threads
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Subcommand)]
enum GenCommand {
    /// Cycle of the given length plus two apexes (4-connected by construction)
    DoubleWheel {
        #[arg(long)]
        cycle_len: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Random 4-connected triangulation via stacked growth and diagonal flips
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// A corpus of random 4-connected triangulations, one file per graph
    Corpus {
        #[arg(long, default_value_t = 6)]
        min: usize,
        #[arg(long, default_value_t = 60)]
        max: usize,
        #[arg(long, default_value_t = 50)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output_dir: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json_errors = cli.json_errors;
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            let code = error_exit_code(&err);
            if json_errors {
                let payload = serde_json::json!({
                    "error": { "exit": code, "message": err.to_string() }
                });
                println!("{payload}");
            } else {
                eprintln!("error: {err:#}");
            }
            ExitCode::from(code)
        }
    }
}

/// Rejections of well-formed but ineligible inputs exit with 3; anything
/// else that errors (I/O, parse, usage) exits with 1.
fn error_exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(
            Error::SeparatingTriangle(_)
            | Error::Precondition(_)
            | Error::NotTriangulation(_)
            | Error::NotTriangulatedDisk(_)
            | Error::NotInternally4Connected(_)
            | Error::InvalidOrdering(_),
        ) => EXIT_PRECONDITION,
        _ => EXIT_IO,
    }
}

fn run(command: Command) -> anyhow::Result<ExitCode> {
    match command {
        Command::Validate { input } => validate(&input),
        Command::Order { input, output } => {
            let g = read_graph(&input)?;
            let o = compute_31_ordering(&g)?;
            emit(output.as_deref(), &o.to_json())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Rd {
            input,
            ordering,
            output,
            svg,
        } => {
            let g = read_graph(&input)?;
            let o = load_or_compute_ordering(&g, ordering.as_deref())?;
            let l = build_rect_dual(&g, &o)?;
            emit(output.as_deref(), &l.to_json())?;
            if let Some(path) = svg {
                fs::write(&path, rect_dual_svg(&l))
                    .map_err(|e| anyhow::anyhow!("writing {}: {e}", path.display()))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Ri {
            input,
            ordering,
            output,
            svg,
            rects,
        } => {
            let g = read_graph(&input)?;
            let o = load_or_compute_ordering(&g, ordering.as_deref())?;
            let p = build_ri_drawing(&g, &o)?;
            emit(output.as_deref(), &p.to_json())?;
            if let Some(path) = svg {
                fs::write(&path, ri_svg(&g, g.base_edge(), &p, rects))
                    .map_err(|e| anyhow::anyhow!("writing {}: {e}", path.display()))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::CheckOrder(args) => run_checks(args, |g, text| {
            let o = CanonicalOrdering::from_json(text)?;
            Ok(verify_ordering(g, &o))
        }),
        Command::CheckRd(args) => run_checks(args, |g, text| {
            let l = RectLayout::from_json(text)?;
            Ok(verify_rect_dual(g, g.base_edge(), &l))
        }),
        Command::CheckRi(args) => run_checks(args, |g, text| {
            let p = PointDrawing::from_json(text)?;
            Ok(verify_ri(g, g.base_edge(), &p))
        }),
        Command::Gen(gen) => run_gen(gen),
    }
}

fn validate(input: &Path) -> anyhow::Result<ExitCode> {
    let g = read_graph(input)?;
    let triangulation = g.check_triangulation();
    let separating = match &triangulation {
        Ok(()) => g.find_separating_triangle()?,
        Err(_) => None,
    };
    let four_connected =
        triangulation.is_ok() && separating.is_none() && g.n() >= 6 && g.outer().len() == 3;
    let report = serde_json::json!({
        "n": g.n(),
        "m": g.m(),
        "triangulation": triangulation.is_ok(),
        "triangulation_defect": triangulation.as_ref().err().map(|e| e.to_string()),
        "separating_triangle": separating,
        "four_connected": four_connected,
    });
    println!("{report}");
    if let Err(e) = triangulation {
        return Err(e.into());
    }
    if let Some(t) = separating {
        return Err(Error::SeparatingTriangle(t).into());
    }
    if !four_connected {
        return Err(Error::Precondition(format!(
            "n = {} is below the smallest 4-connected triangulation",
            g.n()
        ))
        .into());
    }
    Ok(ExitCode::SUCCESS)
}

fn run_checks(
    args: CheckArgs,
    verify: impl Fn(&Embedding, &str) -> anyhow::Result<VerifyReport> + Sync,
) -> anyhow::Result<ExitCode> {
    if !args.files.len().is_multiple_of(2) {
        anyhow::bail!("expected an even number of files (graph/artifact pairs)");
    }
    let pairs: Vec<(&PathBuf, &PathBuf)> = args.files.chunks(2).map(|c| (&c[0], &c[1])).collect();
    let jobs = args.jobs.max(1).min(pairs.len().max(1));

    let run_pair = |(graph_path, artifact_path): (&PathBuf, &PathBuf)| -> anyhow::Result<(String, VerifyReport)> {
        let g = read_graph(graph_path)?;
        let text = fs::read_to_string(artifact_path)
            .map_err(|e| anyhow::anyhow!("reading {}: {e}", artifact_path.display()))?;
        let report = verify(&g, &text)?;
        Ok((artifact_path.display().to_string(), report))
    };

    let results: Vec<anyhow::Result<(String, VerifyReport)>> = if jobs <= 1 {
        pairs.iter().copied().map(run_pair).collect()
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = pairs
                .chunks(pairs.len().div_ceil(jobs))
                .map(|chunk| {
                    scope.spawn(|| chunk.iter().copied().map(run_pair).collect::<Vec<_>>())
                })
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("checker thread panicked"))
                .collect()
        })
    };

    let mut all_ok = true;
    for result in results {
        let (name, report) = result?;
        if report.ok() {
            println!("PASS {name} ({} checks)", report.checks);
        } else {
            all_ok = false;
            println!("FAIL {name}: {}", report.failures[0]);
            for failure in report.failures.iter().skip(1) {
                println!("     {failure}");
            }
        }
    }
    Ok(if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VERIFY)
    })
}

fn run_gen(gen: GenCommand) -> anyhow::Result<ExitCode> {
    match gen {
        GenCommand::DoubleWheel { cycle_len, output } => {
            let g = double_wheel(cycle_len)?;
            emit(output.as_deref(), &g.to_json())?;
        }
        GenCommand::Random { n, seed, output } => {
            let g = random_4ct(n, seed)?;
            emit(output.as_deref(), &g.to_json())?;
        }
        GenCommand::Corpus {
            min,
            max,
            count,
            seed,
            output_dir,
        } => {
            if min < 6 || max < min {
                anyhow::bail!("need 6 <= min <= max");
            }
            fs::create_dir_all(&output_dir)?;
            let mut sizes = (min..=max).cycle();
            for i in 0..count {
                let n = sizes.next().unwrap();
                let g = (0..50)
                    .find_map(|s| random_4ct(n, seed + i as u64 * 1000 + s).ok())
                    .ok_or_else(|| {
                        anyhow::anyhow!("generation failed for n = {n}; try another --seed")
                    })?;
                let path = output_dir.join(format!("g{i:04}_n{n}.json"));
                fs::write(&path, g.to_json())?;
            }
            println!("wrote {count} graphs to {}", output_dir.display());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn read_graph(path: &Path) -> anyhow::Result<Embedding> {
    let text =
        fs::read_to_string(path).map_err(|e| anyhow::anyhow!("reading {}: {e}", path.display()))?;
    Ok(Embedding::from_json(&text)?)
}

fn load_or_compute_ordering(
    g: &Embedding,
    path: Option<&Path>,
) -> anyhow::Result<CanonicalOrdering> {
    match path {
        None => Ok(compute_31_ordering(g)?),
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| anyhow::anyhow!("reading {}: {e}", path.display()))?;
            let o = CanonicalOrdering::from_json(&text)?;
            let report = verify_ordering(g, &o);
            if !report.ok() {
                return Err(Error::InvalidOrdering(report.failures[0].clone()).into());
            }
            Ok(o)
        }
    }
}

fn emit(path: Option<&Path>, payload: &str) -> anyhow::Result<()> {
    match path {
        None => {
            println!("{payload}");
            Ok(())
        }
        Some(path) => {
            fs::write(path, payload).map_err(|e| anyhow::anyhow!("writing {}: {e}", path.display()))
        }
    }
}
