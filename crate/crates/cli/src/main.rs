mod commands;
mod output;
mod parse;
mod tables;

use anyhow::Result;
use clap::{Args, Parser, Subcommand};
use output::Format;
use std::path::PathBuf;
use std::process::ExitCode;

/// Exact orbits of pure braid groups on affine character varieties, and the groups that govern them.
#[derive(Parser, Debug)]
#[command(name = "braidorb", version)]
struct Cli {
    /// Output format. Defaults to csv for `tables` and json elsewhere.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// JSON object whose keys fill in flags not given on the command line.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Default)]
pub struct RepArgs {
    /// Linear part λ_1,…,λ_n, e.g. `z12,z12^5,z12^3,z12^3`.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<String>,
    /// Translations τ_1,…,τ_{n-1} (or all n, checked against the product relation). Omit for the zero class.
    #[arg(long, allow_hyphen_values = true)]
    pub tau: Option<String>,
    /// Expected number of punctures; checked against `--lambda`.
    #[arg(long)]
    pub n: Option<usize>,
    /// Orbit enumeration bound.
    #[arg(long)]
    pub bound: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Enumerate the pure braid orbit of one class.
    Orbit {
        #[command(flatten)]
        rep: RepArgs,
        /// List the orbit points.
        #[arg(long)]
        points: bool,
    },
    /// Classify a four-puncture linear part and list its special orbits.
    Classify4 {
        #[command(flatten)]
        rep: RepArgs,
    },
    /// Decide finiteness of an orbit without enumerating it.
    Gate {
        #[command(flatten)]
        rep: RepArgs,
        /// Also enumerate the orbit and compare with the verdict.
        #[arg(long)]
        check: bool,
        /// Check this many random classes instead of one (needs --n or --lambda).
        #[arg(long)]
        samples: Option<usize>,
        /// Seed for --samples.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Order, reflections and hyperplanes of g25 or g32.
    Group {
        #[arg(long)]
        which: Option<String>,
    },
    /// Stratum of a line, or the full stratum table on built-in representatives.
    Strata {
        #[arg(long)]
        which: Option<String>,
        /// Coordinates of a line, e.g. `1,-1,0`.
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
    },
    /// Intersection lattice census of the reflection hyperplanes.
    Lattice {
        #[arg(long)]
        which: Option<String>,
    },
    /// Merge punctures ℓ,…,ℓ+n−k into one and optionally test braid equivariance.
    Coalesce {
        #[command(flatten)]
        rep: RepArgs,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        l: Option<usize>,
        /// Pure braid word such as `p(1,3)^2 p(2,4)^-2`.
        #[arg(long, allow_hyphen_values = true)]
        word: Option<String>,
    },
    /// Numeric monodromy of the rank-3 (or rank-4) hypergeometric connection.
    Monodromy {
        #[arg(long, default_value_t = 3)]
        rank: usize,
        /// Pole positions on the real line.
        #[arg(long, allow_hyphen_values = true)]
        poles: Option<String>,
        /// Exponents θ_1,…; default 1/6 each (or -1/6 with --sign minus).
        #[arg(long, allow_hyphen_values = true)]
        theta: Option<String>,
        #[arg(long, value_parser = ["plus", "minus"], default_value = "plus")]
        sign: String,
        /// Base point `re,im`.
        #[arg(long, allow_hyphen_values = true, default_value = "0,-2")]
        base: String,
        /// Matching tolerance for the closure.
        #[arg(long)]
        tol: Option<f64>,
        /// Closure bound.
        #[arg(long)]
        bound: Option<usize>,
        /// Allow the rank-4 closure (about 155520 matrices).
        #[arg(long)]
        long_running: bool,
    },
    /// Regenerate the orbit tables with expected and computed sizes.
    Tables {
        /// reducible, imprimitive, tetrahedral, octahedral, icosahedral, hessian, witting, or all.
        #[arg(long, default_value = "all")]
        which: String,
        /// Write one CSV per table into this directory.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        bound: Option<usize>,
    },
}

fn run(cli: Cli) -> Result<bool> {
    if let Some(j) = cli.jobs {
        rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global()?;
    }
    let input = commands::Input::load(cli.input.as_deref())?;
    let (report, default_format) = match cli.command {
        Command::Orbit { rep, points } => (commands::orbit(input.rep(rep), points)?, Format::Json),
        Command::Classify4 { rep } => (commands::classify4(input.rep(rep))?, Format::Json),
        Command::Gate { rep, check, samples, seed } => {
            let samples = samples.or(input.usize("samples"));
            let seed = seed.or(input.u64("seed")).unwrap_or(0);
            (commands::gate(input.rep(rep), check, samples, seed)?, Format::Json)
        }
        Command::Group { which } => (commands::group(&input.string(which, "which", "g25"))?, Format::Json),
        Command::Strata { which, point } => {
            let point = point.or(input.str("point"));
            (commands::strata(&input.string(which, "which", "g25"), point.as_deref())?, Format::Json)
        }
        Command::Lattice { which } => (commands::lattice(&input.string(which, "which", "g32"))?, Format::Json),
        Command::Coalesce { rep, k, l, word } => {
            let k = k.or(input.usize("k"));
            let l = l.or(input.usize("l"));
            let word = word.or(input.str("word"));
            (commands::coalesce(input.rep(rep), k, l, word.as_deref())?, Format::Json)
        }
        Command::Monodromy { rank, poles, theta, sign, base, tol, bound, long_running } => {
            let opts = commands::MonodromyArgs {
                rank,
                poles: poles.or(input.str("poles")),
                theta: theta.or(input.str("theta")),
                minus: sign == "minus",
                base,
                tol: tol.or(input.f64("tol")).unwrap_or(1e-6),
                bound: bound.or(input.usize("bound")),
                long_running,
            };
            (commands::monodromy(opts)?, Format::Json)
        }
        Command::Tables { which, out, bound } => {
            let bound = bound.or(input.usize("bound")).unwrap_or(10_000);
            (commands::tables(&which, out.as_deref(), bound)?, Format::Csv)
        }
    };
    report.emit(cli.format.unwrap_or(default_format))?;
    Ok(report.ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {:#}", e);
            ExitCode::from(2)
        }
    }
}
