use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

use commands::Failure;

#[derive(Parser, Debug)]
#[command(
    name = "skewpart",
    version,
    about = "Exact skew-partition functions, circuit partition polynomials and rank certificates"
)]
struct Cli {
    /// Largest enumeration (colorings, transition systems, pairs) allowed.
    #[arg(long, global = true, default_value_t = 100_000_000)]
    bound: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for sampled invariance checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct ModelArgs {
    /// Use the Martin model with this ℓ.
    #[arg(long)]
    pub martin: Option<usize>,
    /// Read a skew tensor from this file.
    #[arg(long)]
    pub tensor: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate s_h(G).
    SkewEval {
        /// Graph file, or a built-in name such as C3, K5, bowtie, circle.
        graph: String,
        #[command(flatten)]
        model: ModelArgs,
    },
    /// The circuit partition polynomial J(G, x).
    Martin {
        graph: String,
        /// Print coefficients, constant term first.
        #[arg(long, conflicts_with = "at")]
        poly: bool,
        /// Evaluate at an integer, cross-checking against the closed form
        /// when one applies.
        #[arg(long, allow_negative_numbers = true, required_unless_present = "poly")]
        at: Option<String>,
    },
    /// Run one of the verification suites.
    Verify {
        #[command(subcommand)]
        check: VerifyCommand,
    },
    /// Exact rank of a matching matrix or a connection submatrix.
    Rank {
        /// `b k`: the matrix b^{cycles(M ∪ N)} over perfect matchings of [2k].
        #[arg(long, num_args = 2, value_names = ["B", "K"], allow_negative_numbers = true, conflicts_with = "connection")]
        matching: Option<Vec<i64>>,
        /// Fragment file; every fragment needs the same number of open ends.
        #[arg(long, requires = "martin", required_unless_present = "matching")]
        connection: Option<PathBuf>,
        #[arg(long)]
        martin: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
pub enum VerifyCommand {
    /// The value does not depend on the orientation or local order.
    Invariance {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        graph: String,
        /// Maximum number of (orientation, local order) pairs before sampling.
        #[arg(long, default_value_t = 2000)]
        budget: usize,
    },
    /// Σ_π s_h(G_{U,π}) = 0 over all rewirings of the edges in U.
    Relation {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        graph: String,
        /// Comma-separated 0-based edge indices.
        #[arg(long = "U", value_delimiter = ',')]
        u: Vec<usize>,
    },
    /// ⟨τ(M), τ(N)⟩ against the signed cycle formula, or the fragment
    /// Gram identity when a fragment file is given.
    Gram {
        #[arg(long, default_value_t = 1)]
        ell: usize,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long)]
        fragments: Option<PathBuf>,
    },
    /// τ(v₀) = 0 below the first fundamental theorem threshold.
    V0 {
        #[arg(long, default_value_t = 1)]
        ell: usize,
        #[arg(long, default_value_t = 2)]
        m: usize,
    },
    /// The signed directed-matching identity.
    Signid {
        #[arg(long, default_value_t = 2)]
        m: usize,
    },
    /// Every route to J(G, x) agrees on all small Eulerian graphs.
    Agree {
        #[arg(long, default_value_t = 5)]
        max_edges: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = commands::Context {
        limits: skewpart::Limits::new(cli.bound),
        format: cli.format,
        seed: cli.seed,
    };
    let outcome = match cli.command {
        Command::SkewEval { graph, model } => commands::skew_eval(&ctx, &graph, &model),
        Command::Martin { graph, poly, at } => commands::martin(&ctx, &graph, poly, at.as_deref()),
        Command::Verify { check } => commands::verify(&ctx, check),
        Command::Rank {
            matching,
            connection,
            martin,
        } => match (matching, connection, martin) {
            (Some(bk), _, _) => commands::rank_matching(&ctx, bk[0], bk[1]),
            (None, Some(path), Some(ell)) => commands::rank_connection(&ctx, &path, ell),
            _ => Err(Failure::Input(
                "rank needs --matching or --connection with --martin".into(),
            )),
        },
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("skewpart: {f}");
            ExitCode::from(f.code())
        }
    }
}
