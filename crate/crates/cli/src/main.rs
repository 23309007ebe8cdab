//! `canrep`: command-line access to the canrep library.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "canrep", version, about = "Exact module computations over canonical algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = OutFormat::Json)]
    pub format: OutFormat,
    /// Seed for every randomized step; required by commands that decompose.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutFormat {
    Json,
    Tsv,
}

#[derive(Args, Debug, Clone)]
pub struct RepInput {
    /// Algebra file; may be omitted when the representation names its algebra.
    #[arg(long)]
    pub algebra: Option<PathBuf>,
    #[arg(long)]
    pub rep: PathBuf,
}

#[derive(Args, Debug, Clone)]
pub struct PairInput {
    #[arg(long)]
    pub algebra: Option<PathBuf>,
    #[arg(long)]
    pub rep: PathBuf,
    /// The second module.
    #[arg(long)]
    pub target: PathBuf,
}

#[derive(Args, Debug, Clone)]
pub struct TubeInput {
    #[arg(long)]
    pub algebra: PathBuf,
    /// Tube such as `arm:2`, `pt:inf` or `pt:t^2+2`.
    #[arg(long)]
    pub tube: String,
}

#[derive(Args, Debug, Clone)]
pub struct TruncationInput {
    /// Comma-separated tubes.
    #[arg(long, value_delimiter = ',', required = true)]
    pub tubes: Vec<String>,
    #[arg(long)]
    pub depth: usize,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Trisection label and defect of an indecomposable.
    Classify(RepInput),
    /// Defect of a module.
    Defect(RepInput),
    /// Indecomposable summands with multiplicities.
    Decompose(RepInput),
    /// Basis of Hom(rep, target).
    Hom(PairInput),
    /// Dimensions of Ext¹(rep, target) and Ext²(rep, target).
    Ext(PairInput),
    /// Auslander-Reiten translate.
    Tau {
        #[command(flatten)]
        input: RepInput,
        /// Apply τ⁻ instead of τ.
        #[arg(long)]
        inverse: bool,
    },
    /// The regular simples of a tube, in τ⁻ order.
    TubeSimples(TubeInput),
    /// The uniserial S[r] with regular socle S.
    Sbracket {
        #[command(flatten)]
        tube: TubeInput,
        /// Index of the socle in the tube's list of regular simples.
        #[arg(long, default_value_t = 0)]
        socle: usize,
        #[arg(long)]
        depth: usize,
    },
    /// The p, t and q parts of a module.
    SplitTrisect(RepInput),
    /// Splits a regular module into the parts inside and outside given tubes.
    PartitionTubes {
        #[command(flatten)]
        input: RepInput,
        #[arg(long, value_delimiter = ',', required = true)]
        tubes: Vec<String>,
    },
    /// Left approximation by truncated Prüfer modules.
    OmegaLeft {
        #[command(flatten)]
        input: RepInput,
        #[command(flatten)]
        trunc: TruncationInput,
    },
    /// Right approximation by truncated Prüfer modules.
    OmegaRight {
        #[command(flatten)]
        input: RepInput,
        #[command(flatten)]
        trunc: TruncationInput,
    },
    /// The generic Kronecker module over the rational function field.
    Generic {
        /// Base field: `Q` or `F<p>`.
        #[arg(long, default_value = "Q")]
        base: String,
    },
    /// Length of a module over its endomorphism ring.
    Endolength(RepInput),
    /// dim Hom(P, S[r]) for r = 1..depth.
    PegGrowth {
        #[command(flatten)]
        tube: TubeInput,
        #[arg(long, default_value_t = 0)]
        socle: usize,
        #[arg(long)]
        depth: usize,
        /// Vertex of the peg; defaults to the sink.
        #[arg(long)]
        peg: Option<String>,
    },
    /// Defects and slope of indecomposables over a tubular algebra.
    Slope {
        #[arg(long)]
        algebra: Option<PathBuf>,
        #[arg(long, required = true)]
        rep: Vec<PathBuf>,
    },
    /// Checks that Hom(rep, target) vanishes when the slope decreases.
    SlopeCheck(PairInput),
    /// A chain of monomorphisms through ascending slopes.
    Chain {
        #[arg(long)]
        algebra: PathBuf,
        /// Comma-separated ascending slopes, e.g. `0,1`.
        #[arg(long, value_delimiter = ',', required = true)]
        ratios: Vec<String>,
        /// Largest total dimension of a chain member.
        #[arg(long, default_value_t = 16)]
        budget: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(report) => {
            print!("{}", output::render(&cli.command, &report, cli.format));
            ExitCode::SUCCESS
        }
        Err(e) => {
            println!("{}", output::error_json(&e));
            ExitCode::from(e.exit_code())
        }
    }
}
