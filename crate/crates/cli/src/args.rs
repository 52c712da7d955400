use std::path::PathBuf;

use bettiforge::analysis::Theorem;
use clap::builder::PossibleValuesParser;
use clap::{Args, Parser, Subcommand, ValueEnum};

fn theorem_names() -> PossibleValuesParser {
    PossibleValuesParser::new(Theorem::ALL.map(Theorem::name))
}

#[derive(Parser, Debug)]
#[command(
    name = "bettiforge",
    version,
    about = "Exact Betti numbers of edge ideals and squarefree monomial ideals"
)]
pub struct Cli {
    /// Worker threads for the parallel engine (defaults to all cores).
    #[arg(long, global = true, env = "BETTIFORGE_JOBS")]
    pub jobs: Option<usize>,

    /// Field characteristic: 0 for the rationals or a prime.
    #[arg(long = "char", global = true, default_value_t = 0, value_name = "P")]
    pub characteristic: u32,

    #[arg(long, global = true, value_enum, default_value_t = Format::Diagram)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Human-readable text; a Betti diagram for `betti`.
    Diagram,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Betti table of R/I.
    Betti {
        #[command(flatten)]
        input: Input,
        /// Also list every multidegree.
        #[arg(long)]
        multigraded: bool,
    },
    /// Strands j >= 1 and their gaps; exit 1 if any strand is disconnected.
    Strands {
        #[command(flatten)]
        input: Input,
    },
    /// Subadditivity of the maximal shifts; exit 1 on a violation.
    Subadd {
        #[command(flatten)]
        input: Input,
    },
    /// Induced matching number, minimum vertex cover and regularity.
    Nu {
        #[command(flatten)]
        input: Input,
    },
    /// Membership in the classes G and G', chordality, unicyclicity.
    Classify {
        #[command(flatten)]
        input: Input,
    },
    /// Print a family member as an edge list.
    Gen {
        /// Family spec, e.g. `cycle:5` or `fan:2,5`.
        #[arg(long)]
        family: String,
    },
    /// Check a theorem on every instance up to a size; exit 1 on a failure.
    Verify {
        /// Name of the check to run.
        #[arg(value_parser = theorem_names())]
        theorem: String,
        /// Largest number of vertices to check.
        #[arg(long, default_value_t = 6)]
        n_max: usize,
    },
    /// Search for counterexamples to the open strand questions; exit 1 if any is found.
    Search {
        /// Largest number of vertices to search.
        #[arg(long, default_value_t = 6)]
        n_max: usize,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct InputSource {
    /// Family spec such as `cycle:5`, `wheel:6`, `kpartite:2,2,2`.
    #[arg(long)]
    pub family: Option<String>,
    /// Squarefree ideal file: vertex count, then one generator per line.
    #[arg(long)]
    pub ideal: Option<PathBuf>,
    /// Edge-list file: vertex count, then `u v` per line.
    #[arg(long)]
    pub graph: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct Input {
    #[command(flatten)]
    pub source: InputSource,
    /// Lift the cap on the number of variables for the full sweep.
    #[arg(long)]
    pub force: bool,
}
