use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use packing_core::reducibility::Engine;

#[derive(Debug, Parser)]
#[command(name = "packing", version, about = "Packing colorings of subcubic graphs")]
pub struct Cli {
    /// Print a machine-readable JSON report on stdout.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Find a packing coloring, optionally extending a partial one.
    Solve {
        graph: PathBuf,
        /// Radii, e.g. `1,2,2,2,2,2`.
        #[arg(long)]
        spec: String,
        /// Partial coloring file (0 = uncolored).
        #[arg(long)]
        partial: Option<PathBuf>,
        /// Write the coloring here as well as into the report.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Finish large cliques of pending vertices by matching.
        #[arg(long)]
        sdr_tail: bool,
    },
    /// Check a coloring against a spec.
    Verify {
        graph: PathBuf,
        coloring: PathBuf,
        #[arg(long)]
        spec: String,
    },
    /// Prove that no coloring exists by exhaustive search.
    Refute {
        graph: PathBuf,
        #[arg(long)]
        spec: String,
        /// Fix the first vertex to one color per equal-radius group.
        #[arg(long)]
        break_symmetry: bool,
    },
    /// Degree, diameter, girth, independence number and small edge cuts.
    Info {
        graph: PathBuf,
        /// Largest cut size to list (1 or 2).
        #[arg(long, default_value_t = 2)]
        cuts: usize,
    },
    /// Decide reducibility of every record in a configuration file.
    CheckConfig {
        file: PathBuf,
        /// Try all 30 patterns on the first triple.
        #[arg(long)]
        exhaustive_first_triple: bool,
        /// Worker threads (default: all cores).
        #[arg(long)]
        workers: Option<usize>,
        /// Restart at `RECORD:i,j,...` or `i,j,...` (record 0), as printed in progress lines.
        #[arg(long)]
        resume: Option<String>,
        #[arg(long, value_enum, default_value_t = EngineArg::Auto)]
        engine: EngineArg,
        /// Failing precolorings to collect per record before stopping.
        #[arg(long, default_value_t = 1)]
        witness_limit: usize,
        /// Include wall-clock times in the report.
        #[arg(long)]
        timings: bool,
        /// Suppress progress lines on stderr.
        #[arg(long)]
        quiet: bool,
    },
    /// Trace faces of an embedding and run the charge rules.
    Discharge { graph: PathBuf, rotation: PathBuf },
    /// Check the sharpness gadget properties of a graph.
    Gadget {
        graph: PathBuf,
        /// The degree-2 vertex that gets doubled.
        #[arg(long, default_value_t = 0)]
        v1: usize,
    },
    /// Write named graphs, embeddings and configuration files.
    Fixtures {
        #[arg(value_enum)]
        name: FixtureName,
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum EngineArg {
    Auto,
    Faithful,
    Frontier,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Engine {
        match e {
            EngineArg::Auto => Engine::Auto,
            EngineArg::Faithful => Engine::Faithful,
            EngineArg::Frontier => Engine::Frontier,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FixtureName {
    Petersen,
    K4,
    Cube,
    Dodecahedron,
    TruncatedTetrahedron,
    ChordedRing,
    Sharpness,
    SampleConfig,
    NamedConfigs,
    SyntheticConfigs,
    All,
}
