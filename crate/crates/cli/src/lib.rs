//! Command-line front end for the hyperconifold library.

pub mod commands;
pub mod input;
pub mod report;
pub mod svg;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hyperconifold::{Error, ErrorKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Svg,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "hyperconifold", version, about = "Hyperconifold singularities, resolutions and transitions")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Output format
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: Format,
    /// Write output to FILE instead of stdout
    #[arg(long, value_name = "FILE", global = true)]
    pub out: Option<PathBuf>,
    /// Order in which interior points are star-subdivided, 1-based and
    /// comma separated (default: by height)
    #[arg(long, value_delimiter = ',', global = true)]
    pub seed_order: Option<Vec<usize>>,
    /// Largest n for which all crepant resolutions are enumerated
    #[arg(long, value_name = "N", default_value_t = hyperconifold::resolve::DEFAULT_ENUM_BOUND, global = true)]
    pub enum_bound: u64,
}

#[derive(Debug, Args, Clone, Copy)]
pub struct ClassArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub n: i64,
    #[arg(long, allow_negative_numbers = true)]
    pub k: i64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Canonical form, orbit and lens space of C_{n,k}
    Classify(ClassArgs),
    /// The toric diagram, optionally with a triangulation
    Diagram {
        #[command(flatten)]
        class: ClassArgs,
        /// 1-based index into the enumerated resolutions, or "star"
        #[arg(long)]
        resolve: Option<String>,
    },
    /// Crepant resolutions with ample cones, surfaces and intersection numbers
    Resolve {
        #[command(flatten)]
        class: ClassArgs,
        /// List every crepant resolution instead of the star resolution
        #[arg(long)]
        enumerate: bool,
    },
    /// Nodes of the local mirror
    Mirror {
        #[command(flatten)]
        class: ClassArgs,
        /// Grid size of the independent Newton search
        #[arg(long, default_value_t = 32)]
        grid: usize,
    },
    /// Hodge numbers and fundamental group after a transition
    Transition {
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long)]
        h11: u64,
        #[arg(long)]
        h21: u64,
        /// JSON group file
        #[arg(long, value_name = "FILE")]
        group: PathBuf,
        /// Group elements fixing the singular points: 1-based indices or words
        #[arg(long = "seed", required = true)]
        seeds: Vec<String>,
    },
    /// Identify a class from a 4×4 integer matrix
    Identify {
        /// JSON file {"matrix": [[...], [...], [...], [...]]}
        #[arg(long, value_name = "FILE")]
        matrix: PathBuf,
    },
    /// Scan actions combining a torus element with y2 <-> y3
    ScanExceptional {
        #[arg(long, default_value_t = 20)]
        n_max: u64,
    },
}

/// A failure with its process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

pub const EXIT_INVALID_INPUT: i32 = 2;
pub const EXIT_RESOURCE_BOUND: i32 = 3;
pub const EXIT_DOMAIN_PRECONDITION: i32 = 4;

impl CliError {
    pub fn invalid(message: impl Into<String>) -> Self {
        CliError { code: EXIT_INVALID_INPUT, message: message.into() }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e.kind() {
            ErrorKind::InvalidInput => EXIT_INVALID_INPUT,
            ErrorKind::ResourceBound => EXIT_RESOURCE_BOUND,
            ErrorKind::DomainPrecondition => EXIT_DOMAIN_PRECONDITION,
        };
        CliError { code, message: e.to_string() }
    }
}

/// Runs a parsed command line and returns the rendered output.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    commands::dispatch(&cli.global, &cli.command)
}
