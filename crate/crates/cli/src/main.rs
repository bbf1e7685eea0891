mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kkschur::kschur::Family;
use kkschur::Partition;

#[derive(Parser, Debug)]
#[command(name = "kkschur", version, about = "Katalan functions, K-k-Schur functions and the affine symmetric group")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a family member in the h-basis.
    Compute(ComputeArgs),
    /// Expand a Pieri product in a family basis.
    Pieri(PieriArgs),
    /// Affine Grassmannian element of λ and its Bruhat data.
    Bruhat(BruhatArgs),
    /// Draw the Katalan triple of λ.
    Diagram(DiagramArgs),
    /// sh(w) for a permutation of S_{k+1}.
    Sh(ShArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DirectionArg {
    Horizontal,
    Vertical,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TripleKind {
    /// (Δ^k(λ), L(Δ^k(λ)), λ).
    Closed,
    /// (Δ^k(λ), L(Δ^{k+1}(λ)), λ).
    Kkschur,
}

#[derive(Args, Debug)]
pub struct Common {
    #[arg(long)]
    k: usize,
    /// Comma-separated parts, e.g. 2,1,1 (empty for ∅).
    #[arg(long, default_value = "", value_parser = parse_partition)]
    lambda: Partition,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
pub struct ComputeArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, default_value = "gk", value_parser = parse_family)]
    family: Family,
    /// Also print coordinates in this family.
    #[arg(long, value_parser = parse_family)]
    expand_in: Option<Family>,
}

#[derive(Args, Debug)]
pub struct PieriArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long)]
    r: usize,
    /// gk: h_r·g^{(k)}_λ. gtilde: g̃_{(r)}·g̃^{(k)}_λ or g̃_{(1^r)}·g̃^{(k)}_λ.
    #[arg(long, default_value = "gk", value_parser = parse_family)]
    basis: Family,
    #[arg(long, value_enum, default_value_t = DirectionArg::Horizontal)]
    direction: DirectionArg,
}

#[derive(Args, Debug)]
pub struct BruhatArgs {
    #[command(flatten)]
    common: Common,
    /// Compare x_μ against x_λ instead of listing the lower set.
    #[arg(long, value_parser = parse_partition)]
    mu: Option<Partition>,
}

#[derive(Args, Debug)]
pub struct DiagramArgs {
    #[command(flatten)]
    common: Common,
    /// Number of rows ℓ; defaults to max(ℓ(λ), 1).
    #[arg(long)]
    ell: Option<usize>,
    #[arg(long, value_enum, default_value_t = TripleKind::Closed)]
    kind: TripleKind,
    /// Print the triple as JSON instead of a picture.
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
pub struct ShArgs {
    #[arg(long)]
    k: usize,
    /// Window [w(1), …, w(k+1)] of a permutation in S_{k+1}.
    #[arg(long, value_delimiter = ',', conflicts_with_all = ["lambda", "i"])]
    window: Option<Vec<i64>>,
    /// With --i, use the i-Grassmannian permutation of λ.
    #[arg(long, value_parser = parse_partition, requires = "i")]
    lambda: Option<Partition>,
    #[arg(long, requires = "lambda")]
    i: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// One of theorem-main, pieri, k-rectangle, straightening, hecke-module,
    /// peterson, appendix-c, involution, rewrite-lemmas, or all.
    #[arg(long, default_value = "all")]
    suite: String,
    /// Largest k swept.
    #[arg(long)]
    k: usize,
    #[arg(long, default_value_t = 6)]
    max_size: usize,
    #[arg(long)]
    parallel: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse::<Partition>().map_err(|e| e.to_string())
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse::<Family>()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute(a) => commands::compute(&a),
        Command::Pieri(a) => commands::pieri(&a),
        Command::Bruhat(a) => commands::bruhat(&a),
        Command::Diagram(a) => commands::diagram(&a),
        Command::Sh(a) => commands::sh(&a),
        Command::Verify(a) => commands::verify(&a),
    };
    match result {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
