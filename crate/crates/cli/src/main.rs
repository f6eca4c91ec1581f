//! `semidual`: batch reports over semilattices, their monoid bialgebras,
//! graded algebras, the letterplace algebra and the finite dual of k(N̄, max).
//!
//! Exit status: 0 on success, 1 when a report contains a failure, 2 on input
//! errors.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use report::Format;

#[derive(Parser)]
#[command(name = "semidual", version, about = "Exact computations for semilattice duality")]
struct Cli {
    /// Output style.
    #[arg(long, global = true, value_enum, default_value = "human")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Finite bounded semilattices.
    #[command(subcommand)]
    Slat(SlatCmd),
    /// The monoid bialgebra kS.
    #[command(subcommand)]
    Balg(BalgCmd),
    /// Semilattice-graded finite-dimensional algebras.
    #[command(subcommand)]
    Graded(GradedCmd),
    /// Functionals on k(N̄, max).
    #[command(subcommand)]
    Nbar(NbarCmd),
    /// The letterplace superalgebra.
    #[command(subcommand)]
    Lp(LpCmd),
}

#[derive(Subcommand)]
pub enum SlatCmd {
    /// Validate the table.
    Check { file: PathBuf },
    /// Strict pairs of the induced order.
    Order { file: PathBuf },
    /// All characters as bit rows.
    Characters { file: PathBuf },
    /// The dual semilattice of characters.
    Dual { file: PathBuf },
    /// The evaluation map into the double dual.
    DoubleDual { file: PathBuf },
    /// Rank of the element-by-character evaluation matrix.
    EvRank { file: PathBuf },
}

#[derive(Subcommand)]
pub enum BalgCmd {
    /// Bialgebra axioms of kS on basis elements.
    Axioms { file: PathBuf },
    /// Group-likes of kS modulo the coideal of a congruence.
    Quotient {
        file: PathBuf,
        /// Pairs to identify, `a=b[,c=d]`.
        #[arg(long)]
        glue: String,
    },
}

#[derive(Args)]
pub struct GradedInput {
    pub file: PathBuf,
    /// Character name, `f1`, `f2`, ...
    #[arg(long = "char")]
    pub character: Option<String>,
    /// Element coordinates, `E11:1,E12:2`.
    #[arg(long)]
    pub element: Option<String>,
}

#[derive(Subcommand)]
pub enum GradedCmd {
    /// Structure constants and grading.
    Verify(GradedInput),
    /// Action of one character on one element.
    Act(GradedInput),
    /// Module-algebra laws for every character.
    ModuleAlgebra(GradedInput),
    /// Matrices of every character together with the monoid checks.
    ActionTable(GradedInput),
    /// Emit the upper-triangular matrix algebra with its max grading.
    Ut {
        #[arg(long)]
        size: usize,
        /// Strictly increasing grading labels; defaults to 1..size.
        #[arg(long)]
        labels: Option<String>,
        /// Write the files into this directory instead of printing them.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
pub struct FunctionalArgs {
    /// Values at -inf, 0, 1, ... before the tail.
    #[arg(long, allow_hyphen_values = true, default_value = "")]
    pub prefix: String,
    /// Constant value from the end of the prefix on.
    #[arg(long, allow_hyphen_values = true)]
    pub tail: String,
}

#[derive(Subcommand)]
pub enum NbarCmd {
    /// Recognize a threshold character.
    IsChar(FunctionalArgs),
    /// Write a functional as a combination of threshold characters.
    Decompose(FunctionalArgs),
    /// Basis of the translate span.
    TranslateBasis(FunctionalArgs),
    /// Determinant of the matrix with entries row[max(i,j)].
    Det {
        #[arg(long, allow_hyphen_values = true)]
        row: String,
    },
}

#[derive(Args)]
pub struct LpArgs {
    #[arg(required = true)]
    pub exprs: Vec<String>,
    /// Odd letters, comma separated.
    #[arg(long, default_value = "")]
    pub odd_letters: String,
    /// Odd places, comma separated.
    #[arg(long, default_value = "")]
    pub odd_places: String,
    /// Threshold for `act`: -inf, a natural, or +inf.
    #[arg(long, allow_hyphen_values = true)]
    pub z: Option<String>,
}

#[derive(Subcommand)]
pub enum LpCmd {
    /// Product of the expressions in order.
    Mul(LpArgs),
    /// Weight components of each expression.
    Weight(LpArgs),
    /// Keep terms of weight at most `--z`.
    Act(LpArgs),
    /// Embed words given as comma-separated letters.
    Embed(LpArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Slat(c) => commands::slat(c),
        Command::Balg(c) => commands::balg(c),
        Command::Graded(c) => commands::graded(c),
        Command::Nbar(c) => commands::nbar(c),
        Command::Lp(c) => commands::lp(c),
    };
    match result {
        Ok(report) => {
            print!("{}", report.render(cli.format));
            if report.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
