//! `macops`: Macdonald and Jack polynomial expansions, (q,t)-Kostka tables and
//! verification suites from the command line.

mod run;
mod verify;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "macops", version, about = "Exact Macdonald and Jack polynomial computations")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Integral form J_λ(x;q,t) in the monomial basis.
    Jpoly(PolyArgs),
    /// Monic P_λ(x;q,t) in the monomial basis.
    Ppoly(PolyArgs),
    /// (q,t)-Kostka table of one degree.
    Kostka(KostkaArgs),
    /// Jack polynomial J^(α)_λ, symbolic in α or at an integer α.
    Jack(JackArgs),
    /// Run a verification suite; one record per checked identity.
    Verify(VerifyArgs),
    /// Apply a q-difference operator to a monomial symmetric function.
    ApplyOp(ApplyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Via {
    Kplus,
    Kminus,
    Eigen,
}

#[derive(Args, Debug)]
pub struct PolyArgs {
    /// Partition, comma separated (e.g. 2,1; 0 for the empty partition).
    #[arg(long)]
    pub lambda: String,
    /// Number of variables (default |λ|, at least 1).
    #[arg(long)]
    pub nvars: Option<usize>,
    /// Construction route.
    #[arg(long, value_enum, default_value_t = Via::Kminus)]
    pub via: Via,
    /// Cross-check all three routes.
    #[arg(long)]
    pub check: bool,
}

#[derive(Args, Debug)]
pub struct KostkaArgs {
    #[arg(long)]
    pub degree: u32,
    /// Number of variables (default: the degree).
    #[arg(long)]
    pub nvars: Option<usize>,
    /// Check K_{λμ}(q,t) = K_{λ'μ'}(t,q).
    #[arg(long)]
    pub check_duality: bool,
}

#[derive(Args, Debug)]
pub struct JackArgs {
    #[arg(long)]
    pub lambda: String,
    #[arg(long)]
    pub nvars: Option<usize>,
    /// `sym` for coefficients in ℤ[α], or a positive integer.
    #[arg(long, default_value = "sym")]
    pub alpha: String,
    /// Compare with the t → 1 limit of the Macdonald polynomial.
    #[arg(long)]
    pub check: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Suite name; see the README for the list.
    #[arg(long)]
    pub suite: String,
    /// Largest |λ| (or degree) to check.
    #[arg(long)]
    pub max_weight: Option<u32>,
    /// Number of variables.
    #[arg(long)]
    pub n: Option<usize>,
    /// Operator index.
    #[arg(long)]
    pub m: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OpName {
    D,
    Dx,
    Kplus,
    Kminus,
    Mplus,
    Mminus,
    Ku,
    Lu,
    Mu,
    Nu,
    K,
    L,
    M,
    N,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Route {
    Generic,
    Printed,
    Determinantal,
    Product,
    Antisymmetrized,
}

#[derive(Args, Debug)]
pub struct ApplyArgs {
    #[arg(long, value_enum)]
    pub op: OpName,
    /// Operator index (ignored by dx and the generating operators k, l, m, n).
    #[arg(long)]
    pub m: Option<usize>,
    /// Input monomial symmetric function m_μ.
    #[arg(long)]
    pub mu: String,
    #[arg(long)]
    pub nvars: Option<usize>,
    #[arg(long, value_enum, default_value_t = Route::Generic)]
    pub route: Route,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run::run(&cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
