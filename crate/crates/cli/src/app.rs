//! Command-line surface.

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "qroot", version, about = "Exact computations in SL_q(2,R) and U_q(sl(2,R)) at odd roots of unity")]
pub struct Cli {
    #[command(subcommand)]
    pub verb: Verb,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Root,
    Generic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Order of the root of unity q (odd, at least 3).
    #[arg(long, default_value_t = 3)]
    pub p: u32,
    #[arg(long, value_enum, default_value_t = Mode::Root)]
    pub mode: Mode,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Args, Debug, Clone)]
pub struct ExprArgs {
    #[command(flatten)]
    pub common: Common,
    /// Expression text, or `@path` to read text or JSON from a file.
    #[arg(long)]
    pub expr: String,
    /// Series truncation degree for generic-mode coproducts.
    #[arg(long = "max-deg", default_value_t = 4)]
    pub max_deg: u32,
}

#[derive(Args, Debug, Clone)]
pub struct RepArgs {
    #[arg(long = "lambda-plus", allow_hyphen_values = true)]
    pub lambda_plus: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ActSide {
    Right,
    Left,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum IntegralSide {
    T,
    P,
    C,
    W,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SignatureSide {
    Coset,
    Torus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Hopf,
    Duality,
    Regular,
    Invariance,
    Unitarity,
    Ladder,
    Signature,
    Orthogonality,
    All,
}

#[derive(Subcommand, Debug)]
pub enum Verb {
    /// Normal form of an element of A or U.
    NormalForm(ExprArgs),
    Coproduct(ExprArgs),
    Antipode(ExprArgs),
    Counit(ExprArgs),
    Star(ExprArgs),
    /// Pairing of an element of U with an element of A.
    Pair {
        #[command(flatten)]
        common: Common,
        /// First the U element, then the A element.
        #[arg(long, num_args = 1, required = true)]
        expr: Vec<String>,
    },
    /// Regular action of an element of U on an element of A.
    Act {
        #[command(flatten)]
        common: Common,
        #[arg(long, num_args = 1, required = true)]
        expr: Vec<String>,
        #[arg(long, value_enum, default_value_t = ActSide::Right)]
        side: ActSide,
    },
    /// Matrices of the cyclic representation, or of an A-type representation with --l.
    Rep {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        rep: RepArgs,
        #[arg(long)]
        l: Option<u32>,
    },
    /// The universal T-matrix, finite part.
    Tmatrix {
        #[command(flatten)]
        common: Common,
    },
    /// Matrix elements D_mn of the corepresentation.
    Dmatrix {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        rep: RepArgs,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
    },
    /// Integrals and distribution values.
    Integral {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        expr: String,
        #[arg(long, value_enum)]
        side: IntegralSide,
    },
    /// Signature of a Gram matrix.
    Signature {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = SignatureSide::Coset)]
        side: SignatureSide,
    },
    /// Orthogonality of matrix elements over seeded parameter samples.
    Orthogonality {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        samples: usize,
    },
    /// Run a verification suite; exit 1 if any check fails.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long = "max-deg")]
        max_deg: Option<u32>,
    },
}
