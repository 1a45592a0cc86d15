use clap::{Args, Parser, Subcommand, ValueEnum};

use borel_core::sample::DEFAULT_SEED;

#[derive(Debug, Parser)]
#[command(
    name = "borel",
    version,
    about = "Strongly stable ideals, their duals and shift resolutions"
)]
pub struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Coefficient field: `prime`, `prime:<p>` or `rational`.
    #[arg(long, global = true, default_value = "prime")]
    pub field: String,
    /// Seed for randomized sweeps.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Limit on enumerated candidates before a computation gives up.
    #[arg(long, global = true)]
    pub max_candidates: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

/// An ideal given inline (`"x1^2, x1*x2"`), as a JSON object, or as a path to
/// a JSON file.
#[derive(Debug, Args)]
pub struct IdealInput {
    pub input: Option<String>,
    #[arg(long)]
    pub gens: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    Koszul,
    MinimalShift,
    Ek,
}

impl Engine {
    pub fn name(self) -> &'static str {
        match self {
            Engine::Koszul => "koszul",
            Engine::MinimalShift => "minimal-shift",
            Engine::Ek => "ek",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Side {
    Gamma,
    Lambda,
}

#[derive(Debug, Args)]
pub struct ResolveArgs {
    #[command(flatten)]
    pub ideal: IdealInput,
    #[arg(long, value_enum, default_value = "minimal-shift")]
    pub engine: Engine,
    /// Resolve the quotient instead of the ideal (Koszul engine only).
    #[arg(long)]
    pub quotient: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dual of a strongly stable ideal.
    Dual {
        #[command(flatten)]
        ideal: IdealInput,
        /// Also compare against the intersection engine and the double dual.
        #[arg(long)]
        check: bool,
    },
    /// Minimal generators.
    Gens {
        #[command(flatten)]
        ideal: IdealInput,
        /// Strongly stable generators (the default).
        #[arg(long, conflicts_with = "monomial")]
        sst: bool,
        /// Ordinary monomial generators.
        #[arg(long)]
        monomial: bool,
    },
    /// Membership of a monomial.
    Member {
        #[command(flatten)]
        ideal: IdealInput,
        #[arg(long)]
        monomial: String,
    },
    /// Hilbert function of the ideal in degrees `0..=max-deg`.
    Hilb {
        #[command(flatten)]
        ideal: IdealInput,
        #[arg(long)]
        max_deg: u32,
        /// Number of variables, at least the largest index used.
        #[arg(long)]
        vars: Option<usize>,
    },
    /// Graded Betti table.
    Betti(ResolveArgs),
    /// Full resolution as a JSON complex.
    Resolve(ResolveArgs),
    /// Re-check a stored complex, or every instance of a fixture file.
    Verify {
        /// Complex JSON file.
        #[arg(long, required_unless_present = "fixture", requires = "gens")]
        complex: Option<String>,
        /// The ideal the complex resolves.
        #[arg(long)]
        gens: Option<String>,
        /// The complex resolves the quotient.
        #[arg(long)]
        quotient: bool,
        /// Degree bound for the exactness check; maxdeg+3 by default.
        #[arg(long)]
        bound: Option<u32>,
        /// `pd1`, `pd2` or a fixture file.
        #[arg(long, conflicts_with = "complex")]
        fixture: Option<String>,
    },
    /// Universal lex-segment ideals.
    Ulex {
        #[arg(long, value_delimiter = ',', required = true)]
        values: Vec<u32>,
        #[arg(long, value_enum, default_value = "gamma")]
        side: Side,
        /// Treat the values as a prefix of an unbounded map, keeping `R` steps.
        #[arg(long)]
        truncate: Option<usize>,
    },
    /// Operations on isotone maps written `[v1,...|inf]` or `[v1,...|c]`.
    Isotone {
        #[command(subcommand)]
        op: IsotoneOp,
    },
    /// The bijection between `Δ_{m+1}(n)` and `Δ_{n+1}(m)`.
    DegreeMap {
        /// `m+1,n`.
        #[arg(long, value_delimiter = ',', num_args = 1, required = true)]
        delta: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        value: Vec<u32>,
    },
    /// Finite shift modules in JSON form.
    Shiftmod {
        #[command(subcommand)]
        op: ShiftmodOp,
    },
    /// Brute-force checks.
    Oracle {
        #[command(subcommand)]
        op: OracleOp,
    },
}

#[derive(Debug, Subcommand)]
pub enum IsotoneOp {
    Dual { map: String },
    Leq { f: String, g: String },
    Lex { f: String, g: String },
    Meet { f: String, g: String },
}

#[derive(Debug, Subcommand)]
pub enum ShiftmodOp {
    Validate {
        module: String,
    },
    Dual {
        module: String,
    },
    /// Graded pieces of the expansion up to total degree `bound`.
    Expand {
        module: String,
        #[arg(long)]
        bound: u32,
    },
    /// Each nonzero degree with its image under the degree map.
    DegreeMap {
        module: String,
    },
    /// The ideal as a module over `Δ_{m+1}(n)`.
    FromIdeal {
        #[command(flatten)]
        ideal: IdealInput,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum OracleOp {
    /// Exactly one of `Γ(v) ∈ I` and `Γ(Dv) ∈ dual(I)` for every box map `v`.
    DualityComplement {
        #[command(flatten)]
        ideal: IdealInput,
        /// `m,n`.
        #[arg(long = "box", value_delimiter = ',', required = true)]
        bx: Vec<usize>,
    },
    /// `D ∘ D = id` on every map of a box.
    Involution {
        #[arg(long = "box", value_delimiter = ',', required = true)]
        bx: Vec<usize>,
    },
    /// EK Betti numbers of the constructed complex against the closed form.
    EkBetti {
        #[command(flatten)]
        ideal: IdealInput,
    },
    /// Double dual and engine agreement on seeded random ideals.
    DoubleDual {
        #[arg(long, default_value_t = 200)]
        count: usize,
    },
}
