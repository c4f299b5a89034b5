use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Operation needs a square matrix; carries (rows, cols).
    NotSquare(usize, usize),
    /// Operand shapes don't line up; carries the two offending dimensions.
    DimensionMismatch(usize, usize),
    IndexOutOfRange { index: usize, bound: usize },
    ModulusTooSmall(u64),
    NotPrime(u64),
    DivisionByZero,
    NotDivisible,
    /// Odd-width pattern matrices need `n` odd and at least 3.
    BadPatternWidth(usize),
    /// Parity or range precondition of a parameterised check failed.
    BadParameters(&'static str),
    /// A braid word must have at least one strand.
    NoStrands,
    GeneratorOutOfRange { letter: usize, strands: usize },
    ArcOutOfRange { arc: usize, arc_count: usize },
    NotCoprime(u64, u64),
    TooFewSamplePoints { needed: usize, got: usize },
    /// Exhaustive enumeration would visit more assignments than allowed.
    BudgetExceeded { budget: u64 },
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotSquare(r, c) => write!(f, "matrix is not square: {} rows, {} columns", r, c),
            Error::DimensionMismatch(a, b) => write!(f, "dimension mismatch: {} vs {}", a, b),
            Error::IndexOutOfRange { index, bound } => {
                write!(f, "index {} out of range (bound {})", index, bound)
            }
            Error::ModulusTooSmall(p) => write!(f, "modulus {} is smaller than 2", p),
            Error::NotPrime(p) => write!(f, "modulus {} is not prime", p),
            Error::DivisionByZero => f.write_str("division by the zero polynomial"),
            Error::NotDivisible => f.write_str("polynomial division leaves a nonzero remainder"),
            Error::BadPatternWidth(n) => write!(f, "pattern width {} must be odd and at least 3", n),
            Error::BadParameters(why) => write!(f, "bad parameters: {}", why),
            Error::NoStrands => f.write_str("a braid needs at least one strand"),
            Error::GeneratorOutOfRange { letter, strands } => {
                write!(f, "generator {} out of range for {} strands", letter, strands)
            }
            Error::ArcOutOfRange { arc, arc_count } => {
                write!(f, "arc {} out of range ({} arcs)", arc, arc_count)
            }
            Error::NotCoprime(u, v) => write!(f, "gcd({}, {}) is not 1", u, v),
            Error::TooFewSamplePoints { needed, got } => {
                write!(f, "need at least {} sample points, got {}", needed, got)
            }
            Error::BudgetExceeded { budget } => {
                write!(f, "enumeration exceeds the budget of {} assignments", budget)
            }
        }
    }
}

impl core::error::Error for Error {}
