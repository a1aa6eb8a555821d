use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("empty generator list")]
    EmptyInput,
    #[error("generator must be a positive integer")]
    NonPositiveGenerator,
    #[error("generators have gcd {0}, so the generated monoid is not co-finite")]
    NotCoFinite(u64),
    #[error("Kunz vector {0} does not describe a numerical semigroup")]
    NotASemigroup(String),
    #[error("operation undefined for the full monoid ℕ")]
    FullMonoid,
    #[error("{0} is not a special gap")]
    NotSpecialGap(i64),
    #[error("not an ideal of the ambient semigroup: {0}")]
    NotAnIdeal(Violation),
    #[error("generator set does not contain 0 as its minimum")]
    NotNormalized,
    #[error("Kunz vectors of different lengths ({0} and {1})")]
    LengthMismatch(usize, usize),
    #[error("ideals belong to different ambient semigroups")]
    AmbientMismatch,
    #[error("the ideal is ℕ and has no gaps")]
    FullSet,
    #[error("truncation bound {bound} is below the safe bound {required}")]
    BoundTooSmall { bound: u64, required: u64 },
    #[error("ideal is idempotent and may have several covers")]
    IdempotentInput,
    #[error("expected multiplicity 3, got {0}")]
    WrongMultiplicity(u32),
    #[error("ideals {0} and {1} have no unique least upper or greatest lower bound")]
    NotALattice(usize, usize),
    #[error("not the ideal poset of a multiplicity-3 semigroup: {0}")]
    NotMultiplicityThreePoset(String),
    #[error("malformed poset: {0}")]
    InvalidPoset(String),
    #[error("unknown check name `{0}`")]
    UnknownCheckName(String),
    #[error("ideal index {0} out of range")]
    IndexOutOfRange(usize),
}

impl Error {
    /// Stable variant name, printed by the command-line front end.
    pub fn name(&self) -> &'static str {
        match self {
            Error::EmptyInput => "EmptyInput",
            Error::NonPositiveGenerator => "NonPositiveGenerator",
            Error::NotCoFinite(_) => "NotCoFinite",
            Error::NotASemigroup(_) => "NotASemigroup",
            Error::FullMonoid => "FullMonoid",
            Error::NotSpecialGap(_) => "NotSpecialGap",
            Error::NotAnIdeal(_) => "NotAnIdeal",
            Error::NotNormalized => "NotNormalized",
            Error::LengthMismatch(..) => "LengthMismatch",
            Error::AmbientMismatch => "AmbientMismatch",
            Error::FullSet => "FullSet",
            Error::BoundTooSmall { .. } => "BoundTooSmall",
            Error::IdempotentInput => "IdempotentInput",
            Error::WrongMultiplicity(_) => "WrongMultiplicity",
            Error::NotALattice(..) => "NotALattice",
            Error::NotMultiplicityThreePoset(_) => "NotMultiplicityThreePoset",
            Error::InvalidPoset(_) => "InvalidPoset",
            Error::UnknownCheckName(_) => "UnknownCheckName",
            Error::IndexOutOfRange(_) => "IndexOutOfRange",
        }
    }
}

/// The first constraint a candidate Kunz vector fails when validated as an
/// ideal of `S = (k_1, …, k_{m-1})`. Coordinates are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    /// `x_i > k_i`, so `S ⊄ I`.
    ExceedsAmbient { coordinate: usize, multiplicity: u32 },
    /// `(I + S)` has a smaller threshold than `I` in this class.
    NotClosed { coordinate: usize, multiplicity: u32 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Multiplicity three reads off the named inequalities x ≤ u, y ≤ v,
        // x + u ≥ y, y + v + 1 ≥ x.
        match *self {
            Violation::ExceedsAmbient { coordinate: 1, multiplicity: 3 } => f.write_str("x <= u"),
            Violation::ExceedsAmbient { coordinate: 2, multiplicity: 3 } => f.write_str("y <= v"),
            Violation::NotClosed { coordinate: 2, multiplicity: 3 } => f.write_str("x + u >= y"),
            Violation::NotClosed { coordinate: 1, multiplicity: 3 } => {
                f.write_str("y + v + 1 >= x")
            }
            Violation::ExceedsAmbient { coordinate, .. } => {
                write!(f, "x_{coordinate} <= k_{coordinate}")
            }
            Violation::NotClosed { coordinate, .. } => {
                write!(f, "I + S = I fails in coordinate {coordinate}")
            }
        }
    }
}
