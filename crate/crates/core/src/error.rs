use thiserror::Error;

use crate::lattice::Elem;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected arity {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("{0} is not a member of the lattice")]
    NotAMember(Elem),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("index {index} out of range for {len} components")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("invalid lattice: {0}")]
    InvalidLattice(String),

    #[error("subset is not meet-closed: {left} ∧ {right} = {meet} is missing")]
    NotMeetClosed { left: Elem, right: Elem, meet: Elem },

    #[error("abstraction must contain the top element {0}")]
    MissingTop(Elem),

    #[error("no maximum payoff for player {player} against {profile}")]
    NoMaximum { player: usize, profile: Elem },

    #[error("iteration did not converge within {cap} steps (last iterates {previous} -> {last})")]
    NonConvergence {
        cap: usize,
        previous: Elem,
        last: Elem,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("incompatible grid for ceil abstraction: {0}")]
    IncompatibleStep(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("no consistent solution: {0}")]
    NoSolution(String),
}

impl Error {
    pub fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
