use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("point {point} is out of range for a ground set of size {size}")]
    OutOfRange { point: usize, size: usize },
    #[error("point {0} appears more than once")]
    Repeated(usize),
    #[error("cycle type parts must be positive")]
    ZeroPart,
    #[error("cannot parse cycle type {0:?}")]
    BadCycleType(String),
}

/// Failures of map construction. Axiom violations carry the flag that
/// witnesses them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("alpha has {alpha} points, beta has {beta}")]
    FlagSizeMismatch { alpha: usize, beta: usize },
    #[error("rotation acts on {rotation} points but the flag set has {flags}")]
    RotationSizeMismatch { rotation: usize, flags: usize },
    #[error("{name} is not a fixed-point-free involution (flag {flag})")]
    NotInvolution { name: &'static str, flag: usize },
    #[error("alpha and beta do not commute at flag {0}")]
    NotCommuting(usize),
    #[error("the Klein group orbit of flag {0} has fewer than 4 flags")]
    DegenerateQuadricell(usize),
    #[error("AXIOM_I: a power of P maps flag {0} to its alpha image")]
    AxiomI(usize),
    #[error("AXIOM_II: alpha P != P^-1 alpha at flag {0}")]
    AxiomII(usize),
    #[error("AXIOM_III: <alpha, beta, P> does not reach flag {0} from flag 0")]
    AxiomIII(usize),
    #[error("internal: <alpha beta, P> has {0} orbits on a valid map")]
    Internal(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("complete graphs need n >= 3, got {0}")]
    TooSmall(usize),
    #[error("expected {expected} vertex rotations, got {got}")]
    WrongVertexCount { expected: usize, got: usize },
    #[error("rotation at vertex {vertex} is not a permutation of its neighbours")]
    NotNeighbourPermutation { vertex: usize },
    #[error("rotation at vertex {vertex} is not normalised (least neighbour first, sign +)")]
    NotNormalised { vertex: usize },
    #[error("map has {got} flags, universe of K_{n} has {expected}")]
    UniverseMismatch { n: usize, expected: usize, got: usize },
    #[error("vertex permutation acts on {got} points, expected {n}")]
    ActionSizeMismatch { n: usize, got: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Perm { line: usize, source: PermError },
    #[error("{0}")]
    Map(#[from] MapError),
    #[error("{0}")]
    Code(#[from] CodeError),
}

impl ParseError {
    pub(crate) fn syntax(line: usize, message: impl Into<String>) -> Self {
        ParseError::Syntax {
            line,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("search budget exhausted after {examined} candidates")]
pub struct BudgetExceeded {
    pub examined: u64,
}
