//! Crate-wide error type.

/// Errors raised anywhere in the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("algebra mismatch: {0}")]
    AlgebraMismatch(String),
    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),
    #[error("generator `{0}` must have degree >= 1")]
    InvalidDegree(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("image of `{gen}` must be zero or homogeneous of degree {expected}")]
    NonHomogeneousImage { gen: String, expected: u32 },
    #[error("coefficient extraction requires an odd generator set; `{0}` is even")]
    ExtractionSetNotOdd(String),
    #[error("d^2 != 0 on generator `{0}`")]
    DifferentialNotSquareZero(String),
    #[error("model is not pure: {0}")]
    NotPure(String),
    #[error("model is not coformal: {0}")]
    NotCoformal(String),
    #[error("basis must list each even generator exactly once: {0}")]
    InvalidBasis(String),
    #[error("change of basis matrix is not invertible")]
    SingularBasisChange,
    #[error("change of basis mixes generators of different degrees")]
    InhomogeneousBasisChange,
    #[error("name collision while priming generators: `{0}`")]
    NameCollision(String),
    #[error("model is not verified elliptic: {0}")]
    NotElliptic(String),
    #[error("requested degree {requested} exceeds safe truncation {bound}; cohomology above the formal dimension of an elliptic model vanishes and is refused")]
    TruncationExceeded { requested: u32, bound: u32 },
    #[error("top-degree cohomology is not one-dimensional (dimension {0}); input does not look elliptic")]
    TopClassNotUnique(usize),
    #[error("element is not a cocycle")]
    NotACocycle,
    #[error("class is zero")]
    ZeroClass,
    #[error("no Poincare dual exists; input violates Poincare duality")]
    NoPoincareDual,
    #[error("not computable by this tool: {0}")]
    NotComputable(String),
    #[error("family conditions unsatisfied: {0}")]
    FamilyConditionsUnsatisfied(String),
    #[error("not a valid L-witness: product of the supplied classes vanishes")]
    NotAValidLWitness,
    #[error("construction bug: {0}")]
    ConstructionBug(String),
    #[error("linear system has no solution: {0}")]
    Unsolvable(String),
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for "cannot compute this with the stated hypotheses" refusals,
    /// as opposed to invalid input. CLI exit code 2.
    pub fn is_refusal(&self) -> bool {
        matches!(
            self,
            Error::NotComputable(_)
                | Error::TruncationExceeded { .. }
                | Error::FamilyConditionsUnsatisfied(_)
                | Error::NotElliptic(_)
                | Error::NotCoformal(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
