use thiserror::Error;

/// Errors raised by the algebraic routines in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial division leaves a nonzero remainder")]
    NotDivisible,
    #[error("leading coefficient must be nonzero")]
    ZeroLeading,
    #[error("the zero polynomial has no root multiset")]
    ZeroPolynomial,
    #[error("multiset is not contained in the root multiset")]
    NotSubmultiset,
    #[error("{0} is not a root")]
    NotARoot(String),
    #[error("{0} is not a member of the multiset")]
    NotAMember(String),
    #[error("star undefined at {0}: no strictly preceding complement root")]
    StarUndefined(String),
    #[error("g must be a nonzero polynomial")]
    ZeroG,
    #[error("u must have degree at least one")]
    ConstantU,
    #[error("p(h+1)q(h) - u(h) is not constant (got {0})")]
    NotConstant(String),
    #[error("polynomial does not split over the rationals")]
    NotSplit,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("defining relation violated: {0}")]
    RelationViolated(String),
    #[error("twist parameter must be nonzero")]
    ZeroTwist,
    #[error("matrix sizes do not match")]
    SizeMismatch,
    #[error("the simplicity criterion requires X = R \\ {{lambda}}")]
    WrongX,
    #[error("expected an exponent polynomial of degree {expected}, got {found}")]
    WrongDegree { expected: String, found: String },
    #[error("closed-form matrices exist only for non-dual modules")]
    DualUnsupported,
    #[error("enumeration cap of {0} exceeded")]
    CapExceeded(usize),
    #[error("search grid cannot contain every candidate: {0}")]
    GridTooSmall(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
