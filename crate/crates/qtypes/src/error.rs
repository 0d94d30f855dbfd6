//! Crate-wide error type.

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("arity mismatch: expected {expected} variables, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("rank-deficient set of linear forms: expected rank {expected}, got {got}")]
    RankDeficient { expected: usize, got: usize },

    #[error("form is not homogeneous linear")]
    NotLinearForm,

    #[error("constant curve germ: all components vanish identically")]
    ConstantCurve,

    #[error("curve component has nonzero constant term; curves must be centered at the base point")]
    CurveNotCentered,

    #[error("improper ideal: generator has nonzero value at the base point")]
    ImproperIdeal,

    #[error("ideal has no generators")]
    EmptyIdeal,

    #[error("hypersurface part does not vanish at the base point")]
    HypersurfaceNotCentered,

    #[error("base points of the inputs differ")]
    BasePointMismatch,

    #[error("generator is not a monomial")]
    NonMonomialGenerator,

    #[error("search budget {budget} is below the required bound {required}")]
    BudgetTooSmall { budget: u32, required: u32 },

    #[error("computation budget exceeded ({what}); raise the limits to continue")]
    BudgetExceeded { what: String },

    #[error("slice is degenerate for this variety (singular restriction matrix)")]
    DegenerateSlice,

    #[error("all {rejected} sampled slices were degenerate; sampler configuration is unusable")]
    AllSamplesDegenerate { rejected: usize },

    #[error("tangent direction of the curve lies in the directrix subspace")]
    TangentInDirectrix,

    #[error("parameter out of range: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
