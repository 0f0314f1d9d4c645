use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("two-sided coefficient list must have odd length, got {0}")]
    EvenLength(usize),

    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix data has {got} entries, expected {expected}")]
    ShapeMismatch { expected: usize, got: usize },

    #[error(
        "Jacobi SVD did not converge after {sweeps} sweeps (best off-orthogonality {residual:e})"
    )]
    NonConvergence { sweeps: usize, residual: f64 },

    #[error("coefficient list is empty")]
    EmptyCoefficients,

    #[error("diagonal coefficient must be real, imaginary part is {0:e}")]
    NonRealDiagonal(f64),

    #[error("height {c} does not exceed |a0| = {a0_abs}; the strip map is undefined there")]
    StripDomain { c: f64, a0_abs: f64 },

    #[error("series has nonzero constant term {0}")]
    NonzeroConstantTerm(f64),

    #[error("series division by a jet with zero constant term")]
    ZeroDivisor,

    #[error("constant term has modulus {0} >= 1")]
    OutsideDisk(f64),

    #[error("jet degrees differ: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("the zero jet has no extremal Blaschke product")]
    ZeroJet,

    #[error("extremal denominator is ill-conditioned (|s0| = {0:e})")]
    IllConditioned(f64),

    #[error("denominator vanishes at the origin")]
    ZeroDenominatorAtOrigin,

    #[error("boundary values are not unimodular (max deviation {0:e})")]
    NotUnimodular(f64),

    #[error("winding number {0} is not close to an integer")]
    WindingResidual(f64),

    #[error("invalid step function: {0}")]
    InvalidStepFunction(String),

    #[error("angle {0} is a jump of the step function")]
    AtJump(f64),

    #[error("coincident or degenerate jump angles")]
    DegenerateArcs,

    #[error("order-0 (constant) input: {0}")]
    ConstantSymbol(String),

    #[error("zero matrix has no normalized minimizer")]
    ZeroMatrix,

    #[error("norm equation never crosses 1 on the search interval; sampled profile {profile:?}")]
    BracketFailure { profile: Vec<(f64, f64)> },

    #[error("norm equation residual {residual:e} exceeds tolerance {tol:e}")]
    NormEquation { residual: f64, tol: f64 },

    #[error("Fourier residual {residual:e} exceeds threshold {threshold:e}")]
    FourierResidual { residual: f64, threshold: f64 },

    #[error("parameters outside the admissible region: {0}")]
    InadmissibleParameters(String),

    #[error("unsupported family order {0}")]
    UnsupportedOrder(usize),

    #[error("root not bracketed: {0}")]
    NotBracketed(String),

    #[error("arcs are not disjoint: {0}")]
    OverlappingArcs(String),
}
