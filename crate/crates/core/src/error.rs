use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("braid generator index {index} out of range for {strands} strands")]
    GeneratorOutOfRange { index: usize, strands: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("braid does not preserve the strand coloring")]
    NotColorPreserving,
    #[error("color indices ({i}, {j}) invalid for {colors} colors")]
    ColorIndex { i: usize, j: usize, colors: usize },
    #[error("right multiplication does not descend to the induced module: {0}")]
    NotWellDefined(String),
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("Jordan blocks of size {size} occur an odd number of times ({count})")]
    OddBlockMultiplicity { size: usize, count: usize },
    #[error("spectrum does not have even multiplicities")]
    SpectrumNotDoubled,
    #[error("matrix is not in the declared space: {0}")]
    NotInSpace(String),
    #[error("eigenvalues must be pairwise distinct")]
    RepeatedEigenvalue,
    #[error("trace condition sum n_i u_i = 0 violated")]
    TraceCondition,
    #[error("B has {found} distinct eigenvalues, expected {expected}")]
    EigenvalueCount { expected: usize, found: usize },
    #[error("spectrum of B is not rational; exact verification unavailable")]
    NonRationalSpectrum,
    #[error("singular system")]
    Singular,
    #[error("Newton iteration failed to converge (residual {residual:e})")]
    NewtonDivergence { residual: f64 },
    #[error("duplicate critical points for labels {0} and {1}")]
    DuplicateCriticalPoint(usize, usize),
    #[error("values collide: separation {separation:e} below {min_separation:e}")]
    Collision { separation: f64, min_separation: f64 },
    #[error("unresolved near-collision after {refinements} refinements at t = {t}")]
    TrackingFailure { refinements: u32, t: f64 },
    #[error("{0}")]
    Invalid(String),
}
