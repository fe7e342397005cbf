//! Error kinds shared by the whole crate.

use thiserror::Error;

/// Everything that can go wrong when validating inputs or running the
/// geometric/algebraic operations. Each rejected precondition gets its own
/// variant so callers (and tests) can match on the exact failure.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid box: need 1 < k < n-1, got k={k}, n={n}")]
    InvalidBox { k: usize, n: usize },

    #[error("partition has {got} parts, expected exactly {expected}")]
    WrongPartitionLength { expected: usize, got: usize },

    #[error("partition part {value} is negative")]
    NegativePart { value: i64 },

    #[error("partition is not weakly decreasing")]
    NotWeaklyDecreasing,

    #[error("partition part {part} exceeds box width {width}")]
    PartExceedsWidth { part: i64, width: i64 },

    #[error("special class degree h={h} outside [1, {width}]")]
    PieriDegreeOutOfRange { h: i64, width: i64 },

    #[error("Pieri product of the given class is not a single term; expected one of the two maximal plane classes")]
    NotAMaximalPlaneClass,

    #[error("matrix has rank {got}, expected {expected}")]
    RankDeficient { expected: usize, got: usize },

    #[error("point does not satisfy the Pluecker relations")]
    NotOnGrassmannian,

    #[error("Pluecker vector is not decomposable: annihilator has dimension {annihilator_dim}, expected {k}")]
    NotDecomposable { annihilator_dim: usize, k: usize },

    #[error("flag matrix is singular; a flag basis must be invertible")]
    SingularFlag,

    #[error("family {family} needs m <= {max_m} in G({k},{n}), got m={m}")]
    InvalidFamilySpec {
        family: &'static str,
        k: usize,
        n: usize,
        m: usize,
        max_m: usize,
    },

    #[error("plane dimension m must be at least 2, got {m}")]
    PlaneDimensionTooSmall { m: usize },

    #[error("plane matches neither the sub-family nor the quot-family intersection/span signature")]
    UnclassifiablePlane,

    #[error("syzygy bound {bound} is below the required {required}")]
    HomBoundTooSmall { bound: u32, required: u32 },

    #[error("hypersurface degree must be at least 2 for span computation, got {degree}")]
    SpanDegreeTooSmall { degree: u32 },

    #[error("polynomial fails the squarefree guard: gcd(f, df/dx_{var}) is not constant")]
    NotSquarefree { var: usize },

    #[error("polynomial is zero where a nonzero form is required")]
    ZeroPolynomial,

    #[error(
        "hypersurface degree d={d} is below 3; the component classification \
         is only established for degree >= 3"
    )]
    DegreeBelowClassificationRange { d: u32 },

    #[error("flag steps must satisfy 0 <= a < b <= n, got a={a}, b={b}, n={n}")]
    InvalidFlagSteps { a: usize, b: usize, n: usize },

    #[error("bundle rank {rank} is below 3 (fibers must be projective spaces of dimension >= 2)")]
    BundleRankTooSmall { rank: usize },

    #[error("hypersurface spec invalid: {0}")]
    InvalidHypersurfaceSpec(String),

    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),

    #[error("cannot parse partition from {0:?}")]
    ParsePartition(String),

    #[error("cannot parse polynomial from {0:?}")]
    ParsePolynomial(String),

    #[error("cannot parse plane family spec: {0}")]
    ParseFamilySpec(String),

    #[error("cannot parse component report: {0}")]
    ParseReport(String),

    #[error("malformed matrix: {0}")]
    MalformedMatrix(String),

    #[error("zero vector where a nonzero one is required")]
    ZeroVector,
}

pub type Result<T> = std::result::Result<T, Error>;
