use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate interpolation node {0}")]
    DuplicateNode(i64),
    #[error("interpolation needs at least one node")]
    NoNodes,
    #[error("pole of undetermined order: 1/(1 - e^(t*x)) with x = 0")]
    PoleOfUndeterminedOrder,
    #[error("order {order} lies outside the guaranteed window (correct through t^{valid_through})")]
    OutsideWindow { order: i64, valid_through: i64 },
    #[error("entry {index} has degree {degree}, above its index")]
    DegreeBound { index: usize, degree: i64 },
    #[error("empty input")]
    EmptyInput,
    #[error("inconsistent dimension: point {index} has {found} coordinates, expected {expected}")]
    InconsistentDimension { index: usize, expected: usize, found: usize },
    #[error("ambient dimension must be at least 1")]
    ZeroDimension,
    #[error("not full-dimensional: affine span has dimension {span} in ambient dimension {ambient}")]
    NotFullDimensional { span: usize, ambient: usize },
    #[error("vertex {0} is not simple")]
    VertexNotSimple(usize),
    #[error("index {0} is not a vertex of the polytope")]
    NoSuchVertex(usize),
    #[error("polytope not simple")]
    NotSimple,
    #[error("polytope not smooth")]
    NotSmooth,
    #[error("xi not generic: pairing with edge generator {generator} at vertex {vertex} vanishes")]
    XiNotGeneric { vertex: usize, generator: String },
    #[error("covector has {found} entries, expected {expected}")]
    CovectorDimension { expected: usize, found: usize },
    #[error("specialization entry x[{0}] is zero")]
    ZeroSpecialization(usize),
    #[error("subset size {p} exceeds dimension {n}")]
    SubsetTooLarge { p: usize, n: usize },
    #[error("coordinates too large for lattice-point enumeration")]
    CoordinateOverflow,
    #[error("unknown family '{0}'")]
    UnknownFamily(String),
    #[error("invalid parameters for family '{family}': {reason}")]
    InvalidFamilyParams { family: String, reason: String },
    #[error("reciprocity mismatch on {dim}-faces at dilation {dilation}: reciprocity gives {reciprocity}, direct count gives {direct}")]
    ReciprocityMismatch { dim: usize, dilation: u64, reciprocity: String, direct: String },
    #[error("internal consistency error: {0}")]
    Consistency(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
