use thiserror::Error;

/// Invalid graph data or cycle shape.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has no vertices")]
    Empty,
    #[error("duplicate vertex name `{0}`")]
    DuplicateVertex(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("edge `{0}`-`{0}` is a self-loop")]
    SelfLoop(String),
    #[error("edge `{0}`-`{1}` has multiplicity 0")]
    ZeroMultiplicity(String, String),
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid intersection matrix entry ({row}, {col})")]
    InvalidMatrix { row: usize, col: usize },
}

/// Failures of the exact linear algebra routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("off-diagonal entry ({row}, {col}) is positive")]
    HypothesisViolation { row: usize, col: usize },
    #[error("no positive certificate: {0}")]
    CertificateNotFound(NotFoundReason),
}

/// Why [`find_certificate`](crate::linalg::find_certificate) came back empty.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NotFoundReason {
    #[error("matrix is singular")]
    Singular,
    #[error("solution of A v = 1 has non-positive entry at index {index}")]
    NotPositive { index: usize },
}

/// Failures of the cycle, discrepancy and link analyses.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("intersection matrix is not negative definite")]
    NotContractible,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("Z.Z + Z.K = {0} is odd")]
    ParityViolation(i64),
    #[error("subcycle box has {size} elements, limit is {limit}")]
    BoxTooLarge { size: u128, limit: u128 },
    #[error("cycle is not effective")]
    NotEffective,
    #[error("precondition violated: {0}")]
    PreconditionViolation(String),
    #[error("Laufer sequence exceeded {0} steps")]
    IterationLimit(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Failures while applying blowups or running a script.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BlowupError {
    #[error("unknown curve `{0}`")]
    UnknownCurve(String),
    #[error("curve name `{0}` already in use")]
    DuplicateCurve(String),
    #[error("curves `{0}` and `{1}` do not intersect")]
    NotIntersecting(String, String),
    #[error("blowup_at needs two distinct curves, got `{0}` twice")]
    SameCurve(String),
    #[error("select lists no curves")]
    EmptySelection,
    #[error("script has no select instruction")]
    NoSelection,
    #[error("instructions after select")]
    TrailingInstructions,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("instruction {index}: {source}")]
    Script {
        index: usize,
        #[source]
        source: Box<BlowupError>,
    },
}

/// Syntax errors in the graph and script text formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError { line, message: message.into() }
    }
}
