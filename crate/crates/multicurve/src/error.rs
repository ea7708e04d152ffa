use thiserror::Error;

/// Errors produced by surface, curve and graph operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid surface g{genus}n{punctures}: Euler characteristic {chi} is not negative")]
    NonHyperbolicSurface {
        genus: usize,
        punctures: usize,
        chi: i64,
    },
    #[error("surface g{genus}n{punctures} is a pair of pants and carries no essential curve")]
    PantsHasNoCurves { genus: usize, punctures: usize },
    #[error("closed surface g{genus}n0 has no ideal triangulation; curves live on the marked-point proxy g{genus}n1")]
    ClosedSurfaceTriangulation { genus: usize },
    #[error("invalid triangulation: {0}")]
    BadTriangulation(String),
    #[error("edge {0} is not flippable (folded configuration)")]
    UnflippableEdge(usize),
    #[error("invalid trace: {0}")]
    BadTrace(String),
    #[error("curve is inessential: {0}")]
    InessentialCurve(String),
    #[error("invalid arc: {0}")]
    BadArc(String),
    #[error("invalid multicurve: {0}")]
    BadMulticurve(String),
    #[error("curves live on different surfaces or triangulations")]
    SurfaceMismatch,
    #[error("curve meets the multicurve and cannot be relocated")]
    NotDisjoint,
    #[error("nice-pair precondition violated: {0}")]
    NicePairPrecondition(String),
    #[error("unknown generator id {0}")]
    UnknownGenerator(String),
    #[error("operation precondition violated: {0}")]
    Precondition(String),
    #[error("enumeration budget exhausted: {0}")]
    BudgetExhausted(String),
    #[error("search failed: {0}")]
    SearchFailed(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("serialization: {0}")]
    Serialization(String),
    #[error("unsupported schema version {found}, expected {expected}")]
    SchemaVersion { found: String, expected: String },
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
