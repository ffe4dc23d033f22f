//! Crate-wide error type.

/// Errors produced by mesh handling, assembly and solvers.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("mesh validation failed: {0}")]
    MeshValidation(String),

    #[error("mesh parse error at line {line}: {msg}")]
    MeshParse { line: usize, msg: String },

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("function space mismatch: {0}")]
    SpaceMismatch(String),

    #[error("fields live on different meshes")]
    MeshMismatch,

    #[error("non-finite value: {0}")]
    NonFinite(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// The linear system has no unique solution. The message names the
    /// suspected nullspace when one is known (e.g. an unpinned constant
    /// pressure mode on an enclosed flow).
    #[error("singular system: {0}")]
    SingularSystem(String),

    /// Derivative of the eddy-viscosity term does not exist at the requested
    /// state (s < 2 with zero regularization at a point where the velocity
    /// gradient vanishes).
    #[error("singular viscosity derivative: {0}")]
    SingularViscosityDerivative(String),

    #[error("nonlinear solve failed at step {step}: {msg}; residual history {history:?}")]
    StepFailure {
        step: usize,
        msg: String,
        history: Vec<f64>,
    },

    #[error("boundary condition error: {0}")]
    BoundaryCondition(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
