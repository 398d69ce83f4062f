use thiserror::Error;

/// Errors raised by geometric arithmetic and analysis routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GError {
    #[error("range error: {0}")]
    Range(String),

    #[error("division by geometric zero (divisor is 1)")]
    DivisionByGeometricZero,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("sign error: {0}")]
    Sign(String),

    #[error("syntax error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("limit does not exist: {0}")]
    NoLimit(String),

    #[error("target not bracketed: {0}")]
    Bracket(String),

    #[error("unsupported order {order}: {reason}")]
    UnsupportedOrder { order: usize, reason: String },

    #[error("operation needs a symbolic expression, got built-in `{0}`")]
    NotAnalytic(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("derivative of order {order} failed: {source}")]
    AtOrder {
        order: usize,
        #[source]
        source: Box<GError>,
    },
}

impl GError {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        GError::Domain(msg.into())
    }

    pub(crate) fn range(msg: impl Into<String>) -> Self {
        GError::Range(msg.into())
    }

    pub(crate) fn sign(msg: impl Into<String>) -> Self {
        GError::Sign(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        GError::Precondition(msg.into())
    }

    /// Innermost error, looking through [`GError::AtOrder`] wrappers.
    pub fn root(&self) -> &GError {
        match self {
            GError::AtOrder { source, .. } => source.root(),
            other => other,
        }
    }

    pub fn is_parse(&self) -> bool {
        matches!(self.root(), GError::Parse { .. })
    }
}

pub type Result<T, E = GError> = std::result::Result<T, E>;
