use thiserror::Error;

/// Errors for construction and validation of embeddings, disks, orderings
/// and drawings.
///
/// Verifiers do not use this type: a verification that finds violations
/// returns a [`crate::VerifyReport`] listing them instead of failing.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),

    #[error("not a triangulation: {0}")]
    NotTriangulation(String),

    #[error("not a triangulated disk: {0}")]
    NotTriangulatedDisk(String),

    #[error("not internally 4-connected: {0}")]
    NotInternally4Connected(String),

    #[error("separating triangle {0:?}: graph is not 4-connected")]
    SeparatingTriangle([usize; 3]),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("structural error: {0}")]
    Structure(String),

    #[error("invalid ordering: {0}")]
    InvalidOrdering(String),

    #[error("generation failed after {attempts} attempts (try another seed)")]
    GenerationFailed { attempts: u64 },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Wraps a JSON parse error without stacking display prefixes when the
/// message already carries one of our own (serde routes validation errors
/// from `TryFrom` conversions through its error type as plain text).
pub(crate) fn wrap_parse_error(
    e: serde_json::Error,
    prefix: &str,
    wrap: fn(String) -> Error,
) -> Error {
    let msg = e.to_string();
    let msg = msg.strip_prefix(prefix).map(str::to_string).unwrap_or(msg);
    wrap(msg)
}
