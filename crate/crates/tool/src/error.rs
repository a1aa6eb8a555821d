use std::path::PathBuf;

pub type ToolResult<T> = Result<T, ToolError>;

#[derive(Debug, thiserror::Error)]
pub enum ToolError {
    #[error(transparent)]
    Core(#[from] kunz_core::Error),
    #[error("placement hints need multiplicity 3, got {0}")]
    UnsupportedMultiplicityForLayout(u32),
    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
}

impl ToolError {
    /// Stable name printed by the command line.
    pub fn name(&self) -> &'static str {
        match self {
            ToolError::Core(e) => e.name(),
            ToolError::UnsupportedMultiplicityForLayout(_) => "UnsupportedMultiplicityForLayout",
            ToolError::Io { .. } => "Io",
            ToolError::Json(_) => "InvalidJson",
        }
    }
}
