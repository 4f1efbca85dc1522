use thiserror::Error;

#[derive(Error, Debug)]
pub enum ForgeError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("size bound exceeded: {0}")]
    Bound(String),
    #[error("internal consistency error: {0}")]
    Internal(String),
    #[error("basis expansion failed, residual: {0}")]
    Residual(String),
}
