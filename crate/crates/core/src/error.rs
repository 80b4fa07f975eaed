use std::io;
use std::path::PathBuf;

use thiserror::Error;

use crate::colorspace::JabColor;

/// Errors produced by conversions, metrics, generation and file handling.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid viewing conditions: {0}")]
    Config(String),

    #[error("J'={:.6} a'={:.6} b'={:.6} is out of gamut", jab.j, jab.a, jab.b)]
    OutOfGamut { jab: JabColor },

    #[error("degenerate colormap: {0}")]
    Degenerate(String),

    #[error("invalid colormap: {0}")]
    InvalidColormap(String),

    #[error("invalid path spec: {0}")]
    InvalidSpec(String),

    #[error(
        "path leaves the sRGB gamut; worst offender at t={t:.6}: J'={:.6} a'={:.6} b'={:.6} (excess {excess:.3e})",
        jab.j, jab.a, jab.b
    )]
    GamutViolation { t: f64, jab: JabColor, excess: f64 },

    #[error("unknown colormap {name:?}; available: {}", available.join(", "))]
    NotFound { name: String, available: Vec<String> },

    #[error("{source_name}: line {line}: {message}")]
    Parse {
        source_name: String,
        line: usize,
        message: String,
    },

    #[error("component out of range at row {row}: {message}")]
    OutOfRange { row: usize, message: String },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },

    #[error("{0}")]
    Usage(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
