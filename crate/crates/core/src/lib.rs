//! Perceptual colormap analysis and construction in CAM02-UCS.
//!
//! [`colorspace`] converts between sRGB, XYZ and CAM02-UCS. [`cvd`] simulates
//! color-vision deficiencies and grayscale printing. [`metrics`] computes the
//! perceptual profile of a colormap and the audit verdicts. [`generator`]
//! builds uniform colormaps from a lightness ramp and a chroma path, and
//! [`io`] holds the embedded fixtures and file formats.

pub mod colormap;
pub mod colorspace;
pub mod cvd;
pub mod error;
pub mod generator;
pub mod io;
pub mod metrics;
pub mod numeric;
pub mod serial;

mod fixtures;
mod machado;

pub use colormap::{Colormap, ColormapKind};
pub use colorspace::{delta_e, Cam02Ucs, JabColor, SrgbColor, ViewingConditions, XyzColor};
pub use cvd::{simulate_cvd, to_grayscale, CvdKind, CvdSpec};
pub use error::{Error, Result};
pub use generator::{generate, GamutMode, PathSpec};
pub use io::{load_colormap, registry_get, save_colormap, Format};
pub use metrics::{audit, AuditOptions, AuditReport};
