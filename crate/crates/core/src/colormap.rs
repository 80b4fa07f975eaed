use std::fmt;

use serde::{Deserialize, Serialize};

use crate::colorspace::SrgbColor;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ColormapKind {
    Sequential,
    Diverging,
    Cyclic,
    Qualitative,
}

impl fmt::Display for ColormapKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ColormapKind::Sequential => "sequential",
            ColormapKind::Diverging => "diverging",
            ColormapKind::Cyclic => "cyclic",
            ColormapKind::Qualitative => "qualitative",
        })
    }
}

/// A named, ordered list of in-gamut sRGB samples.
#[derive(Debug, Clone, PartialEq)]
pub struct Colormap {
    name: String,
    kind: ColormapKind,
    samples: Vec<SrgbColor>,
}

impl Colormap {
    pub fn new(name: impl Into<String>, kind: ColormapKind, samples: Vec<SrgbColor>) -> Result<Self> {
        let name = name.into();
        if name.trim().is_empty() {
            return Err(Error::InvalidColormap("name must not be empty".into()));
        }
        if samples.len() < 2 {
            return Err(Error::InvalidColormap(format!(
                "{name}: need at least 2 samples, got {}",
                samples.len()
            )));
        }
        if let Some(i) = samples.iter().position(|c| !c.is_finite() || !c.is_in_gamut()) {
            return Err(Error::InvalidColormap(format!(
                "{name}: sample {i} {:?} is outside [0, 1]",
                samples[i].to_array()
            )));
        }
        Ok(Self { name, kind, samples })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> ColormapKind {
        self.kind
    }

    pub fn samples(&self) -> &[SrgbColor] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn reversed(&self) -> Self {
        let mut samples = self.samples.clone();
        samples.reverse();
        Self {
            name: format!("{}_r", self.name),
            kind: self.kind,
            samples,
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        let name = name.into();
        if !name.trim().is_empty() {
            self.name = name;
        }
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        let ok = vec![SrgbColor::gray(0.0), SrgbColor::gray(1.0)];
        assert!(Colormap::new("bw", ColormapKind::Sequential, ok.clone()).is_ok());
        assert!(Colormap::new("", ColormapKind::Sequential, ok).is_err());
        assert!(Colormap::new("one", ColormapKind::Sequential, vec![SrgbColor::gray(0.5)]).is_err());
        let bad = vec![SrgbColor::gray(0.0), SrgbColor::new(1.2, 0.0, 0.0)];
        assert!(Colormap::new("bad", ColormapKind::Sequential, bad).is_err());
        let nan = vec![SrgbColor::gray(0.0), SrgbColor::new(f64::NAN, 0.0, 0.0)];
        assert!(Colormap::new("nan", ColormapKind::Sequential, nan).is_err());
    }

    #[test]
    fn reversal_round_trips() {
        let c = Colormap::new(
            "x",
            ColormapKind::Sequential,
            vec![SrgbColor::gray(0.0), SrgbColor::gray(0.3), SrgbColor::gray(1.0)],
        )
        .unwrap();
        assert_eq!(c.reversed().reversed().samples(), c.samples());
        assert_eq!(c.reversed().samples()[0], SrgbColor::gray(1.0));
    }
}
