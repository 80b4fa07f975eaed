//! Color-vision-deficiency simulation and lightness-preserving grayscale.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::colormap::Colormap;
use crate::colorspace::{Cam02Ucs, SrgbColor};
use crate::error::{Error, Result};
use crate::machado::{DEUTAN, PROTAN, TRITAN};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CvdKind {
    Protan,
    Deutan,
    Tritan,
}

impl fmt::Display for CvdKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CvdKind::Protan => "protan",
            CvdKind::Deutan => "deutan",
            CvdKind::Tritan => "tritan",
        })
    }
}

/// Deficiency axis plus severity in percent; 100 is the dichromat ("-anopia").
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CvdSpec {
    kind: CvdKind,
    severity: f64,
}

impl CvdSpec {
    pub fn new(kind: CvdKind, severity: f64) -> Result<Self> {
        if !(0.0..=100.0).contains(&severity) {
            return Err(Error::Domain(format!(
                "CVD severity must lie in [0, 100], got {severity}"
            )));
        }
        Ok(Self { kind, severity })
    }

    pub fn kind(&self) -> CvdKind {
        self.kind
    }

    pub fn severity(&self) -> f64 {
        self.severity
    }

    /// Short label such as `deutan50`.
    pub fn label(&self) -> String {
        format!("{}{}", self.kind, format_severity(self.severity))
    }
}

fn format_severity(s: f64) -> String {
    if s.fract() == 0.0 {
        format!("{}", s as i64)
    } else {
        format!("{s}")
    }
}

/// 3×3 transform applied to linear-RGB column vectors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CvdMatrix(pub [[f64; 3]; 3]);

impl CvdMatrix {
    pub fn apply(&self, v: [f64; 3]) -> [f64; 3] {
        let m = &self.0;
        [
            m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
            m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
            m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2],
        ]
    }
}

pub(crate) fn table(kind: CvdKind) -> &'static [[[f64; 3]; 3]; 11] {
    match kind {
        CvdKind::Protan => &PROTAN,
        CvdKind::Deutan => &DEUTAN,
        CvdKind::Tritan => &TRITAN,
    }
}

/// Machado matrix for `spec`, linearly interpolated between the tabulated
/// 10 % steps.
pub fn cvd_matrix(spec: CvdSpec) -> CvdMatrix {
    let steps = table(spec.kind);
    let pos = spec.severity / 10.0;
    let lower = (pos.floor() as usize).min(10);
    let frac = pos - lower as f64;
    if frac == 0.0 {
        return CvdMatrix(steps[lower]);
    }
    let (a, b) = (&steps[lower], &steps[lower + 1]);
    let mut m = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            m[i][j] = (1.0 - frac) * a[i][j] + frac * b[i][j];
        }
    }
    CvdMatrix(m)
}

/// Simulates `spec` on every sample. Also returns the largest amount any
/// linear component had to be clipped back into `[0, 1]`.
pub fn simulate_cvd_with_clipping(cmap: &Colormap, spec: CvdSpec) -> (Colormap, f64) {
    let m = cvd_matrix(spec);
    let mut max_clip = 0.0f64;
    let samples = cmap
        .samples()
        .iter()
        .map(|c| {
            let out = m.apply(c.to_linear()).map(|v| {
                let clipped = v.clamp(0.0, 1.0);
                max_clip = max_clip.max((v - clipped).abs());
                clipped
            });
            SrgbColor::from_linear(out).to_array().map(|v| v.clamp(0.0, 1.0))
        })
        .map(SrgbColor::from_array)
        .collect();
    let name = format!("{}_{}", cmap.name(), spec.label());
    let out = Colormap::new(name, cmap.kind(), samples).expect("clipped samples are in gamut");
    (out, max_clip)
}

pub fn simulate_cvd(cmap: &Colormap, spec: CvdSpec) -> Colormap {
    simulate_cvd_with_clipping(cmap, spec).0
}

/// Replaces each sample by the sRGB gray with the same J′.
pub fn to_grayscale(cmap: &Colormap, ucs: &Cam02Ucs) -> Result<Colormap> {
    let mut samples = Vec::with_capacity(cmap.len());
    for c in cmap.samples() {
        let j = ucs.srgb_to_jab(*c)?.j;
        let y = ucs.gray_for_lightness(j);
        samples.push(SrgbColor::gray(SrgbColor::from_linear([y; 3]).r.clamp(0.0, 1.0)));
    }
    Colormap::new(format!("{}_grayscale", cmap.name()), cmap.kind(), samples)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colormap::ColormapKind;

    const KINDS: [CvdKind; 3] = [CvdKind::Protan, CvdKind::Deutan, CvdKind::Tritan];

    fn identity() -> [[f64; 3]; 3] {
        [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]
    }

    #[test]
    fn severity_zero_is_identity() {
        for kind in KINDS {
            let m = cvd_matrix(CvdSpec::new(kind, 0.0).unwrap());
            assert_eq!(m.0, identity());
        }
    }

    #[test]
    fn protanopia_matches_table() {
        let m = cvd_matrix(CvdSpec::new(CvdKind::Protan, 100.0).unwrap());
        assert_eq!(
            m.0,
            [
                [0.152286, 1.052583, -0.204868],
                [0.114503, 0.786281, 0.099216],
                [-0.003882, -0.048116, 1.051998],
            ]
        );
    }

    #[test]
    fn deutan_fifty_lands_on_step() {
        let m = cvd_matrix(CvdSpec::new(CvdKind::Deutan, 50.0).unwrap());
        assert_eq!(
            m.0,
            [
                [0.547494, 0.607765, -0.155259],
                [0.181692, 0.781742, 0.036566],
                [-0.010410, 0.027275, 0.983136],
            ]
        );
    }

    #[test]
    fn interpolates_between_steps() {
        let lo = DEUTAN[5];
        let hi = DEUTAN[6];
        let m = cvd_matrix(CvdSpec::new(CvdKind::Deutan, 53.1).unwrap());
        for i in 0..3 {
            for j in 0..3 {
                let want = 0.69 * lo[i][j] + 0.31 * hi[i][j];
                assert!((m.0[i][j] - want).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn table_rows_sum_to_one() {
        for kind in KINDS {
            for step in table(kind) {
                for row in step {
                    let s: f64 = row.iter().sum();
                    assert!((s - 1.0).abs() <= 1.0000001e-6, "{kind} row sum {s}");
                }
            }
        }
    }

    #[test]
    fn continuous_in_severity() {
        for kind in KINDS {
            let steps = table(kind);
            let mut max_step = 0.0f64;
            for w in steps.windows(2) {
                for i in 0..3 {
                    for j in 0..3 {
                        max_step = max_step.max((w[1][i][j] - w[0][i][j]).abs());
                    }
                }
            }
            let eps = 0.01;
            for k in 0..1000 {
                let s = k as f64 * 0.1;
                let a = cvd_matrix(CvdSpec::new(kind, s).unwrap());
                let b = cvd_matrix(CvdSpec::new(kind, s + eps).unwrap());
                for i in 0..3 {
                    for j in 0..3 {
                        let d = (a.0[i][j] - b.0[i][j]).abs();
                        assert!(d <= eps * max_step / 10.0 + 1e-12);
                    }
                }
            }
        }
    }

    #[test]
    fn rejects_bad_severity() {
        assert!(CvdSpec::new(CvdKind::Protan, -1.0).is_err());
        assert!(CvdSpec::new(CvdKind::Protan, 100.5).is_err());
        assert!(CvdSpec::new(CvdKind::Protan, f64::NAN).is_err());
    }

    #[test]
    fn labels() {
        assert_eq!(CvdSpec::new(CvdKind::Deutan, 50.0).unwrap().label(), "deutan50");
        assert_eq!(CvdSpec::new(CvdKind::Protan, 12.5).unwrap().label(), "protan12.5");
    }

    #[test]
    fn grays_survive_every_deficiency() {
        let grays: Vec<_> = (0..=20).map(|i| SrgbColor::gray(i as f64 / 20.0)).collect();
        let cmap = Colormap::new("g", ColormapKind::Sequential, grays).unwrap();
        for kind in KINDS {
            for sev in [10.0, 37.5, 50.0, 100.0] {
                let out = simulate_cvd(&cmap, CvdSpec::new(kind, sev).unwrap());
                for (a, b) in cmap.samples().iter().zip(out.samples()) {
                    for (x, y) in a.to_array().iter().zip(b.to_array()) {
                        assert!((x - y).abs() < 1e-6, "{kind}{sev}: {x} vs {y}");
                    }
                }
            }
        }
    }

    #[test]
    fn clipping_is_reported() {
        let cmap = Colormap::new(
            "rg",
            ColormapKind::Sequential,
            vec![SrgbColor::new(1.0, 0.0, 0.0), SrgbColor::new(0.0, 1.0, 0.0)],
        )
        .unwrap();
        let (_, clip) = simulate_cvd_with_clipping(&cmap, CvdSpec::new(CvdKind::Protan, 100.0).unwrap());
        // Pure green under protanopia has R = 1.052583 before clipping.
        assert!((clip - 0.052583).abs() < 1e-9, "{clip}");
    }
}
