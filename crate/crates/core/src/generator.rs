//! Perceptually uniform colormap construction.
//!
//! A path is a linear J′ ramp combined with a smooth curve in the chroma
//! plane. The curve is a composite cubic Bézier with Catmull-Rom tangents
//! through the control points. Control points are (a′, b′) offsets from the
//! neutral axis at the same lightness, so `[0, 0]` always means gray. The
//! path is sampled densely, resampled at equal CAM02-UCS arc length, and
//! converted to sRGB.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::colormap::{Colormap, ColormapKind};
use crate::colorspace::{delta_e, Cam02Ucs, JabColor, SrgbColor};
use crate::error::{Error, Result};

/// Grid size of the dense path before reparameterization.
pub const DENSE_POINTS: usize = 4096;

/// Chroma binary search stops once the bracketing colors differ by less
/// than this in sRGB component units.
const CLIP_TOLERANCE: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum GamutMode {
    #[default]
    Strict,
    #[serde(alias = "clip")]
    ClipChroma,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct DivergingSpec {
    /// J′ shared by both halves at the center.
    pub center: f64,
    pub second_half_control_points: Vec<[f64; 2]>,
}

fn default_samples() -> usize {
    256
}

/// Declarative description of a colormap to generate.
///
/// For diverging maps the first half runs from `lightness[0]` to the center
/// through `control_points`, the second from the center to `lightness[1]`
/// through `second_half_control_points`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct PathSpec {
    pub name: String,
    pub kind: ColormapKind,
    pub lightness: [f64; 2],
    pub control_points: Vec<[f64; 2]>,
    #[serde(default = "default_samples")]
    pub samples: usize,
    #[serde(default)]
    pub gamut_mode: GamutMode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diverging: Option<DivergingSpec>,
}

impl PathSpec {
    pub fn sequential(name: &str, lightness: [f64; 2], control_points: Vec<[f64; 2]>) -> Self {
        Self {
            name: name.to_string(),
            kind: ColormapKind::Sequential,
            lightness,
            control_points,
            samples: default_samples(),
            gamut_mode: GamutMode::Strict,
            diverging: None,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let spec: PathSpec =
            serde_json::from_str(text).map_err(|e| Error::InvalidSpec(e.to_string()))?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidSpec(m));
        if self.name.trim().is_empty() {
            return bad("name must not be empty".into());
        }
        if self.samples < 2 {
            return bad(format!("samples must be at least 2, got {}", self.samples));
        }
        let lightness_ok = |l: f64| (0.0..=100.0).contains(&l);
        if !self.lightness.iter().all(|&l| lightness_ok(l)) {
            return bad(format!("lightness {:?} must lie in [0, 100]", self.lightness));
        }
        check_points("controlPoints", &self.control_points)?;
        match (self.kind, &self.diverging) {
            (ColormapKind::Sequential, None) => {
                if self.lightness[0] == self.lightness[1] {
                    return bad("sequential lightness start and end must differ".into());
                }
            }
            (ColormapKind::Sequential, Some(_)) => {
                return bad("`diverging` given for a sequential spec".into());
            }
            (ColormapKind::Diverging, None) => {
                return bad("diverging spec needs a `diverging` section".into());
            }
            (ColormapKind::Diverging, Some(d)) => {
                if !lightness_ok(d.center) {
                    return bad(format!("center lightness {} must lie in [0, 100]", d.center));
                }
                if d.center == self.lightness[0] || d.center == self.lightness[1] {
                    return bad("center lightness must differ from both ends".into());
                }
                check_points("secondHalfControlPoints", &d.second_half_control_points)?;
                let a = self.control_points.last().expect("checked");
                let b = d.second_half_control_points.first().expect("checked");
                if (a[0] - b[0]).abs() > 1e-9 || (a[1] - b[1]).abs() > 1e-9 {
                    return bad(format!(
                        "halves must meet: first half ends at {a:?}, second starts at {b:?}"
                    ));
                }
            }
            (ColormapKind::Cyclic, _) => {
                return bad("cyclic colormap generation is not supported".into());
            }
            (ColormapKind::Qualitative, _) => {
                return bad("generate a sequential map and use qualitative sampling instead".into());
            }
        }
        Ok(())
    }

    /// The sequential segments making up this spec, with their share of the
    /// global parameter range.
    fn halves(&self) -> Vec<HalfPath> {
        match &self.diverging {
            None => vec![HalfPath {
                lightness: self.lightness,
                spline: ChromaSpline::new(self.control_points.clone()),
                t_offset: 0.0,
                t_scale: 1.0,
            }],
            Some(d) => vec![
                HalfPath {
                    lightness: [self.lightness[0], d.center],
                    spline: ChromaSpline::new(self.control_points.clone()),
                    t_offset: 0.0,
                    t_scale: 0.5,
                },
                HalfPath {
                    lightness: [d.center, self.lightness[1]],
                    spline: ChromaSpline::new(d.second_half_control_points.clone()),
                    t_offset: 0.5,
                    t_scale: 0.5,
                },
            ],
        }
    }
}

fn check_points(field: &str, points: &[[f64; 2]]) -> Result<()> {
    if points.len() < 2 {
        return Err(Error::InvalidSpec(format!(
            "{field} needs at least 2 points, got {}",
            points.len()
        )));
    }
    if points.iter().flatten().any(|v| !v.is_finite()) {
        return Err(Error::InvalidSpec(format!("{field} contains a non-finite value")));
    }
    Ok(())
}

/// Composite cubic Bézier through the control points, one segment per pair,
/// with Catmull-Rom interior tangents and one-sided end tangents.
#[derive(Debug, Clone, PartialEq)]
pub struct ChromaSpline {
    points: Vec<[f64; 2]>,
    tangents: Vec<[f64; 2]>,
}

impl ChromaSpline {
    pub fn new(points: Vec<[f64; 2]>) -> Self {
        assert!(points.len() >= 2, "spline needs two points");
        let n = points.len();
        let diff = |a: [f64; 2], b: [f64; 2]| [b[0] - a[0], b[1] - a[1]];
        let tangents = (0..n)
            .map(|i| {
                if i == 0 {
                    diff(points[0], points[1])
                } else if i == n - 1 {
                    diff(points[n - 2], points[n - 1])
                } else {
                    let d = diff(points[i - 1], points[i + 1]);
                    [d[0] / 2.0, d[1] / 2.0]
                }
            })
            .collect();
        Self { points, tangents }
    }

    pub fn eval(&self, t: f64) -> [f64; 2] {
        let segments = self.points.len() - 1;
        let u = t * segments as f64;
        let i = (u.floor() as usize).min(segments - 1);
        let s = u - i as f64;
        let (p0, p3) = (self.points[i], self.points[i + 1]);
        let (m0, m1) = (self.tangents[i], self.tangents[i + 1]);
        let p1 = [p0[0] + m0[0] / 3.0, p0[1] + m0[1] / 3.0];
        let p2 = [p3[0] - m1[0] / 3.0, p3[1] - m1[1] / 3.0];
        let r = 1.0 - s;
        let (w0, w1, w2, w3) = (r * r * r, 3.0 * r * r * s, 3.0 * r * s * s, s * s * s);
        [
            w0 * p0[0] + w1 * p1[0] + w2 * p2[0] + w3 * p3[0],
            w0 * p0[1] + w1 * p1[1] + w2 * p2[1] + w3 * p3[1],
        ]
    }
}

#[derive(Debug, Clone)]
struct HalfPath {
    lightness: [f64; 2],
    spline: ChromaSpline,
    t_offset: f64,
    t_scale: f64,
}

impl HalfPath {
    fn eval(&self, t: f64, ucs: &Cam02Ucs) -> Result<JabColor> {
        let j = self.lightness[0] + t * (self.lightness[1] - self.lightness[0]);
        let [da, db] = self.spline.eval(t);
        let neutral = ucs.neutral_at(j)?;
        Ok(JabColor::new(j, neutral.a + da, neutral.b + db))
    }
}

fn check_parameter(t: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::Domain(format!("path parameter {t} outside [0, 1]")));
    }
    Ok(())
}

/// Chroma offset from the neutral axis at parameter `t`.
pub fn chroma_offset(spec: &PathSpec, t: f64) -> Result<[f64; 2]> {
    check_parameter(t)?;
    let halves = spec.halves();
    let half = locate(&halves, t);
    Ok(half.spline.eval((t - half.t_offset) / half.t_scale))
}

fn locate(halves: &[HalfPath], t: f64) -> &HalfPath {
    halves
        .iter()
        .rev()
        .find(|h| t >= h.t_offset)
        .unwrap_or(&halves[0])
}

/// Point of the path at `t ∈ [0, 1]`. Diverging specs spend `[0, 0.5]` on
/// the first half.
pub fn evaluate_path(spec: &PathSpec, t: f64, ucs: &Cam02Ucs) -> Result<JabColor> {
    check_parameter(t)?;
    let halves = spec.halves();
    let half = locate(&halves, t);
    half.eval(((t - half.t_offset) / half.t_scale).min(1.0), ucs)
}

/// Densely sampled path with its cumulative CAM02-UCS arc length.
#[derive(Debug, Clone, PartialEq)]
pub struct DensePath {
    params: Vec<f64>,
    points: Vec<JabColor>,
    cumulative: Vec<f64>,
}

impl DensePath {
    pub fn from_points(params: Vec<f64>, points: Vec<JabColor>) -> Result<Self> {
        if params.len() != points.len() || points.len() < 2 {
            return Err(Error::Degenerate(
                "dense path needs at least two points with one parameter each".into(),
            ));
        }
        let mut cumulative = Vec::with_capacity(points.len());
        let mut total = 0.0;
        cumulative.push(0.0);
        for w in points.windows(2) {
            total += delta_e(w[0], w[1]);
            cumulative.push(total);
        }
        Ok(Self {
            params,
            points,
            cumulative,
        })
    }

    fn sample(half: &HalfPath, ucs: &Cam02Ucs, count: usize) -> Result<Self> {
        let params: Vec<f64> = (0..count).map(|k| k as f64 / (count - 1) as f64).collect();
        let points = params
            .par_iter()
            .map(|&t| half.eval(t, ucs))
            .collect::<Result<Vec<_>>>()?;
        Self::from_points(params, points)
    }

    pub fn params(&self) -> &[f64] {
        &self.params
    }

    pub fn points(&self) -> &[JabColor] {
        &self.points
    }

    pub fn cumulative(&self) -> &[f64] {
        &self.cumulative
    }

    pub fn total_length(&self) -> f64 {
        *self.cumulative.last().expect("non-empty")
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathSample {
    pub t: f64,
    pub jab: JabColor,
}

/// Resamples `path` at `count` points spaced uniformly in arc length, by
/// piecewise-linear inversion of the cumulative-length table.
pub fn reparameterize(path: &DensePath, count: usize) -> Result<Vec<PathSample>> {
    if count < 2 {
        return Err(Error::Domain(format!("sample count must be at least 2, got {count}")));
    }
    let total = path.total_length();
    if !(total > 0.0) {
        return Err(Error::Degenerate("path has zero arc length".into()));
    }
    let m = path.points.len();
    let lerp = |a: f64, b: f64, f: f64| a + f * (b - a);
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        if i == count - 1 {
            out.push(PathSample {
                t: path.params[m - 1],
                jab: path.points[m - 1],
            });
            continue;
        }
        let target = total * i as f64 / (count - 1) as f64;
        let k = path
            .cumulative
            .partition_point(|&c| c <= target)
            .saturating_sub(1)
            .min(m - 2);
        let len = path.cumulative[k + 1] - path.cumulative[k];
        let f = if len > 0.0 {
            ((target - path.cumulative[k]) / len).clamp(0.0, 1.0)
        } else {
            0.0
        };
        let (p, q) = (path.points[k], path.points[k + 1]);
        out.push(PathSample {
            t: lerp(path.params[k], path.params[k + 1], f),
            jab: JabColor::new(lerp(p.j, q.j, f), lerp(p.a, q.a, f), lerp(p.b, q.b, f)),
        });
    }
    Ok(out)
}

/// Result of [`generate`].
#[derive(Debug, Clone, PartialEq)]
pub struct Generated {
    pub colormap: Colormap,
    /// Path parameter of every output sample.
    pub params: Vec<f64>,
    /// CAM02-UCS target of every output sample, before any chroma clipping.
    pub targets: Vec<JabColor>,
    /// Largest reduction of chroma offset (M′ units) applied in clip mode.
    pub max_chroma_reduction: f64,
}

/// Builds the colormap described by `spec`.
pub fn generate(spec: &PathSpec, ucs: &Cam02Ucs) -> Result<Generated> {
    spec.validate()?;
    let mut samples: Vec<PathSample> = Vec::new();
    for half in spec.halves() {
        let dense = DensePath::sample(&half, ucs, DENSE_POINTS)?;
        let part = reparameterize(&dense, spec.samples)?;
        let skip = usize::from(!samples.is_empty());
        samples.extend(part.into_iter().skip(skip).map(|s| PathSample {
            t: half.t_offset + half.t_scale * s.t,
            jab: s.jab,
        }));
    }

    let colors: Vec<Result<(SrgbColor, f64)>> = samples
        .par_iter()
        .map(|s| match spec.gamut_mode {
            GamutMode::Strict => to_srgb_checked(s.jab, ucs).map(|c| (c, 0.0)),
            GamutMode::ClipChroma => clip_chroma(s.jab, ucs),
        })
        .collect();

    if spec.gamut_mode == GamutMode::Strict {
        let worst = samples
            .iter()
            .zip(&colors)
            .filter(|(_, c)| c.is_err())
            .map(|(s, _)| (s, excess_of(s.jab, ucs)))
            .max_by(|a, b| a.1.total_cmp(&b.1));
        if let Some((s, excess)) = worst {
            return Err(Error::GamutViolation {
                t: s.t,
                jab: s.jab,
                excess,
            });
        }
    }

    let mut srgb = Vec::with_capacity(colors.len());
    let mut max_reduction = 0.0f64;
    for c in colors {
        let (color, reduction) = c?;
        srgb.push(color);
        max_reduction = max_reduction.max(reduction);
    }
    Ok(Generated {
        colormap: Colormap::new(spec.name.clone(), spec.kind, srgb)?,
        params: samples.iter().map(|s| s.t).collect(),
        targets: samples.iter().map(|s| s.jab).collect(),
        max_chroma_reduction: max_reduction,
    })
}

fn excess_of(jab: JabColor, ucs: &Cam02Ucs) -> f64 {
    ucs.srgb_excess(jab).unwrap_or(f64::INFINITY)
}

fn to_srgb_checked(jab: JabColor, ucs: &Cam02Ucs) -> Result<SrgbColor> {
    ucs.jab_to_srgb(jab)
}

/// Scales the chroma offset toward the neutral axis until the color fits.
fn clip_chroma(jab: JabColor, ucs: &Cam02Ucs) -> Result<(SrgbColor, f64)> {
    if let Ok(c) = ucs.jab_to_srgb(jab) {
        return Ok((c, 0.0));
    }
    let neutral = ucs.neutral_at(jab.j)?;
    let (da, db) = (jab.a - neutral.a, jab.b - neutral.b);
    let at = |s: f64| JabColor::new(jab.j, neutral.a + s * da, neutral.b + s * db);
    let encode = |s: f64| {
        ucs.jab_to_linear(at(s))
            .ok()
            .map(|lin| SrgbColor::from_linear(lin).to_array())
    };

    let mut lo = 0.0f64;
    let mut hi = 1.0f64;
    let mut lo_color = ucs.jab_to_srgb(at(0.0))?;
    for _ in 0..64 {
        let close = encode(hi).is_some_and(|h| {
            h.iter()
                .zip(lo_color.to_array())
                .all(|(x, y)| (x - y).abs() < CLIP_TOLERANCE)
        });
        if close {
            break;
        }
        let mid = 0.5 * (lo + hi);
        match ucs.jab_to_srgb(at(mid)) {
            Ok(c) => {
                lo = mid;
                lo_color = c;
            }
            Err(_) => hi = mid,
        }
    }
    Ok((lo_color, (1.0 - lo) * da.hypot(db)))
}

/// Restricts `cmap` to the fraction interval `[a, b]` and resamples it with
/// piecewise-linear sRGB interpolation.
pub fn sub_map(cmap: &Colormap, a: f64, b: f64, count: usize) -> Result<Colormap> {
    if !(0.0 <= a && a < b && b <= 1.0) {
        return Err(Error::Domain(format!("need 0 <= a < b <= 1, got a={a}, b={b}")));
    }
    if count < 2 {
        return Err(Error::Domain(format!("sample count must be at least 2, got {count}")));
    }
    let src = cmap.samples();
    let last = (src.len() - 1) as f64;
    let steps = (count - 1) as f64;
    let samples = (0..count)
        .map(|i| {
            let i = i as f64;
            // Exact grid positions when [a, b] = [0, 1] and count = len.
            let x = ((steps - i) * a + i * b) * last / steps;
            let k = (x.floor() as usize).min(src.len() - 2);
            let f = x - k as f64;
            let (p, q) = (src[k].to_array(), src[k + 1].to_array());
            SrgbColor::from_array([0, 1, 2].map(|c| (p[c] + f * (q[c] - p[c])).clamp(0.0, 1.0)))
        })
        .collect();
    Colormap::new(cmap.name(), cmap.kind(), samples)
}

/// Picks `count` evenly spaced samples (nearest grid point) for categorical use.
pub fn qualitative_from(cmap: &Colormap, count: usize) -> Result<Colormap> {
    let n = cmap.len();
    if count < 2 || count > n {
        return Err(Error::Domain(format!(
            "count must lie in [2, {n}], got {count}"
        )));
    }
    let samples = (0..count)
        .map(|i| {
            let idx = (2 * i * (n - 1) + (count - 1)) / (2 * (count - 1));
            cmap.samples()[idx]
        })
        .collect();
    Colormap::new(
        format!("{}_qualitative{count}", cmap.name()),
        ColormapKind::Qualitative,
        samples,
    )
}
