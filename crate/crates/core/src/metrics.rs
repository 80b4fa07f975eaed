//! Colormap statistics in CAM02-UCS and the audit that combines them.
//!
//! The perceptual derivative is the list of ΔE steps between adjacent
//! samples; a perfectly uniform map has all steps equal. `cvd_consistency`
//! formalizes "visible up to the same depth" as the largest local change in
//! step size caused by simulated deficiency, relative to the mean step.

use rayon::prelude::*;
use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};

use crate::colormap::{Colormap, ColormapKind};
use crate::colorspace::{delta_e, Cam02Ucs, JabColor, Surround};
use crate::cvd::{simulate_cvd_with_clipping, to_grayscale, CvdKind, CvdSpec};
use crate::error::{Error, Result};
use crate::numeric::exact_sum;
use crate::serial::{f64_sig9, opt_f64_sig9, slice_sig9};

/// Segments shorter than this carry no direction for the turning angle.
const MIN_SEGMENT: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Monotonicity {
    Increasing,
    Decreasing,
    NonMonotonic,
}

impl std::fmt::Display for Monotonicity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Monotonicity::Increasing => "increasing",
            Monotonicity::Decreasing => "decreasing",
            Monotonicity::NonMonotonic => "non-monotonic",
        })
    }
}

pub fn jab_points(cmap: &Colormap, ucs: &Cam02Ucs) -> Result<Vec<JabColor>> {
    cmap.samples().iter().map(|c| ucs.srgb_to_jab(*c)).collect()
}

pub fn lightness_profile(cmap: &Colormap, ucs: &Cam02Ucs) -> Result<Vec<f64>> {
    Ok(jab_points(cmap, ucs)?.iter().map(|p| p.j).collect())
}

pub fn deltas_of(points: &[JabColor]) -> Vec<f64> {
    points.windows(2).map(|w| delta_e(w[0], w[1])).collect()
}

pub fn delta_profile(cmap: &Colormap, ucs: &Cam02Ucs) -> Result<Vec<f64>> {
    Ok(deltas_of(&jab_points(cmap, ucs)?))
}

/// Total ΔE arc length, summed exactly.
pub fn range_of(deltas: &[f64]) -> f64 {
    exact_sum(deltas)
}

pub fn perceptual_range(cmap: &Colormap, ucs: &Cam02Ucs) -> Result<f64> {
    Ok(range_of(&delta_profile(cmap, ucs)?))
}

/// RMS of `(d − mean) / mean` over the steps.
pub fn uniformity_of(deltas: &[f64]) -> Result<f64> {
    if deltas.is_empty() {
        return Err(Error::Degenerate("no steps".into()));
    }
    let range = range_of(deltas);
    if !(range > 0.0) {
        return Err(Error::Degenerate("perceptual range is zero".into()));
    }
    if deltas.iter().all(|&d| d == deltas[0]) {
        return Ok(0.0);
    }
    let n = deltas.len() as f64;
    let mean = range / n;
    let squares: Vec<f64> = deltas.iter().map(|d| ((d - mean) / mean).powi(2)).collect();
    Ok((exact_sum(&squares) / n).sqrt())
}

fn require_samples(cmap: &Colormap, min: usize) -> Result<()> {
    if cmap.len() < min {
        return Err(Error::Degenerate(format!(
            "{} has {} samples; at least {min} required",
            cmap.name(),
            cmap.len()
        )));
    }
    Ok(())
}

pub fn uniformity_rms(cmap: &Colormap, ucs: &Cam02Ucs) -> Result<f64> {
    require_samples(cmap, 3)?;
    uniformity_of(&delta_profile(cmap, ucs)?)
}

/// Angle between successive segments at every interior vertex except `skip`.
pub fn max_turning_angle(points: &[JabColor], skip: Option<usize>) -> f64 {
    let segments: Vec<[f64; 3]> = points
        .windows(2)
        .map(|w| {
            let (p, q) = (w[0].to_array(), w[1].to_array());
            [q[0] - p[0], q[1] - p[1], q[2] - p[2]]
        })
        .collect();
    let norm = |v: &[f64; 3]| (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();

    let mut worst = 0.0f64;
    // Skip degenerate segments by pairing each segment with the next usable one.
    let mut prev: Option<(usize, [f64; 3])> = None;
    for (i, seg) in segments.iter().enumerate() {
        if norm(seg) < MIN_SEGMENT {
            continue;
        }
        if let Some((_, u)) = prev {
            // The vertex between segment i-1 and i is point i.
            if skip != Some(i) {
                let v = seg;
                let cross = [
                    u[1] * v[2] - u[2] * v[1],
                    u[2] * v[0] - u[0] * v[2],
                    u[0] * v[1] - u[1] * v[0],
                ];
                let dot = u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
                worst = worst.max(norm(&cross).atan2(dot));
            }
        }
        prev = Some((i, *seg));
    }
    worst
}

pub fn smoothness(cmap: &Colormap, ucs: &Cam02Ucs) -> Result<f64> {
    require_samples(cmap, 3)?;
    Ok(max_turning_angle(&jab_points(cmap, ucs)?, None))
}

pub fn monotonicity_of(values: &[f64]) -> Monotonicity {
    if values.windows(2).all(|w| w[1] > w[0]) {
        Monotonicity::Increasing
    } else if values.windows(2).all(|w| w[1] < w[0]) {
        Monotonicity::Decreasing
    } else {
        Monotonicity::NonMonotonic
    }
}

/// Index of the interior lightness extremum a diverging map pivots on.
pub fn diverging_pivot(lightness: &[f64]) -> usize {
    let n = lightness.len();
    let (first, last) = (lightness[0], lightness[n - 1]);
    let (mut imax, mut imin) = (0, 0);
    for (i, &v) in lightness.iter().enumerate() {
        if v > lightness[imax] {
            imax = i;
        }
        if v < lightness[imin] {
            imin = i;
        }
    }
    let rise = lightness[imax] - first.max(last);
    let dip = first.min(last) - lightness[imin];
    if rise >= dip {
        imax
    } else {
        imin
    }
}

/// Lightness ordering rule used by the `lightnessMonotone` verdict.
pub fn lightness_order_ok(lightness: &[f64], kind: ColormapKind) -> bool {
    match kind {
        ColormapKind::Diverging => {
            let n = lightness.len();
            let pivot = diverging_pivot(lightness);
            let centered = if n % 2 == 1 {
                pivot == (n - 1) / 2
            } else {
                pivot == n / 2 - 1 || pivot == n / 2
            };
            if !centered || pivot == 0 || pivot == n - 1 {
                return false;
            }
            let left = monotonicity_of(&lightness[..=pivot]);
            let right = monotonicity_of(&lightness[pivot..]);
            matches!(
                (left, right),
                (Monotonicity::Increasing, Monotonicity::Decreasing)
                    | (Monotonicity::Decreasing, Monotonicity::Increasing)
            )
        }
        _ => monotonicity_of(lightness) != Monotonicity::NonMonotonic,
    }
}

/// Statistics of one rendering of a colormap.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct MetricProfile {
    #[serde(serialize_with = "slice_sig9")]
    pub lightness: Vec<f64>,
    #[serde(serialize_with = "slice_sig9")]
    pub deltas: Vec<f64>,
    #[serde(serialize_with = "f64_sig9")]
    pub range: f64,
    /// `None` when the range is zero.
    #[serde(serialize_with = "opt_f64_sig9")]
    pub uniformity_rms: Option<f64>,
    pub monotonicity: Monotonicity,
    #[serde(serialize_with = "f64_sig9")]
    pub smoothness: f64,
    /// Largest per-component clip, in linear RGB, applied while rendering.
    #[serde(serialize_with = "f64_sig9")]
    pub clipping: f64,
}

impl MetricProfile {
    /// Builds a profile; diverging maps are measured per half around the
    /// lightness pivot and the worse half is kept.
    pub fn from_points(points: &[JabColor], kind: ColormapKind, clipping: f64) -> Self {
        let lightness: Vec<f64> = points.iter().map(|p| p.j).collect();
        let deltas = deltas_of(points);
        let range = range_of(&deltas);
        let pivot = match kind {
            ColormapKind::Diverging => {
                let p = diverging_pivot(&lightness);
                (p > 0 && p < points.len() - 1).then_some(p)
            }
            _ => None,
        };
        let (uniformity_rms, smoothness) = match pivot {
            Some(p) => {
                let halves = [&deltas[..p], &deltas[p..]];
                let u = halves
                    .iter()
                    .map(|h| uniformity_of(h).ok())
                    .try_fold(0.0f64, |acc, u| u.map(|u| acc.max(u)));
                (u, max_turning_angle(points, Some(p)))
            }
            None => (uniformity_of(&deltas).ok(), max_turning_angle(points, None)),
        };
        Self {
            monotonicity: monotonicity_of(&lightness),
            lightness,
            deltas,
            range,
            uniformity_rms,
            smoothness,
            clipping,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Thresholds {
    #[serde(serialize_with = "f64_sig9")]
    pub uniformity: f64,
    /// Radians.
    #[serde(serialize_with = "f64_sig9")]
    pub smoothness: f64,
    #[serde(serialize_with = "f64_sig9")]
    pub cvd_consistency: f64,
}

impl Default for Thresholds {
    fn default() -> Self {
        Self {
            uniformity: 0.05,
            smoothness: 0.4,
            cvd_consistency: 0.25,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AuditOptions {
    pub thresholds: Thresholds,
    /// Severity, in percent, of the anomalous-trichromat variants.
    pub anomaly_severity: f64,
}

impl Default for AuditOptions {
    fn default() -> Self {
        Self {
            thresholds: Thresholds::default(),
            anomaly_severity: 50.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditTarget {
    pub name: String,
    pub kind: ColormapKind,
    pub samples: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AuditConditions {
    #[serde(serialize_with = "slice_sig9")]
    pub white_point: [f64; 3],
    #[serde(serialize_with = "f64_sig9")]
    pub adapting_luminance: f64,
    #[serde(serialize_with = "f64_sig9")]
    pub background_luminance: f64,
    pub surround: Surround,
    #[serde(serialize_with = "f64_sig9")]
    pub anomaly_severity: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Verdicts {
    pub perceptually_uniform: bool,
    pub lightness_monotone: bool,
    pub grayscale_safe: bool,
    pub cvd_friendly: bool,
}

impl Verdicts {
    pub fn all(&self) -> bool {
        self.perceptually_uniform && self.lightness_monotone && self.grayscale_safe && self.cvd_friendly
    }
}

/// Machine-readable counterpart of a colormap diagnostic sheet.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AuditReport {
    pub target: AuditTarget,
    pub conditions: AuditConditions,
    pub thresholds: Thresholds,
    #[serde(serialize_with = "ordered_profiles")]
    pub profiles: Vec<(String, MetricProfile)>,
    #[serde(serialize_with = "f64_sig9")]
    pub cvd_consistency: f64,
    pub verdicts: Verdicts,
}

fn ordered_profiles<S: Serializer>(v: &[(String, MetricProfile)], s: S) -> Result<S::Ok, S::Error> {
    let mut map = s.serialize_map(Some(v.len()))?;
    for (k, p) in v {
        map.serialize_entry(k, p)?;
    }
    map.end()
}

impl AuditReport {
    pub fn profile(&self, label: &str) -> Option<&MetricProfile> {
        self.profiles.iter().find(|(k, _)| k == label).map(|(_, p)| p)
    }

    pub fn normal(&self) -> &MetricProfile {
        self.profile("normal").expect("every report has a normal profile")
    }

    /// Pretty JSON with a trailing newline; byte-stable for equal reports.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Recomputes the verdicts from the stored profiles and thresholds.
    pub fn recompute_verdicts(&self) -> Verdicts {
        verdicts_from(
            self.normal(),
            self.profile("grayscale").expect("grayscale profile"),
            self.cvd_consistency,
            self.target.kind,
            &self.thresholds,
        )
    }
}

fn verdicts_from(
    normal: &MetricProfile,
    grayscale: &MetricProfile,
    cvd_consistency: f64,
    kind: ColormapKind,
    t: &Thresholds,
) -> Verdicts {
    Verdicts {
        perceptually_uniform: normal.uniformity_rms.is_some_and(|u| u <= t.uniformity)
            && normal.smoothness <= t.smoothness,
        lightness_monotone: lightness_order_ok(&normal.lightness, kind),
        grayscale_safe: lightness_order_ok(&grayscale.lightness, kind),
        cvd_friendly: cvd_consistency <= t.cvd_consistency,
    }
}

/// The four deficiency variants audited: deutan and protan at the anomaly
/// severity and at 100.
pub fn cvd_variants(anomaly_severity: f64) -> Result<Vec<CvdSpec>> {
    Ok(vec![
        CvdSpec::new(CvdKind::Deutan, anomaly_severity)?,
        CvdSpec::new(CvdKind::Protan, anomaly_severity)?,
        CvdSpec::new(CvdKind::Deutan, 100.0)?,
        CvdSpec::new(CvdKind::Protan, 100.0)?,
    ])
}

fn consistency_from(normal: &[f64], variants: &[&[f64]]) -> Result<f64> {
    let range = range_of(normal);
    if !(range > 0.0) {
        return Err(Error::Degenerate("perceptual range is zero".into()));
    }
    let mean_step = range / normal.len() as f64;
    let mut worst = 0.0f64;
    for v in variants {
        for (dv, dn) in v.iter().zip(normal) {
            worst = worst.max((dv - dn).abs() / mean_step);
        }
    }
    Ok(worst)
}

pub fn cvd_consistency(cmap: &Colormap, ucs: &Cam02Ucs, anomaly_severity: f64) -> Result<f64> {
    require_samples(cmap, 3)?;
    let normal = delta_profile(cmap, ucs)?;
    let variants = cvd_variants(anomaly_severity)?
        .into_iter()
        .map(|spec| delta_profile(&simulate_cvd_with_clipping(cmap, spec).0, ucs))
        .collect::<Result<Vec<_>>>()?;
    let refs: Vec<&[f64]> = variants.iter().map(Vec::as_slice).collect();
    consistency_from(&normal, &refs)
}

enum Variant {
    Normal,
    Grayscale,
    Cvd(CvdSpec),
}

impl Variant {
    fn label(&self) -> String {
        match self {
            Variant::Normal => "normal".into(),
            Variant::Grayscale => "grayscale".into(),
            Variant::Cvd(spec) => spec.label(),
        }
    }
}

/// Audits `cmap` under normal vision, grayscale and four CVD variants.
///
/// Variants are evaluated in parallel; the report does not depend on the
/// evaluation order.
pub fn audit(cmap: &Colormap, ucs: &Cam02Ucs, options: &AuditOptions) -> Result<AuditReport> {
    require_samples(cmap, 3)?;
    let mut variants = vec![Variant::Normal, Variant::Grayscale];
    variants.extend(cvd_variants(options.anomaly_severity)?.into_iter().map(Variant::Cvd));

    let profiles = variants
        .par_iter()
        .map(|v| {
            let (rendered, clip) = match v {
                Variant::Normal => (cmap.clone(), 0.0),
                Variant::Grayscale => (to_grayscale(cmap, ucs)?, 0.0),
                Variant::Cvd(spec) => simulate_cvd_with_clipping(cmap, *spec),
            };
            let points = jab_points(&rendered, ucs)?;
            Ok((v.label(), MetricProfile::from_points(&points, cmap.kind(), clip)))
        })
        .collect::<Result<Vec<_>>>()?;

    let normal = &profiles[0].1;
    if !(normal.range > 0.0) {
        return Err(Error::Degenerate(format!(
            "{} has zero perceptual range",
            cmap.name()
        )));
    }
    let cvd_deltas: Vec<&[f64]> = profiles[2..].iter().map(|(_, p)| p.deltas.as_slice()).collect();
    let consistency = consistency_from(&normal.deltas, &cvd_deltas)?;
    let verdicts = verdicts_from(
        normal,
        &profiles[1].1,
        consistency,
        cmap.kind(),
        &options.thresholds,
    );

    let vc = ucs.conditions();
    Ok(AuditReport {
        target: AuditTarget {
            name: cmap.name().to_string(),
            kind: cmap.kind(),
            samples: cmap.len(),
        },
        conditions: AuditConditions {
            white_point: vc.white_point.to_array(),
            adapting_luminance: vc.adapting_luminance,
            background_luminance: vc.background_luminance,
            surround: vc.surround,
            anomaly_severity: options.anomaly_severity,
        },
        thresholds: options.thresholds,
        profiles,
        cvd_consistency: consistency,
        verdicts,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CompareRow {
    pub name: String,
    #[serde(serialize_with = "f64_sig9")]
    pub range: f64,
    #[serde(serialize_with = "f64_sig9")]
    pub uniformity_rms: f64,
    pub monotonicity: Monotonicity,
    #[serde(serialize_with = "f64_sig9")]
    pub cvd_consistency: f64,
}

/// Ranks colormaps by perceptual range, largest first, ties by name.
pub fn compare(cmaps: &[Colormap], ucs: &Cam02Ucs, anomaly_severity: f64) -> Result<Vec<CompareRow>> {
    if cmaps.len() < 2 {
        return Err(Error::Usage(format!(
            "compare needs at least 2 colormaps, got {}",
            cmaps.len()
        )));
    }
    let mut rows = cmaps
        .iter()
        .map(|c| {
            let deltas = delta_profile(c, ucs)?;
            Ok(CompareRow {
                name: c.name().to_string(),
                range: range_of(&deltas),
                uniformity_rms: uniformity_rms(c, ucs)?,
                monotonicity: monotonicity_of(&lightness_profile(c, ucs)?),
                cvd_consistency: cvd_consistency(c, ucs, anomaly_severity)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by(|a, b| b.range.total_cmp(&a.range).then_with(|| a.name.cmp(&b.name)));
    Ok(rows)
}
