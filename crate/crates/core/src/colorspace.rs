//! Conversions between sRGB, linear RGB, CIE XYZ, CIECAM02 and CAM02-UCS.
//!
//! All perceptual math in this crate happens in CAM02-UCS (J′, a′, b′). The
//! forward model follows CIECAM02 step by step; the inverse recovers XYZ from
//! (J, M, h) and reports points the model cannot invert as out of gamut.
//!
//! Under the default viewing conditions adaptation is incomplete (D ≈ 0.83),
//! so the neutral axis is not exactly a′ = b′ = 0: the D65 white sits near
//! (100, −1.92, −1.14). [`Cam02Ucs::neutral_at`] gives the gray point for any
//! lightness.

use std::f64::consts::PI;
use std::sync::LazyLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Display-referred sRGB color, components nominally in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SrgbColor {
    pub r: f64,
    pub g: f64,
    pub b: f64,
}

impl SrgbColor {
    pub const fn new(r: f64, g: f64, b: f64) -> Self {
        Self { r, g, b }
    }

    pub const fn gray(v: f64) -> Self {
        Self { r: v, g: v, b: v }
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.r, self.g, self.b]
    }

    pub fn from_array([r, g, b]: [f64; 3]) -> Self {
        Self { r, g, b }
    }

    pub fn is_finite(&self) -> bool {
        self.r.is_finite() && self.g.is_finite() && self.b.is_finite()
    }

    pub fn is_in_gamut(&self) -> bool {
        self.to_array().iter().all(|c| (0.0..=1.0).contains(c))
    }

    /// Decodes to linear-light RGB.
    pub fn to_linear(self) -> [f64; 3] {
        self.to_array().map(srgb_decode)
    }

    /// Encodes linear-light RGB; values outside `[0, 1]` are extended oddly.
    pub fn from_linear(linear: [f64; 3]) -> Self {
        Self::from_array(linear.map(srgb_encode))
    }
}

/// CIE 1931 tristimulus values on the 0–100 scale.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct XyzColor {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl XyzColor {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    /// The D65 white at Y = 100.
    pub const D65: XyzColor = XyzColor::new(95.047, 100.0, 108.883);

    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn from_array([x, y, z]: [f64; 3]) -> Self {
        Self { x, y, z }
    }
}

/// A point in CAM02-UCS: lightness J′ and opponent coordinates a′, b′.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JabColor {
    pub j: f64,
    pub a: f64,
    pub b: f64,
}

impl JabColor {
    pub const fn new(j: f64, a: f64, b: f64) -> Self {
        Self { j, a, b }
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.j, self.a, self.b]
    }

    /// Colorfulness proxy M′ = hypot(a′, b′).
    pub fn chroma(&self) -> f64 {
        self.a.hypot(self.b)
    }

    pub fn distance(&self, other: &JabColor) -> f64 {
        delta_e(*self, *other)
    }
}

/// CAM02-UCS color difference: Euclidean distance with K_L = 1.
pub fn delta_e(a: JabColor, b: JabColor) -> f64 {
    let dj = a.j - b.j;
    let da = a.a - b.a;
    let db = a.b - b.b;
    (dj * dj + da * da + db * db).sqrt()
}

/// CIECAM02 surround, fixing F, c and N_c.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Surround {
    Average,
    Dim,
    Dark,
}

impl Surround {
    /// `(F, c, N_c)`.
    pub fn parameters(self) -> (f64, f64, f64) {
        match self {
            Surround::Average => (1.0, 0.69, 1.0),
            Surround::Dim => (0.9, 0.59, 0.9),
            Surround::Dark => (0.8, 0.525, 0.8),
        }
    }
}

/// CIECAM02 viewing environment.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ViewingConditions {
    pub white_point: XyzColor,
    /// L_A in cd/m².
    pub adapting_luminance: f64,
    /// Y_b, relative to the white's Y = 100.
    pub background_luminance: f64,
    pub surround: Surround,
}

impl Default for ViewingConditions {
    /// D65, Y_b = 20, L_A = (64/π)/5 cd/m², average surround.
    fn default() -> Self {
        Self {
            white_point: XyzColor::D65,
            adapting_luminance: (64.0 / PI) / 5.0,
            background_luminance: 20.0,
            surround: Surround::Average,
        }
    }
}

impl ViewingConditions {
    pub fn validate(&self) -> Result<()> {
        let w = self.white_point;
        if ![w.x, w.y, w.z, self.adapting_luminance, self.background_luminance]
            .iter()
            .all(|v| v.is_finite())
        {
            return Err(Error::Config("non-finite parameter".into()));
        }
        if self.adapting_luminance <= 0.0 {
            return Err(Error::Config(format!(
                "adapting luminance must be positive, got {}",
                self.adapting_luminance
            )));
        }
        if !(self.background_luminance > 0.0 && self.background_luminance <= 100.0) {
            return Err(Error::Config(format!(
                "background luminance factor must lie in (0, 100], got {}",
                self.background_luminance
            )));
        }
        if w.y != 100.0 || w.x <= 0.0 || w.z <= 0.0 {
            return Err(Error::Config(format!(
                "white point must be positive with Y = 100, got ({}, {}, {})",
                w.x, w.y, w.z
            )));
        }
        Ok(())
    }
}

/// Direction for [`srgb_transfer`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Transfer {
    Encode,
    Decode,
}

const DECODE_KNEE: f64 = 0.04045;
const ENCODE_KNEE: f64 = DECODE_KNEE / 12.92;

/// IEC 61966-2-1 transfer function with domain checks.
pub fn srgb_transfer(value: f64, direction: Transfer) -> Result<f64> {
    if !value.is_finite() {
        return Err(Error::Domain(format!("non-finite sRGB component {value}")));
    }
    match direction {
        Transfer::Decode => {
            if !(0.0..=1.0).contains(&value) {
                return Err(Error::Domain(format!(
                    "sRGB component {value} outside [0, 1]"
                )));
            }
            Ok(srgb_decode(value))
        }
        Transfer::Encode => Ok(srgb_encode(value)),
    }
}

/// Unchecked decode, odd-extended for negative input.
pub fn srgb_decode(v: f64) -> f64 {
    let m = v.abs();
    let out = if m <= DECODE_KNEE {
        m / 12.92
    } else {
        ((m + 0.055) / 1.055).powf(2.4)
    };
    out.copysign(v)
}

/// Unchecked encode, odd-extended for negative input.
pub fn srgb_encode(v: f64) -> f64 {
    let m = v.abs();
    let out = if m <= ENCODE_KNEE {
        m * 12.92
    } else {
        1.055 * m.powf(1.0 / 2.4) - 0.055
    };
    out.copysign(v)
}

type Mat3 = [[f64; 3]; 3];

// Derived from the sRGB primaries and the D65 white (95.047, 100, 108.883),
// so each row sums to the white point.
const SRGB_TO_XYZ: Mat3 = [
    [0.4124564390896921, 0.35757607764390897, 0.18043748326639893],
    [0.21267285140562249, 0.71515215528781794, 0.072174993306559572],
    [0.019333895582329317, 0.11919202588130299, 0.95030407853636769],
];

const XYZ_TO_SRGB: Mat3 = [
    [3.2404541621141055, -1.5371385127977167, -0.49853140955601624],
    [-0.96926603050518677, 1.8760108454466941, 0.041556017530349838],
    [0.055643430959114691, -0.20402591351675387, 1.0572251882231791],
];

const M_CAT02: Mat3 = [
    [0.7328, 0.4296, -0.1624],
    [-0.7036, 1.6975, 0.0061],
    [0.0030, 0.0136, 0.9834],
];

const M_HPE: Mat3 = [
    [0.38971, 0.68898, -0.07868],
    [-0.22981, 1.18340, 0.04641],
    [0.0, 0.0, 1.0],
];

struct CamMatrices {
    cat02_inv: Mat3,
    /// CAT02 cone space → Hunt-Pointer-Estévez.
    hpe_from_cat: Mat3,
    cat_from_hpe: Mat3,
}

static MATRICES: LazyLock<CamMatrices> = LazyLock::new(|| {
    let cat02_inv = invert(&M_CAT02);
    let hpe_from_cat = mul(&M_HPE, &cat02_inv);
    let cat_from_hpe = mul(&M_CAT02, &invert(&M_HPE));
    CamMatrices {
        cat02_inv,
        hpe_from_cat,
        cat_from_hpe,
    }
});

fn apply(m: &Mat3, v: [f64; 3]) -> [f64; 3] {
    [
        m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
        m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
        m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2],
    ]
}

fn mul(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut out = [[0.0; 3]; 3];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

fn invert(m: &Mat3) -> Mat3 {
    let cof = |r0: usize, r1: usize, c0: usize, c1: usize| {
        m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]
    };
    let c00 = cof(1, 2, 1, 2);
    let c01 = -cof(1, 2, 0, 2);
    let c02 = cof(1, 2, 0, 1);
    let det = m[0][0] * c00 + m[0][1] * c01 + m[0][2] * c02;
    let inv_det = 1.0 / det;
    [
        [c00 * inv_det, -cof(0, 2, 1, 2) * inv_det, cof(0, 1, 1, 2) * inv_det],
        [c01 * inv_det, cof(0, 2, 0, 2) * inv_det, -cof(0, 1, 0, 2) * inv_det],
        [c02 * inv_det, -cof(0, 2, 0, 1) * inv_det, cof(0, 1, 0, 1) * inv_det],
    ]
}

/// Direction for [`rgb_xyz`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RgbXyz {
    Forward,
    Inverse,
}

/// Linear sRGB ↔ XYZ (0–100). The input/output triple is interpreted
/// according to `direction`.
pub fn rgb_xyz(triple: [f64; 3], direction: RgbXyz) -> Result<[f64; 3]> {
    if !triple.iter().all(|v| v.is_finite()) {
        return Err(Error::Domain(format!("non-finite input {triple:?}")));
    }
    Ok(match direction {
        RgbXyz::Forward => linear_to_xyz(triple).to_array(),
        RgbXyz::Inverse => xyz_to_linear(XyzColor::from_array(triple)),
    })
}

pub fn linear_to_xyz(linear: [f64; 3]) -> XyzColor {
    XyzColor::from_array(apply(&SRGB_TO_XYZ, linear).map(|v| v * 100.0))
}

pub fn xyz_to_linear(xyz: XyzColor) -> [f64; 3] {
    apply(&XYZ_TO_SRGB, xyz.to_array().map(|v| v / 100.0))
}

// CAM02-UCS constants (K_L = 1).
const UCS_C1: f64 = 0.007;
const UCS_C2: f64 = 0.0228;

/// Tolerance, in linear RGB units, for accepting an inverted color as in gamut.
pub const GAMUT_EPSILON: f64 = 1e-9;

/// Magnitudes below this are treated as rounding noise in tristimulus input.
const NEGATIVE_XYZ_TOLERANCE: f64 = 1e-9;

/// CIECAM02 + CAM02-UCS resolved for one set of viewing conditions.
#[derive(Debug, Clone)]
pub struct Cam02Ucs {
    conditions: ViewingConditions,
    c: f64,
    nc: f64,
    d_rgb: [f64; 3],
    fl: f64,
    fl_quarter: f64,
    n: f64,
    z: f64,
    nbb: f64,
    ncb: f64,
    aw: f64,
}

impl Default for Cam02Ucs {
    fn default() -> Self {
        Self::new(&ViewingConditions::default()).expect("default viewing conditions are valid")
    }
}

impl Cam02Ucs {
    pub fn new(vc: &ViewingConditions) -> Result<Self> {
        vc.validate()?;
        let (f, c, nc) = vc.surround.parameters();
        let la = vc.adapting_luminance;
        let white = vc.white_point.to_array();

        let rgb_w = apply(&M_CAT02, white);
        let d = (f * (1.0 - (1.0 / 3.6) * ((-la - 42.0) / 92.0).exp())).clamp(0.0, 1.0);
        let d_rgb = rgb_w.map(|w| d * white[1] / w + 1.0 - d);

        let k = 1.0 / (5.0 * la + 1.0);
        let k4 = k.powi(4);
        let fl = 0.2 * k4 * (5.0 * la) + 0.1 * (1.0 - k4).powi(2) * (5.0 * la).cbrt();
        let n = vc.background_luminance / white[1];
        let z = 1.48 + n.sqrt();
        let nbb = 0.725 * (1.0 / n).powf(0.2);

        let rgb_wc = [rgb_w[0] * d_rgb[0], rgb_w[1] * d_rgb[1], rgb_w[2] * d_rgb[2]];
        let rgb_prime_w = apply(&MATRICES.hpe_from_cat, rgb_wc);

        let mut model = Self {
            conditions: *vc,
            c,
            nc,
            d_rgb,
            fl,
            fl_quarter: fl.powf(0.25),
            n,
            z,
            nbb,
            ncb: nbb,
            aw: 0.0,
        };
        let aw_resp = rgb_prime_w.map(|v| model.compress(v));
        model.aw = model.achromatic(aw_resp);
        Ok(model)
    }

    pub fn conditions(&self) -> &ViewingConditions {
        &self.conditions
    }

    fn compress(&self, v: f64) -> f64 {
        let t = (self.fl * v.abs() / 100.0).powf(0.42);
        (400.0 * t / (t + 27.13)).copysign(v) + 0.1
    }

    fn achromatic(&self, rgb_a: [f64; 3]) -> f64 {
        (2.0 * rgb_a[0] + rgb_a[1] + rgb_a[2] / 20.0 - 0.305) * self.nbb
    }

    /// CIECAM02 forward model followed by the CAM02-UCS mapping.
    pub fn xyz_to_jab(&self, xyz: XyzColor) -> Result<JabColor> {
        let mut v = xyz.to_array();
        for c in v.iter_mut() {
            if !c.is_finite() {
                return Err(Error::Domain(format!("non-finite tristimulus {xyz:?}")));
            }
            if *c < 0.0 {
                if *c < -NEGATIVE_XYZ_TOLERANCE {
                    return Err(Error::Domain(format!("negative tristimulus {xyz:?}")));
                }
                *c = 0.0;
            }
        }

        let rgb = apply(&M_CAT02, v);
        let rgb_c = [
            rgb[0] * self.d_rgb[0],
            rgb[1] * self.d_rgb[1],
            rgb[2] * self.d_rgb[2],
        ];
        let rgb_p = apply(&MATRICES.hpe_from_cat, rgb_c);
        let rgb_a = rgb_p.map(|v| self.compress(v));

        let a = rgb_a[0] - 12.0 * rgb_a[1] / 11.0 + rgb_a[2] / 11.0;
        let b = (rgb_a[0] + rgb_a[1] - 2.0 * rgb_a[2]) / 9.0;
        let h = b.atan2(a);

        let mut achromatic = self.achromatic(rgb_a);
        // 0.1·(2 + 1 + 1/20) − 0.305 is not exactly zero in binary.
        if achromatic.abs() < 1e-12 {
            achromatic = 0.0;
        } else if achromatic < 0.0 {
            return Err(Error::Domain(format!(
                "negative achromatic signal for {xyz:?}"
            )));
        }
        let j = 100.0 * (achromatic / self.aw).powf(self.c * self.z);

        let e = (12500.0 / 13.0) * self.nc * self.ncb * ((h + 2.0).cos() + 3.8);
        let t = e * a.hypot(b) / (rgb_a[0] + rgb_a[1] + 21.0 / 20.0 * rgb_a[2]);
        let chroma = t.powf(0.9) * (j / 100.0).sqrt() * (1.64 - 0.29f64.powf(self.n)).powf(0.73);
        let m = chroma * self.fl_quarter;

        let jp = (1.0 + 100.0 * UCS_C1) * j / (1.0 + UCS_C1 * j);
        let mp = (1.0 + UCS_C2 * m).ln() / UCS_C2;
        Ok(JabColor::new(jp, mp * h.cos(), mp * h.sin()))
    }

    /// Inverse of [`Self::xyz_to_jab`].
    pub fn jab_to_xyz(&self, jab: JabColor) -> Result<XyzColor> {
        let xyz = self.invert(jab)?;
        // Negative tristimulus values have no physical color, in sRGB or otherwise.
        if xyz.iter().any(|&v| v < -NEGATIVE_XYZ_TOLERANCE) {
            return Err(Error::OutOfGamut { jab });
        }
        Ok(XyzColor::from_array(xyz))
    }

    /// How far `jab` lies outside the linear sRGB cube; 0 inside. Errors only
    /// where the model itself cannot be inverted.
    pub fn srgb_excess(&self, jab: JabColor) -> Result<f64> {
        Ok(gamut_excess(xyz_to_linear(XyzColor::from_array(self.invert(jab)?))))
    }

    fn invert(&self, jab: JabColor) -> Result<[f64; 3]> {
        let out_of_gamut = || Error::OutOfGamut { jab };
        if !(jab.j.is_finite() && jab.a.is_finite() && jab.b.is_finite()) {
            return Err(Error::Domain(format!("non-finite J'a'b' {jab:?}")));
        }
        let denom = 1.0 + 100.0 * UCS_C1 - UCS_C1 * jab.j;
        if jab.j < 0.0 || denom <= 0.0 {
            return Err(out_of_gamut());
        }
        let j = jab.j / denom;
        let mp = jab.chroma();
        let m = ((UCS_C2 * mp).exp() - 1.0) / UCS_C2;
        if j == 0.0 {
            return if mp == 0.0 {
                Ok([0.0; 3])
            } else {
                Err(out_of_gamut())
            };
        }
        let h = jab.b.atan2(jab.a);
        let chroma = m / self.fl_quarter;

        let t = (chroma / ((j / 100.0).sqrt() * (1.64 - 0.29f64.powf(self.n)).powf(0.73)))
            .powf(1.0 / 0.9);
        let et = 0.25 * ((h + 2.0).cos() + 3.8);
        let achromatic = self.aw * (j / 100.0).powf(1.0 / (self.c * self.z));

        let p2 = achromatic / self.nbb + 0.305;
        let p3 = 21.0 / 20.0;
        let (a, b) = if t == 0.0 {
            (0.0, 0.0)
        } else {
            let p1 = (50000.0 / 13.0) * self.nc * self.ncb * et / t;
            let (sin_h, cos_h) = h.sin_cos();
            let num = p2 * (2.0 + p3) * (460.0 / 1403.0);
            let part2 = (2.0 + p3) * (220.0 / 1403.0);
            let part3 = -27.0 / 1403.0 + p3 * (6300.0 / 1403.0);
            if sin_h.abs() >= cos_h.abs() {
                let b = num / (p1 / sin_h + part2 * cos_h / sin_h + part3);
                (b * cos_h / sin_h, b)
            } else {
                let a = num / (p1 / cos_h + part2 + part3 * sin_h / cos_h);
                (a, a * sin_h / cos_h)
            }
        };

        let rgb_a = [
            (460.0 * p2 + 451.0 * a + 288.0 * b) / 1403.0,
            (460.0 * p2 - 891.0 * a - 261.0 * b) / 1403.0,
            (460.0 * p2 - 220.0 * a - 6300.0 * b) / 1403.0,
        ];
        let mut rgb_p = [0.0; 3];
        for (out, &ra) in rgb_p.iter_mut().zip(&rgb_a) {
            let x = ra - 0.1;
            let mag = x.abs();
            if !(mag < 400.0) {
                return Err(out_of_gamut());
            }
            *out = (100.0 / self.fl * (27.13 * mag / (400.0 - mag)).powf(1.0 / 0.42)).copysign(x);
        }
        let rgb_c = apply(&MATRICES.cat_from_hpe, rgb_p);
        let rgb = [
            rgb_c[0] / self.d_rgb[0],
            rgb_c[1] / self.d_rgb[1],
            rgb_c[2] / self.d_rgb[2],
        ];
        Ok(apply(&MATRICES.cat02_inv, rgb))
    }

    pub fn srgb_to_jab(&self, color: SrgbColor) -> Result<JabColor> {
        if !color.is_finite() {
            return Err(Error::Domain(format!("non-finite sRGB color {color:?}")));
        }
        self.xyz_to_jab(linear_to_xyz(color.to_linear()))
    }

    /// Linear RGB for a J′a′b′ point, without any gamut check.
    pub fn jab_to_linear(&self, jab: JabColor) -> Result<[f64; 3]> {
        Ok(xyz_to_linear(self.jab_to_xyz(jab)?))
    }

    /// Converts to sRGB, failing if the color lies outside the sRGB cube
    /// by more than [`GAMUT_EPSILON`].
    pub fn jab_to_srgb(&self, jab: JabColor) -> Result<SrgbColor> {
        let linear = self.jab_to_linear(jab)?;
        if gamut_excess(linear) > GAMUT_EPSILON {
            return Err(Error::OutOfGamut { jab });
        }
        Ok(SrgbColor::from_linear(linear.map(|c| c.clamp(0.0, 1.0))))
    }

    /// The linear gray level `y` (sRGB (y, y, y) in linear light) whose J′
    /// equals `lightness`, by bisection on the achromatic response.
    /// Lightness outside the gray ramp clamps to black or white.
    pub fn gray_for_lightness(&self, lightness: f64) -> f64 {
        if !(lightness > 0.0) {
            return 0.0;
        }
        let denom = 1.0 + 100.0 * UCS_C1 - UCS_C1 * lightness;
        if denom <= 0.0 {
            return 1.0;
        }
        let j = lightness / denom;
        let target = self.aw * (j / 100.0).powf(1.0 / (self.c * self.z));

        // sRGB (y, y, y) maps to y · white, so its HPE response is y times the
        // white's response in the adapted space.
        let white_rgb = apply(&M_CAT02, linear_to_xyz([1.0, 1.0, 1.0]).to_array());
        let white_c = [
            white_rgb[0] * self.d_rgb[0],
            white_rgb[1] * self.d_rgb[1],
            white_rgb[2] * self.d_rgb[2],
        ];
        let white_p = apply(&MATRICES.hpe_from_cat, white_c);
        let response = |y: f64| self.achromatic(white_p.map(|v| self.compress(v * y)));

        if response(1.0) <= target {
            return 1.0;
        }
        let (mut lo, mut hi) = (0.0f64, 1.0f64);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if response(mid) < target {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    /// The CAM02-UCS point of the sRGB gray with the given lightness.
    pub fn neutral_at(&self, lightness: f64) -> Result<JabColor> {
        let y = self.gray_for_lightness(lightness);
        self.xyz_to_jab(linear_to_xyz([y, y, y]))
    }
}

/// Largest distance of any component outside `[0, 1]`.
pub fn gamut_excess(linear: [f64; 3]) -> f64 {
    linear
        .iter()
        .map(|&c| if c.is_nan() { f64::INFINITY } else { (-c).max(c - 1.0).max(0.0) })
        .fold(0.0, f64::max)
}

pub fn xyz_to_jab(xyz: XyzColor, vc: &ViewingConditions) -> Result<JabColor> {
    Cam02Ucs::new(vc)?.xyz_to_jab(xyz)
}

pub fn jab_to_xyz(jab: JabColor, vc: &ViewingConditions) -> Result<XyzColor> {
    Cam02Ucs::new(vc)?.jab_to_xyz(jab)
}
