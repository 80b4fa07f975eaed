//! Embedded colormap registry and colormap file formats.
//!
//! CSV holds one `r,g,b` row per sample. If any value exceeds 1 the whole
//! file is read as 8-bit, and every value must then be an integer in
//! `[0, 255]`. JSON is `{name, kind, colors}`. Hex is one `#RRGGBB` per line.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::LazyLock;

use serde::{Deserialize, Serialize};

use crate::colormap::{Colormap, ColormapKind};
use crate::colorspace::SrgbColor;
use crate::error::{Error, Result};
use crate::fixtures::RAINFOREST;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Embedded,
    File,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RegistryEntry {
    pub name: String,
    pub source: Source,
    pub colormap: Colormap,
}

fn interp(t: f64, xs: &[f64], ys: &[f64]) -> f64 {
    let k = xs.partition_point(|&x| x <= t).clamp(1, xs.len() - 1);
    let (x0, x1) = (xs[k - 1], xs[k]);
    ys[k - 1] + (t - x0) / (x1 - x0) * (ys[k] - ys[k - 1])
}

fn jet() -> Colormap {
    const N: usize = 256;
    let samples = (0..N)
        .map(|i| {
            let t = i as f64 / (N - 1) as f64;
            SrgbColor::new(
                interp(t, &[0.0, 0.375, 0.625, 0.875, 1.0], &[0.0, 0.0, 1.0, 1.0, 0.5]),
                interp(t, &[0.0, 0.125, 0.375, 0.625, 0.875, 1.0], &[0.0, 0.0, 1.0, 1.0, 0.0, 0.0]),
                interp(t, &[0.0, 0.125, 0.375, 0.625, 1.0], &[0.5, 1.0, 1.0, 0.0, 0.0]),
            )
        })
        .collect();
    Colormap::new("jet", ColormapKind::Sequential, samples).expect("jet anchors are in gamut")
}

fn rainforest() -> Colormap {
    let samples = RAINFOREST.iter().map(|&c| SrgbColor::from_array(c)).collect();
    Colormap::new("rainforest", ColormapKind::Sequential, samples).expect("fixture is in gamut")
}

fn gray() -> Colormap {
    let samples = (0..256).map(|i| SrgbColor::gray(i as f64 / 255.0)).collect();
    Colormap::new("gray", ColormapKind::Sequential, samples).expect("ramp is in gamut")
}

static REGISTRY: LazyLock<Vec<RegistryEntry>> = LazyLock::new(|| {
    [jet(), rainforest(), gray()]
        .into_iter()
        .map(|colormap| RegistryEntry {
            name: colormap.name().to_string(),
            source: Source::Embedded,
            colormap,
        })
        .collect()
});

pub fn registry() -> &'static [RegistryEntry] {
    &REGISTRY
}

pub fn registry_names() -> Vec<String> {
    REGISTRY.iter().map(|e| e.name.clone()).collect()
}

/// Case-insensitive lookup of an embedded colormap.
pub fn registry_get(name: &str) -> Result<Colormap> {
    REGISTRY
        .iter()
        .find(|e| e.name.eq_ignore_ascii_case(name))
        .map(|e| e.colormap.clone())
        .ok_or_else(|| Error::NotFound {
            name: name.to_string(),
            available: registry_names(),
        })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    /// Pick from the file extension, falling back to CSV.
    #[default]
    Auto,
    Csv,
    Json,
    Hex,
}

impl Format {
    pub fn resolve(self, path: &Path) -> Format {
        if self != Format::Auto {
            return self;
        }
        match path
            .extension()
            .and_then(|e| e.to_str())
            .map(str::to_ascii_lowercase)
            .as_deref()
        {
            Some("json") => Format::Json,
            Some("hex") | Some("txt") => Format::Hex,
            _ => Format::Csv,
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct ColormapFile {
    name: String,
    kind: ColormapKind,
    #[serde(serialize_with = "crate::serial::triples_sig9")]
    colors: Vec<[f64; 3]>,
}

fn name_from_path(path: &Path) -> String {
    path.file_stem()
        .and_then(|s| s.to_str())
        .filter(|s| !s.is_empty())
        .unwrap_or("colormap")
        .to_string()
}

/// Reads a colormap from disk. CSV and hex maps are named after the file stem.
pub fn load_colormap(path: &Path, format: Format) -> Result<Colormap> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let source_name = path.display().to_string();
    let name = name_from_path(path);
    match format.resolve(path) {
        Format::Json => parse_json(&text, &source_name),
        Format::Hex => parse_hex(&text, &source_name, &name),
        Format::Csv | Format::Auto => parse_csv(&text, &source_name, &name),
    }
}

fn parse_json(text: &str, source_name: &str) -> Result<Colormap> {
    let file: ColormapFile = serde_json::from_str(text).map_err(|e| Error::Parse {
        source_name: source_name.to_string(),
        line: e.line(),
        message: e.to_string(),
    })?;
    for (i, c) in file.colors.iter().enumerate() {
        check_unit(c, i + 1)?;
    }
    from_rows(file.name, file.kind, file.colors)
}

fn check_unit(c: &[f64; 3], row: usize) -> Result<()> {
    if c.iter().any(|v| !(0.0..=1.0).contains(v)) {
        return Err(Error::OutOfRange {
            row,
            message: format!("{c:?} has a component outside [0, 1]"),
        });
    }
    Ok(())
}

fn from_rows(name: String, kind: ColormapKind, rows: Vec<[f64; 3]>) -> Result<Colormap> {
    if rows.len() < 2 {
        return Err(Error::InvalidColormap(format!(
            "need at least 2 samples, found {}",
            rows.len()
        )));
    }
    Colormap::new(name, kind, rows.into_iter().map(SrgbColor::from_array).collect())
}

/// Parses CSV text; see the module docs for the 8-bit detection rule.
pub fn parse_csv(text: &str, source_name: &str, name: &str) -> Result<Colormap> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let mut rows: Vec<(usize, [f64; 3])> = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| Error::Parse {
            source_name: source_name.to_string(),
            line: e.position().map_or(0, |p| p.line() as usize),
            message: e.to_string(),
        })?;
        let line = record.position().map_or(0, |p| p.line() as usize);
        if record.iter().all(str::is_empty) {
            continue;
        }
        if record.len() != 3 {
            return Err(Error::Parse {
                source_name: source_name.to_string(),
                line,
                message: format!("expected 3 fields, found {}", record.len()),
            });
        }
        let mut rgb = [0.0; 3];
        for (slot, field) in rgb.iter_mut().zip(record.iter()) {
            *slot = field.parse::<f64>().ok().filter(|v| v.is_finite()).ok_or_else(|| {
                Error::Parse {
                    source_name: source_name.to_string(),
                    line,
                    message: format!("{field:?} is not a number"),
                }
            })?;
        }
        rows.push((line, rgb));
    }

    let eight_bit = rows.iter().flat_map(|(_, c)| c).any(|&v| v > 1.0);
    let mut colors = Vec::with_capacity(rows.len());
    for (i, (_, c)) in rows.into_iter().enumerate() {
        let row = i + 1;
        if eight_bit {
            if c.iter().any(|v| v.fract() != 0.0 || !(0.0..=255.0).contains(v)) {
                return Err(Error::OutOfRange {
                    row,
                    message: format!(
                        "{c:?}: 8-bit rows need integers in [0, 255] (a value above 1 selects 8-bit mode)"
                    ),
                });
            }
            colors.push(c.map(|v| v / 255.0));
        } else {
            check_unit(&c, row)?;
            colors.push(c);
        }
    }
    from_rows(name.to_string(), ColormapKind::Sequential, colors)
}

/// Parses one `#RRGGBB` (or `RRGGBB`) per line.
pub fn parse_hex(text: &str, source_name: &str, name: &str) -> Result<Colormap> {
    let mut colors = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let digits = line.strip_prefix('#').unwrap_or(line);
        let parse_err = || Error::Parse {
            source_name: source_name.to_string(),
            line: i + 1,
            message: format!("{line:?} is not #RRGGBB"),
        };
        if digits.len() != 6 || !digits.is_ascii() {
            return Err(parse_err());
        }
        let mut rgb = [0.0; 3];
        for (k, slot) in rgb.iter_mut().enumerate() {
            let byte = u8::from_str_radix(&digits[2 * k..2 * k + 2], 16).map_err(|_| parse_err())?;
            *slot = f64::from(byte) / 255.0;
        }
        colors.push(rgb);
    }
    from_rows(name.to_string(), ColormapKind::Sequential, colors)
}

/// Component to 8-bit, rounding half to even.
pub fn to_byte(v: f64) -> u8 {
    (v.clamp(0.0, 1.0) * 255.0).round_ties_even() as u8
}

pub fn hex_string(c: SrgbColor) -> String {
    format!("#{:02X}{:02X}{:02X}", to_byte(c.r), to_byte(c.g), to_byte(c.b))
}

/// Text of `cmap` in `format`; `Auto` is treated as CSV.
pub fn render_colormap(cmap: &Colormap, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Csv | Format::Auto => {
            for c in cmap.samples() {
                out.push_str(&format!("{:.6},{:.6},{:.6}\n", c.r, c.g, c.b));
            }
        }
        Format::Hex => {
            for c in cmap.samples() {
                out.push_str(&hex_string(*c));
                out.push('\n');
            }
        }
        Format::Json => {
            let file = ColormapFile {
                name: cmap.name().to_string(),
                kind: cmap.kind(),
                colors: cmap.samples().iter().map(|c| c.to_array()).collect(),
            };
            out = serde_json::to_string_pretty(&file).expect("serializable");
            out.push('\n');
        }
    }
    out
}

/// Writes `cmap` to `path`; the format comes from the extension when `Auto`.
pub fn save_colormap(cmap: &Colormap, path: &Path, format: Format) -> Result<()> {
    write_atomic(path, render_colormap(cmap, format.resolve(path)).as_bytes())
}

/// Writes through a temporary file in the destination directory, then
/// renames it over `path`. A failed write leaves `path` untouched.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    write_atomic_all(&[(path, bytes)])
}

/// Stages every file before renaming any, so an I/O failure while writing
/// leaves none of the destinations created or modified.
pub fn write_atomic_all(files: &[(&Path, &[u8])]) -> Result<()> {
    let mut staged = Vec::with_capacity(files.len());
    for &(path, bytes) in files {
        staged.push((path, stage(path, bytes)?));
    }
    for (path, tmp) in staged {
        tmp.persist(path).map_err(|e| Error::Io {
            path: path.to_path_buf(),
            source: e.error,
        })?;
    }
    Ok(())
}

fn stage(path: &Path, bytes: &[u8]) -> Result<tempfile::NamedTempFile> {
    let io_err = |source| Error::Io {
        path: path.to_path_buf(),
        source,
    };
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p.to_path_buf(),
        _ => PathBuf::from("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(&dir).map_err(io_err)?;
    tmp.write_all(bytes).map_err(io_err)?;
    tmp.as_file().sync_all().map_err(io_err)?;
    #[cfg(unix)]
    {
        use std::os::unix::fs::PermissionsExt;
        // Temporary files start owner-only; artifacts get ordinary file modes.
        tmp.as_file()
            .set_permissions(fs::Permissions::from_mode(0o644))
            .map_err(io_err)?;
    }
    Ok(tmp)
}
