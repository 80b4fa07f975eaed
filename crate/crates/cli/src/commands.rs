use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use camcmap::generator::{generate, qualitative_from, sub_map, GamutMode, PathSpec};
use camcmap::io::{
    load_colormap, registry, registry_get, render_colormap, write_atomic, write_atomic_all, Format,
};
use camcmap::metrics::{audit, compare, AuditOptions, AuditReport, Thresholds};
use camcmap::{Cam02Ucs, Colormap, Error, Result};

use crate::svg::render_svg;
use crate::{EXIT_FAIL, EXIT_OK};

#[derive(Debug, Parser)]
#[command(name = "camcmap", version, about = "Audit and build perceptually uniform colormaps")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Measure a colormap under normal vision, grayscale and CVD.
    Audit(AuditArgs),
    /// Build a colormap from a path spec.
    Generate(GenerateArgs),
    /// Rank colormaps by perceptual range.
    Compare(CompareArgs),
    /// Write a colormap in another format.
    Export(ExportArgs),
    /// List the embedded colormaps.
    List,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FileFormat {
    Csv,
    Json,
    Hex,
}

impl From<FileFormat> for Format {
    fn from(f: FileFormat) -> Self {
        match f {
            FileFormat::Csv => Format::Csv,
            FileFormat::Json => Format::Json,
            FileFormat::Hex => Format::Hex,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GamutFlag {
    Strict,
    Clip,
}

#[derive(Debug, Clone, Args)]
pub struct AuditFlags {
    /// Write the JSON report here.
    #[arg(long, value_name = "PATH")]
    pub json: Option<PathBuf>,
    /// Write the SVG panel sheet here.
    #[arg(long, value_name = "PATH")]
    pub svg: Option<PathBuf>,
    /// Severity (percent) of the anomalous-trichromat variants.
    #[arg(long, value_name = "N", default_value_t = 50.0)]
    pub anomaly_severity: f64,
    #[arg(long, value_name = "X", default_value_t = Thresholds::default().uniformity)]
    pub threshold_uniformity: f64,
    #[arg(long, value_name = "X", default_value_t = Thresholds::default().cvd_consistency)]
    pub threshold_cvd: f64,
    /// Largest accepted turning angle, radians.
    #[arg(long, value_name = "X", default_value_t = Thresholds::default().smoothness)]
    pub threshold_smoothness: f64,
}

impl AuditFlags {
    fn options(&self) -> Result<AuditOptions> {
        for (flag, v) in [
            ("--threshold-uniformity", self.threshold_uniformity),
            ("--threshold-cvd", self.threshold_cvd),
            ("--threshold-smoothness", self.threshold_smoothness),
        ] {
            if !(v.is_finite() && v >= 0.0) {
                return Err(Error::Usage(format!("{flag} must be a non-negative number, got {v}")));
            }
        }
        if !(0.0..=100.0).contains(&self.anomaly_severity) {
            return Err(Error::Usage(format!(
                "--anomaly-severity must lie in [0, 100], got {}",
                self.anomaly_severity
            )));
        }
        Ok(AuditOptions {
            thresholds: Thresholds {
                uniformity: self.threshold_uniformity,
                smoothness: self.threshold_smoothness,
                cvd_consistency: self.threshold_cvd,
            },
            anomaly_severity: self.anomaly_severity,
        })
    }

    fn check_outputs(&self) -> Result<()> {
        if let (Some(j), Some(s)) = (&self.json, &self.svg) {
            if j == s {
                return Err(Error::Usage(format!(
                    "--json and --svg both point at {}",
                    j.display()
                )));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Args)]
pub struct AuditArgs {
    /// Embedded colormap name or colormap file.
    pub target: String,
    /// Format of a target file; by default taken from its extension.
    #[arg(long, value_enum)]
    pub format: Option<FileFormat>,
    #[command(flatten)]
    pub flags: AuditFlags,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    /// Path spec JSON file.
    pub spec: PathBuf,
    /// Output file; standard output when omitted.
    #[arg(short, long, value_name = "PATH")]
    pub output: Option<PathBuf>,
    /// Output format; by default taken from the output extension, else CSV.
    #[arg(long, value_enum)]
    pub format: Option<FileFormat>,
    /// Overrides the spec's gamut mode.
    #[arg(long, value_enum)]
    pub gamut: Option<GamutFlag>,
    /// Also audit the result and fold its exit code.
    #[arg(long)]
    pub audit: bool,
    #[command(flatten)]
    pub flags: AuditFlags,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    /// Two or more colormap names or files.
    #[arg(num_args = 1..)]
    pub targets: Vec<String>,
    /// Write the table as JSON here as well.
    #[arg(long, value_name = "PATH")]
    pub json: Option<PathBuf>,
    #[arg(long, value_name = "N", default_value_t = 50.0)]
    pub anomaly_severity: f64,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    /// Embedded colormap name or colormap file.
    pub target: String,
    #[arg(short, long, value_name = "PATH")]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<FileFormat>,
    /// Format of a target file; by default taken from its extension.
    #[arg(long, value_enum)]
    pub input_format: Option<FileFormat>,
    /// Reverse the sample order.
    #[arg(long)]
    pub reverse: bool,
    /// Keep only the fraction interval [A, B] of the map.
    #[arg(long, num_args = 2, value_names = ["A", "B"])]
    pub interval: Option<Vec<f64>>,
    /// Resample to N colors.
    #[arg(long, value_name = "N")]
    pub samples: Option<usize>,
    /// Pick N evenly spaced colors as a qualitative palette.
    #[arg(long, value_name = "N", conflicts_with_all = ["samples", "interval"])]
    pub qualitative: Option<usize>,
}

fn stdout_err(source: std::io::Error) -> Error {
    Error::Io {
        path: PathBuf::from("<stdout>"),
        source,
    }
}

fn looks_like_path(target: &str) -> bool {
    target.contains(['/', '\\', '.'])
}

/// An existing file wins over an embedded name.
pub fn resolve_target(target: &str, format: Option<FileFormat>) -> Result<Colormap> {
    let path = Path::new(target);
    if path.is_file() {
        return load_colormap(path, format.map_or(Format::Auto, Format::from));
    }
    match registry_get(target) {
        Ok(c) => Ok(c),
        Err(_) if looks_like_path(target) => Err(Error::Io {
            path: path.to_path_buf(),
            source: std::io::Error::new(std::io::ErrorKind::NotFound, "no such file"),
        }),
        Err(e) => Err(e),
    }
}

pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let ucs = Cam02Ucs::default();
    match &cli.command {
        Command::Audit(args) => cmd_audit(args, &ucs, out),
        Command::Generate(args) => cmd_generate(args, &ucs, out),
        Command::Compare(args) => cmd_compare(args, &ucs, out),
        Command::Export(args) => cmd_export(args, out),
        Command::List => cmd_list(out),
    }
}

fn cmd_audit(args: &AuditArgs, ucs: &Cam02Ucs, out: &mut dyn Write) -> Result<i32> {
    args.flags.check_outputs()?;
    let options = args.flags.options()?;
    let cmap = resolve_target(&args.target, args.format)?;
    audit_and_report(&cmap, ucs, &options, &args.flags, out)
}

fn audit_and_report(
    cmap: &Colormap,
    ucs: &Cam02Ucs,
    options: &AuditOptions,
    flags: &AuditFlags,
    out: &mut dyn Write,
) -> Result<i32> {
    let report = audit(cmap, ucs, options)?;
    let svg = match &flags.svg {
        Some(_) => Some(render_svg(&report, cmap, ucs)?),
        None => None,
    };
    let json = flags.json.as_ref().map(|_| report.to_json());
    let mut files: Vec<(&Path, &[u8])> = Vec::new();
    if let (Some(path), Some(json)) = (&flags.json, &json) {
        files.push((path, json.as_bytes()));
    }
    if let (Some(path), Some(svg)) = (&flags.svg, &svg) {
        files.push((path, svg.as_bytes()));
    }
    write_atomic_all(&files)?;
    write_summary(&report, out)?;
    Ok(if report.verdicts.all() { EXIT_OK } else { EXIT_FAIL })
}

/// Human-readable audit summary.
pub fn write_summary(report: &AuditReport, out: &mut dyn Write) -> Result<()> {
    let t = &report.target;
    let n = report.normal();
    let v = &report.verdicts;
    let mut text = format!("{} ({}, {} samples)\n", t.name, t.kind, t.samples);
    text.push_str(&format!("  range                {:.4}\n", n.range));
    match n.uniformity_rms {
        Some(u) => text.push_str(&format!("  uniformity_rms       {u:.6}\n")),
        None => text.push_str("  uniformity_rms       n/a\n"),
    }
    text.push_str(&format!("  smoothness           {:.6}\n", n.smoothness));
    text.push_str(&format!("  monotonicity         {}\n", n.monotonicity));
    text.push_str(&format!("  cvd_consistency      {:.6}\n", report.cvd_consistency));
    for (name, ok) in [
        ("perceptuallyUniform", v.perceptually_uniform),
        ("lightnessMonotone", v.lightness_monotone),
        ("grayscaleSafe", v.grayscale_safe),
        ("cvdFriendly", v.cvd_friendly),
    ] {
        text.push_str(&format!("  {name:<20} {}\n", if ok { "pass" } else { "FAIL" }));
    }
    out.write_all(text.as_bytes()).map_err(stdout_err)
}

fn cmd_generate(args: &GenerateArgs, ucs: &Cam02Ucs, out: &mut dyn Write) -> Result<i32> {
    args.flags.check_outputs()?;
    if !args.audit && (args.flags.json.is_some() || args.flags.svg.is_some()) {
        return Err(Error::Usage("--json and --svg need --audit with generate".into()));
    }
    let options = args.flags.options()?;
    let text = fs::read_to_string(&args.spec).map_err(|source| Error::Io {
        path: args.spec.clone(),
        source,
    })?;
    let mut spec = PathSpec::from_json(&text)?;
    if let Some(g) = args.gamut {
        spec.gamut_mode = match g {
            GamutFlag::Strict => GamutMode::Strict,
            GamutFlag::Clip => GamutMode::ClipChroma,
        };
    }
    let generated = generate(&spec, ucs)?;
    if generated.max_chroma_reduction > 0.0 {
        eprintln!(
            "note: chroma reduced by up to {:.4} to stay in gamut",
            generated.max_chroma_reduction
        );
    }
    let cmap = generated.colormap;
    write_colormap(&cmap, args.output.as_deref(), args.format, out)?;
    if args.audit {
        // With the colormap on stdout the summary goes to stderr.
        if args.output.is_none() {
            let mut err = std::io::stderr();
            return audit_and_report(&cmap, ucs, &options, &args.flags, &mut err);
        }
        return audit_and_report(&cmap, ucs, &options, &args.flags, out);
    }
    Ok(EXIT_OK)
}

fn write_colormap(
    cmap: &Colormap,
    output: Option<&Path>,
    format: Option<FileFormat>,
    out: &mut dyn Write,
) -> Result<()> {
    match output {
        Some(path) => {
            let format = format.map_or(Format::Auto, Format::from).resolve(path);
            write_atomic(path, render_colormap(cmap, format).as_bytes())
        }
        None => {
            let format = format.map_or(Format::Csv, Format::from);
            out.write_all(render_colormap(cmap, format).as_bytes())
                .map_err(stdout_err)
        }
    }
}

fn cmd_compare(args: &CompareArgs, ucs: &Cam02Ucs, out: &mut dyn Write) -> Result<i32> {
    if args.targets.len() < 2 {
        return Err(Error::Usage(format!(
            "compare needs at least 2 colormaps, got {}",
            args.targets.len()
        )));
    }
    if !(0.0..=100.0).contains(&args.anomaly_severity) {
        return Err(Error::Usage(format!(
            "--anomaly-severity must lie in [0, 100], got {}",
            args.anomaly_severity
        )));
    }
    let cmaps = args
        .targets
        .iter()
        .map(|t| resolve_target(t, None))
        .collect::<Result<Vec<_>>>()?;
    let rows = compare(&cmaps, ucs, args.anomaly_severity)?;
    if let Some(path) = &args.json {
        let mut json = serde_json::to_string_pretty(&rows).expect("rows serialize");
        json.push('\n');
        write_atomic(path, json.as_bytes())?;
    }
    let mut text = String::from("name\trange\tuniformity_rms\tmonotonicity\tcvd_consistency\n");
    for r in &rows {
        text.push_str(&format!(
            "{}\t{:.4}\t{:.6}\t{}\t{:.6}\n",
            r.name, r.range, r.uniformity_rms, r.monotonicity, r.cvd_consistency
        ));
    }
    out.write_all(text.as_bytes()).map_err(stdout_err)?;
    Ok(EXIT_OK)
}

fn cmd_export(args: &ExportArgs, out: &mut dyn Write) -> Result<i32> {
    let mut cmap = resolve_target(&args.target, args.input_format)?;
    if args.reverse {
        cmap = cmap.reversed();
    }
    if let Some(count) = args.qualitative {
        cmap = qualitative_from(&cmap, count).map_err(|e| Error::Usage(e.to_string()))?;
    } else if args.interval.is_some() || args.samples.is_some() {
        let (a, b) = match args.interval.as_deref() {
            Some([a, b]) => (*a, *b),
            _ => (0.0, 1.0),
        };
        let count = args.samples.unwrap_or(cmap.len());
        cmap = sub_map(&cmap, a, b, count).map_err(|e| Error::Usage(e.to_string()))?;
    }
    write_colormap(&cmap, args.output.as_deref(), args.format, out)?;
    Ok(EXIT_OK)
}

fn cmd_list(out: &mut dyn Write) -> Result<i32> {
    let mut text = String::new();
    for entry in registry() {
        text.push_str(&format!(
            "{}\t{}\t{}\n",
            entry.name,
            entry.colormap.kind(),
            entry.colormap.len()
        ));
    }
    out.write_all(text.as_bytes()).map_err(stdout_err)?;
    Ok(EXIT_OK)
}
