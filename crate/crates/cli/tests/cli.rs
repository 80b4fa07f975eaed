use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn camcmap(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_camcmap"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(path: &Path) -> serde_json::Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

const GRAY_SPEC: &str = r#"{"name": "grayramp", "kind": "sequential", "lightness": [10, 90],
    "controlPoints": [[0, 0], [0, 0]]}"#;

const HOT_SPEC: &str = r#"{"name": "hot", "kind": "sequential", "lightness": [20, 95],
    "controlPoints": [[0, 0], [40, 40], [80, 0]]}"#;

#[test]
fn list_shows_embedded_maps() {
    let dir = tempfile::tempdir().unwrap();
    let o = camcmap(&["list"], dir.path());
    assert_eq!(code(&o), 0);
    let names: Vec<_> = stdout(&o).lines().map(|l| l.split('\t').next().unwrap().to_string()).collect();
    assert_eq!(names, ["jet", "rainforest", "gray"]);
}

#[test]
fn audit_jet_fails_every_verdict() {
    let dir = tempfile::tempdir().unwrap();
    let o = camcmap(&["audit", "jet", "--json", "out.json"], dir.path());
    assert_eq!(code(&o), 1, "{}", stderr(&o));
    let report = json(&dir.path().join("out.json"));
    let v = &report["verdicts"];
    for key in ["perceptuallyUniform", "lightnessMonotone", "grayscaleSafe", "cvdFriendly"] {
        assert_eq!(v[key], false, "{key}");
    }
    let keys: Vec<_> = report["profiles"].as_object().unwrap().keys().cloned().collect();
    assert_eq!(keys.len(), 6);
    assert!(report["profiles"]["deutan100"]["deltas"].is_array());
}

#[test]
fn audit_gray_ramp_is_monotone_but_not_uniform() {
    let dir = tempfile::tempdir().unwrap();
    let o = camcmap(&["audit", "gray", "--json", "g.json"], dir.path());
    assert_eq!(code(&o), 1);
    let v = json(&dir.path().join("g.json"))["verdicts"].clone();
    assert_eq!(v["perceptuallyUniform"], false);
    assert_eq!(v["lightnessMonotone"], true);
    assert_eq!(v["grayscaleSafe"], true);
    assert_eq!(v["cvdFriendly"], true);
    // Loosening the uniformity threshold is enough to pass.
    let o = camcmap(&["audit", "gray", "--threshold-uniformity", "0.3"], dir.path());
    assert_eq!(code(&o), 0);
}

#[test]
fn audit_missing_file_is_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let o = camcmap(&["audit", "missing.csv"], dir.path());
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("missing.csv"));
    assert!(stdout(&o).is_empty());
    let o = camcmap(&["audit", "nosuchmap"], dir.path());
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("rainforest"));
}

#[test]
fn bad_flags_are_usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["audit"][..],
        &["audit", "jet", "--anomaly-severity", "120"],
        &["audit", "jet", "--threshold-cvd", "-1"],
        &["frobnicate"],
        &["generate", "x.json", "--gamut", "loose"],
    ] {
        assert_eq!(code(&camcmap(args, dir.path())), 2, "{args:?}");
    }
    assert_eq!(code(&camcmap(&["--help"], dir.path())), 0);
}

#[test]
fn clashing_outputs_are_rejected_before_work() {
    let dir = tempfile::tempdir().unwrap();
    let o = camcmap(&["audit", "jet", "--json", "r.out", "--svg", "r.out"], dir.path());
    assert_eq!(code(&o), 2);
    assert!(!dir.path().join("r.out").exists());
}

#[test]
fn failed_write_leaves_nothing_behind() {
    let dir = tempfile::tempdir().unwrap();
    let o = camcmap(&["audit", "jet", "--json", "ok.json", "--svg", "nope/x.svg"], dir.path());
    assert_eq!(code(&o), 2);
    let leftovers: Vec<_> = fs::read_dir(dir.path()).unwrap().collect();
    assert!(leftovers.is_empty(), "{leftovers:?}");
}

#[test]
fn generated_gray_ramp_passes_audit() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("spec.json"), GRAY_SPEC).unwrap();
    let o = camcmap(&["generate", "spec.json", "-o", "ramp.csv"], dir.path());
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let rows = fs::read_to_string(dir.path().join("ramp.csv")).unwrap();
    assert_eq!(rows.lines().count(), 256);
    assert_eq!(code(&camcmap(&["audit", "ramp.csv"], dir.path())), 0);
    let o = camcmap(&["generate", "spec.json", "-o", "r2.json", "--audit"], dir.path());
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("grayramp"));
}

#[test]
fn strict_generation_reports_offender() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("hot.json"), HOT_SPEC).unwrap();
    let o = camcmap(&["generate", "hot.json", "-o", "hot.csv"], dir.path());
    assert_eq!(code(&o), 1);
    let err = stderr(&o);
    assert!(err.contains("t=1.000000") && err.contains("J'=95.000000"), "{err}");
    assert!(!dir.path().join("hot.csv").exists());
    let o = camcmap(&["generate", "hot.json", "-o", "hot.csv", "--gamut", "clip"], dir.path());
    assert_eq!(code(&o), 0);
    assert!(dir.path().join("hot.csv").exists());
}

#[test]
fn malformed_spec_is_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("bad.json"), "{\"name\": ").unwrap();
    assert_eq!(code(&camcmap(&["generate", "bad.json"], dir.path())), 2);
    fs::write(
        dir.path().join("cyc.json"),
        r#"{"name": "c", "kind": "cyclic", "lightness": [50, 50], "controlPoints": [[0,0],[1,1]]}"#,
    )
    .unwrap();
    let o = camcmap(&["generate", "cyc.json"], dir.path());
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("cyclic"));
}

#[test]
fn compare_orders_by_range() {
    let dir = tempfile::tempdir().unwrap();
    let o = camcmap(&["compare", "rainforest", "jet", "--json", "c.json"], dir.path());
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let first = text.lines().nth(1).unwrap();
    assert!(first.starts_with("jet\t"), "{text}");
    let rows = json(&dir.path().join("c.json"));
    assert_eq!(rows[0]["name"], "jet");
    assert_eq!(rows[1]["name"], "rainforest");

    let o = camcmap(&["compare", "gray", "gray"], dir.path());
    assert_eq!(code(&o), 0);
    let lines: Vec<_> = stdout(&o).lines().skip(1).map(String::from).collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0], lines[1]);

    assert_eq!(code(&camcmap(&["compare", "jet"], dir.path())), 2);
}

#[test]
fn export_formats_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for (file, fmt) in [("rf.csv", "csv"), ("rf.json", "json"), ("rf.hex", "hex")] {
        let o = camcmap(&["export", "rainforest", "-o", file, "--format", fmt], dir.path());
        assert_eq!(code(&o), 0);
        let o = camcmap(&["audit", file], dir.path());
        assert!(stdout(&o).contains("256 samples"), "{fmt}: {}", stderr(&o));
    }
    let o = camcmap(&["export", "gray", "--format", "hex", "--samples", "3"], dir.path());
    assert_eq!(stdout(&o), "#000000\n#808080\n#FFFFFF\n");
    let o = camcmap(&["export", "jet", "--qualitative", "2", "--reverse"], dir.path());
    assert_eq!(stdout(&o), "0.500000,0.000000,0.000000\n0.000000,0.000000,0.500000\n");
    let o = camcmap(&["export", "jet", "--interval", "0.5", "0.2"], dir.path());
    assert_eq!(code(&o), 2);
}

#[test]
fn eight_bit_and_float_csv_inputs() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("bytes.csv"), "0,0,0\n128,128,128\n255,255,255\n").unwrap();
    assert!(stdout(&camcmap(&["audit", "bytes.csv"], dir.path())).contains("3 samples"));
    fs::write(dir.path().join("bad.csv"), "1.2,0,0\n0,0,0\n1,1,1\n").unwrap();
    let o = camcmap(&["audit", "bad.csv"], dir.path());
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("row 1"), "{}", stderr(&o));
}

fn panel_count(svg: &str) -> usize {
    let doc = roxmltree::Document::parse(svg).unwrap();
    doc.descendants()
        .filter(|n| n.has_tag_name("g") && n.attribute("class") == Some("panel"))
        .count()
}

#[test]
fn svg_sheet_structure() {
    let dir = tempfile::tempdir().unwrap();
    let o = camcmap(&["audit", "rainforest", "--svg", "a.svg", "--json", "a.json"], dir.path());
    assert_eq!(code(&o), 1);
    let a = fs::read_to_string(dir.path().join("a.svg")).unwrap();
    assert_eq!(panel_count(&a), 10);
    let o = camcmap(&["audit", "rainforest", "--svg", "b.svg"], dir.path());
    assert_eq!(code(&o), 1);
    assert_eq!(a, fs::read_to_string(dir.path().join("b.svg")).unwrap());
    assert!(a.contains("J′") && a.contains("ΔE"));
}
