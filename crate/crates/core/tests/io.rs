use camcmap::io::{hex_string, load_colormap, registry_get, save_colormap, Format};
use camcmap::{Colormap, ColormapKind, SrgbColor};
use proptest::prelude::*;

fn max_error(a: &Colormap, b: &Colormap) -> f64 {
    a.samples()
        .iter()
        .zip(b.samples())
        .flat_map(|(x, y)| {
            x.to_array()
                .into_iter()
                .zip(y.to_array())
                .map(|(p, q)| (p - q).abs())
        })
        .fold(0.0, f64::max)
}

#[test]
fn rainforest_csv_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rainforest.csv");
    let rf = registry_get("rainforest").unwrap();
    save_colormap(&rf, &path, Format::Csv).unwrap();
    let back = load_colormap(&path, Format::Csv).unwrap();
    assert_eq!(back.len(), rf.len());
    assert!(max_error(&rf, &back) < 1e-6);
}

#[test]
fn hex_lines() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pair.hex");
    let c = Colormap::new(
        "pair",
        ColormapKind::Sequential,
        vec![SrgbColor::gray(0.5), SrgbColor::gray(1.0)],
    )
    .unwrap();
    save_colormap(&c, &path, Format::Auto).unwrap();
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "#808080\n#FFFFFF\n");
    assert_eq!(hex_string(SrgbColor::new(0.0, 0.0, 0.5)), "#000080");
}

#[test]
fn explicit_format_overrides_extension() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("looks_like.json");
    std::fs::write(&path, "0,0,0\n255,128,0\n").unwrap();
    let c = load_colormap(&path, Format::Csv).unwrap();
    assert_eq!(c.samples()[1], SrgbColor::new(1.0, 128.0 / 255.0, 0.0));
    assert!(load_colormap(&path, Format::Auto).is_err());
}

fn random_map() -> impl Strategy<Value = Colormap> {
    (
        prop::collection::vec(prop::array::uniform3(0.0..=1.0f64), 2..50),
        prop::sample::select(vec![
            ColormapKind::Sequential,
            ColormapKind::Diverging,
            ColormapKind::Cyclic,
            ColormapKind::Qualitative,
        ]),
    )
        .prop_map(|(rows, kind)| {
            Colormap::new("m", kind, rows.into_iter().map(SrgbColor::from_array).collect()).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn save_load_round_trip(c in random_map()) {
        let dir = tempfile::tempdir().unwrap();
        for (format, ext, tol) in [
            (Format::Csv, "csv", 1e-6),
            (Format::Json, "json", 1e-6),
            (Format::Hex, "hex", 1.0 / 510.0),
        ] {
            let path = dir.path().join(format!("m.{ext}"));
            save_colormap(&c, &path, format).unwrap();
            let back = load_colormap(&path, format).unwrap();
            prop_assert_eq!(back.len(), c.len());
            if format == Format::Json {
                prop_assert_eq!(back.kind(), c.kind());
            }
            prop_assert!(max_error(&c, &back) <= tol, "{ext}: {}", max_error(&c, &back));
        }
    }
}
