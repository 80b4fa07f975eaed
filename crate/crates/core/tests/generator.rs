use camcmap::generator::{
    chroma_offset, evaluate_path, generate, qualitative_from, DivergingSpec, GamutMode, PathSpec,
};
use camcmap::metrics::{lightness_profile, monotonicity_of, uniformity_rms, Monotonicity};
use camcmap::{audit, AuditOptions, Cam02Ucs, ColormapKind, Error};
use proptest::prelude::*;

fn ucs() -> Cam02Ucs {
    Cam02Ucs::default()
}

#[test]
fn gray_spec_is_gray_and_uniform() {
    let u = ucs();
    let spec = PathSpec::sequential("g", [10.0, 90.0], vec![[0.0, 0.0], [0.0, 0.0]]);
    let g = generate(&spec, &u).unwrap();
    assert_eq!(g.colormap.len(), 256);
    for c in g.colormap.samples() {
        assert!((c.r - c.g).abs() < 1e-6 && (c.g - c.b).abs() < 1e-6, "{c:?}");
    }
    assert!(uniformity_rms(&g.colormap, &u).unwrap() < 1e-3);
    let report = audit(&g.colormap, &u, &AuditOptions::default()).unwrap();
    assert!(report.verdicts.all(), "{:?}", report.verdicts);
}

#[test]
fn strict_mode_reports_worst_offender() {
    let u = ucs();
    let spec = PathSpec::sequential("hot", [20.0, 95.0], vec![[0.0, 0.0], [40.0, 40.0], [80.0, 0.0]]);
    match generate(&spec, &u) {
        Err(Error::GamutViolation { t, jab, excess }) => {
            assert_eq!(t, 1.0);
            assert!((jab.j - 95.0).abs() < 1e-9);
            assert!(excess > 0.0 && excess.is_finite());
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn clip_mode_pulls_toward_gray() {
    let u = ucs();
    let mut spec =
        PathSpec::sequential("hot", [20.0, 95.0], vec![[0.0, 0.0], [40.0, 40.0], [80.0, 0.0]]);
    spec.gamut_mode = GamutMode::ClipChroma;
    let g = generate(&spec, &u).unwrap();
    assert!(g.max_chroma_reduction > 0.0);
    assert!(g.colormap.samples().iter().all(|c| c.is_in_gamut()));
    let last = u.srgb_to_jab(*g.colormap.samples().last().unwrap()).unwrap();
    assert!((last.j - 95.0).abs() < 0.05, "{last:?}");
}

#[test]
fn diverging_halves_share_center() {
    let u = ucs();
    let spec = PathSpec {
        name: "div".into(),
        kind: ColormapKind::Diverging,
        lightness: [35.0, 35.0],
        control_points: vec![[-8.0, -8.0], [0.0, 0.0]],
        samples: 65,
        gamut_mode: GamutMode::Strict,
        diverging: Some(DivergingSpec {
            center: 90.0,
            second_half_control_points: vec![[0.0, 0.0], [10.0, 6.0]],
        }),
    };
    let g = generate(&spec, &u).unwrap();
    assert_eq!(g.colormap.len(), 129);
    assert_eq!(g.colormap.kind(), ColormapKind::Diverging);
    let lightness = lightness_profile(&g.colormap, &u).unwrap();
    let pivot = lightness
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(b.1))
        .unwrap()
        .0;
    assert_eq!(pivot, 64);
    assert!((evaluate_path(&spec, 0.5, &u).unwrap().j - 90.0).abs() < 1e-12);
    let report = audit(&g.colormap, &u, &AuditOptions::default()).unwrap();
    assert!(report.verdicts.lightness_monotone && report.verdicts.perceptually_uniform);
}

#[test]
fn mismatched_halves_rejected() {
    let spec = PathSpec {
        name: "div".into(),
        kind: ColormapKind::Diverging,
        lightness: [35.0, 35.0],
        control_points: vec![[-15.0, -15.0], [0.0, 0.0]],
        samples: 16,
        gamut_mode: GamutMode::Strict,
        diverging: Some(DivergingSpec {
            center: 90.0,
            second_half_control_points: vec![[1.0, 0.0], [15.0, 10.0]],
        }),
    };
    assert!(matches!(spec.validate(), Err(Error::InvalidSpec(_))));
}

#[test]
fn qualitative_sampling_of_generated_map() {
    let u = ucs();
    let spec = PathSpec::sequential("s", [20.0, 85.0], vec![[5.0, -5.0], [10.0, 10.0]]);
    let g = generate(&spec, &u).unwrap();
    let q = qualitative_from(&g.colormap, 8).unwrap();
    assert_eq!(q.len(), 8);
    assert_eq!(q.samples()[0], g.colormap.samples()[0]);
    assert_eq!(q.samples()[7], g.colormap.samples()[255]);
}

fn offsets() -> impl Strategy<Value = Vec<[f64; 2]>> {
    prop::collection::vec(
        (0.0..10.0f64, 0.0..std::f64::consts::TAU).prop_map(|(r, th)| [r * th.cos(), r * th.sin()]),
        2..5,
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn generated_maps_are_uniform_and_monotone(
        start in 10.0..35.0f64,
        span in 40.0..60.0f64,
        points in offsets(),
        samples in 16usize..300,
    ) {
        let u = ucs();
        let mut spec = PathSpec::sequential("p", [start, start + span], points);
        spec.samples = samples;
        let g = generate(&spec, &u).unwrap();
        prop_assert_eq!(g.colormap.len(), samples);
        prop_assert!(uniformity_rms(&g.colormap, &u).unwrap() < 0.01);
        let l = lightness_profile(&g.colormap, &u).unwrap();
        prop_assert_eq!(monotonicity_of(&l), Monotonicity::Increasing);
        prop_assert!(g.params.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn path_endpoints_are_control_points(points in offsets()) {
        let spec = PathSpec::sequential("p", [20.0, 80.0], points.clone());
        prop_assert_eq!(chroma_offset(&spec, 0.0).unwrap(), points[0]);
        let end = chroma_offset(&spec, 1.0).unwrap();
        let want = points[points.len() - 1];
        prop_assert!((end[0] - want[0]).abs() < 1e-12 && (end[1] - want[1]).abs() < 1e-12);
    }
}
