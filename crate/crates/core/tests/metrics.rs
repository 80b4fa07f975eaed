use camcmap::generator::sub_map;
use camcmap::metrics::{
    cvd_consistency, delta_profile, lightness_profile, max_turning_angle, monotonicity_of,
    perceptual_range, range_of, smoothness, uniformity_rms, Monotonicity,
};
use camcmap::numeric::ExactSum;
use camcmap::{
    audit, registry_get, to_grayscale, AuditOptions, Cam02Ucs, Colormap, ColormapKind, JabColor,
    SrgbColor,
};
use proptest::prelude::*;

fn ucs() -> Cam02Ucs {
    Cam02Ucs::default()
}

#[test]
fn jet_is_not_uniform() {
    let jet = registry_get("jet").unwrap();
    let u = ucs();
    let lightness = lightness_profile(&jet, &u).unwrap();
    let argmax = lightness
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(b.1))
        .unwrap()
        .0;
    assert!(argmax > 0 && argmax < 255, "argmax {argmax}");
    assert_eq!(monotonicity_of(&lightness), Monotonicity::NonMonotonic);
    assert!(uniformity_rms(&jet, &u).unwrap() > 0.15);
    assert!(cvd_consistency(&jet, &u, 50.0).unwrap() > 1.0);
    let deltas = delta_profile(&jet, &u).unwrap();
    let max = deltas.iter().cloned().fold(f64::MIN, f64::max);
    let min = deltas.iter().cloned().fold(f64::MAX, f64::min);
    assert!(max / min > 2.0);
}

#[test]
fn rainforest_is_uniform_and_monotone() {
    let rf = registry_get("rainforest").unwrap();
    let u = ucs();
    assert!(uniformity_rms(&rf, &u).unwrap() < 0.01);
    let lightness = lightness_profile(&rf, &u).unwrap();
    assert_eq!(monotonicity_of(&lightness), Monotonicity::Increasing);
    assert!(smoothness(&rf, &u).unwrap() < 0.4);
}

#[test]
fn jet_spans_more_than_rainforest() {
    let u = ucs();
    let jet = perceptual_range(&registry_get("jet").unwrap(), &u).unwrap();
    let rf = perceptual_range(&registry_get("rainforest").unwrap(), &u).unwrap();
    assert!(jet > rf, "{jet} vs {rf}");
}

#[test]
fn gray_ramp_survives_deficiencies() {
    let u = ucs();
    assert!(cvd_consistency(&registry_get("gray").unwrap(), &u, 50.0).unwrap() < 1e-3);
}

#[test]
fn grayscale_keeps_lightness_for_fixtures() {
    let u = ucs();
    for name in ["jet", "rainforest", "gray"] {
        let c = registry_get(name).unwrap();
        let before = lightness_profile(&c, &u).unwrap();
        let after = lightness_profile(&to_grayscale(&c, &u).unwrap(), &u).unwrap();
        for (a, b) in before.iter().zip(&after) {
            assert!((a - b).abs() < 1e-3, "{name}: {a} vs {b}");
        }
    }
}

#[test]
fn right_angle_turn() {
    let pts = [
        JabColor::new(0.0, 0.0, 0.0),
        JabColor::new(1.0, 0.0, 0.0),
        JabColor::new(1.0, 1.0, 0.0),
    ];
    let angle = max_turning_angle(&pts, None);
    assert!((angle - std::f64::consts::FRAC_PI_2).abs() < 1e-12);
}

#[test]
fn fixtures_are_symmetric_under_reversal() {
    let u = ucs();
    for name in ["jet", "rainforest", "gray"] {
        let c = registry_get(name).unwrap();
        let r = c.reversed();
        let (a, b) = (perceptual_range(&c, &u).unwrap(), perceptual_range(&r, &u).unwrap());
        assert!((a - b).abs() <= 1e-12 * a, "{name} range");
        let (a, b) = (uniformity_rms(&c, &u).unwrap(), uniformity_rms(&r, &u).unwrap());
        assert!((a - b).abs() <= 1e-12, "{name} uniformity");
        let (a, b) = (smoothness(&c, &u).unwrap(), smoothness(&r, &u).unwrap());
        assert!((a - b).abs() <= 1e-12, "{name} smoothness");
    }
}

#[test]
fn audit_of_fixtures() {
    let u = ucs();
    let jet = audit(&registry_get("jet").unwrap(), &u, &AuditOptions::default()).unwrap();
    assert!(!jet.verdicts.perceptually_uniform);
    assert!(!jet.verdicts.lightness_monotone);
    assert!(!jet.verdicts.cvd_friendly);
    assert_eq!(jet.recompute_verdicts(), jet.verdicts);
    let rf = audit(&registry_get("rainforest").unwrap(), &u, &AuditOptions::default()).unwrap();
    assert!(rf.verdicts.perceptually_uniform && rf.verdicts.lightness_monotone);
}

fn random_map() -> impl Strategy<Value = Colormap> {
    prop::collection::vec(prop::array::uniform3(0.0..=1.0f64), 3..40).prop_map(|rows| {
        Colormap::new(
            "random",
            ColormapKind::Sequential,
            rows.into_iter().map(SrgbColor::from_array).collect(),
        )
        .unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn reversal_invariance(c in random_map()) {
        let u = ucs();
        let r = c.reversed();
        prop_assert!((perceptual_range(&c, &u).unwrap() - perceptual_range(&r, &u).unwrap()).abs() <= 1e-12);
        prop_assert!((uniformity_rms(&c, &u).unwrap() - uniformity_rms(&r, &u).unwrap()).abs() <= 1e-12);
        prop_assert!((smoothness(&c, &u).unwrap() - smoothness(&r, &u).unwrap()).abs() <= 1e-12);
    }

    #[test]
    fn range_splits_exactly(c in random_map(), split in 0.0..1.0f64) {
        let u = ucs();
        let deltas = delta_profile(&c, &u).unwrap();
        let k = ((deltas.len() as f64) * split) as usize;
        let mut left: ExactSum = deltas[..k].iter().copied().collect();
        let right: ExactSum = deltas[k..].iter().copied().collect();
        left.merge(&right);
        prop_assert_eq!(left.value(), range_of(&deltas));
        // Splitting the colormap itself at sample k shares exactly that step profile.
        let head = Colormap::new("h", c.kind(), c.samples()[..=k].to_vec());
        if let Ok(head) = head {
            prop_assert_eq!(delta_profile(&head, &u).unwrap(), deltas[..k].to_vec());
        }
    }

    #[test]
    fn sub_map_never_exceeds_full_range(
        c in random_map(),
        a in 0.0..0.9f64,
        w in 0.01..1.0f64,
        n in 2usize..64,
    ) {
        let u = ucs();
        let b = (a + w).min(1.0);
        let sub = sub_map(&c, a, b, n).unwrap();
        prop_assert!(perceptual_range(&sub, &u).unwrap() <= perceptual_range(&c, &u).unwrap() + 1e-9);
    }

    #[test]
    fn grayscale_has_no_chroma(c in random_map()) {
        let u = ucs();
        let g = to_grayscale(&c, &u).unwrap();
        for s in g.samples() {
            prop_assert!(s.r == s.g && s.g == s.b);
        }
    }
}
