//! Serialization helpers pinning floats to 9 significant digits.

use serde::ser::{SerializeSeq, Serializer};

/// Rounds to 9 significant decimal digits. Non-finite values pass through.
pub fn round_sig9(v: f64) -> f64 {
    if !v.is_finite() || v == 0.0 {
        return if v == 0.0 { 0.0 } else { v };
    }
    format!("{v:.8e}").parse().unwrap_or(v)
}

pub fn f64_sig9<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(round_sig9(*v))
}

pub fn opt_f64_sig9<S: Serializer>(v: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.serialize_some(&round_sig9(*v)),
        None => s.serialize_none(),
    }
}

pub fn slice_sig9<S: Serializer>(v: &[f64], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        seq.serialize_element(&round_sig9(*x))?;
    }
    seq.end()
}

pub fn triples_sig9<S: Serializer>(v: &[[f64; 3]], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for t in v {
        seq.serialize_element(&t.map(round_sig9))?;
    }
    seq.end()
}
