#![allow(dead_code)]

use recip_cli::AnalysisDocument;
use recip_core::exactalg::{BiPoly, Rat};
use serde_json::Value;

/// Curves exercising every branch of the analysis.
pub const POOL: &[&str] = &[
    "y^2 - x^3 + x",
    "y - x^3",
    "y^2 - x^5 - 1",
    "x^3 - x*y - y",
    "y - x^2",
    "y - x",
    "y^3 - x^4 - 1",
    "x^3 + y^3 - 1",
    "y^2 - x^3",
    "y^2 - 2*x^2*y + x^4 - x",
    "x*y - 1",
    "(x^2 - 2*y^2)^2 + x + y",
];

/// `f(x + a, y)`.
pub fn shift_x(f: &BiPoly, a: &Rat) -> BiPoly {
    let xs = BiPoly::x().add(&BiPoly::constant(a.clone()));
    let mut out = BiPoly::zero();
    for (&(i, j), c) in f.terms() {
        out = out.add(&xs.pow(i as u64).mul(&BiPoly::y().pow(j as u64)).scale(c));
    }
    out
}

/// The document with the fields that depend on the chosen equation removed.
pub fn verdict_fields(doc: &AnalysisDocument) -> Value {
    let mut v = serde_json::to_value(doc).unwrap();
    let m = v.as_object_mut().unwrap();
    for k in ["input", "timing_ms", "place_parametrization", "version"] {
        m.remove(k);
    }
    v
}
