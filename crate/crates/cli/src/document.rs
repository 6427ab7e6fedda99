use std::fmt;

use serde::{Deserialize, Serialize};

pub const STATUS_OK: &str = "ok";

/// Everything `analyze` reports about one curve.
///
/// Fields not applicable to a curve are `null`: places and semigroup data
/// are only filled in as far as the analysis got.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisDocument {
    pub input: String,
    pub egyptian: Option<bool>,
    pub points_at_infinity: Option<usize>,
    pub places_at_infinity: Option<usize>,
    /// Whether `places_at_infinity` is exact rather than a lower bound.
    pub places_exact: Option<bool>,
    /// `[x0:x1:x2]` with the line at infinity `x0 = 0`.
    pub unique_point: Option<String>,
    /// The same point as `[X:Y:Z]` with `x = X/Z`, `y = Y/Z`.
    pub unique_point_xyz: Option<String>,
    pub regular_at_infinity: Option<bool>,
    pub integral_closure: Option<String>,
    pub place_parametrization: Option<String>,
    pub semigroup_generators: Option<Vec<u64>>,
    pub genus: Option<u64>,
    pub mu: Option<u64>,
    pub weierstrass_point: Option<bool>,
    pub v_recip_kind: Option<String>,
    pub dvr: Option<bool>,
    pub colength: Option<u64>,
    pub semigroup_bound: Option<u64>,
    pub stabilized: Option<bool>,
    pub completion: Option<String>,
    pub notes: Vec<String>,
    pub status: String,
    pub error: Option<String>,
    pub version: String,
    pub timing_ms: u64,
}

impl AnalysisDocument {
    pub fn new(input: &str) -> Self {
        AnalysisDocument {
            input: input.to_string(),
            status: STATUS_OK.into(),
            version: env!("CARGO_PKG_VERSION").into(),
            ..Default::default()
        }
    }

    pub fn is_ok(&self) -> bool {
        self.status == STATUS_OK
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("document serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    /// Copy with the timing zeroed, for comparisons across runs.
    pub fn without_timing(&self) -> Self {
        AnalysisDocument { timing_ms: 0, ..self.clone() }
    }

    /// `{0} ∪ [mu, ∞)` in text.
    fn upper_text(&self) -> Option<String> {
        self.mu.map(|m| format!("{{0}} ∪ [{m}, ∞)"))
    }

    fn semigroup_text(&self) -> Option<String> {
        self.semigroup_generators.as_ref().map(|g| {
            let g: Vec<String> = g.iter().map(u64::to_string).collect();
            format!("<{}>", g.join(", "))
        })
    }
}

fn opt<T: fmt::Display>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".into(), T::to_string)
}

impl fmt::Display for AnalysisDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut row = |k: &str, v: String| writeln!(f, "{k:<22}{v}");
        row("input", self.input.clone())?;
        row("egyptian", opt(&self.egyptian))?;
        row("points at infinity", opt(&self.points_at_infinity))?;
        let places = match (self.places_at_infinity, self.places_exact) {
            (Some(n), Some(false)) => format!(">= {n}"),
            (n, _) => opt(&n),
        };
        row("places at infinity", places)?;
        if let Some(p) = &self.unique_point {
            row("unique point", format!("{p} (XYZ {})", opt(&self.unique_point_xyz)))?;
        }
        row("regular at infinity", opt(&self.regular_at_infinity))?;
        if let Some(c) = &self.integral_closure {
            row("integral closure", c.clone())?;
        }
        if let Some(p) = &self.place_parametrization {
            row("place", p.clone())?;
        }
        if self.semigroup_generators.is_some() {
            let h = self.semigroup_text().unwrap_or_default();
            row("semigroup H", h.clone())?;
            row("genus", opt(&self.genus))?;
            row("mu", opt(&self.mu))?;
            row("weierstrass point", opt(&self.weierstrass_point))?;
            let v = match self.v_recip_kind.as_deref() {
                Some("exact") => format!("exact, equal to {h}"),
                Some(k) => format!("{k}, {h} ⊆ v(R(D)) ⊆ {}", self.upper_text().unwrap_or_default()),
                None => "-".into(),
            };
            row("v(R(D))", v)?;
            row("dvr", opt(&self.dvr))?;
            row("colength", opt(&self.colength))?;
            let stab = if self.stabilized == Some(true) { "stabilized" } else { "not stabilized" };
            row("completion", format!("{}, bound {}, {stab}", opt(&self.completion), opt(&self.semigroup_bound)))?;
        }
        for n in &self.notes {
            row("note", n.clone())?;
        }
        match &self.error {
            Some(e) => row("status", format!("{}: {e}", self.status))?,
            None => row("status", self.status.clone())?,
        }
        Ok(())
    }
}
