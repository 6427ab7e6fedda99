//! Deciding whether the coordinate ring of a plane curve is Egyptian.
//!
//! The ring is Egyptian exactly when the normalization of the projective
//! closure has more than one point over the line at infinity. Several points
//! at infinity already give several places; a single point needs its
//! branches counted.

use std::fmt;

use crate::curve::{chart_at, is_regular_at, points_at_infinity, AffinePlaneCurve, ProjPoint};
use crate::error::{Error, Result};
use crate::exactalg::{format_rat, Field, TowerElem};
use crate::puiseux::{branch_classes, PlaceAtInfinity, PuiseuxBranchClass, Series};

/// Number of places at infinity, exact or as a lower bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlacesCount {
    Exact(usize),
    AtLeast(usize),
}

impl PlacesCount {
    pub fn value(self) -> usize {
        match self {
            PlacesCount::Exact(n) | PlacesCount::AtLeast(n) => n,
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, PlacesCount::Exact(_))
    }
}

impl fmt::Display for PlacesCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlacesCount::Exact(n) => write!(f, "{n}"),
            PlacesCount::AtLeast(n) => write!(f, ">= {n}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EgyptianVerdict {
    pub egyptian: bool,
    pub points_at_infinity: usize,
    pub places_at_infinity: PlacesCount,
    pub unique_point: Option<ProjPoint>,
    pub unique_point_regular: Option<bool>,
    pub notes: Vec<String>,
}

/// Decide whether `k[x, y]/(f)` is Egyptian.
pub fn classify(c: &AffinePlaneCurve) -> Result<EgyptianVerdict> {
    let classes = points_at_infinity(c)?;
    let points: usize = classes.iter().map(|k| k.class_size).sum();
    let mut notes = Vec::new();

    if points > 1 {
        let mut places = 0;
        let mut exact = true;
        for class in &classes {
            match &class.rational_point {
                Some(p) => match chart_at(c, p).and_then(|ch| branch_classes(&ch)) {
                    Ok(bs) => places += bs.iter().map(|b| b.d).sum::<usize>(),
                    Err(e) => {
                        notes.push(format!("places over {p} not computed: {e}"));
                        places += 1;
                        exact = false;
                    }
                },
                // a nonsingular point carries a single branch
                None if class.is_regular(c) => places += class.class_size,
                None => {
                    places += class.class_size;
                    exact = false;
                }
            }
        }
        if !exact && notes.is_empty() {
            notes.push("places over irrational points at infinity not computed".into());
        }
        let places_at_infinity = if exact { PlacesCount::Exact(places) } else { PlacesCount::AtLeast(places) };
        return Ok(EgyptianVerdict {
            egyptian: true,
            points_at_infinity: points,
            places_at_infinity,
            unique_point: None,
            unique_point_regular: None,
            notes,
        });
    }

    let p = classes[0].rational_point.clone().expect("a single point at infinity is rational");
    let regular = is_regular_at(c, &p)?;
    let chart = chart_at(c, &p)?;
    let places: usize = branch_classes(&chart)?.iter().map(|b| b.d).sum();
    if regular && places != 1 {
        return Err(Error::NotIrreducible(format!("{places} branches through the nonsingular point {p}")));
    }
    if places == 1 {
        notes.push("single place at infinity: f is absolutely irreducible".into());
    }
    Ok(EgyptianVerdict {
        egyptian: places > 1,
        points_at_infinity: 1,
        places_at_infinity: PlacesCount::Exact(places),
        unique_point: Some(p),
        unique_point_regular: Some(regular),
        notes,
    })
}

/// The integral closure of the reciprocal complement of a non-Egyptian
/// curve: the valuation ring of its unique place at infinity.
#[derive(Clone, Debug)]
pub struct IntegralClosureReport {
    pub point: ProjPoint,
    /// The local ring of the closure at the point is itself a DVR, and is
    /// the integral closure.
    pub local_ring_is_dvr: bool,
    /// Containment of the reciprocal complement in the local ring at the
    /// point, as established when the point is nonsingular.
    pub recip_in_local_ring: bool,
    pub ramification: u32,
    /// Truncated parametrization of the place in chart coordinates.
    pub parametrization: String,
}

impl fmt::Display for IntegralClosureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.local_ring_is_dvr {
            writeln!(f, "integral closure of R(D): the local ring at {}, a DVR", self.point)?;
            writeln!(f, "R(D) is contained in the local ring at {}", self.point)?;
        } else {
            writeln!(f, "{} is singular; integral closure of R(D): the DVR of the unique place over it", self.point)?;
        }
        write!(f, "place: {}", self.parametrization)
    }
}

fn format_series(s: &Series<TowerElem>, var: &str, terms: usize) -> String {
    let mut parts = Vec::new();
    for k in 0..s.prec() {
        let c = s.coeff(k);
        if c.is_zero() {
            continue;
        }
        let mono = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        let coeff = match c.as_rat() {
            Some(r) if mono.is_empty() => format_rat(&r),
            Some(r) if r == crate::exactalg::rat(1) => String::new(),
            Some(r) if r == crate::exactalg::rat(-1) => "-".into(),
            Some(r) => format!("{}*", format_rat(&r)),
            None => format!("({c})*"),
        };
        parts.push(format!("{coeff}{mono}"));
        if parts.len() == terms {
            break;
        }
    }
    if parts.is_empty() {
        parts.push("0".into());
    }
    format!("{} + O({var}^{})", parts.join(" + ").replace("+ -", "- "), s.prec())
}

/// Text form `u = ..., v = ...` of a branch class, to `prec` terms.
pub fn describe_branch(b: &PuiseuxBranchClass, prec: usize) -> String {
    let (u, v) = b.parametrization(prec);
    format!("u = {}, v = {}", format_series(&u, "t", 4), format_series(&v, "t", 4))
}

/// Describe the integral closure of `R(D)` for a non-Egyptian verdict.
pub fn integral_closure_report(c: &AffinePlaneCurve, v: &EgyptianVerdict) -> Result<IntegralClosureReport> {
    if v.egyptian {
        return Err(Error::Egyptian);
    }
    integral_closure_at(v, &PlaceAtInfinity::unique(c, None)?)
}

/// [`integral_closure_report`] from an already computed place.
pub fn integral_closure_at(v: &EgyptianVerdict, place: &PlaceAtInfinity) -> Result<IntegralClosureReport> {
    if v.egyptian {
        return Err(Error::Egyptian);
    }
    let point = v.unique_point.clone().expect("non-Egyptian verdicts have a unique point");
    let regular = v.unique_point_regular.unwrap_or(false);
    let prec = (place.class.e as usize + place.class.k as usize + 4).max(8);
    Ok(IntegralClosureReport {
        point,
        local_ring_is_dvr: regular,
        recip_in_local_ring: regular,
        ramification: place.class.e,
        parametrization: describe_branch(&place.class, prec),
    })
}
