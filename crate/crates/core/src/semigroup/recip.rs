//! Value semigroup of the reciprocal complement at the unique place.

use std::collections::BTreeMap;

use super::completion::{default_bound, pole_semigroup, Completeness};
use super::numerical::{is_weierstrass_point, NumericalSemigroup};
use crate::curve::{is_affine_smooth, AffinePlaneCurve};
use crate::egyptian::classify;
use crate::error::{Error, Result};
use crate::exactalg::BiPoly;
use crate::puiseux::PlaceAtInfinity;

/// `v(R(D))`, exactly or between two semigroups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VRecip {
    Exact(NumericalSemigroup),
    Sandwich { lower: NumericalSemigroup, upper: NumericalSemigroup },
}

impl VRecip {
    pub fn kind(&self) -> &'static str {
        match self {
            VRecip::Exact(_) => "exact",
            VRecip::Sandwich { .. } => "sandwich",
        }
    }

    pub fn lower(&self) -> &NumericalSemigroup {
        match self {
            VRecip::Exact(s) | VRecip::Sandwich { lower: s, .. } => s,
        }
    }

    pub fn upper(&self) -> &NumericalSemigroup {
        match self {
            VRecip::Exact(s) | VRecip::Sandwich { upper: s, .. } => s,
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct RecipOptions {
    pub bound: Option<u64>,
    pub truncation: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct RecipReport {
    pub h: NumericalSemigroup,
    pub genus: u64,
    pub mu: u64,
    pub weierstrass_point: bool,
    pub v_recip: VRecip,
    pub recip_is_dvr: bool,
    pub colength: Option<u64>,
    pub bound: u64,
    pub stabilized: bool,
    pub completeness: Completeness,
    pub witnesses: BTreeMap<u64, BiPoly>,
}

/// Pole semigroup, genus, Weierstrass status and `v(R(D))` of a
/// non-Egyptian affine-smooth curve.
pub fn recip_analysis(c: &AffinePlaneCurve, opts: &RecipOptions) -> Result<RecipReport> {
    if classify(c)?.egyptian {
        return Err(Error::Egyptian);
    }
    if !is_affine_smooth(c)? {
        return Err(Error::Inapplicable("the affine curve is singular".into()));
    }
    let place = PlaceAtInfinity::unique(c, opts.truncation)?;
    recip_analysis_at(c, &place, opts.bound)
}

/// [`recip_analysis`] at an already computed place at infinity.
pub fn recip_analysis_at(c: &AffinePlaneCurve, place: &PlaceAtInfinity, bound: Option<u64>) -> Result<RecipReport> {
    let bound = bound.unwrap_or_else(|| default_bound(c.degree()));
    let ps = pole_semigroup(c, place, bound)?;
    let h = ps.semigroup;
    let genus = h.genus();
    let mu = h.multiplicity();
    let weierstrass_point = is_weierstrass_point(&h);
    let (v_recip, colength) = if weierstrass_point {
        (VRecip::Sandwich { lower: h.clone(), upper: NumericalSemigroup::ordinary(mu) }, None)
    } else {
        (VRecip::Exact(h.clone()), Some(genus))
    };
    Ok(RecipReport {
        genus,
        mu,
        weierstrass_point,
        v_recip,
        recip_is_dvr: genus == 0,
        colength,
        bound: ps.bound,
        stabilized: ps.stabilized,
        completeness: ps.completeness,
        witnesses: ps.witnesses,
        h,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(s: &str) -> Result<RecipReport> {
        recip_analysis(&AffinePlaneCurve::parse(s).unwrap(), &RecipOptions::default())
    }

    #[test]
    fn elliptic_is_exact() {
        let r = report("y^2 - x^3 + x").unwrap();
        assert_eq!(r.genus, 1);
        assert!(!r.weierstrass_point);
        assert_eq!(r.v_recip, VRecip::Exact(NumericalSemigroup::from_generators(&[2, 3]).unwrap()));
        assert_eq!(r.colength, Some(1));
        assert!(!r.recip_is_dvr);
    }

    #[test]
    fn genus_zero_is_dvr() {
        let r = report("y - x^3").unwrap();
        assert_eq!(r.genus, 0);
        assert!(r.recip_is_dvr);
        assert_eq!(r.colength, Some(0));
        assert_eq!(r.mu, 1);
    }

    #[test]
    fn weierstrass_sandwich() {
        let r = report("y^2 - x^5 - 1").unwrap();
        assert!(r.weierstrass_point);
        assert_eq!(r.v_recip.kind(), "sandwich");
        assert_eq!(r.v_recip.lower().minimal_generators(), &[2, 5]);
        assert_eq!(r.v_recip.upper(), &NumericalSemigroup::ordinary(2));
        assert_eq!(r.colength, None);
    }

    #[test]
    fn preconditions() {
        assert_eq!(report("x^3 + y^3 - 1").unwrap_err(), Error::Egyptian);
        assert!(matches!(report("y^2 - x^3"), Err(Error::Inapplicable(_))));
    }
}
