//! The place at infinity of a curve with a single branch there, and the
//! valuation it defines on the function field.

use std::cell::RefCell;

use super::branches::{branch_classes, order_along, PuiseuxBranchClass};
use super::newton::order_on_axis;
use super::series::{eval_bipoly, Series};
use crate::curve::{chart_at, points_at_infinity, AffinePlaneCurve, LocalChart};
use crate::error::{Error, Result};
use crate::exactalg::{BiPoly, Field, TowerElem};

/// Largest number of series terms ever computed for one valuation.
pub const PRECISION_CEILING: usize = 1024;

/// Default starting truncation for a curve of degree `d`.
pub fn default_truncation(d: u32) -> usize {
    2 * (d as usize * d as usize + 1)
}

/// The unique place at infinity, with `v(t) = 1` for the branch parameter.
#[derive(Clone, Debug)]
pub struct PlaceAtInfinity {
    pub chart: LocalChart,
    pub class: PuiseuxBranchClass,
    f: BiPoly,
    pub truncation: usize,
    /// Longest parametrization computed so far.
    cache: RefCell<Option<(Series<TowerElem>, Series<TowerElem>)>>,
}

impl PlaceAtInfinity {
    /// The place at infinity of `c`, which must be the only one.
    pub fn unique(c: &AffinePlaneCurve, truncation: Option<usize>) -> Result<Self> {
        let pts = points_at_infinity(c)?;
        let total: usize = pts.iter().map(|p| p.class_size).sum();
        if total != 1 {
            return Err(Error::Inapplicable(format!("the curve has {total} points at infinity")));
        }
        let p = pts[0].rational_point.clone().expect("a single point at infinity is rational");
        let chart = chart_at(c, &p)?;
        let mut classes = branch_classes(&chart)?;
        let places: usize = classes.iter().map(|b| b.d).sum();
        if places != 1 {
            return Err(Error::Inapplicable(format!("the curve has {places} places at infinity")));
        }
        Ok(PlaceAtInfinity {
            chart,
            class: classes.pop().expect("one class"),
            f: c.f().clone(),
            truncation: truncation.unwrap_or_else(|| default_truncation(c.degree())),
            cache: RefCell::new(None),
        })
    }

    /// Ramification of the `u` coordinate at the place.
    pub fn ramification(&self) -> u32 {
        self.class.e
    }

    /// `(u(t), v(t))` to precision `prec`.
    fn parametrization(&self, prec: usize) -> (Series<TowerElem>, Series<TowerElem>) {
        if let Some((u, v)) = &*self.cache.borrow() {
            if v.prec() >= prec {
                return (u.truncate(prec), v.truncate(prec));
            }
        }
        let p = self.class.parametrization(prec);
        *self.cache.borrow_mut() = Some(p.clone());
        p
    }

    /// `t`-order of `h(u(t), v(t))`, doubling the precision from `start`.
    fn order(&self, h: &BiPoly<TowerElem>, start: usize) -> Result<usize> {
        if h.is_zero() {
            return Err(Error::ZeroFunction);
        }
        let mut prec = start.max(1);
        loop {
            let (u, v) = self.parametrization(prec);
            if let Some(o) = eval_bipoly(h, &u, &v).order() {
                return Ok(o);
            }
            if prec >= PRECISION_CEILING {
                return Err(Error::PrecisionExhausted { ceiling: PRECISION_CEILING });
            }
            prec = (2 * prec).min(PRECISION_CEILING);
        }
    }

    /// `t`-expansions of the chart numerator of `h` and of `x0^deg h`, to
    /// absolute precision `prec`.
    fn chart_series(&self, h: &BiPoly, prec: usize) -> (Series<TowerElem>, Series<TowerElem>) {
        let (num, deg) = self.chart.transport(h);
        let lift = |p: &BiPoly| p.map(|c| TowerElem::from_rat(c.clone()));
        let (u, v) = self.parametrization(prec);
        let n = eval_bipoly(&lift(&num), &u, &v);
        let x0 = eval_bipoly(&lift(&self.chart.x0()), &u, &v);
        let mut den = Series::new(vec![TowerElem::one()], prec);
        for _ in 0..deg {
            den = den.mul(&x0);
        }
        (n, den)
    }

    /// Laurent expansion of the function `h` at the place: `(ord, coeffs)`
    /// with `h = t^ord * (coeffs[0] + coeffs[1] t + ...)`, giving at least
    /// `len` coefficients.
    pub fn laurent(&self, h: &BiPoly, len: usize) -> Result<(i64, Vec<TowerElem>)> {
        let v = self.valuation(h, self.truncation)?;
        let (_, deg) = self.chart.transport(h);
        let den_order = self.den_order(deg)?;
        let num_order = (v + den_order as i64) as usize;
        let prec = num_order.max(den_order) + len;
        let (n, d) = self.chart_series(h, prec);
        let q = n.unshift(num_order).mul(&d.unshift(den_order).inv());
        let coeffs = (0..len).map(|k| q.coeff(k)).collect();
        Ok((v, coeffs))
    }

    fn den_order(&self, deg: u32) -> Result<usize> {
        let x0 = self.chart.x0().map(|c| TowerElem::from_rat(c.clone()));
        Ok(deg as usize * self.order(&x0, self.truncation)?)
    }

    /// `v(h)`, computed from expansions starting at `prec` terms.
    pub fn valuation(&self, h: &BiPoly, prec: usize) -> Result<i64> {
        if h.is_zero() || self.f.divides(h) {
            return Err(Error::ZeroFunction);
        }
        let (num, deg) = self.chart.transport(h);
        let lift = |p: &BiPoly| p.map(|c| TowerElem::from_rat(c.clone()));
        let on = self.order(&lift(&num), prec)?;
        let ox = self.order(&lift(&self.chart.x0()), prec)?;
        Ok(on as i64 - deg as i64 * ox as i64)
    }
}

/// `v(h)` at the place, starting from `prec` series terms.
pub fn valuation_at(place: &PlaceAtInfinity, h: &BiPoly, prec: usize) -> Result<i64> {
    place.valuation(h, prec)
}

/// Milnor number of the chart's local equation at the origin, from its
/// branches: `(g, g_v)_0 - (g, u)_0 + 1`.
pub fn milnor_number(chart: &LocalChart, classes: &[PuiseuxBranchClass], prec: usize) -> Result<usize> {
    let g = &chart.g;
    let i0 = order_on_axis(g).ok_or_else(|| Error::Inapplicable("local equation is divisible by u".into()))?;
    let gv = g.partial_y().map(|c| TowerElem::from_rat(c.clone()));
    let mut polar = 0usize;
    for b in classes {
        if gv.is_zero() {
            return Err(Error::NotIrreducible("local equation is constant in v".into()));
        }
        polar += b.d * order_along(b, &gv, prec, PRECISION_CEILING)?;
    }
    (polar + 1)
        .checked_sub(i0 as usize)
        .ok_or_else(|| Error::NotIrreducible("inconsistent local intersection numbers".into()))
}
