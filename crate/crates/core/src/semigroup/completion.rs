//! Pole orders of polynomial functions at the unique place at infinity.
//!
//! Monomials `x^a y^b` are added degree by degree and their principal parts
//! at the place are row-reduced; each surviving row has a new pole order and
//! a polynomial realizing it. The search stops once the gaps of the realized
//! orders match the genus computed from the Milnor number of the point at
//! infinity.

use std::collections::BTreeMap;

use num_integer::Integer;

use super::numerical::NumericalSemigroup;
use crate::curve::{is_affine_smooth, AffinePlaneCurve};
use crate::error::{Error, Result};
use crate::exactalg::{BiPoly, Field, Rat};
use crate::puiseux::{milnor_number, valuation_at, PlaceAtInfinity};

/// How the completion ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Completeness {
    /// Gap count equals the genus of the curve, so no pole order is missing.
    Certified,
    /// Degree cap reached first.
    Heuristic,
}

#[derive(Clone, Debug)]
pub struct PoleSemigroup {
    pub semigroup: NumericalSemigroup,
    /// A polynomial with each realized pole order.
    pub witnesses: BTreeMap<u64, BiPoly>,
    pub bound: u64,
    /// Every integer in `[F + 1, bound]` lies in the semigroup.
    pub stabilized: bool,
    pub completeness: Completeness,
    /// Largest monomial degree used.
    pub degree: u32,
}

/// Default bound `2(d-1)(d-2) + 2`.
pub fn default_bound(d: u32) -> u64 {
    let d = d as u64;
    2 * (d - 1) * d.saturating_sub(2) + 2
}

/// Genus of the normalization of the closure of an affine-smooth curve with
/// one place at infinity: `(d-1)(d-2)/2 - mu/2`, with `mu` the Milnor number
/// of the point at infinity.
pub fn geometric_genus(c: &AffinePlaneCurve, place: &PlaceAtInfinity) -> Result<u64> {
    let mu = milnor_number(&place.chart, std::slice::from_ref(&place.class), place.truncation)? as u64;
    let d = c.degree() as u64;
    let arithmetic = (d - 1) * d.saturating_sub(2) / 2;
    if !mu.is_multiple_of(2) || mu / 2 > arithmetic {
        return Err(Error::NotIrreducible(format!("Milnor number {mu} at infinity is inconsistent with degree {d}")));
    }
    Ok(arithmetic - mu / 2)
}

/// Truncated Laurent series `t^ord (c_0 + c_1 t + ...)`, known to
/// `coeffs.len()` terms.
#[derive(Clone, Debug)]
struct Laurent {
    ord: i64,
    coeffs: Vec<Rat>,
}

impl Laurent {
    fn one(len: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); len];
        coeffs[0] = Rat::one();
        Laurent { ord: 0, coeffs }
    }

    fn mul(&self, o: &Self) -> Self {
        let n = self.coeffs.len().min(o.coeffs.len());
        let mut coeffs = vec![Rat::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if Field::is_zero(a) {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(n - i) {
                coeffs[i + j] = Field::add(&coeffs[i + j], &Field::mul(a, b));
            }
        }
        Laurent { ord: self.ord + o.ord, coeffs }
    }

    /// Coefficients of `t^0, t^-1, ..., t^ord`.
    fn principal_part(&self) -> Vec<Rat> {
        if self.ord > 0 {
            return vec![Rat::zero()];
        }
        let p = (-self.ord) as usize;
        assert!(p < self.coeffs.len(), "Laurent series too short for its principal part");
        (0..=p).map(|k| self.coeffs[p - k].clone()).collect()
    }
}


fn expansion(place: &PlaceAtInfinity, h: &BiPoly, len: usize) -> Result<Option<Laurent>> {
    match place.laurent(h, len) {
        Err(Error::ZeroFunction) => Ok(None),
        Err(e) => Err(e),
        Ok((ord, cs)) => {
            let coeffs = cs
                .iter()
                .map(|c| c.as_rat().ok_or_else(|| Error::Inapplicable("place is not rational".into())))
                .collect::<Result<_>>()?;
            Ok(Some(Laurent { ord, coeffs }))
        }
    }
}

struct Powers {
    x: Vec<Option<Laurent>>,
    y: Vec<Option<Laurent>>,
    upto: u32,
}

impl Powers {
    fn new(place: &PlaceAtInfinity, n: u32, pole: u64) -> Result<Self> {
        let len = 1 + n as usize * pole as usize;
        let pw = |h: BiPoly| -> Result<Vec<Option<Laurent>>> {
            let base = expansion(place, &h, len)?;
            let mut out = vec![Some(Laurent::one(len))];
            for i in 1..=n as usize {
                let next = match (&out[i - 1], &base) {
                    (Some(a), Some(b)) => Some(a.mul(b)),
                    _ => None,
                };
                out.push(next);
            }
            Ok(out)
        };
        Ok(Powers { x: pw(BiPoly::x())?, y: pw(BiPoly::y())?, upto: n })
    }

    fn monomial(&self, a: u32, b: u32) -> Option<Laurent> {
        match (&self.x[a as usize], &self.y[b as usize]) {
            (Some(p), Some(q)) => Some(p.mul(q)),
            _ => None,
        }
    }
}

struct Row {
    pp: Vec<Rat>,
    witness: BiPoly,
}

fn lead(pp: &[Rat]) -> Option<usize> {
    pp.iter().rposition(|c| !Field::is_zero(c))
}

/// Reduce against the echelon rows; returns the new row if independent.
fn reduce(rows: &BTreeMap<u64, Row>, mut pp: Vec<Rat>, mut witness: BiPoly) -> Option<(u64, Row)> {
    while let Some(k) = lead(&pp) {
        let Some(row) = rows.get(&(k as u64)) else {
            pp.truncate(k + 1);
            return Some((k as u64, Row { pp, witness }));
        };
        let s = Field::div(&pp[k], &row.pp[k]);
        for (i, c) in row.pp.iter().enumerate() {
            pp[i] = Field::sub(&pp[i], &Field::mul(&s, c));
        }
        witness = witness.sub(&row.witness.scale(&s));
    }
    None
}

fn realized(rows: &BTreeMap<u64, Row>) -> Option<NumericalSemigroup> {
    let poles: Vec<u64> = rows.keys().copied().filter(|&k| k > 0).collect();
    if poles.iter().fold(0u64, |a, &b| a.gcd(&b)) != 1 {
        return None;
    }
    NumericalSemigroup::from_generators(&poles).ok()
}

/// The semigroup of pole orders at the unique place at infinity of an
/// affine-smooth curve, with witnesses re-checked by direct valuation.
pub fn pole_semigroup(c: &AffinePlaneCurve, place: &PlaceAtInfinity, bound: u64) -> Result<PoleSemigroup> {
    if !is_affine_smooth(c)? {
        return Err(Error::Inapplicable("the affine curve is singular".into()));
    }
    let genus = geometric_genus(c, place)?;
    let d = c.degree();
    let cap = (4 * d).max(16);
    let pole = [BiPoly::x(), BiPoly::y()]
        .iter()
        .map(|h| expansion(place, h, 1).map(|l| l.map_or(0, |l| (-l.ord).max(0) as u64)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .max()
        .unwrap_or(0)
        .max(1);

    let mut rows: BTreeMap<u64, Row> = BTreeMap::new();
    rows.insert(0, Row { pp: vec![Rat::one()], witness: BiPoly::one() });
    let mut powers = Powers::new(place, 1, pole)?;
    let mut found = None;
    let mut degree = 0;
    for n in 1..=cap {
        if n > powers.upto {
            powers = Powers::new(place, (2 * powers.upto).min(cap), pole)?;
        }
        for a in (0..=n).rev() {
            let Some(l) = powers.monomial(a, n - a) else { continue };
            let w = BiPoly::monomial(Rat::one(), a, n - a);
            if let Some((k, row)) = reduce(&rows, l.principal_part(), w) {
                rows.insert(k, row);
            }
        }
        degree = n;
        if let Some(s) = realized(&rows) {
            if s.genus() == genus {
                found = Some((s, Completeness::Certified));
                break;
            }
        }
    }
    let (semigroup, completeness) = match found {
        Some(f) => f,
        None => (realized(&rows).ok_or(Error::NonTermination { bound: cap as usize })?, Completeness::Heuristic),
    };

    let mut witnesses = BTreeMap::new();
    for &s in semigroup.minimal_generators() {
        let w = rows.remove(&s).expect("minimal generators are realized").witness;
        let v = valuation_at(place, &w, place.truncation)?;
        if v != -(s as i64) {
            return Err(Error::Inapplicable(format!("witness for pole order {s} has valuation {v}")));
        }
        witnesses.insert(s, w);
    }
    Ok(PoleSemigroup {
        stabilized: semigroup.frobenius() < bound as i64,
        semigroup,
        witnesses,
        bound,
        completeness,
        degree,
    })
}
