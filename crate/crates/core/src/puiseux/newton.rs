use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exactalg::{BiPoly, Field, UniPoly};

/// One edge of a Newton polygon.
///
/// Points are `(i, j)` with `i` the exponent of `v` (the dependent variable)
/// and `j` the exponent of `u`. Along the edge `m*i + q*j` is constant and
/// branches tangent to it satisfy `v ~ c * u^(m/q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub start: (u32, u32),
    pub end: (u32, u32),
    pub m: u32,
    pub q: u32,
    /// Support points lying on the edge, by increasing `i`.
    pub points: Vec<(u32, u32)>,
}

impl Edge {
    /// `m/q` as a pair, in lowest terms.
    pub fn slope(&self) -> (u32, u32) {
        (self.m, self.q)
    }

    /// Value of `m*i + q*j` along the edge.
    pub fn level(&self) -> u32 {
        self.m * self.start.0 + self.q * self.start.1
    }

    /// `sum a_ij T^((i - i_start)/q)` over the edge points.
    pub fn polynomial<F: Field>(&self, g: &BiPoly<F>) -> UniPoly<F> {
        let n = ((self.end.0 - self.start.0) / self.q) as usize;
        let mut cs = vec![F::zero(); n + 1];
        for &(i, j) in &self.points {
            cs[((i - self.start.0) / self.q) as usize] = g.coeff(j, i);
        }
        UniPoly::new(cs)
    }
}

/// Lower hull of the support of a local equation, from its leftmost point
/// down to the `u = 0` axis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolygon {
    pub support: Vec<(u32, u32)>,
    /// Edges from left to right; `m/q` strictly decreases.
    pub edges: Vec<Edge>,
}

impl NewtonPolygon {
    /// Vertices of the hull, left to right.
    pub fn vertices(&self) -> Vec<(u32, u32)> {
        match self.edges.first() {
            None => self.support.iter().min().into_iter().copied().collect(),
            Some(first) => std::iter::once(first.start).chain(self.edges.iter().map(|e| e.end)).collect(),
        }
    }
}

/// `ord_v g(0, v)`, or `None` when `g(0, v)` vanishes identically.
pub fn order_on_axis<F: Field>(g: &BiPoly<F>) -> Option<u32> {
    g.terms().filter(|((j, _), _)| *j == 0).map(|((_, i), _)| *i).min()
}

/// Newton polygon of `g(u, v)`, where the first variable of the [`BiPoly`] is
/// `u` and the second `v`.
pub fn newton_polygon<F: Field>(g: &BiPoly<F>) -> Result<NewtonPolygon> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !g.constant_term().is_zero() {
        return Err(Error::Inapplicable("local equation does not vanish at the origin".into()));
    }
    let i0 = order_on_axis(g)
        .ok_or_else(|| Error::Inapplicable("local equation is divisible by u".into()))?;
    let mut support: Vec<(u32, u32)> = g.terms().map(|(&(j, i), _)| (i, j)).collect();
    support.sort();
    let candidates: Vec<(u32, u32)> = support.iter().copied().filter(|&(i, _)| i <= i0).collect();
    let mut cur = candidates[0];
    let mut edges = Vec::new();
    while cur != (i0, 0) {
        // the next vertex minimizes the slope (j - j_c)/(i - i_c); ties go to the farthest point
        let mut best: Option<(u32, u32)> = None;
        for &p in candidates.iter().filter(|p| p.0 > cur.0) {
            best = Some(match best {
                None => p,
                Some(b) => {
                    let lhs = (p.1 as i64 - cur.1 as i64) * (b.0 - cur.0) as i64;
                    let rhs = (b.1 as i64 - cur.1 as i64) * (p.0 - cur.0) as i64;
                    if lhs < rhs || (lhs == rhs && p.0 > b.0) {
                        p
                    } else {
                        b
                    }
                }
            });
        }
        let next = best.expect("hull reaches the axis point");
        let (di, dj) = (next.0 - cur.0, cur.1 - next.1);
        let gcd = di.gcd(&dj);
        let (m, q) = (dj / gcd, di / gcd);
        let level = m * cur.0 + q * cur.1;
        let points = candidates
            .iter()
            .copied()
            .filter(|&(i, j)| i >= cur.0 && i <= next.0 && m * i + q * j == level)
            .collect();
        edges.push(Edge { start: cur, end: next, m, q, points });
        cur = next;
    }
    Ok(NewtonPolygon { support, edges })
}
