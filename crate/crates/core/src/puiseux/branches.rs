//! Rational Newton–Puiseux expansion.
//!
//! Each edge of slope `m/q` contributes the roots `theta` of its edge
//! polynomial, one per irreducible factor over the current coefficient
//! field. Conjugate roots are never separated, so a class stands for
//! `d = [K:Q]` geometric branches. The substitution
//!
//! ```text
//! s = theta^B * s1^q,   w = s1^m * (theta^A + w1),   A*q - B*m = 1
//! ```
//!
//! avoids adjoining `q`-th roots of `theta`.

use num_bigint::BigInt;

use super::newton::{newton_polygon, order_on_axis};
use super::series::{eval_bipoly, solve_simple_root, Series};
use crate::curve::LocalChart;
use crate::error::{Error, Result};
use crate::exactalg::{factor_uni, resultant_y, BiPoly, Field, Rat, Tower, TowerElem, UniPoly};

/// One conjugacy class of branches at the origin of a local chart.
///
/// The branches are parametrized by
/// `u = lambda * t^e`, `v = head(t) + c * t^k * w(t)`, where `w` is the power
/// series root with `w(0) = 0` of `tail_equation(t, w) = 0`.
#[derive(Clone, Debug)]
pub struct PuiseuxBranchClass {
    pub e: u32,
    pub d: usize,
    pub tower: Tower,
    pub lambda: TowerElem,
    pub head: UniPoly<TowerElem>,
    pub c: TowerElem,
    pub k: u32,
    pub tail_equation: BiPoly<TowerElem>,
}

impl PuiseuxBranchClass {
    /// `u(t)` to precision `prec`.
    pub fn u_series(&self, prec: usize) -> Series<TowerElem> {
        Series::monomial(self.lambda.clone(), self.e as usize, prec)
    }

    /// `v(t)` to precision `prec`.
    pub fn v_series(&self, prec: usize) -> Series<TowerElem> {
        let k = self.k as usize;
        let head = Series::from_poly(&self.head, prec);
        if prec <= k {
            return head;
        }
        let w = solve_simple_root(&self.tail_equation, prec - k);
        head.add(&w.scale(&self.c).shift(k))
    }

    /// Truncated parametrization `(u(t), v(t))`.
    pub fn parametrization(&self, prec: usize) -> (Series<TowerElem>, Series<TowerElem>) {
        (self.u_series(prec), self.v_series(prec))
    }

    /// Whether the class is a single branch defined over Q.
    pub fn is_rational(&self) -> bool {
        self.d == 1
    }
}

struct Stage {
    g: BiPoly<TowerElem>,
    tower: Tower,
    lambda: TowerElem,
    e: u32,
    head: UniPoly<TowerElem>,
    c: TowerElem,
    k: u32,
    depth: usize,
}

fn binomial(n: u32, k: u32) -> Rat {
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Rat::from_integer(acc)
}

/// `G(theta^B s^q, s^m (theta^A + w)) / s^level`.
fn substitute(g: &BiPoly<TowerElem>, theta: &TowerElem, m: u32, q: u32, level: u32, a: u32, b: u32) -> BiPoly<TowerElem> {
    let mut out = BiPoly::zero();
    for (&(j, i), coeff) in g.terms() {
        let base = coeff.mul(&theta.pow((b * j) as u64));
        let sexp = q * j + m * i - level;
        for l in 0..=i {
            let c = base
                .mul(&TowerElem::from_rat(binomial(i, l)))
                .mul(&theta.pow((a * (i - l)) as u64));
            out.add_term((sexp, l), &c);
        }
    }
    out
}

/// `p(c * s^q)`.
fn compose_monomial(p: &UniPoly<TowerElem>, c: &TowerElem, q: u32) -> UniPoly<TowerElem> {
    let mut out = vec![TowerElem::zero(); p.deg() * q as usize + 1];
    let mut cp = TowerElem::one();
    for (i, a) in p.coeffs().iter().enumerate() {
        out[i * q as usize] = a.mul(&cp);
        cp = cp.mul(c);
    }
    UniPoly::new(out)
}

/// Bezout coefficients `A in [1, m]`, `B >= 0` with `A*q - B*m = 1`.
fn bezout(m: u32, q: u32) -> (u32, u32) {
    let a = (1..=m).find(|a| (a * q) % m == 1 % m).expect("m and q are coprime");
    (a, (a * q - 1) / m)
}

fn expand(st: Stage, bound: usize, out: &mut Vec<PuiseuxBranchClass>) -> Result<()> {
    let mut g = st.g.clone();
    let min_w = g.terms().map(|(&(_, i), _)| i).min().expect("nonzero local equation");
    if min_w >= 2 {
        return Err(Error::NotIrreducible("local equation has a repeated branch".into()));
    }
    if min_w == 1 {
        // w = 0 is itself a branch
        out.push(PuiseuxBranchClass {
            e: st.e,
            d: st.tower.degree(),
            tower: st.tower.clone(),
            lambda: st.lambda.clone(),
            head: st.head.clone(),
            c: st.c.clone(),
            k: st.k,
            tail_equation: BiPoly::y(),
        });
        g = BiPoly::from_terms(g.terms().map(|(&(j, i), c)| ((j, i - 1), c.clone())));
    }
    if !g.constant_term().is_zero() {
        return Ok(());
    }
    let polygon = newton_polygon(&g)?;
    for edge in &polygon.edges {
        let (m, q) = edge.slope();
        let (a, b) = bezout(m, q);
        let phi = edge.polynomial(&g);
        for (factor, mult) in factor_uni(&phi, &st.tower)? {
            let (tower, theta) = if factor.deg() == 1 {
                (st.tower.clone(), factor.coeff(0).neg().div(&factor.coeff(1)))
            } else {
                let t = st.tower.extend(&factor);
                let th = t.generator().expect("extension has a generator");
                (t, th)
            };
            let g1 = substitute(&g, &theta, m, q, edge.level(), a, b);
            let tb = theta.pow(b as u64);
            let lambda = st.lambda.mul(&tb.pow(st.e as u64));
            let ck = st.c.mul(&tb.pow(st.k as u64));
            let knew = q * st.k + m;
            let head = compose_monomial(&st.head, &tb, q)
                .add(&UniPoly::monomial(ck.mul(&theta.pow(a as u64)), knew as usize));
            let next = Stage { g: g1, tower, lambda, e: q * st.e, head, c: ck, k: knew, depth: st.depth };
            if mult == 1 {
                out.push(PuiseuxBranchClass {
                    e: next.e,
                    d: next.tower.degree(),
                    tower: next.tower,
                    lambda: next.lambda,
                    head: next.head,
                    c: next.c,
                    k: next.k,
                    tail_equation: next.g,
                });
            } else {
                if st.depth + 1 > bound {
                    return Err(Error::NonTermination { bound });
                }
                expand(Stage { depth: st.depth + 1, ..next }, bound, out)?;
            }
        }
    }
    Ok(())
}

/// Bound on the number of multiple-root refinements: the `u`-order of the
/// discriminant `Res_v(g, dg/dv)`.
pub fn recursion_bound(g: &BiPoly) -> Result<usize> {
    if g.deg_y() == 0 {
        return Ok(0);
    }
    let disc = resultant_y(g, &g.partial_y())?;
    disc.low_order()
        .ok_or_else(|| Error::NotIrreducible("local equation is not squarefree".into()))
}

/// All branch classes at the origin of `g(u, v) = 0`, where `g(0, 0) = 0`
/// and `g(0, v)` is not identically zero.
pub fn branch_classes_of(g: &BiPoly) -> Result<Vec<PuiseuxBranchClass>> {
    let i0 = order_on_axis(g).ok_or_else(|| Error::Inapplicable("local equation is divisible by u".into()))?;
    let bound = recursion_bound(g)?;
    let gt = g.map(|c| TowerElem::from_rat(c.clone()));
    let start = Stage {
        g: gt,
        tower: Tower::rational(),
        lambda: TowerElem::one(),
        e: 1,
        head: UniPoly::zero(),
        c: TowerElem::one(),
        k: 0,
        depth: 0,
    };
    let mut out = Vec::new();
    expand(start, bound, &mut out)?;
    let total: usize = out.iter().map(|b| b.e as usize * b.d).sum();
    if total != i0 as usize {
        return Err(Error::NotIrreducible(format!(
            "branch degrees sum to {total} but the local intersection with u = 0 is {i0}"
        )));
    }
    Ok(out)
}

/// Branch classes over the center of a chart.
pub fn branch_classes(chart: &LocalChart) -> Result<Vec<PuiseuxBranchClass>> {
    branch_classes_of(&chart.g)
}

/// Number of places (points of the normalization) over the chart's center.
pub fn places_over(chart: &LocalChart) -> Result<usize> {
    Ok(branch_classes(chart)?.iter().map(|b| b.d).sum())
}

/// `t`-order of `h(u(t), v(t))` along a class, increasing the precision
/// until it is determined.
pub fn order_along(class: &PuiseuxBranchClass, h: &BiPoly<TowerElem>, start: usize, ceiling: usize) -> Result<usize> {
    if h.is_zero() {
        return Err(Error::ZeroFunction);
    }
    let mut prec = start.max(1);
    loop {
        let (u, v) = class.parametrization(prec);
        if let Some(o) = eval_bipoly(h, &u, &v).order() {
            return Ok(o);
        }
        if prec >= ceiling {
            return Err(Error::PrecisionExhausted { ceiling });
        }
        prec = (2 * prec).min(ceiling);
    }
}
