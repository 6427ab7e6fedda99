//! Plane affine curves, their projective closure and points at infinity.
//!
//! Projective coordinates are `[x0:x1:x2]` with `x = x1/x0`, `y = x2/x0`; the
//! line at infinity is `x0 = 0`.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactalg::{
    factor_rational, format_rat, gcd_uni, rat, resultant_y, squarefree_part, BiPoly, Field, Rat,
    Tower, TowerElem, UniPoly,
};
use crate::parser::{format_poly, parse_poly};

/// A rational point of the projective plane, normalized so that the last
/// nonzero coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjPoint {
    coords: [Rat; 3],
}

impl ProjPoint {
    pub fn new(x0: Rat, x1: Rat, x2: Rat) -> Self {
        let c = [x0, x1, x2];
        let lead = c.iter().rev().find(|v| !Field::is_zero(*v)).expect("projective point with all coordinates zero").clone();
        ProjPoint { coords: c.map(|v| v.div(&lead)) }
    }

    /// The point at infinity in direction `(a, b)`.
    pub fn at_infinity(a: Rat, b: Rat) -> Self {
        ProjPoint::new(rat(0), a, b)
    }

    pub fn coords(&self) -> &[Rat; 3] {
        &self.coords
    }

    pub fn is_at_infinity(&self) -> bool {
        Field::is_zero(&self.coords[0])
    }

    /// The same point written as `[X:Y:Z]` with `x = X/Z`, `y = Y/Z`.
    pub fn to_xyz(&self) -> String {
        let [x0, x1, x2] = &self.coords;
        ProjPoint::new(x1.clone(), x2.clone(), x0.clone()).to_string()
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}:{}]", format_rat(&self.coords[0]), format_rat(&self.coords[1]), format_rat(&self.coords[2]))
    }
}

/// A validated plane affine curve `f(x, y) = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct AffinePlaneCurve {
    f: BiPoly,
    degree: u32,
    leading_form: BiPoly,
}

/// Degree-`d` homogeneous part of `f`, as a binary form in `(x, y)`.
pub fn leading_form(f: &BiPoly) -> Result<BiPoly> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    Ok(f.homogeneous_part(f.total_degree()))
}

fn content_check(content: &UniPoly) -> Result<()> {
    if content.is_constant() {
        return Ok(());
    }
    if squarefree_part(content)?.deg() < content.deg() {
        Err(Error::NotSquarefree)
    } else {
        Err(Error::NotIrreducible("the polynomial has a factor in one variable only".into()))
    }
}

fn univariate_check(p: &UniPoly) -> Result<()> {
    if squarefree_part(p)?.deg() < p.deg() {
        return Err(Error::NotSquarefree);
    }
    if p.deg() > 1 {
        return Err(Error::NotIrreducible("the curve is a union of parallel lines".into()));
    }
    Ok(())
}

impl AffinePlaneCurve {
    /// Validate `f`: nonzero, nonconstant and squarefree. Contents in one
    /// variable and unions of parallel lines are rejected as reducible.
    pub fn new(f: BiPoly) -> Result<Self> {
        let leading = leading_form(&f)?;
        if let Some(p) = f.as_poly_in_x() {
            univariate_check(&p)?;
        } else if let Some(p) = f.as_poly_in_y() {
            univariate_check(&p)?;
        } else {
            let cy = f.coeffs_in_y().iter().fold(UniPoly::zero(), |g, c| gcd_uni(&g, c));
            content_check(&cy)?;
            let cx = f.swap().coeffs_in_y().iter().fold(UniPoly::zero(), |g, c| gcd_uni(&g, c));
            content_check(&cx)?;
            // a primitive polynomial is squarefree iff its discriminant in y is nonzero
            if resultant_y(&f, &f.partial_y())?.is_zero() {
                return Err(Error::NotSquarefree);
            }
        }
        Ok(AffinePlaneCurve { degree: f.total_degree(), leading_form: leading, f })
    }

    pub fn parse(src: &str) -> Result<Self> {
        AffinePlaneCurve::new(parse_poly(src)?)
    }

    pub fn f(&self) -> &BiPoly {
        &self.f
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn leading_form(&self) -> &BiPoly {
        &self.leading_form
    }

    /// Canonical text of `f`.
    pub fn text(&self) -> String {
        format_poly(&self.f)
    }

    /// `F(x0, x1, x2)` evaluated at a point.
    fn homogenized_eval(&self, p: &[Rat; 3]) -> Rat {
        self.f.terms().fold(rat(0), |acc, (&(a, b), c)| {
            let k = self.degree - a - b;
            acc.add(&c.mul(&Field::pow(&p[0], k as u64)).mul(&Field::pow(&p[1], a as u64)).mul(&Field::pow(&p[2], b as u64)))
        })
    }

    /// Gradient of `F` at a point.
    fn homogenized_gradient(&self, p: &[Rat; 3]) -> [Rat; 3] {
        let pw = |v: &Rat, e: u32, drop: bool| -> Rat {
            match (e, drop) {
                (0, true) => rat(0),
                (e, true) => Field::pow(v, e as u64 - 1).mul(&Rat::from_i64(e as i64)),
                (e, false) => Field::pow(v, e as u64),
            }
        };
        let mut g = [rat(0), rat(0), rat(0)];
        for (&(a, b), c) in self.f.terms() {
            let e = [self.degree - a - b, a, b];
            for (k, gk) in g.iter_mut().enumerate() {
                let mut term = c.clone();
                for i in 0..3 {
                    term = term.mul(&pw(&p[i], e[i], i == k));
                }
                *gk = gk.add(&term);
            }
        }
        g
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        Field::is_zero(&self.homogenized_eval(p.coords()))
    }
}

/// One Galois orbit of points at infinity: the points cut out by an
/// irreducible factor of the leading form.
#[derive(Clone, Debug, PartialEq)]
pub struct InfinityPointClass {
    /// Irreducible binary form in `(x, y)`.
    pub factor: BiPoly,
    pub class_size: usize,
    /// Multiplicity of the factor in the leading form.
    pub multiplicity: usize,
    pub rational_point: Option<ProjPoint>,
}

impl InfinityPointClass {
    /// Whether the points of the class are nonsingular points of the closure.
    ///
    /// At `x0 = 0` the partials of `F` in `x1, x2` are those of the leading
    /// form and the partial in `x0` is the degree `d - 1` part, so a point
    /// is singular exactly when it is a repeated root of the leading form
    /// at which that part also vanishes.
    pub fn is_regular(&self, c: &AffinePlaneCurve) -> bool {
        if self.multiplicity == 1 {
            return true;
        }
        let sub = c.f().homogeneous_part(c.degree() - 1);
        if self.rational_point.as_ref().is_some_and(|p| p.coords()[2].is_zero()) {
            return !sub.coeff(c.degree() - 1, 0).is_zero();
        }
        let p = self.factor.eval_y(&rat(1));
        !p.divides(&sub.eval_y(&rat(1)))
    }
}

/// The points of the closure on the line at infinity, grouped into classes
/// over Q. The total count of geometric points is the sum of class sizes.
pub fn points_at_infinity(c: &AffinePlaneCurve) -> Result<Vec<InfinityPointClass>> {
    let lf = c.leading_form();
    let d = c.degree() as usize;
    let ell = lf.eval_y(&rat(1));
    let mut out = Vec::new();
    if ell.deg() < d {
        out.push(InfinityPointClass {
            factor: BiPoly::y(),
            class_size: 1,
            multiplicity: d - ell.deg(),
            rational_point: Some(ProjPoint::at_infinity(rat(1), rat(0))),
        });
    }
    if ell.deg() > 0 {
        for (p, multiplicity) in factor_rational(&ell)? {
            let k = p.deg() as u32;
            let form = BiPoly::from_terms(
                p.coeffs().iter().enumerate().map(|(i, a)| ((i as u32, k - i as u32), a.clone())),
            );
            let rational_point = (k == 1).then(|| ProjPoint::at_infinity(p.coeff(0).neg(), rat(1)));
            out.push(InfinityPointClass { factor: form, class_size: k as usize, multiplicity, rational_point });
        }
    }
    out.sort_by(|a, b| a.class_size.cmp(&b.class_size).then_with(|| format_poly(&a.factor).cmp(&format_poly(&b.factor))));
    Ok(out)
}

/// Number of distinct points at infinity over the algebraic closure.
pub fn count_points_at_infinity(c: &AffinePlaneCurve) -> Result<usize> {
    Ok(points_at_infinity(c)?.iter().map(|k| k.class_size).sum())
}

/// Whether every point of the closure on the line at infinity is
/// nonsingular, including points with irrational coordinates.
pub fn is_regular_at_infinity(c: &AffinePlaneCurve) -> Result<bool> {
    Ok(points_at_infinity(c)?.iter().all(|k| k.is_regular(c)))
}

/// Which affine chart of the plane a [`LocalChart`] lives in.
#[derive(Clone, Debug, PartialEq)]
pub enum ChartKind {
    /// `x2 = 1`, `u = x0`, `v = x1 - r`.
    X2 { r: Rat },
    /// `x1 = 1`, `u = x0`, `v = x2`.
    X1,
}

/// Local coordinates `(u, v)` centered at a rational point at infinity.
///
/// In a [`BiPoly`] describing chart data the first variable is `u` and the
/// second is `v`. The chart is composed with the shear `u -> u + shear * v`.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalChart {
    pub point: ProjPoint,
    pub kind: ChartKind,
    pub shear: i64,
    /// Local equation of the curve.
    pub g: BiPoly,
}

/// `(v + r)^a` as a polynomial in `(u, v)`.
fn shifted_power(r: &Rat, a: u32) -> BiPoly {
    BiPoly::y().add(&BiPoly::constant(r.clone())).pow(a as u64)
}

impl LocalChart {
    /// `H(x0, x1, x2)` in chart coordinates for a form of degree `deg`
    /// given by its affine dehomogenization `h(x, y)`.
    fn chart_form(&self, h: &BiPoly, deg: u32) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(a, b), c) in h.terms() {
            let k = deg - a - b;
            let term = match &self.kind {
                ChartKind::X2 { r } => shifted_power(r, a).mul(&BiPoly::monomial(c.clone(), k, 0)),
                ChartKind::X1 => BiPoly::monomial(c.clone(), k, b),
            };
            out = out.add(&term);
        }
        self.apply_shear(&out)
    }

    fn apply_shear(&self, p: &BiPoly) -> BiPoly {
        if self.shear == 0 {
            return p.clone();
        }
        let u = BiPoly::x().add(&BiPoly::y().scale(&rat(self.shear)));
        let mut out = BiPoly::zero();
        for (&(a, b), c) in p.terms() {
            out = out.add(&u.pow(a as u64).mul(&BiPoly::monomial(c.clone(), 0, b)));
        }
        out
    }

    /// The coordinate `x0` in chart coordinates.
    pub fn x0(&self) -> BiPoly {
        self.apply_shear(&BiPoly::x())
    }

    /// Write a polynomial function `h` on the affine plane as
    /// `numerator(u, v) / x0(u, v)^deg h`; returns `(numerator, deg h)`.
    pub fn transport(&self, h: &BiPoly) -> (BiPoly, u32) {
        let deg = h.total_degree();
        (self.chart_form(h, deg), deg)
    }
}

/// Local chart centered at a rational point at infinity of the curve.
pub fn chart_at(c: &AffinePlaneCurve, p: &ProjPoint) -> Result<LocalChart> {
    if !p.is_at_infinity() || !c.contains(p) {
        return Err(Error::NotOnCurve(p.to_string()));
    }
    let [_, x1, x2] = p.coords();
    let kind = if Field::is_zero(x2) { ChartKind::X1 } else { ChartKind::X2 { r: x1.clone() } };
    let mut shear: i64 = 0;
    loop {
        let mut chart = LocalChart { point: p.clone(), kind: kind.clone(), shear, g: BiPoly::zero() };
        chart.g = chart.chart_form(c.f(), c.degree());
        debug_assert!(Field::is_zero(&chart.g.constant_term()));
        if !chart.g.eval_x(&rat(0)).is_zero() {
            return Ok(chart);
        }
        shear = if shear <= 0 { 1 - shear } else { -shear };
    }
}

/// Whether the closure is nonsingular at a rational point at infinity.
pub fn is_regular_at(c: &AffinePlaneCurve, p: &ProjPoint) -> Result<bool> {
    if !p.is_at_infinity() || !c.contains(p) {
        return Err(Error::NotOnCurve(p.to_string()));
    }
    Ok(c.homogenized_gradient(p.coords()).iter().any(|g| !Field::is_zero(g)))
}

/// Whether the affine curve has no singular points over the algebraic
/// closure.
pub fn is_affine_smooth(c: &AffinePlaneCurve) -> Result<bool> {
    let f = c.f();
    if f.deg_x() == 0 || f.deg_y() == 0 {
        // validated curves of this shape are single lines
        return Ok(true);
    }
    let (fx, fy) = (f.partial_x(), f.partial_y());
    let r1 = resultant_y(f, &fx)?;
    let r2 = resultant_y(f, &fy)?;
    let g = gcd_uni(&r1, &r2);
    if g.is_zero() {
        return Err(Error::NotIrreducible("f shares a factor with its partial derivatives".into()));
    }
    if g.deg() == 0 {
        return Ok(true);
    }
    let lift = |p: &BiPoly| p.map(|a| TowerElem::from_rat(a.clone()));
    let (ft, fxt, fyt) = (lift(f), lift(&fx), lift(&fy));
    for (m, _) in factor_rational(&g)? {
        let alpha = if m.deg() == 1 {
            TowerElem::from_rat(m.coeff(0).neg())
        } else {
            let t = Tower::rational().extend(&m.map(|a| TowerElem::from_rat(a.clone())));
            t.generator().expect("extension has a generator")
        };
        let a = ft.eval_x(&alpha);
        if a.is_zero() {
            return Err(Error::NotIrreducible("the curve contains a vertical line".into()));
        }
        let common = gcd_uni(&a, &gcd_uni(&fxt.eval_x(&alpha), &fyt.eval_x(&alpha)));
        if common.deg() > 0 {
            return Ok(false);
        }
    }
    Ok(true)
}
