use std::collections::BTreeMap;

use super::field::{Field, Rat};
use super::unipoly::{interpolate, resultant, UniPoly};
use crate::error::{Error, Result};

/// Sparse bivariate polynomial: exponent pair `(a, b)` of `x^a y^b` mapped to
/// a nonzero coefficient.
#[derive(Clone, PartialEq, Debug)]
pub struct BiPoly<F: Field = Rat> {
    terms: BTreeMap<(u32, u32), F>,
}

impl<F: Field> Default for BiPoly<F> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<F: Field> BiPoly<F> {
    pub fn zero() -> Self {
        BiPoly { terms: BTreeMap::new() }
    }

    pub fn constant(c: F) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn x() -> Self {
        Self::monomial(F::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(F::one(), 0, 1)
    }

    pub fn monomial(c: F, a: u32, b: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((a, b), c);
        }
        BiPoly { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = ((u32, u32), F)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in it {
            p.add_term(e, &c);
        }
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &F)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, a: u32, b: u32) -> F {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(F::zero)
    }

    pub fn add_term(&mut self, e: (u32, u32), c: &F) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.get(&e) {
            Some(old) => old.add(c),
            None => c.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&e);
        } else {
            self.terms.insert(e, sum);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&(a, b)| a == 0 && b == 0)
    }

    pub fn constant_term(&self) -> F {
        self.coeff(0, 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|&(a, b)| a + b).max().unwrap_or(0)
    }

    pub fn deg_x(&self) -> u32 {
        self.terms.keys().map(|&(a, _)| a).max().unwrap_or(0)
    }

    pub fn deg_y(&self) -> u32 {
        self.terms.keys().map(|&(_, b)| b).max().unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        BiPoly { terms: self.terms.iter().map(|(e, c)| (*e, c.neg())).collect() }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        BiPoly { terms: self.terms.iter().map(|(e, v)| (*e, v.mul(c))).collect() }
    }

    /// Product, or `None` if an exponent would overflow `u32`.
    pub fn checked_mul(&self, other: &Self) -> Option<Self> {
        let mut out = Self::zero();
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &other.terms {
                let e = (a1.checked_add(*a2)?, b1.checked_add(*b2)?);
                out.add_term(e, &c1.mul(c2));
            }
        }
        Some(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("exponent overflow")
    }

    pub fn checked_pow(&self, mut e: u64) -> Option<Self> {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Some(acc)
    }

    pub fn pow(&self, e: u64) -> Self {
        self.checked_pow(e).expect("exponent overflow")
    }

    pub fn partial_x(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|((a, _), _)| *a > 0)
                .map(|(&(a, b), c)| ((a - 1, b), c.mul(&F::from_i64(a as i64)))),
        )
    }

    pub fn partial_y(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|((_, b), _)| *b > 0)
                .map(|(&(a, b), c)| ((a, b - 1), c.mul(&F::from_i64(b as i64)))),
        )
    }

    /// Exchange the roles of x and y.
    pub fn swap(&self) -> Self {
        BiPoly { terms: self.terms.iter().map(|(&(a, b), c)| ((b, a), c.clone())).collect() }
    }

    /// Homogeneous component of total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        BiPoly {
            terms: self
                .terms
                .iter()
                .filter(|((a, b), _)| a + b == d)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    pub fn eval(&self, x: &F, y: &F) -> F {
        self.terms.iter().fold(F::zero(), |acc, (&(a, b), c)| {
            acc.add(&c.mul(&x.pow(a as u64)).mul(&y.pow(b as u64)))
        })
    }

    /// Substitute `x = c`, leaving a polynomial in y.
    pub fn eval_x(&self, c: &F) -> UniPoly<F> {
        let mut out = vec![F::zero(); self.deg_y() as usize + 1];
        for (&(a, b), v) in &self.terms {
            out[b as usize] = out[b as usize].add(&v.mul(&c.pow(a as u64)));
        }
        UniPoly::new(out)
    }

    /// Substitute `y = c`, leaving a polynomial in x.
    pub fn eval_y(&self, c: &F) -> UniPoly<F> {
        self.swap().eval_x(c)
    }

    /// Coefficients as a polynomial in y over F[x]: entry `b` is the
    /// coefficient of `y^b`.
    pub fn coeffs_in_y(&self) -> Vec<UniPoly<F>> {
        let mut out = vec![Vec::new(); self.deg_y() as usize + 1];
        for (&(a, b), c) in &self.terms {
            let v = &mut out[b as usize];
            if v.len() <= a as usize {
                v.resize(a as usize + 1, F::zero());
            }
            v[a as usize] = c.clone();
        }
        out.into_iter().map(UniPoly::new).collect()
    }

    /// Rebuild from coefficients in y over F[x].
    pub fn from_coeffs_in_y(cs: &[UniPoly<F>]) -> Self {
        let mut p = Self::zero();
        for (b, u) in cs.iter().enumerate() {
            for (a, c) in u.coeffs().iter().enumerate() {
                p.add_term((a as u32, b as u32), c);
            }
        }
        p
    }

    /// Leading coefficient with respect to y, a polynomial in x.
    pub fn lc_y(&self) -> UniPoly<F> {
        self.coeffs_in_y().pop().unwrap_or_else(UniPoly::zero)
    }

    /// `self(x, y)` as a univariate polynomial when it has degree 0 in y.
    pub fn as_poly_in_x(&self) -> Option<UniPoly<F>> {
        self.swap().as_poly_in_y()
    }

    fn coeffs_in_y_first(&self) -> UniPoly<F> {
        let mut out = vec![F::zero(); self.deg_y() as usize + 1];
        for (&(_, b), c) in &self.terms {
            out[b as usize] = c.clone();
        }
        UniPoly::new(out)
    }

    /// Univariate view when the polynomial involves y only.
    pub fn as_poly_in_y(&self) -> Option<UniPoly<F>> {
        (self.deg_x() == 0).then(|| self.coeffs_in_y_first())
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> BiPoly<G> {
        BiPoly::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))))
    }

    /// Lex leading exponent (largest x power, then largest y power).
    fn lex_leading(&self) -> Option<((u32, u32), F)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c.clone()))
    }

    /// Exact divisibility test `self | other` by multivariate division with
    /// respect to lex order; a single polynomial is a Gröbner basis of the
    /// ideal it generates, so the remainder is zero iff it divides.
    pub fn divides(&self, other: &Self) -> bool {
        let Some((lead, lc)) = self.lex_leading() else {
            return other.is_zero();
        };
        let inv = lc.inv();
        let mut rem = other.clone();
        let mut stuck = Self::zero();
        while let Some((e, c)) = rem.lex_leading() {
            if e.0 >= lead.0 && e.1 >= lead.1 {
                let q = Self::monomial(c.mul(&inv), e.0 - lead.0, e.1 - lead.1);
                rem = rem.sub(&q.mul(self));
            } else {
                stuck.add_term(e, &c);
                rem.terms.remove(&e);
            }
        }
        stuck.is_zero()
    }
}

/// `Res_y(p, q)` as a polynomial in x.
///
/// Computed by evaluation at integer points where neither leading
/// y-coefficient vanishes, followed by interpolation; the degree bound is
/// `deg_x p * deg_y q + deg_x q * deg_y p`.
pub fn resultant_y<F: Field>(p: &BiPoly<F>, q: &BiPoly<F>) -> Result<UniPoly<F>> {
    let (dp, dq) = (p.deg_y(), q.deg_y());
    if p.is_zero() || q.is_zero() {
        return Ok(UniPoly::zero());
    }
    if dp == 0 && dq == 0 {
        return Err(Error::ConstantInEliminatedVariable);
    }
    let bound = (p.deg_x() * dq + q.deg_x() * dp) as usize;
    let (lp, lq) = (p.lc_y(), q.lc_y());
    let mut xs = Vec::with_capacity(bound + 1);
    let mut ys = Vec::with_capacity(bound + 1);
    let mut k: i64 = 0;
    while xs.len() <= bound {
        let c = F::from_i64(k);
        k = if k <= 0 { 1 - k } else { -k };
        if lp.eval(&c).is_zero() || lq.eval(&c).is_zero() {
            continue;
        }
        ys.push(resultant(&p.eval_x(&c), &q.eval_x(&c)));
        xs.push(c);
    }
    Ok(interpolate(&xs, &ys))
}

/// `Res_x(p, q)` as a polynomial in y.
pub fn resultant_x<F: Field>(p: &BiPoly<F>, q: &BiPoly<F>) -> Result<UniPoly<F>> {
    resultant_y(&p.swap(), &q.swap())
}
