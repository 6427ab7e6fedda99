use std::cmp::Ordering;
use std::fmt;

use super::field::{Field, Rat};
use crate::error::{Error, Result};

/// Dense univariate polynomial, lowest degree first.
///
/// The zero polynomial has no coefficients; otherwise the last coefficient is
/// nonzero.
#[derive(Clone, PartialEq, Debug)]
pub struct UniPoly<F: Field = Rat> {
    coeffs: Vec<F>,
}

impl<F: Field> UniPoly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(F::one(), 1)
    }

    pub fn monomial(c: F, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![F::zero(); k + 1];
        coeffs[k] = c;
        UniPoly { coeffs }
    }

    /// `x - r`
    pub fn linear_root(r: &F) -> Self {
        Self::new(vec![r.neg(), F::one()])
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| F::from_i64(c)).collect())
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lc(&self) -> Option<&F> {
        self.coeffs.last()
    }

    /// Order of vanishing at 0 (`None` for the zero polynomial).
    pub fn low_order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i).add(&other.coeff(i))).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i).sub(&other.coeff(i))).collect())
    }

    pub fn neg(&self) -> Self {
        UniPoly { coeffs: self.coeffs.iter().map(F::neg).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UniPoly { coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect() }
    }

    /// Multiply by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![F::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Euclidean division. Panics when dividing by zero.
    pub fn divrem(&self, divisor: &Self) -> (Self, Self) {
        let dl = divisor.lc().expect("division by the zero polynomial");
        let dd = divisor.deg();
        if self.coeffs.len() < divisor.coeffs.len() {
            return (Self::zero(), self.clone());
        }
        let inv = dl.inv();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![F::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].mul(&inv);
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].sub(&c.mul(d));
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.divrem(divisor).1
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Self {
        let (q, r) = self.divrem(divisor);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).is_zero()
    }

    pub fn monic(&self) -> Self {
        match self.lc() {
            None => Self::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => self.scale(&l.inv()),
        }
    }

    pub fn is_monic(&self) -> bool {
        self.lc().is_some_and(|l| l.is_one())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.mul(&F::from_i64(i as i64)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Evaluate at a polynomial argument (composition `self(q)`).
    pub fn compose(&self, q: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(q).add(&Self::constant(c.clone()));
        }
        acc
    }

    /// `self(x + c)`
    pub fn taylor_shift(&self, c: &F) -> Self {
        self.compose(&Self::new(vec![c.clone(), F::one()]))
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> UniPoly<G> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }

    /// Lexicographic comparison of coefficient vectors after degree.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.coeffs.len().cmp(&other.coeffs.len()).then_with(|| {
            for (a, b) in self.coeffs.iter().zip(&other.coeffs) {
                let o = a.canonical_cmp(b);
                if o != Ordering::Equal {
                    return o;
                }
            }
            Ordering::Equal
        })
    }

    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = c.to_string();
            let cs = if cs.contains([' ', '+']) || (cs[1..].contains('-')) {
                format!("({cs})")
            } else {
                cs
            };
            let term = match i {
                0 => cs,
                _ => {
                    let m = if i == 1 { var.to_string() } else { format!("{var}^{i}") };
                    if c.is_one() {
                        m
                    } else if *c == F::one().neg() {
                        format!("-{m}")
                    } else {
                        format!("{cs}*{m}")
                    }
                }
            };
            parts.push(term);
        }
        let mut out = parts[0].clone();
        for p in &parts[1..] {
            match p.strip_prefix('-') {
                Some(rest) => {
                    out.push_str(" - ");
                    out.push_str(rest);
                }
                None => {
                    out.push_str(" + ");
                    out.push_str(p);
                }
            }
        }
        out
    }
}

impl<F: Field> fmt::Display for UniPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("x"))
    }
}

/// Monic greatest common divisor. `gcd(0, 0) = 0`.
pub fn gcd_uni<F: Field>(p: &UniPoly<F>, q: &UniPoly<F>) -> UniPoly<F> {
    let (mut a, mut b) = (p.clone(), q.clone());
    while !b.is_zero() {
        let r = a.rem(&b);
        a = b;
        b = r;
    }
    a.monic()
}

/// Extended Euclid: returns `(g, s, t)` with `s*p + t*q = g`, `g` monic.
pub fn ext_gcd<F: Field>(p: &UniPoly<F>, q: &UniPoly<F>) -> (UniPoly<F>, UniPoly<F>, UniPoly<F>) {
    let (mut r0, mut r1) = (p.clone(), q.clone());
    let (mut s0, mut s1) = (UniPoly::one(), UniPoly::zero());
    let (mut t0, mut t1) = (UniPoly::zero(), UniPoly::one());
    while !r1.is_zero() {
        let (quot, rem) = r0.divrem(&r1);
        let s2 = s0.sub(&quot.mul(&s1));
        let t2 = t0.sub(&quot.mul(&t1));
        r0 = std::mem::replace(&mut r1, rem);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    match r0.lc().cloned() {
        None => (r0, s0, t0),
        Some(l) => {
            let inv = l.inv();
            (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
        }
    }
}

/// Monic product of the distinct irreducible factors of `p`.
pub fn squarefree_part<F: Field>(p: &UniPoly<F>) -> Result<UniPoly<F>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = gcd_uni(p, &p.derivative());
    Ok(p.div_exact(&g).monic())
}

/// Yun's squarefree decomposition: monic, pairwise coprime, squarefree
/// `(a_i, i)` with `p = lc(p) * prod a_i^i`. Constant parts are omitted.
pub fn squarefree_decomposition<F: Field>(p: &UniPoly<F>) -> Result<Vec<(UniPoly<F>, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = Vec::new();
    let dp = p.derivative();
    let a0 = gcd_uni(p, &dp);
    let mut b = p.div_exact(&a0);
    let mut c = dp.div_exact(&a0);
    let mut d = c.sub(&b.derivative());
    let mut i = 1;
    while !b.is_constant() {
        let a = gcd_uni(&b, &d);
        b = b.div_exact(&a);
        c = d.div_exact(&a);
        d = c.sub(&b.derivative());
        if !a.is_constant() {
            out.push((a.monic(), i));
        }
        i += 1;
    }
    Ok(out)
}

/// Resultant `lc(p)^deg(q) * prod_{p(a)=0} q(a)`; zero if either input is zero.
pub fn resultant<F: Field>(p: &UniPoly<F>, q: &UniPoly<F>) -> F {
    if p.is_zero() || q.is_zero() {
        return F::zero();
    }
    let (mut a, mut b) = (p.clone(), q.clone());
    let mut acc = F::one();
    loop {
        let (da, db) = (a.deg(), b.deg());
        if db == 0 {
            return acc.mul(&b.coeff(0).pow(da as u64));
        }
        if da == 0 {
            return acc.mul(&a.coeff(0).pow(db as u64));
        }
        // Res(a, b) = (-1)^{da db} lc(b)^{da - dr} Res(b, r) with r = a mod b
        let r = a.rem(&b);
        if r.is_zero() {
            return F::zero();
        }
        let dr = r.deg();
        if (da * db) % 2 == 1 {
            acc = acc.neg();
        }
        acc = acc.mul(&b.lc().unwrap().pow((da - dr) as u64));
        a = b;
        b = r;
    }
}

/// Newton interpolation through `(xs[i], ys[i])`.
pub fn interpolate<F: Field>(xs: &[F], ys: &[F]) -> UniPoly<F> {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len();
    let mut dd: Vec<F> = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = dd[i].sub(&dd[i - 1]);
            let den = xs[i].sub(&xs[i - level]);
            dd[i] = num.div(&den);
        }
    }
    let mut acc = UniPoly::zero();
    for i in (0..n).rev() {
        acc = acc.mul(&UniPoly::linear_root(&xs[i])).add(&UniPoly::constant(dd[i].clone()));
    }
    acc
}
