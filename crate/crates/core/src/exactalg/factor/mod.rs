//! Univariate factorization over Q and over towers of depth at most two.
//!
//! Over Q: squarefree decomposition, then modular factorization with Hensel
//! lifting and factor recombination. Over an extension `K = k(a)`: Trager's
//! norm method, reducing to factorization over `k`.

pub mod modp;
pub mod zassenhaus;

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::field::{Field, Rat};
use super::tower::{Tower, TowerElem};
use super::unipoly::{gcd_uni, interpolate, resultant, squarefree_decomposition, UniPoly};
use crate::error::{Error, Result};

/// Deepest tower over which factorization is supported.
pub const MAX_FACTOR_DEPTH: usize = 2;

pub type Factorization<F> = Vec<(UniPoly<F>, usize)>;

fn sort_factors<F: Field>(fs: &mut Factorization<F>) {
    fs.sort_by(|(a, m), (b, n)| {
        a.deg()
            .cmp(&b.deg())
            .then_with(|| a.canonical_cmp(b))
            .then(m.cmp(n))
    });
}

/// Integer primitive polynomial proportional to `p`.
fn to_integer_primitive(p: &UniPoly<Rat>) -> Vec<BigInt> {
    let den = p.coeffs().iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let ints: Vec<BigInt> = p.coeffs().iter().map(|c| (c * Rat::from_integer(den.clone())).to_integer()).collect();
    zassenhaus::primitive(&ints)
}

fn from_integer(p: &[BigInt]) -> UniPoly<Rat> {
    UniPoly::new(p.iter().map(|c| Rat::from_integer(c.clone())).collect()).monic()
}

/// Complete factorization over Q into monic irreducibles with multiplicities,
/// ordered by (degree, coefficients). A constant input has no factors.
pub fn factor_rational(p: &UniPoly<Rat>) -> Result<Factorization<Rat>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = Vec::new();
    for (part, mult) in squarefree_decomposition(p)? {
        // pull out the factor x separately; it keeps constant terms nonzero
        let mut part = part;
        if Field::is_zero(&part.coeff(0)) {
            out.push((UniPoly::x(), mult));
            part = part.div_exact(&UniPoly::x());
            if part.is_constant() {
                continue;
            }
        }
        let ints = to_integer_primitive(&part);
        for g in zassenhaus::factor_squarefree(&ints) {
            out.push((from_integer(&g), mult));
        }
    }
    sort_factors(&mut out);
    Ok(out)
}

/// Complete factorization over the top field of `tower` into monic
/// irreducibles with multiplicities.
pub fn factor_uni(p: &UniPoly<TowerElem>, tower: &Tower) -> Result<Factorization<TowerElem>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let depth = tower.depth();
    if depth > MAX_FACTOR_DEPTH {
        return Err(Error::DepthExceeded { depth, max: MAX_FACTOR_DEPTH });
    }
    if depth == 0 {
        let q = p.map(|c| c.as_rat().expect("coefficient outside Q for a rational tower"));
        return Ok(factor_rational(&q)?
            .into_iter()
            .map(|(f, m)| (f.map(|c| TowerElem::from_rat(c.clone())), m))
            .collect());
    }
    let mut out = Vec::new();
    for (part, mult) in squarefree_decomposition(p)? {
        for f in trager(&part, tower)? {
            out.push((f, mult));
        }
    }
    sort_factors(&mut out);
    Ok(out)
}

/// `N(x) = Res_z(m(z), g(x, z))`: the norm of `g` from the top field of
/// `tower` down to its parent.
pub fn norm(g: &UniPoly<TowerElem>, tower: &Tower) -> UniPoly<TowerElem> {
    let m = tower.modulus().expect("norm over Q");
    let lifted: Vec<UniPoly<TowerElem>> = g.coeffs().iter().map(|c| tower.lift_to_poly(c)).collect();
    let n = g.deg() * m.deg();
    let mut xs = Vec::with_capacity(n + 1);
    let mut ys = Vec::with_capacity(n + 1);
    for j in 0..=n as i64 {
        let x = TowerElem::from_i64(j);
        let mut at = UniPoly::zero();
        let mut xp = TowerElem::one();
        for c in &lifted {
            at = at.add(&c.scale(&xp));
            xp = xp.mul(&x);
        }
        ys.push(resultant(&m, &at));
        xs.push(x);
    }
    interpolate(&xs, &ys)
}

/// Irreducible factors of a monic squarefree polynomial over an extension.
fn trager(f: &UniPoly<TowerElem>, tower: &Tower) -> Result<Vec<UniPoly<TowerElem>>> {
    let f = f.monic();
    if f.deg() <= 1 {
        return Ok(vec![f]);
    }
    let alpha = tower.generator().expect("trager over Q");
    let base = tower.parent();
    let mut s: i64 = 0;
    loop {
        let shift = alpha.mul(&TowerElem::from_i64(s));
        let g = f.taylor_shift(&shift.neg());
        let n = norm(&g, tower);
        if gcd_uni(&n, &n.derivative()).deg() == 0 {
            let factors = factor_uni(&n, &base)?;
            if factors.len() == 1 {
                return Ok(vec![f]);
            }
            let mut out: Vec<UniPoly<TowerElem>> = factors
                .iter()
                .map(|(ni, _)| gcd_uni(&f, &ni.taylor_shift(&shift)))
                .filter(|h| h.deg() > 0)
                .collect();
            out.sort_by(|a, b| a.deg().cmp(&b.deg()).then_with(|| a.canonical_cmp(b)));
            return Ok(out);
        }
        s = if s <= 0 { 1 - s } else { -s };
    }
}

/// Irreducibility over the top field of `tower`.
pub fn is_irreducible(p: &UniPoly<TowerElem>, tower: &Tower) -> Result<bool> {
    let fs = factor_uni(p, tower)?;
    Ok(fs.len() == 1 && fs[0].1 == 1)
}

/// Order used for deterministic output of roots/factors.
pub fn cmp_factor<F: Field>(a: &UniPoly<F>, b: &UniPoly<F>) -> Ordering {
    a.deg().cmp(&b.deg()).then_with(|| a.canonical_cmp(b))
}
