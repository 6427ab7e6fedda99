//! Truncated power series `sum c_k t^k + O(t^prec)`.

use crate::exactalg::{BiPoly, Field, UniPoly};

#[derive(Clone, Debug, PartialEq)]
pub struct Series<F: Field> {
    coeffs: Vec<F>,
    prec: usize,
}

impl<F: Field> Series<F> {
    pub fn new(mut coeffs: Vec<F>, prec: usize) -> Self {
        coeffs.truncate(prec);
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Series { coeffs, prec }
    }

    pub fn zero(prec: usize) -> Self {
        Series { coeffs: Vec::new(), prec }
    }

    pub fn from_poly(p: &UniPoly<F>, prec: usize) -> Self {
        Series::new(p.coeffs().to_vec(), prec)
    }

    /// `c t^k`, known to precision `prec`.
    pub fn monomial(c: F, k: usize, prec: usize) -> Self {
        let mut v = vec![F::zero(); k + 1];
        v[k] = c;
        Series::new(v, prec)
    }

    pub fn prec(&self) -> usize {
        self.prec
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    /// Order of the series, if it is determined at this precision.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, prec: usize) -> Self {
        Series::new(self.coeffs.clone(), prec.min(self.prec))
    }

    pub fn add(&self, other: &Self) -> Self {
        let prec = self.prec.min(other.prec);
        let n = self.coeffs.len().max(other.coeffs.len()).min(prec);
        Series::new((0..n).map(|k| self.coeff(k).add(&other.coeff(k))).collect(), prec)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Series { coeffs: self.coeffs.iter().map(Field::neg).collect(), prec: self.prec }
    }

    pub fn scale(&self, c: &F) -> Self {
        Series::new(self.coeffs.iter().map(|a| a.mul(c)).collect(), self.prec)
    }

    /// Product; the precision accounts for the orders of both factors.
    pub fn mul(&self, other: &Self) -> Self {
        let oa = self.order().unwrap_or(self.prec);
        let ob = other.order().unwrap_or(other.prec);
        let prec = (self.prec + ob).min(other.prec + oa);
        let n = (self.coeffs.len() + other.coeffs.len()).saturating_sub(1).min(prec);
        let mut out = vec![F::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() || i >= n {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= n {
                    break;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Series::new(out, prec)
    }

    /// Inverse of a unit (nonzero constant term).
    pub fn inv(&self) -> Self {
        let c0 = self.coeff(0);
        assert!(!c0.is_zero(), "series is not a unit");
        let inv0 = c0.inv();
        let n = self.prec;
        let mut out: Vec<F> = Vec::with_capacity(n);
        out.push(inv0.clone());
        for k in 1..n {
            let mut acc = F::zero();
            for j in 1..=k.min(self.coeffs.len().saturating_sub(1)) {
                acc = acc.add(&self.coeffs[j].mul(&out[k - j]));
            }
            out.push(acc.mul(&inv0).neg());
        }
        Series::new(out, n)
    }

    /// `t^k * self`.
    pub fn shift(&self, k: usize) -> Self {
        let mut v = vec![F::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Series::new(v, self.prec + k)
    }

    /// `self / t^k`, when the first `k` coefficients vanish.
    pub fn unshift(&self, k: usize) -> Self {
        assert!(self.order().is_none_or(|o| o >= k), "division by t^k of a series of lower order");
        let v = self.coeffs.iter().skip(k).cloned().collect();
        Series::new(v, self.prec.saturating_sub(k))
    }
}

/// `p(x(t), y(t))` for a polynomial `p` with coefficients in `F`.
pub fn eval_bipoly<F: Field>(p: &BiPoly<F>, x: &Series<F>, y: &Series<F>) -> Series<F> {
    let prec = x.prec().min(y.prec()).max(1);
    let cs = p.coeffs_in_y();
    let eval_x = |u: &UniPoly<F>| -> Series<F> {
        let mut acc = Series::zero(prec);
        for c in u.coeffs().iter().rev() {
            acc = acc.mul(x).add(&Series::new(vec![c.clone()], prec));
        }
        acc
    };
    let mut acc = Series::zero(prec);
    for c in cs.iter().rev() {
        acc = acc.mul(y).add(&eval_x(c));
    }
    acc
}

/// Power series root `w(s)` with `w(0) = 0` of `g(s, w) = 0`, where
/// `g(0, 0) = 0` and `dg/dw (0, 0) != 0`, to precision `prec`.
pub fn solve_simple_root<F: Field>(g: &BiPoly<F>, prec: usize) -> Series<F> {
    let gw = g.partial_y();
    let s = |p: usize| Series::monomial(F::one(), 1, p);
    let mut w = Series::zero(1.min(prec));
    let mut cur = 1;
    while cur < prec {
        let next = (2 * cur).min(prec);
        let w_ext = Series::new((0..cur).map(|k| w.coeff(k)).collect(), next);
        let r = eval_bipoly(g, &s(next), &w_ext);
        let d = eval_bipoly(&gw, &s(next), &w_ext);
        w = w_ext.sub(&r.mul(&d.inv())).truncate(next);
        w = Series::new((0..next).map(|k| w.coeff(k)).collect(), next);
        cur = next;
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, Rat};

    fn ser(cs: &[i64], prec: usize) -> Series<Rat> {
        Series::new(cs.iter().map(|&c| rat(c)).collect(), prec)
    }

    #[test]
    fn products_and_precision() {
        let a = ser(&[0, 1], 5);
        let b = ser(&[1, 1], 4);
        let p = a.mul(&b);
        assert_eq!(p.prec(), 5);
        assert_eq!(p, ser(&[0, 1, 1], 5));
    }

    #[test]
    fn geometric_inverse() {
        let inv = ser(&[1, -1], 6).inv();
        assert_eq!(inv, ser(&[1, 1, 1, 1, 1, 1], 6));
    }

    #[test]
    fn newton_solves_implicit_equation() {
        // w - s - w^2 = 0: w = Catalan series s + s^2 + 2 s^3 + 5 s^4 + 14 s^5
        let g = BiPoly::from_terms([((0, 1), rat(1)), ((1, 0), rat(-1)), ((0, 2), rat(-1))]);
        let w = solve_simple_root(&g, 6);
        assert_eq!(w, ser(&[0, 1, 1, 2, 5, 14], 6));
        let s = Series::monomial(rat(1), 1, 6);
        assert_eq!(eval_bipoly(&g, &s, &w).order(), None);
    }
}
