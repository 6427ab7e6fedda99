//! Towers of simple algebraic extensions of Q.
//!
//! A tower is a chain `Q ⊂ Q(a1) ⊂ Q(a1)(a2) ⊂ ...` where each generator is a
//! root of a monic irreducible modulus over the level below. Elements are
//! kept canonical: an element whose representative is constant at its level
//! is stored at the level below, so every value has exactly one shape and
//! structural equality is field equality.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use super::field::{format_rat, Field, Rat};
use super::unipoly::{ext_gcd, UniPoly};

pub struct Level {
    parent: Option<Arc<Level>>,
    /// Monic modulus, coefficients in the parent level, lowest degree first.
    modulus: Vec<TowerElem>,
    depth: usize,
}

impl Level {
    fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    fn is_ancestor_of(self: &Arc<Self>, other: &Arc<Level>) -> bool {
        let mut cur = Some(other.clone());
        while let Some(l) = cur {
            if l.depth < self.depth {
                return false;
            }
            if Arc::ptr_eq(&l, self) {
                return true;
            }
            cur = l.parent.clone();
        }
        false
    }
}

impl fmt::Debug for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Level(a{}: {})", self.depth, UniPoly::new(self.modulus.clone()).display_with(&format!("a{}", self.depth)))
    }
}

/// Element of a tower of number fields.
#[derive(Clone, Debug)]
pub enum TowerElem {
    Rat(Rat),
    /// Representative polynomial in the level's generator, coefficients one
    /// level down; at least two coefficients, the last nonzero.
    Alg { level: Arc<Level>, coeffs: Vec<TowerElem> },
}

impl PartialEq for TowerElem {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (TowerElem::Rat(a), TowerElem::Rat(b)) => a == b,
            (TowerElem::Alg { level: l1, coeffs: c1 }, TowerElem::Alg { level: l2, coeffs: c2 }) => {
                Arc::ptr_eq(l1, l2) && c1 == c2
            }
            _ => false,
        }
    }
}

impl TowerElem {
    fn level(&self) -> Option<&Arc<Level>> {
        match self {
            TowerElem::Rat(_) => None,
            TowerElem::Alg { level, .. } => Some(level),
        }
    }

    pub fn depth(&self) -> usize {
        self.level().map_or(0, |l| l.depth)
    }

    fn canonical(level: &Arc<Level>, mut coeffs: Vec<TowerElem>) -> TowerElem {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        match coeffs.len() {
            0 => TowerElem::Rat(Rat::from_integer(0.into())),
            1 => coeffs.pop().unwrap(),
            _ => TowerElem::Alg { level: level.clone(), coeffs },
        }
    }

    /// The deeper of the two levels; panics if the elements live in unrelated
    /// towers.
    fn common_level(a: &TowerElem, b: &TowerElem) -> Option<Arc<Level>> {
        match (a.level(), b.level()) {
            (None, None) => None,
            (Some(l), None) | (None, Some(l)) => Some(l.clone()),
            (Some(la), Some(lb)) => {
                if la.depth >= lb.depth {
                    assert!(lb.is_ancestor_of(la), "elements from unrelated extension towers");
                    Some(la.clone())
                } else {
                    assert!(la.is_ancestor_of(lb), "elements from unrelated extension towers");
                    Some(lb.clone())
                }
            }
        }
    }

    fn coeffs_at(&self, level: &Arc<Level>) -> Vec<TowerElem> {
        match self {
            TowerElem::Alg { level: l, coeffs } if Arc::ptr_eq(l, level) => coeffs.clone(),
            _ => vec![self.clone()],
        }
    }

    fn reduce(level: &Arc<Level>, mut prod: Vec<TowerElem>) -> TowerElem {
        let d = level.degree();
        let m = &level.modulus;
        while prod.len() > d {
            let k = prod.len() - 1;
            let c = prod.pop().unwrap();
            if c.is_zero() {
                continue;
            }
            for j in 0..d {
                prod[k - d + j] = prod[k - d + j].sub(&c.mul(&m[j]));
            }
        }
        TowerElem::canonical(level, prod)
    }

    /// Coefficients at the element's own level (a single rational at depth 0).
    pub fn representative(&self) -> Vec<TowerElem> {
        match self {
            TowerElem::Rat(_) => vec![self.clone()],
            TowerElem::Alg { coeffs, .. } => coeffs.clone(),
        }
    }
}

impl fmt::Display for TowerElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TowerElem::Rat(r) => f.write_str(&format_rat(r)),
            TowerElem::Alg { level, coeffs } => {
                f.write_str(&UniPoly::new(coeffs.clone()).display_with(&format!("a{}", level.depth)))
            }
        }
    }
}

impl Field for TowerElem {
    fn zero() -> Self {
        TowerElem::Rat(Rat::from_integer(0.into()))
    }

    fn one() -> Self {
        TowerElem::Rat(Rat::from_integer(1.into()))
    }

    fn from_rat(r: Rat) -> Self {
        TowerElem::Rat(r)
    }

    fn is_zero(&self) -> bool {
        matches!(self, TowerElem::Rat(r) if Field::is_zero(r))
    }

    fn add(&self, other: &Self) -> Self {
        match Self::common_level(self, other) {
            None => match (self, other) {
                (TowerElem::Rat(a), TowerElem::Rat(b)) => TowerElem::Rat(a + b),
                _ => unreachable!(),
            },
            Some(level) => {
                let (a, b) = (self.coeffs_at(&level), other.coeffs_at(&level));
                let n = a.len().max(b.len());
                let zero = TowerElem::zero();
                let sum = (0..n)
                    .map(|i| a.get(i).unwrap_or(&zero).add(b.get(i).unwrap_or(&zero)))
                    .collect();
                TowerElem::canonical(&level, sum)
            }
        }
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return TowerElem::zero();
        }
        match Self::common_level(self, other) {
            None => match (self, other) {
                (TowerElem::Rat(a), TowerElem::Rat(b)) => TowerElem::Rat(a * b),
                _ => unreachable!(),
            },
            Some(level) => {
                let (a, b) = (self.coeffs_at(&level), other.coeffs_at(&level));
                if a.len() == 1 || b.len() == 1 {
                    // scalar from a lower level: no reduction needed
                    let (s, v) = if a.len() == 1 { (&a[0], &b) } else { (&b[0], &a) };
                    let out = v.iter().map(|c| c.mul(s)).collect();
                    return TowerElem::canonical(&level, out);
                }
                let mut prod = vec![TowerElem::zero(); a.len() + b.len() - 1];
                for (i, x) in a.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (j, y) in b.iter().enumerate() {
                        prod[i + j] = prod[i + j].add(&x.mul(y));
                    }
                }
                TowerElem::reduce(&level, prod)
            }
        }
    }

    fn neg(&self) -> Self {
        match self {
            TowerElem::Rat(r) => TowerElem::Rat(-r),
            TowerElem::Alg { level, coeffs } => TowerElem::Alg {
                level: level.clone(),
                coeffs: coeffs.iter().map(Field::neg).collect(),
            },
        }
    }

    fn inv(&self) -> Self {
        match self {
            TowerElem::Rat(r) => TowerElem::Rat(Field::inv(r)),
            TowerElem::Alg { level, coeffs } => {
                let a = UniPoly::new(coeffs.clone());
                let m = UniPoly::new(level.modulus.clone());
                let (g, s, _) = ext_gcd(&a, &m);
                assert!(g.is_one_poly(), "modulus is not irreducible: element not invertible");
                TowerElem::canonical(level, s.into_coeffs())
            }
        }
    }

    fn canonical_cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (TowerElem::Rat(a), TowerElem::Rat(b)) => a.cmp(b),
            (TowerElem::Rat(_), TowerElem::Alg { .. }) => Ordering::Less,
            (TowerElem::Alg { .. }, TowerElem::Rat(_)) => Ordering::Greater,
            (TowerElem::Alg { level: l1, coeffs: c1 }, TowerElem::Alg { level: l2, coeffs: c2 }) => l1
                .depth
                .cmp(&l2.depth)
                .then(c1.len().cmp(&c2.len()))
                .then_with(|| {
                    c1.iter()
                        .zip(c2)
                        .map(|(a, b)| a.canonical_cmp(b))
                        .find(|o| *o != Ordering::Equal)
                        .unwrap_or(Ordering::Equal)
                }),
        }
    }

    fn as_rat(&self) -> Option<Rat> {
        match self {
            TowerElem::Rat(r) => Some(r.clone()),
            TowerElem::Alg { .. } => None,
        }
    }
}

impl<F: Field> UniPoly<F> {
    pub(crate) fn is_one_poly(&self) -> bool {
        self.degree() == Some(0) && self.coeff(0).is_one()
    }
}

/// Handle on the top level of a tower; `Tower::rational()` is Q itself.
#[derive(Clone, Debug, Default)]
pub struct Tower {
    top: Option<Arc<Level>>,
}

impl PartialEq for Tower {
    fn eq(&self, other: &Self) -> bool {
        match (&self.top, &other.top) {
            (None, None) => true,
            (Some(a), Some(b)) => Arc::ptr_eq(a, b),
            _ => false,
        }
    }
}

impl Tower {
    pub fn rational() -> Self {
        Tower { top: None }
    }

    pub fn depth(&self) -> usize {
        self.top.as_ref().map_or(0, |l| l.depth)
    }

    /// Degree of the top field over Q.
    pub fn degree(&self) -> usize {
        let mut d = 1;
        let mut cur = self.top.clone();
        while let Some(l) = cur {
            d *= l.degree();
            cur = l.parent.clone();
        }
        d
    }

    pub fn parent(&self) -> Tower {
        Tower { top: self.top.as_ref().and_then(|l| l.parent.clone()) }
    }

    /// Adjoin a root of `modulus`, which must be irreducible over this tower
    /// and of degree at least 2. The modulus is made monic.
    pub fn extend(&self, modulus: &UniPoly<TowerElem>) -> Tower {
        let m = modulus.monic();
        assert!(m.deg() >= 2, "extension modulus must have degree >= 2");
        for c in m.coeffs() {
            assert!(self.contains(c), "modulus coefficient outside the tower");
        }
        Tower {
            top: Some(Arc::new(Level {
                parent: self.top.clone(),
                modulus: m.into_coeffs(),
                depth: self.depth() + 1,
            })),
        }
    }

    /// The generator of the top level.
    pub fn generator(&self) -> Option<TowerElem> {
        self.top.as_ref().map(|l| TowerElem::Alg {
            level: l.clone(),
            coeffs: vec![TowerElem::zero(), TowerElem::one()],
        })
    }

    /// Modulus of the top level as a polynomial over the parent.
    pub fn modulus(&self) -> Option<UniPoly<TowerElem>> {
        self.top.as_ref().map(|l| UniPoly::new(l.modulus.clone()))
    }

    pub fn contains(&self, e: &TowerElem) -> bool {
        match (e.level(), &self.top) {
            (None, _) => true,
            (Some(_), None) => false,
            (Some(l), Some(top)) => l.is_ancestor_of(top),
        }
    }

    /// Representative of `e` as a polynomial in the top generator with
    /// coefficients in the parent field.
    pub fn lift_to_poly(&self, e: &TowerElem) -> UniPoly<TowerElem> {
        match &self.top {
            None => UniPoly::constant(e.clone()),
            Some(top) => UniPoly::new(e.coeffs_at(top)),
        }
    }

    /// Evaluate a polynomial over the parent at the top generator.
    pub fn from_poly(&self, p: &UniPoly<TowerElem>) -> TowerElem {
        match &self.top {
            None => p.coeff(0),
            Some(top) => TowerElem::reduce(top, p.coeffs().to_vec()),
        }
    }

    /// `(name, modulus)` for each level, bottom up.
    pub fn levels(&self) -> Vec<(String, String)> {
        let mut out = Vec::new();
        let mut cur = self.top.clone();
        while let Some(l) = cur {
            let name = format!("a{}", l.depth);
            out.push((name.clone(), UniPoly::new(l.modulus.clone()).display_with(&name)));
            cur = l.parent.clone();
        }
        out.reverse();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::field::rat;

    fn te(n: i64) -> TowerElem {
        TowerElem::from_i64(n)
    }

    fn sqrt2() -> (Tower, TowerElem) {
        let t = Tower::rational().extend(&UniPoly::new(vec![te(-2), te(0), te(1)]));
        let a = t.generator().unwrap();
        (t, a)
    }

    #[test]
    fn square_of_generator_reduces() {
        let (_, a) = sqrt2();
        assert_eq!(a.mul(&a), te(2));
        assert_eq!(a.mul(&a).as_rat(), Some(rat(2)));
    }

    #[test]
    fn inverse_in_quadratic_field() {
        let (_, a) = sqrt2();
        let x = a.add(&te(1)); // 1 + sqrt2
        let y = x.inv(); // sqrt2 - 1
        assert_eq!(y, a.sub(&te(1)));
        assert_eq!(x.mul(&y), te(1));
    }

    #[test]
    fn two_level_tower() {
        // Q(sqrt2)(b) with b^2 = sqrt2, so b^4 = 2
        let (t1, a) = sqrt2();
        let t2 = t1.extend(&UniPoly::new(vec![a.neg(), te(0), te(1)]));
        let b = t2.generator().unwrap();
        assert_eq!(t2.depth(), 2);
        assert_eq!(t2.degree(), 4);
        let b2 = b.mul(&b);
        assert_eq!(b2, a);
        assert_eq!(b2.mul(&b2), te(2));
        let z = b.add(&a).add(&te(3));
        assert_eq!(z.mul(&z.inv()), te(1));
        assert!(t2.contains(&a));
        assert!(!t1.contains(&b));
    }

    #[test]
    fn canonical_collapse() {
        let (_, a) = sqrt2();
        let z = a.sub(&a);
        assert!(z.is_zero());
        assert_eq!(z, TowerElem::zero());
    }
}
