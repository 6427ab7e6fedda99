//! Numerical semigroups: additive submonoids of N with finite complement.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    /// Membership of `0..conductor`.
    members: Vec<bool>,
    conductor: u64,
}

impl NumericalSemigroup {
    /// The semigroup generated by `gens`; zeros are ignored and the
    /// remaining generators must be coprime.
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        let gens: Vec<u64> = gens.iter().copied().filter(|&g| g > 0).collect();
        if gens.is_empty() {
            return Ok(Self::naturals());
        }
        if gens.iter().fold(0u64, |a, &b| a.gcd(&b)) != 1 {
            return Err(Error::Inapplicable(format!("generators {gens:?} are not coprime")));
        }
        let m = *gens.iter().min().expect("nonempty") as usize;
        let mut members = vec![true];
        let mut run = 1usize;
        let mut n = 0usize;
        // all integers follow once m consecutive members appear
        while run < m {
            n += 1;
            let hit = gens.iter().any(|&g| g as usize <= n && members[n - g as usize]);
            members.push(hit);
            run = if hit { run + 1 } else { 0 };
        }
        let conductor = members.len() - m;
        members.truncate(conductor);
        let mut s = NumericalSemigroup { generators: Vec::new(), members, conductor: conductor as u64 };
        s.generators = s.compute_minimal_generators();
        Ok(s)
    }

    pub fn naturals() -> Self {
        NumericalSemigroup { generators: vec![1], members: Vec::new(), conductor: 0 }
    }

    /// `{0} ∪ [n, ∞)`.
    pub fn ordinary(n: u64) -> Self {
        let gens: Vec<u64> = if n <= 1 { vec![1] } else { (n..2 * n).collect() };
        Self::from_generators(&gens).expect("consecutive generators are coprime")
    }

    pub fn contains(&self, n: u64) -> bool {
        n >= self.conductor || self.members[n as usize]
    }

    /// Smallest `c` with `[c, ∞)` inside the semigroup.
    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Largest gap, or `-1` for `N`.
    pub fn frobenius(&self) -> i64 {
        self.conductor as i64 - 1
    }

    /// Smallest positive element.
    pub fn multiplicity(&self) -> u64 {
        (1..).find(|&n| self.contains(n)).expect("cofinite")
    }

    /// Number of gaps.
    pub fn genus(&self) -> u64 {
        self.members.iter().filter(|&&b| !b).count() as u64
    }

    pub fn gaps(&self) -> Vec<u64> {
        (0..self.conductor).filter(|&n| !self.contains(n)).collect()
    }

    pub fn minimal_generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn elements_up_to(&self, bound: u64) -> Vec<u64> {
        (0..=bound).filter(|&n| self.contains(n)).collect()
    }

    fn compute_minimal_generators(&self) -> Vec<u64> {
        let m = self.multiplicity();
        (1..=self.conductor + m)
            .filter(|&n| self.contains(n) && !(1..n).any(|a| self.contains(a) && self.contains(n - a)))
            .collect()
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(u64::to_string).collect();
        write!(f, "<{}>", gens.join(", "))
    }
}

/// Number of gaps of `h`.
pub fn genus_of(h: &NumericalSemigroup) -> u64 {
    h.genus()
}

/// Whether a point with Weierstrass semigroup `h` is a Weierstrass point,
/// i.e. `h` differs from `{0} ∪ [g + 1, ∞)`.
pub fn is_weierstrass_point(h: &NumericalSemigroup) -> bool {
    *h != NumericalSemigroup::ordinary(h.genus() + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_generators() {
        let s = NumericalSemigroup::from_generators(&[2, 3]).unwrap();
        assert_eq!(s.gaps(), vec![1]);
        assert_eq!(s.conductor(), 2);
        assert_eq!(s.frobenius(), 1);
        assert_eq!(s.minimal_generators(), &[2, 3]);
        assert!(!is_weierstrass_point(&s));

        let s = NumericalSemigroup::from_generators(&[2, 5]).unwrap();
        assert_eq!(s.gaps(), vec![1, 3]);
        assert_eq!(s.genus(), 2);
        assert!(is_weierstrass_point(&s));

        let s = NumericalSemigroup::from_generators(&[3, 4]).unwrap();
        assert_eq!(s.gaps(), vec![1, 2, 5]);
        assert_eq!(s.to_string(), "<3, 4>");
    }

    #[test]
    fn redundant_generators_are_dropped() {
        let s = NumericalSemigroup::from_generators(&[4, 6, 9, 8, 13, 0]).unwrap();
        assert_eq!(s.minimal_generators(), &[4, 6, 9]);
        assert_eq!(s.elements_up_to(10), vec![0, 4, 6, 8, 9, 10]);
    }

    #[test]
    fn naturals_and_ordinary() {
        let n = NumericalSemigroup::from_generators(&[]).unwrap();
        assert_eq!(n, NumericalSemigroup::naturals());
        assert_eq!(n.frobenius(), -1);
        assert_eq!(n.genus(), 0);
        assert!(!is_weierstrass_point(&n));
        assert_eq!(NumericalSemigroup::from_generators(&[1, 5]).unwrap(), n);
        let o = NumericalSemigroup::ordinary(4);
        assert_eq!(o.gaps(), vec![1, 2, 3]);
        assert_eq!(o.minimal_generators(), &[4, 5, 6, 7]);
        assert_eq!(NumericalSemigroup::ordinary(1), n);
    }

    #[test]
    fn non_coprime_rejected() {
        assert!(NumericalSemigroup::from_generators(&[4, 6]).is_err());
    }
}
