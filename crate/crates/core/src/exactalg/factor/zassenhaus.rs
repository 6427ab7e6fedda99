//! Factorization of squarefree primitive integer polynomials: factor modulo a
//! small prime, Hensel-lift past a coefficient bound, recombine.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::modp;

pub type IntPoly = Vec<BigInt>;

fn trim(mut a: IntPoly) -> IntPoly {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

fn mul(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn reduce_mod_p(a: &[BigInt], p: u64) -> modp::Poly {
    let pb = BigInt::from(p);
    modp::trim(
        a.iter()
            .map(|c| {
                let r = c.mod_floor(&pb);
                r.iter_u64_digits().next().unwrap_or(0)
            })
            .collect(),
    )
}

fn lift_to_int(a: &[u64]) -> IntPoly {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

/// Symmetric residue in `(-m/2, m/2]`.
fn centered(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn content(a: &[BigInt]) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Primitive part with positive leading coefficient.
pub fn primitive(a: &[BigInt]) -> IntPoly {
    let c = content(a);
    if c.is_zero() {
        return Vec::new();
    }
    let sign = if a.last().unwrap().is_negative() { -BigInt::one() } else { BigInt::one() };
    a.iter().map(|x| x / &c * &sign).collect()
}

/// Exact quotient `a / b` over Z, or `None` if `b` does not divide `a`.
fn divide_exact(a: &[BigInt], b: &[BigInt]) -> Option<IntPoly> {
    let db = b.len() - 1;
    if a.len() < b.len() {
        return None;
    }
    let lb = b.last().unwrap();
    let mut rem = a.to_vec();
    let mut quot = vec![BigInt::zero(); a.len() - db];
    for k in (0..quot.len()).rev() {
        let (q, r) = rem[k + db].div_rem(lb);
        if !r.is_zero() {
            return None;
        }
        if q.is_zero() {
            continue;
        }
        for (j, d) in b.iter().enumerate() {
            rem[k + j] -= &q * d;
        }
        quot[k] = q;
    }
    rem.iter().all(|c| c.is_zero()).then(|| trim(quot))
}

fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..).step_by(2).filter(|&n| (3..).step_by(2).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

/// Lift `f ≡ g*h (mod p)`, `g` monic, to `f ≡ G*H (mod p^k)` with `G` monic.
fn hensel_two(f: &[BigInt], g: &[u64], h: &[u64], p: u64, k: u32) -> (IntPoly, IntPoly) {
    let (one, _, t) = modp::ext_gcd(g, h, p);
    debug_assert_eq!(one, vec![1]);
    let mut big_g = lift_to_int(g);
    let mut big_h = lift_to_int(h);
    let pb = BigInt::from(p);
    let mut q = pb.clone();
    for _ in 1..k {
        let gh = mul(&big_g, &big_h);
        let n = f.len().max(gh.len());
        let diff: IntPoly = (0..n)
            .map(|i| {
                let a = f.get(i).cloned().unwrap_or_default();
                let b = gh.get(i).cloned().unwrap_or_default();
                (a - b) / &q
            })
            .collect();
        let e = reduce_mod_p(&diff, p);
        let sigma = modp::rem(&modp::mul(&t, &e, p), g, p);
        let tau = modp::divrem(&modp::sub(&e, &modp::mul(&sigma, h, p), p), g, p).0;
        for (i, c) in sigma.iter().enumerate() {
            big_g[i] += &q * c;
        }
        if big_h.len() < tau.len() {
            big_h.resize(tau.len(), BigInt::zero());
        }
        for (i, c) in tau.iter().enumerate() {
            big_h[i] += &q * c;
        }
        q *= &pb;
    }
    let big_g = big_g.iter().map(|c| c.mod_floor(&q)).collect();
    let big_h = big_h.iter().map(|c| c.mod_floor(&q)).collect();
    (trim(big_g), trim(big_h))
}

/// Lift monic modular factors with `f ≡ lc(f) * prod gs (mod p)` to monic
/// factors modulo `p^k`.
fn hensel_multi(f: &[BigInt], gs: &[modp::Poly], p: u64, k: u32) -> Vec<IntPoly> {
    let modulus = BigInt::from(p).pow(k);
    if gs.len() == 1 {
        let lc = f.last().unwrap();
        let inv = mod_inverse(lc, &modulus);
        return vec![f.iter().map(|c| (c * &inv).mod_floor(&modulus)).collect()];
    }
    let lc_p = reduce_mod_p(&[f.last().unwrap().clone()], p);
    let mut rest: modp::Poly = lc_p;
    for g in &gs[1..] {
        rest = modp::mul(&rest, g, p);
    }
    let (big_g, big_h) = hensel_two(f, &gs[0], &rest, p, k);
    let mut out = vec![big_g];
    out.extend(hensel_multi(&big_h, &gs[1..], p, k));
    out
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.mod_floor(m).extended_gcd(m);
    assert!(e.gcd.is_one(), "leading coefficient not invertible modulo p^k");
    e.x.mod_floor(m)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Irreducible factors over Z of a squarefree primitive polynomial with
/// positive leading coefficient, each primitive with positive leading
/// coefficient.
pub fn factor_squarefree(f: &[BigInt]) -> Vec<IntPoly> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.to_vec()];
    }
    let lc = f.last().unwrap().clone();

    // pick the prime with the fewest modular factors among a few candidates
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut best: Option<(u64, Vec<modp::Poly>)> = None;
    let mut tried = 0;
    for p in small_primes() {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = reduce_mod_p(f, p);
        if fp.len() != f.len() || !modp::is_squarefree(&fp, p) {
            continue;
        }
        let fs = modp::factor_squarefree(&modp::monic(&fp, p), p, &mut rng);
        if fs.len() == 1 {
            return vec![f.to_vec()];
        }
        if best.as_ref().is_none_or(|(_, b)| fs.len() < b.len()) {
            best = Some((p, fs));
        }
        tried += 1;
        if tried >= 6 {
            break;
        }
    }
    let (p, modular) = best.expect("a suitable prime exists for a squarefree polynomial");

    // coefficient bound for lc * (any factor)
    let max_coeff = f.iter().map(|c| c.abs()).max().unwrap();
    let bound: BigInt = BigInt::from(2u32) * lc.abs() * (BigInt::one() << n) * BigInt::from(n + 1) * max_coeff;
    let mut k = 1u32;
    let pb = BigInt::from(p);
    let mut modulus = pb.clone();
    while modulus <= bound {
        modulus *= &pb;
        k += 1;
    }

    let mut lifted = hensel_multi(f, &modular, p, k);
    let mut remaining = f.to_vec();
    let mut out = Vec::new();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let mut found = None;
        let cur_lc = remaining.last().unwrap().clone();
        for subset in combinations(lifted.len(), size) {
            let mut cand: IntPoly = vec![cur_lc.clone()];
            for &i in &subset {
                cand = mul(&cand, &lifted[i]).iter().map(|c| c.mod_floor(&modulus)).collect();
            }
            let cand: IntPoly = cand.iter().map(|c| centered(c, &modulus)).collect();
            let cand = primitive(&trim(cand));
            if let Some(q) = divide_exact(&remaining, &cand) {
                found = Some((subset, cand, q));
                break;
            }
        }
        match found {
            Some((subset, cand, q)) => {
                out.push(cand);
                remaining = q;
                for &i in subset.iter().rev() {
                    lifted.remove(i);
                }
            }
            None => size += 1,
        }
    }
    if remaining.len() > 1 {
        out.push(primitive(&remaining));
    }
    out
}
