//! Polynomials over a prime field `F_p` with `p < 2^31`, stored as dense
//! `u64` vectors (lowest degree first, no trailing zeros).

use num_bigint::BigUint;
use rand::Rng;

pub type Poly = Vec<u64>;

pub fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn deg(a: &[u64]) -> usize {
    a.len().saturating_sub(1)
}

pub fn add(a: &[u64], b: &[u64], p: u64) -> Poly {
    let n = a.len().max(b.len());
    trim((0..n)
        .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p)
        .collect())
}

pub fn sub(a: &[u64], b: &[u64], p: u64) -> Poly {
    let n = a.len().max(b.len());
    trim((0..n)
        .map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p)
        .collect())
}

pub fn mul(a: &[u64], b: &[u64], p: u64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

pub fn scale(a: &[u64], c: u64, p: u64) -> Poly {
    trim(a.iter().map(|&x| x * c % p).collect())
}

pub fn pow_mod_scalar(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

pub fn inv_scalar(a: u64, p: u64) -> u64 {
    assert!(!a.is_multiple_of(p), "inverse of zero mod p");
    pow_mod_scalar(a, p - 2, p)
}

pub fn divrem(a: &[u64], b: &[u64], p: u64) -> (Poly, Poly) {
    assert!(!b.is_empty(), "division by zero polynomial mod p");
    if a.len() < b.len() {
        return (Vec::new(), a.to_vec());
    }
    let db = deg(b);
    let inv = inv_scalar(*b.last().unwrap(), p);
    let mut rem = a.to_vec();
    let mut quot = vec![0u64; a.len() - db];
    for k in (0..quot.len()).rev() {
        let c = rem[k + db] * inv % p;
        if c == 0 {
            continue;
        }
        for (j, &d) in b.iter().enumerate() {
            rem[k + j] = (rem[k + j] + p - c * d % p) % p;
        }
        quot[k] = c;
    }
    rem.truncate(db);
    (trim(quot), trim(rem))
}

pub fn rem(a: &[u64], b: &[u64], p: u64) -> Poly {
    divrem(a, b, p).1
}

pub fn monic(a: &[u64], p: u64) -> Poly {
    match a.last() {
        None => Vec::new(),
        Some(&l) => scale(a, inv_scalar(l, p), p),
    }
}

pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Poly {
    let (mut x, mut y) = (a.to_vec(), b.to_vec());
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    monic(&x, p)
}

/// `(g, s, t)` with `s*a + t*b = g` monic.
pub fn ext_gcd(a: &[u64], b: &[u64], p: u64) -> (Poly, Poly, Poly) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1): (Poly, Poly) = (vec![1], Vec::new());
    let (mut t0, mut t1): (Poly, Poly) = (Vec::new(), vec![1]);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1, p);
        let s2 = sub(&s0, &mul(&q, &s1, p), p);
        let t2 = sub(&t0, &mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    let inv = inv_scalar(*r0.last().expect("gcd of zero polynomials"), p);
    (scale(&r0, inv, p), scale(&s0, inv, p), scale(&t0, inv, p))
}

pub fn derivative(a: &[u64], p: u64) -> Poly {
    trim(a.iter().enumerate().skip(1).map(|(i, &c)| (i as u64 % p) * c % p).collect())
}

/// `base^e mod m`.
pub fn pow_mod(base: &[u64], e: &BigUint, m: &[u64], p: u64) -> Poly {
    let mut acc: Poly = vec![1];
    let b = rem(base, m, p);
    for i in (0..e.bits()).rev() {
        acc = rem(&mul(&acc, &acc, p), m, p);
        if e.bit(i) {
            acc = rem(&mul(&acc, &b, p), m, p);
        }
    }
    rem(&acc, m, p)
}

pub fn is_squarefree(f: &[u64], p: u64) -> bool {
    let d = derivative(f, p);
    !d.is_empty() && gcd(f, &d, p).len() == 1
}

/// Distinct-degree factorization of a monic squarefree polynomial:
/// `(g, d)` where `g` is the product of all irreducible factors of degree `d`.
pub fn distinct_degree(f: &[u64], p: u64) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    let mut f = f.to_vec();
    let x: Poly = vec![0, 1];
    let mut h = x.clone();
    let pb = BigUint::from(p);
    let mut d = 1;
    while deg(&f) >= 2 * d {
        h = pow_mod(&h, &pb, &f, p);
        let g = gcd(&f, &sub(&h, &x, p), p);
        if g.len() > 1 {
            f = divrem(&f, &g, p).0;
            h = rem(&h, &f, p);
            out.push((g, d));
        }
        d += 1;
    }
    if f.len() > 1 {
        let d = deg(&f);
        out.push((f, d));
    }
    out
}

/// Cantor–Zassenhaus splitting of a product of distinct irreducibles of
/// degree `d` (p odd).
pub fn equal_degree(f: &[u64], d: usize, p: u64, rng: &mut impl Rng) -> Vec<Poly> {
    if deg(f) == d {
        return vec![f.to_vec()];
    }
    let e = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
    loop {
        let a: Poly = trim((0..deg(f)).map(|_| rng.gen_range(0..p)).collect());
        if a.len() <= 1 {
            continue;
        }
        let b = sub(&pow_mod(&a, &e, f, p), &[1], p);
        let g = gcd(&b, f, p);
        if g.len() > 1 && g.len() < f.len() {
            let h = divrem(f, &g, p).0;
            let mut out = equal_degree(&g, d, p, rng);
            out.extend(equal_degree(&monic(&h, p), d, p, rng));
            return out;
        }
    }
}

/// Monic irreducible factors of a monic squarefree polynomial over `F_p`.
pub fn factor_squarefree(f: &[u64], p: u64, rng: &mut impl Rng) -> Vec<Poly> {
    let mut out = Vec::new();
    for (g, d) in distinct_degree(f, p) {
        out.extend(equal_degree(&g, d, p, rng));
    }
    out.sort();
    out
}
