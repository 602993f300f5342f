//! Polynomials over F_p for word-size primes p: arithmetic, gcd, and complete
//! factorization for the small degrees this crate needs (<= 8).
//!
//! Factorization runs squarefree decomposition, distinct-degree splitting,
//! then Cantor-Zassenhaus equal-degree splitting. The equal-degree stage is
//! randomized but seeded from the input polynomial itself, so results are
//! bit-reproducible across runs. Factors are reported in a canonical order:
//! by degree, then by coefficients from the constant term upward.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::numtheory;
use crate::polyint::IntPoly;

#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct ModPoly {
    modulus: u64,
    coeffs: Vec<u64>,
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    acc
}

fn invmod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

impl ModPoly {
    /// Builds a polynomial over F_p from ascending coefficients; reduces and
    /// trims. The modulus is assumed prime (checked at the public entry
    /// points that take untrusted moduli).
    pub fn new(modulus: u64, coeffs: Vec<u64>) -> Self {
        debug_assert!(modulus >= 2);
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % modulus).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ModPoly { modulus, coeffs }
    }

    pub fn zero(modulus: u64) -> Self {
        ModPoly {
            modulus,
            coeffs: vec![],
        }
    }

    pub fn one(modulus: u64) -> Self {
        ModPoly::new(modulus, vec![1])
    }

    pub fn x(modulus: u64) -> Self {
        ModPoly::new(modulus, vec![0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn leading(&self) -> u64 {
        *self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    fn check_same(&self, other: &ModPoly) {
        assert_eq!(
            self.modulus, other.modulus,
            "mixed moduli in ModPoly arithmetic"
        );
    }

    pub fn add(&self, other: &ModPoly) -> ModPoly {
        self.check_same(other);
        let p = self.modulus;
        let n = self.coeffs.len().max(other.coeffs.len());
        ModPoly::new(
            p,
            (0..n)
                .map(|i| (self.coeff(i) + other.coeff(i)) % p)
                .collect(),
        )
    }

    pub fn sub(&self, other: &ModPoly) -> ModPoly {
        self.check_same(other);
        let p = self.modulus;
        let n = self.coeffs.len().max(other.coeffs.len());
        ModPoly::new(
            p,
            (0..n)
                .map(|i| (self.coeff(i) + p - other.coeff(i)) % p)
                .collect(),
        )
    }

    pub fn mul(&self, other: &ModPoly) -> ModPoly {
        self.check_same(other);
        let p = self.modulus;
        if self.is_zero() || other.is_zero() {
            return ModPoly::zero(p);
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + mulmod(a, b, p)) % p;
            }
        }
        ModPoly::new(p, out)
    }

    pub fn scale(&self, c: u64) -> ModPoly {
        let p = self.modulus;
        ModPoly::new(p, self.coeffs.iter().map(|&a| mulmod(a, c % p, p)).collect())
    }

    pub fn monic(&self) -> ModPoly {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.leading();
        if lc == 1 {
            self.clone()
        } else {
            self.scale(invmod(lc, self.modulus))
        }
    }

    pub fn is_monic(&self) -> bool {
        !self.is_zero() && self.leading() == 1
    }

    /// Euclidean division; the divisor must be nonzero.
    pub fn div_rem(&self, d: &ModPoly) -> (ModPoly, ModPoly) {
        self.check_same(d);
        assert!(!d.is_zero(), "division by the zero polynomial");
        let p = self.modulus;
        let dd = d.degree().unwrap();
        let inv = invmod(d.leading(), p);
        let mut rem = self.coeffs.clone();
        if rem.len() < dd + 1 {
            return (ModPoly::zero(p), self.clone());
        }
        let mut quot = vec![0u64; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = mulmod(rem[i], inv, p);
            if c == 0 {
                continue;
            }
            quot[i - dd] = c;
            for (j, &dc) in d.coeffs.iter().enumerate() {
                let idx = i - dd + j;
                rem[idx] = (rem[idx] + p - mulmod(c, dc, p)) % p;
            }
        }
        (ModPoly::new(p, quot), ModPoly::new(p, rem))
    }

    pub fn rem(&self, d: &ModPoly) -> ModPoly {
        self.div_rem(d).1
    }

    pub fn eval(&self, t: u64) -> u64 {
        let p = self.modulus;
        let t = t % p;
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = (mulmod(acc, t, p) + c) % p;
        }
        acc
    }

    pub fn derivative(&self) -> ModPoly {
        let p = self.modulus;
        if self.coeffs.len() <= 1 {
            return ModPoly::zero(p);
        }
        ModPoly::new(
            p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mulmod(c, (i as u64) % p, p))
                .collect(),
        )
    }

    /// `self^exp mod m`, exponent given in full precision.
    pub fn pow_mod(&self, exp: &BigUint, m: &ModPoly) -> ModPoly {
        let p = self.modulus;
        let mut acc = ModPoly::one(p);
        let base = self.rem(m);
        let bits = exp.bits();
        for i in (0..bits).rev() {
            acc = acc.mul(&acc).rem(m);
            if exp.bit(i) {
                acc = acc.mul(&base).rem(m);
            }
        }
        acc
    }

    /// Canonical lift to Z[x] with coefficients in [0, p).
    pub fn lift(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|&c| c.into()).collect())
    }
}

/// Coefficientwise reduction of an integer polynomial modulo a prime.
pub fn reduce(poly: &IntPoly, modulus: u64) -> Result<ModPoly> {
    if !numtheory::is_prime(modulus as i128) {
        return Err(Error::CompositeModulus(modulus));
    }
    let m = num_bigint::BigInt::from(modulus);
    let coeffs = poly
        .coeffs()
        .iter()
        .map(|c| {
            let mut r = c % &m;
            if r < num_bigint::BigInt::from(0) {
                r += &m;
            }
            u64::try_from(r).expect("residue fits u64")
        })
        .collect();
    Ok(ModPoly::new(modulus, coeffs))
}

/// Monic gcd; `gcd(0, 0) = 0`. Errors on mixed moduli.
pub fn gcd(a: &ModPoly, b: &ModPoly) -> Result<ModPoly> {
    if a.modulus != b.modulus {
        return Err(Error::ModulusMismatch(a.modulus, b.modulus));
    }
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_zero() {
        let r = x.rem(&y);
        x = y;
        y = r;
    }
    Ok(x.monic())
}

fn gcd_unchecked(a: &ModPoly, b: &ModPoly) -> ModPoly {
    gcd(a, b).expect("same modulus")
}

/// Complete factorization of a nonzero polynomial over F_p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModFactorization {
    /// Leading unit: the input equals `unit * prod(factor^exponent)`.
    pub unit: u64,
    pub factors: Vec<(ModPoly, u32)>,
}

impl ModFactorization {
    pub fn reconstruct(&self, modulus: u64) -> ModPoly {
        let mut acc = ModPoly::one(modulus).scale(self.unit);
        for (f, e) in &self.factors {
            for _ in 0..*e {
                acc = acc.mul(f);
            }
        }
        acc
    }
}

fn seed_for(poly: &ModPoly) -> u64 {
    // FNV-1a over (modulus, coefficients); stable across runs and platforms.
    let mut h: u64 = 0xcbf29ce484222325;
    let mut eat = |v: u64| {
        for b in v.to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
    };
    eat(poly.modulus);
    for &c in &poly.coeffs {
        eat(c);
    }
    h
}

/// p-th root of a polynomial that is a p-th power (all exponents with nonzero
/// coefficients are multiples of p; coefficients are fixed by Frobenius).
fn pth_root(f: &ModPoly) -> ModPoly {
    let p = f.modulus as usize;
    let mut out = Vec::new();
    for (i, &c) in f.coeffs.iter().enumerate() {
        if i % p == 0 {
            out.push(c);
        } else {
            debug_assert_eq!(c, 0, "not a p-th power");
        }
    }
    ModPoly::new(f.modulus, out)
}

fn random_poly(rng: &mut ChaCha8Rng, p: u64, deg_below: usize) -> ModPoly {
    loop {
        let coeffs: Vec<u64> = (0..deg_below).map(|_| rng.random_range(0..p)).collect();
        let poly = ModPoly::new(p, coeffs);
        if !poly.is_zero() {
            return poly;
        }
    }
}

/// Equal-degree splitting: `f` is a monic product of distinct irreducibles,
/// each of degree `d`.
fn equal_degree(f: &ModPoly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<ModPoly>) {
    let p = f.modulus;
    let n = f.degree().unwrap();
    if n == d {
        out.push(f.clone());
        return;
    }
    loop {
        let a = random_poly(rng, p, n);
        let candidate = if p == 2 {
            // Trace map: a + a^2 + a^4 + ... + a^(2^(d-1)) mod f.
            let mut t = a.clone();
            let mut sq = a.clone();
            for _ in 1..d {
                sq = sq.mul(&sq).rem(f);
                t = t.add(&sq);
            }
            t
        } else {
            let e = (BigUint::from(p).pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
            let b = a.pow_mod(&e, f);
            b.sub(&ModPoly::one(p))
        };
        for g in [&candidate, &candidate.add(&ModPoly::one(p))] {
            let h = gcd_unchecked(g, f);
            if let Some(dh) = h.degree() {
                if dh > 0 && dh < n {
                    equal_degree(&h, d, rng, out);
                    equal_degree(&f.div_rem(&h).0.monic(), d, rng, out);
                    return;
                }
            }
        }
    }
}

/// Distinct-degree then equal-degree factorization of a monic squarefree
/// polynomial.
fn factor_squarefree(f: &ModPoly, rng: &mut ChaCha8Rng) -> Vec<ModPoly> {
    let p = f.modulus;
    let mut f = f.clone();
    let mut out = Vec::new();
    let mut frob = ModPoly::x(p); // x^(p^d) mod f, advanced one Frobenius at a time
    let mut d = 0usize;
    let pexp = BigUint::from(p);
    while f.degree().unwrap() >= 2 * (d + 1) {
        d += 1;
        frob = frob.pow_mod(&pexp, &f);
        let g = gcd_unchecked(&frob.sub(&ModPoly::x(p)), &f);
        if g.degree().unwrap_or(0) > 0 {
            equal_degree(&g, d, rng, &mut out);
            f = f.div_rem(&g).0.monic();
            if f.degree() == Some(0) {
                break;
            }
            frob = frob.rem(&f);
        }
    }
    if f.degree().unwrap_or(0) > 0 {
        out.push(f);
    }
    out
}

fn factor_monic(f: &ModPoly, rng: &mut ChaCha8Rng) -> Vec<(ModPoly, u32)> {
    let p = f.modulus;
    if f.degree() == Some(0) {
        return vec![];
    }
    let deriv = f.derivative();
    if deriv.is_zero() {
        // f = g(x)^p
        return factor_monic(&pth_root(f), rng)
            .into_iter()
            .map(|(q, e)| (q, e * p as u32))
            .collect();
    }
    let s = gcd_unchecked(f, &deriv);
    let sqf = f.div_rem(&s).0.monic();
    let mut out = Vec::new();
    let mut rest = f.clone();
    for q in factor_squarefree(&sqf, rng) {
        let mut e = 0u32;
        loop {
            let (quot, rem) = rest.div_rem(&q);
            if !rem.is_zero() {
                break;
            }
            rest = quot;
            e += 1;
        }
        debug_assert!(e >= 1);
        out.push((q, e));
    }
    if rest.degree().unwrap_or(0) > 0 {
        // Multiplicities divisible by p live here; rest is a p-th power.
        for (q, e) in factor_monic(&pth_root(&rest), rng) {
            out.push((q, e * p as u32));
        }
    }
    out
}

/// Complete factorization into monic irreducibles with exponents, in
/// canonical order. Deterministic for a given input.
pub fn factorize(a: &ModPoly) -> Result<ModFactorization> {
    if a.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let unit = a.leading();
    let monic = a.monic();
    let mut rng = ChaCha8Rng::seed_from_u64(seed_for(a));
    let mut factors = factor_monic(&monic, &mut rng);
    factors.sort_by(|(f, _), (g, _)| {
        f.coeffs
            .len()
            .cmp(&g.coeffs.len())
            .then_with(|| f.coeffs.cmp(&g.coeffs))
    });
    Ok(ModFactorization { unit, factors })
}

/// Multiset of irreducible-factor degrees of `poly` modulo `modulus`, sorted
/// descending (e.g. `[2, 1, 1]`). The caller keeps `modulus` away from
/// `disc(poly)` when a clean splitting pattern is wanted.
pub fn frobenius_pattern(poly: &IntPoly, modulus: u64) -> Result<Vec<usize>> {
    let reduced = reduce(poly, modulus)?;
    let fact = factorize(&reduced)?;
    let mut pattern = Vec::new();
    for (f, e) in &fact.factors {
        for _ in 0..*e {
            pattern.push(f.degree().unwrap());
        }
    }
    pattern.sort_unstable_by(|a, b| b.cmp(a));
    Ok(pattern)
}

impl fmt::Display for ModPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.lift())
    }
}
