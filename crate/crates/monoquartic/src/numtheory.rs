//! Exact integer kernels: factorization, squarefree and perfect-square
//! predicates, deterministic primality.
//!
//! Inputs are 128-bit signed integers, which covers every discriminant and
//! invariant produced by the desk-scale campaigns in this crate. Factoring
//! runs trial division up to 10^6 and falls back to Pollard rho with Brent
//! cycle detection for the remaining cofactor.

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

const TRIAL_LIMIT: u64 = 1_000_000;

/// Prime factorization of a nonzero integer.
///
/// `sign * prod(p_i ^ e_i)` reconstructs the input; primes are strictly
/// increasing and every exponent is at least 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub sign: i8,
    pub factors: Vec<(u128, u32)>,
}

impl Factorization {
    pub fn reconstruct(&self) -> i128 {
        let mut m: u128 = 1;
        for &(p, e) in &self.factors {
            for _ in 0..e {
                m *= p;
            }
        }
        if self.sign < 0 {
            -(m as i128)
        } else {
            m as i128
        }
    }

    /// True iff every exponent equals 1.
    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }
}

fn mulmod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc: u64 = 1;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod_u64(acc, base, m);
        }
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

// Deterministic for all n < 2^64 with this witness set.
const MR_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    'witness: for &a in &MR_WITNESSES {
        let mut x = powmod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn is_prime_big(n: &BigInt) -> bool {
    // Miller-Rabin over BigInt for values past 64 bits. The first-primes
    // witness set is proven deterministic well past 2^64; beyond that bound
    // the answer is still correct for every composite with a witness among
    // the first 20 primes.
    let one = BigInt::one();
    let two = BigInt::from(2);
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    let witnesses: [u64; 20] = [
        2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
    ];
    'witness: for &a in &witnesses {
        let a = BigInt::from(a);
        if &a >= n {
            continue;
        }
        let mut x = a.modpow(&d, n);
        if x == one || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == nm1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn is_prime_u128(n: u128) -> bool {
    if n < (1u128 << 64) {
        is_prime_u64(n as u64)
    } else {
        if n.is_multiple_of(2) {
            return false;
        }
        is_prime_big(&BigInt::from(n))
    }
}

/// Deterministic primality test. Negative inputs, 0 and 1 are not prime.
pub fn is_prime(n: i128) -> bool {
    if n < 2 {
        return false;
    }
    is_prime_u128(n as u128)
}

/// Smallest prime strictly greater than `n`.
pub fn next_prime(n: u64) -> u64 {
    let mut c = n + 1;
    loop {
        if is_prime_u64(c) {
            return c;
        }
        c += 1;
    }
}

fn rho_brent_u64(n: u64) -> u64 {
    // n odd composite, not a prime. Returns a nontrivial factor.
    // Deterministic: the polynomial offset c walks 1, 2, 3, ...
    for c in 1u64.. {
        let f = |x: u64| {
            let v = mulmod_u64(x, x, n);
            let s = v + c;
            if s >= n {
                s - n
            } else {
                s
            }
        };
        let mut x = 2u64;
        let mut ys = x;
        let mut d = 1u64;
        let m = 128u64;
        let mut r = 1u64;
        let mut y = x;
        let mut q = 1u64;
        while d == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && d == 1 {
                ys = y;
                for _ in 0..m.min(r - k) {
                    y = f(y);
                    q = mulmod_u64(q, x.abs_diff(y), n);
                }
                d = gcd_u64(q, n);
                k += m;
            }
            r *= 2;
        }
        if d == n {
            // backtrack
            d = 1;
            while d == 1 {
                ys = f(ys);
                d = gcd_u64(x.abs_diff(ys), n);
            }
        }
        if d != n && d != 1 {
            return d;
        }
    }
    unreachable!()
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn rho_big(n: &BigInt) -> BigInt {
    // Pollard rho (Floyd) over BigInt, used only for cofactors past 64 bits.
    let one = BigInt::one();
    for c in 1u64.. {
        let c = BigInt::from(c);
        let f = |x: &BigInt| (x * x + &c) % n;
        let mut x = BigInt::from(2);
        let mut y = BigInt::from(2);
        loop {
            x = f(&x);
            y = f(&f(&y));
            let d = (&x - &y).abs().gcd(n);
            if d == *n {
                break;
            }
            if d > one {
                return d;
            }
        }
    }
    unreachable!()
}

fn split_composite(n: u128) -> u128 {
    debug_assert!(n > 1 && !is_prime_u128(n));
    if n.is_multiple_of(2) {
        return 2;
    }
    if n < (1u128 << 64) {
        rho_brent_u64(n as u64) as u128
    } else {
        rho_big(&BigInt::from(n)).to_u128().expect("factor fits u128")
    }
}

fn factor_u128_into(mut m: u128, out: &mut Vec<(u128, u32)>) {
    // Trial division stage.
    let push = |p: u128, e: u32, out: &mut Vec<(u128, u32)>| {
        if e > 0 {
            out.push((p, e));
        }
    };
    for p in [2u128, 3, 5] {
        let mut e = 0;
        while m.is_multiple_of(p) {
            m /= p;
            e += 1;
        }
        push(p, e, out);
    }
    let mut d: u128 = 7;
    let mut wheel = [4u128, 2, 4, 2, 4, 6, 2, 6].iter().cycle();
    while d <= TRIAL_LIMIT as u128 && d * d <= m {
        if m.is_multiple_of(d) {
            let mut e = 0;
            while m.is_multiple_of(d) {
                m /= d;
                e += 1;
            }
            push(d, e, out);
            if m > 1 && is_prime_u128(m) {
                push(m, 1, out);
                m = 1;
                break;
            }
        }
        d += wheel.next().unwrap();
    }
    if m > 1 {
        if d * d > m {
            // No divisor up to sqrt(m): prime.
            push(m, 1, out);
        } else {
            // Rho stage for the remaining cofactor.
            let mut stack = vec![m];
            while let Some(c) = stack.pop() {
                if c == 1 {
                    continue;
                }
                if is_prime_u128(c) {
                    match out.iter_mut().find(|(p, _)| *p == c) {
                        Some((_, e)) => *e += 1,
                        None => out.push((c, 1)),
                    }
                    continue;
                }
                let f = split_composite(c);
                stack.push(f);
                stack.push(c / f);
            }
        }
    }
    out.sort_unstable_by_key(|&(p, _)| p);
}

/// Exact prime factorization of a nonzero integer. Deterministic.
pub fn factor(n: i128) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::FactorZero);
    }
    let sign: i8 = if n < 0 { -1 } else { 1 };
    let m = n.unsigned_abs();
    let mut factors = Vec::new();
    if m > 1 {
        factor_u128_into(m, &mut factors);
    }
    Ok(Factorization { sign, factors })
}

/// True iff `n` is nonzero and no prime square divides it. Sign is ignored;
/// `|n| = 1` counts as squarefree, `0` does not.
pub fn is_squarefree(n: i128) -> bool {
    if n == 0 {
        return false;
    }
    let mut m = n.unsigned_abs();
    if m == 1 {
        return true;
    }
    // Early-exit trial stage: bail out as soon as a square divisor appears.
    for p in [2u128, 3, 5] {
        if m.is_multiple_of(p * p) {
            return false;
        }
        while m.is_multiple_of(p) {
            m /= p;
        }
    }
    let mut d: u128 = 7;
    let mut wheel = [4u128, 2, 4, 2, 4, 6, 2, 6].iter().cycle();
    while d <= TRIAL_LIMIT as u128 && d * d <= m {
        if m.is_multiple_of(d) {
            m /= d;
            if m.is_multiple_of(d) {
                return false;
            }
            if is_prime_u128(m) {
                return true;
            }
        }
        d += wheel.next().unwrap();
    }
    if m == 1 || d * d > m || is_prime_u128(m) {
        return true;
    }
    if is_perfect_square(m as i128) {
        return false;
    }
    // Cofactor has at least two prime factors, all above the trial bound.
    let mut tail = Vec::new();
    factor_u128_into(m, &mut tail);
    tail.iter().all(|&(_, e)| e == 1)
}

/// Integer square root when `n` is a perfect square.
pub fn sqrt_exact(n: i128) -> Option<i128> {
    if n < 0 {
        return None;
    }
    let r = (n as u128).sqrt();
    if r * r == n as u128 {
        Some(r as i128)
    } else {
        None
    }
}

/// True iff `n = m^2` for some integer `m >= 0`. Negatives are never squares.
pub fn is_perfect_square(n: i128) -> bool {
    sqrt_exact(n).is_some()
}

/// Arbitrary-precision variant of [`is_perfect_square`].
pub fn is_perfect_square_big(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    if n.is_zero() {
        return true;
    }
    let r = n.sqrt();
    &r * &r == *n
}

/// All positive divisors of `n`, sorted ascending.
pub fn divisors(n: i128) -> Result<Vec<i128>> {
    let f = factor(n)?;
    let mut out: Vec<i128> = vec![1];
    for &(p, e) in &f.factors {
        let p = i128::try_from(p).map_err(|_| Error::ValueTooLarge)?;
        let base = out.clone();
        let mut pk = 1i128;
        for _ in 0..e {
            pk = pk.checked_mul(p).ok_or(Error::ValueTooLarge)?;
            for b in &base {
                out.push(b.checked_mul(pk).ok_or(Error::ValueTooLarge)?);
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn factor_examples() {
        assert_eq!(
            factor(1).unwrap(),
            Factorization {
                sign: 1,
                factors: vec![]
            }
        );
        assert_eq!(
            factor(-1728).unwrap(),
            Factorization {
                sign: -1,
                factors: vec![(2, 6), (3, 3)]
            }
        );
        assert_eq!(
            factor(19773).unwrap(),
            Factorization {
                sign: 1,
                factors: vec![(3, 2), (13, 3)]
            }
        );
        assert!(matches!(factor(0), Err(Error::FactorZero)));
    }

    #[test]
    fn factor_reconstructs_and_is_canonical() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..10_000 {
            let n: i128 = rng.random_range(-1_000_000_000_000i128..=1_000_000_000_000);
            if n == 0 {
                continue;
            }
            let f = factor(n).unwrap();
            assert_eq!(f.reconstruct(), n, "n = {n}");
            for w in f.factors.windows(2) {
                assert!(w[0].0 < w[1].0);
            }
            for &(p, e) in &f.factors {
                assert!(is_prime(p as i128), "{p} reported as prime factor of {n}");
                assert!(e >= 1);
            }
        }
    }

    #[test]
    fn squarefree_examples() {
        assert!(!is_squarefree(0));
        assert!(is_squarefree(-15));
        assert!(!is_squarefree(12));
        assert!(is_squarefree(1));
        assert!(is_squarefree(-1));
        assert!(!is_squarefree(-4));
    }

    #[test]
    fn squarefree_matches_factorization() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xf00d);
        for _ in 0..10_000 {
            let n: i128 = rng.random_range(-1_000_000_000_000i128..=1_000_000_000_000);
            if n == 0 {
                continue;
            }
            assert_eq!(
                is_squarefree(n),
                factor(n).unwrap().is_squarefree(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn perfect_square_examples() {
        assert!(is_perfect_square(1521));
        assert!(!is_perfect_square(-4));
        assert!(is_perfect_square(0));
        assert_eq!(sqrt_exact(1521), Some(39));
        assert_eq!(sqrt_exact(2), None);
    }

    #[test]
    fn perfect_square_matches_integer_sqrt() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xcafe);
        for _ in 0..10_000 {
            let n: i128 = rng.random_range(-1_000_000i128..=1_000_000);
            let byroot = n >= 0 && {
                let r = (n as u128).sqrt();
                (r * r) as i128 == n
            };
            assert_eq!(is_perfect_square(n), byroot);
            // Exercise exact squares explicitly as well.
            let m = n.abs();
            assert!(is_perfect_square(m * m));
        }
    }

    #[test]
    fn primality_examples() {
        assert!(is_prime(13));
        assert!(!is_prime(1));
        assert!(!is_prime(0));
        assert!(!is_prime(-7));
        assert!(is_prime((1i128 << 61) - 1));
        assert!(!is_prime((1i128 << 61) + 1));
        assert_eq!(next_prime(13), 17);
        assert_eq!(next_prime(1), 2);
    }

    #[test]
    fn factors_big_semiprime() {
        // Two primes past the trial-division bound force the rho stage.
        let p = 1_000_003i128;
        let q = 1_000_033i128;
        let f = factor(p * q).unwrap();
        assert_eq!(f.factors, vec![(p as u128, 1), (q as u128, 1)]);
        assert!(is_squarefree(p * q));
        assert!(!is_squarefree(p * p * q));
    }

    #[test]
    fn divisor_enumeration() {
        assert_eq!(divisors(12).unwrap(), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(-8).unwrap(), vec![1, 2, 4, 8]);
        assert_eq!(divisors(1).unwrap(), vec![1]);
    }
}
