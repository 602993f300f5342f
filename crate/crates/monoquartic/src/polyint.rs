//! Dense polynomials with arbitrary-precision integer coefficients.
//!
//! Coefficients are stored ascending: index `i` holds the coefficient of
//! `x^i`, with no trailing zeros, so equal polynomials have identical
//! representations. Degrees stay tiny here (quartics and their byproducts),
//! so the dense layout and Sylvester-matrix resultants are the right tools.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::numtheory;

#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    pub fn is_monic(&self) -> bool {
        !self.is_zero() && self.leading().is_one()
    }

    pub fn constant(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        IntPoly::new(out)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - other.coeff(i));
        }
        IntPoly::new(out)
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); k];
        out.extend(self.coeffs.iter().cloned());
        IntPoly::new(out)
    }

    /// Horner evaluation.
    pub fn eval(&self, t: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Exact quotient in Z[x]; errors unless `q` divides `self` exactly.
    pub fn exact_div(&self, q: &IntPoly) -> Result<IntPoly> {
        if q.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let dq = q.degree().unwrap();
        let lq = q.leading();
        let mut rem = self.clone();
        let mut quot = vec![BigInt::zero(); self.coeffs.len()];
        while !rem.is_zero() && rem.degree().unwrap() >= dq {
            let dr = rem.degree().unwrap();
            let (c, r) = rem.leading().div_rem(lq);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            quot[dr - dq] = c.clone();
            rem = rem.sub(&q.shift(dr - dq).scale(&c));
        }
        if !rem.is_zero() {
            return Err(Error::InexactDivision);
        }
        Ok(IntPoly::new(quot))
    }

    fn exact_scalar_div(&self, d: &BigInt) -> Result<IntPoly> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            out.push(q);
        }
        Ok(IntPoly::new(out))
    }

    /// Resultant via the Sylvester matrix, evaluated with fraction-free
    /// (Bareiss) elimination.
    pub fn resultant(&self, other: &IntPoly) -> BigInt {
        if self.is_zero() || other.is_zero() {
            return BigInt::zero();
        }
        let dp = self.degree().unwrap();
        let dq = other.degree().unwrap();
        if dp == 0 {
            return bpow(self.leading(), dq);
        }
        if dq == 0 {
            return bpow(other.leading(), dp);
        }
        let n = dp + dq;
        let mut m = vec![vec![BigInt::zero(); n]; n];
        for i in 0..dq {
            for j in 0..=dp {
                m[i][i + j] = self.coeffs[dp - j].clone();
            }
        }
        for i in 0..dp {
            for j in 0..=dq {
                m[dq + i][i + j] = other.coeffs[dq - j].clone();
            }
        }
        det_bareiss(m)
    }

    /// Resultant via the subresultant polynomial remainder sequence.
    /// Independent route from [`IntPoly::resultant`], kept for cross-checks.
    pub fn resultant_prs(&self, other: &IntPoly) -> BigInt {
        if self.is_zero() || other.is_zero() {
            return BigInt::zero();
        }
        let (mut a, mut b, mut sign) = if self.degree() >= other.degree() {
            (self.clone(), other.clone(), 1i8)
        } else {
            let flip = (self.degree().unwrap() * other.degree().unwrap()) % 2 == 1;
            (other.clone(), self.clone(), if flip { -1 } else { 1 })
        };
        if a.degree().unwrap() == 0 {
            return BigInt::one();
        }
        if b.degree().unwrap() == 0 {
            let r = bpow(b.leading(), a.degree().unwrap());
            return if sign < 0 { -r } else { r };
        }
        let mut g = BigInt::one();
        let mut h = BigInt::one();
        loop {
            let da = a.degree().unwrap();
            let db = b.degree().unwrap();
            let d = da - db;
            if da % 2 == 1 && db % 2 == 1 {
                sign = -sign;
            }
            let r = pseudo_rem(&a, &b);
            a = b;
            let denom = &g * bpow(&h, d);
            b = r
                .exact_scalar_div(&denom)
                .expect("subresultant division is exact");
            g = a.leading().clone();
            h = if d == 0 {
                h
            } else {
                let (q, rem) = bpow(&g, d).div_rem(&bpow(&h, d - 1));
                debug_assert!(rem.is_zero());
                q
            };
            if b.is_zero() {
                return BigInt::zero();
            }
            if b.degree().unwrap() == 0 {
                let da = a.degree().unwrap();
                let (q, rem) = bpow(b.leading(), da).div_rem(&bpow(&h, da - 1));
                debug_assert!(rem.is_zero());
                return if sign < 0 { -q } else { q };
            }
        }
    }

    /// Discriminant with the standard sign convention
    /// `disc(p) = (-1)^(n(n-1)/2) * Res(p, p') / lc(p)`, so `disc(x^2+1) = -4`.
    pub fn discriminant(&self) -> Result<BigInt> {
        let n = self.degree().ok_or(Error::DegreeTooSmall { min: 2 })?;
        if n < 2 {
            return Err(Error::DegreeTooSmall { min: 2 });
        }
        let res = self.resultant(&self.derivative());
        let (q, r) = res.div_rem(self.leading());
        debug_assert!(r.is_zero());
        Ok(if (n * (n - 1) / 2) % 2 == 1 { -q } else { q })
    }

    /// Integer roots of a monic polynomial with nonzero constant term;
    /// by the rational root theorem these are all of its rational roots.
    pub fn rational_roots_monic(&self) -> Result<Vec<BigInt>> {
        if !self.is_monic() {
            return Err(Error::NonMonic);
        }
        if self.constant().is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let c0 = self
            .constant()
            .abs()
            .to_i128()
            .ok_or(Error::ValueTooLarge)?;
        let mut roots = Vec::new();
        for d in numtheory::divisors(c0)? {
            for r in [BigInt::from(d), BigInt::from(-d)] {
                if self.eval(&r).is_zero() {
                    roots.push(r);
                }
            }
        }
        roots.sort();
        Ok(roots)
    }

    /// Irreducibility over Q for a monic quartic with nonzero constant term.
    ///
    /// Linear factors are searched first; quadratic factorizations are found
    /// by enumerating all constant-term pairs `(b0, d0)` with `b0*d0 = e` and
    /// solving the remaining coefficient equations over Z. When several
    /// factorizations exist the canonically smallest pair is reported.
    pub fn quartic_irreducible(&self) -> Result<IrreducibilityVerdict> {
        if !self.is_monic() {
            return Err(Error::NonMonic);
        }
        if self.degree() != Some(4) {
            return Err(Error::WrongDegree {
                expected: 4,
                found: self.degree().unwrap_or(0),
            });
        }
        if self.constant().is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let roots = self.rational_roots_monic()?;
        if let Some(r) = roots.first() {
            return Ok(IrreducibilityVerdict::LinearFactor(r.clone()));
        }
        let e = self.constant().to_i128().ok_or(Error::ValueTooLarge)?;
        let c3 = self.coeff(3);
        let c2 = self.coeff(2);
        let c1 = self.coeff(1);
        let two = BigInt::from(2);
        let mut splits: Vec<(IntPoly, IntPoly)> = Vec::new();
        let push = |u: BigInt, b0: i128, v: BigInt, d0: i128, splits: &mut Vec<_>| {
            let q1 = IntPoly::new(vec![BigInt::from(b0), u, BigInt::one()]);
            let q2 = IntPoly::new(vec![BigInt::from(d0), v, BigInt::one()]);
            let pair = if canonical_cmp(&q1, &q2) == Ordering::Greater {
                (q2, q1)
            } else {
                (q1, q2)
            };
            if !splits.contains(&pair) {
                splits.push(pair);
            }
        };
        for dv in numtheory::divisors(e.abs())? {
            for b0 in [dv, -dv] {
                let d0 = e / b0;
                let b0_big = BigInt::from(b0);
                let d0_big = BigInt::from(d0);
                let prod_target = &c2 - &b0_big - &d0_big;
                if b0 != d0 {
                    let num = &c1 - &c3 * &b0_big;
                    let den = &d0_big - &b0_big;
                    let (u, rem) = num.div_rem(&den);
                    if !rem.is_zero() {
                        continue;
                    }
                    let v = &c3 - &u;
                    if &u * &v == prod_target {
                        push(u, b0, v, d0, &mut splits);
                    }
                } else {
                    if &c3 * &b0_big != c1 {
                        continue;
                    }
                    let disc = &c3 * &c3 - BigInt::from(4) * &prod_target;
                    if disc.is_negative() {
                        continue;
                    }
                    let s = disc.sqrt();
                    if &s * &s != disc {
                        continue;
                    }
                    let (u, rem) = (&c3 + &s).div_rem(&two);
                    if !rem.is_zero() {
                        continue;
                    }
                    let v = &c3 - &u;
                    push(u, b0, v, d0, &mut splits);
                }
            }
        }
        if splits.is_empty() {
            return Ok(IrreducibilityVerdict::Irreducible);
        }
        splits.sort_by(|(a1, a2), (b1, b2)| {
            canonical_cmp(a1, b1).then_with(|| canonical_cmp(a2, b2))
        });
        let (q1, q2) = splits.swap_remove(0);
        debug_assert_eq!(q1.mul(&q2), *self);
        Ok(IrreducibilityVerdict::QuadraticSplit(q1, q2))
    }
}

/// Verdict of the monic-quartic irreducibility test.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum IrreducibilityVerdict {
    Irreducible,
    LinearFactor(BigInt),
    QuadraticSplit(IntPoly, IntPoly),
}

impl IrreducibilityVerdict {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, IrreducibilityVerdict::Irreducible)
    }
}

/// Total order on polynomials: degree first, then coefficients from the
/// constant term upward. Used wherever a deterministic representative is
/// needed.
pub fn canonical_cmp(a: &IntPoly, b: &IntPoly) -> Ordering {
    a.coeffs
        .len()
        .cmp(&b.coeffs.len())
        .then_with(|| a.coeffs.cmp(&b.coeffs))
}

fn bpow(b: &BigInt, e: usize) -> BigInt {
    let mut r = BigInt::one();
    for _ in 0..e {
        r *= b;
    }
    r
}

fn pseudo_rem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let db = b.degree().unwrap();
    let lb = b.leading().clone();
    let mut e = (a.degree().unwrap() - db + 1) as i64;
    let mut r = a.clone();
    while !r.is_zero() && r.degree().unwrap() >= db {
        let shift = r.degree().unwrap() - db;
        let lr = r.leading().clone();
        r = r.scale(&lb).sub(&b.shift(shift).scale(&lr));
        e -= 1;
    }
    debug_assert!(e >= 0);
    r.scale(&bpow(&lb, e as usize))
}

fn det_bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i8;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero());
                m[i][j] = q;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

impl std::ops::Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::add(self, rhs)
    }
}

impl std::ops::Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::sub(self, rhs)
    }
}

impl std::ops::Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::mul(self, rhs)
    }
}

impl fmt::Display for IntPoly {
    /// Renders descending powers with explicit signs, omitting zero terms and
    /// unit coefficients: `x^4 + 2*x^3 + 2*x + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if i == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if i == 1 {
                    write!(f, "x")?;
                } else {
                    write!(f, "x^{i}")?;
                }
            }
        }
        Ok(())
    }
}

impl FromStr for IntPoly {
    type Err = Error;

    /// Parses the same grammar that `Display` produces.
    fn from_str(s: &str) -> Result<IntPoly> {
        const MAX_EXP: usize = 10_000;
        let bad = |msg: &str| Error::PolyParse(msg.to_string());
        let chars: Vec<char> = s.chars().collect();
        let mut pos = 0usize;
        let skip_ws = |pos: &mut usize| {
            while *pos < chars.len() && chars[*pos].is_whitespace() {
                *pos += 1;
            }
        };
        let mut coeffs: Vec<BigInt> = Vec::new();
        let mut any = false;
        skip_ws(&mut pos);
        if pos == chars.len() {
            return Err(bad("empty input"));
        }
        while pos < chars.len() {
            skip_ws(&mut pos);
            let mut negative = false;
            if any {
                match chars.get(pos) {
                    Some('+') => pos += 1,
                    Some('-') => {
                        negative = true;
                        pos += 1;
                    }
                    _ => return Err(bad("expected '+' or '-' between terms")),
                }
                skip_ws(&mut pos);
            } else if chars.get(pos) == Some(&'-') {
                negative = true;
                pos += 1;
                skip_ws(&mut pos);
            }
            // coefficient
            let mut digits = String::new();
            while pos < chars.len() && chars[pos].is_ascii_digit() {
                digits.push(chars[pos]);
                pos += 1;
            }
            let mut coeff = if digits.is_empty() {
                None
            } else {
                Some(BigInt::from_str(&digits).map_err(|e| bad(&e.to_string()))?)
            };
            skip_ws(&mut pos);
            if coeff.is_some() && chars.get(pos) == Some(&'*') {
                pos += 1;
                skip_ws(&mut pos);
                if chars.get(pos) != Some(&'x') {
                    return Err(bad("expected 'x' after '*'"));
                }
            }
            // variable part
            let exp = if chars.get(pos) == Some(&'x') {
                pos += 1;
                if chars.get(pos) == Some(&'^') {
                    pos += 1;
                    let mut ed = String::new();
                    while pos < chars.len() && chars[pos].is_ascii_digit() {
                        ed.push(chars[pos]);
                        pos += 1;
                    }
                    if ed.is_empty() {
                        return Err(bad("expected exponent after '^'"));
                    }
                    let e: usize = ed.parse().map_err(|_| bad("exponent too large"))?;
                    if e > MAX_EXP {
                        return Err(bad("exponent too large"));
                    }
                    e
                } else {
                    1
                }
            } else {
                0
            };
            if coeff.is_none() && exp == 0 {
                return Err(bad("expected a term"));
            }
            let mut c = coeff.take().unwrap_or_else(BigInt::one);
            if negative {
                c = -c;
            }
            if coeffs.len() <= exp {
                coeffs.resize(exp + 1, BigInt::zero());
            }
            coeffs[exp] += c;
            any = true;
            skip_ws(&mut pos);
        }
        if !any {
            return Err(bad("empty input"));
        }
        Ok(IntPoly::new(coeffs))
    }
}
