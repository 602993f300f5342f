//! Galois groups of irreducible monic quartics over Q.
//!
//! The classification goes through the resolvent cubic
//! `R(y) = y^3 - c*y^2 + (b*d - 4e)*y - (b^2*e - 4*c*e + d^2)` of
//! `x^4 + b*x^3 + c*x^2 + d*x + e` together with the squareness of the
//! discriminant; the C4/D4 cases are separated by testing whether two
//! auxiliary quadratics split over the quadratic extension cut out by the
//! discriminant. A Frobenius audit is available as an advisory sanity check:
//! factorization patterns modulo unramified primes are cycle types of the
//! claimed group, so any pattern outside the group's cycle types is a
//! contradiction.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::numtheory;
use crate::polyint::IntPoly;
use crate::polymod;

/// Galois group of an irreducible quartic, as a transitive subgroup of S4.
/// `V4` is the Klein four-group C2 x C2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuarticGaloisClass {
    S4,
    A4,
    D4,
    C4,
    V4,
}

impl fmt::Display for QuarticGaloisClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            QuarticGaloisClass::S4 => "S4",
            QuarticGaloisClass::A4 => "A4",
            QuarticGaloisClass::D4 => "D4",
            QuarticGaloisClass::C4 => "C4",
            QuarticGaloisClass::V4 => "V4",
        };
        write!(f, "{s}")
    }
}

fn require_monic_quartic(q: &IntPoly) -> Result<()> {
    if !q.is_monic() {
        return Err(Error::NonMonic);
    }
    if q.degree() != Some(4) {
        return Err(Error::WrongDegree {
            expected: 4,
            found: q.degree().unwrap_or(0),
        });
    }
    Ok(())
}

/// Resolvent cubic of a monic quartic.
pub fn resolvent_cubic(q: &IntPoly) -> Result<IntPoly> {
    require_monic_quartic(q)?;
    let b = q.coeff(3);
    let c = q.coeff(2);
    let d = q.coeff(1);
    let e = q.coeff(0);
    let c0 = -(&b * &b * &e - BigInt::from(4) * &c * &e + &d * &d);
    let c1 = &b * &d - BigInt::from(4) * &e;
    let c2 = -c;
    Ok(IntPoly::new(vec![c0, c1, c2, BigInt::from(1)]))
}

/// Rational roots of the resolvent, tolerating a zero constant term
/// (an irreducible quartic has a separable resolvent, so the root 0 is
/// simple when it occurs).
fn resolvent_rational_roots(r: &IntPoly) -> Result<Vec<BigInt>> {
    let mut roots = Vec::new();
    let mut rest = r.clone();
    if rest.constant().is_zero() {
        roots.push(BigInt::zero());
        rest = rest.exact_div(&IntPoly::x())?;
    }
    if rest.degree().unwrap_or(0) > 0 {
        roots.extend(rest.rational_roots_monic()?);
    }
    roots.sort();
    Ok(roots)
}

/// True iff the monic quadratic `x^2 + p*x + r` splits over `Q(sqrt(disc))`:
/// its own discriminant `p^2 - 4r` is zero, a perfect square, or a square
/// multiple of `disc`.
fn splits_over_quadratic_ext(p: &BigInt, r: &BigInt, disc: &BigInt) -> bool {
    let t = p * p - BigInt::from(4) * r;
    if t.is_zero() {
        return true;
    }
    numtheory::is_perfect_square_big(&t) || numtheory::is_perfect_square_big(&(disc * &t))
}

/// Galois group of an irreducible monic quartic.
pub fn galois_group(q: &IntPoly) -> Result<QuarticGaloisClass> {
    require_monic_quartic(q)?;
    if q.constant().is_zero() || !q.quartic_irreducible()?.is_irreducible() {
        return Err(Error::ReducibleInput);
    }
    let disc = q.discriminant()?;
    debug_assert!(!disc.is_zero());
    let resolvent = resolvent_cubic(q)?;
    let roots = resolvent_rational_roots(&resolvent)?;
    match roots.len() {
        0 => {
            if numtheory::is_perfect_square_big(&disc) {
                Ok(QuarticGaloisClass::A4)
            } else {
                Ok(QuarticGaloisClass::S4)
            }
        }
        3 => Ok(QuarticGaloisClass::V4),
        1 => {
            let beta = &roots[0];
            let b = q.coeff(3);
            let c = q.coeff(2);
            let e = q.coeff(0);
            let first = splits_over_quadratic_ext(&-beta, &e, &disc);
            let second = splits_over_quadratic_ext(&b, &(&c - beta), &disc);
            if first && second {
                Ok(QuarticGaloisClass::C4)
            } else {
                Ok(QuarticGaloisClass::D4)
            }
        }
        n => unreachable!("separable cubic with {n} rational roots"),
    }
}

/// Degree multisets realizable as cycle types of the group acting on the
/// four roots.
fn allowed_patterns(g: QuarticGaloisClass) -> &'static [&'static [usize]] {
    match g {
        QuarticGaloisClass::C4 => &[&[1, 1, 1, 1], &[2, 2], &[4]],
        QuarticGaloisClass::V4 => &[&[1, 1, 1, 1], &[2, 2]],
        QuarticGaloisClass::D4 => &[&[1, 1, 1, 1], &[2, 1, 1], &[2, 2], &[4]],
        QuarticGaloisClass::A4 => &[&[1, 1, 1, 1], &[2, 2], &[3, 1]],
        QuarticGaloisClass::S4 => &[&[1, 1, 1, 1], &[2, 1, 1], &[2, 2], &[3, 1], &[4]],
    }
}

/// Frobenius audit report. Advisory: contradictions indicate a bug, but the
/// audit never changes a verdict.
#[derive(Clone, Debug)]
pub struct FrobeniusAudit {
    pub group: QuarticGaloisClass,
    /// `(prime, degree pattern)` for each sampled unramified prime.
    pub samples: Vec<(u64, Vec<usize>)>,
    pub contradictions: Vec<(u64, Vec<usize>)>,
}

/// Factors `q` modulo the first `sample` primes not dividing `disc(q)` and
/// flags every degree pattern outside the claimed group's cycle types.
pub fn frobenius_audit(q: &IntPoly, sample: usize) -> Result<FrobeniusAudit> {
    let group = galois_group(q)?;
    let disc = q.discriminant()?;
    let mut samples = Vec::with_capacity(sample);
    let mut contradictions = Vec::new();
    let allowed = allowed_patterns(group);
    let mut p = 1u64;
    while samples.len() < sample {
        p = numtheory::next_prime(p);
        if (&disc % BigInt::from(p)).is_zero() {
            continue;
        }
        let pattern = polymod::frobenius_pattern(q, p)?;
        if !allowed.contains(&pattern.as_slice()) {
            contradictions.push((p, pattern.clone()));
        }
        samples.push((p, pattern));
    }
    Ok(FrobeniusAudit {
        group,
        samples,
        contradictions,
    })
}

/// `q(-x)` renormalized monic; generates the conjugate field.
pub fn mirror_quartic(q: &IntPoly) -> Result<IntPoly> {
    require_monic_quartic(q)?;
    Ok(IntPoly::new(
        (0..=4)
            .map(|i| {
                let c = q.coeff(i);
                if i % 2 == 1 {
                    -c
                } else {
                    c
                }
            })
            .collect(),
    ))
}
