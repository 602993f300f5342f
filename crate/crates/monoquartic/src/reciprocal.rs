//! Closed-form classification of reciprocal quartics
//! `f(x) = x^4 + A*x^3 + B*x^2 + A*x + 1`.
//!
//! Everything is driven by the invariants
//!
//! ```text
//! W1 = B + 2 - 2A,   W2 = B + 2 + 2A,   W3 = A^2 - 4B + 8,
//! W  = W1*W2*W3,     disc(f) = W1*W2*W3^2,
//! ```
//!
//! which decide irreducibility (for `A*B != 0`, reducible iff `W3` is a
//! square), monogenicity (squarefreeness of the `W_i` plus residue conditions
//! on `(A, B) mod 4`), and the Galois group of an irreducible member (`C4`
//! iff `W` is a square, `V4` iff `W1*W2` is a square, `D4` otherwise).
//! Monogenic members with `A*B != 0` split into five parity/squareness
//! families `F1..F5`. Every closed form here has an independent generic
//! oracle elsewhere in the crate; the campaigns in `survey` compare the two
//! on exhaustive grids.

use std::fmt;

use num_bigint::BigInt;

use crate::dedekind::MonogenicityVerdict;
use crate::error::{Error, Result};
use crate::galois::QuarticGaloisClass;
use crate::numtheory::{self, is_perfect_square, is_squarefree, sqrt_exact};
use crate::polyint::{canonical_cmp, IntPoly, IrreducibilityVerdict};

/// Coefficient bound under which every derived invariant (including the
/// discriminant `W1*W2*W3^2`) fits in an `i128`.
pub const COEFF_LIMIT: i64 = 1_000_000;

/// The pair `(A, B)` of a reciprocal quartic `x^4 + A*x^3 + B*x^2 + A*x + 1`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ReciprocalQuartic {
    a: i64,
    b: i64,
}

impl ReciprocalQuartic {
    pub fn new(a: i64, b: i64) -> Result<Self> {
        if a.abs() > COEFF_LIMIT || b.abs() > COEFF_LIMIT {
            return Err(Error::CoefficientOutOfRange { max: COEFF_LIMIT });
        }
        Ok(ReciprocalQuartic { a, b })
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    /// The polynomial `x^4 + A*x^3 + B*x^2 + A*x + 1`.
    pub fn expand(&self) -> IntPoly {
        IntPoly::from_i64(&[1, self.a, self.b, self.a, 1])
    }

    /// `(A, B) -> (-A, B)`; generates the conjugate (hence equal) field,
    /// swaps `W1` and `W2`, and preserves `W`, the discriminant, the
    /// monogenicity verdict, the Galois class and the family.
    pub fn mirror(&self) -> ReciprocalQuartic {
        ReciprocalQuartic {
            a: -self.a,
            b: self.b,
        }
    }
}

impl fmt::Display for ReciprocalQuartic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(A={}, B={})", self.a, self.b)
    }
}

/// Derived invariants of a reciprocal quartic.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct WSet {
    pub w1: i128,
    pub w2: i128,
    pub w3: i128,
    pub w: i128,
    pub disc: i128,
}

pub fn invariants(q: &ReciprocalQuartic) -> WSet {
    let a = q.a as i128;
    let b = q.b as i128;
    let w1 = b + 2 - 2 * a;
    let w2 = b + 2 + 2 * a;
    let w3 = a * a - 4 * b + 8;
    let w = w1 * w2 * w3;
    WSet {
        w1,
        w2,
        w3,
        w,
        disc: w * w3,
    }
}

fn sorted_split(q1: IntPoly, q2: IntPoly) -> IrreducibilityVerdict {
    if canonical_cmp(&q1, &q2) == std::cmp::Ordering::Greater {
        IrreducibilityVerdict::QuadraticSplit(q2, q1)
    } else {
        IrreducibilityVerdict::QuadraticSplit(q1, q2)
    }
}

/// Irreducibility over Q by coefficient conditions alone.
///
/// `x^4 + 1` is irreducible; for `A = 0, B != 0` the polynomial is reducible
/// iff one of `-B-2`, `-B+2`, `B^2-4` is a square; for `B = 0` it is
/// reducible iff `A = +-1`; for `A*B != 0` it is reducible iff `W3` is a
/// square, and then `x^2 + a*x + 1` with `a = (A +- sqrt(W3))/2` gives the
/// explicit factorization. Linear factors (`f(-1) = W1 = 0` or
/// `f(1) = W2 = 0`) are reported first, matching the generic quartic test.
pub fn irreducible_closed_form(q: &ReciprocalQuartic) -> IrreducibilityVerdict {
    let ws = invariants(q);
    let (a, b) = (q.a as i128, q.b as i128);
    if a == 0 && b == 0 {
        return IrreducibilityVerdict::Irreducible;
    }
    if ws.w1 == 0 {
        return IrreducibilityVerdict::LinearFactor(BigInt::from(-1));
    }
    if ws.w2 == 0 {
        return IrreducibilityVerdict::LinearFactor(BigInt::from(1));
    }
    if a == 0 {
        if let Some(r) = sqrt_exact(-b - 2) {
            return sorted_split(
                IntPoly::new(vec![BigInt::from(-1), BigInt::from(r), BigInt::from(1)]),
                IntPoly::new(vec![BigInt::from(-1), BigInt::from(-r), BigInt::from(1)]),
            );
        }
        if let Some(r) = sqrt_exact(-b + 2) {
            return sorted_split(
                IntPoly::new(vec![BigInt::from(1), BigInt::from(r), BigInt::from(1)]),
                IntPoly::new(vec![BigInt::from(1), BigInt::from(-r), BigInt::from(1)]),
            );
        }
        if let Some(t) = sqrt_exact(b * b - 4) {
            let c = (b + t) / 2;
            let d = (b - t) / 2;
            return sorted_split(
                IntPoly::new(vec![BigInt::from(c), BigInt::from(0), BigInt::from(1)]),
                IntPoly::new(vec![BigInt::from(d), BigInt::from(0), BigInt::from(1)]),
            );
        }
        return IrreducibilityVerdict::Irreducible;
    }
    if b == 0 {
        // A = +-1 already produced a linear factor above (W1 or W2 is 0).
        return IrreducibilityVerdict::Irreducible;
    }
    if let Some(s) = sqrt_exact(ws.w3) {
        // W3 = A^2 (mod 4) forces s = A (mod 2), so both halves are integers.
        let u = (a + s) / 2;
        let v = (a - s) / 2;
        return sorted_split(
            IntPoly::new(vec![BigInt::from(1), BigInt::from(u), BigInt::from(1)]),
            IntPoly::new(vec![BigInt::from(1), BigInt::from(v), BigInt::from(1)]),
        );
    }
    IrreducibilityVerdict::Irreducible
}

/// Smallest prime whose square divides `v`, if any.
fn first_square_prime(v: i128) -> Option<u64> {
    debug_assert!(v != 0);
    numtheory::factor(v)
        .ok()?
        .factors
        .into_iter()
        .find(|&(_, e)| e >= 2)
        .map(|(p, _)| u64::try_from(p).expect("square prime fits u64"))
}

const RES_EVEN_EVEN: [(i64, i64); 2] = [(0, 0), (2, 0)];
const RES_EVEN_ODD: [(i64, i64); 2] = [(0, 3), (2, 1)];
const RES_ODD_EVEN: [(i64, i64); 2] = [(1, 2), (3, 2)];
const RES_ODD_ODD: [(i64, i64); 4] = [(1, 1), (1, 3), (3, 1), (3, 3)];

/// Monogenicity by coefficient conditions.
///
/// For `B = 0` (and `A` not in `{0, +-1}`): monogenic iff `2 | A` and
/// `A - 1`, `A + 1`, `(A/2)^2 + 2` are all squarefree. For `A*B != 0` with
/// `W3` not a square: monogenic iff `W1` and `W2` are squarefree and the
/// parity-dependent condition holds — `W3/4` squarefree plus
/// `(A mod 4, B mod 4)` membership when `2 | A`, `W3` squarefree plus
/// membership otherwise. The row `A = 0, B != 0` is not covered and is
/// reported as an error. Reducible inputs yield `Reducible`.
///
/// When the verdict is `NotMonogenic` the witness is the smallest prime at
/// which a condition fails; that prime divides the index, which the
/// campaigns verify against the Dedekind engine report by report.
pub fn monogenic_closed_form(q: &ReciprocalQuartic) -> Result<MonogenicityVerdict> {
    if q.a == 0 {
        return Err(Error::UnsupportedCoefficientRow);
    }
    if !irreducible_closed_form(q).is_irreducible() {
        return Ok(MonogenicityVerdict::Reducible);
    }
    let ws = invariants(q);
    let a = q.a as i128;
    let mut failures: Vec<u64> = Vec::new();
    if q.b == 0 {
        if a % 2 != 0 {
            failures.push(2);
        } else {
            for v in [a - 1, a + 1, (a / 2) * (a / 2) + 2] {
                if let Some(p) = first_square_prime(v) {
                    failures.push(p);
                }
            }
        }
    } else {
        for v in [ws.w1, ws.w2] {
            if let Some(p) = first_square_prime(v) {
                failures.push(p);
            }
        }
        let residue = (q.a.rem_euclid(4), q.b.rem_euclid(4));
        let (w3_value, members): (i128, &[(i64, i64)]) = match (q.a % 2 == 0, q.b % 2 == 0) {
            (true, true) => (ws.w3 / 4, &RES_EVEN_EVEN),
            (true, false) => (ws.w3 / 4, &RES_EVEN_ODD),
            (false, true) => (ws.w3, &RES_ODD_EVEN),
            (false, false) => (ws.w3, &RES_ODD_ODD),
        };
        if q.a % 2 == 0 {
            debug_assert_eq!(ws.w3 % 4, 0);
        }
        if let Some(p) = first_square_prime(w3_value) {
            failures.push(p);
        }
        if !members.contains(&residue) {
            failures.push(2);
        }
    }
    match failures.into_iter().min() {
        None => Ok(MonogenicityVerdict::Monogenic),
        Some(witness) => Ok(MonogenicityVerdict::NotMonogenic { witness }),
    }
}

/// Galois class of an irreducible reciprocal quartic by squareness of `W`
/// and `W1*W2`: `C4` iff `W` is a square, `V4` iff `W1*W2` is a square,
/// `D4` otherwise.
pub fn galois_closed_form(q: &ReciprocalQuartic) -> Result<QuarticGaloisClass> {
    if !irreducible_closed_form(q).is_irreducible() {
        return Err(Error::ReducibleInput);
    }
    let ws = invariants(q);
    if is_perfect_square(ws.w) {
        Ok(QuarticGaloisClass::C4)
    } else if is_perfect_square(ws.w1 * ws.w2) {
        Ok(QuarticGaloisClass::V4)
    } else {
        Ok(QuarticGaloisClass::D4)
    }
}

/// Partition of the monogenic members with `A*B != 0`, by parity of `(A, B)`
/// and, for odd `A*B`, by squareness of `W`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Family {
    F1,
    F2,
    F3,
    F4,
    F5,
    NotApplicable,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::F1 => "F1",
            Family::F2 => "F2",
            Family::F3 => "F3",
            Family::F4 => "F4",
            Family::F5 => "F5",
            Family::NotApplicable => "n/a",
        };
        write!(f, "{s}")
    }
}

pub fn family(q: &ReciprocalQuartic) -> Family {
    if q.a == 0 || q.b == 0 {
        return Family::NotApplicable;
    }
    match monogenic_closed_form(q) {
        Ok(MonogenicityVerdict::Monogenic) => {}
        _ => return Family::NotApplicable,
    }
    match (q.a % 2 == 0, q.b % 2 == 0) {
        (true, true) => Family::F1,
        (true, false) => Family::F2,
        (false, true) => Family::F3,
        (false, false) => {
            if is_perfect_square(invariants(q).w) {
                Family::F5
            } else {
                Family::F4
            }
        }
    }
}

/// Outcome of the discriminant distinctness test.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Distinctness {
    /// Different field discriminants, hence different fields.
    Distinct,
    /// Equal discriminants prove nothing either way.
    Inconclusive,
}

/// For monogenic polynomials the polynomial discriminant equals the field
/// discriminant, so different discriminants certify distinct fields.
pub fn distinct_by_discriminant(
    q1: &ReciprocalQuartic,
    q2: &ReciprocalQuartic,
) -> Result<Distinctness> {
    for q in [q1, q2] {
        if monogenic_closed_form(q)? != MonogenicityVerdict::Monogenic {
            return Err(Error::NotMonogenicInput);
        }
    }
    if invariants(q1).disc != invariants(q2).disc {
        Ok(Distinctness::Distinct)
    } else {
        Ok(Distinctness::Inconclusive)
    }
}

/// Parametric family members with a squarefreeness certificate:
///
/// * family 1, `k >= 3`: `(A, B) = (2k, 4)`, certificate `(3-2k)(3+2k)(k^2-2)`
/// * family 2, `k >= 2`: `(A, B) = (2k, 3)`, certificate `(5-4k)(4k+5)(k^2-1)`
/// * family 3, `k >= 5`: `(A, B) = (2k+1, 10)`, certificate `(5-2k)(7+2k)(4k^2+4k-31)`
/// * family 4, `k >= 1`: `(A, B) = (2k+1, 1)`, certificate `W1*W2*W3`
///
/// Returns the member when the certificate is squarefree, `None` otherwise.
/// Admissible members are re-checked against [`family`]; a divergence is an
/// error, never silently patched.
pub fn family_witness(family_index: u8, k: i64) -> Result<Option<ReciprocalQuartic>> {
    let min = match family_index {
        1 => 3,
        2 => 2,
        3 => 5,
        4 => 1,
        other => return Err(Error::InvalidFamilyIndex(other)),
    };
    if k < min {
        return Err(Error::KBelowBound { k, min });
    }
    let kk = k as i128;
    let (a, b, certificate) = match family_index {
        1 => (2 * k, 4, (3 - 2 * kk) * (3 + 2 * kk) * (kk * kk - 2)),
        2 => (2 * k, 3, (5 - 4 * kk) * (4 * kk + 5) * (kk * kk - 1)),
        3 => (
            2 * k + 1,
            10,
            (5 - 2 * kk) * (7 + 2 * kk) * (4 * kk * kk + 4 * kk - 31),
        ),
        4 => {
            let w1 = 1 - 4 * kk;
            let w2 = 4 * kk + 5;
            let w3 = 4 * kk * kk + 4 * kk + 5;
            (2 * k + 1, 1, w1 * w2 * w3)
        }
        _ => unreachable!(),
    };
    if !is_squarefree(certificate) {
        return Ok(None);
    }
    let q = ReciprocalQuartic::new(a, b)?;
    let expected = match family_index {
        1 => Family::F1,
        2 => Family::F2,
        3 => Family::F3,
        4 => Family::F4,
        _ => unreachable!(),
    };
    let found = family(&q);
    if found != expected {
        return Err(Error::WitnessFamilyDivergence {
            k,
            expected: expected.to_string(),
            found: found.to_string(),
        });
    }
    Ok(Some(q))
}
