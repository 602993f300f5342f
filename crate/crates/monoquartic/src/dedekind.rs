//! Dedekind's index criterion and the monogenicity oracle built on it.
//!
//! For a monic `T` in Z[x] and a prime `p`, write `Tbar = prod(tau_i^e_i)` in
//! F_p[x], let `h1` be a monic lift of `prod(tau_i)` (each distinct factor
//! once), `h2` a monic lift of `Tbar / h1bar`, and `F = (h1*h2 - T) / p`,
//! which is exact in Z[x]. Then `p` divides the index `[Z_K : Z[theta]]` if
//! and only if `gcd(Fbar, h1bar, h2bar) != 1` in F_p[x]. The verdict does not
//! depend on the choice of lifts; the engine uses canonical lifts (residues
//! in `[0, p)`) so reports are reproducible, and the lift choice is pluggable
//! for testing.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::numtheory;
use crate::polyint::IntPoly;
use crate::polymod::{self, ModPoly};

/// Per-prime trace of the index criterion.
#[derive(Clone, Debug)]
pub struct DedekindReport {
    pub prime: u64,
    /// Factorization of `T` modulo `prime`.
    pub factors: Vec<(ModPoly, u32)>,
    pub h1: IntPoly,
    pub h2: IntPoly,
    /// `(h1 * h2 - T) / prime`, exact in Z[x].
    pub f_poly: IntPoly,
    /// `gcd(Fbar, h1bar, h2bar)`, monic.
    pub gcd_poly: ModPoly,
    pub p_divides_index: bool,
}

impl DedekindReport {
    /// JSON rendering with polynomial text fields, used by `--explain`.
    pub fn to_json(&self) -> String {
        let factors: Vec<String> = self
            .factors
            .iter()
            .map(|(f, e)| format!("{{\"factor\":\"{f}\",\"exponent\":{e}}}"))
            .collect();
        format!(
            "{{\"prime\":{},\"factors\":[{}],\"h1\":\"{}\",\"h2\":\"{}\",\"F\":\"{}\",\"gcd\":\"{}\",\"p_divides_index\":{}}}",
            self.prime,
            factors.join(","),
            self.h1,
            self.h2,
            self.f_poly,
            self.gcd_poly,
            self.p_divides_index
        )
    }
}

/// Runs the index criterion at `p` with canonical lifts.
pub fn dedekind_at(t: &IntPoly, p: u64) -> Result<DedekindReport> {
    dedekind_at_with(t, p, |g| g.lift())
}

/// Runs the index criterion at `p` with a caller-supplied monic lift.
/// Any lift congruent to its argument mod `p` yields the same verdict.
pub fn dedekind_at_with(
    t: &IntPoly,
    p: u64,
    mut lift: impl FnMut(&ModPoly) -> IntPoly,
) -> Result<DedekindReport> {
    if !t.is_monic() {
        return Err(Error::NonMonic);
    }
    if t.degree().unwrap() < 2 {
        return Err(Error::DegreeTooSmall { min: 2 });
    }
    let tbar = polymod::reduce(t, p)?;
    let fact = polymod::factorize(&tbar)?;
    let mut checked_lift = |g: &ModPoly| -> IntPoly {
        let lifted = lift(g);
        assert!(lifted.is_monic(), "lift must be monic");
        assert_eq!(
            polymod::reduce(&lifted, p).unwrap(),
            *g,
            "lift must reduce back to its argument"
        );
        lifted
    };
    let mut h1 = IntPoly::one();
    for (tau, _) in &fact.factors {
        h1 = h1.mul(&checked_lift(tau));
    }
    let h1bar = polymod::reduce(&h1, p)?;
    let (h2bar, rem) = tbar.div_rem(&h1bar);
    assert!(rem.is_zero(), "h1bar divides Tbar by construction");
    let h2 = checked_lift(&h2bar);
    let f_poly = h1
        .mul(&h2)
        .sub(t)
        .exact_div(&IntPoly::from_i64(&[p as i64]))
        .expect("h1*h2 - T is divisible by p");
    let fbar = polymod::reduce(&f_poly, p)?;
    let gcd_poly = polymod::gcd(&polymod::gcd(&fbar, &h1bar)?, &h2bar)?;
    let p_divides_index = gcd_poly.degree().unwrap_or(0) > 0;
    Ok(DedekindReport {
        prime: p,
        factors: fact.factors,
        h1,
        h2,
        f_poly,
        gcd_poly,
        p_divides_index,
    })
}

/// Monogenicity verdict for a monic quartic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonogenicityVerdict {
    Monogenic,
    /// `witness` is the smallest prime dividing the index.
    NotMonogenic { witness: u64 },
    Reducible,
}

/// Decides monogenicity of a monic quartic by testing the index criterion at
/// every prime whose square divides `disc(T)`. A prime that divides the
/// discriminant exactly once cannot divide the index (the index enters the
/// discriminant squared), so those are skipped.
pub fn monogenic_oracle(t: &IntPoly) -> Result<MonogenicityVerdict> {
    if !t.is_monic() {
        return Err(Error::NonMonic);
    }
    if t.degree() != Some(4) {
        return Err(Error::WrongDegree {
            expected: 4,
            found: t.degree().unwrap_or(0),
        });
    }
    if t.constant() == BigInt::from(0) {
        return Ok(MonogenicityVerdict::Reducible);
    }
    let disc = t.discriminant()?;
    if disc == BigInt::from(0) {
        return Ok(MonogenicityVerdict::Reducible);
    }
    if !t.quartic_irreducible()?.is_irreducible() {
        return Ok(MonogenicityVerdict::Reducible);
    }
    let disc = disc.to_i128().ok_or(Error::ValueTooLarge)?;
    for (p, e) in numtheory::factor(disc)?.factors {
        if e < 2 {
            continue;
        }
        let p = u64::try_from(p).map_err(|_| Error::ValueTooLarge)?;
        if dedekind_at(t, p)?.p_divides_index {
            return Ok(MonogenicityVerdict::NotMonogenic { witness: p });
        }
    }
    Ok(MonogenicityVerdict::Monogenic)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    /// x^4 + A x^3 + A x + 1
    fn trinomial_row(a: i64) -> IntPoly {
        ip(&[1, a, 0, a, 1])
    }

    #[test]
    fn report_examples() {
        let r = dedekind_at(&trinomial_row(2), 2).unwrap();
        assert!(!r.p_divides_index);
        let r = dedekind_at(&trinomial_row(3), 2).unwrap();
        assert!(r.p_divides_index);
        let r = dedekind_at(&ip(&[1, 0, 1]), 3).unwrap();
        assert!(!r.p_divides_index);
        assert!(dedekind_at(&ip(&[1, 0, 2]), 3).is_err());
        assert!(dedekind_at(&ip(&[1, 1]), 3).is_err());
        assert!(matches!(
            dedekind_at(&ip(&[1, 0, 1]), 4),
            Err(Error::CompositeModulus(4))
        ));
    }

    #[test]
    fn report_invariants_hold() {
        let t = trinomial_row(6);
        for p in [2u64, 3, 5, 7, 11] {
            let r = dedekind_at(&t, p).unwrap();
            // h1 * h2 = T (mod p) and F = (h1 h2 - T)/p exactly.
            let lhs = r.h1.mul(&r.h2).sub(&t);
            let back = r.f_poly.scale(&BigInt::from(p));
            assert_eq!(lhs, back);
            assert_eq!(
                r.p_divides_index,
                r.gcd_poly.degree().unwrap_or(0) > 0
            );
        }
    }

    #[test]
    fn explicit_f_values_on_the_b_zero_row() {
        // F(-1) = A - 1 at p = 2, for either parity of A.
        for a in -20i64..=20 {
            if a == 0 || a == 1 || a == -1 {
                continue;
            }
            let r = dedekind_at(&trinomial_row(a), 2).unwrap();
            assert_eq!(
                r.f_poly.eval(&BigInt::from(-1)),
                BigInt::from(a - 1),
                "A = {a}"
            );
        }
        // For odd p | A-1 with canonical lifts, F(-1) = 2(A-1)/p exactly.
        for a in [8i64, 22, 36, 10, 16, 46, -20, -6] {
            for (p, _) in numtheory::factor((a - 1) as i128).unwrap().factors {
                if p == 2 {
                    continue;
                }
                let p = p as u64;
                let r = dedekind_at(&trinomial_row(a), p).unwrap();
                assert_eq!(
                    r.f_poly.eval(&BigInt::from(-1)),
                    BigInt::from(2 * (a - 1) / p as i64),
                    "A = {a}, p = {p}"
                );
            }
        }
        // For odd p | A+1 the same value appears modulo p at x = 1.
        for a in [8i64, 20, 14, 26, -4, -10] {
            for (p, _) in numtheory::factor((a + 1) as i128).unwrap().factors {
                if p == 2 {
                    continue;
                }
                let p = p as u64;
                let r = dedekind_at(&trinomial_row(a), p).unwrap();
                let f1 = r.f_poly.eval(&BigInt::from(1));
                let expected = BigInt::from(-2 * (a + 1) / p as i64);
                assert_eq!(
                    (f1 - expected) % BigInt::from(p),
                    BigInt::from(0),
                    "A = {a}, p = {p}"
                );
            }
        }
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(
            monogenic_oracle(&ip(&[1, 1, 1, 1, 1])).unwrap(),
            MonogenicityVerdict::Monogenic
        );
        assert_eq!(
            monogenic_oracle(&ip(&[1, 8, 0, 8, 1])).unwrap(),
            MonogenicityVerdict::NotMonogenic { witness: 3 }
        );
        assert_eq!(
            monogenic_oracle(&ip(&[1, 2, 3, 2, 1])).unwrap(),
            MonogenicityVerdict::Reducible
        );
        // zero constant term: divisible by x
        assert_eq!(
            monogenic_oracle(&ip(&[0, 1, 0, 0, 1])).unwrap(),
            MonogenicityVerdict::Reducible
        );
        assert!(monogenic_oracle(&ip(&[1, 1, 1])).is_err());
    }

    #[test]
    fn lift_choice_does_not_change_the_verdict() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let primes = [2u64, 3, 5, 7, 11, 13, 17, 31, 101];
        let mut cases = 0;
        while cases < 500 {
            let t = IntPoly::new(
                (0..4)
                    .map(|_| BigInt::from(rng.random_range(-40i64..=40)))
                    .chain([BigInt::from(1)])
                    .collect(),
            );
            if t.degree() != Some(4) {
                continue;
            }
            let p = primes[rng.random_range(0..primes.len())];
            let canonical = dedekind_at(&t, p).unwrap();
            let mut shift_rng = ChaCha8Rng::seed_from_u64(cases as u64);
            let perturbed = dedekind_at_with(&t, p, |g| {
                let base = g.lift();
                let deg = g.degree().unwrap_or(0);
                let noise = IntPoly::new(
                    (0..deg)
                        .map(|_| BigInt::from(p as i64 * shift_rng.random_range(-3i64..=3)))
                        .collect(),
                );
                base.add(&noise)
            })
            .unwrap();
            assert_eq!(
                canonical.p_divides_index, perturbed.p_divides_index,
                "T = {t}, p = {p}"
            );
            cases += 1;
        }
    }
}
