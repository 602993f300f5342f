//! Property tests over the algebraic kernels.

use proptest::prelude::*;

use monoquartic::numtheory;
use monoquartic::polyint::IntPoly;
use monoquartic::polymod::{self, ModPoly};
use monoquartic::reciprocal::{self, ReciprocalQuartic};

fn int_poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-50i64..=50, 0..=6).prop_map(|c| IntPoly::from_i64(&c))
}

fn mod_poly(p: u64) -> impl Strategy<Value = ModPoly> {
    prop::collection::vec(0..p, 0..=7).prop_map(move |c| ModPoly::new(p, c))
}

proptest! {
    #[test]
    fn ring_laws(a in int_poly(), b in int_poly(), c in int_poly()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.sub(&b).add(&b), a.clone());
        prop_assert_eq!(a.mul(&IntPoly::one()), a.clone());
    }

    #[test]
    fn products_divide_exactly(a in int_poly(), b in int_poly()) {
        prop_assume!(!b.is_zero());
        let prod = a.mul(&b);
        prop_assert_eq!(prod.exact_div(&b).unwrap(), a);
    }

    #[test]
    fn render_parse_roundtrip(a in int_poly()) {
        let text = a.to_string();
        prop_assert_eq!(text.parse::<IntPoly>().unwrap(), a);
    }

    #[test]
    fn squarefree_iff_exponents_one(n in -2_000_000_000i128..=2_000_000_000) {
        prop_assume!(n != 0);
        prop_assert_eq!(
            numtheory::is_squarefree(n),
            numtheory::factor(n).unwrap().is_squarefree()
        );
    }

    #[test]
    fn square_multiples_are_never_squarefree(n in 2i128..=100_000, m in 1i128..=1000) {
        prop_assert!(!numtheory::is_squarefree(n * n * m));
    }

    #[test]
    fn mirror_involution_preserves_classification(a in -400i64..=400, b in -400i64..=400) {
        let q = ReciprocalQuartic::new(a, b).unwrap();
        let m = q.mirror();
        prop_assert_eq!(m.mirror(), q);
        let (wq, wm) = (reciprocal::invariants(&q), reciprocal::invariants(&m));
        prop_assert_eq!(wq.disc, wm.disc);
        prop_assert_eq!(wq.w, wm.w);
        prop_assert_eq!((wq.w1, wq.w2), (wm.w2, wm.w1));
        prop_assert_eq!(
            reciprocal::irreducible_closed_form(&q).is_irreducible(),
            reciprocal::irreducible_closed_form(&m).is_irreducible()
        );
        prop_assert_eq!(reciprocal::family(&q), reciprocal::family(&m));
        if a != 0 {
            prop_assert_eq!(
                reciprocal::monogenic_closed_form(&q).unwrap(),
                reciprocal::monogenic_closed_form(&m).unwrap()
            );
        }
        if reciprocal::irreducible_closed_form(&q).is_irreducible() {
            prop_assert_eq!(
                reciprocal::galois_closed_form(&q).unwrap(),
                reciprocal::galois_closed_form(&m).unwrap()
            );
        }
    }

    #[test]
    fn modpoly_gcd_divides_both(a in mod_poly(13), b in mod_poly(13)) {
        let g = polymod::gcd(&a, &b).unwrap();
        if g.is_zero() {
            prop_assert!(a.is_zero() && b.is_zero());
        } else {
            prop_assert!(a.rem(&g).is_zero());
            prop_assert!(b.rem(&g).is_zero());
        }
    }

    #[test]
    fn modpoly_factors_multiply_back(a in mod_poly(31)) {
        prop_assume!(!a.is_zero());
        let f = polymod::factorize(&a).unwrap();
        prop_assert_eq!(f.reconstruct(31), a);
    }
}
