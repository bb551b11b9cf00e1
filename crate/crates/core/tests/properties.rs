//! Randomized invariants, shrunk by proptest on failure.

use num_rational::BigRational;
use proptest::prelude::*;

use picard::field::{omega, sign_real, CycNum, RealCyc, Sign, DEGREE};
use picard::geom::{bergman_cosh2, lift, HoroPoint};
use picard::group::{eval, pu_equal, Gen, GroupElt, Word};
use picard::isotropy::{abelianization, Presentation};
use picard::word::Letters;

fn cyc() -> impl Strategy<Value = CycNum> {
    prop::collection::vec((-6i64..=6, 1i64..=4), DEGREE).prop_map(|v| {
        let coeffs: Vec<BigRational> = v.into_iter().map(|(n, d)| BigRational::new(n.into(), d.into())).collect();
        CycNum::from_rational_coeffs(&coeffs)
    })
}

fn word() -> impl Strategy<Value = Word> {
    prop::collection::vec((0..Gen::ALL.len(), -3i64..=3), 0..6).prop_map(|v| {
        let mut l = Letters::empty();
        for (g, k) in v {
            l.push(Gen::ALL[g].name(), k);
        }
        Word(l)
    })
}

fn ball_point() -> impl Strategy<Value = picard::linalg::HVector> {
    (-5i64..=5, -5i64..=5, -8i64..=8, 1i64..=9, 1i64..=3).prop_map(|(a, b, t, u, d)| {
        let z = &CycNum::from_frac(a, d) + &(&CycNum::from_frac(b, d) * &omega());
        let t = RealCyc::new(CycNum::from_frac(t, d)).unwrap();
        let u = RealCyc::new(CycNum::from_frac(u, d)).unwrap();
        lift(&HoroPoint::new(z, t, u).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in cyc(), b in cyc(), c in cyc()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
    }

    #[test]
    fn nonzero_elements_invert(a in cyc()) {
        prop_assume!(!a.is_zero());
        let i = a.inv().unwrap();
        prop_assert!((&a * &i).is_one());
    }

    #[test]
    fn certified_sign_matches_float(a in cyc(), b in cyc()) {
        let x = &(&a + &a.conj()) - &(&b * &b.conj());
        let f = x.to_f64_pair().0;
        match sign_real(&x).unwrap() {
            Sign::Zero => prop_assert!(x.is_zero()),
            Sign::Positive => prop_assert!(f > -1e-9),
            Sign::Negative => prop_assert!(f < 1e-9),
        }
    }

    #[test]
    fn norms_are_never_negative(a in cyc()) {
        let s = sign_real(&a.norm_sq()).unwrap();
        prop_assert!(s != Sign::Negative);
        prop_assert_eq!(s == Sign::Zero, a.is_zero());
    }

    #[test]
    fn evaluation_is_a_homomorphism(u in word(), v in word()) {
        let (gu, gv) = (eval(&u), eval(&v));
        prop_assert!(pu_equal(&eval(&u.concat(&v)), &gu.mul(&gv)));
        prop_assert!(eval(&u.concat(&u.inverse())).is_projective_identity());
    }

    #[test]
    fn projective_equality_ignores_scalars(u in word(), k in 0i64..6) {
        let g = eval(&u);
        let s = omega().pow(k).unwrap();
        prop_assert!(pu_equal(&g, &g.scaled(&s)));
    }

    #[test]
    fn words_reparse_from_display(u in word()) {
        prop_assert_eq!(picard::group::parse_word(&u.to_string()).unwrap(), u);
    }

    #[test]
    fn bergman_distance_is_invariant(p in ball_point(), q in ball_point(), w in word()) {
        let g: GroupElt = eval(&w);
        let before = bergman_cosh2(&p, &q).unwrap();
        let after = bergman_cosh2(&g.apply(&p), &g.apply(&q)).unwrap();
        prop_assert_eq!(before, after);
    }

    #[test]
    fn tietze_moves_keep_the_abelianization(
        rels in prop::collection::vec(prop::collection::vec((0usize..2, -4i64..=4), 1..5), 1..4),
        conj in prop::collection::vec((0usize..2, -2i64..=2), 0..3),
        pick in prop::collection::vec(any::<prop::sample::Index>(), 1..3),
    ) {
        let names = ["a", "b"];
        let to_letters = |v: &[(usize, i64)]| {
            let mut l = Letters::empty();
            for &(g, k) in v {
                l.push(names[g], k);
            }
            l
        };
        let p = Presentation { gens: names.iter().map(|s| s.to_string()).collect(), rels: rels.iter().map(|r| to_letters(r)).collect() };
        // A product of conjugates of existing relators is a consequence.
        let h = to_letters(&conj);
        let mut extra = Letters::empty();
        for i in &pick {
            let r = &p.rels[i.index(p.rels.len())];
            extra = extra.concat(&h.concat(r).concat(&h.inverse()));
        }
        let mut q = p.clone();
        q.rels.push(extra);
        prop_assert_eq!(abelianization(&p), abelianization(&q));

        let reparsed: Presentation = p.to_string().parse().unwrap();
        prop_assert_eq!(abelianization(&reparsed), abelianization(&p));
    }
}
