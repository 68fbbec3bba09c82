mod common;

use common::group;
use hyperschubert::ring::{MultiPoly, RatFunc};
use hyperschubert::roots::Family;
use num_bigint::BigInt;
use proptest::prelude::*;

const NV: usize = 3;

fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((-4i64..=4, 0u16..3, 0u16..3, 0u16..2), 0..5).prop_map(|terms| {
        terms.into_iter().fold(MultiPoly::zero(NV), |acc, (c, a, b, d)| {
            let m = MultiPoly::var(NV, 0)
                .pow(a as u32)
                .mul(&MultiPoly::var(NV, 1).pow(b as u32))
                .mul(&MultiPoly::var(NV, 2).pow(d as u32));
            acc.add(&m.scale(&BigInt::from(c)))
        })
    })
}

fn nonzero() -> impl Strategy<Value = MultiPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (poly(), nonzero()).prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn canonical_form_is_unique(n in poly(), d in nonzero(), k in nonzero()) {
        let a = RatFunc::new(n.clone(), d.clone()).unwrap();
        let b = RatFunc::new(n.mul(&k), d.mul(&k)).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(a.numer(), b.numer());
        prop_assert_eq!(a.denom(), b.denom());
    }

    #[test]
    fn exact_division(a in poly(), b in nonzero()) {
        let p = a.mul(&b);
        prop_assert_eq!(p.div_exact(&b), Some(a));
    }

    #[test]
    fn weyl_words(word in prop::collection::vec(0usize..3, 0..12), other in prop::collection::vec(0usize..3, 0..8)) {
        for (f, r) in [(Family::A, 3), (Family::B, 3), (Family::C, 3)] {
            let g = group(f, r);
            let w = g.from_word(&word).unwrap();
            let v = g.from_word(&other).unwrap();
            prop_assert!(g.len(w) <= word.len());
            prop_assert_eq!(g.len(w) % 2, word.len() % 2);
            prop_assert_eq!(g.mul(w, g.inverse(w)), 0);
            prop_assert_eq!(g.inverse(g.mul(w, v)), g.mul(g.inverse(v), g.inverse(w)));
            prop_assert!(g.bruhat_leq(0, w) && g.bruhat_leq(w, g.longest()));
            prop_assert_eq!(g.from_word(g.word(w)).unwrap(), w);
        }
    }
}
