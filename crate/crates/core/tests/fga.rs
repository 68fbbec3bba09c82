use std::sync::Arc;

use hyperschubert::fga::{Fga, FglMode};
use hyperschubert::ring::RatFunc;
use hyperschubert::roots::*;

fn setup(f: Family, r: usize, mode: FglMode) -> (WeylGroup, Fga) {
    let sys = Arc::new(RootSystem::new(CartanSpec::new(f, r).unwrap()).unwrap());
    (WeylGroup::new(sys.clone()).unwrap(), Fga::new(sys, mode))
}

#[test]
fn fgl_axioms_generic() {
    let (_, fga) = setup(Family::A, 3, FglMode::GenericHyperbolic);
    let (x, y, z) = (fga.x(0), fga.x(1), fga.x(2));
    assert_eq!(fga.fgl_add(&x, &y).unwrap(), fga.fgl_add(&y, &x).unwrap());
    assert_eq!(fga.fgl_add(&x, &fga.zero()).unwrap(), x);
    let l = fga.fgl_add(&x, &fga.fgl_add(&y, &z).unwrap()).unwrap();
    let r = fga.fgl_add(&fga.fgl_add(&x, &y).unwrap(), &z).unwrap();
    assert_eq!(l, r);
}

#[test]
fn inverse_in_every_mode() {
    for mode in FglMode::all() {
        let (_, fga) = setup(Family::A, 2, mode);
        let x = fga.x(0);
        let inv = fga.fgl_inverse(&x).unwrap();
        assert!(fga.fgl_add(&x, &inv).unwrap().is_zero(), "{mode:?}");
        assert_eq!(fga.y_neg(&[1, 0]), inv);
    }
    let (_, fga) = setup(Family::A, 2, FglMode::Lorentz);
    assert_eq!(fga.fgl_inverse(&fga.x(0)).unwrap(), fga.x(0).neg());
}

#[test]
fn multiplicative_law() {
    let (_, fga) = setup(Family::A, 2, FglMode::Multiplicative);
    let (a, b) = (fga.x(0), fga.x(1));
    let expect = a.add(&b).sub(&a.mul(&b));
    assert_eq!(fga.fgl_add(&a, &b).unwrap(), expect);
    assert_eq!(fga.render(&fga.x(0)), "x1");
    assert_eq!(fga.render(&fga.y_of(&[1, 1]).unwrap()), "-x1*x2 + x1 + x2");
}

#[test]
fn kappa_values() {
    let (_, g) = setup(Family::A, 2, FglMode::GenericHyperbolic);
    assert_eq!(g.kappa(0), g.mu1().clone());
    let (_, h) = setup(Family::C, 2, FglMode::Hecke);
    assert!(h.kappa(0).is_one() && h.kappa(1).is_one());
    let (_, a) = setup(Family::A, 2, FglMode::Additive);
    assert!(a.kappa(1).is_zero());
}

#[test]
fn y_is_a_homomorphism() {
    for mode in FglMode::all() {
        for (f, r) in [(Family::A, 2), (Family::C, 2), (Family::G2, 2), (Family::B, 3)] {
            let (_, fga) = setup(f, r, mode);
            let roots: Vec<Vec<i32>> = fga.system().positive_roots().to_vec();
            for a in &roots {
                for b in &roots {
                    let s: Vec<i32> = a.iter().zip(b).map(|(x, y)| x - y).collect();
                    let lhs = fga.y_of(&s).unwrap();
                    let rhs = fga.fgl_add(&fga.y_of(a).unwrap(), &fga.y_neg(b)).unwrap();
                    assert_eq!(lhs, rhs, "{mode:?} {f}{r}");
                }
            }
        }
    }
}

#[test]
fn hecke_lemma_identities() {
    let (_, fga) = setup(Family::A, 2, FglMode::Hecke);
    let ya = fga.x(0);
    let yb = fga.x(1);
    let yab = fga.y_of(&[1, 1]).unwrap();
    let yma = fga.y_neg(&[1, 0]);
    let u = fga.u();
    // y_{α+β} = y_α + y_β − y_α y_β + u y_α y_β y_{α+β}
    let rhs = ya.add(&yb).sub(&ya.mul(&yb)).add(&u.mul(&ya).mul(&yb).mul(&yab));
    assert_eq!(yab, rhs);
    // y_{α+β}/y_α + y_β/y_{−α} = 1 + u y_β y_{α+β}
    let lhs = yab.div(&ya).unwrap().add(&yb.div(&yma).unwrap());
    assert_eq!(lhs, fga.one().add(&u.mul(&yb).mul(&yab)));
}

#[test]
fn weyl_action_is_an_action() {
    for mode in [FglMode::GenericHyperbolic, FglMode::Hecke, FglMode::Lorentz] {
        let (g, fga) = setup(Family::A, 2, mode);
        let f = fga.x(0).mul(&fga.x(1)).add(&fga.one()).div(&fga.y_of(&[1, 1]).unwrap()).unwrap();
        for v in g.elements() {
            for w in g.elements() {
                let lhs = fga.weyl_act(&g, w, &fga.weyl_act(&g, v, &f));
                let rhs = fga.weyl_act(&g, g.mul(w, v), &f);
                assert_eq!(lhs, rhs);
            }
        }
        assert_eq!(fga.weyl_act(&g, g.generator(0), &fga.x(1)), fga.y_of(&[1, 1]).unwrap());
        assert_eq!(fga.weyl_act(&g, g.generator(0), &fga.x(0)), fga.y_neg(&[1, 0]));
    }
}

#[test]
fn hecke_chart_round_trip() {
    let (_, fga) = setup(Family::A, 2, FglMode::Hecke);
    let reg = fga.registry().clone();
    let x1 = RatFunc::var(fga.nvars(), 0);
    assert_eq!(fga.to_x(&fga.x(0)), x1);
    let y = fga.y_neg(&[1, 0]);
    assert_eq!(fga.to_x(&y).render(&reg), "x1/(x1 - 1)");
    let f = fga.y_of(&[1, 1]).unwrap();
    assert_eq!(fga.from_x(&fga.to_x(&f)).unwrap(), f);
}

#[test]
fn bracket_labels() {
    let (_, a) = setup(Family::A, 2, FglMode::Hecke);
    assert_eq!(a.bracket_label(&[1, 1]).unwrap(), "[13]");
    let (_, c) = setup(Family::C, 2, FglMode::Hecke);
    assert_eq!(c.bracket_label(&[0, 1]).unwrap(), "[12]");
    assert_eq!(c.bracket_label(&[1, 1]).unwrap(), "[-12]");
    assert_eq!(c.bracket_label(&[1, 0]).unwrap(), "[-11]");
    assert_eq!(c.bracket_label(&[1, 2]).unwrap(), "[-22]");
}
