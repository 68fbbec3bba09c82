mod common;

use common::{small_systems, space};
use hyperschubert::error::Error;
use hyperschubert::fga::FglMode;
use hyperschubert::gkm::{
    bracket, parse_brackets, render_brackets, render_value, rho, verify_positivity, GkmSpace, PositivityCertificate,
    MALFORMED_FIXTURES, POSEX_C2,
};
use hyperschubert::ring::RatFunc;
use hyperschubert::roots::{from_window, parse_elem, Family};

fn normal_product(s: &GkmSpace, w: usize) -> RatFunc {
    let f = s.fga();
    s.group().pos_pos_set(w).iter().fold(f.one(), |acc, b| {
        let neg: Vec<i32> = b.iter().map(|x| -x).collect();
        acc.mul(&f.y_of(&neg).unwrap())
    })
}

#[test]
fn point_class_is_the_full_product_at_the_identity() {
    for (f, r) in small_systems() {
        let s = space(f, r, FglMode::GenericHyperbolic);
        let p = s.point_class();
        assert_eq!(p.support(), vec![0]);
        assert_eq!(p.get(0), &normal_product(&s, 0));
    }
    let s = space(Family::A, 2, FglMode::Hecke);
    let b = |i, j| bracket(&s, i, j).unwrap();
    assert_eq!(s.point_class().get(0), &b(1, 2).mul(&b(1, 3)).mul(&b(2, 3)));
}

#[test]
fn bott_samelson_support_and_diagonal() {
    for (f, r) in small_systems() {
        let s = space(f, r, FglMode::Hecke);
        let g = s.group().clone();
        for w in g.elements() {
            let diag = normal_product(&s, w);
            for word in g.reduced_words(w) {
                let c = s.bott_samelson(&word).unwrap();
                for v in c.support() {
                    assert!(g.bruhat_leq(v, w), "{f:?}{r} {word:?} nonzero at {v}");
                }
                assert_eq!(c.get(w), &diag, "{f:?}{r} {word:?} diagonal");
            }
        }
    }
}

#[test]
fn bott_samelson_is_word_independent_without_u() {
    for mode in [FglMode::Multiplicative, FglMode::Additive] {
        for (f, r) in [(Family::A, 3), (Family::C, 2), (Family::B, 3), (Family::G2, 2)] {
            let s = space(f, r, mode);
            let g = s.group().clone();
            for w in g.elements() {
                let words = g.reduced_words(w);
                let first = s.bott_samelson(&words[0]).unwrap();
                for word in &words[1..] {
                    assert_eq!(*s.bott_samelson(word).unwrap(), *first, "{f:?}{r} {} {word:?}", mode.name());
                }
            }
        }
    }
}

#[test]
fn hecke_bott_samelson_depends_on_the_word() {
    let s = space(Family::A, 2, FglMode::Hecke);
    assert_ne!(*s.bott_samelson(&[0, 1, 0]).unwrap(), *s.bott_samelson(&[1, 0, 1]).unwrap());
}

#[test]
fn kl_schubert_matches_the_algebra_action() {
    for (f, r) in [(Family::A, 2), (Family::C, 2), (Family::A, 3), (Family::G2, 2)] {
        let s = space(f, r, FglMode::Hecke);
        let g = s.group().clone();
        let point = s.point_class();
        for w in g.elements() {
            let h = s.normalized_gamma(g.inverse(w)).unwrap();
            assert_eq!(*s.kl_schubert(w).unwrap(), s.qw().act_on_gkm(&h, &point), "{f:?}{r} w={w}");
        }
    }
}

#[test]
fn kl_schubert_low_length_and_extremes() {
    let s = space(Family::A, 2, FglMode::Hecke);
    let g = s.group().clone();
    for w in g.elements().filter(|&w| g.len(w) <= 2) {
        assert_eq!(*s.kl_schubert(w).unwrap(), *s.bott_samelson_elem(w).unwrap());
    }
    let top = s.kl_schubert(g.longest()).unwrap();
    assert!(top.values().iter().all(|v| v.is_one()));
}

#[test]
fn kl_schubert_needs_hecke_mode() {
    let s = space(Family::A, 2, FglMode::Additive);
    assert!(matches!(s.kl_schubert(1), Err(Error::WrongMode(_))));
    assert!(matches!(s.normalized_gamma(1), Err(Error::WrongMode(_))));
}

#[test]
fn smooth_class_values() {
    let s = space(Family::C, 2, FglMode::Hecke);
    let g = s.group().clone();
    assert!(s.smooth_class(g.longest()).values().iter().all(|v| v.is_one()));
    let s0 = parse_elem(&g, "s0").unwrap();
    let b = |i, j| bracket(&s, i, j).unwrap();
    assert_eq!(s.smooth_class(s0).get(0), &b(1, 2).mul(&b(-1, 2)).mul(&b(-2, 2)));
    for (f, r) in small_systems() {
        let s = space(f, r, FglMode::GenericHyperbolic);
        let g = s.group().clone();
        for w in g.elements() {
            let c = s.smooth_class(w);
            assert_eq!(c.get(w), &normal_product(&s, w));
            assert_eq!(c.support(), g.lower_interval(w));
        }
    }
}

#[test]
fn ktheory_limit_of_a_class() {
    let s = space(Family::C, 2, FglMode::Hecke);
    let k = space(Family::C, 2, FglMode::Multiplicative);
    let g = s.group().clone();
    let w = parse_elem(&g, "s0,s1,s0").unwrap();
    let lim = s.ktheory_limit(&s.kl_schubert(w).unwrap(), k.fga()).unwrap();
    assert_eq!(lim, *k.bott_samelson(&[0, 1, 0]).unwrap());
    let wrong = space(Family::A, 2, FglMode::Multiplicative);
    assert!(s.ktheory_limit(&s.point_class(), wrong.fga()).is_err());
}

#[test]
fn rho_examples() {
    let s = space(Family::A, 2, FglMode::Hecke);
    let g = s.group().clone();
    assert!(rho(&s, 1).unwrap().values().iter().all(|v| v.is_one()));
    let w = from_window(&g, &[1, 3, 2]).unwrap();
    assert_eq!(rho(&s, 2).unwrap().get(w), &bracket(&s, 1, 3).unwrap());
    assert!(rho(&s, 3).unwrap().get(w).is_zero());
    let w = from_window(&g, &[2, 1, 3]).unwrap();
    assert_eq!(rho(&s, 3).unwrap().get(w), &bracket(&s, 2, 3).unwrap().mul(&bracket(&s, 1, 3).unwrap()));
    assert!(matches!(rho(&s, 0), Err(Error::IndexOutOfRange(_))));

    let c = space(Family::C, 3, FglMode::Hecke);
    assert!(rho(&c, -2).unwrap().values().iter().all(|v| v.is_one()));
    assert!(matches!(rho(&c, -3), Err(Error::IndexOutOfRange(_))));
    let b = space(Family::B, 2, FglMode::Hecke);
    assert!(matches!(rho(&b, 1), Err(Error::WrongType(_))));
}

#[test]
fn bracket_display_round_trips() {
    let s = space(Family::A, 2, FglMode::Hecke);
    let v = s.bott_samelson(&[0, 1, 0]).unwrap().get(0).clone();
    assert_eq!(render_brackets(&s, &v).as_deref(), Some("1 + u[13][23]"));
    assert_eq!(parse_brackets(&s, "1 + u[13][23]").unwrap(), v);
    assert_eq!(render_value(&s, &s.fga().zero()), "0");

    for (f, r) in [(Family::A, 3), (Family::C, 2)] {
        let s = space(f, r, FglMode::Hecke);
        let g = s.group().clone();
        for w in g.elements() {
            for v in s.bott_samelson_elem(w).unwrap().values().iter().chain(s.kl_schubert(w).unwrap().values()) {
                if let Some(text) = render_brackets(&s, v) {
                    assert_eq!(&parse_brackets(&s, &text).unwrap(), v, "{text}");
                }
            }
        }
    }
}

#[test]
fn bracket_parse_accepts_overlines_and_powers() {
    let s = space(Family::C, 2, FglMode::Hecke);
    let m12 = bracket(&s, -1, 2).unwrap();
    assert_eq!(parse_brackets(&s, "[\u{0031}\u{0304}2]").unwrap(), m12);
    assert_eq!(parse_brackets(&s, "[-1,2]²").unwrap(), m12.mul(&m12));
    assert_eq!(parse_brackets(&s, "2·[-12] − [-12]^2").unwrap(), s.fga().int(2).mul(&m12).sub(&m12.mul(&m12)));
    for bad in ["[11]", "[12", "x", "[13]", "1 +"] {
        assert!(parse_brackets(&s, bad).is_err(), "{bad}");
    }
}

#[test]
fn positivity_certificates() {
    let s = space(Family::C, 2, FglMode::Hecke);
    let w = parse_elem(s.group(), "s1,s0,s1").unwrap();
    let class = s.kl_schubert(w).unwrap();
    let cert = PositivityCertificate::from_json(POSEX_C2).unwrap();
    assert!(verify_positivity(&s, &cert, &class).unwrap().passed());

    let report = |name: &str| {
        let text = MALFORMED_FIXTURES.iter().find(|(n, _)| *n == name).unwrap().1;
        PositivityCertificate::from_json(text).and_then(|c| verify_positivity(&s, &c, &class))
    };
    let r = report("sign_pattern").unwrap();
    assert!(r.sum_matches && !r.violations.is_empty());
    assert!(!report("wrong_sum").unwrap().sum_matches);
    assert!(!report("u_power").unwrap().passed());
    for name in ["not_a_root", "wrong_system", "truncated"] {
        assert!(matches!(report(name), Err(Error::MalformedCertificate(_))), "{name}");
    }
}

#[test]
fn concurrent_queries_agree() {
    let s = space(Family::A, 3, FglMode::Hecke);
    let n = s.group().size();
    let shared = std::sync::Arc::new(s);
    let handles: Vec<_> = (0..4)
        .map(|k| {
            let s = shared.clone();
            std::thread::spawn(move || (0..n).rev().map(|w| (*s.kl_schubert((w + k * 5) % n).unwrap()).clone()).count())
        })
        .collect();
    for h in handles {
        assert_eq!(h.join().unwrap(), n);
    }
    let fresh = space(Family::A, 3, FglMode::Hecke);
    for w in 0..n {
        assert_eq!(*shared.kl_schubert(w).unwrap(), *fresh.kl_schubert(w).unwrap());
    }
}
