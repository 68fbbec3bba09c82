mod common;

use common::space;
use hyperschubert::fga::FglMode;
use hyperschubert::gkm::{bracket, GkmClass, GkmSpace};
use hyperschubert::ring::RatFunc;
use hyperschubert::roots::{parse_elem, parse_word, Family};

struct Ctx {
    s: GkmSpace,
}

impl Ctx {
    fn new(f: Family, r: usize, mode: FglMode) -> Self {
        Ctx { s: space(f, r, mode) }
    }
    fn b(&self, i: i32, j: i32) -> RatFunc {
        bracket(&self.s, i, j).unwrap()
    }
    fn one(&self) -> RatFunc {
        self.s.fga().one()
    }
    fn zero(&self) -> RatFunc {
        self.s.fga().zero()
    }
    fn u(&self) -> RatFunc {
        self.s.fga().u().clone()
    }
    fn n(&self, k: i64) -> RatFunc {
        self.s.fga().int(k)
    }
    fn prod(&self, fs: &[RatFunc]) -> RatFunc {
        fs.iter().fold(self.one(), |a, b| a.mul(b))
    }
    fn bs(&self, word: &str) -> GkmClass {
        let w = if word.is_empty() { vec![] } else { parse_word(self.s.group().system(), word).unwrap() };
        (*self.s.bott_samelson(&w).unwrap()).clone()
    }
    fn check(&self, name: &str, c: &GkmClass, table: &[(&str, RatFunc)]) {
        let g = self.s.group();
        assert_eq!(table.len(), g.size());
        for (e, want) in table {
            let w = parse_elem(g, e).unwrap();
            assert_eq!(
                c.get(w),
                want,
                "{name} at {e}: got {}, want {}",
                self.s.fga().render(c.get(w)),
                self.s.fga().render(want)
            );
        }
    }
}

const S3: [&str; 6] = ["e", "s1", "s2", "s1,s2", "s2,s1", "s1,s2,s1"];

#[test]
fn bott_samelson_classes_in_a2() {
    let c = Ctx::new(Family::A, 2, FglMode::Hecke);
    let (b12, b13, b23) = (c.b(1, 2), c.b(1, 3), c.b(2, 3));
    let z = c.zero();
    let one = c.one();
    let vals = |v: [RatFunc; 6]| -> Vec<(&str, RatFunc)> { S3.iter().copied().zip(v).collect() };
    let top = c.prod(&[b12.clone(), b13.clone(), b23.clone()]);
    c.check("ζ∅", &c.bs(""), &vals([top, z.clone(), z.clone(), z.clone(), z.clone(), z.clone()]));
    let p = b13.mul(&b23);
    c.check("ζ1", &c.bs("1"), &vals([p.clone(), p, z.clone(), z.clone(), z.clone(), z.clone()]));
    c.check(
        "ζ12",
        &c.bs("1,2"),
        &vals([b13.clone(), b23.clone(), b13.clone(), b23.clone(), z.clone(), z.clone()]),
    );
    let a = one.add(&c.u().mul(&b13).mul(&b23));
    c.check("ζ121", &c.bs("1,2,1"), &vals([a.clone(), a, one.clone(), one.clone(), one.clone(), one.clone()]));
    let a = one.add(&c.u().mul(&b12).mul(&b13));
    c.check("ζ212", &c.bs("2,1,2"), &vals([a.clone(), one.clone(), a, one.clone(), one.clone(), one.clone()]));
}

const B2: [&str; 8] = ["e", "s0", "s1", "s0,s1", "s1,s0", "s0,s1,s0", "s1,s0,s1", "s0,s1,s0,s1"];

#[test]
fn bott_samelson_classes_in_c2() {
    let c = Ctx::new(Family::C, 2, FglMode::Hecke);
    let (b12, m12, m11, m22) = (c.b(1, 2), c.b(-1, 2), c.b(-1, 1), c.b(-2, 2));
    let (z, one, u) = (c.zero(), c.one(), c.u());
    let vals = |v: [RatFunc; 8]| -> Vec<(&str, RatFunc)> { B2.iter().copied().zip(v).collect() };
    let p = c.prod(&[b12.clone(), m12.clone(), m11.clone(), m22.clone()]);
    c.check("ζ∅", &c.bs(""), &vals([p, z.clone(), z.clone(), z.clone(), z.clone(), z.clone(), z.clone(), z.clone()]));

    let a = c.prod(&[b12.clone(), m12.clone(), m22.clone()]);
    c.check("ζ0", &c.bs("0"), &vals([a.clone(), a, z.clone(), z.clone(), z.clone(), z.clone(), z.clone(), z.clone()]));

    let (x, y) = (m12.mul(&m22), b12.mul(&m22));
    c.check(
        "ζ01",
        &c.bs("0,1"),
        &vals([x.clone(), y.clone(), x, y, z.clone(), z.clone(), z.clone(), z.clone()]),
    );

    let a = m22.add(&c.prod(&[u.clone(), b12.clone(), m12.clone(), m22.clone()]));
    c.check(
        "ζ010",
        &c.bs("0,1,0"),
        &vals([a.clone(), a, m12.clone(), b12.clone(), m12.clone(), b12.clone(), z.clone(), z.clone()]),
    );

    let a = one.add(&c.prod(&[c.n(2), u.clone(), m12.clone(), m22.clone()]));
    let b = one.add(&c.prod(&[c.n(2), u.clone(), b12.clone(), m22.clone()]));
    c.check(
        "ζ0101",
        &c.bs("0,1,0,1"),
        &vals([a.clone(), b.clone(), a, b, one.clone(), one.clone(), one.clone(), one.clone()]),
    );

    let a = c.prod(&[m12.clone(), m11.clone(), m22.clone()]);
    c.check("ζ1", &c.bs("1"), &vals([a.clone(), z.clone(), a, z.clone(), z.clone(), z.clone(), z.clone(), z.clone()]));

    let (x, y) = (m12.mul(&m22), m12.mul(&m11));
    c.check(
        "ζ10",
        &c.bs("1,0"),
        &vals([x.clone(), x, y.clone(), z.clone(), y, z.clone(), z.clone(), z.clone()]),
    );

    let v = c
        .n(2)
        .mul(&m12)
        .sub(&m12.mul(&m12))
        .add(&c.prod(&[u.clone(), m12.clone(), m12.clone(), m11.add(&m22)]));
    c.check(
        "ζ101",
        &c.bs("1,0,1"),
        &vals([v.clone(), m22.clone(), v, m22.clone(), m11.clone(), z.clone(), m11.clone(), z.clone()]),
    );

    let a = one.add(&c.prod(&[c.n(2), u.clone(), m12.clone(), m22.clone()]));
    let b = one.add(&c.prod(&[c.n(2), u.clone(), m12.clone(), m11.clone()]));
    c.check(
        "ζ1010",
        &c.bs("1,0,1,0"),
        &vals([a.clone(), a, b.clone(), one.clone(), b, one.clone(), one.clone(), one.clone()]),
    );
}

#[test]
fn kl_schubert_at_the_singular_element_of_c2() {
    let c = Ctx::new(Family::C, 2, FglMode::Hecke);
    let g = c.s.group().clone();
    let (b12, m12, m11, m22) = (c.b(1, 2), c.b(-1, 2), c.b(-1, 1), c.b(-2, 2));
    let _ = b12;
    let w = parse_elem(&g, "s1,s0,s1").unwrap();
    let kls = c.s.kl_schubert(w).unwrap();
    let inner = m12.mul(&m11).add(&m12.mul(&m22)).sub(&m11.mul(&m22));
    let v = c.n(2).mul(&m12).sub(&m12.mul(&m12)).add(&c.prod(&[c.u(), m12.clone(), inner]));
    let bs = c.bs("1,0,1");
    let mut table: Vec<(&str, RatFunc)> = Vec::new();
    for e in B2 {
        let x = parse_elem(&g, e).unwrap();
        table.push((e, if e == "e" || e == "s1" { v.clone() } else { bs.get(x).clone() }));
    }
    c.check("𝔖_{s1s0s1}", &kls, &table);
}

#[test]
fn lorentz_bott_samelson_in_a3() {
    let c = Ctx::new(Family::A, 3, FglMode::Lorentz);
    let b = |i, j| c.b(i, j);
    let u = c.u();
    let id = |w: &str| c.bs(w).get(0).clone();
    let first = c
        .one()
        .add(&c.prod(&[c.n(2), u.clone(), b(1, 4), b(2, 4)]))
        .add(&c.prod(&[u.clone(), u.clone(), b(1, 3), b(1, 4), b(2, 3), b(2, 4)]));
    assert_eq!(id("1,2,3,1,2,1"), first);
    assert_eq!(id("1,2,1,3,2,1"), first);
    let second = c
        .one()
        .add(&c.prod(&[u.clone(), b(1, 3), b(1, 4)]))
        .add(&c.prod(&[u.clone(), b(1, 4), b(2, 4)]))
        .add(&c.prod(&[u.clone(), u.clone(), b(1, 3), b(1, 4), b(2, 4), b(3, 4)]));
    assert_eq!(id("1,2,3,2,1,2"), second);
    assert_eq!(id("2,1,2,3,2,1"), second);
}
