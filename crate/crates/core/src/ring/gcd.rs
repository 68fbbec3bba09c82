//! Multivariate polynomial GCD over the integers.
//!
//! Dense modular algorithm: images modulo word-size primes are computed by
//! recursive evaluation/interpolation, combined by Chinese remaindering and
//! certified by trial division over the integers.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::rngs::SmallRng;
use rand::{Rng, SeedableRng};
use smallvec::SmallVec;

use super::poly::{Monomial, MultiPoly};

type Mono = SmallVec<[u16; 8]>;
type PPoly = BTreeMap<Mono, u64>;
type UPoly = Vec<u64>;

/// Greatest common divisor with positive leading coefficient.
/// The integer content of the result is the gcd of the input contents.
pub fn gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    let n = a.nvars();
    if a.is_zero() {
        return normalize_sign(b.clone());
    }
    if b.is_zero() {
        return normalize_sign(a.clone());
    }
    let ic = a.content().gcd(&b.content());
    if a.is_constant() || b.is_constant() {
        return MultiPoly::constant(n, ic);
    }
    let mc = a.monomial_content().gcd(&b.monomial_content());
    let a1 = a.div_monomial(&a.monomial_content()).div_scalar(&a.content());
    let b1 = b.div_monomial(&b.monomial_content()).div_scalar(&b.content());
    let g = gcd_primitive(&a1, &b1);
    g.mul_monomial(&mc).scale(&ic)
}

/// Both arguments have unit integer content and no monomial factor.
fn gcd_primitive(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    let n = a.nvars();
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one(n);
    }
    if a == b {
        return normalize_sign(a.clone());
    }
    // A variable present in one argument only: reduce to its coefficients.
    for v in 0..n {
        let (ua, ub) = (a.uses_var(v), b.uses_var(v));
        if ua != ub {
            let (with, without) = if ua { (a, b) } else { (b, a) };
            let mut g = without.clone();
            for c in with.coefficients_in(v) {
                if c.is_zero() {
                    continue;
                }
                g = gcd(&g, &c);
                if g.is_constant() {
                    return MultiPoly::one(n);
                }
            }
            return normalize_sign(g);
        }
    }
    if a.len() == 1 || b.len() == 1 {
        return MultiPoly::one(n);
    }
    if let Some(d) = a.div_exact(b) {
        let _ = d;
        return normalize_sign(b.clone());
    }
    if let Some(d) = b.div_exact(a) {
        let _ = d;
        return normalize_sign(a.clone());
    }
    let vars: Vec<usize> = (0..n).filter(|&v| a.uses_var(v)).collect();
    let mut rng = SmallRng::seed_from_u64(0x5eed ^ (a.len() as u64) << 20 ^ b.len() as u64);
    if coprime_by_projection(a, b, &vars, &mut rng) {
        return MultiPoly::one(n);
    }
    brown(a, b, &vars, &mut rng)
}

fn normalize_sign(p: MultiPoly) -> MultiPoly {
    if p.leading_coeff().is_negative() {
        p.neg()
    } else {
        p
    }
}

// ---------------------------------------------------------------- primes

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn prime(i: usize) -> u64 {
    static PRIMES: OnceLock<Mutex<Vec<u64>>> = OnceLock::new();
    let cell = PRIMES.get_or_init(|| Mutex::new(Vec::new()));
    let mut v = cell.lock().unwrap();
    while v.len() <= i {
        let mut c = v.last().copied().unwrap_or((1 << 31) + 1) - 2;
        while !is_prime(c) {
            c -= 2;
        }
        v.push(c);
    }
    v[i]
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    r
}

fn reduce(c: &BigInt, p: u64) -> u64 {
    c.mod_floor(&BigInt::from(p)).to_u64().unwrap()
}

// ---------------------------------------------------------------- univariate mod p

fn utrim(mut a: UPoly) -> UPoly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn ueval(a: &[u64], x: u64, p: u64) -> u64 {
    a.iter().rev().fold(0, |acc, &c| (acc * x + c) % p)
}

fn udeg(a: &[u64]) -> usize {
    a.len().saturating_sub(1)
}

fn umonic(a: UPoly, p: u64) -> UPoly {
    let a = utrim(a);
    match a.last() {
        None => a,
        Some(&lc) => {
            let inv = inv_mod(lc, p);
            a.into_iter().map(|c| c * inv % p).collect()
        }
    }
}

/// Quotient and remainder; `b` nonzero.
fn udivrem(a: &[u64], b: &[u64], p: u64) -> (UPoly, UPoly) {
    let mut r = utrim(a.to_vec());
    let b = utrim(b.to_vec());
    let db = b.len() - 1;
    let inv = inv_mod(b[db], p);
    if r.len() < b.len() {
        return (vec![], r);
    }
    let mut q = vec![0; r.len() - db];
    while r.len() >= b.len() {
        let k = r.len() - 1 - db;
        let c = r[r.len() - 1] * inv % p;
        q[k] = c;
        for (i, &bi) in b.iter().enumerate() {
            r[k + i] = (r[k + i] + p - c * bi % p) % p;
        }
        r = utrim(r);
    }
    (utrim(q), r)
}

fn ugcd(a: &[u64], b: &[u64], p: u64) -> UPoly {
    let mut x = utrim(a.to_vec());
    let mut y = utrim(b.to_vec());
    while !y.is_empty() {
        let (_, r) = udivrem(&x, &y, p);
        x = y;
        y = r;
    }
    umonic(x, p)
}

fn umul(a: &[u64], b: &[u64], p: u64) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    utrim(out)
}

// ---------------------------------------------------------------- multivariate mod p

fn to_modp(a: &MultiPoly, vars: &[usize], p: u64) -> PPoly {
    let mut out = PPoly::new();
    for (m, c) in a.terms() {
        let r = reduce(c, p);
        if r != 0 {
            let key: Mono = vars.iter().map(|&v| m.0[v]).collect();
            out.insert(key, r);
        }
    }
    out
}

fn is_const(a: &PPoly) -> bool {
    a.len() == 1 && a.keys().next().unwrap().iter().all(|&e| e == 0)
}

fn pmonic(a: PPoly, p: u64) -> PPoly {
    let Some((_, &lc)) = a.last_key_value() else { return a };
    let inv = inv_mod(lc, p);
    a.into_iter().map(|(m, c)| (m, c * inv % p)).collect()
}

fn group(a: &PPoly) -> BTreeMap<Mono, UPoly> {
    let mut g: BTreeMap<Mono, UPoly> = BTreeMap::new();
    for (m, &c) in a {
        let rest: Mono = m[1..].iter().copied().collect();
        let e = m[0] as usize;
        let u = g.entry(rest).or_default();
        if u.len() <= e {
            u.resize(e + 1, 0);
        }
        u[e] = c;
    }
    g
}

fn ungroup(g: &BTreeMap<Mono, UPoly>) -> PPoly {
    let mut out = PPoly::new();
    for (rest, u) in g {
        for (e, &c) in u.iter().enumerate() {
            if c != 0 {
                let mut m: Mono = SmallVec::with_capacity(rest.len() + 1);
                m.push(e as u16);
                m.extend_from_slice(rest);
                out.insert(m, c);
            }
        }
    }
    out
}

fn gcontent(g: &BTreeMap<Mono, UPoly>, p: u64) -> UPoly {
    let mut c: UPoly = vec![];
    for u in g.values() {
        c = ugcd(&c, u, p);
        if c.len() == 1 {
            break;
        }
    }
    c
}

fn gdiv(g: &BTreeMap<Mono, UPoly>, c: &[u64], p: u64) -> BTreeMap<Mono, UPoly> {
    if c.len() == 1 && c[0] == 1 {
        return g.clone();
    }
    g.iter()
        .map(|(k, u)| {
            let (q, r) = udivrem(u, c, p);
            debug_assert!(r.is_empty());
            (k.clone(), q)
        })
        .collect()
}

fn lead_key_cmp(a: Option<&Mono>, b: Option<&Mono>) -> Ordering {
    a.cmp(&b)
}

/// Monic gcd (lexicographic leading coefficient one) of polynomials over Z/p.
fn gcd_modp(a: &PPoly, b: &PPoly, p: u64, rng: &mut SmallRng) -> PPoly {
    if a.is_empty() {
        return pmonic(b.clone(), p);
    }
    if b.is_empty() {
        return pmonic(a.clone(), p);
    }
    let nv = a.keys().next().unwrap().len();
    let one: PPoly = [(SmallVec::from_elem(0, nv), 1)].into_iter().collect();
    if is_const(a) || is_const(b) {
        return one;
    }
    if nv == 1 {
        let ua = dense1(a);
        let ub = dense1(b);
        let g = ugcd(&ua, &ub, p);
        return g
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(e, &c)| (SmallVec::from_elem(e as u16, 1), c))
            .collect();
    }
    let ga = group(a);
    let gb = group(b);
    let ca = gcontent(&ga, p);
    let cb = gcontent(&gb, p);
    let c = ugcd(&ca, &cb, p);
    let ga = gdiv(&ga, &ca, p);
    let gb = gdiv(&gb, &cb, p);
    let lift_c = |c: &UPoly| -> PPoly {
        let mut g = BTreeMap::new();
        g.insert(SmallVec::from_elem(0, nv - 1), c.clone());
        pmonic(ungroup(&g), p)
    };
    if ga.len() == 1 && ga.keys().next().unwrap().iter().all(|&e| e == 0) {
        return lift_c(&c);
    }
    if gb.len() == 1 && gb.keys().next().unwrap().iter().all(|&e| e == 0) {
        return lift_c(&c);
    }
    let lca = ga.last_key_value().unwrap().1.clone();
    let lcb = gb.last_key_value().unwrap().1.clone();
    let gamma = ugcd(&lca, &lcb, p);
    let deg0 = |g: &BTreeMap<Mono, UPoly>| g.values().map(|u| udeg(u)).max().unwrap_or(0);
    let bound = deg0(&ga).min(deg0(&gb)) + udeg(&gamma);

    let mut h: BTreeMap<Mono, UPoly> = BTreeMap::new();
    let mut q: UPoly = vec![1];
    let mut npts = 0usize;
    let mut used: Vec<u64> = Vec::new();
    let mut tries = 0usize;
    loop {
        tries += 1;
        assert!(tries < 100_000, "modular gcd failed to find evaluation points");
        let e = rng.gen_range(1..p);
        if used.contains(&e) || ueval(&lca, e, p) == 0 || ueval(&lcb, e, p) == 0 {
            continue;
        }
        let ae = geval(&ga, e, p);
        let be = geval(&gb, e, p);
        let mut ge = gcd_modp(&ae, &be, p, rng);
        if is_const(&ge) {
            return lift_c(&c);
        }
        let ge_scale = ueval(&gamma, e, p);
        for v in ge.values_mut() {
            *v = *v * ge_scale % p;
        }
        let ord = if npts == 0 {
            Ordering::Less
        } else {
            lead_key_cmp(ge.last_key_value().map(|x| x.0), h.last_key_value().map(|x| x.0))
        };
        let changed = match ord {
            Ordering::Greater => continue,
            Ordering::Less => {
                h = ge.iter().map(|(k, &v)| (k.clone(), vec![v])).collect();
                q = vec![p - e, 1];
                npts = 1;
                used = vec![e];
                true
            }
            Ordering::Equal => {
                let qe = ueval(&q, e, p);
                let qinv = inv_mod(qe, p);
                let mut changed = false;
                let keys: Vec<Mono> = h.keys().chain(ge.keys()).cloned().collect();
                for k in keys {
                    let hv = h.get(&k).map(|u| ueval(u, e, p)).unwrap_or(0);
                    let gv = ge.get(&k).copied().unwrap_or(0);
                    if hv == gv {
                        continue;
                    }
                    changed = true;
                    let f = (gv + p - hv) % p * qinv % p;
                    let u = h.entry(k).or_default();
                    if u.len() < q.len() {
                        u.resize(q.len(), 0);
                    }
                    for (i, &x) in q.iter().enumerate() {
                        u[i] = (u[i] + x * f) % p;
                    }
                    *u = utrim(std::mem::take(u));
                }
                h.retain(|_, u| !u.is_empty());
                q = umul(&q, &[p - e, 1], p);
                npts += 1;
                used.push(e);
                changed
            }
        };
        if !changed || npts > bound {
            let hc = gcontent(&h, p);
            let hp = gdiv(&h, &hc, p);
            let cand = ungroup(&hp);
            if npts > bound || (pdivides(&cand, a, p) && pdivides(&cand, b, p)) {
                let full = ungroup(&hp.iter().map(|(k, u)| (k.clone(), umul(u, &c, p))).collect());
                return pmonic(full, p);
            }
        }
    }
}

fn dense1(a: &PPoly) -> UPoly {
    let d = a.keys().map(|m| m[0] as usize).max().unwrap_or(0);
    let mut u = vec![0; d + 1];
    for (m, &c) in a {
        u[m[0] as usize] = c;
    }
    u
}

fn geval(g: &BTreeMap<Mono, UPoly>, e: u64, p: u64) -> PPoly {
    let mut out = PPoly::new();
    for (k, u) in g {
        let v = ueval(u, e, p);
        if v != 0 {
            out.insert(k.clone(), v);
        }
    }
    out
}

/// Trial division modulo p (lex order, leading term is the last key).
fn pdivides(d: &PPoly, a: &PPoly, p: u64) -> bool {
    let Some((dm, &dc)) = d.last_key_value() else { return false };
    let inv = inv_mod(dc, p);
    let mut r = a.clone();
    while let Some((m, c)) = r.pop_last() {
        if !dm.iter().zip(m.iter()).all(|(x, y)| x <= y) {
            return false;
        }
        let qm: Mono = m.iter().zip(dm.iter()).map(|(x, y)| x - y).collect();
        let qc = c * inv % p;
        for (tm, &tc) in d.iter().rev().skip(1) {
            let mm: Mono = tm.iter().zip(qm.iter()).map(|(x, y)| x + y).collect();
            let sub = qc * tc % p;
            let v = r.entry(mm.clone()).or_insert(0);
            *v = (*v + p - sub) % p;
            if *v == 0 {
                r.remove(&mm);
            }
        }
    }
    true
}

// ---------------------------------------------------------------- over Z

/// Proves the gcd constant when univariate images in each variable are coprime.
fn coprime_by_projection(a: &MultiPoly, b: &MultiPoly, vars: &[usize], rng: &mut SmallRng) -> bool {
    let p = prime(0);
    let pa = to_modp(a, vars, p);
    let pb = to_modp(b, vars, p);
    if pa.is_empty() || pb.is_empty() {
        return false;
    }
    for k in 0..vars.len() {
        let mut ok = false;
        for _ in 0..3 {
            let pt: Vec<u64> = (0..vars.len()).map(|_| rng.gen_range(1..p)).collect();
            let ua = project(&pa, k, &pt, p);
            let ub = project(&pb, k, &pt, p);
            let da = pa.keys().map(|m| m[k]).max().unwrap() as usize;
            let db = pb.keys().map(|m| m[k]).max().unwrap() as usize;
            if udeg(&ua) != da || udeg(&ub) != db || ua.is_empty() || ub.is_empty() {
                continue;
            }
            let g = ugcd(&ua, &ub, p);
            if udeg(&g) > 0 {
                return false;
            }
            ok = true;
            break;
        }
        if !ok {
            return false;
        }
    }
    true
}

fn project(a: &PPoly, k: usize, pt: &[u64], p: u64) -> UPoly {
    let mut u: UPoly = vec![];
    for (m, &c) in a {
        let mut v = c;
        for (i, &e) in m.iter().enumerate() {
            if i != k && e > 0 {
                v = v * pow_mod(pt[i], e as u64, p) % p;
            }
        }
        let d = m[k] as usize;
        if u.len() <= d {
            u.resize(d + 1, 0);
        }
        u[d] = (u[d] + v) % p;
    }
    utrim(u)
}

fn lex_lead(a: &MultiPoly, vars: &[usize]) -> BigInt {
    a.terms()
        .iter()
        .max_by(|x, y| {
            vars.iter().map(|&v| x.0 .0[v]).cmp(vars.iter().map(|&v| y.0 .0[v]))
        })
        .unwrap()
        .1
        .clone()
}

fn brown(a: &MultiPoly, b: &MultiPoly, vars0: &[usize], rng: &mut SmallRng) -> MultiPoly {
    let n = a.nvars();
    // Outer variables have small degree; the univariate base case takes the largest.
    let mut vars = vars0.to_vec();
    vars.sort_by_key(|&v| a.degree_in(v).max(b.degree_in(v)));
    let lca = lex_lead(a, &vars);
    let lcb = lex_lead(b, &vars);
    let gamma = lca.gcd(&lcb);
    let mut cur: BTreeMap<Mono, BigInt> = BTreeMap::new();
    let mut modulus = BigInt::zero();
    let mut last_sym: Option<BTreeMap<Mono, BigInt>> = None;
    let mut i = 0;
    loop {
        let p = prime(i);
        i += 1;
        assert!(i < 10_000, "modular gcd exhausted primes");
        let bp = BigInt::from(p);
        if (&lca % &bp).is_zero() || (&lcb % &bp).is_zero() {
            continue;
        }
        let pa = to_modp(a, &vars, p);
        let pb = to_modp(b, &vars, p);
        let mut gp = gcd_modp(&pa, &pb, p, rng);
        if is_const(&gp) {
            return MultiPoly::one(n);
        }
        let gm = reduce(&gamma, p);
        for v in gp.values_mut() {
            *v = *v * gm % p;
        }
        let ord = if modulus.is_zero() {
            Ordering::Less
        } else {
            lead_key_cmp(gp.last_key_value().map(|x| x.0), cur.last_key_value().map(|x| x.0))
        };
        match ord {
            Ordering::Greater => continue,
            Ordering::Less => {
                cur = gp.iter().map(|(k, &v)| (k.clone(), BigInt::from(v))).collect();
                modulus = bp;
                last_sym = None;
            }
            Ordering::Equal => {
                let minv = reduce(&modulus, p);
                let minv = inv_mod(minv, p);
                let keys: Vec<Mono> = cur.keys().chain(gp.keys()).cloned().collect();
                for k in keys {
                    let c = cur.get(&k).cloned().unwrap_or_default();
                    let g = gp.get(&k).copied().unwrap_or(0);
                    let cr = reduce(&c, p);
                    let t = (g + p - cr) % p * minv % p;
                    let nv = c + &modulus * BigInt::from(t);
                    cur.insert(k, nv);
                }
                modulus *= bp;
            }
        }
        let half = &modulus >> 1;
        let sym: BTreeMap<Mono, BigInt> = cur
            .iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|(k, v)| (k.clone(), if *v > half { v - &modulus } else { v.clone() }))
            .collect();
        if last_sym.as_ref() == Some(&sym) || last_sym.is_none() {
            let cand = MultiPoly::from_terms(
                n,
                sym.iter().map(|(k, v)| {
                    let mut m = Monomial::one(n);
                    for (j, &e) in k.iter().enumerate() {
                        m.0[vars[j]] = e;
                    }
                    (m, v.clone())
                }),
            );
            let cc = cand.content();
            if !cc.is_zero() {
                let cand = normalize_sign(cand.div_scalar(&cc));
                if a.div_exact(&cand).is_some() && b.div_exact(&cand).is_some() {
                    return cand;
                }
            }
        }
        last_sym = Some(sym);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, terms: &[(&[u16], i64)]) -> MultiPoly {
        MultiPoly::from_terms(
            n,
            terms.iter().map(|(e, c)| (Monomial(e.iter().copied().collect()), BigInt::from(*c))),
        )
    }

    #[test]
    fn shared_factor_is_found() {
        // (x + y + 1)(x - 2y) and (x + y + 1)(3x + y^2)
        let f = p(2, &[(&[1, 0], 1), (&[0, 1], 1), (&[0, 0], 1)]);
        let g = f.mul(&p(2, &[(&[1, 0], 1), (&[0, 1], -2)]));
        let h = f.mul(&p(2, &[(&[1, 0], 3), (&[0, 2], 1)]));
        assert_eq!(gcd(&g, &h), f);
    }

    #[test]
    fn coprime_inputs_give_one() {
        let g = p(3, &[(&[1, 1, 0], 1), (&[0, 0, 1], 1)]);
        let h = p(3, &[(&[2, 0, 0], 1), (&[0, 1, 1], -1), (&[0, 0, 0], 5)]);
        assert!(gcd(&g, &h).is_one());
    }

    #[test]
    fn integer_and_monomial_content() {
        let g = p(2, &[(&[2, 1], 6), (&[1, 2], 4)]);
        let h = p(2, &[(&[1, 1], 9), (&[3, 1], 3)]);
        assert_eq!(gcd(&g, &h), p(2, &[(&[1, 1], 1)]));
    }
}
