//! Bracket notation `[ij]` for values of GKM classes in types A and C.
//!
//! [`parse_brackets`] reads expressions such as `1 + u[13][23]` or
//! `2[-12] - [-12]^2 + u[-12]^2([-11] + [-22])`. [`render_brackets`] finds an
//! integer combination of monomials `u^k Π[ij]^e` equal to a value and prints it.
//! The search is a modular linear fit confirmed by exact comparison, so it
//! either returns a correct expression or nothing.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};
use rand::rngs::SmallRng;
use rand::{Rng, SeedableRng};

use super::{bracket, GkmSpace};
use crate::error::{Error, Result};
use crate::ring::{MultiPoly, RatFunc};
use crate::roots::Family;

/// Parses a bracket expression into the working chart of `space`.
pub fn parse_brackets(space: &GkmSpace, s: &str) -> Result<RatFunc> {
    let mut p = Parser { space, chars: s.chars().filter(|c| !c.is_whitespace()).collect(), pos: 0 };
    let v = p.expr()?;
    if p.pos != p.chars.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

struct Parser<'a> {
    space: &'a GkmSpace,
    chars: Vec<char>,
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {}", self.pos))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let mut acc = self.space.fga().zero();
        let mut first = true;
        loop {
            let neg = if self.eat('-') || self.eat('−') {
                true
            } else {
                if !first && !self.eat('+') {
                    break;
                }
                false
            };
            first = false;
            let t = self.term()?;
            acc = if neg { acc.sub(&t) } else { acc.add(&t) };
            if self.peek().is_none() || self.peek() == Some(')') {
                break;
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') | Some('·') => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                Some(c) if c == '[' || c == '(' || c == 'u' || c == 't' || c.is_ascii_digit() => {
                    acc = acc.mul(&self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<RatFunc> {
        let base = self.atom()?;
        if self.eat('^') || self.eat('²') {
            let e = if self.chars[self.pos - 1] == '²' { 2 } else { self.int()? };
            return base.pow(e as i32);
        }
        Ok(base)
    }

    fn int(&mut self) -> Result<i64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| self.err("expected an integer"))
    }

    fn atom(&mut self) -> Result<RatFunc> {
        let fga = self.space.fga();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(v)
            }
            Some('u') => {
                self.pos += 1;
                Ok(fga.u().clone())
            }
            Some('t') => {
                self.pos += 1;
                Ok(fga.t())
            }
            Some('[') => {
                self.pos += 1;
                let i = self.index()?;
                self.eat(',');
                let j = self.index()?;
                if !self.eat(']') {
                    return Err(self.err("expected ']'"));
                }
                bracket(self.space, i, j)
            }
            Some(c) if c.is_ascii_digit() => Ok(fga.int(self.int()?)),
            _ => Err(self.err("unexpected character")),
        }
    }

    /// One digit, negated by a leading `-` or a combining overline.
    fn index(&mut self) -> Result<i32> {
        let neg = self.eat('-') || self.eat('−');
        let d = self.peek().and_then(|c| c.to_digit(10)).ok_or_else(|| self.err("expected an index"))? as i32;
        self.pos += 1;
        let bar = self.eat('\u{304}');
        Ok(if neg ^ bar { -d } else { d })
    }
}

const P: u64 = (1 << 61) - 1;
const MAX_COLUMNS: usize = 400;
const MAX_EXP: u16 = 2;

fn mulm(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn powm(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulm(r, a);
        }
        a = mulm(a, a);
        e >>= 1;
    }
    r
}

fn invm(a: u64) -> u64 {
    powm(a, P - 2)
}

fn reduce(c: &BigInt) -> u64 {
    c.mod_floor(&BigInt::from(P)).to_u64().unwrap()
}

fn eval_poly(p: &MultiPoly, pt: &[u64]) -> u64 {
    let mut acc = 0u64;
    for (m, c) in p.terms() {
        let mut v = reduce(c);
        for (i, &e) in m.0.iter().enumerate() {
            if e > 0 {
                v = mulm(v, powm(pt[i], e as u64));
            }
        }
        acc = (acc + v) % P;
    }
    acc
}

fn eval(f: &RatFunc, pt: &[u64]) -> Option<u64> {
    let d = eval_poly(f.denom(), pt);
    (d != 0).then(|| mulm(eval_poly(f.numer(), pt), invm(d)))
}

/// A monomial `u^k Π y_{−β}^{e_β}`.
#[derive(Clone, PartialEq, Eq)]
struct Mono {
    deg: u32,
    k: u32,
    exps: Vec<u16>,
}

impl Ord for Mono {
    fn cmp(&self, o: &Self) -> std::cmp::Ordering {
        (self.deg, self.k).cmp(&(o.deg, o.k)).then_with(|| o.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(o))
    }
}

fn monomials(nroots: usize, deg: u32, with_u: bool) -> Vec<Mono> {
    let mut out = Vec::new();
    let mut exps = vec![0u16; nroots];
    fn rec(i: usize, left: u32, exps: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if i == exps.len() {
            out.push(exps.clone());
            return;
        }
        for e in 0..=(MAX_EXP as u32).min(left) {
            exps[i] = e as u16;
            rec(i + 1, left - e, exps, out);
        }
        exps[i] = 0;
    }
    let mut all = Vec::new();
    rec(0, deg, &mut exps, &mut all);
    for exps in all {
        let d: u32 = exps.iter().map(|&e| e as u32).sum();
        let kmax = if with_u { d / 2 } else { 0 };
        for k in 0..=kmax {
            out.push(Mono { deg: d, k, exps: exps.clone() });
        }
    }
    out.sort();
    out
}

struct Fit<'a> {
    space: &'a GkmSpace,
    /// Positive roots with labels, sorted by label.
    roots: Vec<(Vec<i32>, (i32, i32), String)>,
    ys: Vec<RatFunc>,
    rng: SmallRng,
    /// Per sample: values of the brackets, of `u`, and of the target.
    samples: Vec<(Vec<u64>, u64, u64)>,
}

impl Fit<'_> {
    fn sample(&mut self, target: &RatFunc) {
        let n = self.space.nvars();
        loop {
            let pt: Vec<u64> = (0..n).map(|_| self.rng.gen_range(2..P)).collect();
            let ys: Option<Vec<u64>> = self.ys.iter().map(|y| eval(y, &pt)).collect();
            let (Some(ys), Some(u), Some(f)) = (ys, eval(self.space.fga().u(), &pt), eval(target, &pt)) else {
                continue;
            };
            self.samples.push((ys, u, f));
            return;
        }
    }

    fn value(&self, m: &Mono, s: usize) -> u64 {
        let (ys, u, _) = &self.samples[s];
        let mut v = powm(*u, m.k as u64);
        for (y, &e) in ys.iter().zip(&m.exps) {
            if e > 0 {
                v = mulm(v, powm(*y, e as u64));
            }
        }
        v
    }

    fn symbolic(&self, m: &Mono) -> RatFunc {
        let fga = self.space.fga();
        let mut v = fga.u().pow(m.k as i32).unwrap();
        for (y, &e) in self.ys.iter().zip(&m.exps) {
            if e > 0 {
                v = v.mul(&y.pow(e as i32).unwrap());
            }
        }
        v
    }

    /// Integer coefficients over `cols` matching `target`, if the modular
    /// system is consistent and the symmetric lifts are small.
    fn solve(&mut self, target: &RatFunc, cols: &[Mono]) -> Option<Vec<(Mono, BigInt)>> {
        let rows = cols.len() + 8;
        while self.samples.len() < rows {
            self.sample(target);
        }
        let nc = cols.len();
        let mut a: Vec<Vec<u64>> = (0..rows)
            .map(|s| {
                let mut r: Vec<u64> = cols.iter().map(|m| self.value(m, s)).collect();
                r.push(self.samples[s].2);
                r
            })
            .collect();
        let mut pivots = Vec::new();
        let mut row = 0;
        for c in 0..nc {
            let Some(p) = (row..rows).find(|&r| a[r][c] != 0) else { continue };
            a.swap(row, p);
            let inv = invm(a[row][c]);
            for x in a[row].iter_mut() {
                *x = mulm(*x, inv);
            }
            for r in 0..rows {
                if r != row && a[r][c] != 0 {
                    let f = a[r][c];
                    for j in c..=nc {
                        let sub = mulm(f, a[row][j]);
                        a[r][j] = (a[r][j] + P - sub) % P;
                    }
                }
            }
            pivots.push(c);
            row += 1;
        }
        if a[row..].iter().any(|r| r[nc] != 0) {
            return None;
        }
        let mut out = Vec::new();
        for (r, &c) in pivots.iter().enumerate() {
            let v = a[r][nc];
            if v == 0 {
                continue;
            }
            let s = if v > P / 2 { -((P - v) as i64) } else { v as i64 };
            if s.unsigned_abs() > 1 << 24 {
                return None;
            }
            out.push((cols[c].clone(), BigInt::from(s)));
        }
        let fga = self.space.fga();
        let sum = out.iter().fold(fga.zero(), |acc, (m, c)| acc.add(&self.symbolic(m).mul(&fga.int(c.to_i64().unwrap()))));
        (sum == *target).then_some(out)
    }

    fn render(&self, terms: &[(Mono, BigInt)]) -> String {
        let mut s = String::new();
        for (i, (m, c)) in terms.iter().enumerate() {
            let mut body = String::new();
            match m.k {
                0 => {}
                1 => body.push('u'),
                k => body.push_str(&format!("u^{k}")),
            }
            for ((_, _, label), &e) in self.roots.iter().zip(&m.exps) {
                match e {
                    0 => {}
                    1 => body.push_str(label),
                    e => body.push_str(&format!("{label}^{e}")),
                }
            }
            let a = c.abs();
            let coeff = if body.is_empty() || !a.is_one() { a.to_string() } else { String::new() };
            if i == 0 {
                if c.is_negative() {
                    s.push('-');
                }
            } else {
                s.push_str(if c.is_negative() { " - " } else { " + " });
            }
            s.push_str(&coeff);
            s.push_str(&body);
        }
        s
    }
}

/// Bracket form of `f`, or `None` if no integer combination of `u^k Π[ij]^e`
/// with small exponents represents it.
pub fn render_brackets(space: &GkmSpace, f: &RatFunc) -> Option<String> {
    let sys = space.group().system();
    if !matches!(sys.family(), Family::A | Family::C) {
        return None;
    }
    if f.is_zero() {
        return Some("0".into());
    }
    let fga = space.fga();
    let mut roots: Vec<(Vec<i32>, (i32, i32), String)> = sys
        .positive_roots()
        .iter()
        .map(|b| {
            let label = fga.bracket_label(b)?;
            let key = label_key(&label)?;
            Some((b.clone(), key, label))
        })
        .collect::<Option<_>>()?;
    roots.sort_by_key(|r| r.1);
    let ys: Vec<RatFunc> = roots.iter().map(|r| fga.y_neg(&r.0)).collect();
    let with_u = !fga.u().is_zero();

    // Pull out bracket factors dividing the numerator; fit the rest.
    let mut g = f.clone();
    let mut factor = vec![0u16; roots.len()];
    loop {
        let mut progressed = false;
        for (i, y) in ys.iter().enumerate() {
            if factor[i] < 8 && g.numer().div_exact(y.numer()).is_some() {
                if let Ok(q) = g.div(y) {
                    g = q;
                    factor[i] += 1;
                    progressed = true;
                }
            }
        }
        if !progressed {
            break;
        }
    }
    let mut fit = Fit { space, roots, ys, rng: SmallRng::seed_from_u64(0x5eed), samples: Vec::new() };
    for (target, factor) in [(g, factor.clone()), (f.clone(), vec![0; factor.len()])] {
        fit.samples.clear();
        for d in 0.. {
            let cols = monomials(fit.roots.len(), d, with_u);
            if cols.len() > MAX_COLUMNS {
                break;
            }
            if let Some(terms) = fit.solve(&target, &cols) {
                let mut terms: Vec<(Mono, BigInt)> = terms
                    .into_iter()
                    .map(|(mut m, c)| {
                        for (e, &x) in m.exps.iter_mut().zip(&factor) {
                            *e += x;
                        }
                        m.deg = m.exps.iter().map(|&e| e as u32).sum();
                        (m, c)
                    })
                    .collect();
                terms.sort_by(|a, b| a.0.cmp(&b.0));
                return Some(fit.render(&terms));
            }
            if d as usize > 2 * fit.roots.len() {
                break;
            }
        }
    }
    None
}

/// `(i, j)` of a label `[ij]` or `[-ij]`.
fn label_key(label: &str) -> Option<(i32, i32)> {
    let inner = label.strip_prefix('[')?.strip_suffix(']')?;
    let (neg, rest) = match inner.strip_prefix('-') {
        Some(r) => (true, r),
        None => (false, inner),
    };
    let mut ds = rest.chars().map(|c| c.to_digit(10).map(|d| d as i32));
    let (i, j) = (ds.next()??, ds.next()??);
    Some((if neg { -i } else { i }, j))
}

/// Bracket form if one exists, else the canonical form.
pub fn render_value(space: &GkmSpace, f: &RatFunc) -> String {
    render_brackets(space, f).unwrap_or_else(|| space.fga().render(f))
}
