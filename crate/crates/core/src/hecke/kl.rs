use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use num_traits::Zero;

use super::{is_zero_poly, one_poly};
use crate::error::{Error, Result};
use crate::roots::{ElemId, WeylGroup};

/// Polynomial in `q`, coefficients from degree 0 up.
pub type QPoly = Vec<BigInt>;

const HEADER: &str = "hyperschubert-kl 1";

/// `P_{v,w}` for all `v ≤ w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KlTable {
    below: Vec<BTreeMap<ElemId, QPoly>>,
}

fn trim(mut p: QPoly) -> QPoly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn add_shifted(acc: &mut QPoly, p: &[BigInt], shift: usize, c: &BigInt) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, BigInt::zero());
    }
    for (k, a) in p.iter().enumerate() {
        acc[k + shift] += a * c;
    }
}

impl KlTable {
    /// Standard recursion on the last letter `s` of `w`, with `v = ws < w`:
    /// `P_{x,w} = q^{1−c}P_{xs,v} + q^c P_{x,v} − Σ_{z<v, zs<z} μ(z,v) q^{(ℓ(w)−ℓ(z))/2} P_{x,z}`,
    /// where `c = 1` if `xs < x`.
    pub fn compute(g: &WeylGroup) -> Self {
        let n = g.size();
        let mut below: Vec<BTreeMap<ElemId, QPoly>> = Vec::with_capacity(n);
        let one = BigInt::from(1);
        for w in 0..n {
            let Some(&s) = g.word(w).last() else {
                below.push(BTreeMap::from([(0, one_poly())]));
                continue;
            };
            let v = g.mul_gen(w, s);
            let lw = g.len(w);
            let corrections: Vec<(ElemId, BigInt)> = below[v]
                .iter()
                .filter(|(&z, _)| z != v && g.len(g.mul_gen(z, s)) < g.len(z))
                .filter_map(|(&z, p)| {
                    let d = g.len(v) - g.len(z);
                    if d % 2 == 0 {
                        return None;
                    }
                    let m = p.get((d - 1) / 2).cloned().unwrap_or_default();
                    (!m.is_zero()).then_some((z, m))
                })
                .collect();
            let mut col = BTreeMap::new();
            for x in g.lower_interval(w) {
                let xs = g.mul_gen(x, s);
                let c = usize::from(g.len(xs) < g.len(x));
                let mut p: QPoly = Vec::new();
                if let Some(a) = below[v].get(&xs) {
                    add_shifted(&mut p, a, 1 - c, &one);
                }
                if let Some(a) = below[v].get(&x) {
                    add_shifted(&mut p, a, c, &one);
                }
                for (z, m) in &corrections {
                    if let Some(a) = below[*z].get(&x) {
                        add_shifted(&mut p, a, (lw - g.len(*z)) / 2, &-m);
                    }
                }
                let p = trim(p);
                debug_assert!(!is_zero_poly(&p));
                col.insert(x, p);
            }
            below.push(col);
        }
        KlTable { below }
    }

    pub fn get(&self, v: ElemId, w: ElemId) -> Option<&QPoly> {
        self.below.get(w)?.get(&v)
    }

    /// Entries `(v, P_{v,w})` for `v ≤ w`, increasing in `v`.
    pub fn column(&self, w: ElemId) -> impl Iterator<Item = (ElemId, &QPoly)> {
        self.below[w].iter().map(|(v, p)| (*v, p))
    }

    /// `μ(z, v)`: coefficient of `q^{(ℓ(v)−ℓ(z)−1)/2}` in `P_{z,v}`.
    pub fn mu(&self, g: &WeylGroup, z: ElemId, v: ElemId) -> BigInt {
        let d = g.len(v) as i64 - g.len(z) as i64;
        if d <= 0 || d % 2 == 0 {
            return BigInt::zero();
        }
        self.get(z, v).and_then(|p| p.get((d as usize - 1) / 2)).cloned().unwrap_or_default()
    }

    pub fn cache_path(g: &WeylGroup, dir: &Path) -> PathBuf {
        dir.join(format!("kl-{}.txt", g.system().spec))
    }

    pub fn to_text(&self, g: &WeylGroup) -> String {
        let word = |w: ElemId| if w == 0 { "e".to_string() } else { g.render_word(w) };
        let mut s = format!("{HEADER} {} {}\n", g.system().spec, g.size());
        for (w, col) in self.below.iter().enumerate() {
            for (v, p) in col {
                let cs: Vec<String> = p.iter().map(|c| c.to_string()).collect();
                let _ = writeln!(s, "{};{};{}", word(*v), word(w), cs.join(","));
            }
        }
        s
    }

    pub fn from_text(g: &WeylGroup, text: &str) -> Result<Self> {
        let bad = |m: &str| Error::Parse(format!("KL cache: {m}"));
        let mut lines = text.lines();
        let expect = format!("{HEADER} {} {}", g.system().spec, g.size());
        if lines.next() != Some(expect.as_str()) {
            return Err(bad("header mismatch"));
        }
        let sys = g.system();
        let elem = |s: &str| -> Result<ElemId> {
            if s == "e" {
                return Ok(0);
            }
            let word = s
                .split(',')
                .map(|x| x.trim().parse::<i32>().map_err(|_| bad(s)).and_then(|l| sys.generator_from_label(l)))
                .collect::<Result<Vec<_>>>()?;
            g.from_word(&word)
        };
        let mut below: Vec<BTreeMap<ElemId, QPoly>> = vec![BTreeMap::new(); g.size()];
        for line in lines {
            let parts: Vec<&str> = line.split(';').collect();
            let [v, w, p] = parts.as_slice() else {
                return Err(bad(line));
            };
            let poly = p
                .split(',')
                .map(|c| c.parse::<BigInt>().map_err(|_| bad(line)))
                .collect::<Result<QPoly>>()?;
            below[elem(w)?].insert(elem(v)?, poly);
        }
        for (w, col) in below.iter().enumerate() {
            if col.len() != g.lower_interval(w).len() {
                return Err(bad("incomplete table"));
            }
        }
        Ok(KlTable { below })
    }

    /// Reads the cache file for `g` under `dir`, or computes and writes it.
    pub fn load_or_compute(g: &WeylGroup, dir: &Path) -> Result<Self> {
        let path = Self::cache_path(g, dir);
        if let Ok(text) = fs::read_to_string(&path) {
            if let Ok(t) = Self::from_text(g, &text) {
                return Ok(t);
            }
        }
        let t = Self::compute(g);
        fs::create_dir_all(dir).map_err(|e| Error::Io(e.to_string()))?;
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        fs::write(&tmp, t.to_text(g)).map_err(|e| Error::Io(e.to_string()))?;
        fs::rename(&tmp, &path).map_err(|e| Error::Io(e.to_string()))?;
        Ok(t)
    }
}
