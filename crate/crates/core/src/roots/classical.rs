//! Permutation models of the classical Weyl groups and the text forms of elements.

use super::{ElemId, Family, Root, RootSystem, WeylGroup};
use crate::error::{Error, Result};

/// Number of coordinates `ε_1 … ε_n` of the ambient space.
pub fn eps_dim(sys: &RootSystem) -> usize {
    match sys.family() {
        Family::A => sys.rank() + 1,
        _ => sys.rank(),
    }
}

/// Coordinates of a root-lattice vector in the `ε` basis (0-based indices).
pub fn eps_of_root(sys: &RootSystem, c: &[i32]) -> Result<Vec<i32>> {
    let n = eps_dim(sys);
    let mut v = vec![0; n];
    match sys.family() {
        Family::A => {
            for (k, &x) in c.iter().enumerate() {
                v[k] += x;
                v[k + 1] -= x;
            }
        }
        Family::B | Family::C | Family::D => {
            let f = sys.family();
            for (k, &x) in c.iter().enumerate() {
                match (k, f) {
                    (0, Family::B) => v[0] += x,
                    (0, Family::C) => v[0] += 2 * x,
                    (0, _) => {
                        v[0] += x;
                        v[1] += x;
                    }
                    _ => {
                        v[k] += x;
                        v[k - 1] -= x;
                    }
                }
            }
        }
        Family::G2 => return Err(Error::WrongType("G2 has no permutation model".into())),
    }
    Ok(v)
}

/// Inverse of [`eps_of_root`]; `None` if `v` is not in the root lattice.
pub fn root_of_eps(sys: &RootSystem, v: &[i32]) -> Option<Root> {
    let r = sys.rank();
    let mut c = vec![0; r];
    match sys.family() {
        Family::A => {
            if v.iter().sum::<i32>() != 0 {
                return None;
            }
            let mut s = 0;
            for k in 0..r {
                s += v[k];
                c[k] = s;
            }
        }
        Family::B | Family::C => {
            c[r - 1] = v[r - 1];
            for j in (1..r - 1).rev() {
                c[j] = v[j] + c[j + 1];
            }
            let t = v[0] + c[1];
            if sys.family() == Family::B {
                c[0] = t;
            } else {
                if t % 2 != 0 {
                    return None;
                }
                c[0] = t / 2;
            }
        }
        Family::D => {
            c[r - 1] = v[r - 1];
            for j in (2..r - 1).rev() {
                c[j] = v[j] + c[j + 1];
            }
            let (s, d) = (v[0] + v[1] + c[2], v[1] + c[2] - v[0]);
            if s % 2 != 0 || d % 2 != 0 {
                return None;
            }
            c[0] = s / 2;
            c[1] = d / 2;
        }
        Family::G2 => return None,
    }
    Some(c)
}

fn eps_unit(v: &[i32]) -> Result<i32> {
    let nz: Vec<(usize, i32)> = v.iter().copied().enumerate().filter(|(_, x)| *x != 0).collect();
    match nz.as_slice() {
        [(k, 1)] => Ok(*k as i32 + 1),
        [(k, -1)] => Ok(-(*k as i32 + 1)),
        _ => Err(Error::WrongType(format!("{v:?} is not a signed unit vector"))),
    }
}

/// One-line notation (type A, values 1..n) or signed window (types B, C, D).
pub fn window(g: &WeylGroup, w: ElemId) -> Result<Vec<i32>> {
    let sys = g.system();
    let r = sys.rank();
    let n = eps_dim(sys);
    let img = |j: usize| eps_of_root(sys, &g.act(w, &sys.simple(j)));
    match sys.family() {
        Family::A => {
            let mut out = vec![0; n];
            for j in 0..r {
                let e = img(j)?;
                out[j] = e.iter().position(|&x| x == 1).unwrap() as i32 + 1;
                out[j + 1] = e.iter().position(|&x| x == -1).unwrap() as i32 + 1;
            }
            Ok(out)
        }
        Family::B | Family::C | Family::D => {
            let mut eps: Vec<Vec<i32>> = vec![vec![]; n];
            let a0 = img(0)?;
            match sys.family() {
                Family::B => eps[0] = a0,
                Family::C => eps[0] = a0.iter().map(|x| x / 2).collect(),
                _ => {
                    let a1 = img(1)?;
                    eps[0] = a0.iter().zip(&a1).map(|(x, y)| (x - y) / 2).collect();
                    eps[1] = a0.iter().zip(&a1).map(|(x, y)| (x + y) / 2).collect();
                }
            }
            let start = if sys.family() == Family::D { 2 } else { 1 };
            for i in start..r {
                let a = img(i)?;
                eps[i] = a.iter().zip(&eps[i - 1]).map(|(x, y)| x + y).collect();
            }
            eps.iter().map(|v| eps_unit(v)).collect()
        }
        Family::G2 => Err(Error::WrongType("G2 has no window notation".into())),
    }
}

/// Element with the given one-line notation or window.
pub fn from_window(g: &WeylGroup, win: &[i32]) -> Result<ElemId> {
    let sys = g.system();
    let n = eps_dim(sys);
    if sys.family() == Family::G2 {
        return Err(Error::WrongType("G2 has no window notation".into()));
    }
    let bad = || Error::Parse(format!("{win:?} is not a valid window for {}", sys.spec));
    if win.len() != n {
        return Err(bad());
    }
    let mut seen = vec![false; n];
    for &x in win {
        let a = x.unsigned_abs() as usize;
        if a == 0 || a > n || seen[a - 1] || (sys.family() == Family::A && x < 0) {
            return Err(bad());
        }
        seen[a - 1] = true;
    }
    let image = |v: &[i32]| {
        let mut out = vec![0; n];
        for (k, &x) in v.iter().enumerate() {
            if x != 0 {
                let t = win[k];
                out[t.unsigned_abs() as usize - 1] += x * t.signum();
            }
        }
        out
    };
    let mut action = Vec::new();
    for j in 0..sys.rank() {
        let e = eps_of_root(sys, &sys.simple(j))?;
        action.extend(root_of_eps(sys, &image(&e)).ok_or_else(bad)?);
    }
    g.from_action(&action).ok_or_else(bad)
}

/// Type-C extended bijection on `I = {−(n−1), …, n}`: pairs `(position, value)`
/// with `i_p = window[p]` for `p ≥ 1` and `i_{1−p} = −i_p`.
pub fn extended_window(g: &WeylGroup, w: ElemId) -> Result<Vec<(i32, i32)>> {
    let win = window(g, w)?;
    let n = win.len() as i32;
    Ok((-(n - 1)..=n)
        .map(|p| (p, if p >= 1 { win[p as usize - 1] } else { -win[(1 - p) as usize - 1] }))
        .collect())
}

/// Generator of `I`-position swap `(k, k+1)`: type C uses `s_|k|`.
pub fn extended_generator(k: i32) -> usize {
    k.unsigned_abs() as usize
}

pub fn render_elem(g: &WeylGroup, w: ElemId) -> String {
    let sys = g.system();
    match sys.family() {
        Family::A => {
            let win = window(g, w).unwrap();
            if win.len() <= 9 {
                win.iter().map(|x| x.to_string()).collect()
            } else {
                win.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
            }
        }
        Family::B | Family::C | Family::D => {
            window(g, w).unwrap().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
        }
        Family::G2 => {
            if w == 0 {
                "e".to_string()
            } else {
                g.render_word(w)
            }
        }
    }
}

/// Parses a comma separated word of generator labels, such as `1,2,1`.
pub fn parse_word(sys: &RootSystem, s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() || s == "e" || s == "id" {
        return Ok(vec![]);
    }
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            let t = t.trim_start_matches('s');
            let l: i32 = t.parse().map_err(|_| Error::Parse(format!("bad generator {t:?}")))?;
            sys.generator_from_label(l)
        })
        .collect()
}

/// Parses `e`/`id`, an `s`-sequence (`s1,s0,s1` or `s1s0s1`), one-line notation
/// (`312`) or a window (`2 -1 3`).
pub fn parse_elem(g: &WeylGroup, s: &str) -> Result<ElemId> {
    let sys = g.system();
    let s = s.trim().replace('\u{2212}', "-");
    if s.is_empty() || s == "e" || s == "id" {
        return Ok(0);
    }
    if s.starts_with('s') {
        let labels: Vec<&str> =
            s.split(|c: char| c == 's' || c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()).collect();
        let mut word = Vec::new();
        for t in labels {
            let l: i32 = t.parse().map_err(|_| Error::Parse(format!("bad generator {t:?}")))?;
            word.push(sys.generator_from_label(l)?);
        }
        return g.from_word(&word);
    }
    if sys.family() == Family::G2 {
        return g.from_word(&parse_word(sys, &s)?);
    }
    let has_sep = s.contains(|c: char| c == ',' || c.is_whitespace());
    let vals: Vec<i32> = if sys.family() == Family::A && !has_sep {
        s.chars()
            .map(|c| c.to_digit(10).map(|d| d as i32).ok_or_else(|| Error::Parse(format!("bad one-line {s:?}"))))
            .collect::<Result<_>>()?
    } else {
        s.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<i32>().map_err(|_| Error::Parse(format!("bad window entry {t:?}"))))
            .collect::<Result<_>>()?
    };
    from_window(g, &vals)
}

/// True iff the one-line notation contains neither 3412 nor 4231.
pub fn avoids_patterns_a(g: &WeylGroup, w: ElemId) -> Result<bool> {
    if g.system().family() != Family::A {
        return Err(Error::WrongType("pattern avoidance is defined for type A".into()));
    }
    let p = window(g, w)?;
    let n = p.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let (x, y, z, t) = (p[a], p[b], p[c], p[d]);
                    if z < t && t < x && x < y {
                        return Ok(false);
                    }
                    if t < y && y < z && z < x {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Longest element of the coset `wW_{n−1}` with `w(n) = m`.
pub fn highest_coset_rep(g: &WeylGroup, m: i32) -> Result<ElemId> {
    let sys = g.system();
    let n = eps_dim(sys) as i32;
    let ok = match sys.family() {
        Family::A => (2..=n).contains(&m),
        Family::C => m != 0 && (-(n - 1)..=n).contains(&m),
        _ => false,
    };
    if !ok {
        return Err(Error::IndexOutOfRange(format!("m = {m} for {}", sys.spec)));
    }
    let mut best: Option<ElemId> = None;
    for w in g.elements() {
        if *window(g, w)?.last().unwrap() == m && best.map_or(true, |b| g.len(w) > g.len(b)) {
            best = Some(w);
        }
    }
    Ok(best.unwrap())
}

/// Type-A tableau criterion: sorted prefixes of `v` are dominated by those of `w`.
pub fn tableau_leq_a(g: &WeylGroup, v: ElemId, w: ElemId) -> Result<bool> {
    if g.system().family() != Family::A {
        return Err(Error::WrongType("tableau criterion is defined for type A".into()));
    }
    let (pv, pw) = (window(g, v)?, window(g, w)?);
    for k in 1..pv.len() {
        let mut a = pv[..k].to_vec();
        let mut b = pw[..k].to_vec();
        a.sort_unstable();
        b.sort_unstable();
        if a.iter().zip(&b).any(|(x, y)| x > y) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Proctor's criterion for signed permutations: compare counting functions
/// `w[i, j] = #{a ≤ i : w(a) ≥ j}` over `a, i, j ∈ [±n]`.
pub fn proctor_leq(g: &WeylGroup, v: ElemId, w: ElemId) -> Result<bool> {
    if !matches!(g.system().family(), Family::B | Family::C) {
        return Err(Error::WrongType("Proctor's criterion is defined for types B and C".into()));
    }
    let full = |x: ElemId| -> Result<Vec<(i32, i32)>> {
        let win = window(g, x)?;
        let n = win.len() as i32;
        let mut f: Vec<(i32, i32)> = (1..=n).map(|a| (a, win[a as usize - 1])).collect();
        f.extend((1..=n).map(|a| (-a, -win[a as usize - 1])));
        f.sort_unstable();
        Ok(f)
    };
    let (fv, fw) = (full(v)?, full(w)?);
    let n = fv.len() as i32 / 2;
    for i in (-n..=n).filter(|&x| x != 0) {
        for j in (-n..=n).filter(|&x| x != 0) {
            let cnt = |f: &[(i32, i32)]| f.iter().filter(|(a, b)| *a <= i && *b >= j).count();
            if cnt(&fv) > cnt(&fw) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
