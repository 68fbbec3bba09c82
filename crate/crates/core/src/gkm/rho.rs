use super::{GkmClass, GkmSpace};
use crate::error::{Error, Result};
use crate::ring::RatFunc;
use crate::roots::{eps_dim, extended_window, root_of_eps, window, Family};

/// The bracket `[ij]`: `y_{−(ε_i − ε_j)}` in type A and `y_{−(ε_j − ε_i)}` in
/// type C, where `ε_{−i} = −ε_i`. Indices are 1-based and signed.
pub fn bracket(space: &GkmSpace, i: i32, j: i32) -> Result<RatFunc> {
    let sys = space.group().system();
    let n = eps_dim(sys) as i32;
    let bad = || Error::IndexOutOfRange(format!("[{i}{j}] in {}", sys.spec));
    if i == j || i == 0 || j == 0 || i.abs() > n || j.abs() > n {
        return Err(bad());
    }
    let mut e = vec![0; n as usize];
    let mut put = |k: i32, c: i32| e[k.unsigned_abs() as usize - 1] += c * k.signum();
    match sys.family() {
        Family::A if i > 0 && j > 0 => {
            put(j, 1);
            put(i, -1);
        }
        Family::C => {
            put(i, 1);
            put(j, -1);
        }
        _ => return Err(bad()),
    }
    let root = root_of_eps(sys, &e).filter(|r| sys.is_root(r)).ok_or_else(bad)?;
    space.fga().y_of(&root)
}

/// `ρ_k(w) = [i_a n]⋯[i_{k−1} n]` if `w^{-1}(n) ≥ k`, else 0, where `i_p = w(p)`.
///
/// Type `A_{n−1}` reads the one-line notation from `a = 1` and needs `k ≥ 1`;
/// type `C_n` reads the extended window on `{−(n−1), …, n}` from `a = −(n−1)`
/// and needs `k ≥ −(n−1)`.
pub fn rho(space: &GkmSpace, k: i32) -> Result<GkmClass> {
    let g = space.group();
    let sys = g.system();
    let n = eps_dim(sys) as i32;
    let start = match sys.family() {
        Family::A => 1,
        Family::C => -(n - 1),
        _ => return Err(Error::WrongType(format!("ρ is defined in types A and C, not {}", sys.spec))),
    };
    if k < start {
        return Err(Error::IndexOutOfRange(format!("ρ_{k} in {}", sys.spec)));
    }
    let mut values = Vec::with_capacity(g.size());
    for w in g.elements() {
        let line: Vec<(i32, i32)> = match sys.family() {
            Family::A => window(g, w)?.into_iter().enumerate().map(|(p, x)| (p as i32 + 1, x)).collect(),
            _ => extended_window(g, w)?,
        };
        let pos = line.iter().find(|(_, x)| *x == n).unwrap().0;
        if pos < k {
            values.push(space.fga().zero());
            continue;
        }
        let mut v = space.fga().one();
        for &(_, x) in line.iter().take_while(|(p, _)| *p < k) {
            v = v.mul(&bracket(space, x, n)?);
        }
        values.push(v);
    }
    Ok(GkmClass::from_values(values))
}
