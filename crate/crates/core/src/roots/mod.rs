//! Root systems of types A, B, C, D, G2 and their Weyl groups.
//!
//! Simple roots are indexed internally from 0. Display labels start at 1 for
//! types A and G2 and at 0 for B, C, D, where generator 0 is the special root
//! (`ε1` for B, `2ε1` for C, `ε1+ε2` for D) and generator `i ≥ 1` is `ε_{i+1} − ε_i`.

mod classical;
mod weyl;

pub use classical::*;
pub use weyl::{ElemId, WeylElem, WeylGroup};

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    G2,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::G2 => "G2",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "G2" | "G" => Ok(Family::G2),
            _ => Err(Error::UnsupportedSpec(format!("unknown family {s}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CartanSpec {
    pub family: Family,
    pub rank: usize,
}

impl CartanSpec {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::G2 => rank == 2,
        };
        if !ok {
            return Err(Error::UnsupportedSpec(format!("{family}{rank}")));
        }
        Ok(CartanSpec { family, rank })
    }
}

impl fmt::Display for CartanSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::G2 => write!(f, "G2"),
            fam => write!(f, "{fam}{}", self.rank),
        }
    }
}

/// Integer vector in the simple-root basis.
pub type Root = Vec<i32>;

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub spec: CartanSpec,
    /// `cartan[i][j] = ⟨α_j, α_i^∨⟩`.
    pub cartan: Vec<Vec<i32>>,
    /// Squared lengths of the simple roots.
    norms: Vec<i32>,
    positive: Vec<Root>,
    positive_index: HashMap<Root, usize>,
}

impl RootSystem {
    pub fn new(spec: CartanSpec) -> Result<Self> {
        let spec = CartanSpec::new(spec.family, spec.rank)?;
        let r = spec.rank;
        let mut c = vec![vec![0i32; r]; r];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut norms = vec![2; r];
        let link = |c: &mut Vec<Vec<i32>>, i: usize, j: usize| {
            c[i][j] = -1;
            c[j][i] = -1;
        };
        match spec.family {
            Family::A => (0..r - 1).for_each(|i| link(&mut c, i, i + 1)),
            Family::B | Family::C => {
                (1..r - 1).for_each(|i| link(&mut c, i, i + 1));
                if spec.family == Family::B {
                    c[0][1] = -2;
                    c[1][0] = -1;
                    norms[0] = 1;
                } else {
                    c[0][1] = -1;
                    c[1][0] = -2;
                    norms[0] = 4;
                }
            }
            Family::D => {
                link(&mut c, 0, 2);
                (1..r - 1).for_each(|i| link(&mut c, i, i + 1));
            }
            Family::G2 => {
                c[0][1] = -3;
                c[1][0] = -1;
                norms = vec![2, 6];
            }
        }
        let mut sys = RootSystem { spec, cartan: c, norms, positive: vec![], positive_index: HashMap::new() };
        sys.enumerate_roots();
        Ok(sys)
    }

    fn enumerate_roots(&mut self) {
        let r = self.rank();
        let mut seen: HashMap<Root, ()> = HashMap::new();
        let mut queue: Vec<Root> = (0..r).map(|i| self.simple(i)).collect();
        while let Some(a) = queue.pop() {
            if seen.contains_key(&a) {
                continue;
            }
            for i in 0..r {
                let b = self.reflect_simple(i, &a);
                if b.iter().all(|&x| x >= 0) && !seen.contains_key(&b) {
                    queue.push(b);
                }
            }
            seen.insert(a, ());
        }
        let mut pos: Vec<Root> = seen.into_keys().collect();
        pos.sort_by_key(|a| (a.iter().sum::<i32>(), std::cmp::Reverse(a.clone())));
        self.positive_index = pos.iter().cloned().enumerate().map(|(i, a)| (a, i)).collect();
        self.positive = pos;
    }

    pub fn rank(&self) -> usize {
        self.spec.rank
    }

    pub fn family(&self) -> Family {
        self.spec.family
    }

    pub fn simple(&self, i: usize) -> Root {
        let mut v = vec![0; self.rank()];
        v[i] = 1;
        v
    }

    /// Positive roots ordered by height, then coordinates.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    pub fn is_root(&self, a: &[i32]) -> bool {
        if self.positive_index.contains_key(a) {
            return true;
        }
        let neg: Root = a.iter().map(|x| -x).collect();
        self.positive_index.contains_key(&neg)
    }

    pub fn positive_index(&self, a: &[i32]) -> Option<usize> {
        self.positive_index.get(a).copied()
    }

    /// `⟨λ, α_i^∨⟩`.
    pub fn coroot_pairing(&self, i: usize, lambda: &[i32]) -> i32 {
        lambda.iter().zip(&self.cartan[i]).map(|(a, b)| a * b).sum()
    }

    pub fn reflect_simple(&self, i: usize, lambda: &[i32]) -> Root {
        let k = self.coroot_pairing(i, lambda);
        let mut v = lambda.to_vec();
        v[i] -= k;
        v
    }

    /// Invariant symmetric form `(λ, μ)`.
    pub fn form(&self, a: &[i32], b: &[i32]) -> i32 {
        let r = self.rank();
        let mut s = 0;
        for i in 0..r {
            if a[i] == 0 {
                continue;
            }
            for j in 0..r {
                // (α_i, α_j) = cartan[i][j] |α_i|^2 / 2
                s += a[i] * b[j] * self.cartan[i][j] * self.norms[i];
            }
        }
        s / 2
    }

    /// Reflection in the root `beta` applied to `lambda`.
    pub fn reflect(&self, beta: &[i32], lambda: &[i32]) -> Root {
        let k = 2 * self.form(lambda, beta) / self.form(beta, beta);
        lambda.iter().zip(beta).map(|(l, b)| l - k * b).collect()
    }

    /// Display label of generator `i`.
    pub fn label(&self, i: usize) -> i32 {
        match self.family() {
            Family::A | Family::G2 => i as i32 + 1,
            _ => i as i32,
        }
    }

    pub fn generator_from_label(&self, label: i32) -> Result<usize> {
        let i = match self.family() {
            Family::A | Family::G2 => label - 1,
            _ => label,
        };
        if i < 0 || i as usize >= self.rank() {
            return Err(Error::IndexOutOfRange(format!("generator {label} in {}", self.spec)));
        }
        Ok(i as usize)
    }

    /// Number of positive roots, the length of the longest element.
    pub fn n_pos(&self) -> usize {
        self.positive.len()
    }

    pub fn is_positive(a: &[i32]) -> bool {
        a.iter().any(|&x| x > 0) && a.iter().all(|&x| x >= 0)
    }
}
