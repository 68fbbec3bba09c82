use std::collections::HashMap;
use std::sync::Arc;

use super::{Root, RootSystem};
use crate::error::{Error, Result};

/// Index of an element inside its [`WeylGroup`]. Elements are numbered in
/// shortlex order of their reduced words, so the identity is 0.
pub type ElemId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElem {
    /// Row `j` is the image of the simple root `α_j`.
    pub action: Vec<i32>,
    /// Shortlex-minimal reduced word (internal generator indices).
    pub word: Vec<usize>,
    pub len: usize,
}

#[derive(Debug)]
pub struct WeylGroup {
    system: Arc<RootSystem>,
    elems: Vec<WeylElem>,
    index: HashMap<Vec<i32>, ElemId>,
    right: Vec<Vec<ElemId>>,
    left: Vec<Vec<ElemId>>,
    inverse: Vec<ElemId>,
}

pub const DEFAULT_CAP: usize = 1_000_000;

impl WeylGroup {
    pub fn new(system: Arc<RootSystem>) -> Result<Self> {
        Self::with_cap(system, DEFAULT_CAP)
    }

    pub fn with_cap(system: Arc<RootSystem>, cap: usize) -> Result<Self> {
        let r = system.rank();
        let mut id = vec![0; r * r];
        for j in 0..r {
            id[j * r + j] = 1;
        }
        // Breadth-first closure under right multiplication by generators.
        let mut actions: Vec<Vec<i32>> = vec![id.clone()];
        let mut index: HashMap<Vec<i32>, usize> = HashMap::new();
        index.insert(id, 0);
        let mut k = 0;
        while k < actions.len() {
            for i in 0..r {
                let next = right_mul_action(&system, &actions[k], i);
                if !index.contains_key(&next) {
                    if actions.len() >= cap {
                        return Err(Error::UnsupportedSpec(format!(
                            "{} exceeds the group size cap {cap}",
                            system.spec
                        )));
                    }
                    index.insert(next.clone(), actions.len());
                    actions.push(next);
                }
            }
            k += 1;
        }
        let n = actions.len();
        let lens: Vec<usize> = actions.iter().map(|a| length_of(&system, a)).collect();
        let mut left = vec![vec![0; r]; n];
        for (k, a) in actions.iter().enumerate() {
            for (i, slot) in left[k].iter_mut().enumerate() {
                *slot = index[&left_mul_action(&system, a, i)];
            }
        }
        // Reduced words by repeated extraction of the smallest left descent.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&k| lens[k]);
        let mut words: Vec<Vec<usize>> = vec![vec![]; n];
        for &k in &order {
            if lens[k] == 0 {
                continue;
            }
            let i = (0..r).find(|&i| lens[left[k][i]] < lens[k]).expect("nonidentity has a descent");
            let mut w = vec![i];
            w.extend_from_slice(&words[left[k][i]]);
            words[k] = w;
        }
        order.sort_by(|&a, &b| lens[a].cmp(&lens[b]).then_with(|| words[a].cmp(&words[b])));
        let mut new_id = vec![0; n];
        for (pos, &k) in order.iter().enumerate() {
            new_id[k] = pos;
        }
        let mut elems = Vec::with_capacity(n);
        for &k in &order {
            elems.push(WeylElem { action: actions[k].clone(), word: words[k].clone(), len: lens[k] });
        }
        let index: HashMap<Vec<i32>, ElemId> =
            elems.iter().enumerate().map(|(k, e)| (e.action.clone(), k)).collect();
        let mut g = WeylGroup { system, elems, index, right: vec![], left: vec![], inverse: vec![] };
        g.right = (0..n)
            .map(|k| (0..r).map(|i| g.index[&right_mul_action(&g.system, &g.elems[k].action, i)]).collect())
            .collect();
        g.left = (0..n)
            .map(|k| (0..r).map(|i| g.index[&left_mul_action(&g.system, &g.elems[k].action, i)]).collect())
            .collect();
        g.inverse = (0..n)
            .map(|k| g.elems[k].word.iter().rev().fold(0, |acc, &i| g.right[acc][i]))
            .collect();
        Ok(g)
    }

    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    pub fn system_arc(&self) -> &Arc<RootSystem> {
        &self.system
    }

    pub fn rank(&self) -> usize {
        self.system.rank()
    }

    pub fn size(&self) -> usize {
        self.elems.len()
    }

    pub fn elements(&self) -> std::ops::Range<ElemId> {
        0..self.elems.len()
    }

    pub fn elem(&self, w: ElemId) -> &WeylElem {
        &self.elems[w]
    }

    pub fn identity(&self) -> ElemId {
        0
    }

    pub fn longest(&self) -> ElemId {
        self.elems.len() - 1
    }

    pub fn len(&self, w: ElemId) -> usize {
        self.elems[w].len
    }

    pub fn word(&self, w: ElemId) -> &[usize] {
        &self.elems[w].word
    }

    pub fn generator(&self, i: usize) -> ElemId {
        self.right[0][i]
    }

    /// `w s_i`.
    pub fn mul_gen(&self, w: ElemId, i: usize) -> ElemId {
        self.right[w][i]
    }

    /// `s_i w`.
    pub fn gen_mul(&self, i: usize, w: ElemId) -> ElemId {
        self.left[w][i]
    }

    pub fn mul(&self, u: ElemId, v: ElemId) -> ElemId {
        self.elems[v].word.iter().fold(u, |acc, &i| self.right[acc][i])
    }

    pub fn inverse(&self, w: ElemId) -> ElemId {
        self.inverse[w]
    }

    pub fn from_word(&self, word: &[usize]) -> Result<ElemId> {
        let r = self.rank();
        let mut w = 0;
        for &i in word {
            if i >= r {
                return Err(Error::IndexOutOfRange(format!("generator {i}")));
            }
            w = self.right[w][i];
        }
        Ok(w)
    }

    pub fn is_reduced(&self, word: &[usize]) -> bool {
        self.from_word(word).map(|w| self.len(w) == word.len()).unwrap_or(false)
    }

    pub fn from_action(&self, action: &[i32]) -> Option<ElemId> {
        self.index.get(action).copied()
    }

    /// Linear action on the root lattice.
    pub fn act(&self, w: ElemId, lambda: &[i32]) -> Root {
        let r = self.rank();
        let a = &self.elems[w].action;
        let mut out = vec![0; r];
        for (j, &l) in lambda.iter().enumerate() {
            if l != 0 {
                for k in 0..r {
                    out[k] += l * a[j * r + k];
                }
            }
        }
        out
    }

    pub fn is_right_descent(&self, w: ElemId, i: usize) -> bool {
        self.len(self.right[w][i]) < self.len(w)
    }

    pub fn is_left_descent(&self, w: ElemId, i: usize) -> bool {
        self.len(self.left[w][i]) < self.len(w)
    }

    /// All reduced words of `w`, in lexicographic order.
    pub fn reduced_words(&self, w: ElemId) -> Vec<Vec<usize>> {
        if w == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for i in 0..self.rank() {
            if self.is_right_descent(w, i) {
                for mut word in self.reduced_words(self.right[w][i]) {
                    word.push(i);
                    out.push(word);
                }
            }
        }
        out.sort();
        out
    }

    /// Strong Bruhat order, using the lifting property along the word of `w`.
    pub fn bruhat_leq(&self, v: ElemId, w: ElemId) -> bool {
        let (mut v, mut w) = (v, w);
        loop {
            if v == 0 {
                return true;
            }
            if self.len(v) > self.len(w) {
                return false;
            }
            if self.len(v) == self.len(w) {
                return v == w;
            }
            let s = *self.elems[w].word.last().unwrap();
            let vs = self.right[v][s];
            if self.len(vs) < self.len(v) {
                v = vs;
            }
            w = self.right[w][s];
        }
    }

    /// The Bruhat interval `[e, w]` in increasing id order.
    pub fn lower_interval(&self, w: ElemId) -> Vec<ElemId> {
        (0..=w).filter(|&v| self.bruhat_leq(v, w)).collect()
    }

    /// Reflection in a root.
    pub fn reflection(&self, beta: &[i32]) -> Result<ElemId> {
        if !self.system.is_root(beta) {
            return Err(Error::WrongType(format!("{beta:?} is not a root")));
        }
        let r = self.rank();
        let mut action = Vec::with_capacity(r * r);
        for j in 0..r {
            action.extend(self.system.reflect(beta, &self.system.simple(j)));
        }
        Ok(self.index[&action])
    }

    /// `Φ⁺ ∩ wΦ⁺`.
    pub fn pos_pos_set(&self, w: ElemId) -> Vec<Root> {
        let wi = self.inverse(w);
        self.system
            .positive_roots()
            .iter()
            .filter(|a| RootSystem::is_positive(&self.act(wi, a)))
            .cloned()
            .collect()
    }

    pub fn render_word(&self, w: ElemId) -> String {
        self.elems[w]
            .word
            .iter()
            .map(|&i| self.system.label(i).to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

fn right_mul_action(sys: &RootSystem, a: &[i32], i: usize) -> Vec<i32> {
    // (w s_i)(α_j) = w(α_j) − ⟨α_j, α_i^∨⟩ w(α_i)
    let r = sys.rank();
    let mut out = a.to_vec();
    for j in 0..r {
        let c = sys.cartan[i][j];
        if c != 0 {
            for k in 0..r {
                out[j * r + k] -= c * a[i * r + k];
            }
        }
    }
    out
}

fn left_mul_action(sys: &RootSystem, a: &[i32], i: usize) -> Vec<i32> {
    let r = sys.rank();
    let mut out = Vec::with_capacity(r * r);
    for j in 0..r {
        out.extend(sys.reflect_simple(i, &a[j * r..(j + 1) * r]));
    }
    out
}

fn length_of(sys: &RootSystem, a: &[i32]) -> usize {
    let r = sys.rank();
    sys.positive_roots()
        .iter()
        .filter(|root| {
            let mut img = vec![0; r];
            for (j, &l) in root.iter().enumerate() {
                for k in 0..r {
                    img[k] += l * a[j * r + k];
                }
            }
            img.iter().any(|&x| x < 0)
        })
        .count()
}
