//! The twisted group algebra `Q_W`: elements `Σ_v q_v δ_v` with
//! `qδ_w · q'δ_{w'} = q·w(q')·δ_{ww'}`, acting on GKM classes by
//! `(h f)_w = Σ_v w(q_v)·f_{wv}`.
//!
//! A product `h1·h2` acts as `h1` applied after `h2`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fga::{Fga, FglMode};
use crate::gkm::GkmClass;
use crate::ring::RatFunc;
use crate::roots::{render_elem, ElemId, Root, WeylGroup};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QWElem {
    nvars: usize,
    coeffs: BTreeMap<ElemId, RatFunc>,
}

impl QWElem {
    pub fn zero(nvars: usize) -> Self {
        QWElem { nvars, coeffs: BTreeMap::new() }
    }

    pub fn delta(nvars: usize, w: ElemId) -> Self {
        Self::term(w, RatFunc::one(nvars))
    }

    pub fn term(w: ElemId, q: RatFunc) -> Self {
        let nvars = q.nvars();
        let mut coeffs = BTreeMap::new();
        if !q.is_zero() {
            coeffs.insert(w, q);
        }
        QWElem { nvars, coeffs }
    }

    pub fn scalar(q: RatFunc) -> Self {
        Self::term(0, q)
    }

    pub fn from_map(nvars: usize, coeffs: impl IntoIterator<Item = (ElemId, RatFunc)>) -> Self {
        let mut out = QWElem::zero(nvars);
        for (w, q) in coeffs {
            out.add_term(w, &q);
        }
        out
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, w: ElemId) -> RatFunc {
        self.coeffs.get(&w).cloned().unwrap_or_else(|| RatFunc::zero(self.nvars))
    }

    pub fn terms(&self) -> impl Iterator<Item = (ElemId, &RatFunc)> {
        self.coeffs.iter().map(|(w, q)| (*w, q))
    }

    pub fn support(&self) -> Vec<ElemId> {
        self.coeffs.keys().copied().collect()
    }

    pub fn add_term(&mut self, w: ElemId, q: &RatFunc) {
        if q.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&w) {
            Some(v) => {
                *v = v.add(q);
                if v.is_zero() {
                    self.coeffs.remove(&w);
                }
            }
            None => {
                self.coeffs.insert(w, q.clone());
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (w, q) in &o.coeffs {
            out.add_term(*w, q);
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&RatFunc::from_int(self.nvars, -1)))
    }

    /// Left multiplication by the scalar `c·δ_id`.
    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        QWElem { nvars: self.nvars, coeffs: self.coeffs.iter().map(|(w, q)| (*w, c.mul(q))).collect() }
    }

    pub fn render(&self, g: &WeylGroup, fga: &Fga) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.coeffs
            .iter()
            .map(|(w, q)| format!("({})·δ[{}]", fga.render(q), render_elem(g, *w)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Generators of the form `a·δ_id + b·δ_{s_i}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GenKind {
    /// Demazure element `X_i = (1/x_i)(δ_i − 1)`.
    X,
    /// Push-pull element `Y_i = 1/x_{−i} + (1/x_i)δ_i`.
    Y,
    /// `τ_i = (t + t^{-1})Y_i − t` (Hecke mode).
    Tau,
}

/// `Q_W` over one root system and specialization, with memoized word products.
pub struct TwistedAlgebra {
    group: Arc<WeylGroup>,
    fga: Arc<Fga>,
    cache: RwLock<HashMap<(GenKind, ElemId), Arc<QWElem>>>,
}

impl TwistedAlgebra {
    pub fn new(group: Arc<WeylGroup>, fga: Arc<Fga>) -> Self {
        assert_eq!(group.system().spec, fga.system().spec, "root system mismatch");
        TwistedAlgebra { group, fga, cache: RwLock::new(HashMap::new()) }
    }

    pub fn group(&self) -> &Arc<WeylGroup> {
        &self.group
    }

    pub fn fga(&self) -> &Arc<Fga> {
        &self.fga
    }

    pub fn nvars(&self) -> usize {
        self.fga.nvars()
    }

    pub fn delta(&self, w: ElemId) -> QWElem {
        QWElem::delta(self.nvars(), w)
    }

    pub fn one(&self) -> QWElem {
        self.delta(0)
    }

    pub fn qw_mul(&self, a: &QWElem, b: &QWElem) -> QWElem {
        let g = &self.group;
        let parts: Vec<(ElemId, RatFunc)> = a
            .coeffs
            .par_iter()
            .flat_map_iter(|(w, q)| {
                b.coeffs.iter().map(move |(w2, q2)| {
                    let t = self.fga.weyl_act(g, *w, q2);
                    (g.mul(*w, *w2), q.mul(&t))
                })
            })
            .collect();
        QWElem::from_map(self.nvars(), parts)
    }

    fn check_kind(&self, kind: GenKind) -> Result<()> {
        if kind == GenKind::Tau && self.fga.mode() != FglMode::Hecke {
            return Err(Error::WrongMode("hecke".into()));
        }
        Ok(())
    }

    /// `(w(a), w(b))` for the generator `a·δ_id + b·δ_{s_i}` with `β = w(α_i)`.
    fn gen_coeffs(&self, kind: GenKind, beta: &Root) -> (RatFunc, RatFunc) {
        let yp = self.fga.y_of(beta).expect("root");
        let neg: Root = beta.iter().map(|x| -x).collect();
        let ym = self.fga.y_of(&neg).expect("root");
        let ip = yp.inv().expect("nonzero");
        match kind {
            GenKind::X => (ip.neg(), ip),
            GenKind::Y => (ym.inv().expect("nonzero"), ip),
            GenKind::Tau => {
                let t = self.fga.t();
                let c = t.add(&t.inv().unwrap());
                (c.mul(&ym.inv().unwrap()).sub(&t), c.mul(&ip))
            }
        }
    }

    pub fn generator(&self, kind: GenKind, i: usize) -> Result<QWElem> {
        self.check_kind(kind)?;
        let (a, b) = self.gen_coeffs(kind, &self.group.system().simple(i));
        let mut h = QWElem::term(0, a);
        h.add_term(self.group.generator(i), &b);
        Ok(h)
    }

    pub fn demazure_x(&self, i: usize) -> QWElem {
        self.generator(GenKind::X, i).unwrap()
    }

    pub fn pushpull_y(&self, i: usize) -> QWElem {
        self.generator(GenKind::Y, i).unwrap()
    }

    pub fn tau(&self, i: usize) -> Result<QWElem> {
        self.generator(GenKind::Tau, i)
    }

    /// `h · g_i`, computed without acting on the coefficients of `h`.
    pub fn mul_gen(&self, h: &QWElem, kind: GenKind, i: usize) -> Result<QWElem> {
        self.check_kind(kind)?;
        let g = &self.group;
        let alpha = g.system().simple(i);
        let parts: Vec<[(ElemId, RatFunc); 2]> = h
            .coeffs
            .par_iter()
            .map(|(w, q)| {
                let (a, b) = self.gen_coeffs(kind, &g.act(*w, &alpha));
                [(*w, q.mul(&a)), (g.mul_gen(*w, i), q.mul(&b))]
            })
            .collect();
        Ok(QWElem::from_map(self.nvars(), parts.into_iter().flatten()))
    }

    /// Left-to-right product of generators; the empty word gives `δ_id`.
    pub fn word_product(&self, kind: GenKind, word: &[usize]) -> Result<QWElem> {
        let mut h = self.one();
        for &i in word {
            h = self.mul_gen(&h, kind, i)?;
        }
        Ok(h)
    }

    /// Word product along the canonical reduced word of `v`, memoized.
    pub fn basis_elem(&self, kind: GenKind, v: ElemId) -> Result<Arc<QWElem>> {
        self.check_kind(kind)?;
        if let Some(h) = self.cache.read().unwrap().get(&(kind, v)) {
            return Ok(h.clone());
        }
        let h = match self.group.word(v).last() {
            None => Arc::new(self.one()),
            Some(&i) => {
                let prev = self.basis_elem(kind, self.group.mul_gen(v, i))?;
                Arc::new(self.mul_gen(&prev, kind, i)?)
            }
        };
        self.cache.write().unwrap().entry((kind, v)).or_insert_with(|| h.clone());
        Ok(h)
    }

    /// Coefficients `c_v` with `h = Σ_v c_v·Y_{I_v}` over canonical reduced words.
    pub fn expand_in_y_basis(&self, h: &QWElem) -> Result<BTreeMap<ElemId, RatFunc>> {
        let g = &self.group;
        let mut rest = h.clone();
        let mut out = BTreeMap::new();
        while let Some(u) = rest.support().into_iter().max_by(|a, b| g.len(*a).cmp(&g.len(*b)).then(b.cmp(a))) {
            let y = self.basis_elem(GenKind::Y, u)?;
            let lead = y.coeff(u);
            if lead.is_zero() {
                return Err(Error::SingularLeadingTerm);
            }
            let c = rest.coeff(u).div(&lead)?;
            rest = rest.sub(&y.scale(&c));
            if rest.coeffs.contains_key(&u) {
                return Err(Error::SingularLeadingTerm);
            }
            out.insert(u, c);
        }
        Ok(out)
    }

    /// `Σ_v c_v·Y_{I_v}`.
    pub fn assemble_from_y_basis(&self, coeffs: &BTreeMap<ElemId, RatFunc>) -> Result<QWElem> {
        let mut h = QWElem::zero(self.nvars());
        for (v, c) in coeffs {
            h = h.add(&self.basis_elem(GenKind::Y, *v)?.scale(c));
        }
        Ok(h)
    }

    /// `(h f)_w = Σ_v w(q_v)·f_{wv}`.
    pub fn act_on_gkm(&self, h: &QWElem, f: &GkmClass) -> GkmClass {
        let g = &self.group;
        let values: Vec<RatFunc> = g
            .elements()
            .into_par_iter()
            .map(|w| {
                let mut acc = RatFunc::zero(self.nvars());
                for (v, q) in &h.coeffs {
                    let fv = f.get(g.mul(w, *v));
                    if fv.is_zero() {
                        continue;
                    }
                    acc = acc.add(&self.fga.weyl_act(g, w, q).mul(fv));
                }
                acc
            })
            .collect();
        GkmClass::from_values(values)
    }

    /// Action of a single generator: `(g_i f)_w = w(a)·f_w + w(b)·f_{ws_i}`.
    pub fn apply_gen(&self, kind: GenKind, i: usize, f: &GkmClass) -> Result<GkmClass> {
        self.check_kind(kind)?;
        let g = &self.group;
        let alpha = g.system().simple(i);
        let values: Vec<RatFunc> = g
            .elements()
            .into_par_iter()
            .map(|w| {
                let (fw, fws) = (f.get(w), f.get(g.mul_gen(w, i)));
                if fw.is_zero() && fws.is_zero() {
                    return RatFunc::zero(self.nvars());
                }
                let (a, b) = self.gen_coeffs(kind, &g.act(w, &alpha));
                a.mul(fw).add(&b.mul(fws))
            })
            .collect();
        Ok(GkmClass::from_values(values))
    }

    /// Applies `g_{i_1}⋯g_{i_l}` as an operator, so `g_{i_l}` acts first.
    pub fn apply_word(&self, kind: GenKind, word: &[usize], f: &GkmClass) -> Result<GkmClass> {
        let mut cur = f.clone();
        for &i in word.iter().rev() {
            cur = self.apply_gen(kind, i, &cur)?;
        }
        Ok(cur)
    }
}
