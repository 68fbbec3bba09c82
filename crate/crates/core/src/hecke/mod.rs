//! The Hecke algebra `ℋ` over `Z[t^{±1}]` with `τ_i² = (t^{-1} − t)τ_i + 1`,
//! its bar involution, Kazhdan–Lusztig polynomials and the KL basis `γ_w`.

mod kl;
mod laurent;

pub use kl::{KlTable, QPoly};
pub use laurent::LaurentT;

use std::collections::{BTreeMap, HashMap};
use std::path::Path;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::qw::{GenKind, QWElem, TwistedAlgebra};
use crate::roots::{render_elem, ElemId, WeylGroup};

/// `Σ_w a_w τ_w`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HeckeElem {
    coeffs: BTreeMap<ElemId, LaurentT>,
}

impl HeckeElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn tau(w: ElemId) -> Self {
        Self::term(w, LaurentT::one())
    }

    pub fn term(w: ElemId, a: LaurentT) -> Self {
        let mut h = Self::zero();
        h.add_term(w, &a);
        h
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, w: ElemId) -> LaurentT {
        self.coeffs.get(&w).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (ElemId, &LaurentT)> {
        self.coeffs.iter().map(|(w, a)| (*w, a))
    }

    pub fn add_term(&mut self, w: ElemId, a: &LaurentT) {
        if a.is_zero() {
            return;
        }
        let e = self.coeffs.entry(w).or_default();
        *e = e.add(a);
        if e.is_zero() {
            self.coeffs.remove(&w);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (w, a) in &o.coeffs {
            out.add_term(*w, a);
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&LaurentT::monomial(0, -1)))
    }

    pub fn scale(&self, c: &LaurentT) -> Self {
        let mut out = Self::zero();
        for (w, a) in &self.coeffs {
            out.add_term(*w, &a.mul(c));
        }
        out
    }

    pub fn render(&self, g: &WeylGroup) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.coeffs
            .iter()
            .map(|(w, a)| format!("({a})·τ[{}]", render_elem(g, *w)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

pub struct HeckeAlgebra {
    group: Arc<WeylGroup>,
    bar_cache: RwLock<HashMap<ElemId, Arc<HeckeElem>>>,
    kl: OnceLock<Arc<KlTable>>,
}

impl HeckeAlgebra {
    pub fn new(group: Arc<WeylGroup>) -> Self {
        HeckeAlgebra { group, bar_cache: RwLock::new(HashMap::new()), kl: OnceLock::new() }
    }

    pub fn group(&self) -> &Arc<WeylGroup> {
        &self.group
    }

    /// `h·τ_i`.
    pub fn mul_gen(&self, h: &HeckeElem, i: usize) -> HeckeElem {
        let g = &self.group;
        let q = LaurentT::tinv_minus_t();
        let mut out = HeckeElem::zero();
        for (w, a) in h.terms() {
            let ws = g.mul_gen(w, i);
            out.add_term(ws, a);
            if g.len(ws) < g.len(w) {
                out.add_term(w, &a.mul(&q));
            }
        }
        out
    }

    /// `τ_i·h`.
    pub fn gen_mul(&self, i: usize, h: &HeckeElem) -> HeckeElem {
        let g = &self.group;
        let q = LaurentT::tinv_minus_t();
        let mut out = HeckeElem::zero();
        for (w, a) in h.terms() {
            let sw = g.gen_mul(i, w);
            out.add_term(sw, a);
            if g.len(sw) < g.len(w) {
                out.add_term(w, &a.mul(&q));
            }
        }
        out
    }

    pub fn mul(&self, a: &HeckeElem, b: &HeckeElem) -> HeckeElem {
        let mut out = HeckeElem::zero();
        for (v, c) in b.terms() {
            let mut h = a.scale(c);
            for &i in self.group.word(v) {
                h = self.mul_gen(&h, i);
            }
            out = out.add(&h);
        }
        out
    }

    /// `γ_{s_i} = τ_i + t`.
    pub fn gamma_simple(&self, i: usize) -> HeckeElem {
        let mut h = HeckeElem::tau(self.group.generator(i));
        h.add_term(0, &LaurentT::t());
        h
    }

    /// `bar(τ_w) = bar(τ_{ws})·(τ_s + t − t^{-1})`.
    fn bar_tau(&self, w: ElemId) -> Arc<HeckeElem> {
        if let Some(h) = self.bar_cache.read().unwrap().get(&w) {
            return h.clone();
        }
        let h = match self.group.word(w).last() {
            None => Arc::new(HeckeElem::tau(0)),
            Some(&i) => {
                let prev = self.bar_tau(self.group.mul_gen(w, i));
                let shift = prev.scale(&LaurentT::tinv_minus_t().neg());
                Arc::new(self.mul_gen(&prev, i).add(&shift))
            }
        };
        self.bar_cache.write().unwrap().entry(w).or_insert_with(|| h.clone());
        h
    }

    /// The ring involution `t ↦ t^{-1}`, `τ_i ↦ τ_i^{-1}`.
    pub fn bar(&self, h: &HeckeElem) -> HeckeElem {
        let mut out = HeckeElem::zero();
        for (w, a) in h.terms() {
            out = out.add(&self.bar_tau(w).scale(&a.bar()));
        }
        out
    }

    /// The KL table, computed on first use.
    pub fn kl_table(&self) -> &Arc<KlTable> {
        self.kl.get_or_init(|| Arc::new(KlTable::compute(&self.group)))
    }

    /// Like [`Self::kl_table`], but reads and writes a cache file under `dir`.
    pub fn kl_table_cached(&self, dir: &Path) -> Result<&Arc<KlTable>> {
        if let Some(t) = self.kl.get() {
            return Ok(t);
        }
        let t = KlTable::load_or_compute(&self.group, dir)?;
        Ok(self.kl.get_or_init(|| Arc::new(t)))
    }

    pub fn kl_polynomial(&self, v: ElemId, w: ElemId) -> Result<QPoly> {
        if !self.group.bruhat_leq(v, w) {
            return Err(Error::NotComparable(format!(
                "{} and {}",
                render_elem(&self.group, v),
                render_elem(&self.group, w)
            )));
        }
        Ok(self.kl_table().get(v, w).cloned().unwrap_or_default())
    }

    pub fn mu_coefficient(&self, z: ElemId, v: ElemId) -> Result<BigInt> {
        if z == v || !self.group.bruhat_leq(z, v) {
            return Err(Error::NotComparable(format!(
                "{} and {}",
                render_elem(&self.group, z),
                render_elem(&self.group, v)
            )));
        }
        Ok(self.kl_table().mu(&self.group, z, v))
    }

    /// `γ_w = τ_w + Σ_{v<w} t·π_{v,w}(t)·τ_v` with `π_{v,w}(t) = t^{ℓ(w)−ℓ(v)−1}P_{v,w}(t^{-2})`.
    pub fn kl_basis(&self, w: ElemId) -> HeckeElem {
        let g = &self.group;
        let table = self.kl_table();
        let mut out = HeckeElem::zero();
        for v in g.lower_interval(w) {
            let d = (g.len(w) - g.len(v)) as i32;
            let p = table.get(v, w).expect("v ≤ w");
            for (k, c) in p.iter().enumerate() {
                out.add_term(v, &LaurentT::monomial(d - 2 * k as i32, c.clone()));
            }
        }
        out
    }

    /// `γ_w` by a route independent of the KL table: the bar-invariant
    /// `τ_w + Σ_{v<w} c_vτ_v` with `c_v ∈ tZ[t]`, fixed by descending length,
    /// since `c_v − bar(c_v)` is the `τ_v`-coefficient of the bar image of the
    /// part already determined.
    pub fn solve_bar_invariant(&self, w: ElemId) -> HeckeElem {
        let g = &self.group;
        let mut gamma = HeckeElem::tau(w);
        for len in (0..g.len(w)).rev() {
            let b = self.bar(&gamma);
            for v in g.elements().filter(|&v| g.len(v) == len) {
                let r = b.coeff(v);
                let pos: Vec<BigInt> = (1..=r.high().max(0)).map(|e| r.coeff(e)).collect();
                gamma.add_term(v, &LaurentT::from_coeffs(1, pos));
            }
        }
        gamma
    }

    pub fn rationally_smooth(&self, w: ElemId) -> bool {
        let table = self.kl_table();
        self.group.lower_interval(w).into_iter().all(|v| {
            let p = table.get(v, w).expect("v ≤ w");
            p.len() == 1 && p[0].is_one()
        })
    }

    /// Image in `Q_W` under `τ_i ↦ (t + t^{-1})Y_i − t`.
    pub fn to_qw(&self, h: &HeckeElem, qw: &TwistedAlgebra) -> Result<QWElem> {
        let n = qw.nvars();
        let t = qw.fga().layout().t();
        let mut out = QWElem::zero(n);
        for (v, a) in h.terms() {
            let tv = qw.basis_elem(GenKind::Tau, v)?;
            out = out.add(&tv.scale(&a.to_ratfunc(n, t)));
        }
        Ok(out)
    }
}

pub(crate) fn is_zero_poly(p: &[BigInt]) -> bool {
    p.iter().all(|c| c.is_zero())
}

pub(crate) fn one_poly() -> QPoly {
    vec![BigInt::one()]
}
