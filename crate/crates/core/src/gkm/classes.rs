use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use super::GkmClass;
use crate::error::{Error, Result};
use crate::fga::{Fga, FglMode};
use crate::hecke::HeckeAlgebra;
use crate::qw::{GenKind, QWElem, TwistedAlgebra};
use crate::ring::RatFunc;
use crate::roots::{CartanSpec, ElemId, RootSystem, WeylGroup};

/// Everything needed to compute classes for one root system and specialization.
pub struct GkmSpace {
    group: Arc<WeylGroup>,
    fga: Arc<Fga>,
    qw: TwistedAlgebra,
    hecke: Arc<HeckeAlgebra>,
    reflections: Vec<ElemId>,
    point: OnceLock<RatFunc>,
    bs: RwLock<HashMap<Vec<usize>, Arc<GkmClass>>>,
    kls: RwLock<HashMap<ElemId, Arc<GkmClass>>>,
}

impl GkmSpace {
    pub fn new(spec: CartanSpec, mode: FglMode) -> Result<Self> {
        let sys = Arc::new(RootSystem::new(spec)?);
        let group = Arc::new(WeylGroup::new(sys)?);
        Ok(Self::from_group(group, mode))
    }

    pub fn from_group(group: Arc<WeylGroup>, mode: FglMode) -> Self {
        let hecke = Arc::new(HeckeAlgebra::new(group.clone()));
        Self::with_hecke(hecke, mode)
    }

    /// Shares the Hecke algebra (and its KL table) with other spaces.
    pub fn with_hecke(hecke: Arc<HeckeAlgebra>, mode: FglMode) -> Self {
        let group = hecke.group().clone();
        let fga = Arc::new(Fga::new(group.system_arc().clone(), mode));
        let qw = TwistedAlgebra::new(group.clone(), fga.clone());
        let reflections = group
            .system()
            .positive_roots()
            .iter()
            .map(|b| group.reflection(b).expect("root"))
            .collect();
        GkmSpace {
            group,
            fga,
            qw,
            hecke,
            reflections,
            point: OnceLock::new(),
            bs: RwLock::new(HashMap::new()),
            kls: RwLock::new(HashMap::new()),
        }
    }

    pub fn group(&self) -> &Arc<WeylGroup> {
        &self.group
    }

    pub fn fga(&self) -> &Arc<Fga> {
        &self.fga
    }

    pub fn qw(&self) -> &TwistedAlgebra {
        &self.qw
    }

    pub fn hecke(&self) -> &Arc<HeckeAlgebra> {
        &self.hecke
    }

    pub fn mode(&self) -> FglMode {
        self.fga.mode()
    }

    pub fn nvars(&self) -> usize {
        self.fga.nvars()
    }

    fn require_hecke(&self) -> Result<()> {
        if self.mode() != FglMode::Hecke {
            return Err(Error::WrongMode(format!("needs hecke mode, have {}", self.mode().name())));
        }
        Ok(())
    }

    /// `Π_{α∈Φ⁺} y_{−α}`.
    pub fn point_value(&self) -> &RatFunc {
        self.point.get_or_init(|| {
            self.group
                .system()
                .positive_roots()
                .iter()
                .fold(self.fga.one(), |acc, a| acc.mul(&self.fga.y_neg(a)))
        })
    }

    /// The class of a point: `Π_{α∈Φ⁺} y_{−α}` at the identity, 0 elsewhere.
    pub fn point_class(&self) -> GkmClass {
        let mut values = vec![self.fga.zero(); self.group.size()];
        values[0] = self.point_value().clone();
        GkmClass::from_values(values)
    }

    pub fn constant_class(&self, c: RatFunc) -> GkmClass {
        GkmClass::constant(self.group.size(), c)
    }

    /// `ζ_I = Y_{i_l}⋯Y_{i_1}ζ_∅` for `I = (i_1, …, i_l)`.
    pub fn bott_samelson(&self, word: &[usize]) -> Result<Arc<GkmClass>> {
        if let Some(&i) = word.iter().find(|&&i| i >= self.group.rank()) {
            return Err(Error::IndexOutOfRange(format!("generator {i}")));
        }
        if let Some(c) = self.bs.read().unwrap().get(word) {
            return Ok(c.clone());
        }
        let c = match word.split_last() {
            None => Arc::new(self.point_class()),
            Some((&i, rest)) => {
                let prev = self.bott_samelson(rest)?;
                Arc::new(self.qw.apply_gen(GenKind::Y, i, &prev)?)
            }
        };
        self.bs.write().unwrap().entry(word.to_vec()).or_insert_with(|| c.clone());
        Ok(c)
    }

    /// `ζ_{I_w}` along the canonical reduced word of `w`.
    pub fn bott_samelson_elem(&self, w: ElemId) -> Result<Arc<GkmClass>> {
        self.bott_samelson(&self.group.word(w).to_vec())
    }

    /// `(t + t^{-1})^{-k}`.
    fn norm(&self, k: usize) -> RatFunc {
        let t = self.fga.t();
        let c = t.add(&t.inv().unwrap());
        c.pow(-(k as i32)).unwrap()
    }

    /// `(t + t^{-1})^{−ℓ(w)}Γ_w` in `Q_W`.
    pub fn normalized_gamma(&self, w: ElemId) -> Result<QWElem> {
        self.require_hecke()?;
        let gamma = self.hecke.kl_basis(w);
        Ok(self.hecke.to_qw(&gamma, &self.qw)?.scale(&self.norm(self.group.len(w))))
    }

    /// `𝔖_w = (t + t^{-1})^{−ℓ(w)}Γ_{w^{-1}}ζ_∅`.
    ///
    /// Since `ζ_∅` is supported at the identity, `(Γζ_∅)_x = x(q_{x^{-1}})·ζ_∅(id)`
    /// where `q_v` is the `δ_v`-coefficient of `Γ`.
    pub fn kl_schubert(&self, w: ElemId) -> Result<Arc<GkmClass>> {
        self.require_hecke()?;
        if let Some(c) = self.kls.read().unwrap().get(&w) {
            return Ok(c.clone());
        }
        let g = &self.group;
        let gamma = self.hecke.kl_basis(g.inverse(w));
        let n = self.nvars();
        let t = self.fga.layout().t();
        let terms: Vec<(Arc<QWElem>, RatFunc)> = gamma
            .terms()
            .map(|(v, a)| Ok((self.qw.basis_elem(GenKind::Tau, v)?, a.to_ratfunc(n, t))))
            .collect::<Result<_>>()?;
        let scale = self.norm(g.len(w)).mul(self.point_value());
        let values: Vec<RatFunc> = g
            .elements()
            .into_par_iter()
            .map(|x| {
                let xi = g.inverse(x);
                let q = terms.iter().fold(RatFunc::zero(n), |acc, (tv, a)| {
                    let c = tv.coeff(xi);
                    if c.is_zero() {
                        acc
                    } else {
                        acc.add(&a.mul(&c))
                    }
                });
                if q.is_zero() {
                    q
                } else {
                    self.fga.weyl_act(g, x, &q).mul(&scale)
                }
            })
            .collect();
        let c = Arc::new(GkmClass::from_values(values));
        self.kls.write().unwrap().entry(w).or_insert_with(|| c.clone());
        Ok(c)
    }

    /// `[X(w)]_v = Π_{β∈Φ⁺, s_βv ≰ w} y_{−β}` for `v ≤ w`, else 0.
    pub fn smooth_class(&self, w: ElemId) -> GkmClass {
        let g = &self.group;
        let roots = g.system().positive_roots();
        let values: Vec<RatFunc> = g
            .elements()
            .into_par_iter()
            .map(|v| {
                if !g.bruhat_leq(v, w) {
                    return self.fga.zero();
                }
                roots.iter().zip(&self.reflections).fold(self.fga.one(), |acc, (b, &s)| {
                    if g.bruhat_leq(g.mul(s, v), w) {
                        acc
                    } else {
                        acc.mul(&self.fga.y_neg(b))
                    }
                })
            })
            .collect();
        GkmClass::from_values(values)
    }

    /// Entrywise `t → 0`, expressed in the multiplicative specialization `target`.
    pub fn ktheory_limit(&self, c: &GkmClass, target: &Fga) -> Result<GkmClass> {
        self.require_hecke()?;
        if target.mode() != FglMode::Multiplicative || target.system().spec != self.group.system().spec {
            return Err(Error::WrongMode("target must be the multiplicative law on the same system".into()));
        }
        let zero = BigRational::zero();
        c.try_map(|v| match self.fga.eval_t(v, &zero) {
            // At t = 0 the Hecke chart coincides with the multiplicative one.
            Ok(f) => Ok(f),
            Err(Error::EvaluationPole) => {
                let x = self.fga.eval_t(&self.fga.to_x(v), &zero)?;
                target.from_x(&x)
            }
            Err(e) => Err(e),
        })
    }

    /// Reduced word of `v` whose Bott–Samelson class is the `v`-th member of
    /// the basis used by [`Self::transition_matrix`]: the reverse of the
    /// canonical word of `v^{-1}`.
    pub fn bs_basis_word(&self, v: ElemId) -> Vec<usize> {
        let mut w = self.group.word(self.group.inverse(v)).to_vec();
        w.reverse();
        w
    }

    /// Row `w` holds the coefficients `m_{w,v}` with `𝔖_w = Σ_v m_{w,v}ζ_{J_v}`,
    /// `J_v` = [`Self::bs_basis_word`]`(v)`.
    pub fn transition_row(&self, w: ElemId) -> Result<BTreeMap<ElemId, RatFunc>> {
        let g = &self.group;
        let h = self.normalized_gamma(g.inverse(w))?;
        // Y_{I_u}ζ_∅ = ζ_{rev(I_u)}, a word for u^{-1}.
        Ok(self.qw.expand_in_y_basis(&h)?.into_iter().map(|(u, c)| (g.inverse(u), c)).collect())
    }

    pub fn transition_matrix(&self) -> Result<Vec<BTreeMap<ElemId, RatFunc>>> {
        self.group.elements().map(|w| self.transition_row(w)).collect()
    }
}
