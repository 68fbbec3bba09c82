//! Hyperbolic formal group law `F(x,y) = (x + y − μ1·x·y)/(1 + μ2·x·y)`, the
//! elements `y_λ` and the Weyl group action on the formal group algebra.
//!
//! Values are stored in one of two coordinate charts:
//!
//! * `Direct`: the root variables `x_i = y_{α_i}` themselves.
//! * `Exponential`: variables `z_i` with `y_λ = (1 − z^λ)/(A − B·z^λ)`, where
//!   `A + B = μ1` and `A·B = −μ2`. This linearizes the group law, so the Weyl
//!   action is a monomial substitution. Used for the Hecke and multiplicative
//!   specializations, where `A`, `B` are rational in the parameters.
//!
//! All rendering converts back to the `x` chart.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::ring::{Monomial, MultiPoly, RatFunc, VarRegistry};
use crate::roots::{eps_of_root, ElemId, Family, Root, RootSystem, WeylGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FglMode {
    GenericHyperbolic,
    Additive,
    Multiplicative,
    Lorentz,
    Hecke,
}

impl FglMode {
    pub fn all() -> [FglMode; 5] {
        use FglMode::*;
        [GenericHyperbolic, Additive, Multiplicative, Lorentz, Hecke]
    }

    pub fn name(self) -> &'static str {
        match self {
            FglMode::GenericHyperbolic => "generic",
            FglMode::Additive => "additive",
            FglMode::Multiplicative => "ktheory",
            FglMode::Lorentz => "lorentz",
            FglMode::Hecke => "hecke",
        }
    }
}

impl std::str::FromStr for FglMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "generic" | "hyperbolic" => Ok(FglMode::GenericHyperbolic),
            "additive" => Ok(FglMode::Additive),
            "ktheory" | "multiplicative" => Ok(FglMode::Multiplicative),
            "lorentz" => Ok(FglMode::Lorentz),
            "hecke" => Ok(FglMode::Hecke),
            _ => Err(Error::Parse(format!("unknown mode {s:?}"))),
        }
    }
}

/// Indices of the named variables in the shared registry.
#[derive(Clone, Copy, Debug)]
pub struct Layout {
    pub rank: usize,
}

impl Layout {
    pub fn x(&self, i: usize) -> usize {
        i
    }
    pub fn mu1(&self) -> usize {
        self.rank
    }
    pub fn mu2(&self) -> usize {
        self.rank + 1
    }
    pub fn u(&self) -> usize {
        self.rank + 2
    }
    pub fn t(&self) -> usize {
        self.rank + 3
    }
    pub fn z(&self, i: usize) -> usize {
        self.rank + 4 + i
    }
    pub fn nvars(&self) -> usize {
        2 * self.rank + 4
    }
}

/// Registry shared by every mode over the same root system.
pub fn registry_for(sys: &RootSystem) -> VarRegistry {
    let mut names: Vec<String> = (0..sys.rank()).map(|i| format!("x{}", sys.label(i))).collect();
    names.extend(["mu1", "mu2", "u", "t"].map(String::from));
    names.extend((0..sys.rank()).map(|i| format!("z{}", sys.label(i))));
    VarRegistry::new(names)
}

#[derive(Clone, Debug)]
enum Chart {
    Direct,
    /// `y_λ = (1 − z^λ)/(A − B z^λ)`.
    Exponential { a: RatFunc, b: RatFunc },
}

/// The formal group algebra of a root system under one specialization.
#[derive(Debug)]
pub struct Fga {
    system: Arc<RootSystem>,
    mode: FglMode,
    reg: VarRegistry,
    lay: Layout,
    chart: Chart,
    mu1: RatFunc,
    mu2: RatFunc,
    u: RatFunc,
    ycache: RwLock<HashMap<Root, RatFunc>>,
    wcache: RwLock<HashMap<ElemId, Arc<Vec<(usize, RatFunc)>>>>,
}

impl Fga {
    pub fn new(system: Arc<RootSystem>, mode: FglMode) -> Self {
        let lay = Layout { rank: system.rank() };
        let n = lay.nvars();
        let reg = registry_for(&system);
        let int = |k: i64| RatFunc::from_int(n, k);
        let t = RatFunc::var(n, lay.t());
        let t2 = t.mul(&t);
        let one_t2 = t2.add(&int(1));
        let (mu1, mu2, chart) = match mode {
            FglMode::GenericHyperbolic => (RatFunc::var(n, lay.mu1()), RatFunc::var(n, lay.mu2()), Chart::Direct),
            FglMode::Additive => (int(0), int(0), Chart::Direct),
            FglMode::Lorentz => (int(0), RatFunc::var(n, lay.u()).neg(), Chart::Direct),
            FglMode::Multiplicative => (int(1), int(0), Chart::Exponential { a: int(1), b: int(0) }),
            FglMode::Hecke => {
                let u = t2.div(&one_t2.mul(&one_t2)).unwrap();
                let a = int(1).div(&one_t2).unwrap();
                let b = t2.div(&one_t2).unwrap();
                (int(1), u.neg(), Chart::Exponential { a, b })
            }
        };
        let u = mu2.neg();
        Fga {
            system,
            mode,
            reg,
            lay,
            chart,
            mu1,
            mu2,
            u,
            ycache: RwLock::new(HashMap::new()),
            wcache: RwLock::new(HashMap::new()),
        }
    }

    pub fn mode(&self) -> FglMode {
        self.mode
    }

    pub fn system(&self) -> &Arc<RootSystem> {
        &self.system
    }

    pub fn registry(&self) -> &VarRegistry {
        &self.reg
    }

    pub fn layout(&self) -> Layout {
        self.lay
    }

    pub fn nvars(&self) -> usize {
        self.lay.nvars()
    }

    pub fn uses_exponential_chart(&self) -> bool {
        matches!(self.chart, Chart::Exponential { .. })
    }

    pub fn zero(&self) -> RatFunc {
        RatFunc::zero(self.nvars())
    }

    pub fn one(&self) -> RatFunc {
        RatFunc::one(self.nvars())
    }

    pub fn int(&self, k: i64) -> RatFunc {
        RatFunc::from_int(self.nvars(), k)
    }

    pub fn mu1(&self) -> &RatFunc {
        &self.mu1
    }

    pub fn mu2(&self) -> &RatFunc {
        &self.mu2
    }

    /// `u = −μ2`.
    pub fn u(&self) -> &RatFunc {
        &self.u
    }

    /// The parameter `t` (meaningful in Hecke mode).
    pub fn t(&self) -> RatFunc {
        RatFunc::var(self.nvars(), self.lay.t())
    }

    /// `F(a, b)`.
    pub fn fgl_add(&self, a: &RatFunc, b: &RatFunc) -> Result<RatFunc> {
        let ab = a.mul(b);
        let num = a.add(b).sub(&self.mu1.mul(&ab));
        let den = self.one().add(&self.mu2.mul(&ab));
        if den.is_zero() {
            return Err(Error::DegenerateDenominator("1 + μ2·a·b".into()));
        }
        num.div(&den)
    }

    /// Formal inverse `−a/(1 − μ1·a)`.
    pub fn fgl_inverse(&self, a: &RatFunc) -> Result<RatFunc> {
        let den = self.one().sub(&self.mu1.mul(a));
        if den.is_zero() {
            return Err(Error::DegenerateDenominator("1 − μ1·a".into()));
        }
        a.neg().div(&den)
    }

    /// `x_i = y_{α_i}` in the working chart.
    pub fn x(&self, i: usize) -> RatFunc {
        self.y_of(&self.system.simple(i)).expect("simple root")
    }

    /// `y_λ` for `λ` in the root lattice (simple-root coordinates).
    pub fn y_of(&self, lambda: &[i32]) -> Result<RatFunc> {
        if let Some(v) = self.ycache.read().unwrap().get(lambda) {
            return Ok(v.clone());
        }
        let v = match &self.chart {
            Chart::Direct => {
                let mut acc = self.zero();
                for (i, &c) in lambda.iter().enumerate() {
                    let xi = RatFunc::var(self.nvars(), self.lay.x(i));
                    for _ in 0..c.max(0) {
                        acc = self.fgl_add(&acc, &xi)?;
                    }
                }
                for (i, &c) in lambda.iter().enumerate() {
                    if c < 0 {
                        let inv = self.fgl_inverse(&RatFunc::var(self.nvars(), self.lay.x(i)))?;
                        for _ in 0..-c {
                            acc = self.fgl_add(&acc, &inv)?;
                        }
                    }
                }
                acc
            }
            Chart::Exponential { a, b } => {
                let n = self.nvars();
                let (mut p, mut m) = (Monomial::one(n), Monomial::one(n));
                for (i, &c) in lambda.iter().enumerate() {
                    if c > 0 {
                        p.0[self.lay.z(i)] = c as u16;
                    } else if c < 0 {
                        m.0[self.lay.z(i)] = (-c) as u16;
                    }
                }
                // (1 − P/M)/(A − B·P/M) = (M − P)/(A·M − B·P)
                let pp = RatFunc::from_poly(MultiPoly::monomial(p, BigInt::from(1)));
                let mm = RatFunc::from_poly(MultiPoly::monomial(m, BigInt::from(1)));
                let den = a.mul(&mm).sub(&b.mul(&pp));
                mm.sub(&pp).div(&den)?
            }
        };
        self.ycache.write().unwrap().entry(lambda.to_vec()).or_insert_with(|| v.clone());
        Ok(v)
    }

    /// `y_{−α}` for a root `α`.
    pub fn y_neg(&self, alpha: &[i32]) -> RatFunc {
        let neg: Root = alpha.iter().map(|x| -x).collect();
        self.y_of(&neg).expect("root")
    }

    /// `κ_i = 1/y_{−α_i} + 1/x_i`.
    pub fn kappa(&self, i: usize) -> RatFunc {
        let a = self.system.simple(i);
        let xm = self.y_neg(&a);
        xm.inv().unwrap().add(&self.x(i).inv().unwrap())
    }

    /// `w(f)`, determined by `w(y_λ) = y_{wλ}`.
    pub fn weyl_act(&self, g: &WeylGroup, w: ElemId, f: &RatFunc) -> RatFunc {
        if w == 0 || f.is_constant() {
            return f.clone();
        }
        match &self.chart {
            Chart::Direct => {
                let b = self.direct_bindings(g, w);
                f.substitute(&b).expect("Weyl action is an automorphism")
            }
            Chart::Exponential { .. } => {
                let r = self.system.rank();
                let images: Vec<Root> = (0..r).map(|i| g.act(w, &self.system.simple(i))).collect();
                let (nn, ns) = self.monomial_map(f.numer(), &images);
                let (dn, ds) = self.monomial_map(f.denom(), &images);
                // f ↦ z^{ns} nn / (z^{ds} dn)
                let n = self.nvars();
                let (mut pos, mut neg) = (Monomial::one(n), Monomial::one(n));
                for i in 0..r {
                    let d = ns[i] - ds[i];
                    let v = self.lay.z(i);
                    if d > 0 {
                        pos.0[v] = d as u16;
                    } else {
                        neg.0[v] = (-d) as u16;
                    }
                }
                RatFunc::from_coprime(nn.mul_monomial(&pos), dn.mul_monomial(&neg))
            }
        }
    }

    fn direct_bindings(&self, g: &WeylGroup, w: ElemId) -> Arc<Vec<(usize, RatFunc)>> {
        if let Some(b) = self.wcache.read().unwrap().get(&w) {
            return b.clone();
        }
        let b: Vec<(usize, RatFunc)> = (0..self.system.rank())
            .map(|i| (self.lay.x(i), self.y_of(&g.act(w, &self.system.simple(i))).unwrap()))
            .collect();
        let b = Arc::new(b);
        self.wcache.write().unwrap().entry(w).or_insert_with(|| b.clone());
        b
    }

    /// Applies `z^e ↦ z^{Σ e_i·image_i}`; returns the polynomial with its
    /// monomial content removed and that (signed) content.
    fn monomial_map(&self, p: &MultiPoly, images: &[Root]) -> (MultiPoly, Vec<i32>) {
        let r = self.system.rank();
        let n = self.nvars();
        let mapped: Vec<(Vec<i32>, &Monomial, &BigInt)> = p
            .terms()
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0i32; r];
                for i in 0..r {
                    let k = m.0[self.lay.z(i)] as i32;
                    if k != 0 {
                        for j in 0..r {
                            e[j] += k * images[i][j];
                        }
                    }
                }
                (e, m, c)
            })
            .collect();
        let mut shift = vec![i32::MAX; r];
        for (e, _, _) in &mapped {
            for j in 0..r {
                shift[j] = shift[j].min(e[j]);
            }
        }
        if mapped.is_empty() {
            shift = vec![0; r];
        }
        let terms = mapped.into_iter().map(|(e, m, c)| {
            let mut mm = m.clone();
            for j in 0..r {
                mm.0[self.lay.z(j)] = (e[j] - shift[j]) as u16;
            }
            (mm, c.clone())
        });
        (MultiPoly::from_terms(n, terms), shift)
    }

    /// Rewrites a chart value in the root variables `x_i`.
    pub fn to_x(&self, f: &RatFunc) -> RatFunc {
        match &self.chart {
            Chart::Direct => f.clone(),
            Chart::Exponential { a, b } => {
                let b2: Vec<(usize, RatFunc)> = (0..self.system.rank())
                    .filter(|&i| f.uses_var(self.lay.z(i)))
                    .map(|i| {
                        let x = RatFunc::var(self.nvars(), self.lay.x(i));
                        let one = self.one();
                        let z = one.sub(&a.mul(&x)).div(&one.sub(&b.mul(&x))).unwrap();
                        (self.lay.z(i), z)
                    })
                    .collect();
                f.substitute(&b2).expect("chart change is invertible")
            }
        }
    }

    /// Rewrites an expression in the root variables into the working chart.
    pub fn from_x(&self, f: &RatFunc) -> Result<RatFunc> {
        match &self.chart {
            Chart::Direct => Ok(f.clone()),
            Chart::Exponential { .. } => {
                let b: Vec<(usize, RatFunc)> = (0..self.system.rank())
                    .filter(|&i| f.uses_var(self.lay.x(i)))
                    .map(|i| (self.lay.x(i), self.x(i)))
                    .collect();
                f.substitute(&b)
            }
        }
    }

    /// Canonical string in the root variables.
    pub fn render(&self, f: &RatFunc) -> String {
        self.to_x(f).render(&self.reg)
    }

    /// Evaluates the Hecke parameter at a rational value.
    pub fn eval_t(&self, f: &RatFunc, t: &BigRational) -> Result<RatFunc> {
        f.eval_at(&[(self.lay.t(), t.clone())])
    }

    /// Bracket label `[ij]` of `y_{−β}` for a positive root `β` (types A and C).
    pub fn bracket_label(&self, beta: &[i32]) -> Option<String> {
        let e = eps_of_root(&self.system, beta).ok()?;
        let nz: Vec<(usize, i32)> = e.iter().copied().enumerate().filter(|(_, x)| *x != 0).collect();
        match self.system.family() {
            Family::A => match nz.as_slice() {
                [(i, 1), (j, -1)] => Some(format!("[{}{}]", i + 1, j + 1)),
                _ => None,
            },
            Family::C | Family::B => match nz.as_slice() {
                [(i, -1), (j, 1)] => Some(format!("[{}{}]", i + 1, j + 1)),
                [(i, 1), (j, 1)] => Some(format!("[-{}{}]", i + 1, j + 1)),
                [(i, k)] if *k > 0 => Some(format!("[-{}{}]", i + 1, i + 1)),
                _ => None,
            },
            _ => None,
        }
    }
}

impl RatFunc {
    /// Canonical form of parts that are coprime up to a monomial factor.
    pub fn from_coprime(num: MultiPoly, den: MultiPoly) -> RatFunc {
        RatFunc::from_coprime_up_to_monomial(num, den)
    }
}
