use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::gcd::gcd;
use super::poly::{Monomial, MultiPoly};
use super::VarRegistry;
use crate::error::{Error, Result};

/// Reduced quotient of integer polynomials.
///
/// Canonical form: numerator and denominator coprime, the integer coefficients
/// of both jointly coprime, and the leading coefficient of the denominator positive.
/// Structural equality is therefore equality of rational functions.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFunc {
    pub fn zero(nvars: usize) -> Self {
        RatFunc { num: MultiPoly::zero(nvars), den: MultiPoly::one(nvars) }
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_int(nvars, 1)
    }

    pub fn from_int(nvars: usize, c: impl Into<BigInt>) -> Self {
        RatFunc { num: MultiPoly::constant(nvars, c), den: MultiPoly::one(nvars) }
    }

    pub fn from_ratio(nvars: usize, n: impl Into<BigInt>, d: impl Into<BigInt>) -> Result<Self> {
        Self::new(MultiPoly::constant(nvars, n), MultiPoly::constant(nvars, d))
    }

    pub fn from_rational(nvars: usize, r: &BigRational) -> Self {
        Self::from_ratio(nvars, r.numer().clone(), r.denom().clone()).expect("nonzero denominator")
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::from_poly(MultiPoly::var(nvars, i))
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        let n = p.nvars();
        RatFunc { num: p, den: MultiPoly::one(n) }
    }

    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: MultiPoly, den: MultiPoly) -> Self {
        let n = num.nvars();
        if num.is_zero() {
            return Self::zero(n);
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        Self::normalize(num, den)
    }

    /// Fixes integer content and sign of already coprime parts.
    fn normalize(num: MultiPoly, den: MultiPoly) -> Self {
        let c = num.content().gcd(&den.content());
        let c = if den.leading_coeff().is_negative() { -c } else { c };
        if c.is_one() {
            RatFunc { num, den }
        } else {
            RatFunc { num: num.div_scalar(&c), den: den.div_scalar(&c) }
        }
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn numer(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denom(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn constant_value(&self) -> Option<BigRational> {
        Some(BigRational::new(self.num.constant_value()?, self.den.constant_value()?))
    }

    pub fn uses_var(&self, v: usize) -> bool {
        self.num.uses_var(v) || self.den.uses_var(v)
    }

    pub fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            let num = self.num.add(&o.num);
            return Self::reduce(num, self.den.clone());
        }
        if self.den.is_one() {
            return Self::normalize(self.num.mul(&o.den).add(&o.num), o.den.clone());
        }
        if o.den.is_one() {
            return Self::normalize(self.num.add(&o.num.mul(&self.den)), self.den.clone());
        }
        let g = gcd(&self.den, &o.den);
        if g.is_constant() {
            let num = self.num.mul(&o.den).add(&o.num.mul(&self.den));
            return Self::normalize(num, self.den.mul(&o.den));
        }
        let b1 = self.den.div_exact(&g).unwrap();
        let d1 = o.den.div_exact(&g).unwrap();
        let num = self.num.mul(&d1).add(&o.num.mul(&b1));
        if num.is_zero() {
            return Self::zero(self.nvars());
        }
        let h = gcd(&num, &g);
        let (num, g) = if h.is_constant() {
            (num, g)
        } else {
            (num.div_exact(&h).unwrap(), g.div_exact(&h).unwrap())
        };
        Self::normalize(num, b1.mul(&d1).mul(&g))
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.nvars());
        }
        if self.is_one() {
            return o.clone();
        }
        if o.is_one() {
            return self.clone();
        }
        let g1 = gcd(&self.num, &o.den);
        let g2 = gcd(&o.num, &self.den);
        let a = exact(&self.num, &g1);
        let d = exact(&o.den, &g1);
        let c = exact(&o.num, &g2);
        let b = exact(&self.den, &g2);
        Self::normalize(a.mul(&c), b.mul(&d))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        self.mul(&Self::from_rational(self.nvars(), k))
    }

    pub fn mul_int(&self, k: i64) -> Self {
        self.mul(&Self::from_int(self.nvars(), k))
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        let e = e as u32;
        Ok(RatFunc { num: self.num.pow(e), den: self.den.pow(e) })
    }

    /// Multiplies by a Laurent monomial given as positive and negative exponent parts.
    pub fn mul_laurent_monomial(&self, pos: &Monomial, neg: &Monomial) -> Self {
        let num = self.num.mul_monomial(pos);
        let den = self.den.mul_monomial(neg);
        let common = num.monomial_content().gcd(&den.monomial_content());
        RatFunc { num: num.div_monomial(&common), den: den.div_monomial(&common) }
    }

    /// Builds `num/den` from parts known to be coprime up to a monomial factor.
    pub(crate) fn from_coprime_up_to_monomial(num: MultiPoly, den: MultiPoly) -> Self {
        let common = num.monomial_content().gcd(&den.monomial_content());
        Self::normalize(num.div_monomial(&common), den.div_monomial(&common))
    }

    /// Simultaneous substitution of variables by rational functions.
    pub fn substitute(&self, bindings: &[(usize, RatFunc)]) -> Result<Self> {
        if bindings.is_empty() {
            return Ok(self.clone());
        }
        let (nn, nd) = subst_poly(&self.num, bindings);
        let (dn, dd) = subst_poly(&self.den, bindings);
        if dn.is_zero() {
            return Err(Error::SubstitutionPole);
        }
        // (nn/nd) / (dn/dd)
        Ok(RatFunc::reduce(nn.mul(&dd), nd.mul(&dn)))
    }

    /// Evaluation of variables at rational numbers.
    pub fn eval_at(&self, bindings: &[(usize, BigRational)]) -> Result<Self> {
        let n = self.nvars();
        let b: Vec<(usize, RatFunc)> =
            bindings.iter().map(|(v, r)| (*v, RatFunc::from_rational(n, r))).collect();
        self.substitute(&b).map_err(|e| match e {
            Error::SubstitutionPole => Error::EvaluationPole,
            e => e,
        })
    }

    pub fn render(&self, reg: &VarRegistry) -> String {
        let num = self.num.render(reg);
        if self.den.is_one() {
            return num;
        }
        let wrap = |p: &MultiPoly, s: String| {
            if p.len() > 1 || (p.len() == 1 && !p.terms()[0].0.is_one() && !p.terms()[0].1.is_one()) {
                format!("({s})")
            } else {
                s
            }
        };
        let num_s = if self.num.len() > 1 { format!("({num})") } else { num };
        format!("{}/{}", num_s, wrap(&self.den, self.den.render(reg)))
    }
}

fn exact(a: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    if g.is_one() {
        a.clone()
    } else {
        a.div_exact(g).expect("gcd divides")
    }
}

/// Returns `(P~, D)` with `p(bindings) = P~ / D`; `D` is a product of binding denominators.
fn subst_poly(p: &MultiPoly, bindings: &[(usize, RatFunc)]) -> (MultiPoly, MultiPoly) {
    let n = p.nvars();
    let Some(((v, val), rest)) = bindings.split_first() else {
        return (p.clone(), MultiPoly::one(n));
    };
    if !p.uses_var(*v) {
        return subst_poly(p, rest);
    }
    let coeffs = p.coefficients_in(*v);
    let d = coeffs.len() - 1;
    let parts: Vec<(MultiPoly, MultiPoly)> = coeffs.iter().map(|c| subst_poly(c, rest)).collect();
    // Common denominator of the coefficient parts.
    let mut common = MultiPoly::one(n);
    for (_, den) in &parts {
        if !den.is_one() {
            let g = gcd(&common, den);
            common = common.mul(&den.div_exact(&g).unwrap());
        }
    }
    let (nv, dv) = (val.numer(), val.denom());
    let mut npow = vec![MultiPoly::one(n)];
    let mut dpow = vec![MultiPoly::one(n)];
    for k in 1..=d {
        npow.push(npow[k - 1].mul(nv));
        dpow.push(dpow[k - 1].mul(dv));
    }
    let mut acc = MultiPoly::zero(n);
    for (k, (num, den)) in parts.iter().enumerate() {
        if num.is_zero() {
            continue;
        }
        let scale = if den.is_one() { common.clone() } else { common.div_exact(den).unwrap() };
        acc = acc.add(&num.mul(&scale).mul(&npow[k]).mul(&dpow[d - k]));
    }
    (acc, common.mul(&dpow[d]))
}

impl std::fmt::Display for RatFunc {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let names: Vec<String> = (0..self.nvars()).map(|i| format!("v{i}")).collect();
        write!(f, "{}", self.render(&VarRegistry::new(names)))
    }
}
