use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::ring::{Monomial, MultiPoly, RatFunc};

/// Laurent polynomial in `t` with integer coefficients, `Σ_k coeffs[k]·t^{low+k}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentT {
    low: i32,
    coeffs: Vec<BigInt>,
}

impl LaurentT {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    pub fn t_inv() -> Self {
        Self::monomial(-1, 1)
    }

    pub fn monomial(e: i32, c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(e, vec![c.into()])
    }

    /// `t^{-1} − t`.
    pub fn tinv_minus_t() -> Self {
        Self::t_inv().sub(&Self::t())
    }

    pub fn from_coeffs(low: i32, coeffs: Vec<BigInt>) -> Self {
        let mut s = LaurentT { low, coeffs };
        s.trim();
        s
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i32;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent present (0 for zero).
    pub fn low(&self) -> i32 {
        self.low
    }

    /// Highest exponent present.
    pub fn high(&self) -> i32 {
        self.low + self.coeffs.len() as i32 - 1
    }

    pub fn coeff(&self, e: i32) -> BigInt {
        let k = e - self.low;
        if k < 0 || k as usize >= self.coeffs.len() {
            BigInt::zero()
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(k, c)| (self.low + k as i32, c))
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let low = self.low.min(o.low);
        let high = self.high().max(o.high());
        let coeffs = (low..=high).map(|e| self.coeff(e) + o.coeff(e)).collect();
        Self::from_coeffs(low, coeffs)
    }

    pub fn neg(&self) -> Self {
        LaurentT { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(self.low + o.low, out)
    }

    pub fn mul_int(&self, k: &BigInt) -> Self {
        Self::from_coeffs(self.low, self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn shift(&self, e: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentT { low: self.low + e, coeffs: self.coeffs.clone() }
    }

    /// `t ↦ t^{-1}`.
    pub fn bar(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.coeffs.clone();
        c.reverse();
        LaurentT { low: -self.high(), coeffs: c }
    }

    /// As a rational function in variable `t_var` of an `nvars`-variable ring.
    pub fn to_ratfunc(&self, nvars: usize, t_var: usize) -> RatFunc {
        let num = MultiPoly::from_terms(
            nvars,
            self.terms().map(|(e, c)| (Monomial::var(nvars, t_var, (e - self.low.min(0)) as u16), c.clone())),
        );
        let den = MultiPoly::monomial(Monomial::var(nvars, t_var, (-self.low.min(0)) as u16), BigInt::one());
        RatFunc::new(num, den).unwrap()
    }
}

impl fmt::Display for LaurentT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let mono = match e {
                0 => String::new(),
                1 => "t".into(),
                _ => format!("t^{e}"),
            };
            match (mono.is_empty(), a.is_one()) {
                (true, _) => write!(f, "{a}")?,
                (false, true) => write!(f, "{mono}")?,
                (false, false) => write!(f, "{a}*{mono}")?,
            }
        }
        Ok(())
    }
}
