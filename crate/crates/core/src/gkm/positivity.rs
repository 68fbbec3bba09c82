use serde::{Deserialize, Serialize};

use super::{GkmClass, GkmSpace};
use crate::error::{Error, Result};
use crate::ring::RatFunc;
use crate::roots::{parse_elem, Root, RootSystem};

/// The shipped certificate for `(𝔖_{s_1s_0s_1})_id` in type `C_2`.
pub const POSEX_C2: &str = include_str!("../../fixtures/posex_c2.json");

/// Certificates for the same value that must be rejected, by name.
pub const MALFORMED_FIXTURES: [(&str, &str); 6] = [
    ("sign_pattern", include_str!("../../fixtures/malformed/sign_pattern.json")),
    ("wrong_sum", include_str!("../../fixtures/malformed/wrong_sum.json")),
    ("u_power", include_str!("../../fixtures/malformed/u_power.json")),
    ("not_a_root", include_str!("../../fixtures/malformed/not_a_root.json")),
    ("wrong_system", include_str!("../../fixtures/malformed/wrong_system.json")),
    ("truncated", include_str!("../../fixtures/malformed/truncated.json")),
];

/// One monomial `coeff·u^{u_power}·Π y_{−α}`, with the exponent data `(k, m)`
/// that justifies its sign and `u`-power.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CertTerm {
    /// Positive roots in simple-root coordinates, with multiplicity.
    pub roots: Vec<Root>,
    pub coeff: i64,
    pub u_power: u32,
    pub k: i64,
    pub m: i64,
}

/// A positive rewriting of the value of `𝔖_class` at `at`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PositivityCertificate {
    pub family: String,
    pub rank: usize,
    pub class: String,
    pub at: String,
    pub terms: Vec<CertTerm>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PositivityReport {
    /// The terms sum to the class value.
    pub sum_matches: bool,
    /// Per-term violations of the sign and `u`-power pattern.
    pub violations: Vec<String>,
}

impl PositivityReport {
    pub fn passed(&self) -> bool {
        self.sum_matches && self.violations.is_empty()
    }
}

impl PositivityCertificate {
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::MalformedCertificate(e.to_string()))
    }
}

/// Checks the certificate against `class` (which must be `𝔖_{cert.class}` in `space`).
pub fn verify_positivity(space: &GkmSpace, cert: &PositivityCertificate, class: &GkmClass) -> Result<PositivityReport> {
    let g = space.group();
    let sys = g.system();
    let bad = |m: String| Error::MalformedCertificate(m);
    if cert.family.parse::<crate::roots::Family>().ok() != Some(sys.family()) || cert.rank != sys.rank() {
        return Err(bad(format!("certificate is for {}{}, space is {}", cert.family, cert.rank, sys.spec)));
    }
    let v = parse_elem(g, &cert.class).map_err(|e| bad(e.to_string()))?;
    let w = parse_elem(g, &cert.at).map_err(|e| bad(e.to_string()))?;
    let base = sys.n_pos() as i64 - g.len(v) as i64;
    let fga = space.fga();
    let mut report = PositivityReport::default();
    let mut sum = fga.zero();
    for (n, term) in cert.terms.iter().enumerate() {
        let mut mono = fga.one();
        for r in &term.roots {
            if r.len() != sys.rank() || !RootSystem::is_positive(r) || !sys.is_root(r) {
                return Err(bad(format!("term {n}: {r:?} is not a positive root")));
            }
            mono = mono.mul(&fga.y_neg(r));
        }
        let (k, m) = (term.k, term.m);
        let mut why = Vec::new();
        if m != term.roots.len() as i64 {
            why.push(format!("m = {m} but the degree is {}", term.roots.len()));
        }
        if k < base || k > m {
            why.push(format!("k = {k} outside [{base}, {m}]"));
        }
        if (m - k).rem_euclid(2) != 0 || term.u_power as i64 * 2 != m - k {
            why.push(format!("u-power {} does not equal (m − k)/2", term.u_power));
        }
        if term.coeff == 0 {
            why.push("zero coefficient".into());
        } else if (term.coeff < 0) != ((k - base).rem_euclid(2) == 1) {
            why.push(format!("sign of {} disagrees with (−1)^(k − {base})", term.coeff));
        }
        if !why.is_empty() {
            report.violations.push(format!("term {n}: {}", why.join("; ")));
        }
        let c = RatFunc::from_int(fga.nvars(), term.coeff).mul(&fga.u().pow(term.u_power as i32)?);
        sum = sum.add(&c.mul(&mono));
    }
    report.sum_matches = sum == *class.get(w);
    Ok(report)
}
