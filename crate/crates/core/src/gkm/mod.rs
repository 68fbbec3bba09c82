//! GKM classes: functions `W → S`, stored densely in element-id order.
//!
//! Classes are indexed by `w` directly; the point class is supported at the
//! identity.

mod classes;
mod positivity;
mod bracket;
mod rho;

pub use bracket::*;
pub use classes::*;
pub use positivity::*;
pub use rho::*;

use serde::Serialize;

use crate::fga::Fga;
use crate::ring::RatFunc;
use crate::roots::{render_elem, ElemId, WeylGroup};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GkmClass {
    values: Vec<RatFunc>,
}

impl GkmClass {
    pub fn from_values(values: Vec<RatFunc>) -> Self {
        GkmClass { values }
    }

    pub fn constant(size: usize, c: RatFunc) -> Self {
        GkmClass { values: vec![c; size] }
    }

    pub fn zero(size: usize, nvars: usize) -> Self {
        Self::constant(size, RatFunc::zero(nvars))
    }

    pub fn get(&self, w: ElemId) -> &RatFunc {
        &self.values[w]
    }

    pub fn values(&self) -> &[RatFunc] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    pub fn support(&self) -> Vec<ElemId> {
        (0..self.values.len()).filter(|&w| !self.values[w].is_zero()).collect()
    }

    pub fn map(&self, f: impl Fn(&RatFunc) -> RatFunc) -> Self {
        GkmClass { values: self.values.iter().map(f).collect() }
    }

    pub fn try_map<E>(&self, f: impl Fn(&RatFunc) -> Result<RatFunc, E>) -> Result<Self, E> {
        Ok(GkmClass { values: self.values.iter().map(f).collect::<Result<_, _>>()? })
    }

    pub fn add(&self, o: &Self) -> Self {
        GkmClass { values: self.values.iter().zip(&o.values).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        GkmClass { values: self.values.iter().zip(&o.values).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        self.map(|v| v.mul(c))
    }

    /// Element labels paired with rendered values, in id order.
    pub fn table(&self, g: &WeylGroup, render: impl Fn(&RatFunc) -> String) -> Vec<(String, String)> {
        self.values.iter().enumerate().map(|(w, v)| (render_elem(g, w), render(v))).collect()
    }
}

/// What a serialized table holds.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassKind {
    BottSamelson,
    KlSchubert,
    Smooth,
    Point,
    Rho,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassId {
    pub kind: ClassKind,
    pub index: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableEntry {
    pub element: String,
    pub value: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassTable {
    pub family: String,
    pub rank: usize,
    pub mode: String,
    pub class: ClassId,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub values: Vec<TableEntry>,
}

impl ClassTable {
    pub fn new(fga: &Fga, g: &WeylGroup, class: ClassId, c: &GkmClass, render: impl Fn(&RatFunc) -> String) -> Self {
        let spec = fga.system().spec;
        ClassTable {
            family: spec.family.to_string(),
            rank: spec.rank,
            mode: fga.mode().name().to_string(),
            class,
            note: None,
            values: c.table(g, render).into_iter().map(|(element, value)| TableEntry { element, value }).collect(),
        }
    }

    pub fn to_text(&self) -> String {
        let kind = serde_json::to_value(&self.class.kind).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default();
        let mut s = format!(
            "# {}{} {} {}[{}]\n",
            self.family,
            if self.family == "G2" { String::new() } else { self.rank.to_string() },
            self.mode,
            kind,
            self.class.index
        );
        if let Some(n) = &self.note {
            s.push_str(&format!("# {n}\n"));
        }
        for e in &self.values {
            s.push_str(&format!("{}\t{}\n", e.element, e.value));
        }
        s
    }
}
