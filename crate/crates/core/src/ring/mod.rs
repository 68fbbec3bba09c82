//! Exact multivariate polynomials and rational functions over the integers.

mod gcd;
mod poly;
mod ratfunc;

pub use gcd::gcd;
pub use poly::{Monomial, MultiPoly};
pub use ratfunc::RatFunc;

use std::sync::Arc;

/// Ordered list of variable names shared by all values of one computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarRegistry {
    names: Arc<Vec<String>>,
}

impl VarRegistry {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Self {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        assert!(names.len() <= u16::MAX as usize);
        VarRegistry { names: Arc::new(names) }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }
}
