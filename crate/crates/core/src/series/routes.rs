//! Interchangeable ways of computing the numerator `P_n(v)`.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::generating::{p3_closed_form, p_numerator};
use crate::algebra::VSeries;
use crate::error::{Error, Result};

pub trait NumeratorRoute: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    fn numerator(&self, n: usize, order: usize) -> Result<VSeries>;
}

/// `R_n(v) Q_n(v)` with the tail checked to vanish.
pub struct Rationality;

impl NumeratorRoute for Rationality {
    fn name(&self) -> &'static str {
        "rationality"
    }

    fn description(&self) -> &'static str {
        "multiply R_n(v) by Q_n(v) and check the tail vanishes"
    }

    fn numerator(&self, n: usize, order: usize) -> Result<VSeries> {
        p_numerator(n, order)
    }
}

/// The reduced double sum times six linear factors (genus 3 only).
pub struct ClosedForm;

impl NumeratorRoute for ClosedForm {
    fn name(&self) -> &'static str {
        "closed-form"
    }

    fn description(&self) -> &'static str {
        "reduced sum over omega(t(1, p^a, p^b)) times six linear factors"
    }

    fn numerator(&self, n: usize, order: usize) -> Result<VSeries> {
        if n != 3 {
            return Err(Error::UnsupportedGenus(n));
        }
        Ok(p3_closed_form(order, order)?.truncate(6.min(order)))
    }
}

#[derive(Clone, Default)]
pub struct NumeratorRegistry {
    routes: BTreeMap<&'static str, Arc<dyn NumeratorRoute>>,
}

impl NumeratorRegistry {
    pub fn with_defaults() -> Self {
        let mut r = Self::default();
        r.register(Arc::new(Rationality));
        r.register(Arc::new(ClosedForm));
        r
    }

    pub fn register(&mut self, route: Arc<dyn NumeratorRoute>) {
        self.routes.insert(route.name(), route);
    }

    pub fn get(&self, name: &str) -> Result<Arc<dyn NumeratorRoute>> {
        self.routes.get(name).cloned().ok_or_else(|| Error::UnknownMethod(name.to_string()))
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.routes.keys().copied().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry() {
        let r = NumeratorRegistry::with_defaults();
        assert_eq!(r.names(), vec!["closed-form", "rationality"]);
        assert!(r.get("guess").is_err());
        assert_eq!(r.get("closed-form").unwrap().numerator(2, 10), Err(Error::UnsupportedGenus(2)));
    }
}
