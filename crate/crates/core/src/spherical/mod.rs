//! Spherical maps: `omega` on the Hecke ring of `GL_n` and `Omega` on the
//! symplectic generators.

pub mod cosets;
pub mod counting;
pub mod hall_littlewood;
pub mod images;

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use cosets::{coset_counts, is_prime, omega_cosets, CosetMatrix};
pub use counting::{count_symmetric_of_rank, phi, sm, sm_full_rank};
pub use hall_littlewood::{omega_hl, omega_hl_cached, omega_pi, vandermonde};
pub use images::{hecke_image, sp_image_pbracket, sp_image_ti, sp_image_tp};

use crate::algebra::XPoly;
use crate::error::{Error, Result};
use crate::symmetric::Signature;

/// A way of computing `omega(t(p^lambda))`.
pub trait OmegaMethod: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    /// With `prime` set the result has `p` specialized to it.
    fn omega(&self, lambda: &Signature, n: usize, prime: Option<u64>) -> Result<XPoly>;
}

/// Closed-form symmetrization, formal in `p`.
pub struct HallLittlewood;

impl OmegaMethod for HallLittlewood {
    fn name(&self) -> &'static str {
        "hl"
    }

    fn description(&self) -> &'static str {
        "signed symmetrization over the Vandermonde, formal in p"
    }

    fn omega(&self, lambda: &Signature, n: usize, prime: Option<u64>) -> Result<XPoly> {
        let w = omega_hl(lambda, n)?;
        Ok(match prime {
            Some(q) => w.specialize_p(&BigRational::from_integer(BigInt::from(q))),
            None => w,
        })
    }
}

/// Left-coset enumeration at a concrete prime.
pub struct CosetCount;

impl OmegaMethod for CosetCount {
    fn name(&self) -> &'static str {
        "cosets"
    }

    fn description(&self) -> &'static str {
        "enumeration of Hermite normal form cosets at a concrete prime"
    }

    fn omega(&self, lambda: &Signature, n: usize, prime: Option<u64>) -> Result<XPoly> {
        omega_cosets(lambda, n, prime.ok_or(Error::MissingPrime)?)
    }
}

/// Named [`OmegaMethod`]s.
#[derive(Clone, Default)]
pub struct OmegaRegistry {
    methods: BTreeMap<&'static str, Arc<dyn OmegaMethod>>,
}

impl OmegaRegistry {
    pub fn with_defaults() -> Self {
        let mut r = Self::default();
        r.register(Arc::new(HallLittlewood));
        r.register(Arc::new(CosetCount));
        r
    }

    pub fn register(&mut self, method: Arc<dyn OmegaMethod>) {
        self.methods.insert(method.name(), method);
    }

    pub fn get(&self, name: &str) -> Result<Arc<dyn OmegaMethod>> {
        self.methods.get(name).cloned().ok_or_else(|| Error::UnknownMethod(name.to_string()))
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.methods.keys().copied().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_lookup() {
        let r = OmegaRegistry::with_defaults();
        assert_eq!(r.names(), vec!["cosets", "hl"]);
        assert!(matches!(r.get("maple"), Err(Error::UnknownMethod(_))));
        let lambda = Signature::new(vec![1, 0, 0]).unwrap();
        let cosets = r.get("cosets").unwrap();
        assert_eq!(cosets.omega(&lambda, 3, None), Err(Error::MissingPrime));
        assert_eq!(
            cosets.omega(&lambda, 3, Some(3)).unwrap(),
            r.get("hl").unwrap().omega(&lambda, 3, Some(3)).unwrap()
        );
    }
}
