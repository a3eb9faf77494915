//! Generating series of the genus-`n` Hecke operators and their rewriting
//! over the Hecke ring.

pub mod generating;
pub mod hecke;
pub mod routes;
pub mod solve;
pub mod theorems;

pub use generating::{
    leading_term_data, p3_closed_form, p_numerator, q_poly, r_coefficient, r_series, specialize_nu, DEFAULT_ORDER,
};
pub use hecke::{GenMonomial, Generator, HeckeExpr};
pub use routes::{NumeratorRegistry, NumeratorRoute};
pub use theorems::{
    express_in_generators, functional_eq_check, functional_eq_violation, k_coefficients, p3_in_generators,
    p3_leading_term, q3_in_generators, QCoefficients, K_NAMES,
};
