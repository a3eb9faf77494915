//! Exact arithmetic: Laurent polynomials in `p`, their fraction field,
//! sparse polynomials in the Satake parameters, and truncated series in `v`.

pub mod json;
mod laurent;
mod prime_rat;
mod upoly;
mod vseries;
mod xpoly;

pub(crate) use laurent::pow_signed;
pub use laurent::PrimeLaurent;
pub use prime_rat::PrimeRat;
pub use vseries::VSeries;
pub use xpoly::{Assignment, Monomial, XPoly};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `num / den` as a reduced rational.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}
