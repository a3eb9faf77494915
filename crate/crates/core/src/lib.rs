//! Exact symbolic computation of spherical-map images and of the rational
//! generating series of the symplectic Hecke operators `T(p^d)` in genus at
//! most three.
//!
//! Everything is exact: coefficients live in `Q[p, 1/p]` with `p` a formal
//! prime, polynomials are sparse in the Satake parameters `x0..xn`, and
//! generating series are truncated power series in `v`.

pub mod algebra;
pub mod error;
pub mod parse;
pub mod reference;
pub mod render;
pub mod series;
pub mod spherical;
pub mod symmetric;
pub mod verify;

pub use algebra::{PrimeLaurent, PrimeRat, VSeries, XPoly};
pub use error::{Error, Result};
pub use series::hecke::HeckeExpr;
pub use symmetric::Signature;

/// Implements owned/borrowed combinations of `+ - *` given the `&T op &T` impls.
#[macro_export]
#[doc(hidden)]
macro_rules! forward_owned_binops {
    ($t:ty) => {
        $crate::forward_owned_binops!(@one $t, Add, add);
        $crate::forward_owned_binops!(@one $t, Sub, sub);
        $crate::forward_owned_binops!(@one $t, Mul, mul);
    };
    (@one $t:ty, $tr:ident, $m:ident) => {
        impl std::ops::$tr<$t> for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                std::ops::$tr::$m(&self, &rhs)
            }
        }
        impl std::ops::$tr<&$t> for $t {
            type Output = $t;
            fn $m(self, rhs: &$t) -> $t {
                std::ops::$tr::$m(&self, rhs)
            }
        }
        impl std::ops::$tr<$t> for &$t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                std::ops::$tr::$m(self, &rhs)
            }
        }
    };
}
