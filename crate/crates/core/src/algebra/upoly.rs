//! Dense univariate polynomials over the rationals, ascending coefficient order.
//! Only the pieces needed for exact division and gcd reduction live here.

use num_rational::BigRational;
use num_traits::{One, Zero};

pub(crate) type UPoly = Vec<BigRational>;

pub(crate) fn trim(a: &mut UPoly) {
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
}

pub(crate) fn is_zero(a: &UPoly) -> bool {
    a.iter().all(Zero::is_zero)
}

/// Quotient and remainder; `b` must be nonzero and trimmed.
pub(crate) fn divrem(a: &UPoly, b: &UPoly) -> (UPoly, UPoly) {
    let mut rem = a.clone();
    trim(&mut rem);
    let db = b.len() - 1;
    let lead = &b[db];
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    while rem.len() > db && !rem.is_empty() {
        let shift = rem.len() - 1 - db;
        let c = rem.last().unwrap() / lead;
        for (i, bc) in b.iter().enumerate() {
            rem[shift + i] -= &c * bc;
        }
        quot[shift] = c;
        rem.pop();
        trim(&mut rem);
    }
    (quot, rem)
}

pub(crate) fn monic(mut a: UPoly) -> UPoly {
    trim(&mut a);
    if let Some(lead) = a.last().cloned() {
        for c in a.iter_mut() {
            *c /= &lead;
        }
    }
    a
}

/// Monic greatest common divisor.
pub(crate) fn gcd(a: &UPoly, b: &UPoly) -> UPoly {
    let mut x = a.clone();
    let mut y = b.clone();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = divrem(&x, &y);
        x = y;
        y = r;
    }
    if x.is_empty() {
        return vec![BigRational::one()];
    }
    monic(x)
}
