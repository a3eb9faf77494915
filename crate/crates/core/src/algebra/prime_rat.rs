use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::upoly;
use super::PrimeLaurent;
use crate::error::{Error, Result};

/// Element of the fraction field `Q(p)`, kept as `num / den` in lowest terms.
///
/// Canonical form: `den` is a monic polynomial in `p` with nonzero constant
/// term, coprime to `num`; every power of `p` is carried by `num`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PrimeRat {
    num: PrimeLaurent,
    den: PrimeLaurent,
}

impl PrimeRat {
    pub fn new(num: PrimeLaurent, den: PrimeLaurent) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    pub fn zero() -> Self {
        Self { num: PrimeLaurent::zero(), den: PrimeLaurent::one() }
    }

    pub fn one() -> Self {
        Self::from_laurent(PrimeLaurent::one())
    }

    pub fn from_laurent(num: PrimeLaurent) -> Self {
        Self { num, den: PrimeLaurent::one() }
    }

    pub fn numer(&self) -> &PrimeLaurent {
        &self.num
    }

    pub fn denom(&self) -> &PrimeLaurent {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn reduce(num: PrimeLaurent, den: PrimeLaurent) -> Self {
        let Some((ns, npoly)) = num.to_shifted_poly() else {
            return Self::zero();
        };
        let (ds, dpoly) = den.to_shifted_poly().expect("nonzero denominator");
        let g = upoly::gcd(&npoly, &dpoly);
        let (nq, _) = upoly::divrem(&npoly, &g);
        let (dq, _) = upoly::divrem(&dpoly, &g);
        let lead = dq.last().cloned().expect("nonzero");
        let nq: Vec<BigRational> = nq.into_iter().map(|c| c / &lead).collect();
        let dq = upoly::monic(dq);
        Self { num: PrimeLaurent::from_shifted_poly(ns - ds, &nq), den: PrimeLaurent::from_shifted_poly(0, &dq) }
    }

    /// The value as a Laurent polynomial, if its denominator clears.
    pub fn to_laurent(&self) -> Result<PrimeLaurent> {
        if self.den.is_one() {
            Ok(self.num.clone())
        } else {
            Err(Error::NotLaurent)
        }
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    /// Value at a concrete `p`; `None` if the denominator vanishes there.
    pub fn eval(&self, prime: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(prime);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(prime) / d)
        }
    }
}

impl From<PrimeLaurent> for PrimeRat {
    fn from(l: PrimeLaurent) -> Self {
        Self::from_laurent(l)
    }
}

impl<'a> Add<&'a PrimeRat> for &'a PrimeRat {
    type Output = PrimeRat;
    fn add(self, rhs: &PrimeRat) -> PrimeRat {
        if self.den == rhs.den {
            return PrimeRat::reduce(&self.num + &rhs.num, self.den.clone());
        }
        PrimeRat::reduce(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl<'a> Sub<&'a PrimeRat> for &'a PrimeRat {
    type Output = PrimeRat;
    fn sub(self, rhs: &PrimeRat) -> PrimeRat {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a PrimeRat> for &'a PrimeRat {
    type Output = PrimeRat;
    fn mul(self, rhs: &PrimeRat) -> PrimeRat {
        if self.den.is_one() && rhs.den.is_one() {
            return PrimeRat::from_laurent(&self.num * &rhs.num);
        }
        PrimeRat::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &PrimeRat {
    type Output = PrimeRat;
    fn neg(self) -> PrimeRat {
        PrimeRat { num: -&self.num, den: self.den.clone() }
    }
}

crate::forward_owned_binops!(PrimeRat);

impl fmt::Display for PrimeRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for PrimeRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PrimeRat({self})")
    }
}

impl Zero for PrimeRat {
    fn zero() -> Self {
        PrimeRat::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for PrimeRat {
    fn one() -> Self {
        PrimeRat::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(c: &[i64]) -> PrimeLaurent {
        PrimeLaurent::from_int_coeffs(c)
    }

    fn pr(n: &[i64], d: &[i64]) -> PrimeRat {
        PrimeRat::new(lp(n), lp(d)).unwrap()
    }

    #[test]
    fn inverse_pair() {
        let a = pr(&[1], &[-1, 1]);
        assert_eq!(&a * &PrimeRat::from(lp(&[-1, 1])), PrimeRat::one());
    }

    #[test]
    fn common_denominator() {
        let s = &pr(&[1], &[-1, 1]) + &pr(&[1], &[1, 1]);
        assert_eq!(s, pr(&[0, 2], &[-1, 0, 1]));
        assert_eq!(s.numer(), &lp(&[0, 2]));
        assert_eq!(s.denom(), &lp(&[-1, 0, 1]));
    }

    #[test]
    fn multiplicity_factor_at_inverse_prime() {
        // (1 - t)(1 - t^2) / (1 - t)^2 at t = 1/p
        let t = PrimeLaurent::p_pow(-1);
        let one = PrimeLaurent::one();
        let a = &one - &t;
        let b = &one - &(&t * &t);
        let v = PrimeRat::new(&a * &b, &a * &a).unwrap();
        assert_eq!(v.to_laurent().unwrap(), lp(&[1, 1]).shift(-1));
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(PrimeRat::one().checked_div(&PrimeRat::zero()), Err(Error::DivisionByZero));
        assert_eq!(PrimeRat::new(lp(&[1]), PrimeLaurent::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn denominators_are_monic() {
        let a = pr(&[3], &[2, 4]);
        assert_eq!(
            a.denom(),
            &PrimeLaurent::from_terms([(0, crate::algebra::ratio(1, 2)), (1, crate::algebra::rat(1))])
        );
        assert_eq!(a.to_laurent(), Err(Error::NotLaurent));
        let b = pr(&[0, 0, 2], &[0, 4]);
        assert_eq!(b.to_laurent().unwrap(), PrimeLaurent::from_terms([(1, crate::algebra::ratio(1, 2))]));
    }
}
