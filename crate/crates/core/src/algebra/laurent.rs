use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::upoly::{self, UPoly};
use crate::error::{Error, Result};

/// Laurent polynomial in the formal prime `p` with rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PrimeLaurent {
    terms: BTreeMap<i32, BigRational>,
}

impl PrimeLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    /// The indeterminate `p`.
    pub fn p() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(c)))
    }

    /// `c * p^exp`.
    pub fn monomial(c: BigRational, exp: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// `p^exp`.
    pub fn p_pow(exp: i32) -> Self {
        Self::monomial(BigRational::one(), exp)
    }

    /// Builds from `(exponent, coefficient)` pairs, merging duplicates.
    pub fn from_terms<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (i32, BigRational)>,
    {
        let mut out = Self::zero();
        for (e, c) in pairs {
            out.add_term(e, c);
        }
        out
    }

    /// Integer coefficients `coeffs[k]` of `p^k`.
    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Self::from_terms(
            coeffs.iter().enumerate().map(|(k, &c)| (k as i32, BigRational::from_integer(BigInt::from(c)))),
        )
    }

    fn add_term(&mut self, exp: i32, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(One::is_one)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &BigRational)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i32) -> BigRational {
        self.terms.get(&exp).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// Coefficient of the highest power of `p`.
    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.terms.values().next_back()
    }

    /// `Some(c)` when the value is a constant (including zero).
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Multiplies by `p^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self { terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Value at a concrete nonzero `p`.
    pub fn eval(&self, prime: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (&e, c) in &self.terms {
            acc += c * pow_signed(prime, e);
        }
        acc
    }

    /// Splits into `p^shift * poly(p)` with `poly(0) != 0`; `None` for zero.
    pub(crate) fn to_shifted_poly(&self) -> Option<(i32, UPoly)> {
        let lo = self.min_exp()?;
        let hi = self.max_exp()?;
        let mut poly = vec![BigRational::zero(); (hi - lo) as usize + 1];
        for (&e, c) in &self.terms {
            poly[(e - lo) as usize] = c.clone();
        }
        Some((lo, poly))
    }

    pub(crate) fn from_shifted_poly(shift: i32, poly: &[BigRational]) -> Self {
        Self::from_terms(poly.iter().enumerate().map(|(k, c)| (k as i32 + shift, c.clone())))
    }

    /// Exact quotient in the Laurent ring `Q[p, 1/p]`.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let Some((bs, bpoly)) = divisor.to_shifted_poly() else {
            return Err(Error::DivisionByZero);
        };
        let Some((as_, apoly)) = self.to_shifted_poly() else {
            return Ok(Self::zero());
        };
        if bpoly.len() == 1 {
            let inv = bpoly[0].recip();
            return Ok(self.shift(-bs).scale(&inv));
        }
        let (q, r) = upoly::divrem(&apoly, &bpoly);
        if !upoly::is_zero(&r) {
            return Err(Error::NotDivisible);
        }
        Ok(Self::from_shifted_poly(as_ - bs, &q))
    }

    /// `(exponent, coefficient)` when the value is a single term.
    pub fn as_monomial(&self) -> Option<(i32, &BigRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(&e, c)| (e, c))
        } else {
            None
        }
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        use num_integer::Integer;
        self.terms.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn leading_is_negative(&self) -> bool {
        self.leading_coeff().is_some_and(Signed::is_negative)
    }
}

pub(crate) fn pow_signed(base: &BigRational, e: i32) -> BigRational {
    let mag = num_traits::pow(base.clone(), e.unsigned_abs() as usize);
    if e < 0 {
        mag.recip()
    } else {
        mag
    }
}

impl From<i64> for PrimeLaurent {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl From<BigRational> for PrimeLaurent {
    fn from(c: BigRational) -> Self {
        Self::constant(c)
    }
}

impl<'a> Add<&'a PrimeLaurent> for &'a PrimeLaurent {
    type Output = PrimeLaurent;
    fn add(self, rhs: &PrimeLaurent) -> PrimeLaurent {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&PrimeLaurent> for PrimeLaurent {
    fn add_assign(&mut self, rhs: &PrimeLaurent) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl SubAssign<&PrimeLaurent> for PrimeLaurent {
    fn sub_assign(&mut self, rhs: &PrimeLaurent) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, -c.clone());
        }
    }
}

impl<'a> Sub<&'a PrimeLaurent> for &'a PrimeLaurent {
    type Output = PrimeLaurent;
    fn sub(self, rhs: &PrimeLaurent) -> PrimeLaurent {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a PrimeLaurent> for &'a PrimeLaurent {
    type Output = PrimeLaurent;
    fn mul(self, rhs: &PrimeLaurent) -> PrimeLaurent {
        if self.is_zero() || rhs.is_zero() {
            return PrimeLaurent::zero();
        }
        if rhs.is_one() {
            return self.clone();
        }
        if self.is_one() {
            return rhs.clone();
        }
        let mut out = PrimeLaurent::zero();
        for (&ea, ca) in &self.terms {
            for (&eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &PrimeLaurent {
    type Output = PrimeLaurent;
    fn neg(self) -> PrimeLaurent {
        PrimeLaurent { terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect() }
    }
}

impl Neg for PrimeLaurent {
    type Output = PrimeLaurent;
    fn neg(self) -> PrimeLaurent {
        -&self
    }
}

crate::forward_owned_binops!(PrimeLaurent);

impl fmt::Display for PrimeLaurent {
    /// Descending powers, e.g. `2*p^2-p-1+3/p`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { "-" } else { "+" })?;
            }
            first = false;
            write_scaled_power(f, &mag, "p", e)?;
        }
        Ok(())
    }
}

impl fmt::Debug for PrimeLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PrimeLaurent({self})")
    }
}

/// Writes `mag * var^e` for a positive rational magnitude.
fn write_scaled_power(f: &mut impl fmt::Write, mag: &BigRational, var: &str, e: i32) -> fmt::Result {
    let unit = mag.is_one();
    match e {
        0 => write!(f, "{mag}"),
        _ if e > 0 => {
            if !unit {
                write!(f, "{mag}*")?;
            }
            if e == 1 {
                write!(f, "{var}")
            } else {
                write!(f, "{var}^{e}")
            }
        }
        _ => {
            let numer = mag.numer();
            let denom = mag.denom();
            write!(f, "{numer}/")?;
            if denom.is_one() {
                if e == -1 {
                    write!(f, "{var}")
                } else {
                    write!(f, "{var}^{}", -e)
                }
            } else if e == -1 {
                write!(f, "({denom}*{var})")
            } else {
                write!(f, "({denom}*{var}^{})", -e)
            }
        }
    }
}
