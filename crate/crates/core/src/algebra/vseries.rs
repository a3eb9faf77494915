use std::fmt;

use super::{PrimeLaurent, XPoly};
use crate::error::{Error, Result};

/// Power series in `v` truncated after `v^order`, with [`XPoly`] coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VSeries {
    nvars: usize,
    coeffs: Vec<XPoly>,
}

impl VSeries {
    /// Series with the given coefficients `v^0..v^{len-1}`; the order is `len - 1`.
    pub fn from_coeffs(nvars: usize, coeffs: Vec<XPoly>) -> Result<Self> {
        assert!(!coeffs.is_empty(), "a series needs at least the v^0 coefficient");
        if let Some(bad) = coeffs.iter().find(|c| c.nvars() != nvars) {
            return Err(Error::VarMismatch { left: nvars, right: bad.nvars() });
        }
        Ok(Self { nvars, coeffs })
    }

    pub fn zero(nvars: usize, order: usize) -> Self {
        Self { nvars, coeffs: vec![XPoly::zero(nvars); order + 1] }
    }

    pub fn one(nvars: usize, order: usize) -> Self {
        let mut s = Self::zero(nvars, order);
        s.coeffs[0] = XPoly::one(nvars);
        s
    }

    /// The polynomial `sum_k coeffs[k] v^k`, truncated or zero-padded to `order`.
    pub fn polynomial(nvars: usize, coeffs: &[XPoly], order: usize) -> Result<Self> {
        let mut s = Self::zero(nvars, order);
        for (k, c) in coeffs.iter().enumerate().take(order + 1) {
            if c.nvars() != nvars {
                return Err(Error::VarMismatch { left: nvars, right: c.nvars() });
            }
            s.coeffs[k] = c.clone();
        }
        Ok(s)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn coeffs(&self) -> &[XPoly] {
        &self.coeffs
    }

    /// Coefficient of `v^k`; `None` beyond the truncation order.
    pub fn coeff(&self, k: usize) -> Option<&XPoly> {
        self.coeffs.get(k)
    }

    pub fn set_coeff(&mut self, k: usize, c: XPoly) {
        assert_eq!(c.nvars(), self.nvars);
        self.coeffs[k] = c;
    }

    /// Drops coefficients beyond `order` (no-op if already lower).
    pub fn truncate(&self, order: usize) -> Self {
        Self { nvars: self.nvars, coeffs: self.coeffs.iter().take(order + 1).cloned().collect() }
    }

    /// Highest `k` with a nonzero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let order = self.order().min(other.order());
        let coeffs = (0..=order).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect();
        Ok(Self { nvars: self.nvars, coeffs })
    }

    /// Cauchy product, truncated to the smaller of the two orders.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let order = self.order().min(other.order());
        let mut coeffs = vec![XPoly::zero(self.nvars); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Ok(Self { nvars: self.nvars, coeffs })
    }

    /// Multiplicative inverse up to the truncation order; needs constant term 1.
    pub fn recip(&self) -> Result<Self> {
        if self.coeffs[0] != XPoly::one(self.nvars) {
            return Err(Error::NonUnitConstantTerm);
        }
        let order = self.order();
        let mut out: Vec<XPoly> = Vec::with_capacity(order + 1);
        out.push(XPoly::one(self.nvars));
        for k in 1..=order {
            let mut acc = XPoly::zero(self.nvars);
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc = &acc - &(&self.coeffs[j] * &out[k - j]);
                }
            }
            out.push(acc);
        }
        Ok(Self { nvars: self.nvars, coeffs: out })
    }

    /// Coefficientwise image under `f`.
    pub fn map(&self, f: impl Fn(&XPoly) -> Result<XPoly>) -> Result<Self> {
        let coeffs = self.coeffs.iter().map(f).collect::<Result<Vec<_>>>()?;
        let nvars = coeffs[0].nvars();
        Self::from_coeffs(nvars, coeffs)
    }

    /// Constant coefficients as Laurent polynomials, when every coefficient is constant.
    pub fn scalar_coeffs(&self) -> Option<Vec<PrimeLaurent>> {
        self.coeffs.iter().map(XPoly::as_constant).collect()
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.nvars == other.nvars {
            Ok(())
        } else {
            Err(Error::VarMismatch { left: self.nvars, right: other.nvars })
        }
    }
}

impl fmt::Display for VSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                writeln!(f, "v^{k}: {c}")?;
            }
        }
        write!(f, "O(v^{})", self.order() + 1)
    }
}

impl fmt::Debug for VSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VSeries[order {}]({self})", self.order())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> XPoly {
        XPoly::var(4, i)
    }

    /// `1 + c v`.
    fn linear(c: XPoly, order: usize) -> VSeries {
        VSeries::polynomial(4, &[XPoly::one(4), c], order).unwrap()
    }

    #[test]
    fn conjugate_product() {
        let a = linear(x(0), 4);
        let b = linear(-x(0), 4);
        let prod = a.try_mul(&b).unwrap();
        let expect = VSeries::polynomial(4, &[XPoly::one(4), XPoly::zero(4), -x(0).pow(2)], 4).unwrap();
        assert_eq!(prod, expect);
    }

    #[test]
    fn truncation_contract() {
        let a = linear(x(1), 3);
        let b = linear(x(2), 5);
        assert_eq!(a.try_mul(&b).unwrap().order(), 3);
    }

    #[test]
    fn geometric_series() {
        let r = linear(-x(0), 3).recip().unwrap();
        let expect: Vec<XPoly> = (0..4).map(|k| x(0).pow(k)).collect();
        assert_eq!(r.coeffs(), &expect[..]);
        assert_eq!(VSeries::one(4, 5).recip().unwrap(), VSeries::one(4, 5));
    }

    #[test]
    fn non_unit_constant_term() {
        let s = VSeries::polynomial(4, &[x(1)], 2).unwrap();
        assert_eq!(s.recip(), Err(Error::NonUnitConstantTerm));
    }

    #[test]
    fn genus_one_series_times_denominator() {
        let q = linear(-x(0), 8).try_mul(&linear(-&x(0) * &x(1), 8)).unwrap();
        let r = q.recip().unwrap();
        assert_eq!(r.try_mul(&q).unwrap(), VSeries::one(4, 8));
        // v^2 coefficient of the inverse: x0^2 (1 + x1 + x1^2)
        let c2 = &(&XPoly::one(4) + &x(1)) + &x(1).pow(2);
        assert_eq!(r.coeff(2).unwrap(), &(&x(0).pow(2) * &c2));
    }

    #[test]
    fn var_mismatch() {
        let a = VSeries::one(3, 2);
        let b = VSeries::one(4, 2);
        assert_eq!(a.try_mul(&b), Err(Error::VarMismatch { left: 3, right: 4 }));
        assert!(VSeries::from_coeffs(4, vec![XPoly::one(3)]).is_err());
    }

    #[test]
    fn scalar_coefficients() {
        let s = VSeries::polynomial(4, &[XPoly::one(4), XPoly::constant(4, PrimeLaurent::p())], 1).unwrap();
        assert_eq!(s.scalar_coeffs().unwrap(), vec![PrimeLaurent::one(), PrimeLaurent::p()]);
    }
}
