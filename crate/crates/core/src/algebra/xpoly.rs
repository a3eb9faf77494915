use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;

use super::PrimeLaurent;
use crate::error::{Error, Result};

/// Exponent vector of a monomial in `x0..x_{n-1}`.
///
/// Ordered graded-lexicographically: total degree first, then the exponent
/// of `x0`, `x1`, ... from left to right.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Self(exps)
    }

    pub fn one(nvars: usize) -> Self {
        Self(vec![0; nvars])
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    fn mul(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn div(&self, other: &Self) -> Option<Self> {
        self.0.iter().zip(&other.0).map(|(a, b)| a.checked_sub(*b)).collect::<Option<Vec<_>>>().map(Self)
    }

    fn swapped(&self, i: usize, j: usize) -> Self {
        let mut e = self.0.clone();
        e.swap(i, j);
        Self(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Images of variables for [`XPoly::substitute`]; unlisted variables must not occur.
pub type Assignment = BTreeMap<usize, XPoly>;

/// Sparse polynomial in the Satake parameters `x0..x_{nvars-1}` with
/// coefficients in `Q[p, 1/p]`.
///
/// The binary operators panic when the operands have different `nvars`;
/// the `try_*` methods report [`Error::VarMismatch`] instead.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct XPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, PrimeLaurent>,
}

impl XPoly {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, PrimeLaurent::one())
    }

    pub fn constant(nvars: usize, c: PrimeLaurent) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    /// The variable `x_index`.
    pub fn var(nvars: usize, index: usize) -> Self {
        assert!(index < nvars, "variable x{index} out of range");
        let mut e = vec![0; nvars];
        e[index] = 1;
        Self::term(Monomial(e), PrimeLaurent::one())
    }

    pub fn term(mono: Monomial, c: PrimeLaurent) -> Self {
        let nvars = mono.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mono, c);
        }
        Self { nvars, terms }
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, PrimeLaurent)>,
    {
        let mut out = Self::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "exponent vector length");
            out.add_term(m, &c);
        }
        out
    }

    fn add_term(&mut self, mono: Monomial, c: &PrimeLaurent) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&mono) {
            Some(slot) => {
                *slot += c;
                if slot.is_zero() {
                    self.terms.remove(&mono);
                }
            }
            None => {
                self.terms.insert(mono, c.clone());
            }
        }
    }

    fn sub_term(&mut self, mono: Monomial, c: &PrimeLaurent) {
        self.add_term(mono, &-c);
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (graded lexicographic, descending) order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &PrimeLaurent)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, exps: &[u32]) -> PrimeLaurent {
        self.terms.get(&Monomial(exps.to_vec())).cloned().unwrap_or_default()
    }

    /// The greatest term in the monomial order.
    pub fn leading_term(&self) -> Option<(&Monomial, &PrimeLaurent)> {
        self.terms.iter().next_back()
    }

    /// `Some(c)` when the polynomial has no variable dependence.
    pub fn as_constant(&self) -> Option<PrimeLaurent> {
        match self.terms.len() {
            0 => Some(PrimeLaurent::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                (m.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Exponents of `x_index` occurring in the polynomial, ascending.
    pub fn exponents_of(&self, index: usize) -> Vec<u32> {
        let mut v: Vec<u32> = self.terms.keys().map(|m| m.0[index]).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.nvars == other.nvars {
            Ok(())
        } else {
            Err(Error::VarMismatch { left: self.nvars, right: other.nvars })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.sub_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut acc: std::collections::HashMap<Monomial, PrimeLaurent> =
            std::collections::HashMap::with_capacity(self.len() * other.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let prod = ca * cb;
                let slot = acc.entry(ma.mul(mb)).or_default();
                *slot += &prod;
            }
        }
        Ok(Self { nvars: self.nvars, terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() })
    }

    pub fn scale(&self, c: &PrimeLaurent) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self { nvars: self.nvars, terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    /// Multiplies by the monomial with exponent vector `exps`.
    pub fn mul_monomial(&self, exps: &[u32]) -> Self {
        let shift = Monomial(exps.to_vec());
        Self { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.mul(&shift), c.clone())).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `q` with `q * divisor == self`.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        self.check_vars(divisor)?;
        let Some((lead_m, lead_c)) = divisor.leading_term() else {
            return Err(Error::DivisionByZero);
        };
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars);
        while let Some((rm, rc)) = rem.leading_term() {
            let m = rm.div(lead_m).ok_or(Error::NotDivisible)?;
            let c = rc.div_exact(lead_c)?;
            for (dm, dc) in &divisor.terms {
                rem.sub_term(dm.mul(&m), &(dc * &c));
            }
            quot.add_term(m, &c);
        }
        Ok(quot)
    }

    /// Image under the ring homomorphism fixing `p` and sending `x_i` to `assignment[i]`.
    pub fn substitute(&self, assignment: &Assignment) -> Result<Self> {
        let target = assignment.values().next().map_or(self.nvars, XPoly::nvars);
        if let Some(bad) = assignment.values().find(|v| v.nvars != target) {
            return Err(Error::VarMismatch { left: target, right: bad.nvars });
        }
        let mut powers: BTreeMap<(usize, u32), XPoly> = BTreeMap::new();
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut t = Self::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let base = assignment.get(&i).ok_or(Error::UnassignedVariable(i))?;
                let pw = powers.entry((i, e)).or_insert_with(|| base.pow(e));
                t = &t * &*pw;
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Applies `f` to every coefficient, dropping those that become zero.
    pub fn map_coeffs(&self, f: impl Fn(&PrimeLaurent) -> PrimeLaurent) -> Self {
        Self::from_terms(self.nvars, self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Specializes `p` to a concrete value; coefficients become rational constants.
    pub fn specialize_p(&self, prime: &BigRational) -> Self {
        self.map_coeffs(|c| PrimeLaurent::constant(c.eval(prime)))
    }

    /// Exchanges the variables `x_i` and `x_j`.
    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        Self { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.swapped(i, j), c.clone())).collect() }
    }

    /// Image under the variable permutation `x_k -> x_{perm[k]}`.
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.nvars, "permutation length");
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0; self.nvars];
            for (k, &x) in m.0.iter().enumerate() {
                e[perm[k]] = x;
            }
            (Monomial(e), c.clone())
        });
        Self::from_terms(self.nvars, terms)
    }

    /// Splits by the exponent of `x_index`, ascending.
    pub fn split_by_var(&self, index: usize) -> BTreeMap<u32, XPoly> {
        let mut out: BTreeMap<u32, XPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.0[index]).or_insert_with(|| XPoly::zero(self.nvars)).add_term(m.clone(), c);
        }
        out
    }
}

impl<'a> Add<&'a XPoly> for &'a XPoly {
    type Output = XPoly;
    fn add(self, rhs: &XPoly) -> XPoly {
        self.try_add(rhs).expect("XPoly addition")
    }
}

impl<'a> Sub<&'a XPoly> for &'a XPoly {
    type Output = XPoly;
    fn sub(self, rhs: &XPoly) -> XPoly {
        self.try_sub(rhs).expect("XPoly subtraction")
    }
}

impl<'a> Mul<&'a XPoly> for &'a XPoly {
    type Output = XPoly;
    fn mul(self, rhs: &XPoly) -> XPoly {
        self.try_mul(rhs).expect("XPoly multiplication")
    }
}

impl Neg for &XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        XPoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Neg for XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        -&self
    }
}

crate::forward_owned_binops!(XPoly);

impl fmt::Display for XPoly {
    /// Expanded form, e.g. `(p+1)*x1^2*x2 - x0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let neg = c.leading_is_negative();
            let c = if neg { -c } else { c.clone() };
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let vars: Vec<String> =
                m.0.iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| if e == 1 { format!("x{i}") } else { format!("x{i}^{e}") })
                    .collect();
            if vars.is_empty() {
                write!(f, "{}", paren(&c))?;
            } else if c.is_one() {
                f.write_str(&vars.join("*"))?;
            } else {
                write!(f, "{}*{}", paren(&c), vars.join("*"))?;
            }
        }
        Ok(())
    }
}

fn paren(c: &PrimeLaurent) -> String {
    if c.len() > 1 {
        format!("({c})")
    } else {
        c.to_string()
    }
}

impl fmt::Debug for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "XPoly[{}]({self})", self.nvars)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> XPoly {
        XPoly::var(4, i)
    }

    fn one() -> XPoly {
        XPoly::one(4)
    }

    #[test]
    fn difference_of_squares() {
        let a = &one() + &x(1);
        let b = &one() - &x(1);
        assert_eq!(&a * &b, &one() - &(&x(1) * &x(1)));
    }

    #[test]
    fn tp_product_expands_to_orbit_sums() {
        let prod = &(&(&x(0) * &(&one() + &x(1))) * &(&one() + &x(2))) * &(&one() + &x(3));
        assert_eq!(prod.len(), 8);
        assert_eq!(prod.coeff(&[1, 1, 1, 1]), PrimeLaurent::one());
        assert_eq!(prod.coeff(&[1, 0, 1, 0]), PrimeLaurent::one());
        assert!(prod.terms().all(|(m, _)| m.exps()[0] == 1));
    }

    #[test]
    fn var_mismatch_is_reported() {
        let a = XPoly::one(3);
        assert_eq!(a.try_add(&one()), Err(Error::VarMismatch { left: 3, right: 4 }));
        assert_eq!(a.try_mul(&one()), Err(Error::VarMismatch { left: 3, right: 4 }));
    }

    #[test]
    fn exact_division() {
        let a = &(&x(1) * &x(1)) - &(&x(2) * &x(2));
        let b = &x(1) - &x(2);
        assert_eq!(a.div_exact(&b).unwrap(), &x(1) + &x(2));
        let v = &(&(&x(1) - &x(2)) * &(&x(1) - &x(3))) * &(&x(2) - &x(3));
        assert_eq!(v.div_exact(&v).unwrap(), one());
        assert_eq!((&x(1) + &one()).div_exact(&x(2)), Err(Error::NotDivisible));
        assert_eq!(one().div_exact(&XPoly::zero(4)), Err(Error::DivisionByZero));
    }

    #[test]
    fn substitution() {
        let mut nu = Assignment::new();
        nu.insert(0, one());
        for i in 1..4 {
            nu.insert(i, XPoly::constant(4, PrimeLaurent::p_pow(i as i32)));
        }
        let e2 = &(&(&x(1) * &x(2)) + &(&x(1) * &x(3))) + &(&x(2) * &x(3));
        let img = e2.substitute(&nu).unwrap();
        assert_eq!(img.as_constant().unwrap(), PrimeLaurent::from_int_coeffs(&[0, 0, 0, 1, 1, 1]));
        let m = x(0).pow(2).mul_monomial(&[0, 1, 1, 1]);
        assert_eq!(m.substitute(&nu).unwrap().as_constant().unwrap(), PrimeLaurent::p_pow(6));
        let mut partial = Assignment::new();
        partial.insert(1, one());
        assert_eq!(m.substitute(&partial), Err(Error::UnassignedVariable(0)));
    }

    #[test]
    fn canonical_order_is_graded_descending() {
        let a = &(&x(1) + &x(0).pow(2)) + &one();
        let degs: Vec<u32> = a.terms().map(|(m, _)| m.degree()).collect();
        assert_eq!(degs, vec![2, 1, 0]);
    }
}
