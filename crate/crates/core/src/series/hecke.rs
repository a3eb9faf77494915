//! Polynomials in the commuting genus-3 Hecke generators
//! `T(p)`, `T_1(p^2)`, `T_2(p^2)` and `[p]_3 = T_3(p^2)`, with coefficients
//! in `Q[p, 1/p]`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use serde_json::{json, Value};

use crate::algebra::json::{laurent_from_json, laurent_to_json};
use crate::algebra::{PrimeLaurent, XPoly};
use crate::error::{Error, Result};
use crate::spherical::images;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Generator {
    /// `T(p)`
    Tp,
    /// `T_1(p^2)`
    T1,
    /// `T_2(p^2)`
    T2,
    /// `[p]_3`
    Bracket,
}

impl Generator {
    pub const ALL: [Generator; 4] = [Generator::Tp, Generator::T1, Generator::T2, Generator::Bracket];

    pub fn index(self) -> usize {
        self as usize
    }

    /// Power of `x0` in the image of the generator.
    pub fn x0_weight(self) -> u32 {
        match self {
            Generator::Tp => 1,
            _ => 2,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Generator::Tp => "T(p)",
            Generator::T1 => "T_1(p^2)",
            Generator::T2 => "T_2(p^2)",
            Generator::Bracket => "[p]_3",
        }
    }

    pub fn latex(self) -> &'static str {
        match self {
            Generator::Tp => r"\mathbf{T}(p)",
            Generator::T1 => r"\mathbf{T}_1(p^2)",
            Generator::T2 => r"\mathbf{T}_2(p^2)",
            Generator::Bracket => r"[\mathbf{p}]_3",
        }
    }

    /// Image under the spherical map in genus 3.
    pub fn image(self) -> &'static XPoly {
        static IMAGES: OnceLock<[XPoly; 4]> = OnceLock::new();
        let all = IMAGES.get_or_init(|| {
            [
                images::sp_image_tp(3),
                images::sp_image_ti(1, 3).expect("genus 3 image"),
                images::sp_image_ti(2, 3).expect("genus 3 image"),
                images::sp_image_pbracket(3),
            ]
        });
        &all[self.index()]
    }
}

/// Exponents `(a, b, c, d)` of `T(p)^a T_1(p^2)^b T_2(p^2)^c [p]_3^d`.
///
/// Ordered by total degree, then lexicographically.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct GenMonomial(pub [u32; 4]);

impl GenMonomial {
    pub const ONE: GenMonomial = GenMonomial([0; 4]);

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Power of `x0` in the image.
    pub fn x0_weight(&self) -> u32 {
        self.0[0] + 2 * (self.0[1] + self.0[2] + self.0[3])
    }

    fn mul(self, other: Self) -> Self {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a += b;
        }
        GenMonomial(e)
    }

    /// All monomials whose image has the given `x0` weight, in ascending order.
    pub fn of_weight(weight: u32) -> Vec<GenMonomial> {
        let mut out = Vec::new();
        for a in (0..=weight).filter(|a| (weight - a).is_multiple_of(2)) {
            let rest = (weight - a) / 2;
            for b in 0..=rest {
                for c in 0..=rest - b {
                    out.push(GenMonomial([a, b, c, rest - b - c]));
                }
            }
        }
        out.sort();
        out
    }

    pub fn image(&self) -> XPoly {
        let mut acc = XPoly::one(4);
        for g in Generator::ALL {
            let e = self.0[g.index()];
            if e > 0 {
                acc = &acc * &g.image().pow(e);
            }
        }
        acc
    }
}

impl Ord for GenMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for GenMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Element of `Q[p, 1/p][T(p), T_1(p^2), T_2(p^2), [p]_3]`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct HeckeExpr {
    terms: BTreeMap<GenMonomial, PrimeLaurent>,
}

impl HeckeExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(PrimeLaurent::one())
    }

    pub fn constant(c: PrimeLaurent) -> Self {
        Self::monomial(GenMonomial::ONE, c)
    }

    pub fn generator(g: Generator) -> Self {
        let mut e = [0; 4];
        e[g.index()] = 1;
        Self::monomial(GenMonomial(e), PrimeLaurent::one())
    }

    pub fn monomial(m: GenMonomial, c: PrimeLaurent) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (GenMonomial, PrimeLaurent)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (m, c) in terms {
            out.add_term(m, &c);
        }
        out
    }

    fn add_term(&mut self, m: GenMonomial, c: &PrimeLaurent) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
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

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&GenMonomial, &PrimeLaurent)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, m: GenMonomial) -> PrimeLaurent {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &PrimeLaurent) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, v)| (*m, v * c)))
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// The single `x0` weight shared by all terms, if any.
    pub fn x0_weight(&self) -> Option<u32> {
        let mut ws = self.terms.keys().map(GenMonomial::x0_weight);
        let first = ws.next()?;
        ws.all(|w| w == first).then_some(first)
    }

    /// Image under the spherical map (genus 3), extended as a ring homomorphism.
    pub fn image(&self) -> XPoly {
        let mut out = XPoly::zero(4);
        for (m, c) in &self.terms {
            out = &out + &m.image().scale(c);
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self.terms.iter().map(|(m, c)| json!({"g": m.0, "c": laurent_to_json(c)})).collect();
        json!({ "terms": terms })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::Json(m.to_string());
        let terms = v.get("terms").and_then(Value::as_array).ok_or_else(|| bad("missing terms"))?;
        let mut out = Self::zero();
        for t in terms {
            let g = t.get("g").and_then(Value::as_array).ok_or_else(|| bad("term without g"))?;
            if g.len() != 4 {
                return Err(bad("generator exponent tuple must have length 4"));
            }
            let mut e = [0u32; 4];
            for (slot, x) in e.iter_mut().zip(g) {
                *slot = x.as_u64().ok_or_else(|| bad("bad generator exponent"))? as u32;
            }
            let c = laurent_from_json(t.get("c").ok_or_else(|| bad("term without c"))?)?;
            out.add_term(GenMonomial(e), &c);
        }
        Ok(out)
    }
}

impl From<Generator> for HeckeExpr {
    fn from(g: Generator) -> Self {
        Self::generator(g)
    }
}

impl From<PrimeLaurent> for HeckeExpr {
    fn from(c: PrimeLaurent) -> Self {
        Self::constant(c)
    }
}

impl<'a> Add<&'a HeckeExpr> for &'a HeckeExpr {
    type Output = HeckeExpr;
    fn add(self, rhs: &HeckeExpr) -> HeckeExpr {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c);
        }
        out
    }
}

impl<'a> Sub<&'a HeckeExpr> for &'a HeckeExpr {
    type Output = HeckeExpr;
    fn sub(self, rhs: &HeckeExpr) -> HeckeExpr {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a HeckeExpr> for &'a HeckeExpr {
    type Output = HeckeExpr;
    fn mul(self, rhs: &HeckeExpr) -> HeckeExpr {
        let mut out = HeckeExpr::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(*mb), &(ca * cb));
            }
        }
        out
    }
}

impl Neg for &HeckeExpr {
    type Output = HeckeExpr;
    fn neg(self) -> HeckeExpr {
        HeckeExpr { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Neg for HeckeExpr {
    type Output = HeckeExpr;
    fn neg(self) -> HeckeExpr {
        -&self
    }
}

crate::forward_owned_binops!(HeckeExpr);

impl fmt::Display for HeckeExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::render::hecke_text(self))
    }
}

impl fmt::Debug for HeckeExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HeckeExpr({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_enumeration() {
        assert_eq!(GenMonomial::of_weight(2).len(), 4);
        assert_eq!(GenMonomial::of_weight(3).len(), 4);
        assert_eq!(GenMonomial::of_weight(4).len(), 10);
        assert!(GenMonomial::of_weight(4).iter().all(|m| m.x0_weight() == 4));
        assert_eq!(GenMonomial::of_weight(0), vec![GenMonomial::ONE]);
    }

    #[test]
    fn product_image_is_product_of_images() {
        let e = &HeckeExpr::generator(Generator::Tp) * &HeckeExpr::generator(Generator::Bracket);
        assert_eq!(e.image(), Generator::Tp.image() * Generator::Bracket.image());
        assert_eq!(HeckeExpr::one().image(), XPoly::one(4));
    }

    #[test]
    fn arithmetic() {
        let t = HeckeExpr::generator(Generator::Tp);
        let sq = &t * &t;
        assert_eq!(sq.coeff(GenMonomial([2, 0, 0, 0])), PrimeLaurent::one());
        assert!((&sq - &t.pow(2)).is_zero());
        assert_eq!(sq.x0_weight(), Some(2));
    }

    #[test]
    fn json_round_trip() {
        let e = &HeckeExpr::generator(Generator::T2).scale(&PrimeLaurent::p_pow(-2))
            + &HeckeExpr::constant(PrimeLaurent::from_int(3));
        let v = e.to_json();
        assert_eq!(HeckeExpr::from_json(&v).unwrap(), e);
        assert!(HeckeExpr::from_json(&json!({"terms": [{"g": [1, 2], "c": {}}]})).is_err());
    }
}
