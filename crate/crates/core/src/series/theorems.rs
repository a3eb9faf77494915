//! Rewriting the genus-3 numerator and denominator in the Hecke generators.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde_json::Value;

use super::generating::{leading_term_data, p_numerator, q_poly, DEFAULT_ORDER};
use super::hecke::{GenMonomial, Generator, HeckeExpr};
use super::solve::solve_unique;
use crate::algebra::{PrimeLaurent, XPoly};
use crate::error::{Error, Result};
use crate::symmetric::{to_msym, Signature};

/// The linear system `sum_m K_m Omega(m) = target` in the monomial symmetric
/// basis, one unknown per generator monomial of the given `x0` weight.
pub struct GeneratorSystem {
    pub basis: Vec<GenMonomial>,
    pub signatures: Vec<Signature>,
    /// `matrix[row][col]`: coefficient of `signatures[row]` in `Omega(basis[col])`.
    pub matrix: Vec<Vec<PrimeLaurent>>,
    pub rhs: Vec<PrimeLaurent>,
}

impl GeneratorSystem {
    pub fn build(target: &XPoly, x0_weight: u32) -> Result<Self> {
        if target.nvars() != 4 {
            return Err(Error::UnsupportedGenus(target.nvars().saturating_sub(1)));
        }
        if target.exponents_of(0).iter().any(|&w| w != x0_weight) {
            return Err(Error::NotHomogeneous);
        }
        let target = to_msym(target)?.by_signature();
        let basis = GenMonomial::of_weight(x0_weight);
        let columns = basis.par_iter().map(|m| Ok(to_msym(&m.image())?.by_signature())).collect::<Result<Vec<_>>>()?;
        let signatures: Vec<Signature> = columns
            .iter()
            .flat_map(|c| c.keys())
            .chain(target.keys())
            .cloned()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let at = |col: &BTreeMap<Signature, PrimeLaurent>, s: &Signature| col.get(s).cloned().unwrap_or_default();
        let matrix = signatures.iter().map(|s| columns.iter().map(|c| at(c, s)).collect()).collect();
        let rhs = signatures.iter().map(|s| at(&target, s)).collect();
        Ok(Self { basis, signatures, matrix, rhs })
    }

    pub fn solve(&self) -> Result<HeckeExpr> {
        let x = solve_unique(&self.matrix, &self.rhs)?;
        Ok(HeckeExpr::from_terms(self.basis.iter().copied().zip(x)))
    }
}

/// The unique polynomial in `T(p), T_1(p^2), T_2(p^2), [p]_3` with Laurent
/// coefficients whose image is `target`.
pub fn express_in_generators(target: &XPoly, x0_weight: u32) -> Result<HeckeExpr> {
    if target.is_zero() {
        return Ok(HeckeExpr::zero());
    }
    GeneratorSystem::build(target, x0_weight)?.solve()
}

/// `(-1)^{n-1} p^{n(n+1)2^{n-2} - n^2} [p]_3^{2^{n-1}-1}` at `n = 3`.
pub fn p3_leading_term() -> HeckeExpr {
    let (sign, p_exp, bracket) = leading_term_data(3);
    let c = PrimeLaurent::p_pow(p_exp as i32).scale(&crate::algebra::rat(sign));
    HeckeExpr::monomial(GenMonomial([0, 0, 0, bracket]), c)
}

/// Coefficients `u_0..u_6` of `P_3(v)` in the Hecke generators.
pub fn p3_in_generators() -> Result<Vec<HeckeExpr>> {
    let p = p_numerator(3, DEFAULT_ORDER)?;
    let u = p
        .coeffs()
        .par_iter()
        .enumerate()
        .map(|(k, c)| express_in_generators(c, k as u32))
        .collect::<Result<Vec<_>>>()?;
    for k in [1, 5] {
        if !u[k].is_zero() {
            return Err(Error::Mismatch(format!("coefficient of v^{k} is {}", u[k])));
        }
    }
    if u[6] != p3_leading_term() {
        return Err(Error::Mismatch(format!("leading coefficient is {}", u[6])));
    }
    Ok(u)
}

/// `t_0..t_8` with `Q_3(v) = sum_j t_j v^j` over the Hecke ring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QCoefficients {
    pub t: [HeckeExpr; 9],
}

impl QCoefficients {
    pub fn to_json(&self) -> Value {
        Value::Array(self.t.iter().map(HeckeExpr::to_json).collect())
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let items = v
            .as_array()
            .filter(|a| a.len() == 9)
            .ok_or_else(|| Error::Json("expected an array of 9 expressions".into()))?;
        let t: Vec<HeckeExpr> = items.iter().map(HeckeExpr::from_json).collect::<Result<_>>()?;
        Ok(Self { t: t.try_into().expect("length checked") })
    }
}

/// `p^6 [p]_3`.
fn functional_factor() -> HeckeExpr {
    HeckeExpr::monomial(GenMonomial([0, 0, 0, 1]), PrimeLaurent::p_pow(6))
}

/// Checks `t_{8-i} = (p^6 [p]_3)^{4-i} t_i` for `i = 0..8`; for `i > 4` the
/// equivalent `(p^6 [p]_3)^{i-4} t_{8-i} = t_i` is used.
pub fn functional_eq_violation(q: &QCoefficients) -> Option<usize> {
    let m = functional_factor();
    (0..=8usize).find(|&i| {
        if i <= 4 {
            q.t[8 - i] != &m.pow((4 - i) as u32) * &q.t[i]
        } else {
            &m.pow((i - 4) as u32) * &q.t[8 - i] != q.t[i]
        }
    })
}

pub fn functional_eq_check(q: &QCoefficients) -> bool {
    functional_eq_violation(q).is_none()
}

/// Reconstructs `Q_3(v)` over the Hecke ring: `t_1..t_4` by solving, `t_5..t_8`
/// from the functional equation, then checks every image against `Q_3(v)`.
pub fn q3_in_generators() -> Result<QCoefficients> {
    let q = q_poly(3)?;
    let solved = (1..=4usize)
        .into_par_iter()
        .map(|j| express_in_generators(&q.coeffs()[j], j as u32))
        .collect::<Result<Vec<_>>>()?;
    let m = functional_factor();
    let mut t: [HeckeExpr; 9] = Default::default();
    t[0] = HeckeExpr::one();
    for (j, e) in solved.into_iter().enumerate() {
        t[j + 1] = e;
    }
    for i in 0..4 {
        t[8 - i] = &m.pow((4 - i) as u32) * &t[i];
    }
    for (j, e) in t.iter().enumerate() {
        if e.image() != q.coeffs()[j] {
            return Err(Error::FunctionalEquationViolated(j));
        }
    }
    Ok(QCoefficients { t })
}

/// Names of the indeterminate coefficients of the `v^2..v^4` ansatz, with
/// the generator monomial each one multiplies.
pub const K_NAMES: [(&str, [u32; 4]); 18] = [
    ("T1p2", [0, 1, 0, 0]),
    ("T2p2", [0, 0, 1, 0]),
    ("T3p2", [0, 0, 0, 1]),
    ("TpTp", [2, 0, 0, 0]),
    ("TpT1p2", [1, 1, 0, 0]),
    ("TpT2p2", [1, 0, 1, 0]),
    ("TpT3p2", [1, 0, 0, 1]),
    ("TpTpTp", [3, 0, 0, 0]),
    ("T1p2T1p2", [0, 2, 0, 0]),
    ("T1p2T2p2", [0, 1, 1, 0]),
    ("T1p2T3p2", [0, 1, 0, 1]),
    ("T2p2T2p2", [0, 0, 2, 0]),
    ("T2p2T3p2", [0, 0, 1, 1]),
    ("T3p2T3p2", [0, 0, 0, 2]),
    ("T1p2TpTp", [2, 1, 0, 0]),
    ("T2p2TpTp", [2, 0, 1, 0]),
    ("T3p2TpTp", [2, 0, 0, 1]),
    ("TpTpTpTp", [4, 0, 0, 0]),
];

/// The `K` coefficients read off `t_2, t_3, t_4`.
pub fn k_coefficients(q: &QCoefficients) -> BTreeMap<&'static str, PrimeLaurent> {
    K_NAMES
        .iter()
        .map(|&(name, e)| {
            let m = GenMonomial(e);
            (name, q.t[m.x0_weight() as usize].coeff(m))
        })
        .collect()
}

/// Convenience: `T(p)`, `T_1(p^2)`, `T_2(p^2)`, `[p]_3` as expressions.
pub fn generators() -> [HeckeExpr; 4] {
    Generator::ALL.map(HeckeExpr::generator)
}
