//! Published values, transcribed in the reader syntax of [`crate::parse`].
//! Each accessor parses its transcription into the exact ring.

use std::collections::BTreeMap;

use crate::algebra::{PrimeLaurent, XPoly};
use crate::error::Result;
use crate::parse::{parse_hecke, parse_laurent, parse_vpoly, parse_xpoly};
use crate::series::hecke::HeckeExpr;
use crate::symmetric::Signature;

/// `omega(t(1, p^a, p^b))` for `0 <= a <= b <= 6` in the order
/// `(0,0), (0,1), (1,1), (0,2), ..`, keyed by the signature `(b, a, 0)`.
pub const OMEGA_TABLE: [([u32; 3], &str); 28] = [
    ([0, 0, 0], "1"),
    ([1, 0, 0], "sym[1,0,0]/p"),
    ([1, 1, 0], "sym[1,1,0]/p^3"),
    ([2, 0, 0], "(p-1)*sym[1,1,0]/p^3 + sym[2,0,0]/p^2"),
    ([2, 1, 0], "(2*p^2-p-1)*sym[1,1,1]/p^6 + sym[2,1,0]/p^4"),
    ([2, 2, 0], "(p-1)*sym[2,1,1]/p^7 + sym[2,2,0]/p^6"),
    ([3, 0, 0], "(p^2-2*p+1)*sym[1,1,1]/p^5 + (p^2-p)*sym[2,1,0]/p^5 + sym[3,0,0]/p^3"),
    ([3, 1, 0], "(2*p-2)*sym[2,1,1]/p^6 + (p-1)*sym[2,2,0]/p^6 + sym[3,1,0]/p^5"),
    ([3, 2, 0], "(2*p-2)*sym[2,2,1]/p^8 + (p-1)*sym[3,1,1]/p^8 + sym[3,2,0]/p^7"),
    ([3, 3, 0], "(p^2-2*p+1)*sym[2,2,2]/p^11 + (p^2-p)*sym[3,2,1]/p^11 + sym[3,3,0]/p^9"),
    ([4, 0, 0], "(p^2-2*p+1)*sym[2,1,1]/p^6 + (p^2-p)*sym[2,2,0]/p^6 + (p^2-p)*sym[3,1,0]/p^6 + sym[4,0,0]/p^4"),
    ([4, 1, 0], "(2*p^2-3*p+1)*sym[2,2,1]/p^8 + (2*p^2-2*p)*sym[3,1,1]/p^8 + (p^2-p)*sym[3,2,0]/p^8 + sym[4,1,0]/p^6"),
    (
        [4, 2, 0],
        "(-4*p^2+3*p^3+2*p-1)*sym[2,2,2]/p^11 + (2*p^3-3*p^2+p)*sym[3,2,1]/p^11 + (p^3-p^2)*sym[3,3,0]/p^11 \
         + (p^3-p^2)*sym[4,1,1]/p^11 + sym[4,2,0]/p^8",
    ),
    (
        [4, 3, 0],
        "(2*p^2-3*p+1)*sym[3,2,2]/p^12 + (2*p^2-2*p)*sym[3,3,1]/p^12 + (p^2-p)*sym[4,2,1]/p^12 + sym[4,3,0]/p^10",
    ),
    ([4, 4, 0], "(p^2-2*p+1)*sym[3,3,2]/p^14 + (p^2-p)*sym[4,2,2]/p^14 + (p^2-p)*sym[4,3,1]/p^14 + sym[4,4,0]/p^12"),
    (
        [5, 0, 0],
        "(p^2-2*p+1)*sym[2,2,1]/p^7 + (p^2-2*p+1)*sym[3,1,1]/p^7 + (p^2-p)*sym[3,2,0]/p^7 + (p^2-p)*sym[4,1,0]/p^7 \
         + sym[5,0,0]/p^5",
    ),
    (
        [5, 1, 0],
        "(2*p^2-4*p+2)*sym[2,2,2]/p^9 + (2*p^2-3*p+1)*sym[3,2,1]/p^9 + (p^2-p)*sym[3,3,0]/p^9 \
         + (2*p^2-2*p)*sym[4,1,1]/p^9 + (p^2-p)*sym[4,2,0]/p^9 + sym[5,1,0]/p^7",
    ),
    (
        [5, 2, 0],
        "(3*p^3-5*p^2+3*p-1)*sym[3,2,2]/p^12 + (2*p^3-4*p^2+2*p)*sym[3,3,1]/p^12 + (2*p^3-3*p^2+p)*sym[4,2,1]/p^12 \
         + (p^3-p^2)*sym[4,3,0]/p^12 + (p^3-p^2)*sym[5,1,1]/p^12 + sym[5,2,0]/p^9",
    ),
    (
        [5, 3, 0],
        "(3*p^3-5*p^2+3*p-1)*sym[3,3,2]/p^14 + (2*p^3-4*p^2+2*p)*sym[4,2,2]/p^14 + (2*p^3-3*p^2+p)*sym[4,3,1]/p^14 \
         + (p^3-p^2)*sym[4,4,0]/p^14 + (p^3-p^2)*sym[5,2,1]/p^14 + sym[5,3,0]/p^11",
    ),
    (
        [5, 4, 0],
        "(2*p^2-4*p+2)*sym[3,3,3]/p^15 + (2*p^2-3*p+1)*sym[4,3,2]/p^15 + (2*p^2-2*p)*sym[4,4,1]/p^15 \
         + (p^2-p)*sym[5,2,2]/p^15 + (p^2-p)*sym[5,3,1]/p^15 + sym[5,4,0]/p^13",
    ),
    (
        [5, 5, 0],
        "(p^2-2*p+1)*sym[4,3,3]/p^17 + (p^2-2*p+1)*sym[4,4,2]/p^17 + (p^2-p)*sym[5,3,2]/p^17 \
         + (p^2-p)*sym[5,4,1]/p^17 + sym[5,5,0]/p^15",
    ),
    (
        [6, 0, 0],
        "(p^2-2*p+1)*sym[2,2,2]/p^8 + (p^2-2*p+1)*sym[3,2,1]/p^8 + (p^2-p)*sym[3,3,0]/p^8 \
         + (p^2-2*p+1)*sym[4,1,1]/p^8 + (p^2-p)*sym[4,2,0]/p^8 + (p^2-p)*sym[5,1,0]/p^8 + sym[6,0,0]/p^6",
    ),
    (
        [6, 1, 0],
        "(2*p^2-4*p+2)*sym[3,2,2]/p^10 + (2*p^2-3*p+1)*sym[3,3,1]/p^10 + (2*p^2-3*p+1)*sym[4,2,1]/p^10 \
         + (p^2-p)*sym[4,3,0]/p^10 + (2*p^2-2*p)*sym[5,1,1]/p^10 + (p^2-p)*sym[5,2,0]/p^10 + sym[6,1,0]/p^8",
    ),
    (
        [6, 2, 0],
        "(3*p^3-6*p^2+4*p-1)*sym[3,3,2]/p^13 + (3*p^3-5*p^2+3*p-1)*sym[4,2,2]/p^13 \
         + (2*p^3-4*p^2+2*p)*sym[4,3,1]/p^13 + (p^3-p^2)*sym[4,4,0]/p^13 + (2*p^3-3*p^2+p)*sym[5,2,1]/p^13 \
         + (p^3-p^2)*sym[5,3,0]/p^13 + (p^3-p^2)*sym[6,1,1]/p^13 + sym[6,2,0]/p^10",
    ),
    (
        [6, 3, 0],
        "(4*p^3-7*p^2+5*p-2)*sym[3,3,3]/p^15 + (3*p^3-6*p^2+4*p-1)*sym[4,3,2]/p^15 \
         + (2*p^3-4*p^2+2*p)*sym[4,4,1]/p^15 + (2*p^3-4*p^2+2*p)*sym[5,2,2]/p^15 \
         + (2*p^3-3*p^2+p)*sym[5,3,1]/p^15 + (p^3-p^2)*sym[5,4,0]/p^15 + (p^3-p^2)*sym[6,2,1]/p^15 \
         + sym[6,3,0]/p^12",
    ),
    (
        [6, 4, 0],
        "(3*p^3-6*p^2+4*p-1)*sym[4,3,3]/p^17 + (3*p^3-5*p^2+3*p-1)*sym[4,4,2]/p^17 \
         + (2*p^3-4*p^2+2*p)*sym[5,3,2]/p^17 + (2*p^3-3*p^2+p)*sym[5,4,1]/p^17 + (p^3-p^2)*sym[5,5,0]/p^17 \
         + (p^3-p^2)*sym[6,2,2]/p^17 + (p^3-p^2)*sym[6,3,1]/p^17 + sym[6,4,0]/p^14",
    ),
    (
        [6, 5, 0],
        "(2*p^2-4*p+2)*sym[4,4,3]/p^18 + (2*p^2-3*p+1)*sym[5,3,3]/p^18 + (2*p^2-3*p+1)*sym[5,4,2]/p^18 \
         + (2*p^2-2*p)*sym[5,5,1]/p^18 + (p^2-p)*sym[6,3,2]/p^18 + (p^2-p)*sym[6,4,1]/p^18 + sym[6,5,0]/p^16",
    ),
    (
        [6, 6, 0],
        "(p^2-2*p+1)*sym[4,4,4]/p^20 + (p^2-2*p+1)*sym[5,4,3]/p^20 + (p^2-2*p+1)*sym[5,5,2]/p^20 \
         + (p^2-p)*sym[6,3,3]/p^20 + (p^2-p)*sym[6,4,2]/p^20 + (p^2-p)*sym[6,5,1]/p^20 + sym[6,6,0]/p^18",
    ),
];

pub fn omega_table() -> Result<Vec<(Signature, XPoly)>> {
    OMEGA_TABLE.iter().map(|(sig, src)| Ok((Signature::new(sig.to_vec())?, parse_xpoly(src, 3)?))).collect()
}

pub const IMAGE_TP: &str = "x0*(1 + sym[1,0,0] + sym[1,1,0] + sym[1,1,1])";

/// Images of `T_1(p^2), T_2(p^2), T_3(p^2)`.
pub const IMAGE_TI: [&str; 3] = [
    "x0^2*((p^2-1)*sym[2,1,1]/p^3 + sym[2,2,1]/p + sym[2,1,0]/p + (p-1)*(3*p^2+2*p+1)*sym[1,1,1]/p^4 \
     + (p^2-1)*sym[1,1,0]/p^3 + sym[1,0,0]/p)",
    "x0^2*(sym[1,1,0]/p^3 + sym[2,1,1]/p^3 + (p-1)*(p^2+p+1)*sym[1,1,1]/p^6)",
    "x0^2*sym[1,1,1]/p^6",
];

/// `[p]_3 = p^{-6} x0^2 x1 x2 x3`.
pub const IMAGE_BRACKET: &str = "x0^2*x1*x2*x3/p^6";

/// `sm_p(1, 3)`, the number of rank-one symmetric `3 x 3` matrices over `F_p`.
pub const SM_1_3: &str = "(p-1)*(p^2+p+1)";

pub fn image_tp() -> Result<XPoly> {
    parse_xpoly(IMAGE_TP, 3)
}

pub fn image_ti(i: usize) -> Result<XPoly> {
    parse_xpoly(IMAGE_TI[i - 1], 3)
}

pub fn image_bracket() -> Result<XPoly> {
    parse_xpoly(IMAGE_BRACKET, 3)
}

/// Nonzero coefficients of `P_3(v)`.
pub const P3: [(usize, &str); 5] = [
    (0, "1"),
    (2, "-(sym[2,1,1]/p + (p^2+p+1)*sym[1,1,1]/p^2 + sym[1,1,0]/p)*x0^2"),
    (3, "(p+1)/p^2*(sym[2,2,2] + sym[2,2,1] + sym[2,1,1] + sym[1,1,1])*x0^3"),
    (4, "-(sym[3,2,2]/p^2 + (p^2+p+1)*sym[2,2,2]/p^3 + sym[2,2,1]/p^2)*x0^4"),
    (6, "sym[3,3,3]/p^3*x0^6"),
];

/// Coefficients `v^0..v^8` of `Q_3(v)`.
pub const Q3: [&str; 9] = [
    "1",
    "-x0*(sym[1,1,1] + sym[1,1,0] + sym[1,0,0] + 1)",
    "x0^2*(4*sym[1,1,1] + sym[1,0,0] + 2*sym[2,1,1] + 2*sym[1,1,0] + sym[2,1,0] + sym[2,2,1])",
    "-x0^3*(sym[3,1,1] + sym[1,1,0] + 4*sym[2,2,1] + 4*sym[1,1,1] + sym[2,1,0] + sym[2,2,0] + 4*sym[2,2,2] \
     + sym[3,2,2] + sym[3,2,1] + 4*sym[2,1,1])",
    "x0^4*(sym[3,1,1] + sym[1,1,1] + sym[3,3,1] + sym[4,2,2] + 2*sym[2,1,1] + 4*sym[3,2,2] + 2*sym[3,2,1] \
     + sym[2,2,0] + 8*sym[2,2,2] + 2*sym[3,3,2] + sym[3,3,3] + 4*sym[2,2,1])",
    "-x0^5*(sym[4,3,3] + sym[4,3,2] + sym[2,2,1] + 4*sym[2,2,2] + 4*sym[3,3,2] + sym[3,3,1] + 4*sym[3,2,2] \
     + 4*sym[3,3,3] + sym[4,2,2] + sym[3,2,1])",
    "x0^6*(2*sym[3,3,2] + sym[3,2,2] + 2*sym[4,3,3] + 4*sym[3,3,3] + sym[4,3,2] + sym[4,4,3])",
    "-x0^7*(sym[4,3,3] + sym[3,3,3] + sym[4,4,4] + sym[4,4,3])",
    "x0^8*sym[4,4,4]",
];

/// The first `len` coefficients of a sparse table, zero where absent.
fn dense(entries: &[(usize, &str)], len: usize, parse: impl Fn(&str) -> Result<XPoly>) -> Result<Vec<XPoly>> {
    let mut out = vec![XPoly::zero(4); len];
    for &(k, src) in entries {
        out[k] = parse(src)?;
    }
    Ok(out)
}

pub fn p3() -> Result<Vec<XPoly>> {
    dense(&P3, 7, |s| parse_xpoly(s, 3))
}

pub fn q3() -> Result<Vec<XPoly>> {
    Q3.iter().map(|s| parse_xpoly(s, 3)).collect()
}

/// `P_1` and `P_2` as polynomials in `v` with `x` coefficients.
pub const P1: [(usize, &str); 1] = [(0, "1")];
pub const P2: [(usize, &str); 2] = [(0, "1"), (2, "-x0^2*x1*x2/p")];

pub fn low_genus(n: usize) -> Result<Vec<XPoly>> {
    let table: &[(usize, &str)] = if n == 1 { &P1 } else { &P2 };
    let len = (1 << n) - 1;
    let mut out = vec![XPoly::zero(n + 1); len];
    for &(k, src) in table {
        out[k] = parse_xpoly(src, n)?;
    }
    Ok(out)
}

/// Nonzero coefficients of `P_3(v)` in the Hecke generators.
pub const P3_HECKE: [(usize, &str); 5] = [
    (0, "1"),
    (2, "-p^2*(T_2(p^2) + (p^2-p+1)*(p^2+p+1)*[p]_3)"),
    (3, "(p+1)*p^4*T(p)*[p]_3"),
    (4, "-p^7*[p]_3*(T_2(p^2) + (p^2-p+1)*(p^2+p+1)*[p]_3)"),
    (6, "p^15*[p]_3^3"),
];

pub fn p3_hecke() -> Result<Vec<HeckeExpr>> {
    let mut out = vec![HeckeExpr::zero(); 7];
    for &(k, src) in &P3_HECKE {
        out[k] = parse_hecke(src)?;
    }
    Ok(out)
}

/// `t_0..t_8` with `Q_3(v) = sum t_j v^j` in the Hecke generators.
pub const Q3_HECKE: [&str; 9] = [
    "1",
    "-T(p)",
    "p*T_1(p^2) + (p^3+p)*T_2(p^2) + p*(1+p^2)^2*[p]_3",
    "-p^3*T(p)*(T_2(p^2) + [p]_3)",
    "p^6*(-2*p*T_1(p^2)*[p]_3 + T_2(p^2)^2 - 2*(p-1)*T_2(p^2)*[p]_3 \
     - (p^2+2*p-1)*(p^2-p+1)*(p^2+p+1)*[p]_3^2 + [p]_3*T(p)^2)",
    "-p^9*[p]_3*T(p)*(T_2(p^2) + [p]_3)",
    "p^13*[p]_3^2*(T_1(p^2) + (p^2+1)*T_2(p^2) + (p^2+1)^2*[p]_3)",
    "-p^18*[p]_3^3*T(p)",
    "p^24*[p]_3^4",
];

pub fn q3_hecke() -> Result<Vec<HeckeExpr>> {
    Q3_HECKE.iter().map(|s| parse_hecke(s)).collect()
}

/// The coefficients of the `v^2..v^4` ansatz for `Q_3(v)`.
pub const K_VALUES: [(&str, &str); 18] = [
    ("TpT1p2", "0"),
    ("TpTpTp", "0"),
    ("TpTp", "0"),
    ("T2p2TpTp", "0"),
    ("T1p2T1p2", "0"),
    ("T1p2T2p2", "0"),
    ("T1p2TpTp", "0"),
    ("TpTpTpTp", "0"),
    ("TpT2p2", "-p^3"),
    ("TpT3p2", "-p^3"),
    ("T2p2", "p^3+p"),
    ("T3p2", "p*(1+p^2)^2"),
    ("T1p2", "p"),
    ("T1p2T3p2", "-2*p^7"),
    ("T2p2T3p2", "-2*p^7+2*p^6"),
    ("T2p2T2p2", "p^6"),
    ("T3p2TpTp", "p^6"),
    ("T3p2T3p2", "-p^6*(p^2+2*p-1)*(p^2-p+1)*(p^2+p+1)"),
];

pub fn k_values() -> Result<BTreeMap<&'static str, PrimeLaurent>> {
    K_VALUES.iter().map(|&(k, s)| Ok((k, parse_laurent(s)?))).collect()
}

/// `nu(P_3)` as first written, before collecting powers of `p`.
pub const NU_P3_RAW: &str = "1 - ((p^7+p^8+p^9)/p + (p^2+p+1)*p^4 + (p^3+p^4+p^5)/p)*v^2 \
     + ((p+1)*p^10 + (p+1)*(p^9+p^10+p^11)/p^2 + (p+1)*(p^7+p^8+p^9)/p^2 + (p+1)*p^4)*v^3 \
     - ((p^13+p^14+p^15)/p^2 + (p^2+p+1)*p^9 + (p^9+p^10+p^11)/p^2)*v^4 + p^15*v^6";

pub const NU_P3_EXPANDED: &str = "1 - (p^8+p^7+2*p^6+p^5+2*p^4+p^3+p^2)*v^2 \
     + (p^11+2*p^10+2*p^9+3*p^8+3*p^7+2*p^6+2*p^5+p^4)*v^3 \
     - (p^13+p^12+2*p^11+p^10+2*p^9+p^8+p^7)*v^4 + p^15*v^6";

pub const NU_P3_FACTORED: &str = "(1-p*v)*(1-p^2*v)*(1-p^3*v)*(1-p^4*v)*(1 + (p+p^2+p^3+p^4)*v + p^5*v^2)";

pub fn nu_p3() -> Result<[Vec<PrimeLaurent>; 3]> {
    Ok([parse_vpoly(NU_P3_RAW)?, parse_vpoly(NU_P3_EXPANDED)?, parse_vpoly(NU_P3_FACTORED)?])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transcriptions_parse() {
        assert_eq!(omega_table().unwrap().len(), 28);
        assert_eq!(p3().unwrap().len(), 7);
        assert_eq!(q3().unwrap().len(), 9);
        assert_eq!(p3_hecke().unwrap().len(), 7);
        assert_eq!(q3_hecke().unwrap().len(), 9);
        assert_eq!(k_values().unwrap().len(), 18);
        assert_eq!(low_genus(2).unwrap().len(), 3);
        image_tp().unwrap();
        image_bracket().unwrap();
        for i in 1..=3 {
            image_ti(i).unwrap();
        }
    }

    #[test]
    fn three_forms_of_nu_p3_agree() {
        let [raw, expanded, factored] = nu_p3().unwrap();
        assert_eq!(raw, expanded);
        assert_eq!(expanded, factored);
    }
}
