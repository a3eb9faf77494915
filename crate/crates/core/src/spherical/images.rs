//! `Omega` on the generators `T(p)`, `T_i(p^2)` and `[p]_n` of the local
//! Hecke ring of `Sp_n`.

use super::counting::sm;
use super::hall_littlewood::omega_hl;
use crate::algebra::{Monomial, PrimeLaurent, XPoly};
use crate::error::{Error, Result};
use crate::series::hecke::HeckeExpr;
use crate::symmetric::Signature;

/// `Omega(T(p)) = x0 (1 + x1) .. (1 + xn)`.
pub fn sp_image_tp(n: usize) -> XPoly {
    let nvars = n + 1;
    (1..=n).fold(XPoly::var(nvars, 0), |acc, i| &acc * &(&XPoly::one(nvars) + &XPoly::var(nvars, i)))
}

/// `Omega(T_i(p^2)) = sum_{a+b<=n, a>=i} p^{b(a+b+1)} sm(a-i, a) x0^2 omega(2^b 1^a 0^{n-a-b})`.
pub fn sp_image_ti(i: usize, n: usize) -> Result<XPoly> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    let mut x0_sq = vec![0; n + 1];
    x0_sq[0] = 2;
    let mut out = XPoly::zero(n + 1);
    for a in i..=n {
        for b in 0..=n - a {
            let mut parts = vec![2; b];
            parts.extend(std::iter::repeat_n(1, a));
            parts.extend(std::iter::repeat_n(0, n - a - b));
            let w = omega_hl(&Signature::new(parts)?, n)?;
            let c = &PrimeLaurent::p_pow((b * (a + b + 1)) as i32) * &sm((a - i) as u32, a as u32)?;
            out = &out + &w.mul_monomial(&x0_sq).scale(&c);
        }
    }
    Ok(out)
}

/// `Omega([p]_n) = p^{-n(n+1)/2} x0^2 x1 .. xn`.
pub fn sp_image_pbracket(n: usize) -> XPoly {
    let mut exps = vec![1; n + 1];
    exps[0] = 2;
    XPoly::term(Monomial::new(exps), PrimeLaurent::p_pow(-((n * (n + 1) / 2) as i32)))
}

/// `Omega` extended to polynomials in the genus-3 generators.
pub fn hecke_image(e: &HeckeExpr, n: usize) -> Result<XPoly> {
    if n != 3 {
        return Err(Error::UnsupportedGenus(n));
    }
    Ok(e.image())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::hecke::Generator;
    use crate::symmetric::{msym, to_msym};

    fn sig(p: &[u32]) -> Signature {
        Signature::new(p.to_vec()).unwrap()
    }

    fn lp(c: &[i64]) -> PrimeLaurent {
        PrimeLaurent::from_int_coeffs(c)
    }

    #[test]
    fn tp_small_genus() {
        let x = |i| XPoly::var(3, i);
        let expect = &x(0) * &(&(&(&XPoly::one(3) + &x(1)) + &x(2)) + &(&x(1) * &x(2)));
        assert_eq!(sp_image_tp(2), expect);
        assert_eq!(sp_image_tp(1), &XPoly::var(2, 0) * &(&XPoly::one(2) + &XPoly::var(2, 1)));
    }

    #[test]
    fn t2_in_genus_three() {
        let d = to_msym(&sp_image_ti(2, 3).unwrap()).unwrap();
        assert_eq!(d.len(), 3);
        assert_eq!(d.get(2, &sig(&[1, 1, 0])), PrimeLaurent::p_pow(-3));
        assert_eq!(d.get(2, &sig(&[2, 1, 1])), PrimeLaurent::p_pow(-3));
        assert_eq!(d.get(2, &sig(&[1, 1, 1])), lp(&[-1, 0, 0, 1]).shift(-6));
    }

    #[test]
    fn top_index_is_the_bracket() {
        for n in 1..=3 {
            assert_eq!(sp_image_ti(n, n).unwrap(), sp_image_pbracket(n));
        }
        let expect = msym(&sig(&[1, 1, 1]), 3).unwrap().mul_monomial(&[2, 0, 0, 0]).scale(&PrimeLaurent::p_pow(-6));
        assert_eq!(sp_image_pbracket(3), expect);
    }

    #[test]
    fn index_checks() {
        assert_eq!(sp_image_ti(0, 3), Err(Error::IndexOutOfRange { index: 0, n: 3 }));
        assert_eq!(sp_image_ti(4, 3), Err(Error::IndexOutOfRange { index: 4, n: 3 }));
        assert_eq!(hecke_image(&HeckeExpr::one(), 2), Err(Error::UnsupportedGenus(2)));
        assert_eq!(hecke_image(&HeckeExpr::one(), 3).unwrap(), XPoly::one(4));
        let e = HeckeExpr::generator(Generator::Tp);
        assert_eq!(hecke_image(&e, 3).unwrap(), sp_image_tp(3));
    }
}
