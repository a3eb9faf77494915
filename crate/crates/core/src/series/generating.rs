//! The series `R_n(v) = sum_delta Omega(T(p^delta)) v^delta`, the denominator
//! `Q_n(v)`, the numerator `P_n(v) = R_n(v) Q_n(v)`, and the degree
//! specialization.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::algebra::{Assignment, Monomial, PrimeLaurent, VSeries, XPoly};
use crate::error::{Error, Result};
use crate::spherical::omega_hl_cached;
use crate::symmetric::Signature;

/// Default truncation order for genus-3 series work.
pub const DEFAULT_ORDER: usize = 12;

fn check_genus(n: usize) -> Result<()> {
    if (1..=3).contains(&n) {
        Ok(())
    } else {
        Err(Error::UnsupportedGenus(n))
    }
}

/// Non-decreasing tuples `0 <= d_1 <= .. <= d_n <= top`.
fn chains(n: usize, top: u32) -> Vec<Vec<u32>> {
    fn rec(lo: u32, top: u32, left: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for d in lo..=top {
            cur.push(d);
            rec(d, top, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, top, n, &mut Vec::new(), &mut out);
    out
}

/// Coefficient of `v^delta` in `R_n(v)`:
/// `x0^delta sum_{0<=d_1<=..<=d_n<=delta} p^{n d_1 + (n-1) d_2 + .. + d_n} omega(t(p^d))`.
pub fn r_coefficient(n: usize, delta: u32) -> Result<XPoly> {
    check_genus(n)?;
    let mut x0 = vec![0; n + 1];
    x0[0] = delta;
    let mut out = XPoly::zero(n + 1);
    for d in chains(n, delta) {
        let weight: usize = d.iter().enumerate().map(|(k, &dk)| (n - k) * dk as usize).sum();
        let w = omega_hl_cached(&Signature::from_unsorted(d), n)?;
        out = &out + &w.scale(&PrimeLaurent::p_pow(weight as i32));
    }
    Ok(out.mul_monomial(&x0))
}

/// `R_n(v)` truncated after `v^order`.
pub fn r_series(n: usize, order: usize) -> Result<VSeries> {
    check_genus(n)?;
    let coeffs = (0..=order as u32).into_par_iter().map(|delta| r_coefficient(n, delta)).collect::<Result<Vec<_>>>()?;
    VSeries::from_coeffs(n + 1, coeffs)
}

/// `x0 * prod_{i in s} x_i` in `n + 1` variables.
fn subset_monomial(n: usize, subset: u32) -> XPoly {
    let mut exps = vec![0; n + 1];
    exps[0] = 1;
    for i in 0..n {
        if subset & (1 << i) != 0 {
            exps[i + 1] = 1;
        }
    }
    XPoly::term(Monomial::new(exps), PrimeLaurent::one())
}

/// `prod (1 - x0 x_S v)` over the given subsets, truncated after `v^order`.
fn factor_product(n: usize, subsets: impl Iterator<Item = u32>, order: usize) -> VSeries {
    let nvars = n + 1;
    subsets.fold(VSeries::one(nvars, order), |acc, s| {
        let f = VSeries::polynomial(nvars, &[XPoly::one(nvars), -subset_monomial(n, s)], order)
            .expect("matching variables");
        acc.try_mul(&f).expect("matching variables")
    })
}

/// `Q_n(v) = prod_{S subset {1..n}} (1 - x0 x_S v)`, a polynomial of degree `2^n`.
pub fn q_poly(n: usize) -> Result<VSeries> {
    check_genus(n)?;
    let top = 1usize << n;
    Ok(factor_product(n, 0..top as u32, top))
}

/// `P_n(v) = R_n(v) Q_n(v)`, after checking that `v^{2^n-1}..v^order` vanish.
///
/// The result has order `2^n - 2`.
pub fn p_numerator(n: usize, order: usize) -> Result<VSeries> {
    check_genus(n)?;
    let degree = (1usize << n) - 2;
    let min = (1usize << n) + 4;
    if order < min {
        return Err(Error::OrderTooSmall { order, min });
    }
    let r = r_series(n, order)?;
    let q = q_poly(n)?;
    let q = VSeries::polynomial(n + 1, q.coeffs(), order)?;
    let prod = r.try_mul(&q)?;
    for k in degree + 1..=order {
        if !prod.coeffs()[k].is_zero() {
            return Err(Error::NonVanishingTail(k));
        }
    }
    Ok(prod.truncate(degree))
}

/// `P_3(v)` through the reduced sum
/// `sum_{0<=a<=b<=bound} omega(t(1, p^a, p^b)) p^{2a+b} (x0 v)^b`
/// times the six factors `(1 - x0 x_S v)` with `|S|` in `{1, 2}`.
pub fn p3_closed_form(bound: usize, order: usize) -> Result<VSeries> {
    if bound < order {
        return Err(Error::OrderTooSmall { order: bound, min: order });
    }
    let nvars = 4;
    let mut coeffs = vec![XPoly::zero(nvars); order + 1];
    for (b, slot) in coeffs.iter_mut().enumerate() {
        let mut acc = XPoly::zero(nvars);
        for a in 0..=b as u32 {
            let w = omega_hl_cached(&Signature::new(vec![b as u32, a, 0])?, 3)?;
            acc = &acc + &w.scale(&PrimeLaurent::p_pow(2 * a as i32 + b as i32));
        }
        *slot = acc.mul_monomial(&[b as u32, 0, 0, 0]);
    }
    let sum = VSeries::from_coeffs(nvars, coeffs)?;
    let middle = (1u32..7).filter(|s| (1..=2).contains(&s.count_ones()));
    sum.try_mul(&factor_product(3, middle, order))
}

/// The degree homomorphism `x0 -> 1`, `x_i -> p^i` applied coefficientwise.
pub fn specialize_nu(s: &VSeries) -> Result<VSeries> {
    let nvars = s.nvars();
    let assignment: Assignment =
        (0..nvars).map(|i| (i, XPoly::constant(nvars, PrimeLaurent::p_pow(i as i32)))).collect::<BTreeMap<_, _>>();
    s.map(|c| c.substitute(&assignment))
}

/// Exponent data `(sign, p-power, [p]-power)` of the leading term
/// `(-1)^{n-1} p^{n(n+1)2^{n-2} - n^2} [p]^{2^{n-1}-1}` of `P_n`.
pub fn leading_term_data(n: usize) -> (i64, i64, u32) {
    assert!(n >= 1, "genus must be positive");
    let n = n as i64;
    let sign = if n % 2 == 1 { 1 } else { -1 };
    let p_exp = n * (n + 1) * (1 << n) / 4 - n * n;
    (sign, p_exp, (1u32 << (n - 1)) - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spherical::sp_image_tp;

    fn x(i: usize, nvars: usize) -> XPoly {
        XPoly::var(nvars, i)
    }

    #[test]
    fn chain_counts() {
        assert_eq!(chains(3, 1).len(), 4);
        assert_eq!(chains(2, 2).len(), 6);
        assert!(chains(3, 4).iter().all(|c| c.windows(2).all(|w| w[0] <= w[1])));
    }

    #[test]
    fn first_coefficients() {
        let r = r_series(3, 1).unwrap();
        assert_eq!(r.coeffs()[0], XPoly::one(4));
        assert_eq!(r.coeffs()[1], sp_image_tp(3));
    }

    #[test]
    fn genus_one_series() {
        let r = r_series(1, 6).unwrap();
        let denom = VSeries::polynomial(
            2,
            &[XPoly::one(2), -&(&x(0, 2) + &(&x(0, 2) * &x(1, 2))), &x(0, 2).pow(2) * &x(1, 2)],
            6,
        )
        .unwrap();
        assert_eq!(r, denom.recip().unwrap());
    }

    #[test]
    fn q_poly_genus_one() {
        let q = q_poly(1).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(q.coeffs()[1], -&(&x(0, 2) + &(&x(0, 2) * &x(1, 2))));
        assert_eq!(q.coeffs()[2], &x(0, 2).pow(2) * &x(1, 2));
    }

    #[test]
    fn q_poly_top_coefficient() {
        let q = q_poly(3).unwrap();
        assert_eq!(q.order(), 8);
        let expect = XPoly::term(Monomial::new(vec![8, 4, 4, 4]), PrimeLaurent::one());
        assert_eq!(q.coeffs()[8], expect);
    }

    #[test]
    fn numerator_genus_one_and_two() {
        assert_eq!(p_numerator(1, 8).unwrap(), VSeries::one(2, 0));
        let p2 = p_numerator(2, 10).unwrap();
        let expect = VSeries::polynomial(
            3,
            &[XPoly::one(3), XPoly::zero(3), XPoly::term(Monomial::new(vec![2, 1, 1]), -PrimeLaurent::p_pow(-1))],
            2,
        )
        .unwrap();
        assert_eq!(p2, expect);
    }

    #[test]
    fn order_guards() {
        assert_eq!(p_numerator(2, 5), Err(Error::OrderTooSmall { order: 5, min: 8 }));
        assert_eq!(p_numerator(4, 30), Err(Error::UnsupportedGenus(4)));
        assert!(matches!(p3_closed_form(3, 4), Err(Error::OrderTooSmall { .. })));
    }

    #[test]
    fn leading_terms() {
        assert_eq!(leading_term_data(1), (1, 0, 0));
        assert_eq!(leading_term_data(2), (-1, 2, 1));
        assert_eq!(leading_term_data(3), (1, 15, 3));
    }

    #[test]
    fn nu_of_one() {
        let s = specialize_nu(&VSeries::one(4, 3)).unwrap();
        assert_eq!(s, VSeries::one(4, 3));
        let m =
            VSeries::polynomial(4, &[XPoly::term(Monomial::new(vec![2, 1, 1, 1]), PrimeLaurent::one())], 0).unwrap();
        assert_eq!(specialize_nu(&m).unwrap().coeffs()[0], XPoly::constant(4, PrimeLaurent::p_pow(6)));
    }
}
