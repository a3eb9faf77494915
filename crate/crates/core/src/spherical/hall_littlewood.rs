//! Closed form of `omega(t(p^lambda))` on the Hecke ring of `GL_n`, as a
//! Hall-Littlewood symmetrization at `t = 1/p`:
//!
//! ```text
//! omega(t(p^lambda)) = p^{-sum_i i*lambda_i} / v_lambda(1/p)
//!     * sum_{w in S_n} sgn(w) w( x^lambda prod_{i<j} (x_i - x_j/p) ) / prod_{i<j} (x_i - x_j)
//! ```
//!
//! with `lambda` non-increasing and `v_lambda(t) = prod_k prod_{j=1}^{m_k} (1 - t^j)/(1 - t)`
//! over the multiplicities `m_k` of the parts (zeros included).

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::algebra::{Monomial, PrimeLaurent, XPoly};
use crate::error::{Error, Result};
use crate::symmetric::{elem, permutations, Signature};

/// `x_i - x_j / p` in `n + 1` variables.
fn skew_factor(nvars: usize, i: usize, j: usize) -> XPoly {
    &XPoly::var(nvars, i) - &XPoly::var(nvars, j).scale(&PrimeLaurent::p_pow(-1))
}

/// `prod_{1<=i<j<=n} (x_i - x_j)`.
pub fn vandermonde(n: usize) -> XPoly {
    let nvars = n + 1;
    let mut v = XPoly::one(nvars);
    for i in 1..=n {
        for j in i + 1..=n {
            v = &v * &(&XPoly::var(nvars, i) - &XPoly::var(nvars, j));
        }
    }
    v
}

/// `sum_w sgn(w) w(f)` over permutations of `x1..xn`.
pub fn antisymmetrize(f: &XPoly, n: usize) -> XPoly {
    let mut out = XPoly::zero(n + 1);
    for (perm, sign) in permutations(n) {
        let mut full = Vec::with_capacity(n + 1);
        full.push(0);
        full.extend(perm.iter().map(|&k| k + 1));
        let image = f.permute_vars(&full);
        out = if sign > 0 { &out + &image } else { &out - &image };
    }
    out
}

/// `v_lambda(1/p)`: the product of `1 + 1/p + ... + p^{1-j}` for `j = 1..m_k`
/// over every part multiplicity `m_k`.
pub fn multiplicity_factor(lambda: &Signature) -> PrimeLaurent {
    let mut acc = PrimeLaurent::one();
    for &m in lambda.multiplicities().values() {
        for j in 1..=m as i32 {
            let geometric = PrimeLaurent::from_terms((0..j).map(|k| (-k, crate::algebra::rat(1))));
            acc = &acc * &geometric;
        }
    }
    acc
}

/// The symmetrization before the multiplicity and `p`-power normalization.
pub fn symmetrized_kernel(lambda: &Signature, n: usize) -> Result<XPoly> {
    if lambda.len() != n {
        return Err(Error::LengthMismatch { expected: n, found: lambda.len() });
    }
    let nvars = n + 1;
    let mut exps = vec![0; nvars];
    exps[1..].copy_from_slice(lambda.parts());
    let mut base = XPoly::term(Monomial::new(exps), PrimeLaurent::one());
    for i in 1..=n {
        for j in i + 1..=n {
            base = &base * &skew_factor(nvars, i, j);
        }
    }
    antisymmetrize(&base, n).div_exact(&vandermonde(n))
}

/// `omega(t(p^{lambda_1}, .., p^{lambda_n}))` for a non-increasing `lambda`.
pub fn omega_hl(lambda: &Signature, n: usize) -> Result<XPoly> {
    let kernel = symmetrized_kernel(lambda, n)?;
    let v = multiplicity_factor(lambda);
    let weight: u32 = lambda.parts().iter().enumerate().map(|(i, &l)| (i as u32 + 1) * l).sum();
    let scale = PrimeLaurent::p_pow(-(weight as i32));
    let mut out = XPoly::zero(n + 1);
    for (m, c) in kernel.terms() {
        let c = &c.div_exact(&v)? * &scale;
        out = &out + &XPoly::term(m.clone(), c);
    }
    Ok(out)
}

/// [`omega_hl`] memoized for the lifetime of the process.
pub fn omega_hl_cached(lambda: &Signature, n: usize) -> Result<XPoly> {
    static CACHE: OnceLock<Mutex<HashMap<(Signature, usize), XPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (lambda.clone(), n);
    if let Some(hit) = cache.lock().expect("omega cache").get(&key) {
        return Ok(hit.clone());
    }
    let w = omega_hl(lambda, n)?;
    cache.lock().expect("omega cache").insert(key, w.clone());
    Ok(w)
}

/// `omega(pi_i^n(p)) = p^{-i(i+1)/2} s_i(x1, .., xn)`.
pub fn omega_pi(i: usize, n: usize) -> Result<XPoly> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    let e = (i * (i + 1) / 2) as i32;
    Ok(elem(i, n)?.scale(&PrimeLaurent::p_pow(-e)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PrimeRat;
    use crate::symmetric::{msym, to_msym};

    fn sig(p: &[u32]) -> Signature {
        Signature::new(p.to_vec()).unwrap()
    }

    fn lp(c: &[i64]) -> PrimeLaurent {
        PrimeLaurent::from_int_coeffs(c)
    }

    #[test]
    fn six_term_signed_sum_for_single_box() {
        // brute force: expand the six signed images of x1 (x1 - x2/p)(x1 - x3/p)(x2 - x3/p) by hand
        let n = 3;
        let x = |i| XPoly::var(4, i);
        let q = PrimeLaurent::p_pow(-1);
        let f = |a: usize, b: usize, c: usize| {
            let t1 = &x(a) - &x(b).scale(&q);
            let t2 = &x(a) - &x(c).scale(&q);
            let t3 = &x(b) - &x(c).scale(&q);
            &(&(&x(a) * &t1) * &t2) * &t3
        };
        let mut total = XPoly::zero(4);
        for (a, b, c, s) in [(1, 2, 3, 1), (2, 3, 1, 1), (3, 1, 2, 1), (2, 1, 3, -1), (1, 3, 2, -1), (3, 2, 1, -1)] {
            total = if s > 0 { &total + &f(a, b, c) } else { &total - &f(a, b, c) };
        }
        let quotient = total.div_exact(&vandermonde(n)).unwrap();
        let expect = msym(&sig(&[1, 0, 0]), 3).unwrap().scale(&lp(&[1, 1]).shift(-1));
        assert_eq!(quotient, expect);
        assert_eq!(symmetrized_kernel(&sig(&[1, 0, 0]), 3).unwrap(), expect);
    }

    #[test]
    fn multiplicity_factor_values() {
        assert_eq!(multiplicity_factor(&sig(&[1, 0, 0])), lp(&[1, 1]).shift(-1));
        assert!(multiplicity_factor(&sig(&[2, 1, 0])).is_one());
        // (1 + t)(1 + t + t^2) at t = 1/p for three equal parts
        let expect = PrimeRat::new(lp(&[1, 2, 2, 1]), PrimeLaurent::p_pow(3)).unwrap();
        assert_eq!(PrimeRat::from(multiplicity_factor(&sig(&[0, 0, 0]))), expect);
    }

    #[test]
    fn trivial_signature() {
        assert_eq!(omega_hl(&sig(&[0, 0, 0]), 3).unwrap(), XPoly::one(4));
        assert_eq!(omega_hl(&sig(&[0]), 1).unwrap(), XPoly::one(2));
    }

    #[test]
    fn item_two_by_two_one() {
        let d = to_msym(&omega_hl(&sig(&[2, 1, 0]), 3).unwrap()).unwrap();
        assert_eq!(d.len(), 2);
        assert_eq!(d.get(0, &sig(&[1, 1, 1])), lp(&[-1, -1, 2]).shift(-6));
        assert_eq!(d.get(0, &sig(&[2, 1, 0])), PrimeLaurent::p_pow(-4));
    }

    #[test]
    fn pi_images() {
        assert_eq!(omega_pi(1, 3).unwrap(), msym(&sig(&[1, 0, 0]), 3).unwrap().scale(&PrimeLaurent::p_pow(-1)));
        assert_eq!(omega_pi(2, 3).unwrap(), msym(&sig(&[1, 1, 0]), 3).unwrap().scale(&PrimeLaurent::p_pow(-3)));
        assert_eq!(omega_pi(3, 3).unwrap(), msym(&sig(&[1, 1, 1]), 3).unwrap().scale(&PrimeLaurent::p_pow(-6)));
        assert_eq!(omega_pi(0, 3), Err(Error::IndexOutOfRange { index: 0, n: 3 }));
        assert_eq!(omega_pi(4, 3), Err(Error::IndexOutOfRange { index: 4, n: 3 }));
    }

    #[test]
    fn length_mismatch() {
        assert_eq!(omega_hl(&sig(&[1, 0]), 3), Err(Error::LengthMismatch { expected: 3, found: 2 }));
    }

    #[test]
    fn column_signatures_agree_with_pi() {
        for n in 1..=3 {
            for i in 1..=n {
                let parts = (0..n).map(|k| u32::from(k < i)).collect();
                assert_eq!(omega_hl(&Signature::new(parts).unwrap(), n).unwrap(), omega_pi(i, n).unwrap());
            }
        }
    }
}
