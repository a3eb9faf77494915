//! Independent route to `omega(t(p^lambda))` at a concrete prime: enumerate
//! the Hermite-normal-form left cosets inside the double coset of
//! `diag(p^lambda)` and add up their images.
//!
//! A left coset with representative
//!
//! ```text
//! | p^{d1}  a12    a13   |
//! |   0    p^{d2}  a23   |      0 <= a_ij < p^{dj}
//! |   0      0    p^{d3} |
//! ```
//!
//! maps to `prod_i (p^{-i} x_i)^{d_i}`. It lies in the double coset iff its
//! elementary divisors are `p^{lambda_n}, .., p^{lambda_1}`; only the
//! `p`-adic valuations of the determinantal divisors are compared.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use crate::algebra::{pow_signed, Monomial, PrimeLaurent, XPoly};
use crate::error::{Error, Result};
use crate::symmetric::Signature;

/// Largest number of candidate matrices an enumeration may visit.
pub const CANDIDATE_LIMIT: u128 = 10_000_000;

/// Upper-triangular coset representative with diagonal `(p^{d1}, .., p^{dn})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetMatrix {
    prime: i128,
    diag_exps: Vec<u32>,
    /// Row-major `n x n` integer entries.
    entries: Vec<i128>,
}

impl CosetMatrix {
    pub fn n(&self) -> usize {
        self.diag_exps.len()
    }

    pub fn diag_exps(&self) -> &[u32] {
        &self.diag_exps
    }

    pub fn entry(&self, i: usize, j: usize) -> i128 {
        self.entries[i * self.n() + j]
    }

    /// Exponents of the elementary divisors, ascending (`e_1 <= e_2 <= ..`).
    pub fn elementary_divisor_exponents(&self) -> Vec<u32> {
        let n = self.n();
        let mut prev = 0u32;
        let mut out = Vec::with_capacity(n);
        for k in 1..=n {
            let v = self.minor_valuation(k);
            out.push(v - prev);
            prev = v;
        }
        out
    }

    /// Minimum `p`-adic valuation over all `k x k` minors.
    fn minor_valuation(&self, k: usize) -> u32 {
        let n = self.n();
        let subsets = subsets(n, k);
        let mut best = u32::MAX;
        for rows in &subsets {
            for cols in &subsets {
                let det = self.det_sub(rows, cols);
                if det != 0 {
                    best = best.min(valuation(det, self.prime));
                    if best == 0 {
                        return 0;
                    }
                }
            }
        }
        best
    }

    fn det_sub(&self, rows: &[usize], cols: &[usize]) -> i128 {
        match rows.len() {
            1 => self.entry(rows[0], cols[0]),
            _ => {
                let mut acc = 0i128;
                for (c, &col) in cols.iter().enumerate() {
                    let a = self.entry(rows[0], col);
                    if a == 0 {
                        continue;
                    }
                    let rest: Vec<usize> = cols.iter().enumerate().filter(|&(k, _)| k != c).map(|(_, &x)| x).collect();
                    let sub = a * self.det_sub(&rows[1..], &rest);
                    acc += if c % 2 == 0 { sub } else { -sub };
                }
                acc
            }
        }
    }
}

fn valuation(mut x: i128, p: i128) -> u32 {
    let mut v = 0;
    while x % p == 0 {
        x /= p;
        v += 1;
    }
    v
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Compositions of `total` into `n` parts, each at least `min`.
fn compositions(total: u32, n: usize, min: u32) -> Vec<Vec<u32>> {
    fn rec(left: u32, slots: usize, min: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 1 {
            if left >= min {
                cur.push(left);
                out.push(cur.clone());
                cur.pop();
            }
            return;
        }
        for x in min..=left {
            cur.push(x);
            rec(left - x, slots - 1, min, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(total, n, min, &mut Vec::new(), &mut out);
    }
    out
}

pub fn is_prime(q: u64) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

/// Calls `visit` on every coset representative with diagonal exponents `d`
/// whose entries are all divisible by `p^floor`.
fn for_each_coset(prime: i128, d: &[u32], floor: u32, mut visit: impl FnMut(&CosetMatrix)) {
    let n = d.len();
    let mut m = CosetMatrix { prime, diag_exps: d.to_vec(), entries: vec![0; n * n] };
    for (i, &di) in d.iter().enumerate() {
        m.entries[i * n + i] = prime.pow(di);
    }
    // free positions (i, j), i < j, with value step p^floor and range p^{d_j}
    let slots: Vec<(usize, i128, i128)> = (0..n)
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .map(|(i, j)| (i * n + j, prime.pow(floor), prime.pow(d[j] - floor)))
        .collect();
    let mut digits = vec![0i128; slots.len()];
    loop {
        visit(&m);
        // odometer increment
        let mut k = 0;
        loop {
            if k == slots.len() {
                return;
            }
            let (pos, step, radix) = slots[k];
            digits[k] += 1;
            if digits[k] < radix {
                m.entries[pos] = digits[k] * step;
                break;
            }
            digits[k] = 0;
            m.entries[pos] = 0;
            k += 1;
        }
    }
}

/// Number of candidate matrices [`omega_cosets`] would visit.
pub fn candidate_count(lambda: &Signature, prime: u64) -> u128 {
    let n = lambda.len();
    let floor = lambda.parts().last().copied().unwrap_or(0);
    compositions(lambda.size(), n, floor)
        .iter()
        .map(|d| d.iter().enumerate().map(|(j, &dj)| (prime as u128).pow(j as u32 * (dj - floor))).product::<u128>())
        .sum()
}

/// Number of left cosets in the double coset of `diag(p^lambda)`, grouped by
/// diagonal exponents.
pub fn coset_counts(lambda: &Signature, n: usize, prime: u64) -> Result<BTreeMap<Vec<u32>, u64>> {
    if lambda.len() != n {
        return Err(Error::LengthMismatch { expected: n, found: lambda.len() });
    }
    if !is_prime(prime) {
        return Err(Error::NotPrime(prime));
    }
    let mut out = BTreeMap::new();
    if lambda.is_zero() {
        out.insert(vec![0; n], 1);
        return Ok(out);
    }
    let candidates = candidate_count(lambda, prime);
    if candidates > CANDIDATE_LIMIT {
        return Err(Error::EnumerationTooLarge { candidates, limit: CANDIDATE_LIMIT });
    }
    // every entry of a matrix in the double coset is divisible by p^{lambda_n}
    let floor = lambda.parts()[n - 1];
    let mut target: Vec<u32> = lambda.parts().to_vec();
    target.reverse();
    let p = prime as i128;
    let counts: Vec<(Vec<u32>, u64)> = compositions(lambda.size(), n, floor)
        .into_par_iter()
        .map(|d| {
            let mut hits = 0u64;
            for_each_coset(p, &d, floor, |m| {
                if m.elementary_divisor_exponents() == target {
                    hits += 1;
                }
            });
            (d, hits)
        })
        .collect();
    out.extend(counts.into_iter().filter(|(_, c)| *c > 0));
    Ok(out)
}

/// `omega(t(p^lambda))` at `p = prime`, by coset enumeration.
pub fn omega_cosets(lambda: &Signature, n: usize, prime: u64) -> Result<XPoly> {
    let counts = coset_counts(lambda, n, prime)?;
    let q = BigRational::from_integer(BigInt::from(prime));
    let terms = counts.into_iter().map(|(d, count)| {
        let weight: i32 = d.iter().enumerate().map(|(i, &di)| (i as i32 + 1) * di as i32).sum();
        let c = BigRational::from_integer(BigInt::from(count)) * pow_signed(&q, -weight);
        let mut exps = vec![0; n + 1];
        exps[1..].copy_from_slice(&d);
        (Monomial::new(exps), PrimeLaurent::constant(c))
    });
    Ok(XPoly::from_terms(n + 1, terms))
}
