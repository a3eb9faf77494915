//! Monomial and elementary symmetric polynomials in `x1..xn`, and the
//! decomposition of symmetric polynomials into the monomial basis.
//!
//! Polynomials here use `nvars = n + 1`: index 0 is `x0`, which the
//! symmetric group leaves alone and which is tracked as a separate weight.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::algebra::{Monomial, PrimeLaurent, XPoly};
use crate::error::{Error, Result};

/// Non-increasing tuple of non-negative exponents, e.g. `(4, 3, 2)`.
///
/// Ordered by total size first, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Signature(Vec<u32>);

impl Signature {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotNonIncreasing);
        }
        Ok(Self(parts))
    }

    /// Sorts the parts into non-increasing order.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Multiplicity of each distinct part.
    pub fn multiplicities(&self) -> BTreeMap<u32, usize> {
        let mut m = BTreeMap::new();
        for &x in &self.0 {
            *m.entry(x).or_insert(0) += 1;
        }
        m
    }

    /// All signatures of length `n` with parts at most `max_part`.
    pub fn all_bounded(n: usize, max_part: u32) -> Vec<Signature> {
        fn rec(n: usize, cap: u32, prefix: &mut Vec<u32>, out: &mut Vec<Signature>) {
            if prefix.len() == n {
                out.push(Signature(prefix.clone()));
                return;
            }
            for x in (0..=cap).rev() {
                prefix.push(x);
                rec(n, x, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, max_part, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl Ord for Signature {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Signature {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// All permutations of `0..n` with their signs (`+1` even, `-1` odd).
pub fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut perms = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut perms);
    perms
        .into_iter()
        .map(|perm| {
            let inversions =
                (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
            let sign = if inversions % 2 == 0 { 1 } else { -1 };
            (perm, sign)
        })
        .collect()
}

/// Orbit sum of `x1^{i1} ... xn^{in}` under `S_n`, each distinct monomial once.
pub fn msym(sig: &Signature, n: usize) -> Result<XPoly> {
    if sig.len() != n {
        return Err(Error::LengthMismatch { expected: n, found: sig.len() });
    }
    let orbit: BTreeSet<Vec<u32>> = permutations(n)
        .into_iter()
        .map(|(perm, _)| {
            let mut e = vec![0; n + 1];
            for (slot, &src) in perm.iter().enumerate() {
                e[slot + 1] = sig.0[src];
            }
            e
        })
        .collect();
    Ok(XPoly::from_terms(n + 1, orbit.into_iter().map(|e| (Monomial::new(e), PrimeLaurent::one()))))
}

/// Elementary symmetric polynomial `s_i(x1, .., xn)`.
pub fn elem(i: usize, n: usize) -> Result<XPoly> {
    if i > n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    let parts = (0..n).map(|k| u32::from(k < i)).collect();
    msym(&Signature(parts), n)
}

/// A polynomial written as `sum c * x0^w * sym[sig]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymDecomposition {
    n: usize,
    terms: BTreeMap<(u32, Signature), PrimeLaurent>,
}

impl SymDecomposition {
    pub fn new(n: usize) -> Self {
        Self { n, terms: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, x0_weight: u32, sig: Signature, c: PrimeLaurent) {
        assert_eq!(sig.len(), self.n, "signature length");
        let key = (x0_weight, sig);
        let slot = self.terms.entry(key.clone()).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Terms ascending by `x0` weight, then signature.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &Signature, &PrimeLaurent)> + '_ {
        self.terms.iter().map(|((w, s), c)| (*w, s, c))
    }

    pub fn get(&self, x0_weight: u32, sig: &Signature) -> PrimeLaurent {
        self.terms.get(&(x0_weight, sig.clone())).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The single `x0` weight, when all terms share one.
    pub fn x0_weight(&self) -> Option<u32> {
        let mut ws = self.terms.keys().map(|(w, _)| *w);
        let first = ws.next()?;
        ws.all(|w| w == first).then_some(first)
    }

    /// Coefficients by signature, ignoring the `x0` weight.
    pub fn by_signature(&self) -> BTreeMap<Signature, PrimeLaurent> {
        let mut out: BTreeMap<Signature, PrimeLaurent> = BTreeMap::new();
        for ((_, s), c) in &self.terms {
            *out.entry(s.clone()).or_default() += c;
        }
        out
    }

    /// Expands back into an ordinary polynomial.
    pub fn to_xpoly(&self) -> XPoly {
        let mut out = XPoly::zero(self.n + 1);
        for ((w, s), c) in &self.terms {
            let mut shift = vec![0; self.n + 1];
            shift[0] = *w;
            let basis = msym(s, self.n).expect("stored signatures have length n");
            out = &out + &basis.mul_monomial(&shift).scale(c);
        }
        out
    }
}

/// Decomposes a polynomial symmetric in `x1..xn` into the monomial basis,
/// `x0` being carried along as a weight.
pub fn to_msym(a: &XPoly) -> Result<SymDecomposition> {
    let n = a.nvars().checked_sub(1).ok_or(Error::NotSymmetric)?;
    let mut out = SymDecomposition::new(n);
    for (w, mut rem) in a.split_by_var(0) {
        while let Some((m, c)) = rem.leading_term() {
            let exps = &m.exps()[1..];
            let sig = Signature::new(exps.to_vec()).map_err(|_| Error::NotSymmetric)?;
            let c = c.clone();
            let mut shift = vec![0; n + 1];
            shift[0] = w;
            let basis = msym(&sig, n)?.mul_monomial(&shift);
            rem = &rem - &basis.scale(&c);
            out.insert(w, sig, c);
        }
    }
    Ok(out)
}

/// True when every transposition of `x1..xn` fixes `a`.
pub fn is_symmetric(a: &XPoly) -> bool {
    let n = a.nvars().saturating_sub(1);
    (1..n).all(|i| a.swap_vars(i, i + 1) == *a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(p: &[u32]) -> Signature {
        Signature::new(p.to_vec()).unwrap()
    }

    fn x(i: usize) -> XPoly {
        XPoly::var(4, i)
    }

    #[test]
    fn listed_orbit_sums() {
        let s110 = &(&(&x(1) * &x(2)) + &(&x(1) * &x(3))) + &(&x(2) * &x(3));
        assert_eq!(msym(&sig(&[1, 1, 0]), 3).unwrap(), s110);
        assert_eq!(msym(&sig(&[0, 0, 0]), 3).unwrap(), XPoly::one(4));
        let s432 = msym(&sig(&[4, 3, 2]), 3).unwrap();
        assert_eq!(s432.len(), 6);
        for e in [[4, 3, 2], [4, 2, 3], [3, 4, 2], [3, 2, 4], [2, 4, 3], [2, 3, 4]] {
            assert!(s432.coeff(&[0, e[0], e[1], e[2]]).is_one());
        }
    }

    #[test]
    fn length_mismatch() {
        assert_eq!(msym(&sig(&[1, 0]), 3), Err(Error::LengthMismatch { expected: 3, found: 2 }));
    }

    #[test]
    fn signatures_reject_increasing_parts() {
        assert_eq!(Signature::new(vec![0, 1]), Err(Error::NotNonIncreasing));
        assert_eq!(Signature::from_unsorted(vec![0, 2, 1]), sig(&[2, 1, 0]));
    }

    #[test]
    fn elementary() {
        assert_eq!(elem(0, 3).unwrap(), XPoly::one(4));
        assert_eq!(elem(2, 3).unwrap(), msym(&sig(&[1, 1, 0]), 3).unwrap());
        assert_eq!(elem(3, 3).unwrap(), &(&x(1) * &x(2)) * &x(3));
        assert_eq!(elem(4, 3), Err(Error::IndexOutOfRange { index: 4, n: 3 }));
    }

    #[test]
    fn decomposes_tp_image() {
        let one = XPoly::one(4);
        let img = &(&(&x(0) * &(&one + &x(1))) * &(&one + &x(2))) * &(&one + &x(3));
        let d = to_msym(&img).unwrap();
        assert_eq!(d.x0_weight(), Some(1));
        let got: Vec<_> = d.terms().map(|(_, s, c)| (s.clone(), c.clone())).collect();
        let expect: Vec<_> =
            [[0, 0, 0], [1, 0, 0], [1, 1, 0], [1, 1, 1]].iter().map(|p| (sig(p), PrimeLaurent::one())).collect();
        assert_eq!(got, expect);
        assert_eq!(d.to_xpoly(), img);
    }

    #[test]
    fn elementary_decomposes_to_single_term() {
        let d = to_msym(&elem(2, 3).unwrap()).unwrap();
        assert_eq!(d.len(), 1);
        assert!(d.get(0, &sig(&[1, 1, 0])).is_one());
    }

    #[test]
    fn rejects_asymmetric_input() {
        let a = &x(1) + &x(2);
        assert_eq!(to_msym(&a), Err(Error::NotSymmetric));
        assert!(!is_symmetric(&a));
        assert!(is_symmetric(&msym(&sig(&[3, 1, 0]), 3).unwrap()));
    }

    #[test]
    fn permutation_signs() {
        let perms = permutations(3);
        assert_eq!(perms.len(), 6);
        assert_eq!(perms.iter().map(|(_, s)| s).sum::<i64>(), 0);
        assert_eq!(perms[0], (vec![0, 1, 2], 1));
    }

    #[test]
    fn bounded_enumeration() {
        assert_eq!(Signature::all_bounded(3, 6).len(), 84);
        assert_eq!(Signature::all_bounded(2, 4).len(), 15);
    }
}
