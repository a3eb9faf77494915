//! The ten end-to-end checks, each comparing a computation against the
//! published values in [`crate::reference`] or against an independent route.

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::{Assignment, Monomial, PrimeLaurent, VSeries, XPoly};
use crate::error::{Error, Result};
use crate::reference;
use crate::series::{
    functional_eq_check, k_coefficients, leading_term_data, p3_closed_form, p3_in_generators, p3_leading_term,
    p_numerator, q3_in_generators, q_poly, specialize_nu, HeckeExpr, DEFAULT_ORDER,
};
use crate::spherical::{hecke_image, omega_cosets, omega_hl, sm, sp_image_pbracket, sp_image_ti, sp_image_tp};
use crate::symmetric::{msym, permutations, to_msym, Signature};

pub struct Check {
    pub id: usize,
    pub title: &'static str,
    run: fn() -> Result<String>,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub id: usize,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

impl Report {
    /// `criterion 4 PASS numerator identity: ...`, without timing.
    pub fn verdict(&self) -> String {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        format!("criterion {} {verdict} {}: {}", self.id, self.title, self.detail)
    }

    /// The verdict followed by the elapsed time.
    pub fn line(&self) -> String {
        format!("{} ({:.2} s)", self.verdict(), self.seconds)
    }
}

impl Check {
    pub fn run(&self) -> Report {
        let start = Instant::now();
        let outcome = (self.run)();
        let seconds = start.elapsed().as_secs_f64();
        let (passed, detail) = match outcome {
            Ok(d) => (true, d),
            Err(e) => (false, e.to_string()),
        };
        Report { id: self.id, title: self.title, passed, detail, seconds }
    }
}

pub fn checks() -> Vec<Check> {
    vec![
        Check { id: 1, title: "golden omega table", run: omega_table },
        Check { id: 2, title: "oracle equivalence", run: oracle_equivalence },
        Check { id: 3, title: "Sp images", run: sp_images },
        Check { id: 4, title: "numerator identity", run: numerator_identity },
        Check { id: 5, title: "low-genus sanity", run: low_genus },
        Check { id: 6, title: "P_3 in generators", run: p3_generators },
        Check { id: 7, title: "K table", run: k_table },
        Check { id: 8, title: "functional equation", run: functional_equation },
        Check { id: 9, title: "specialization", run: specialization },
        Check { id: 10, title: "property suites", run: properties },
    ]
}

pub fn check(id: usize) -> Option<Check> {
    checks().into_iter().find(|c| c.id == id)
}

/// Runs every check concurrently; reports come back in id order.
pub fn run_all() -> Vec<Report> {
    checks().par_iter().map(Check::run).collect()
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Mismatch(what()))
    }
}

fn omega_table() -> Result<String> {
    let table = reference::omega_table()?;
    let computed = table.par_iter().map(|(sig, _)| omega_hl(sig, 3)).collect::<Result<Vec<_>>>()?;
    for ((sig, expect), got) in table.iter().zip(&computed) {
        ensure(expect == got, || format!("omega{sig} differs"))?;
    }
    Ok(format!("{} values match", table.len()))
}

fn oracle_equivalence() -> Result<String> {
    let mut cases = Vec::new();
    for (n, max_part, primes) in [(1, 4, &[2u64, 3, 5][..]), (2, 4, &[2, 3, 5]), (3, 3, &[2, 3])] {
        for sig in Signature::all_bounded(n, max_part) {
            for &q in primes {
                cases.push((n, sig.clone(), q));
            }
        }
    }
    cases.par_iter().try_for_each(|(n, sig, q)| {
        let expect = omega_hl(sig, *n)?.specialize_p(&BigRational::from_integer(BigInt::from(*q)));
        let got = omega_cosets(sig, *n, *q)?;
        ensure(expect == got, || format!("omega{sig} at p = {q} differs from the coset count"))
    })?;
    Ok(format!("{} (signature, prime) pairs agree", cases.len()))
}

fn sp_images() -> Result<String> {
    ensure(sp_image_tp(3) == reference::image_tp()?, || "image of T(p)".into())?;
    for i in 1..=3 {
        ensure(sp_image_ti(i, 3)? == reference::image_ti(i)?, || format!("image of T_{i}(p^2)"))?;
    }
    ensure(sp_image_pbracket(3) == reference::image_bracket()?, || "image of [p]_3".into())?;
    ensure(sm(1, 3)? == crate::parse::parse_laurent(reference::SM_1_3)?, || "sm_p(1, 3)".into())?;
    Ok("T(p), T_1..T_3(p^2), [p]_3 and sm_p(1,3) match".into())
}

fn numerator_identity() -> Result<String> {
    let p = p_numerator(3, DEFAULT_ORDER)?;
    let expect = reference::p3()?;
    for (k, (got, want)) in p.coeffs().iter().zip(&expect).enumerate() {
        ensure(got == want, || format!("coefficient of v^{k} in P_3"))?;
    }
    let closed = p3_closed_form(DEFAULT_ORDER, DEFAULT_ORDER)?;
    for (k, c) in closed.coeffs().iter().enumerate() {
        let want = expect.get(k).cloned().unwrap_or_else(|| XPoly::zero(4));
        ensure(*c == want, || format!("closed form differs at v^{k}"))?;
    }
    Ok(format!("v^7..v^{DEFAULT_ORDER} vanish, v^0..v^6 match, closed form agrees"))
}

fn low_genus() -> Result<String> {
    for (n, order) in [(1, 8), (2, 10)] {
        let p = p_numerator(n, order)?;
        let expect = reference::low_genus(n)?;
        ensure(p.coeffs() == expect.as_slice(), || format!("P_{n}"))?;
    }
    Ok("P_1 = 1 and P_2 = 1 - x0^2 x1 x2 v^2/p".into())
}

fn p3_generators() -> Result<String> {
    let u = p3_in_generators()?;
    let expect = reference::p3_hecke()?;
    let p = p_numerator(3, DEFAULT_ORDER)?;
    for (k, e) in u.iter().enumerate() {
        ensure(*e == expect[k], || format!("coefficient of v^{k}: got {e}"))?;
        ensure(hecke_image(e, 3)? == p.coeffs()[k], || format!("image of the v^{k} coefficient"))?;
    }
    let (sign, p_exp, bracket) = leading_term_data(3);
    ensure((sign, p_exp, bracket) == (1, 15, 3) && u[6] == p3_leading_term(), || "leading term".into())?;
    Ok("7 coefficients match; leading term p^15 [p]_3^3".into())
}

fn k_table() -> Result<String> {
    let q = q3_in_generators()?;
    let got = k_coefficients(&q);
    let expect = reference::k_values()?;
    for (name, want) in &expect {
        ensure(got.get(name) == Some(want), || format!("K_{name}"))?;
    }
    let zeros = expect.values().filter(|c| c.is_zero()).count();
    Ok(format!("{} coefficients match, {zeros} of them zero", expect.len()))
}

fn functional_equation() -> Result<String> {
    let q = q3_in_generators()?;
    ensure(functional_eq_check(&q), || "t_{8-i} = (p^6 [p]_3)^{4-i} t_i".into())?;
    let qp = q_poly(3)?;
    let expansion = reference::q3()?;
    let expect: Vec<HeckeExpr> = reference::q3_hecke()?;
    for j in 0..=8 {
        ensure(hecke_image(&q.t[j], 3)? == qp.coeffs()[j], || format!("image of t_{j}"))?;
        ensure(qp.coeffs()[j] == expansion[j], || format!("v^{j} of the sym expansion of Q_3"))?;
        ensure(q.t[j] == expect[j], || format!("t_{j}: got {}", q.t[j]))?;
    }
    Ok("t_0..t_8 match and satisfy the functional equation".into())
}

fn specialization() -> Result<String> {
    let nu = specialize_nu(&p_numerator(3, DEFAULT_ORDER)?)?;
    let mut got = nu.scalar_coeffs().ok_or_else(|| Error::Mismatch("nu(P_3) is not constant in x".into()))?;
    while got.last().is_some_and(PrimeLaurent::is_zero) {
        got.pop();
    }
    let [raw, expanded, factored] = reference::nu_p3()?;
    ensure(got == expanded, || "expanded form".into())?;
    ensure(got == factored, || "factored form".into())?;
    ensure(got == raw, || "uncollected form".into())?;
    Ok("nu(P_3) equals the expanded and the factored forms".into())
}

const PROPERTY_SEED: u64 = 0x5eed_2024;
const PROPERTY_CASES: usize = 64;

fn random_laurent(rng: &mut ChaCha8Rng) -> PrimeLaurent {
    let terms = rng.gen_range(1..=3);
    PrimeLaurent::from_terms((0..terms).map(|_| {
        let c = BigRational::new(rng.gen_range(-4..=4).into(), rng.gen_range(1..=3).into());
        (rng.gen_range(-2..=2), c)
    }))
}

fn random_xpoly(rng: &mut ChaCha8Rng, nvars: usize, max_exp: u32) -> XPoly {
    let terms = rng.gen_range(0..=4);
    XPoly::from_terms(
        nvars,
        (0..terms).map(|_| {
            let exps = (0..nvars).map(|_| rng.gen_range(0..=max_exp)).collect();
            (Monomial::new(exps), random_laurent(rng))
        }),
    )
}

/// `sym` as the `t` coefficient of `prod_sigma (1 + t x^{sigma(sig)})`,
/// normalized by its leading coefficient.
pub fn msym_by_generating_function(sig: &Signature, n: usize) -> Result<XPoly> {
    let nvars = n + 1;
    let mut prod = VSeries::one(nvars, 1);
    for (perm, _) in permutations(n) {
        let mut exps = vec![0; nvars];
        for (slot, &src) in perm.iter().enumerate() {
            exps[slot + 1] = sig.parts()[src];
        }
        let factor =
            VSeries::polynomial(nvars, &[XPoly::one(nvars), XPoly::term(Monomial::new(exps), PrimeLaurent::one())], 1)?;
        prod = prod.try_mul(&factor)?;
    }
    let t = prod.coeffs()[1].clone();
    let lead = t.leading_term().map(|(_, c)| c.clone()).ok_or(Error::DivisionByZero)?;
    t.div_exact(&XPoly::constant(nvars, lead))
}

fn properties() -> Result<String> {
    let sigs = Signature::all_bounded(3, 6);
    sigs.par_iter().try_for_each(|sig| {
        let m = msym(sig, 3)?;
        let back = to_msym(&m)?;
        ensure(back.len() == 1 && back.get(0, sig).is_one(), || format!("to_msym(sym{sig})"))?;
        ensure(back.to_xpoly() == m, || format!("round trip of sym{sig}"))?;
        ensure(msym_by_generating_function(sig, 3)? == m, || format!("generating function for sym{sig}"))
    })?;

    let mut rng = ChaCha8Rng::seed_from_u64(PROPERTY_SEED);
    for case in 0..PROPERTY_CASES {
        let order = rng.gen_range(1..=5);
        let mut coeffs = vec![XPoly::one(3)];
        coeffs.extend((0..order).map(|_| random_xpoly(&mut rng, 3, 2)));
        let s = VSeries::from_coeffs(3, coeffs)?;
        ensure(s.try_mul(&s.recip()?)? == VSeries::one(3, order), || format!("recip case {case}"))?;

        let a = random_xpoly(&mut rng, 3, 2);
        let b = random_xpoly(&mut rng, 3, 2);
        let assignment: Assignment = (0..3).map(|i| (i, random_xpoly(&mut rng, 2, 2))).collect();
        let sub = |f: &XPoly| f.substitute(&assignment);
        ensure(sub(&(&a * &b))? == &sub(&a)? * &sub(&b)?, || format!("substitute of a product, case {case}"))?;
        ensure(sub(&(&a + &b))? == &sub(&a)? + &sub(&b)?, || format!("substitute of a sum, case {case}"))?;
    }
    Ok(format!("{} signatures, {PROPERTY_CASES} random cases", sigs.len()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_one_to_ten() {
        let ids: Vec<usize> = checks().iter().map(|c| c.id).collect();
        assert_eq!(ids, (1..=10).collect::<Vec<_>>());
        assert!(check(11).is_none());
    }

    #[test]
    fn generating_function_matches_orbit_sum() {
        let sig = Signature::new(vec![2, 1, 1]).unwrap();
        assert_eq!(msym_by_generating_function(&sig, 3).unwrap(), msym(&sig, 3).unwrap());
    }

    #[test]
    fn report_line() {
        let r = Report { id: 3, title: "x", passed: false, detail: "d".into(), seconds: 0.5 };
        assert_eq!(r.line(), "criterion 3 FAIL x: d (0.50 s)");
    }
}
