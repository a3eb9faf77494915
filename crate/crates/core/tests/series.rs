use symplectic_hecke::algebra::{PrimeLaurent, VSeries};
use symplectic_hecke::series::solve::solve_unique;
use symplectic_hecke::series::theorems::GeneratorSystem;
use symplectic_hecke::series::{p_numerator, q_poly, r_series, NumeratorRegistry, DEFAULT_ORDER};
use symplectic_hecke::Error;

#[test]
fn rationality_at_order_twelve() {
    for n in 1..=3 {
        let r = r_series(n, DEFAULT_ORDER).unwrap();
        let q = q_poly(n).unwrap();
        let q = VSeries::polynomial(n + 1, q.coeffs(), DEFAULT_ORDER).unwrap();
        let prod = r.try_mul(&q).unwrap();
        let p = p_numerator(n, DEFAULT_ORDER).unwrap();
        let degree = (1 << n) - 2;
        assert_eq!(prod.truncate(degree), p);
        assert!(prod.coeffs()[degree + 1..].iter().all(|c| c.is_zero()), "genus {n}");
    }
}

#[test]
fn numerator_routes_agree() {
    let reg = NumeratorRegistry::with_defaults();
    let a = reg.get("rationality").unwrap().numerator(3, DEFAULT_ORDER).unwrap();
    let b = reg.get("closed-form").unwrap().numerator(3, DEFAULT_ORDER).unwrap();
    assert_eq!(a, b);
}

/// Every solve has full column rank: adding any single basis element to the
/// right-hand side either makes the system inconsistent or moves the solution.
#[test]
fn solves_are_unique_under_perturbation() {
    let p = p_numerator(3, DEFAULT_ORDER).unwrap();
    let q = q_poly(3).unwrap();
    let targets = [2, 3, 4, 6]
        .into_iter()
        .map(|k| (p.coeffs()[k].clone(), k as u32))
        .chain((1..=4).map(|k| (q.coeffs()[k].clone(), k as u32)));
    for (target, weight) in targets {
        let sys = GeneratorSystem::build(&target, weight).unwrap();
        let base = solve_unique(&sys.matrix, &sys.rhs).unwrap();
        assert_eq!(symplectic_hecke::series::solve::rank(&sys.matrix).unwrap(), sys.basis.len(), "weight {weight}");
        for row in 0..sys.rhs.len() {
            let mut rhs = sys.rhs.clone();
            rhs[row] = &rhs[row] + &PrimeLaurent::one();
            match solve_unique(&sys.matrix, &rhs) {
                Err(Error::NoSolution) | Err(Error::NotLaurent) => {}
                Ok(x) => assert_ne!(x, base, "weight {weight}, row {row}"),
                Err(e) => panic!("unexpected {e}"),
            }
        }
    }
}
