use symplectic_hecke::spherical::OmegaRegistry;
use symplectic_hecke::symmetric::Signature;
use symplectic_hecke::Error;

#[test]
fn registered_methods_agree_at_small_primes() {
    let reg = OmegaRegistry::with_defaults();
    let hl = reg.get("hl").unwrap();
    let cosets = reg.get("cosets").unwrap();
    for sig in Signature::all_bounded(3, 2) {
        for q in [2, 3, 5] {
            assert_eq!(hl.omega(&sig, 3, Some(q)).unwrap(), cosets.omega(&sig, 3, Some(q)).unwrap(), "{sig} at {q}");
        }
    }
}

#[test]
fn coset_method_needs_a_prime() {
    let reg = OmegaRegistry::with_defaults();
    let sig = Signature::new(vec![1, 0, 0]).unwrap();
    assert_eq!(reg.get("cosets").unwrap().omega(&sig, 3, None), Err(Error::MissingPrime));
    assert!(reg.get("hl").unwrap().omega(&sig, 3, None).is_ok());
}
