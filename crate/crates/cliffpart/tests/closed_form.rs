use cliffpart::guards::Guards;
use cliffpart::potts::closed_form::ising_closed_form_with_sign;
use cliffpart::potts::{brute_force_partition, criticality_sign, ising_closed_form, LatticeModel};
use cliffpart::tolerances;

fn brute(p: usize, q: usize, a: f64, b: f64) -> f64 {
    let m = LatticeModel::new(2, p, q, a, b).unwrap();
    brute_force_partition(&m, &Guards::default()).unwrap().z.re
}

#[test]
fn matches_brute_force_on_both_sides_of_criticality() {
    for (p, q) in [(2, 2), (2, 3), (3, 3), (1, 4), (4, 4)] {
        for (a, b) in [(0.3, 0.2), (0.05, 0.1), (0.4, 0.35), (0.6, 0.5), (0.0, 0.7)] {
            let z = ising_closed_form(p, q, a, b).unwrap();
            let zb = brute(p, q, a, b);
            assert!((z - zb).abs() / zb < tolerances::CLOSED_FORM_REL, "{p}x{q} a={a} b={b}: {z} vs {zb}");
        }
    }
}

#[test]
fn wrong_sign_misses_visibly() {
    for (a, b) in [(0.1, 0.1), (0.4, 0.4)] {
        let zb = brute(2, 2, a, b);
        let sigma = criticality_sign(a, b);
        // The wrong sign either errors out or misses by far more than the tolerance.
        if let Ok(r) = ising_closed_form_with_sign(2, 2, a, b, -sigma) {
            assert!((r.z - zb).abs() / zb > 1e-3, "a={a} b={b}");
        }
    }
}

#[test]
fn zero_couplings_count_states() {
    for (p, q) in [(1, 1), (2, 2), (3, 4)] {
        let z = ising_closed_form(p, q, 0.0, 0.0).unwrap();
        assert!((z - 2f64.powi((p * q) as i32)).abs() < 1e-9);
    }
}

#[test]
fn antiferromagnetic_couplings_are_a_domain_error() {
    let err = ising_closed_form(3, 3, -0.2, 0.1).unwrap_err();
    assert!(matches!(err, cliffpart::Error::NumericDomain(_)));
}
