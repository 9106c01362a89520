use cliffpart::guards::Guards;
use cliffpart::potts::identities::{pauli_identities, representation_identities};
use cliffpart::tolerances;

#[test]
fn operator_identities_hold_for_both_parities() {
    for n in 2..=5u32 {
        for p in 1..=3usize {
            for check in representation_identities(n, p, &Guards::default()).unwrap() {
                assert!(check.deviation < tolerances::IDENTITY, "{check:?}");
            }
        }
    }
}

#[test]
fn flipping_the_clock_inverse_phase_breaks_the_identity() {
    // For even n the clock^-1 identity carries ξ, not ξ^-1; conjugating the
    // stored phase must fail by O(1).
    use cliffpart::dense::{matpow, max_abs_diff};
    use cliffpart::gca::{pauli, Pauli};
    use cliffpart::phase_arith::xi;
    for n in [2u32, 4] {
        let s1 = pauli(n, Pauli::Shift).unwrap();
        let s2 = pauli(n, Pauli::Mixed).unwrap();
        let s3 = pauli(n, Pauli::Clock).unwrap();
        let lhs = matpow(&s2, (n - 1) as u64).dot(&s1);
        let inv = matpow(&s3, (n - 1) as u64);
        let x = xi(n).unwrap();
        assert!(max_abs_diff(&lhs, &inv.mapv(|z| z * x)) < tolerances::IDENTITY);
        assert!(max_abs_diff(&lhs, &inv.mapv(|z| z / x)) > 0.5);
    }
    assert!(pauli_identities(3).unwrap().iter().all(|c| c.deviation < tolerances::IDENTITY));
}
