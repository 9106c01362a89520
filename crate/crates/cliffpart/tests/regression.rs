//! Values frozen from an independent enumeration; any drift is a regression.

use cliffpart::guards::Guards;
use cliffpart::potts::{brute_force_partition, ising_closed_form, transfer_partition, LatticeModel};

const FROZEN: [(u32, usize, usize, f64, f64, f64); 3] = [
    (3, 2, 2, 0.1, 0.2, 126.72831733526436),
    (3, 2, 3, 0.1, 0.2, 1328.997180905403),
    (2, 2, 2, 0.3, 0.2, 122.58267112928532),
];

#[test]
fn frozen_partition_values() {
    let g = Guards::default();
    for (n, p, q, a, b, z) in FROZEN {
        let m = LatticeModel::new(n, p, q, a, b).unwrap();
        let brute = brute_force_partition(&m, &g).unwrap().z;
        let transfer = transfer_partition(&m, &g).unwrap().z;
        assert!((brute.re - z).abs() / z < 1e-12, "brute {n} {p} {q}: {brute}");
        assert!((transfer.re - z).abs() / z < 1e-12, "transfer {n} {p} {q}: {transfer}");
        assert!(transfer.im.abs() / z < 1e-12);
    }
    let ising = ising_closed_form(2, 2, 0.3, 0.2).unwrap();
    assert!((ising - FROZEN[2].5).abs() / FROZEN[2].5 < 1e-12);
}
