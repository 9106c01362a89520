mod common;

use cliffpart::dense::{max_abs_diff, max_rel_diff, rel_diff, trace, DenseMatrix};
use cliffpart::guards::Guards;
use cliffpart::potts::transfer::{build_transfer, decomposed_power, projector_suite};
use cliffpart::potts::{
    brute_force_partition, decomposed_partition, gamma_forms, multisum_power, transfer_partition,
    LatticeModel,
};
use cliffpart::tolerances;

fn model(n: u32, p: usize, q: usize, a: f64, b: f64) -> LatticeModel {
    LatticeModel::new(n, p, q, a, b).unwrap()
}

#[test]
fn brute_force_matches_transfer_trace() {
    let g = Guards::default();
    for n in 2..=4u32 {
        for p in 1..=3usize {
            for q in 1..=3usize {
                if (n as f64).powi((p * q) as i32) > 1e6 {
                    continue;
                }
                for (a, b) in [(0.1, 0.2), (-0.3, 0.25), (0.0, 0.0)] {
                    let m = model(n, p, q, a, b);
                    let zb = brute_force_partition(&m, &g).unwrap().z;
                    let zt = transfer_partition(&m, &g).unwrap().z;
                    assert!(
                        rel_diff(zt, zb) < tolerances::PIPELINE_REL,
                        "n={n} p={p} q={q} a={a} b={b}: {zb} vs {zt}"
                    );
                }
            }
        }
    }
}

#[test]
fn projector_identities_hold() {
    let g = Guards::default();
    for n in 2..=5u32 {
        for p in 1..=3usize {
            let m = model(n, p, 2, 0.17, -0.11);
            let r = projector_suite(&build_transfer(&m, &g).unwrap());
            let tol = tolerances::IDENTITY;
            assert!(r.power < tol, "power {n} {p}: {r:?}");
            assert!(r.orthogonality < tol, "orth {n} {p}: {r:?}");
            assert!(r.resolution < tol, "resolution {n} {p}: {r:?}");
            assert!(r.shift_commutator < tol, "[U,A] {n} {p}: {r:?}");
            assert!(r.projector_commutator < tol, "[V,A] {n} {p}: {r:?}");
            if p > 1 {
                assert!(r.ab_commutator > 1e-6, "[A,B] vanished {n} {p}");
            }
        }
    }
}

#[test]
fn gamma_forms_reproduce_dense_factors() {
    let g = Guards::default();
    for n in 2..=5u32 {
        for p in 1..=3usize {
            let m = model(n, p, 2, 0.21, -0.13);
            let ops = build_transfer(&m, &g).unwrap();
            let forms = gamma_forms(&m, &g).unwrap();
            let a = forms.a_sym.to_matrix(&forms.sig);
            let b = forms.b_sym.to_matrix(&forms.sig);
            assert!(max_rel_diff(&a, &ops.a) < tolerances::IDENTITY, "A at n={n} p={p}");
            assert!(max_rel_diff(&b, &ops.b) < tolerances::IDENTITY, "B at n={n} p={p}");
            for k in 0..n as usize {
                let proj = forms.projectors[k].to_matrix(&forms.sig);
                let dense = ops.v_plus[k].dot(&ops.v_minus[k]);
                assert!(max_abs_diff(&proj, &dense) < tolerances::IDENTITY, "V_{k} at n={n} p={p}");
            }
        }
    }
}

#[test]
fn sector_factors_commute() {
    let g = Guards::default();
    for n in 2..=4u32 {
        for p in 1..=3usize {
            let m = model(n, p, 2, 0.3, 0.4);
            let forms = gamma_forms(&m, &g).unwrap();
            for k in 0..n as usize {
                let bp = forms.b_plus[k].to_matrix(&forms.sig);
                let bm = forms.b_minus[k].to_matrix(&forms.sig);
                let c = bp.dot(&bm) - bm.dot(&bp);
                assert!(c.iter().all(|z| z.norm() < tolerances::IDENTITY), "n={n} p={p} k={k}");
            }
        }
    }
}

#[test]
fn decomposed_power_matches_dense_power() {
    let g = Guards::default();
    for (n, p) in [(3u32, 2usize), (3, 3), (2, 3), (4, 2)] {
        for q in [3usize, 4, 5, 7] {
            let m = model(n, p, q, 0.12, 0.27);
            let ops = build_transfer(&m, &g).unwrap();
            let forms = gamma_forms(&m, &g).unwrap();
            let dense: DenseMatrix = cliffpart::dense::matpow(&ops.m, q as u64);
            let dec = decomposed_power(&ops, &forms, q);
            assert!(
                max_rel_diff(&dec, &dense) < tolerances::PIPELINE_REL,
                "n={n} p={p} q={q}"
            );
            let z = decomposed_partition(&m, &g).unwrap().z;
            assert!(rel_diff(z, trace(&dense)) < tolerances::PIPELINE_REL);
        }
    }
}

#[test]
fn multisum_matches_transfer_power() {
    let g = Guards::default();
    for (n, p, q, a, b) in [(2u32, 2usize, 2usize, 0.1, 0.2), (2, 1, 3, 0.4, -0.2), (3, 1, 2, 0.2, 0.1), (2, 2, 1, -0.3, 0.5)] {
        let m = model(n, p, q, a, b);
        let res = multisum_power(&m, &g).unwrap();
        let ops = build_transfer(&m, &g).unwrap();
        let dense = cliffpart::dense::matpow(&ops.m, q as u64);
        assert!(max_rel_diff(&res.matrix, &dense) < tolerances::PIPELINE_REL, "matrix n={n} p={p} q={q}");
        let zb = brute_force_partition(&m, &g).unwrap().z;
        assert!(rel_diff(res.z, zb) < tolerances::PIPELINE_REL, "z n={n} p={p} q={q}: {} vs {zb}", res.z);
        assert!(res.trace_phases.iter().all(|t| !t.is_zero()));
        if n % 2 == 1 || p % 2 == 0 {
            assert!(res.traces_are_roots_of_unity(), "phases {:?}", res.trace_phases);
        }
    }
}

#[test]
fn odd_xi_phases_appear_for_even_order_and_odd_width() {
    // The global shift carries ξ^(2−p), so odd p brings in ξ-odd traces.
    let g = Guards::default();
    let res = multisum_power(&model(2, 1, 2, 0.2, 0.3), &g).unwrap();
    assert!(!res.traces_are_roots_of_unity());
    let res = multisum_power(&model(2, 2, 1, 0.2, 0.3), &g).unwrap();
    assert!(res.traces_are_roots_of_unity());
}

#[test]
fn multisum_collapses_without_vertical_coupling() {
    let g = Guards::default();
    let m = model(2, 2, 2, 0.35, 0.0);
    let res = multisum_power(&m, &g).unwrap();
    let lam = cliffpart::potts::transfer::circulant_weights(2, 0.35);
    let single: f64 = lam.iter().sum::<f64>().powi(2) + (lam[0] - lam[1]).powi(2);
    let expected = single.powi(2);
    assert!(rel_diff(res.z, num_complex::Complex64::new(expected, 0.0)) < tolerances::PIPELINE_REL);
}
