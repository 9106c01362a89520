use std::f64::consts::PI;
use std::time::Instant;

use num_complex::Complex64;

use crate::dense::{
    commutator, identity, kron_all, matpow, max_abs, max_abs_diff, trace, unitary_inverse, zeros,
    DenseMatrix,
};
use crate::error::Result;
use crate::gca::{pauli, Pauli};
use crate::guards::{ensure, Guards};
use crate::phase_arith::omega;
use crate::potts::gamma_forms::GammaForms;
use crate::potts::model::{LatticeModel, Method, PartitionResult};

/// Dense transfer operators of one model.
#[derive(Debug, Clone)]
pub struct TransferOperators {
    pub n: u32,
    pub p: usize,
    /// Row-to-row factor `⊗^p W[σ1]`.
    pub a: DenseMatrix,
    /// Diagonal intra-row factor.
    pub b: DenseMatrix,
    /// `M = B A`.
    pub m: DenseMatrix,
    /// Global shift `U = ω ⊗^p σ1`.
    pub u: DenseMatrix,
    /// `V_k^+ = (1/n) Σ_i ω^{−ki} U^i`.
    pub v_plus: Vec<DenseMatrix>,
    /// `V_k^− = (1/n) Σ_i ω^{ki} U^{−i}`.
    pub v_minus: Vec<DenseMatrix>,
}

/// `λ_l = exp(2a cos(2πl/n))`.
pub fn circulant_weights(n: u32, a: f64) -> Vec<f64> {
    (0..n)
        .map(|l| (2.0 * a * (2.0 * PI * l as f64 / n as f64).cos()).exp())
        .collect()
}

/// Builds `A`, `B`, `M`, `U` and the sector projectors.
pub fn build_transfer(model: &LatticeModel, guards: &Guards) -> Result<TransferOperators> {
    let (n, p) = (model.n, model.p);
    let dim = ensure("transfer matrix dimension n^p", n, p as u64, guards.dense_dim)? as usize;
    let s1 = pauli(n, Pauli::Shift)?;
    let lambda = circulant_weights(n, model.a);
    let mut w = zeros(n as usize);
    for (l, lam) in lambda.iter().enumerate() {
        w = w + matpow(&s1, l as u64).mapv(|z| z * *lam);
    }
    let a = kron_all(&vec![w; p]);

    let cos2: Vec<f64> = (0..n).map(|d| 2.0 * (2.0 * PI * d as f64 / n as f64).cos()).collect();
    let mut b = zeros(dim);
    let mut digits = vec![0u32; p];
    for x in 0..dim {
        let mut code = x;
        for d in digits.iter_mut().rev() {
            *d = (code % n as usize) as u32;
            code /= n as usize;
        }
        let e: f64 = (0..p)
            .map(|k| cos2[((digits[(k + 1) % p] + n - digits[k]) % n) as usize])
            .sum();
        b[[x, x]] = Complex64::new((model.b * e).exp(), 0.0);
    }
    let m = b.dot(&a);

    let w1 = omega(n)?;
    let u = kron_all(&vec![s1; p]).mapv(|z| z * w1);
    let u_inv = unitary_inverse(&u);
    let mut v_plus = Vec::with_capacity(n as usize);
    let mut v_minus = Vec::with_capacity(n as usize);
    for k in 0..n as i64 {
        let mut vp = zeros(dim);
        let mut vm = zeros(dim);
        let mut up = identity(dim);
        let mut um = identity(dim);
        for i in 0..n as i64 {
            let phase = Complex64::from_polar(1.0, -2.0 * PI * (k * i) as f64 / n as f64);
            vp = vp + up.mapv(|z| z * phase / n as f64);
            vm = vm + um.mapv(|z| z * phase.conj() / n as f64);
            up = up.dot(&u);
            um = um.dot(&u_inv);
        }
        v_plus.push(vp);
        v_minus.push(vm);
    }
    Ok(TransferOperators {
        n,
        p,
        a,
        b,
        m,
        u,
        v_plus,
        v_minus,
    })
}

/// `Tr M^q`.
pub fn transfer_partition(model: &LatticeModel, guards: &Guards) -> Result<PartitionResult> {
    let start = Instant::now();
    let ops = build_transfer(model, guards)?;
    let z = trace(&matpow(&ops.m, model.q as u64));
    Ok(PartitionResult {
        z,
        method: Method::Transfer,
        terms: model.q as u128,
        wall_time: start.elapsed(),
    })
}

/// Worst deviations found by [`projector_suite`].
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ProjectorReport {
    /// `max ‖(V_k^±)^n − V_k^±‖` entrywise.
    pub power: f64,
    /// `max ‖V_k^s V_l^t‖` over `k ≠ l` and all four sign pairs.
    pub orthogonality: f64,
    /// `‖Σ_k V_k^+ V_k^− − 1‖`.
    pub resolution: f64,
    /// `‖[U, A]‖`.
    pub shift_commutator: f64,
    /// `max ‖[V_k^±, A]‖`.
    pub projector_commutator: f64,
    /// `‖[A, B]‖`, expected nonzero for generic couplings.
    pub ab_commutator: f64,
}

/// Measures the projector identities on dense matrices.
pub fn projector_suite(ops: &TransferOperators) -> ProjectorReport {
    let n = ops.n as u64;
    let dim = ops.a.nrows();
    let mut r = ProjectorReport::default();
    let all: Vec<(&DenseMatrix, usize)> = ops
        .v_plus
        .iter()
        .enumerate()
        .map(|(k, v)| (v, k))
        .chain(ops.v_minus.iter().enumerate().map(|(k, v)| (v, k)))
        .collect();
    for (v, _) in &all {
        r.power = r.power.max(max_abs_diff(&matpow(v, n), v));
        r.projector_commutator = r.projector_commutator.max(max_abs(&commutator(v, &ops.a)));
    }
    for (x, k) in &all {
        for (y, l) in &all {
            if k != l {
                r.orthogonality = r.orthogonality.max(max_abs(&x.dot(*y)));
            }
        }
    }
    let mut sum = zeros(dim);
    for k in 0..ops.n as usize {
        sum = sum + ops.v_plus[k].dot(&ops.v_minus[k]);
    }
    r.resolution = max_abs_diff(&sum, &identity(dim));
    r.shift_commutator = max_abs(&commutator(&ops.u, &ops.a));
    r.ab_commutator = max_abs(&commutator(&ops.a, &ops.b));
    r
}

/// The exponent `r ∈ [1, n−1]` on the sector projectors: the residue of
/// `q − n` modulo `n − 1`, with residue 0 read as `n − 1`.
pub fn residue_exponent(n: u32, q: usize) -> u32 {
    let m = (n - 1) as i64;
    let r = (q as i64 - n as i64).rem_euclid(m) as u32;
    if r == 0 {
        n - 1
    } else {
        r
    }
}

/// `M^q = Σ_k [B_k^+ B_k^− A]^q (V_k^+ V_k^−)^r`.
pub fn decomposed_power(ops: &TransferOperators, forms: &GammaForms, q: usize) -> DenseMatrix {
    let r = residue_exponent(ops.n, q) as u64;
    let dim = ops.a.nrows();
    let mut out = zeros(dim);
    for k in 0..ops.n as usize {
        let bk = forms.sector(k).to_matrix(&forms.sig);
        let sector = matpow(&bk.dot(&ops.a), q as u64);
        let proj = matpow(&ops.v_plus[k].dot(&ops.v_minus[k]), r);
        out = out + sector.dot(&proj);
    }
    out
}

/// `Tr` of the sector decomposition.
pub fn decomposed_partition(model: &LatticeModel, guards: &Guards) -> Result<PartitionResult> {
    let start = Instant::now();
    let ops = build_transfer(model, guards)?;
    let forms = crate::potts::gamma_forms::gamma_forms(model, guards)?;
    let z = trace(&decomposed_power(&ops, &forms, model.q));
    Ok(PartitionResult {
        z,
        method: Method::Decomposed,
        terms: model.n as u128,
        wall_time: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residue_examples() {
        assert_eq!(residue_exponent(3, 5), 2);
        assert_eq!(residue_exponent(3, 4), 1);
        assert_eq!(residue_exponent(2, 7), 1);
        assert_eq!(residue_exponent(4, 5), 1);
        assert_eq!(residue_exponent(4, 6), 2);
        assert_eq!(residue_exponent(4, 7), 3);
    }

    #[test]
    fn b_is_diagonal() {
        let m = LatticeModel::new(3, 2, 2, 0.2, -0.3).unwrap();
        let ops = build_transfer(&m, &Guards::default()).unwrap();
        for ((i, j), z) in ops.b.indexed_iter() {
            if i != j {
                assert_eq!(*z, Complex64::new(0.0, 0.0));
            }
        }
    }

    #[test]
    fn two_state_projectors_are_half_sums() {
        let m = LatticeModel::new(2, 2, 2, 0.2, -0.3).unwrap();
        let ops = build_transfer(&m, &Guards::default()).unwrap();
        let id = identity(4);
        let vp0 = (&id + &ops.u).mapv(|z| z * 0.5);
        let vp1 = (&id - &ops.u).mapv(|z| z * 0.5);
        assert!(max_abs_diff(&ops.v_plus[0], &vp0) < 1e-15);
        assert!(max_abs_diff(&ops.v_plus[1], &vp1) < 1e-15);
        assert!(max_abs_diff(&ops.v_minus[0], &vp0) < 1e-15);
        assert!(max_abs_diff(&ops.v_minus[1], &vp1) < 1e-15);
    }
}
