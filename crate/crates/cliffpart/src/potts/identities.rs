//! Matrix-level checks of the identities linking the Pauli matrices, the
//! site operators `X_k`, `Z_k`, the global shift `U` and the generators.

use num_complex::Complex64;

use crate::dense::{identity, kron_all, matpow, max_abs_diff, DenseMatrix};
use crate::error::Result;
use crate::gca::{monomial_matrix, pauli, AlgebraSignature, Parity, Pauli};
use crate::guards::Guards;
use crate::phase_arith::{omega, xi, PhaseExponent};
use crate::potts::gamma_forms::{
    bond_prefactor, bond_word, boundary_prefactor, global_shift, shift_prefactor,
    site_shift_word,
};

/// One identity evaluated at one `(n, p)`.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub n: u32,
    pub p: usize,
    /// Largest entrywise deviation over all instances (sites, bonds).
    pub deviation: f64,
}

/// `X_k` or `Z_k`: `op` on site `k` (1-based), identity elsewhere.
pub fn site_operator(n: u32, p: usize, k: usize, op: &DenseMatrix) -> DenseMatrix {
    let id = identity(n as usize);
    let factors: Vec<DenseMatrix> = (1..=p).map(|s| if s == k { op.clone() } else { id.clone() }).collect();
    kron_all(&factors)
}

fn scaled(m: &DenseMatrix, s: Complex64) -> DenseMatrix {
    m.mapv(|z| z * s)
}

/// The single-site identities, which depend only on `n`.
pub fn pauli_identities(n: u32) -> Result<Vec<IdentityCheck>> {
    let s1 = pauli(n, Pauli::Shift)?;
    let s2 = pauli(n, Pauli::Mixed)?;
    let s3 = pauli(n, Pauli::Clock)?;
    let w = omega(n)?;
    let x = xi(n)?;
    let nm1 = (n - 1) as u64;
    let s3_inv = matpow(&s3, nm1);
    let (k1, k2, k3) = match Parity::of(n) {
        Parity::Odd => (w, Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0)),
        Parity::Even => (x, x, x),
    };
    let check = |name, lhs: DenseMatrix, rhs: DenseMatrix| IdentityCheck {
        name,
        n,
        p: 1,
        deviation: max_abs_diff(&lhs, &rhs),
    };
    Ok(vec![
        check(
            "clock^(n-1) mixed is a multiple of shift",
            matpow(&s3, nm1).dot(&s2),
            scaled(&s1, k1),
        ),
        check(
            "mixed^(n-1) shift is a multiple of clock^-1",
            matpow(&s2, nm1).dot(&s1),
            scaled(&s3_inv, k2),
        ),
        check(
            "clock from shift^(n-1) mixed",
            s3.clone(),
            scaled(&matpow(&s1, nm1).dot(&s2), k3),
        ),
    ])
}

/// The identities expressing `X_k`, the bonds and `U` in generators.
pub fn generator_identities(n: u32, p: usize, guards: &Guards) -> Result<Vec<IdentityCheck>> {
    let sig = AlgebraSignature::new(n, p, guards)?;
    let s1 = pauli(n, Pauli::Shift)?;
    let s3 = pauli(n, Pauli::Clock)?;
    let s3_inv = matpow(&s3, (n - 1) as u64);
    let dim = sig.dim();
    let id = identity(dim);
    let nn = n as u64;
    let mono = |m: &crate::gca::GammaMonomial, c: PhaseExponent| monomial_matrix(&sig, &m.clone().with_phase(c));
    let u = scaled(&kron_all(&vec![s1.clone(); p]), omega(n)?);

    let mut shift_dev: f64 = 0.0;
    let mut power_dev: f64 = max_abs_diff(&matpow(&u, nn), &id);
    for k in 1..=p {
        let xk = site_operator(n, p, k, &s1);
        let zk = site_operator(n, p, k, &s3);
        shift_dev = shift_dev.max(max_abs_diff(&xk, &mono(&site_shift_word(&sig, k), shift_prefactor(n))));
        power_dev = power_dev
            .max(max_abs_diff(&matpow(&xk, nn), &id))
            .max(max_abs_diff(&matpow(&zk, nn), &id));
    }
    let zinv = |k: usize| site_operator(n, p, k, &s3_inv);
    let z = |k: usize| site_operator(n, p, k, &s3);
    let mut bond_dev: f64 = 0.0;
    for k in 1..p {
        let lhs = zinv(k).dot(&z(k + 1));
        bond_dev = bond_dev.max(max_abs_diff(&lhs, &mono(&bond_word(&sig, k, k + 1), bond_prefactor(n))));
    }
    let boundary_lhs = zinv(p).dot(&z(1));
    let boundary_rhs = u.dot(&mono(&bond_word(&sig, p, 1), boundary_prefactor(n)));
    let product_rhs = monomial_matrix(&sig, &global_shift(&sig));

    let check = |name, deviation| IdentityCheck { name, n, p, deviation };
    Ok(vec![
        check("site shift X_k as gamma_k^(n-1) gamma-bar_k", shift_dev),
        check("bond Z_k^-1 Z_k+1 as gamma-bar_k^(n-1) gamma_k+1", bond_dev),
        check(
            "boundary bond Z_p^-1 Z_1 as U gamma-bar_p^(n-1) gamma_1",
            max_abs_diff(&boundary_lhs, &boundary_rhs),
        ),
        check("global shift U as product of site shifts", max_abs_diff(&u, &product_rhs)),
        check("U, X_k, Z_k have order n", power_dev),
    ])
}

/// All identities for one `(n, p)`.
pub fn representation_identities(n: u32, p: usize, guards: &Guards) -> Result<Vec<IdentityCheck>> {
    let mut out = pauli_identities(n)?;
    out.extend(generator_identities(n, p, guards)?);
    Ok(out)
}
