//! The transfer matrix written in generators.
//!
//! In the tensor representation
//!
//! * `X_k = c_X γ_k^{n−1} γ̄_k`,
//! * `Z_k^{−1} Z_{k+1} = c_Z γ̄_k^{n−1} γ_{k+1}`,
//! * `Z_p^{−1} Z_1 = c_B U γ̄_p^{n−1} γ_1`, with `U = ω ⊗^p σ1`,
//! * `U = c_U ∏_k γ_k^{n−1} γ̄_k`,
//!
//! and the prefactors depend on the parity of `n`:
//!
//! | | odd `n` | even `n` |
//! |---|---|---|
//! | `c_X` | `ω^{−1}` | `ξ^{−1}` |
//! | `c_Z` | `1` | `ξ^{−1}` |
//! | `c_B` | `1` | `ξ^{−1}` |
//! | `c_U` | `ω^{1−p}` | `ξ^{2−p}` |
//!
//! On the sector `U = ω^k` the boundary bond becomes the monomial
//! `c_B ω^k γ̄_p^{n−1} γ_1`, so `B = Σ_k B_k V_k^+ V_k^−` with
//! `B_k = B_k^+ B_k^−` built from unit-power monomials
//!
//! * `u_k^+ = ω^k ρ^{−1} γ̄_p^{n−1} γ_1`, `u_k^− = ω^{−k} ρ γ_1^{n−1} γ̄_p`,
//! * `v_α^+ = ρ^{−1} γ̄_α^{n−1} γ_{α+1}`, `v_α^− = ρ γ_{α+1}^{n−1} γ̄_α`,
//!
//! whose exponentials are degree-`(n−1)` polynomials.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gca::{exp_unit_monomial, AlgebraElement, AlgebraSignature, GammaMonomial, Parity};
use crate::guards::Guards;
use crate::phase_arith::{gen_hyperbolic, rho, PhaseExponent};
use crate::potts::model::LatticeModel;

/// `c_X` in `X_k = c_X γ_k^{n−1} γ̄_k`.
pub fn shift_prefactor(n: u32) -> PhaseExponent {
    match Parity::of(n) {
        Parity::Odd => PhaseExponent::omega_pow(n, -1),
        Parity::Even => PhaseExponent::xi_pow(n, -1),
    }
    .expect("valid order")
}

/// `c_Z` in `Z_k^{−1} Z_{k+1} = c_Z γ̄_k^{n−1} γ_{k+1}`.
pub fn bond_prefactor(n: u32) -> PhaseExponent {
    match Parity::of(n) {
        Parity::Odd => PhaseExponent::one(n),
        Parity::Even => PhaseExponent::xi_pow(n, -1),
    }
    .expect("valid order")
}

/// `c_B` in `Z_p^{−1} Z_1 = c_B U γ̄_p^{n−1} γ_1`.
pub fn boundary_prefactor(n: u32) -> PhaseExponent {
    bond_prefactor(n)
}

/// `c_U` in `U = c_U ∏_k γ_k^{n−1} γ̄_k`.
pub fn global_shift_prefactor(n: u32, p: usize) -> PhaseExponent {
    let p = p as i64;
    match Parity::of(n) {
        Parity::Odd => PhaseExponent::omega_pow(n, 1 - p),
        Parity::Even => PhaseExponent::xi_pow(n, 2 - p),
    }
    .expect("valid order")
}

/// `γ_k^{n−1} γ̄_k`, the bare form of the site shift `X_k`.
pub fn site_shift_word(sig: &AlgebraSignature, k: usize) -> GammaMonomial {
    let mut word = vec![sig.gamma(k); sig.n as usize - 1];
    word.push(sig.gamma_bar(k));
    GammaMonomial::from_word(sig, &word).expect("indices in range")
}

/// `γ̄_k^{n−1} γ_l`, the bare form of a bond `Z_k^{−1} Z_l`.
pub fn bond_word(sig: &AlgebraSignature, k: usize, l: usize) -> GammaMonomial {
    let mut word = vec![sig.gamma_bar(k); sig.n as usize - 1];
    word.push(sig.gamma(l));
    GammaMonomial::from_word(sig, &word).expect("indices in range")
}

/// `γ_l^{n−1} γ̄_k`, the bare form of the reversed bond.
pub fn reverse_bond_word(sig: &AlgebraSignature, k: usize, l: usize) -> GammaMonomial {
    let mut word = vec![sig.gamma(l); sig.n as usize - 1];
    word.push(sig.gamma_bar(k));
    GammaMonomial::from_word(sig, &word).expect("indices in range")
}

/// `U` as a monomial.
pub fn global_shift(sig: &AlgebraSignature) -> GammaMonomial {
    let one = GammaMonomial::identity(sig);
    (1..=sig.p)
        .fold(one, |acc, k| crate::gca::monomial_mul(sig, &acc, &site_shift_word(sig, k)))
        .with_phase(global_shift_prefactor(sig.n, sig.p))
}

/// The unit-power monomials of one sector `k`.
#[derive(Debug, Clone)]
pub struct SectorMonomials {
    pub u_plus: GammaMonomial,
    pub u_minus: GammaMonomial,
    pub v_plus: Vec<GammaMonomial>,
    pub v_minus: Vec<GammaMonomial>,
}

pub fn sector_monomials(sig: &AlgebraSignature, k: u32) -> SectorMonomials {
    let n = sig.n;
    let p = sig.p;
    let r = rho(n).expect("valid order");
    let wk = PhaseExponent::omega_pow(n, k as i64).expect("valid order");
    SectorMonomials {
        u_plus: bond_word(sig, p, 1).with_phase(wk * r.inv()),
        u_minus: reverse_bond_word(sig, p, 1).with_phase(wk.inv() * r),
        v_plus: (1..p).map(|a| bond_word(sig, a, a + 1).with_phase(r.inv())).collect(),
        v_minus: (1..p)
            .map(|a| reverse_bond_word(sig, a, a + 1).with_phase(r))
            .collect(),
    }
}

/// Coefficients multiplying `u^+`, `u^−`, `v^+`, `v^−` inside the exponent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SectorCoefficients {
    pub boundary_plus: Complex64,
    pub boundary_minus: Complex64,
    pub bond_plus: Complex64,
    pub bond_minus: Complex64,
}

pub fn sector_coefficients(n: u32, b: f64) -> SectorCoefficients {
    let r = rho(n).expect("valid order");
    let cb = boundary_prefactor(n);
    let cz = bond_prefactor(n);
    let bc = Complex64::new(b, 0.0);
    SectorCoefficients {
        boundary_plus: bc * (cb * r).to_complex(),
        boundary_minus: bc * (cb * r).inv().to_complex(),
        bond_plus: bc * (cz * r).to_complex(),
        bond_minus: bc * (cz * r).inv().to_complex(),
    }
}

/// Symbolic forms of the transfer matrix factors.
#[derive(Debug, Clone)]
pub struct GammaForms {
    pub sig: AlgebraSignature,
    pub a_sym: AlgebraElement,
    pub b_sym: AlgebraElement,
    /// `B_k^+` for each sector.
    pub b_plus: Vec<AlgebraElement>,
    /// `B_k^−` for each sector.
    pub b_minus: Vec<AlgebraElement>,
    /// `V_k^+ V_k^−` for each sector.
    pub projectors: Vec<AlgebraElement>,
    pub u: GammaMonomial,
}

impl GammaForms {
    /// `B_k = B_k^+ B_k^−`.
    pub fn sector(&self, k: usize) -> AlgebraElement {
        self.b_plus[k].mul(&self.sig, &self.b_minus[k])
    }
}

fn labelled(what: String) -> impl FnOnce(Error) -> Error {
    move |e| match e {
        Error::Precondition(msg) => Error::Precondition(format!("{what}: {msg}")),
        other => other,
    }
}

/// `A = ∏_k W[c_X γ_k^{n−1} γ̄_k]` and `B = Σ_k B_k^+ B_k^− V_k^+ V_k^−`.
pub fn gamma_forms(model: &LatticeModel, guards: &Guards) -> Result<GammaForms> {
    let sig = AlgebraSignature::new(model.n, model.p, guards)?;
    let n = model.n;
    let p = model.p;
    let lambda: Vec<Complex64> = (0..n)
        .map(|l| {
            let c = (2.0 * std::f64::consts::PI * l as f64 / n as f64).cos();
            Complex64::new((2.0 * model.a * c).exp(), 0.0)
        })
        .collect();
    let cx = shift_prefactor(n);
    let mut a_sym = AlgebraElement::identity(&sig);
    for k in 1..=p {
        let x = site_shift_word(&sig, k).with_phase(cx);
        let mut w = AlgebraElement::zero();
        for (l, lam) in lambda.iter().enumerate() {
            w.add_term(&x.pow(&sig, l as u32), *lam);
        }
        a_sym = a_sym.mul(&sig, &w);
    }

    let coeffs = sector_coefficients(n, model.b);
    let u = global_shift(&sig);
    let u_inv = u.inverse(&sig);
    let mut b_plus = Vec::with_capacity(n as usize);
    let mut b_minus = Vec::with_capacity(n as usize);
    let mut projectors = Vec::with_capacity(n as usize);
    let mut b_sym = AlgebraElement::zero();
    for k in 0..n {
        let mono = sector_monomials(&sig, k);
        let mut plus = exp_unit_monomial(&sig, coeffs.boundary_plus, &mono.u_plus)
            .map_err(labelled(format!("boundary term u+ of sector {k}")))?;
        let mut minus = exp_unit_monomial(&sig, coeffs.boundary_minus, &mono.u_minus)
            .map_err(labelled(format!("boundary term u- of sector {k}")))?;
        for (alpha, (vp, vm)) in mono.v_plus.iter().zip(&mono.v_minus).enumerate() {
            let ep = exp_unit_monomial(&sig, coeffs.bond_plus, vp)
                .map_err(labelled(format!("bond v+ {}", alpha + 1)))?;
            let em = exp_unit_monomial(&sig, coeffs.bond_minus, vm)
                .map_err(labelled(format!("bond v- {}", alpha + 1)))?;
            plus = ep.mul(&sig, &plus);
            minus = em.mul(&sig, &minus);
        }
        let vp = projector(&sig, &u, k as i64);
        let vm = projector(&sig, &u_inv, -(k as i64));
        let proj = vp.mul(&sig, &vm);
        b_sym = b_sym.add(&plus.mul(&sig, &minus).mul(&sig, &proj));
        b_plus.push(plus);
        b_minus.push(minus);
        projectors.push(proj);
    }
    Ok(GammaForms {
        sig,
        a_sym,
        b_sym,
        b_plus,
        b_minus,
        projectors,
        u,
    })
}

/// `(1/n) Σ_i ω^{−ki} x^i` for a monomial `x` with `x^n = 1`.
pub fn projector(sig: &AlgebraSignature, x: &GammaMonomial, k: i64) -> AlgebraElement {
    let n = sig.n;
    let mut out = AlgebraElement::zero();
    let mut power = GammaMonomial::identity(sig);
    for i in 0..n as i64 {
        let w = PhaseExponent::omega_pow(n, -k * i).expect("valid order").to_complex();
        out.add_term(&power, w / n as f64);
        power = crate::gca::monomial_mul(sig, &power, x);
    }
    out.pruned()
}

/// `f_i` values at the four sector coefficients, shared by the multisum.
pub(crate) fn sector_tables(n: u32, b: f64) -> Result<[Vec<Complex64>; 4]> {
    let c = sector_coefficients(n, b);
    Ok([
        gen_hyperbolic(n, c.boundary_plus)?.values,
        gen_hyperbolic(n, c.boundary_minus)?.values,
        gen_hyperbolic(n, c.bond_plus)?.values,
        gen_hyperbolic(n, c.bond_minus)?.values,
    ])
}
