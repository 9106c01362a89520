use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gca::element::AlgebraElement;
use crate::gca::monomial::GammaMonomial;
use crate::gca::signature::AlgebraSignature;
use crate::phase_arith::gen_hyperbolic;

/// `exp(coeff · u) = Σ_{i<n} f_i(coeff) u^i` for a monomial with `u^n = 1`.
///
/// Fails when the normal-form n-th power of `u` is not exactly the identity,
/// reporting the phase it produced instead.
pub fn exp_unit_monomial(sig: &AlgebraSignature, coeff: Complex64, u: &GammaMonomial) -> Result<AlgebraElement> {
    let n = sig.n;
    let top = u.pow(sig, n);
    if !(top.is_scalar() && top.phase.is_one()) {
        return Err(Error::Precondition(format!(
            "u^n must be 1 but is {} times a word with exponents {:?}",
            top.phase, top.exponents
        )));
    }
    let f = gen_hyperbolic(n, coeff)?;
    let mut out = AlgebraElement::zero();
    let mut power = GammaMonomial::identity(sig);
    for i in 0..n as usize {
        out.add_term(&power, f.get(i));
        power = crate::gca::monomial::monomial_mul(sig, &power, u);
    }
    Ok(out.pruned())
}
