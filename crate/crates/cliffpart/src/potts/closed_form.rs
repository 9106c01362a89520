use std::f64::consts::PI;
use std::time::Instant;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::potts::model::{LatticeModel, Method, PartitionResult};
use crate::tolerances;

/// Result of the two-state closed form with its diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub struct IsingClosedForm {
    pub z: f64,
    /// The sign in front of the fully periodic product.
    pub sigma: f64,
    /// Brackets that came out negative, as `(k, l, value, product)` with
    /// `product` in `0..4`.
    pub negative_brackets: Vec<(usize, usize, f64, usize)>,
}

/// `σ = sign(1 − sinh 2a′ sinh 2b′)` with `a′ = 2a`, `b′ = 2b`; positive on
/// the high-temperature side.
pub fn criticality_sign(a: f64, b: f64) -> f64 {
    if 1.0 - (4.0 * a).sinh() * (4.0 * b).sinh() >= 0.0 {
        1.0
    } else {
        -1.0
    }
}

/// Evaluates the four-product torus formula for two states with an explicit `σ`.
pub fn ising_closed_form_with_sign(p: usize, q: usize, a: f64, b: f64, sigma: f64) -> Result<IsingClosedForm> {
    if p == 0 || q == 0 {
        return Err(Error::InvalidInput(format!("lattice {p}x{q} must be at least 1x1")));
    }
    if !(a.is_finite() && b.is_finite()) || a < 0.0 || b < 0.0 {
        return Err(Error::NumericDomain(format!(
            "the closed form covers finite ferromagnetic couplings only (a = {a}, b = {b})"
        )));
    }
    let (ap, bp) = (2.0 * a, 2.0 * b);
    let chch = (2.0 * ap).cosh() * (2.0 * bp).cosh();
    let (sha, shb) = ((2.0 * ap).sinh(), (2.0 * bp).sinh());
    let antiperiodic = |m: usize, len: usize| PI * (2 * m + 1) as f64 / len as f64;
    let periodic = |m: usize, len: usize| 2.0 * PI * m as f64 / len as f64;
    type Angle = fn(usize, usize) -> f64;
    let terms: [(Angle, Angle); 4] = [
        (antiperiodic, antiperiodic),
        (periodic, antiperiodic),
        (antiperiodic, periodic),
        (periodic, periodic),
    ];
    let mut negative = Vec::new();
    let mut products = [Complex64::new(1.0, 0.0); 4];
    for (t, (row_angle, col_angle)) in terms.iter().enumerate() {
        for k in 1..=p {
            for l in 1..=q {
                let bracket = chch - sha * col_angle(l, q).cos() - shb * row_angle(k, p).cos();
                if bracket < 0.0 {
                    negative.push((k, l, bracket, t));
                }
                products[t] *= Complex64::new(bracket, 0.0).sqrt();
            }
        }
    }
    let total = (products[0] + products[1] + products[2] - products[3] * sigma)
        * 2f64.powi((p * q) as i32 - 1);
    if total.re <= 0.0 || total.im.abs() > tolerances::PIPELINE_REL * total.norm() {
        let detail = negative
            .first()
            .map(|(k, l, v, _)| format!("; first negative bracket at (k, l) = ({k}, {l}) with value {v}"))
            .unwrap_or_default();
        return Err(Error::NumericDomain(format!(
            "closed form is not real-positive: {total}{detail}"
        )));
    }
    Ok(IsingClosedForm {
        z: total.re,
        sigma,
        negative_brackets: negative,
    })
}

/// The two-state torus partition function from the four-product formula.
pub fn ising_closed_form(p: usize, q: usize, a: f64, b: f64) -> Result<f64> {
    Ok(ising_closed_form_with_sign(p, q, a, b, criticality_sign(a, b))?.z)
}

pub fn closed_form_partition(model: &LatticeModel) -> Result<PartitionResult> {
    if model.n != 2 {
        return Err(Error::InvalidInput(format!(
            "the closed form needs n = 2, got n = {}",
            model.n
        )));
    }
    let start = Instant::now();
    let z = ising_closed_form(model.p, model.q, model.a, model.b)?;
    Ok(PartitionResult {
        z: Complex64::new(z, 0.0),
        method: Method::ClosedForm,
        terms: 4 * (model.p * model.q) as u128,
        wall_time: start.elapsed(),
    })
}
