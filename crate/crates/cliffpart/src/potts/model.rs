use std::f64::consts::PI;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::guards::{ensure, Guards};

/// The Z_n vector Potts model on a `p × q` torus with dimensionless
/// couplings `a` (along rows, between neighbouring columns) and `b` (along
/// columns, between neighbouring rows).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LatticeModel {
    pub n: u32,
    pub p: usize,
    pub q: usize,
    pub a: f64,
    pub b: f64,
}

impl LatticeModel {
    pub fn new(n: u32, p: usize, q: usize, a: f64, b: f64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidOrder { n });
        }
        if p == 0 || q == 0 {
            return Err(Error::InvalidInput(format!("lattice {p}x{q} must be at least 1x1")));
        }
        if !(a.is_finite() && b.is_finite()) {
            return Err(Error::NumericDomain(format!("couplings a = {a}, b = {b} must be finite")));
        }
        Ok(Self { n, p, q, a, b })
    }
}

/// Spin exponents `s_{i,k}` in `[0, n)`, row-major over the `p × q` torus;
/// the spin itself is `ω^{s}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpinConfiguration {
    pub p: usize,
    pub q: usize,
    pub spins: Vec<u32>,
}

impl SpinConfiguration {
    pub fn new(p: usize, q: usize, spins: Vec<u32>) -> Result<Self> {
        if spins.len() != p * q {
            return Err(Error::InvalidInput(format!(
                "expected {} spins for a {p}x{q} lattice, got {}",
                p * q,
                spins.len()
            )));
        }
        Ok(Self { p, q, spins })
    }

    pub fn uniform(p: usize, q: usize, value: u32) -> Self {
        Self {
            p,
            q,
            spins: vec![value; p * q],
        }
    }

    pub fn get(&self, i: usize, k: usize) -> u32 {
        self.spins[i * self.q + k]
    }
}

fn bond_table(n: u32) -> Vec<f64> {
    (0..n).map(|d| 2.0 * (2.0 * PI * d as f64 / n as f64).cos()).collect()
}

fn weight_exponent(model: &LatticeModel, cos2: &[f64], spins: &[u32]) -> f64 {
    let (n, p, q) = (model.n, model.p, model.q);
    let diff = |x: u32, y: u32| ((y + n - x) % n) as usize;
    let mut horizontal = 0.0;
    let mut vertical = 0.0;
    for i in 0..p {
        for k in 0..q {
            let s = spins[i * q + k];
            horizontal += cos2[diff(s, spins[i * q + (k + 1) % q])];
            vertical += cos2[diff(s, spins[((i + 1) % p) * q + k])];
        }
    }
    model.a * horizontal + model.b * vertical
}

/// `−E/kT`: every bond contributes `s^{−1}s′ + s′^{−1}s = 2 cos(2πΔ/n)`,
/// weighted by `a` along rows and `b` along columns, with wraparound.
pub fn energy(model: &LatticeModel, config: &SpinConfiguration) -> Result<f64> {
    if config.p != model.p || config.q != model.q {
        return Err(Error::InvalidInput(format!(
            "configuration is {}x{} but the model is {}x{}",
            config.p, config.q, model.p, model.q
        )));
    }
    if let Some(&s) = config.spins.iter().find(|&&s| s >= model.n) {
        return Err(Error::InvalidInput(format!("spin exponent {s} not below n = {}", model.n)));
    }
    Ok(weight_exponent(model, &bond_table(model.n), &config.spins))
}

/// Which route produced a partition value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Brute,
    Transfer,
    Decomposed,
    Multisum,
    ClosedForm,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Brute,
        Method::Transfer,
        Method::Decomposed,
        Method::Multisum,
        Method::ClosedForm,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::Transfer => "transfer",
            Method::Decomposed => "decomposed",
            Method::Multisum => "multisum",
            Method::ClosedForm => "closed-form",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|m| m.as_str() == s)
    }
}

/// A partition value with its provenance.
#[derive(Debug, Clone, PartialEq)]
pub struct PartitionResult {
    pub z: Complex64,
    pub method: Method,
    /// Configurations, index tuples or matrix products evaluated.
    pub terms: u128,
    pub wall_time: Duration,
}

/// Sums `exp(−E/kT)` over all `n^{pq}` configurations in parallel.
pub fn brute_force_partition(model: &LatticeModel, guards: &Guards) -> Result<PartitionResult> {
    let start = Instant::now();
    let sites = (model.p * model.q) as u64;
    let total = ensure("brute-force configurations n^(pq)", model.n, sites, guards.brute_states)?;
    let cos2 = bond_table(model.n);
    let n = model.n as u64;
    let z: f64 = (0..total as u64)
        .into_par_iter()
        .fold(
            || (vec![0u32; sites as usize], 0.0f64),
            |(mut spins, acc), mut code| {
                for s in spins.iter_mut().rev() {
                    *s = (code % n) as u32;
                    code /= n;
                }
                let w = weight_exponent(model, &cos2, &spins).exp();
                (spins, acc + w)
            },
        )
        .map(|(_, acc)| acc)
        .sum();
    Ok(PartitionResult {
        z: Complex64::new(z, 0.0),
        method: Method::Brute,
        terms: total,
        wall_time: start.elapsed(),
    })
}
