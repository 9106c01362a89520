//! Roots of unity, exact phases and the generalized hyperbolic functions.
//!
//! Throughout the crate `ω = exp(2πi/n)` and `ξ = exp(πi/n)`, so `ξ² = ω`.
//! A [`PhaseExponent`] stores a power of `ω` for odd `n` and a power of `ξ`
//! for even `n`, which keeps every phase that the even-order algebra needs
//! inside one cyclic group.

use std::f64::consts::PI;
use std::fmt;
use std::ops::Mul;

use num_complex::Complex64;

use crate::error::{Error, Result};

fn check_order(n: u32) -> Result<()> {
    if n < 2 {
        Err(Error::InvalidOrder { n })
    } else {
        Ok(())
    }
}

/// The primitive n-th root of unity `exp(2πi/n)`.
pub fn omega(n: u32) -> Result<Complex64> {
    check_order(n)?;
    Ok(Complex64::from_polar(1.0, 2.0 * PI / n as f64))
}

/// The primitive 2n-th root of unity `exp(πi/n)`.
pub fn xi(n: u32) -> Result<Complex64> {
    check_order(n)?;
    Ok(Complex64::from_polar(1.0, PI / n as f64))
}

/// Size of the phase group used for order `n`: `n` when odd, `2n` when even.
pub fn phase_modulus(n: u32) -> u32 {
    if n % 2 == 1 {
        n
    } else {
        2 * n
    }
}

/// An exact element of the cyclic phase group of order `n`, or exact zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PhaseExponent {
    n: u32,
    is_zero: bool,
    exponent: u32,
}

impl PhaseExponent {
    /// Builds a phase from a raw exponent in units of the base phase
    /// (`ω` for odd `n`, `ξ` for even `n`).
    pub fn new(n: u32, exponent: i64) -> Result<Self> {
        check_order(n)?;
        let l = phase_modulus(n) as i64;
        Ok(Self {
            n,
            is_zero: false,
            exponent: exponent.rem_euclid(l) as u32,
        })
    }

    pub fn one(n: u32) -> Result<Self> {
        Self::new(n, 0)
    }

    pub fn zero(n: u32) -> Result<Self> {
        check_order(n)?;
        Ok(Self {
            n,
            is_zero: true,
            exponent: 0,
        })
    }

    /// `ω^k`.
    pub fn omega_pow(n: u32, k: i64) -> Result<Self> {
        let scale = if n % 2 == 1 { 1 } else { 2 };
        Self::new(n, scale * k.rem_euclid(n.max(1) as i64))
    }

    /// `ξ^k`; only defined for even `n`.
    pub fn xi_pow(n: u32, k: i64) -> Result<Self> {
        if n % 2 == 1 {
            return Err(Error::InvalidInput(format!(
                "xi powers are not tracked for odd n = {n}"
            )));
        }
        Self::new(n, k)
    }

    pub fn order(&self) -> u32 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.is_zero
    }

    /// Exponent of the base phase, reduced to `[0, L)`.
    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn modulus(&self) -> u32 {
        phase_modulus(self.n)
    }

    /// The exponent `k` with `self = ω^k`, if the phase is a power of `ω`.
    pub fn as_omega_power(&self) -> Option<u32> {
        if self.is_zero {
            None
        } else if self.n % 2 == 1 {
            Some(self.exponent)
        } else if self.exponent.is_multiple_of(2) {
            Some(self.exponent / 2)
        } else {
            None
        }
    }

    pub fn is_one(&self) -> bool {
        !self.is_zero && self.exponent == 0
    }

    /// Group product; fails when the orders differ.
    pub fn checked_mul(self, other: Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::IncompatibleOrder {
                left: self.n,
                right: other.n,
            });
        }
        if self.is_zero || other.is_zero {
            return Self::zero(self.n);
        }
        Self::new(self.n, self.exponent as i64 + other.exponent as i64)
    }

    /// Multiplicative inverse; zero stays zero.
    pub fn inv(self) -> Self {
        if self.is_zero {
            return self;
        }
        let l = self.modulus();
        Self {
            exponent: (l - self.exponent) % l,
            ..self
        }
    }

    pub fn pow(self, k: i64) -> Self {
        if self.is_zero {
            return self;
        }
        let l = self.modulus() as i64;
        Self {
            exponent: ((self.exponent as i64 * k.rem_euclid(l)) % l) as u32,
            ..self
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        if self.is_zero {
            Complex64::new(0.0, 0.0)
        } else {
            Complex64::from_polar(1.0, 2.0 * PI * self.exponent as f64 / self.modulus() as f64)
        }
    }
}

/// The group law of the phase group.
pub fn phase_mul(p1: PhaseExponent, p2: PhaseExponent) -> Result<PhaseExponent> {
    p1.checked_mul(p2)
}

impl Mul for PhaseExponent {
    type Output = PhaseExponent;

    /// Panics when the orders differ; use [`phase_mul`] for a checked product.
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(rhs)
            .expect("multiplied phases of different order")
    }
}

impl fmt::Debug for PhaseExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PhaseExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero {
            write!(f, "0")
        } else if let Some(k) = self.as_omega_power() {
            write!(f, "w^{k}")
        } else {
            write!(f, "xi^{}", self.exponent)
        }
    }
}

/// The scale factor `ρ(n)` that turns the boundary and bond monomials into
/// elements whose n-th power is exactly one.
///
/// Odd `n` gives `ω^((n²−1)/2)`; even `n` gives `ξ^(n²−1)`.
pub fn rho(n: u32) -> Result<PhaseExponent> {
    check_order(n)?;
    let n2 = n as i64 * n as i64;
    if n % 2 == 1 {
        PhaseExponent::omega_pow(n, (n2 - 1) / 2)
    } else {
        PhaseExponent::xi_pow(n, n2 - 1)
    }
}

/// The values `f_0(x), …, f_{n−1}(x)` of the generalized hyperbolic functions.
#[derive(Debug, Clone, PartialEq)]
pub struct GenHyperbolicTable {
    pub n: u32,
    pub x: Complex64,
    pub values: Vec<Complex64>,
}

impl GenHyperbolicTable {
    pub fn get(&self, i: usize) -> Complex64 {
        self.values[i]
    }

    pub fn sum(&self) -> Complex64 {
        self.values.iter().sum()
    }
}

/// `f_i(x) = (1/n) Σ_k ω^(−ki) exp(ω^k x)`, the n-section of the
/// exponential series, so that `exp(x u) = Σ_i f_i(x) u^i` whenever `u^n = 1`.
pub fn gen_hyperbolic(n: u32, x: Complex64) -> Result<GenHyperbolicTable> {
    check_order(n)?;
    if !(x.re.is_finite() && x.im.is_finite()) {
        return Err(Error::NumericDomain(format!(
            "generalized hyperbolic argument {x} is not finite"
        )));
    }
    let nn = n as usize;
    let roots: Vec<Complex64> = (0..nn)
        .map(|k| Complex64::from_polar(1.0, 2.0 * PI * k as f64 / n as f64))
        .collect();
    let exps: Vec<Complex64> = roots.iter().map(|w| (w * x).exp()).collect();
    let values = (0..nn)
        .map(|i| {
            let s: Complex64 = (0..nn).map(|k| roots[(nn - (k * i) % nn) % nn] * exps[k]).sum();
            s / n as f64
        })
        .collect();
    Ok(GenHyperbolicTable { n, x, values })
}
