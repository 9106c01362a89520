use crate::error::{Error, Result};
use crate::gca::signature::{AlgebraSignature, PhaseMatrix};
use crate::phase_arith::PhaseExponent;

/// `phase · g_1^{e_1} ⋯ g_{2p}^{e_{2p}}` in the fixed generator order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GammaMonomial {
    pub exponents: Vec<u32>,
    pub phase: PhaseExponent,
}

impl GammaMonomial {
    pub fn identity(sig: &AlgebraSignature) -> Self {
        Self {
            exponents: vec![0; sig.num_generators()],
            phase: PhaseExponent::one(sig.n).expect("signature order is valid"),
        }
    }

    /// The single generator `g_i`.
    pub fn generator(sig: &AlgebraSignature, i: usize) -> Self {
        let mut m = Self::identity(sig);
        m.exponents[i] = 1;
        m
    }

    /// The normal form of an ordered product of generators.
    pub fn from_word(sig: &AlgebraSignature, word: &[usize]) -> Result<Self> {
        let mut m = Self::identity(sig);
        for &g in word {
            if g >= sig.num_generators() {
                return Err(Error::InvalidInput(format!("generator index {g} out of range")));
            }
            m = monomial_mul(sig, &m, &Self::generator(sig, g));
        }
        Ok(m)
    }

    pub fn with_phase(mut self, phase: PhaseExponent) -> Self {
        self.phase = self.phase * phase;
        self
    }

    pub fn is_scalar(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    pub fn pow(&self, sig: &AlgebraSignature, k: u32) -> Self {
        (0..k).fold(Self::identity(sig), |acc, _| monomial_mul(sig, &acc, self))
    }

    /// The inverse, `m · m⁻¹ = 1`.
    pub fn inverse(&self, sig: &AlgebraSignature) -> Self {
        let n = sig.n;
        let bare = Self {
            exponents: self.exponents.clone(),
            phase: PhaseExponent::one(n).expect("valid order"),
        };
        // m^(n-1) = m^{-1} for the bare word since m^n is a scalar phase.
        let up = bare.pow(sig, n - 1);
        let full = monomial_mul(sig, &bare, &up);
        debug_assert!(full.is_scalar());
        up.with_phase(full.phase.inv()).with_phase(self.phase.inv())
    }

    /// The representation matrix in generalized permutation form.
    pub fn to_phase_matrix(&self, sig: &AlgebraSignature) -> PhaseMatrix {
        let mut m = PhaseMatrix::identity(sig.dim());
        for (i, &e) in self.exponents.iter().enumerate() {
            for _ in 0..e {
                m = m.mul(sig.generator(i));
            }
        }
        m.scale(self.phase.to_complex())
    }
}

/// Normal form of `m1 · m2`.
///
/// Exponents add mod `n`; moving `g_j^{b}` of `m2` left past `g_i^{a}` of
/// `m1` for every `i > j` contributes `ω^{c_ij · a · b}`.
pub fn monomial_mul(sig: &AlgebraSignature, m1: &GammaMonomial, m2: &GammaMonomial) -> GammaMonomial {
    let n = sig.n;
    let g = sig.num_generators();
    let mut twist: u64 = 0;
    for j in 0..g {
        let b = m2.exponents[j] as u64;
        if b == 0 {
            continue;
        }
        for i in (j + 1)..g {
            let a = m1.exponents[i] as u64;
            if a != 0 {
                twist += sig.commutation_phase(i, j) as u64 * a * b;
            }
        }
    }
    let exponents = m1
        .exponents
        .iter()
        .zip(&m2.exponents)
        .map(|(a, b)| (a + b) % n)
        .collect();
    let reorder = PhaseExponent::omega_pow(n, (twist % n as u64) as i64).expect("valid order");
    GammaMonomial {
        exponents,
        phase: m1.phase * m2.phase * reorder,
    }
}
