use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::dense::{zeros, DenseMatrix};
use crate::gca::monomial::{monomial_mul, GammaMonomial};
use crate::gca::signature::AlgebraSignature;
use crate::gca::trace::trace_normal_form;
use crate::phase_arith::PhaseExponent;
use crate::tolerances;

/// A finite sum of normal-ordered monomials with complex coefficients.
///
/// Monomial phases are folded into the coefficients, so the map key is the
/// bare exponent vector.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct AlgebraElement {
    terms: BTreeMap<Vec<u32>, Complex64>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn scalar(sig: &AlgebraSignature, value: Complex64) -> Self {
        Self::from_monomial(&GammaMonomial::identity(sig), value)
    }

    pub fn identity(sig: &AlgebraSignature) -> Self {
        Self::scalar(sig, Complex64::new(1.0, 0.0))
    }

    /// `coeff · m`.
    pub fn from_monomial(m: &GammaMonomial, coeff: Complex64) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(m.exponents.clone(), coeff * m.phase.to_complex());
        Self { terms }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Complex64)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> Complex64 {
        self.terms.get(exponents).copied().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: &GammaMonomial, coeff: Complex64) {
        *self.terms.entry(m.exponents.clone()).or_default() += coeff * m.phase.to_complex();
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            *out.terms.entry(k.clone()).or_default() += v;
        }
        out.pruned()
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * s)).collect(),
        }
        .pruned()
    }

    pub fn mul(&self, sig: &AlgebraSignature, other: &Self) -> Self {
        let one = PhaseExponent::one(sig.n).expect("valid order");
        let mut out = Self::zero();
        for (ka, va) in &self.terms {
            let ma = GammaMonomial {
                exponents: ka.clone(),
                phase: one,
            };
            for (kb, vb) in &other.terms {
                let mb = GammaMonomial {
                    exponents: kb.clone(),
                    phase: one,
                };
                out.add_term(&monomial_mul(sig, &ma, &mb), va * vb);
            }
        }
        out.pruned()
    }

    pub fn pow(&self, sig: &AlgebraSignature, k: u32) -> Self {
        (0..k).fold(Self::identity(sig), |acc, _| acc.mul(sig, self))
    }

    /// Drops coefficients below the relative pruning threshold.
    pub fn pruned(mut self) -> Self {
        let max = self.terms.values().fold(0.0f64, |a, v| a.max(v.norm()));
        let cut = tolerances::PRUNE_REL * max;
        self.terms.retain(|_, v| v.norm() > cut && v.norm() > 0.0);
        self
    }

    /// Normalized trace, summed term by term from exact monomial traces.
    pub fn normalized_trace(&self, sig: &AlgebraSignature) -> Complex64 {
        let one = PhaseExponent::one(sig.n).expect("valid order");
        self.terms
            .iter()
            .map(|(k, v)| {
                let m = GammaMonomial {
                    exponents: k.clone(),
                    phase: one,
                };
                v * trace_normal_form(sig, &m).to_complex()
            })
            .sum()
    }

    pub fn to_matrix(&self, sig: &AlgebraSignature) -> DenseMatrix {
        let one = PhaseExponent::one(sig.n).expect("valid order");
        let mut out = zeros(sig.dim());
        for (k, v) in &self.terms {
            let pm = GammaMonomial {
                exponents: k.clone(),
                phase: one,
            }
            .to_phase_matrix(sig);
            for (i, (&j, &x)) in pm.cols.iter().zip(&pm.vals).enumerate() {
                out[[i, j]] += v * x;
            }
        }
        out
    }
}

/// The representation matrix of a monomial.
pub fn monomial_matrix(sig: &AlgebraSignature, m: &GammaMonomial) -> DenseMatrix {
    m.to_phase_matrix(sig).to_dense()
}

/// The representation matrix of an element.
pub fn to_matrix(sig: &AlgebraSignature, x: &AlgebraElement) -> DenseMatrix {
    x.to_matrix(sig)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dense::{identity, max_rel_diff};
    use crate::guards::Guards;

    #[test]
    fn identity_maps_to_identity() {
        let sig = AlgebraSignature::new(3, 2, &Guards::default()).unwrap();
        assert_eq!(AlgebraElement::identity(&sig).to_matrix(&sig), identity(9));
    }

    #[test]
    fn product_matches_matrices() {
        let sig = AlgebraSignature::new(3, 2, &Guards::default()).unwrap();
        let mut x = AlgebraElement::zero();
        x.add_term(&GammaMonomial::from_word(&sig, &[0, 2]).unwrap(), Complex64::new(0.5, -1.0));
        x.add_term(&GammaMonomial::from_word(&sig, &[3]).unwrap(), Complex64::new(2.0, 0.0));
        let mut y = AlgebraElement::scalar(&sig, Complex64::new(0.0, 1.0));
        y.add_term(&GammaMonomial::from_word(&sig, &[1, 1, 3]).unwrap(), Complex64::new(-0.7, 0.2));
        let lhs = x.mul(&sig, &y).to_matrix(&sig);
        let rhs = x.to_matrix(&sig).dot(&y.to_matrix(&sig));
        assert!(max_rel_diff(&lhs, &rhs) < 1e-12);
        let sum = x.add(&y).to_matrix(&sig);
        assert!(max_rel_diff(&sum, &(x.to_matrix(&sig) + y.to_matrix(&sig))) < 1e-12);
    }

    #[test]
    fn cancellation_is_pruned() {
        let sig = AlgebraSignature::new(2, 1, &Guards::default()).unwrap();
        let x = AlgebraElement::from_monomial(&GammaMonomial::generator(&sig, 0), Complex64::new(1.0, 0.0));
        let y = x.scale(Complex64::new(-1.0, 0.0));
        assert!(x.add(&y).is_empty());
    }
}
