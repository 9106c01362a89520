//! Small dense complex matrix helpers.

use ndarray::Array2;
use num_complex::Complex64;

/// A square complex matrix; the faithful representation of the algebra.
pub type DenseMatrix = Array2<Complex64>;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn identity(dim: usize) -> DenseMatrix {
    Array2::from_shape_fn((dim, dim), |(i, j)| if i == j { c(1.0, 0.0) } else { c(0.0, 0.0) })
}

pub fn zeros(dim: usize) -> DenseMatrix {
    Array2::zeros((dim, dim))
}

pub fn kron(a: &DenseMatrix, b: &DenseMatrix) -> DenseMatrix {
    let (ar, ac) = a.dim();
    let (br, bc) = b.dim();
    Array2::from_shape_fn((ar * br, ac * bc), |(i, j)| a[[i / br, j / bc]] * b[[i % br, j % bc]])
}

pub fn kron_all(factors: &[DenseMatrix]) -> DenseMatrix {
    factors
        .iter()
        .skip(1)
        .fold(factors[0].clone(), |acc, f| kron(&acc, f))
}

/// `m^k` by repeated squaring; `k = 0` gives the identity.
pub fn matpow(m: &DenseMatrix, mut k: u64) -> DenseMatrix {
    let mut result = identity(m.nrows());
    let mut base = m.clone();
    while k > 0 {
        if k & 1 == 1 {
            result = result.dot(&base);
        }
        k >>= 1;
        if k > 0 {
            base = base.dot(&base);
        }
    }
    result
}

pub fn trace(m: &DenseMatrix) -> Complex64 {
    m.diag().iter().sum()
}

/// Trace divided by the dimension, so the identity has trace one.
pub fn normalized_trace(m: &DenseMatrix) -> Complex64 {
    trace(m) / m.nrows() as f64
}

pub fn max_abs(m: &DenseMatrix) -> f64 {
    m.iter().fold(0.0, |acc, z| acc.max(z.norm()))
}

/// Largest entrywise `|a − b|`.
pub fn max_abs_diff(a: &DenseMatrix, b: &DenseMatrix) -> f64 {
    a.iter()
        .zip(b.iter())
        .fold(0.0, |acc, (x, y)| acc.max((x - y).norm()))
}

/// Largest entrywise difference relative to the largest entry of `reference`.
pub fn max_rel_diff(a: &DenseMatrix, reference: &DenseMatrix) -> f64 {
    let scale = max_abs(reference).max(f64::MIN_POSITIVE);
    max_abs_diff(a, reference) / scale
}

pub fn commutator(a: &DenseMatrix, b: &DenseMatrix) -> DenseMatrix {
    a.dot(b) - b.dot(a)
}

/// Inverse of a permutation-like (monomial) matrix, i.e. one nonzero unit
/// entry per row and column: the conjugate transpose.
pub fn unitary_inverse(m: &DenseMatrix) -> DenseMatrix {
    m.t().mapv(|z| z.conj())
}

/// Relative difference of two complex numbers against the larger modulus.
pub fn rel_diff(a: Complex64, b: Complex64) -> f64 {
    let scale = a.norm().max(b.norm()).max(f64::MIN_POSITIVE);
    (a - b).norm() / scale
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kron_dimensions_and_entries() {
        let a = Array2::from_shape_vec((2, 2), vec![c(1., 0.), c(2., 0.), c(3., 0.), c(4., 0.)]).unwrap();
        let k = kron(&a, &identity(3));
        assert_eq!(k.dim(), (6, 6));
        assert_eq!(k[[4, 1]], c(3., 0.));
        assert_eq!(k[[4, 2]], c(0., 0.));
    }

    #[test]
    fn matpow_matches_repeated_product() {
        let a = Array2::from_shape_fn((3, 3), |(i, j)| c(i as f64 - j as f64 * 0.5, 0.1 * (i + j) as f64));
        let mut expect = identity(3);
        for _ in 0..5 {
            expect = expect.dot(&a);
        }
        assert!(max_rel_diff(&matpow(&a, 5), &expect) < 1e-14);
        assert_eq!(matpow(&a, 0), identity(3));
    }
}
