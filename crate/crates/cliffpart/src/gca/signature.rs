use std::f64::consts::PI;

use ndarray::Array2;
use num_complex::Complex64;

use crate::dense::DenseMatrix;
use crate::error::{Error, Result};
use crate::guards::{ensure, Guards};
use crate::phase_arith::{omega, xi};
use crate::tolerances;

/// The three generalized Pauli matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pauli {
    /// The cyclic shift, `(σ1)_{i,i+1} = 1`.
    Shift,
    /// The shift dressed with phases.
    Mixed,
    /// The clock, `diag(ω^i)`.
    Clock,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    pub fn of(n: u32) -> Self {
        if n % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }
}

/// A matrix with exactly one nonzero entry per row: `m[i][cols[i]] = vals[i]`.
///
/// Every generator and every monomial of the algebra has this shape in the
/// tensor representation, so products cost `O(dim)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseMatrix {
    pub cols: Vec<usize>,
    pub vals: Vec<Complex64>,
}

impl PhaseMatrix {
    pub fn identity(dim: usize) -> Self {
        Self {
            cols: (0..dim).collect(),
            vals: vec![Complex64::new(1.0, 0.0); dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.cols.len()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let cols = self.cols.iter().map(|&k| other.cols[k]).collect();
        let vals = self
            .cols
            .iter()
            .zip(&self.vals)
            .map(|(&k, v)| v * other.vals[k])
            .collect();
        Self { cols, vals }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::identity(self.dim()), |acc, _| acc.mul(self))
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self {
            cols: self.cols.clone(),
            vals: self.vals.iter().map(|v| v * s).collect(),
        }
    }

    pub fn kron(&self, other: &Self) -> Self {
        let d = other.dim();
        let mut cols = Vec::with_capacity(self.dim() * d);
        let mut vals = Vec::with_capacity(self.dim() * d);
        for (i, &ci) in self.cols.iter().enumerate() {
            for (j, &cj) in other.cols.iter().enumerate() {
                cols.push(ci * d + cj);
                vals.push(self.vals[i] * other.vals[j]);
            }
        }
        Self { cols, vals }
    }

    pub fn to_dense(&self) -> DenseMatrix {
        let mut m = Array2::zeros((self.dim(), self.dim()));
        for (i, (&j, &v)) in self.cols.iter().zip(&self.vals).enumerate() {
            m[[i, j]] = v;
        }
        m
    }

    /// Normalized trace.
    pub fn normalized_trace(&self) -> Complex64 {
        let t: Complex64 = self
            .cols
            .iter()
            .enumerate()
            .filter(|(i, &j)| *i == j)
            .map(|(i, _)| self.vals[i])
            .sum();
        t / self.dim() as f64
    }

    /// Largest entrywise difference, treating differing supports as full misses.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.dim() {
            if self.cols[i] == other.cols[i] {
                worst = worst.max((self.vals[i] - other.vals[i]).norm());
            } else {
                worst = worst.max(self.vals[i].norm()).max(other.vals[i].norm());
            }
        }
        worst
    }
}

fn pauli_phase(n: u32, which: Pauli) -> Result<PhaseMatrix> {
    let w = omega(n)?;
    let x = xi(n)?;
    let nn = n as usize;
    let shift_cols: Vec<usize> = (0..nn).map(|i| (i + 1) % nn).collect();
    Ok(match which {
        Pauli::Shift => PhaseMatrix {
            cols: shift_cols,
            vals: vec![Complex64::new(1.0, 0.0); nn],
        },
        Pauli::Clock => PhaseMatrix {
            cols: (0..nn).collect(),
            vals: (0..nn).map(|i| w.powu(i as u32)).collect(),
        },
        Pauli::Mixed => {
            let vals = match Parity::of(n) {
                Parity::Odd => (0..nn).map(|i| w.powu(i as u32 + 1)).collect(),
                Parity::Even => (0..nn).map(|i| x.powu(2 * i as u32 + 1)).collect(),
            };
            PhaseMatrix {
                cols: shift_cols,
                vals,
            }
        }
    })
}

/// The generalized Pauli matrix of order `n`.
///
/// `σ1` is the cyclic shift and `σ3 = diag(ω^i)`. For odd `n`,
/// `σ2 = σ1 σ3` has entries `ω^(i+1)` above the diagonal; for even `n` it has
/// entries `ξ^(2i+1)`. Both choices give `σ2^n = 1` and keep the
/// clock/shift identities exact.
pub fn pauli(n: u32, which: Pauli) -> Result<DenseMatrix> {
    Ok(pauli_phase(n, which)?.to_dense())
}

/// The order `n`, the number `p` of generator pairs, the generator
/// matrices and the commutation table read off from them.
///
/// Generators are indexed `0..2p` in the order `γ_1, …, γ_p, γ̄_1, …, γ̄_p`.
#[derive(Debug, Clone)]
pub struct AlgebraSignature {
    pub n: u32,
    pub p: usize,
    pub parity: Parity,
    gens: Vec<PhaseMatrix>,
    table: Vec<Vec<u32>>,
}

impl AlgebraSignature {
    /// Builds the tensor representation and derives the commutation table.
    pub fn new(n: u32, p: usize, guards: &Guards) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidOrder { n });
        }
        if p == 0 {
            return Err(Error::InvalidInput("need at least one generator pair".into()));
        }
        ensure("representation dimension n^p", n, p as u64, guards.dense_dim)?;
        let s1 = pauli_phase(n, Pauli::Shift)?;
        let s2 = pauli_phase(n, Pauli::Mixed)?;
        let s3 = pauli_phase(n, Pauli::Clock)?;
        let id = PhaseMatrix::identity(n as usize);
        let site_product = |k: usize, head: &PhaseMatrix| {
            (0..p)
                .map(|site| match site.cmp(&k) {
                    std::cmp::Ordering::Less => s1.clone(),
                    std::cmp::Ordering::Equal => head.clone(),
                    std::cmp::Ordering::Greater => id.clone(),
                })
                .reduce(|acc, f| acc.kron(&f))
                .expect("p >= 1")
        };
        let mut gens: Vec<PhaseMatrix> = (0..p).map(|k| site_product(k, &s3)).collect();
        gens.extend((0..p).map(|k| site_product(k, &s2)));
        let table = derive_table(n, &gens)?;
        Ok(Self {
            n,
            p,
            parity: Parity::of(n),
            gens,
            table,
        })
    }

    pub fn num_generators(&self) -> usize {
        2 * self.p
    }

    pub fn dim(&self) -> usize {
        self.gens[0].dim()
    }

    /// Index of `γ_k` for `k` in `1..=p`.
    pub fn gamma(&self, k: usize) -> usize {
        k - 1
    }

    /// Index of `γ̄_k` for `k` in `1..=p`.
    pub fn gamma_bar(&self, k: usize) -> usize {
        self.p + k - 1
    }

    /// `c_{ij}` with `g_i g_j = ω^{c_{ij}} g_j g_i`.
    pub fn commutation_phase(&self, i: usize, j: usize) -> u32 {
        self.table[i][j]
    }

    pub fn generator(&self, i: usize) -> &PhaseMatrix {
        &self.gens[i]
    }

    /// Human label: `g1..gp` for `γ`, `gb1..gbp` for `γ̄`.
    pub fn label(&self, i: usize) -> String {
        if i < self.p {
            format!("g{}", i + 1)
        } else {
            format!("gb{}", i - self.p + 1)
        }
    }

    pub fn parse_label(&self, label: &str) -> Result<usize> {
        let bad = || Error::InvalidInput(format!("unknown generator label {label:?}"));
        let (offset, digits) = if let Some(rest) = label.strip_prefix("gb") {
            (self.p, rest)
        } else if let Some(rest) = label.strip_prefix('g') {
            (0, rest)
        } else {
            return Err(bad());
        };
        let k: usize = digits.parse().map_err(|_| bad())?;
        if k == 0 || k > self.p {
            return Err(bad());
        }
        Ok(offset + k - 1)
    }

    /// Test hook: a copy whose table has `c_{ij}` shifted by one, so the
    /// relation checks have something to catch.
    #[doc(hidden)]
    pub fn with_injected_fault(&self, i: usize, j: usize) -> Self {
        let mut out = self.clone();
        let n = self.n;
        out.table[i][j] = (out.table[i][j] + 1) % n;
        out.table[j][i] = (n - out.table[i][j]) % n;
        out
    }
}

fn derive_table(n: u32, gens: &[PhaseMatrix]) -> Result<Vec<Vec<u32>>> {
    let g = gens.len();
    let mut table = vec![vec![0u32; g]; g];
    for i in 0..g {
        for j in 0..g {
            if i == j {
                continue;
            }
            table[i][j] = fit_phase(n, &gens[i], &gens[j])
                .ok_or(Error::RepresentationInconsistency { i, j })?;
        }
    }
    Ok(table)
}

/// The `c` with `a b = ω^c b a`, checked on every entry.
fn fit_phase(n: u32, a: &PhaseMatrix, b: &PhaseMatrix) -> Option<u32> {
    let ab = a.mul(b);
    let ba = b.mul(a);
    let ratio = ab.vals[0] / ba.vals[0];
    let arg = ratio.arg().rem_euclid(2.0 * PI);
    let c = ((arg * n as f64 / (2.0 * PI)).round() as u32) % n;
    let w = Complex64::from_polar(1.0, 2.0 * PI * c as f64 / n as f64);
    (ab.max_abs_diff(&ba.scale(w)) < tolerances::PHASE_FIT).then_some(c)
}

/// The generators `[γ_1, …, γ_p, γ̄_1, …, γ̄_p]` as dense matrices.
pub fn gamma_rep(sig: &AlgebraSignature) -> Vec<DenseMatrix> {
    sig.gens.iter().map(PhaseMatrix::to_dense).collect()
}

/// The full `2p × 2p` table of commutation exponents.
pub fn commutation_table(sig: &AlgebraSignature) -> Vec<Vec<u32>> {
    sig.table.clone()
}

/// A relation that the matrices and the stored table disagree on.
#[derive(Debug, Clone, PartialEq)]
pub struct RelationFailure {
    pub i: usize,
    pub j: usize,
    pub deviation: f64,
}

/// Checks `G_i^n = 1` and `G_i G_j = ω^{c_ij} G_j G_i` for every pair
/// against the stored table, returning the worst deviation per failing pair.
pub fn check_relations(sig: &AlgebraSignature, tol: f64) -> (f64, Vec<RelationFailure>) {
    let n = sig.n;
    let id = PhaseMatrix::identity(sig.dim());
    let mut worst: f64 = 0.0;
    let mut failures = Vec::new();
    for i in 0..sig.num_generators() {
        let d = sig.gens[i].pow(n).max_abs_diff(&id);
        worst = worst.max(d);
        if d >= tol {
            failures.push(RelationFailure { i, j: i, deviation: d });
        }
        for j in (i + 1)..sig.num_generators() {
            let w = Complex64::from_polar(1.0, 2.0 * PI * sig.table[i][j] as f64 / n as f64);
            let lhs = sig.gens[i].mul(&sig.gens[j]);
            let rhs = sig.gens[j].mul(&sig.gens[i]).scale(w);
            let d = lhs.max_abs_diff(&rhs);
            worst = worst.max(d);
            if d >= tol {
                failures.push(RelationFailure { i, j, deviation: d });
            }
        }
    }
    (worst, failures)
}
