//! `M^q` as one flat sum over the index tuple
//! `Π = (k, L_1..L_q, S_1..S_q, T_1..T_q, I_1..I_q)` of `m = 3pq + 1` digits
//! in `Z_n`, each term a known coefficient `G(Π)` times a generator
//! monomial whose trace is zero or a phase.

use std::collections::{BTreeSet, HashMap};
use std::time::Instant;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::dense::DenseMatrix;
use crate::error::Result;
use crate::gca::{monomial_mul, trace_normal_form, AlgebraElement, AlgebraSignature, GammaMonomial};
use crate::guards::{ensure, Guards};
use crate::phase_arith::{rho, PhaseExponent};
use crate::potts::gamma_forms::{
    bond_word, global_shift, reverse_bond_word, sector_tables, shift_prefactor, site_shift_word,
};
use crate::potts::model::{LatticeModel, Method, PartitionResult};
use crate::potts::transfer::circulant_weights;

/// Output of [`multisum_power`].
#[derive(Debug, Clone)]
pub struct MultisumResult {
    /// The assembled element `Σ G(Π) Ω̂(Π, j_1, j_2) / n²`.
    pub element: AlgebraElement,
    pub matrix: DenseMatrix,
    /// `n^p` times the normalized trace, summed from exact term traces.
    pub z: Complex64,
    /// Number of index tuples `Π`.
    pub tuples: u128,
    /// Every distinct nonzero term trace that occurred.
    pub trace_phases: BTreeSet<PhaseExponent>,
    /// Terms whose monomial had nonzero trace.
    pub nonzero_traces: u64,
}

impl MultisumResult {
    /// Whether every nonzero term trace is a power of `ω`.
    pub fn traces_are_roots_of_unity(&self) -> bool {
        self.trace_phases.iter().all(|t| t.as_omega_power().is_some())
    }
}

/// Powers `x^0 … x^{n−1}` of a bare word.
fn powers(sig: &AlgebraSignature, x: &GammaMonomial) -> Vec<GammaMonomial> {
    (0..sig.n).map(|e| x.pow(sig, e)).collect()
}

struct Tables {
    n: usize,
    p: usize,
    q: usize,
    boundary: Vec<GammaMonomial>,
    boundary_rev: Vec<GammaMonomial>,
    bonds: Vec<Vec<GammaMonomial>>,
    bonds_rev: Vec<Vec<GammaMonomial>>,
    sites: Vec<Vec<GammaMonomial>>,
    u_pow: Vec<GammaMonomial>,
    /// Coefficient factors per digit, phases included.
    f_boundary: Vec<Complex64>,
    f_boundary_rev: Vec<Complex64>,
    f_bond: Vec<Complex64>,
    f_bond_rev: Vec<Complex64>,
    lambda: Vec<Complex64>,
    omega: Vec<Complex64>,
}

/// Enumerates the multisum for `M^q`.
pub fn multisum_power(model: &LatticeModel, guards: &Guards) -> Result<MultisumResult> {
    let (n, p, q) = (model.n, model.p, model.q);
    let digits = 3 * p * q + 1;
    let tuples = ensure("multisum index tuples n^(3pq+1)", n, digits as u64, guards.multisum_terms)?;
    let sig = AlgebraSignature::new(n, p, guards)?;
    let r = rho(n)?;
    let [fbp, fbm, fzp, fzm] = sector_tables(n, model.b)?;
    let cx = shift_prefactor(n);
    let nn = n as usize;
    let ph = |e: PhaseExponent, l: usize| e.pow(l as i64).to_complex();
    let t = Tables {
        n: nn,
        p,
        q,
        boundary: powers(&sig, &bond_word(&sig, p, 1)),
        boundary_rev: powers(&sig, &reverse_bond_word(&sig, p, 1)),
        bonds: (1..p).map(|a| powers(&sig, &bond_word(&sig, a, a + 1))).collect(),
        bonds_rev: (1..p)
            .map(|a| powers(&sig, &reverse_bond_word(&sig, a, a + 1)))
            .collect(),
        sites: (1..=p).map(|k| powers(&sig, &site_shift_word(&sig, k))).collect(),
        u_pow: powers(&sig, &global_shift(&sig)),
        f_boundary: (0..nn).map(|l| fbp[l] * ph(r.inv(), l)).collect(),
        f_boundary_rev: (0..nn).map(|l| fbm[l] * ph(r, l)).collect(),
        f_bond: (0..nn).map(|s| fzp[s] * ph(r.inv(), s)).collect(),
        f_bond_rev: (0..nn).map(|s| fzm[s] * ph(r, s)).collect(),
        lambda: circulant_weights(n, model.a)
            .iter()
            .enumerate()
            .map(|(i, lam)| lam * ph(cx, i))
            .collect(),
        omega: (0..nn)
            .map(|e| PhaseExponent::omega_pow(n, e as i64).expect("valid order").to_complex())
            .collect(),
    };

    let per_k = tuples / nn as u128;
    let acc = (0..tuples as u64)
        .into_par_iter()
        .fold(Accumulator::default, |mut acc, code| {
            let k = (code as u128 / per_k) as usize;
            let rest = code as u128 % per_k;
            accumulate(&sig, &t, k, rest, &mut acc);
            acc
        })
        .reduce(Accumulator::default, Accumulator::merge);

    let mut element = AlgebraElement::zero();
    for (exps, coeff) in acc.terms {
        let m = GammaMonomial {
            exponents: exps,
            phase: PhaseExponent::one(n)?,
        };
        element.add_term(&m, coeff);
    }
    let element = element.pruned();
    let matrix = element.to_matrix(&sig);
    let dim = sig.dim() as f64;
    Ok(MultisumResult {
        element,
        matrix,
        z: acc.trace * dim,
        tuples,
        trace_phases: acc.phases,
        nonzero_traces: acc.nonzero,
    })
}

#[derive(Default)]
struct Accumulator {
    terms: HashMap<Vec<u32>, Complex64>,
    trace: Complex64,
    phases: BTreeSet<PhaseExponent>,
    nonzero: u64,
}

impl Accumulator {
    fn merge(mut self, other: Self) -> Self {
        for (k, v) in other.terms {
            *self.terms.entry(k).or_default() += v;
        }
        self.trace += other.trace;
        self.phases.extend(other.phases);
        self.nonzero += other.nonzero;
        self
    }
}

/// Adds `G(Π) Ω̂(Π, j_1, j_2) / n²` for all `j_1, j_2` at one tuple.
fn accumulate(sig: &AlgebraSignature, t: &Tables, k: usize, mut code: u128, acc: &mut Accumulator) {
    let n = t.n;
    let mut next = || {
        let d = (code % n as u128) as usize;
        code /= n as u128;
        d
    };
    let mut g = Complex64::new(1.0, 0.0);
    let mut word = GammaMonomial::identity(sig);
    for _ in 0..t.q {
        let (l1, l2) = (next(), next());
        g *= t.omega[(k * (l1 + n - l2)) % n] * t.f_boundary[l1] * t.f_boundary_rev[l2];
        word = monomial_mul(sig, &word, &t.boundary[l1]);
        word = monomial_mul(sig, &word, &t.boundary_rev[l2]);
        for alpha in 0..t.p - 1 {
            let s = next();
            g *= t.f_bond[s];
            word = monomial_mul(sig, &word, &t.bonds[alpha][s]);
        }
        for alpha in 0..t.p - 1 {
            let s = next();
            g *= t.f_bond_rev[s];
            word = monomial_mul(sig, &word, &t.bonds_rev[alpha][s]);
        }
        for site in 0..t.p {
            let i = next();
            g *= t.lambda[i];
            word = monomial_mul(sig, &word, &t.sites[site][i]);
        }
    }
    let norm = (n * n) as f64;
    for j1 in 0..n {
        for j2 in 0..n {
            let d = (j1 + n - j2) % n;
            let omega_hat = monomial_mul(sig, &word, &t.u_pow[d]);
            let coeff = g * t.omega[(n * n - k * d % n) % n] / norm;
            let value = coeff * omega_hat.phase.to_complex();
            *acc.terms.entry(omega_hat.exponents.clone()).or_default() += value;
            let tr = trace_normal_form(sig, &omega_hat);
            if !tr.is_zero() {
                acc.trace += coeff * tr.to_complex();
                acc.phases.insert(tr);
                acc.nonzero += 1;
            }
        }
    }
}

/// Partition value from the multisum trace.
pub fn multisum_partition(model: &LatticeModel, guards: &Guards) -> Result<PartitionResult> {
    let start = Instant::now();
    let res = multisum_power(model, guards)?;
    Ok(PartitionResult {
        z: res.z,
        method: Method::Multisum,
        terms: res.tuples,
        wall_time: start.elapsed(),
    })
}
