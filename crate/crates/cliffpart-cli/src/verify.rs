//! The verification suites behind `verify`, one per acceptance criterion.

use std::f64::consts::PI;

use cliffpart::dense::{matpow, max_rel_diff, rel_diff, trace};
use cliffpart::gca::{
    check_relations, k_signum, trace_theorem, trace_word_matrix, trace_word_normal_form,
    AlgebraSignature,
};
use cliffpart::guards::Guards;
use cliffpart::phase_arith::{gen_hyperbolic, omega};
use cliffpart::potts::transfer::{build_transfer, decomposed_power, projector_suite};
use cliffpart::potts::{
    brute_force_partition, gamma_forms, ising_closed_form, multisum_power, representation_identities,
    transfer_partition, LatticeModel,
};
use cliffpart::tolerances;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::report::SuiteOutcome;

/// Options for a verification run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyOptions {
    pub seed: u64,
    pub pipeline_rel: f64,
    pub closed_form_rel: f64,
    /// Shifts one commutation exponent before the relation check.
    pub inject_fault: Option<(usize, usize)>,
}

impl VerifyOptions {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            pipeline_rel: tolerances::PIPELINE_REL,
            closed_form_rel: tolerances::CLOSED_FORM_REL,
            inject_fault: None,
        }
    }
}

/// Collects checks for one suite.
struct Suite {
    tolerance: f64,
    out: SuiteOutcome,
}

impl Suite {
    fn new(criterion: u32, name: &str, tolerance: f64) -> Self {
        Self {
            tolerance,
            out: SuiteOutcome {
                criterion,
                name: name.to_string(),
                checks: 0,
                worst_ratio: 0.0,
                passed: true,
                failures: Vec::new(),
            },
        }
    }

    /// Records `deviation` against the suite tolerance.
    fn check(&mut self, label: impl FnOnce() -> String, deviation: f64) {
        self.check_against(label, deviation, self.tolerance);
    }

    fn check_against(&mut self, label: impl FnOnce() -> String, deviation: f64, tol: f64) {
        self.out.checks += 1;
        let ratio = deviation / tol;
        let ratio = if ratio.is_finite() { ratio } else { f64::MAX };
        self.out.worst_ratio = self.out.worst_ratio.max(ratio);
        if deviation.is_nan() || deviation >= tol {
            self.fail(format!("{}: deviation {deviation:e} exceeds {tol:e}", label()));
        }
    }

    fn require(&mut self, label: impl FnOnce() -> String, ok: bool) {
        self.out.checks += 1;
        if !ok {
            self.fail(label());
        }
    }

    fn fail(&mut self, msg: String) {
        self.out.passed = false;
        if self.out.failures.len() < 20 {
            self.out.failures.push(msg);
        }
    }

    fn error(&mut self, what: &str, e: cliffpart::Error) {
        self.out.checks += 1;
        self.fail(format!("{what}: {e}"));
    }

    fn finish(self) -> SuiteOutcome {
        self.out
    }
}

fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

/// Brute force against `Tr M^q` over the small-lattice grid.
pub fn pipeline_equality(opts: &VerifyOptions) -> SuiteOutcome {
    let mut s = Suite::new(1, "pipeline equality: brute force = Tr M^q", opts.pipeline_rel);
    let mut r = rng(opts.seed, 1);
    let guards = Guards::default();
    for n in 2..=4u32 {
        for p in 1..=3usize {
            for q in 1..=3usize {
                if (n as u128).pow((p * q) as u32) > 1 << 20 {
                    continue;
                }
                for _ in 0..5 {
                    let (a, b) = (r.random_range(-0.5..=0.5), r.random_range(-0.5..=0.5));
                    let label = || format!("n={n} p={p} q={q} a={a} b={b}");
                    let m = LatticeModel::new(n, p, q, a, b).expect("grid is valid");
                    match (brute_force_partition(&m, &guards), transfer_partition(&m, &guards)) {
                        (Ok(x), Ok(y)) => {
                            s.check(label, rel_diff(y.z, x.z));
                            s.check(|| format!("imaginary part at n={n} p={p} q={q}"), y.z.im.abs() / y.z.norm());
                        }
                        (Err(e), _) | (_, Err(e)) => s.error(&label(), e),
                    }
                }
            }
        }
    }
    s.finish()
}

/// The two-state closed form on both sides of the critical line.
pub fn closed_form(opts: &VerifyOptions) -> SuiteOutcome {
    let mut s = Suite::new(2, "two-state closed form = brute force", opts.closed_form_rel);
    let mut r = rng(opts.seed, 2);
    let guards = Guards::default();
    for (p, q) in [(2usize, 2usize), (2, 3), (3, 3)] {
        // Five points on the disordered side, five on the ordered side.
        for i in 0..10 {
            let range: std::ops::Range<f64> = if i < 5 { 0.0..0.19 } else { 0.36..0.6 };
            let (a, b) = (r.random_range(range.clone()), r.random_range(range));
            let high_t = (4.0 * a).sinh() * (4.0 * b).sinh() < 1.0;
            s.require(|| format!("({a}, {b}) on the intended side"), high_t == (i < 5));
            let label = || format!("p={p} q={q} a={a} b={b}");
            let m = LatticeModel::new(2, p, q, a, b).expect("valid");
            match (ising_closed_form(p, q, a, b), brute_force_partition(&m, &guards)) {
                (Ok(z), Ok(zb)) => s.check(label, (z - zb.z.re).abs() / zb.z.re),
                (Err(e), _) | (_, Err(e)) => s.error(&label(), e),
            }
        }
    }
    s.finish()
}

/// Words of shuffled n-fold repeats, sometimes with a stray letter.
fn biased_word(r: &mut ChaCha8Rng, n: u32, gens: usize) -> Vec<usize> {
    let blocks = r.random_range(0..=9usize);
    let mut word = Vec::new();
    for _ in 0..blocks {
        let g = r.random_range(0..gens);
        word.extend(std::iter::repeat_n(g, n as usize));
    }
    if r.random_bool(0.2) && !word.is_empty() {
        let at = r.random_range(0..word.len());
        word[at] = r.random_range(0..gens);
    }
    for i in (1..word.len()).rev() {
        word.swap(i, r.random_range(0..=i));
    }
    word
}

/// Theorem sum, normal form and matrix trace on random words.
pub fn trace_agreement(opts: &VerifyOptions) -> SuiteOutcome {
    let mut s = Suite::new(3, "trace three-way agreement", tolerances::FORMULA);
    let mut r = rng(opts.seed, 3);
    let guards = Guards::default();
    let mut nonzero = 0;
    for _ in 0..200 {
        let n = r.random_range(2..=4u32);
        let p = r.random_range(1..=3usize);
        let sig = AlgebraSignature::new(n, p, &guards).expect("small signature");
        let word = biased_word(&mut r, n, sig.num_generators());
        let label = || format!("n={n} p={p} word={word:?}");
        let res = (|| {
            Ok::<_, cliffpart::Error>((
                trace_theorem(&sig, &word, &guards)?,
                trace_word_normal_form(&sig, &word)?,
                trace_word_matrix(&sig, &word)?,
            ))
        })();
        match res {
            Ok((theorem, normal, matrix)) => {
                s.require(|| format!("{} theorem {theorem} vs normal form {normal}", label()), theorem == normal);
                s.check(label, (normal.to_complex() - matrix).norm());
                nonzero += usize::from(!normal.is_zero());
            }
            Err(e) => s.error(&label(), e),
        }
    }
    s.require(|| format!("only {nonzero} of 200 words had nonzero trace"), nonzero >= 50);
    s.finish()
}

/// Projector idempotence, orthogonality and commutation with `A`.
pub fn projectors(_opts: &VerifyOptions) -> SuiteOutcome {
    let mut s = Suite::new(4, "sector projector identities", tolerances::FORMULA);
    let guards = Guards::default();
    for n in 2..=5u32 {
        for p in 1..=3usize {
            let m = LatticeModel::new(n, p, 2, 0.23, -0.17).expect("valid");
            match build_transfer(&m, &guards) {
                Ok(ops) => {
                    let rep = projector_suite(&ops);
                    let at = |what: &str| format!("{what} at n={n} p={p}");
                    s.check(|| at("V_k V_l"), rep.orthogonality);
                    s.check(|| at("V^n - V"), rep.power);
                    s.check(|| at("resolution of identity"), rep.resolution);
                    s.check_against(|| at("[U, A]"), rep.shift_commutator, tolerances::IDENTITY);
                    s.check_against(|| at("[V, A]"), rep.projector_commutator, tolerances::IDENTITY);
                }
                Err(e) => s.error(&format!("n={n} p={p}"), e),
            }
        }
    }
    s.finish()
}

/// Sector decomposition of `M^q` against the dense power.
pub fn decomposition(opts: &VerifyOptions) -> SuiteOutcome {
    let mut s = Suite::new(5, "sector decomposition of M^q", opts.pipeline_rel);
    let guards = Guards::default();
    for q in [3usize, 4, 5, 7] {
        let m = LatticeModel::new(3, 2, q, 0.12, 0.27).expect("valid");
        let res = build_transfer(&m, &guards).and_then(|ops| Ok((gamma_forms(&m, &guards)?, ops)));
        match res {
            Ok((forms, ops)) => {
                let dense = matpow(&ops.m, q as u64);
                let dec = decomposed_power(&ops, &forms, q);
                s.check(|| format!("n=3 p=2 q={q}"), max_rel_diff(&dec, &dense));
                s.check(|| format!("trace at q={q}"), rel_diff(trace(&dec), trace(&dense)));
            }
            Err(e) => s.error(&format!("q={q}"), e),
        }
    }
    s.finish()
}

/// The flat multisum for two states on a 2x2 torus.
pub fn multisum(opts: &VerifyOptions) -> SuiteOutcome {
    let mut s = Suite::new(6, "multisum expansion of M^q", opts.pipeline_rel);
    let guards = Guards::default();
    let m = LatticeModel::new(2, 2, 2, 0.3, 0.2).expect("valid");
    let res = (|| {
        Ok::<_, cliffpart::Error>((
            multisum_power(&m, &guards)?,
            build_transfer(&m, &guards)?,
            brute_force_partition(&m, &guards)?,
        ))
    })();
    match res {
        Ok((ms, ops, brute)) => {
            s.require(|| format!("{} index tuples, expected 8192", ms.tuples), ms.tuples == 8192);
            s.check(|| "matrix vs dense M^2".into(), max_rel_diff(&ms.matrix, &matpow(&ops.m, 2)));
            s.check(|| "Z vs brute force".into(), rel_diff(ms.z, brute.z));
            s.require(
                || format!("term traces outside the n-th roots: {:?}", ms.trace_phases),
                ms.traces_are_roots_of_unity() && ms.nonzero_traces > 0,
            );
        }
        Err(e) => s.error("n=2 p=2 q=2", e),
    }
    s.finish()
}

fn series(n: u32, x: Complex64) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); n as usize];
    let mut term = Complex64::new(1.0, 0.0);
    for j in 0..120usize {
        if j > 0 {
            term = term * x / j as f64;
        }
        out[j % n as usize] += term;
    }
    out
}

/// Branch sums, rotation covariance and the series for `f_i`.
pub fn hyperbolic(opts: &VerifyOptions) -> SuiteOutcome {
    let mut s = Suite::new(7, "generalized hyperbolic functions", tolerances::FORMULA);
    let mut r = rng(opts.seed, 7);
    for n in 2..=6u32 {
        let w = omega(n).expect("valid order");
        for _ in 0..100 {
            let radius = 3.0 * r.random::<f64>().sqrt();
            let x = Complex64::from_polar(radius, 2.0 * PI * r.random::<f64>());
            let label = |what: &str| format!("{what} at n={n} x={x}");
            let (f, g) = match (gen_hyperbolic(n, x), gen_hyperbolic(n, w * x)) {
                (Ok(f), Ok(g)) => (f, g),
                (Err(e), _) | (_, Err(e)) => {
                    s.error(&label("table"), e);
                    continue;
                }
            };
            s.check(|| label("sum"), (f.sum() - x.exp()).norm() / x.exp().norm());
            let reference = series(n, x);
            for (i, expected) in reference.iter().enumerate() {
                let scale = f.get(i).norm().max(1.0);
                let rot = (g.get(i) - w.powu(i as u32) * f.get(i)).norm() / scale;
                s.check(|| label(&format!("rotation of f_{i}")), rot);
                s.check(|| label(&format!("series for f_{i}")), (f.get(i) - expected).norm() / scale);
            }
        }
    }
    s.finish()
}

fn cycle_sign(perm: &[usize]) -> i32 {
    let mut seen = vec![false; perm.len()];
    let mut sign = 1;
    for start in 0..perm.len() {
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = perm[x];
            len += 1;
        }
        if len > 0 && len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

fn permutations(m: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for smaller in permutations(m - 1) {
        for at in 0..m {
            let mut p = smaller.clone();
            p.insert(at, m - 1);
            out.push(p);
        }
    }
    out
}

/// Generator relations, operator identities and the two-state signum.
pub fn representation(opts: &VerifyOptions) -> SuiteOutcome {
    let mut s = Suite::new(8, "representation identities", tolerances::IDENTITY);
    let guards = Guards::default();
    for n in 2..=5u32 {
        for p in 1..=3usize {
            let mut sig = AlgebraSignature::new(n, p, &guards).expect("small signature");
            if let Some((i, j)) = opts.inject_fault {
                if i < sig.num_generators() && j < sig.num_generators() && i != j {
                    sig = sig.with_injected_fault(i, j);
                }
            }
            let (worst, failures) = check_relations(&sig, tolerances::IDENTITY);
            s.check(|| format!("generator relations at n={n} p={p}"), worst);
            for f in failures {
                s.fail(format!(
                    "relation between {} and {} fails at n={n} p={p} by {:e}",
                    sig.label(f.i),
                    sig.label(f.j),
                    f.deviation
                ));
            }
            match representation_identities(n, p, &guards) {
                Ok(checks) => {
                    for c in checks {
                        s.check(|| format!("{} at n={n} p={p}", c.name), c.deviation);
                    }
                }
                Err(e) => s.error(&format!("identities at n={n} p={p}"), e),
            }
        }
    }
    for perm in permutations(5) {
        let k = k_signum(2, &perm).expect("valid permutation").to_complex();
        s.check(|| format!("signum of {perm:?}"), (k - Complex64::new(cycle_sign(&perm) as f64, 0.0)).norm());
    }
    s.finish()
}

/// Runs every suite in criterion order.
pub fn run_all(opts: &VerifyOptions) -> Vec<SuiteOutcome> {
    let suites: [fn(&VerifyOptions) -> SuiteOutcome; 8] = [
        pipeline_equality,
        closed_form,
        trace_agreement,
        projectors,
        decomposition,
        multisum,
        hyperbolic,
        representation,
    ];
    suites.iter().map(|f| f(opts)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_helpers() {
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(cycle_sign(&[1, 0, 2]), -1);
        assert_eq!(cycle_sign(&[1, 2, 0]), 1);
    }
}
