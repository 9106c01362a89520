use crate::error::{Error, Result};
use crate::gca::monomial::GammaMonomial;
use crate::gca::signature::AlgebraSignature;
use crate::guards::Guards;
use crate::phase_arith::PhaseExponent;

/// A normalized trace value: zero or a phase.
pub type TraceValue = PhaseExponent;

/// Normalized trace of a normal-form monomial.
///
/// Any nonzero exponent makes the trace vanish; otherwise the monomial is
/// its phase times the identity.
pub fn trace_normal_form(sig: &AlgebraSignature, m: &GammaMonomial) -> TraceValue {
    if m.is_scalar() {
        m.phase
    } else {
        PhaseExponent::zero(sig.n).expect("valid order")
    }
}

fn check_permutation(perm: &[usize]) -> Result<()> {
    let mut seen = vec![false; perm.len()];
    for &x in perm {
        if x >= perm.len() || seen[x] {
            return Err(Error::InvalidInput(format!("{perm:?} is not a permutation")));
        }
        seen[x] = true;
    }
    Ok(())
}

/// Number of pairs `a < b` with `perm[a] > perm[b]`.
pub fn inversions(perm: &[usize]) -> usize {
    let mut count = 0;
    for a in 0..perm.len() {
        for b in (a + 1)..perm.len() {
            if perm[a] > perm[b] {
                count += 1;
            }
        }
    }
    count
}

/// `K(σ) = ω^(−inv σ)`: the phase with
/// `Θ_{σ(1)} ⋯ Θ_{σ(m)} = K(σ) Θ_1 ⋯ Θ_m` when `Θ_i Θ_j = ω Θ_j Θ_i` for `i < j`.
///
/// `perm` is zero-based.
pub fn k_signum(n: u32, perm: &[usize]) -> Result<PhaseExponent> {
    check_permutation(perm)?;
    PhaseExponent::omega_pow(n, -(inversions(perm) as i64 % n as i64))
}

/// Phase picked up by reordering `word` into `target` order, where
/// `target[t]` is the position of `word` placed at slot `t`. Each pair that
/// swaps relative order contributes `ω^{c}` for its two letters.
fn reorder_phase(sig: &AlgebraSignature, word: &[usize], target: &[usize]) -> PhaseExponent {
    let mut exp: u64 = 0;
    for a in 0..target.len() {
        for b in (a + 1)..target.len() {
            let (u, v) = (target[b], target[a]);
            if u < v {
                exp += sig.commutation_phase(word[u], word[v]) as u64;
            }
        }
    }
    PhaseExponent::omega_pow(sig.n, (exp % sig.n as u64) as i64).expect("valid order")
}

/// One admissible grouping: blocks of equal letters in order of their
/// smallest position, each block increasing.
#[derive(Debug, Clone)]
struct Grouping {
    blocks: Vec<Vec<usize>>,
}

struct TheoremSearch<'a> {
    word: &'a [usize],
    n: usize,
    used: Vec<bool>,
    blocks: Vec<Vec<usize>>,
    found: Vec<Grouping>,
}

impl TheoremSearch<'_> {
    /// Enumerates the next part of the composition together with the
    /// positions of its block. The block starts at the smallest unused
    /// position (block minima increase), lists its positions in increasing
    /// order, and must be a single letter (the Kronecker delta). A letter
    /// that already owns a block cannot appear again, because the block
    /// order must then strictly increase in generator index.
    fn extend(&mut self) {
        let Some(start) = self.used.iter().position(|u| !u) else {
            self.found.push(Grouping {
                blocks: self.blocks.clone(),
            });
            return;
        };
        let letter = self.word[start];
        if self.blocks.iter().any(|b| self.word[b[0]] == letter) {
            return;
        }
        let occurrences: Vec<usize> = (start..self.word.len())
            .filter(|&i| !self.used[i] && self.word[i] == letter)
            .collect();
        let remaining = self.used.iter().filter(|u| !**u).count();
        for part in 1..=remaining / self.n {
            let size = part * self.n;
            if size > occurrences.len() {
                break;
            }
            // Occurrences left outside this block could never be grouped.
            if size != occurrences.len() {
                continue;
            }
            let block = occurrences[..size].to_vec();
            for &i in &block {
                self.used[i] = true;
            }
            self.blocks.push(block);
            self.extend();
            let block = self.blocks.pop().expect("just pushed");
            for i in block {
                self.used[i] = false;
            }
        }
    }
}

/// Block orderings `Σ` that make the block letters strictly increase.
fn block_orders(letters: &[usize]) -> Vec<Vec<usize>> {
    fn rec(letters: &[usize], taken: &mut Vec<bool>, order: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if order.len() == letters.len() {
            out.push(order.clone());
            return;
        }
        for b in 0..letters.len() {
            if taken[b] {
                continue;
            }
            if let Some(&last) = order.last() {
                if letters[b] <= letters[last] {
                    continue;
                }
            }
            taken[b] = true;
            order.push(b);
            rec(letters, taken, order, out);
            order.pop();
            taken[b] = false;
        }
    }
    let mut out = Vec::new();
    rec(letters, &mut vec![false; letters.len()], &mut Vec::new(), &mut out);
    out
}

/// Normalized trace of the word `g_{i_1} ⋯ g_{i_N}` as the sum over
/// groupings `σ` into single-letter blocks of n-tuples, compositions of
/// `N/n`, and block orderings `Σ`, of `K(Σ) K(σ)`.
///
/// `K(σ)` is the reordering phase read from the commutation table; for two
/// states it is the permutation sign, as [`k_signum`] gives. `K(Σ)` moves
/// whole blocks, each of length divisible by `n`.
pub fn trace_theorem(sig: &AlgebraSignature, indices: &[usize], guards: &Guards) -> Result<TraceValue> {
    let n = sig.n;
    if let Some(&bad) = indices.iter().find(|&&i| i >= sig.num_generators()) {
        return Err(Error::InvalidInput(format!("generator index {bad} out of range")));
    }
    if indices.is_empty() {
        return PhaseExponent::one(n);
    }
    if !indices.len().is_multiple_of(n as usize) {
        return PhaseExponent::zero(n);
    }
    if indices.len() > guards.trace_word_len {
        return Err(Error::Capacity {
            what: "trace word length",
            required: indices.len() as u128,
            limit: guards.trace_word_len as u128,
        });
    }
    let mut search = TheoremSearch {
        word: indices,
        n: n as usize,
        used: vec![false; indices.len()],
        blocks: Vec::new(),
        found: Vec::new(),
    };
    search.extend();

    let mut total: Option<PhaseExponent> = None;
    for grouping in &search.found {
        let sigma: Vec<usize> = grouping.blocks.concat();
        let k_sigma = reorder_phase(sig, indices, &sigma);
        let letters: Vec<usize> = grouping.blocks.iter().map(|b| indices[b[0]]).collect();
        for order in block_orders(&letters) {
            let regrouped: Vec<usize> = order.iter().flat_map(|&b| grouping.blocks[b].clone()).collect();
            let k_block = reorder_phase(sig, indices, &regrouped) * k_sigma.inv();
            let term = k_block * k_sigma;
            if total.is_some() {
                return Err(Error::Precondition(
                    "trace sum produced more than one surviving term".into(),
                ));
            }
            total = Some(term);
        }
    }
    match total {
        Some(t) => Ok(t),
        None => PhaseExponent::zero(n),
    }
}

/// Normalized trace of a word by normal ordering.
pub fn trace_word_normal_form(sig: &AlgebraSignature, indices: &[usize]) -> Result<TraceValue> {
    Ok(trace_normal_form(sig, &GammaMonomial::from_word(sig, indices)?))
}

/// Normalized trace of a word from the representation matrices.
pub fn trace_word_matrix(sig: &AlgebraSignature, indices: &[usize]) -> Result<num_complex::Complex64> {
    if let Some(&bad) = indices.iter().find(|&&i| i >= sig.num_generators()) {
        return Err(Error::InvalidInput(format!("generator index {bad} out of range")));
    }
    let m = indices
        .iter()
        .fold(super::signature::PhaseMatrix::identity(sig.dim()), |acc, &g| {
            acc.mul(sig.generator(g))
        });
    Ok(m.normalized_trace())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(n: u32, p: usize) -> AlgebraSignature {
        AlgebraSignature::new(n, p, &Guards::default()).unwrap()
    }

    #[test]
    fn empty_and_short_words() {
        let s = sig(3, 2);
        let g = Guards::default();
        assert!(trace_theorem(&s, &[], &g).unwrap().is_one());
        assert!(trace_theorem(&s, &[0, 1], &g).unwrap().is_zero());
        assert!(trace_theorem(&s, &[0, 1, 0], &g).unwrap().is_zero());
        assert!(trace_theorem(&s, &[0, 0, 0], &g).unwrap().is_one());
    }

    #[test]
    fn identity_and_single_generator() {
        let s = sig(4, 2);
        assert!(trace_word_normal_form(&s, &[]).unwrap().is_one());
        assert!(trace_word_normal_form(&s, &[1]).unwrap().is_zero());
        assert!(trace_word_normal_form(&s, &[1, 1, 1, 1]).unwrap().is_one());
    }

    #[test]
    fn guard_on_word_length() {
        let s = sig(2, 1);
        let g = Guards {
            trace_word_len: 4,
            ..Guards::default()
        };
        assert!(matches!(
            trace_theorem(&s, &[0; 6], &g),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn k_signum_examples() {
        assert!(k_signum(3, &[0, 1, 2, 3]).unwrap().is_one());
        assert_eq!(
            k_signum(3, &[1, 0, 2]).unwrap(),
            PhaseExponent::omega_pow(3, -1).unwrap()
        );
        assert!(k_signum(3, &[0, 0, 1]).is_err());
    }

    #[test]
    fn uniform_reorder_phase_is_k_signum() {
        // Every pair anticommutes, so reordering costs the permutation sign.
        let s = sig(2, 2);
        let word = [0, 1, 2, 3];
        let target = [2, 0, 3, 1];
        let k = k_signum(2, &target).unwrap();
        assert_eq!(reorder_phase(&s, &word, &target), k);
    }
}
