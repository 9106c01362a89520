//! The generalized Clifford algebra `C_{2p}^{(n)}`: generators `γ_k, γ̄_k`
//! with `g^n = 1` and `g_i g_j = ω^{c_ij} g_j g_i`, their tensor
//! representation, normal-ordered monomials and traces.

pub mod element;
pub mod exp;
pub mod monomial;
pub mod signature;
pub mod trace;

pub use element::{monomial_matrix, to_matrix, AlgebraElement};
pub use exp::exp_unit_monomial;
pub use monomial::{monomial_mul, GammaMonomial};
pub use signature::{
    check_relations, commutation_table, gamma_rep, pauli, AlgebraSignature, Parity, Pauli,
    PhaseMatrix, RelationFailure,
};
pub use trace::{
    inversions, k_signum, trace_normal_form, trace_theorem, trace_word_matrix,
    trace_word_normal_form, TraceValue,
};
