//! Comparison thresholds used by the checks and test suites.
//!
//! Exact phase arithmetic never needs these; they apply only where complex
//! floating values are compared.

/// Relative agreement for quantities built from many floating operations
/// (matrix powers, state sums, multisums).
pub const PIPELINE_REL: f64 = 1e-9;

/// Agreement for a single closed-form evaluation.
pub const FORMULA: f64 = 1e-12;

/// Relative agreement for the two-state closed form, whose square roots
/// accumulate over all lattice momenta.
pub const CLOSED_FORM_REL: f64 = 1e-6;

/// Entrywise agreement for representation identities and commutators.
pub const IDENTITY: f64 = 1e-10;

/// Entrywise agreement for generator relations and projector identities.
pub const RELATION: f64 = 1e-12;

/// Largest deviation accepted when reading a commutation phase off a
/// matrix entry.
pub const PHASE_FIT: f64 = 1e-10;

/// Coefficients below this fraction of the largest one are dropped from
/// symbolic sums.
pub const PRUNE_REL: f64 = 1e-14;
