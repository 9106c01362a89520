//! The Z_n vector Potts model on a `p × q` torus and the routes to its
//! partition function.

pub mod closed_form;
pub mod gamma_forms;
pub mod identities;
pub mod model;
pub mod multisum;
pub mod transfer;

pub use closed_form::{closed_form_partition, criticality_sign, ising_closed_form, IsingClosedForm};
pub use gamma_forms::{gamma_forms, GammaForms};
pub use identities::{representation_identities, IdentityCheck};
pub use model::{
    brute_force_partition, energy, LatticeModel, Method, PartitionResult, SpinConfiguration,
};
pub use multisum::{multisum_partition, multisum_power, MultisumResult};
pub use transfer::{
    build_transfer, decomposed_partition, decomposed_power, projector_suite, residue_exponent,
    transfer_partition, ProjectorReport, TransferOperators,
};
