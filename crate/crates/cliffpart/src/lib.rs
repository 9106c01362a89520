//! Exact partition functions of the Z_n vector Potts model on a torus,
//! computed by several independent routes that check one another:
//!
//! * a brute-force sum over spin configurations,
//! * the trace of a dense transfer-matrix power,
//! * the same power split into sectors of the global shift `U`,
//! * a flat multisum over generator monomials of the generalized Clifford
//!   algebra `C_{2p}^{(n)}`, traced exactly,
//! * for two states, the four-product closed form.
//!
//! ```
//! use cliffpart::guards::Guards;
//! use cliffpart::potts::{brute_force_partition, transfer_partition, LatticeModel};
//!
//! let model = LatticeModel::new(3, 2, 2, 0.1, 0.2)?;
//! let g = Guards::default();
//! let brute = brute_force_partition(&model, &g)?.z;
//! let transfer = transfer_partition(&model, &g)?.z;
//! assert!((brute - transfer).norm() < 1e-9 * brute.norm());
//! # Ok::<(), cliffpart::error::Error>(())
//! ```

pub mod book;
pub mod dense;
pub mod error;
pub mod gca;
pub mod guards;
pub mod phase_arith;
pub mod potts;
pub mod tolerances;

pub use error::{Error, Result};
