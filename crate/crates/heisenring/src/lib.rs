//! Exact symmetry analysis for the 1D spin-1/2 Heisenberg ring.
//!
//! The crate models the ring's Hilbert space of spin configurations, the
//! action of the symmetric group and its group ring on states, Young's
//! natural representation as a discrete Fourier transform, and the
//! right-ideal machinery needed to compute symmetry classes, stability
//! subgroups, commutation symmetries and symmetry-class jumps of eigenvectors
//! of the ring Hamiltonian.

pub mod error;
pub mod groupring;
pub mod heisenberg;
pub mod hilbert;
pub mod linalg;
pub mod perm;
pub mod reference;
pub mod reproduce;
pub mod scalar;
pub mod symanalysis;
pub mod symrep;
pub mod tableau;

pub use error::{Error, Result};
pub use scalar::Scalar;
