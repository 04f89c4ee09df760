//! Finite and probabilistic frames, their canonical Parseval images, exact
//! 2-Wasserstein distances between discrete measures, and frame-bound-controlled
//! discretizations of probability measures.
//!
//! The crate is organized around five subsystems:
//!
//! - [`spectral`] — dense symmetric eigendecomposition (cyclic Jacobi) and
//!   spectral matrix functions (`S^{1/2}`, `S^{-1/2}`, operator norm).
//! - [`frames`] — weighted finite frames: frame operator, bounds, the frame
//!   metric, the canonical Parseval map and its closed-form distance.
//! - [`measures`] — discrete and analytic probability measures with finite
//!   second moment: second-moment matrices, probabilistic frame bounds,
//!   push-forward canonicalization, truncation, and cube quantization.
//! - [`transport`] — exact 2-Wasserstein distances and optimal couplings on
//!   finite supports via a network simplex solver.
//! - [`verify`] — executable property harnesses for the optimality,
//!   continuity, and approximation statements the other modules implement.
//!
//! All randomized routines take explicit seeds and are deterministic for a
//! fixed seed.

pub mod frames;
pub mod io;
pub mod measures;
pub mod spectral;
pub mod transport;
pub mod verify;

mod error;

pub use error::{Error, Result};
pub use frames::{FiniteFrame, FrameBounds, RowsView};
pub use measures::{DiscreteMeasure, MeasureSpec, QuantizationGrid, TruncationResult};
pub use spectral::{SpectralData, SymMatrix};
pub use transport::{Coupling, TransportResult};
pub use verify::{ContinuityWitness, VerificationReport};
