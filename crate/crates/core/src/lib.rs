//! Fourier-Walsh analysis of functions on the hypercube `{-1,1}^n`.
//!
//! The crate builds the generalized Rudin-Shapiro families, computes their
//! influence and Fourier entropy both in closed form and by brute-force
//! Walsh-Hadamard transform, and certifies the resulting entropy/influence
//! separations for bounded real and modulus-one complex functions.

pub mod cli;
pub mod construct;
pub mod error;
pub mod format;
pub mod numeric;
pub mod spectrum;
pub mod verify;

pub use construct::{ClosedFormReport, NormalizedClosedForm, ParamSeq, RSPair};
pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use spectrum::{
    FourierSpectrum, HypercubeFunction, SpectralStats, TableLimit, DEFAULT_MAX_TABLE_N,
};
pub use verify::{Certificate, CertificateKind, Check, OracleReport, Relation};
