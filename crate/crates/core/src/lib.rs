//! Differential-linear connectivity tables (DLCT) and the related spectra of
//! vectorial Boolean functions, with exact integer arithmetic throughout.
//!
//! The crate computes and cross-validates four spectra of an (n, m)-function
//! given as a lookup table or as a univariate polynomial over GF(2^n):
//!
//! * the Walsh transform table,
//! * the differential distribution table (DDT),
//! * the DLCT, built by three independent routes that must agree bitwise,
//! * the additive autocorrelation table (twice the DLCT).
//!
//! On top of the tables sit scalar indicators (differential-linear
//! uniformity, differential uniformity, nonlinearity, absolute and
//! sum-of-squares indicators), classification flags (permutation / APN /
//! bent / plateaued / AB), equivalence transforms, and constructors plus
//! predicted spectra for the classical function families (inverse, Gold,
//! quadratic, Bracken–Leander, Kasami–Welch, the sixteen optimal 4-bit
//! S-box classes).

pub mod analysis;
pub mod catalog;
pub mod equivalence;
mod error;
pub mod field;
pub mod spectra;
pub mod vbf;

pub use analysis::{analyze, AnalysisReport, DluLowerBound, Flags};
pub use error::{Error, Result};
pub use field::FieldCtx;
pub use spectra::{Spectrum, SpectralTable, TableKind};
pub use vbf::{BoolFun, Vbf};
