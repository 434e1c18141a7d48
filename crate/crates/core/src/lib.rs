//! Hecke operators `U_n` and `V_n` on exact truncated power series and on
//! symbolic hypergeometric series.
//!
//! All arithmetic is exact over the Gaussian rationals. The symbolic layer
//! ([`hecke::apply_un`]) always has a coefficient-level counterpart
//! ([`series::TruncatedSeries::u_n`]) to check it against.

pub mod hecke;
pub mod hypergeometric;
pub mod multiplicative;
pub mod random;
pub mod scalar;
pub mod series;
pub mod spectral;
pub mod suites;

pub use hecke::{apply_un, oracle_check, parameter_sum_shift};
pub use hypergeometric::{pochhammer, pochhammer_split, pochhammer_split_offset, HypSeries};
pub use scalar::{GaussianRational, Rational};
pub use series::TruncatedSeries;
