//! Secrecy performance of artificial-noise (AN) aided multi-antenna transmission
//! with imperfect channel estimates, against eavesdroppers scattered as a
//! homogeneous Poisson point process.
//!
//! The crate covers four things:
//!
//! * closed-form secrecy outage probability (SOP) and the SOP-minimizing
//!   power allocation ratio under a target secrecy rate ([`sop`]);
//! * the secrecy-rate-maximizing power allocation ratio under an SOP
//!   constraint, with an exact and a large-antenna eavesdropper quantile ([`rate`]);
//! * a Monte-Carlo simulator of the physical model used as an independent
//!   check of every closed form ([`sim`]);
//! * parameter sweeps with CSV output and validation suites ([`sweep`], [`validate`]),
//!   driven by the `secrecy` binary.
//!
//! Power is noise-normalized and linear unless a name says `dbm`.
//!
//! ```
//! use secrecy_core::params::SystemConfig;
//! use secrecy_core::sop::SopProblem;
//!
//! let config = SystemConfig {
//!     n_antennas: 20,
//!     power: 1.0,
//!     alpha: 4.0,
//!     r_bob: 1.0,
//!     lambda_e: 2.0,
//!     tau: 0.1,
//!     gamma_hat: 20.0,
//! };
//! let problem = SopProblem::new(config, 2.0).unwrap();
//! let best = problem.optimal_par();
//! assert!(best.xi.unwrap() < 1.0);
//! ```

// negated comparisons are how domain checks reject NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod config;
pub mod error;
pub mod numerics;
pub mod params;
pub mod rate;
pub mod sim;
pub mod sop;
pub mod stats;
pub mod sweep;
pub mod validate;

pub use error::{Error, Result};
pub use params::{DerivedParams, ParDecision, Regime, SystemConfig};
