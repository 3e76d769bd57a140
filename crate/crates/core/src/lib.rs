//! Curve construction toolkit: maximally smooth discount and forward curves
//! from fixed-income market quotes.
//!
//! The central object is a discount curve obtained in closed form as the
//! minimal-norm interpolant of a set of linear pricing constraints, where the
//! norm penalizes the level at zero, the initial slope, and integrated squared
//! curvature. Around that core the crate provides:
//!
//! * [`kernel`] — closed-form representers and Gram matrices,
//! * [`instruments`] — benchmark instruments, day counts, schedules, and
//!   assembly of the pricing system `C d = p`,
//! * [`curve_solver`] — the closed-form minimal-norm solve and curve
//!   evaluation (discount factors, zero yields, instantaneous forwards),
//! * [`sensitivity`] — directional derivatives and bucket / key-rate hedging,
//! * [`quote_optimizer`] — bid-ask quote selection for maximal smoothness,
//! * [`finite_dim`] — the discrete Euclidean analogue with optional shape
//!   constraints,
//! * [`multicurve`] — OIS discounting plus 6M/3M/1M tenor forward curves,
//! * [`reference_bootstrap`] — a traditional bootstrap used as a baseline.

pub mod curve_solver;
pub mod error;
pub mod finite_dim;
pub mod instruments;
pub mod kernel;
pub mod linalg;
pub mod multicurve;
pub mod qp;
pub mod quote_optimizer;
pub mod reference_bootstrap;
pub mod sensitivity;

pub use error::{Error, Result};
