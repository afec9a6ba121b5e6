//! Discriminating two candidate thermal baths with qubit probes.
//!
//! A qubit left to relax in a bosonic bath follows a closed-form Bloch
//! trajectory set entirely by the bath occupancy `n = 1 + 2N >= 1`. Letting
//! one probe interact with a bath known to have occupancy `n1` or `n2` and
//! then measuring is a binary discrimination problem: the achievable success
//! rate is a function of the trace distance between the two possible output
//! states. This crate provides
//!
//! - [`channel`]: the relaxation map, the occupancy/temperature conversions,
//!   and the separation reached by an arbitrary probe preparation;
//! - [`optimizer`]: distinguished preparations (ground, equatorial), the
//!   interrogation-time landmarks where each is best, and the jointly
//!   optimal preparation and time;
//! - [`entangled`]: a two-qubit probe whose first qubit enters the bath,
//!   including the closed-form advantage of the maximally entangled state;
//! - [`oracle`]: independent brute-force checks (a fixed-step RK4
//!   integration of the underlying master equation, dense-grid angle
//!   maximization, and an eigenvalue-based trace distance) used to validate
//!   the closed forms.

pub mod channel;
pub mod entangled;
mod error;
mod linalg;
pub mod optimizer;
pub mod oracle;
mod solve;

pub use error::{Error, Result};
