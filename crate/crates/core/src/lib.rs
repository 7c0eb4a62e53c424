//! Secrecy rate regions for interference and broadcast channels with
//! confidential messages.
//!
//! The library has three layers:
//!
//! * exact finite-alphabet probability tables and information measures
//!   ([`prob`]), plus shared tolerances and resource budgets ([`tol`]);
//! * rate-pair geometry ([`region`]) and the channel-specific machinery
//!   built on top of it: closed-form Gaussian schemes ([`gaussian`]),
//!   single-letter inner/outer bounds with auxiliary-structure optimization
//!   ([`bounds`]), and the switch-channel construction ([`switch`]);
//! * a Monte-Carlo/exact binning simulator ([`sim`]) that builds random
//!   stochastic codebooks and measures error rates and eavesdropper
//!   equivocation on small instances.
//!
//! All information quantities are in bits; all randomness flows from caller
//! supplied seeds through counter-based ChaCha streams, so every result is
//! reproducible and independent of worker count.

pub mod bounds;
pub mod error;
pub mod gaussian;
pub mod prob;
pub mod region;
pub mod sim;
pub mod switch;
pub mod tol;

pub use error::{Error, Result};
pub use prob::{binary_entropy, entropy, Axis, Channel, FiniteDist, JointDist};
pub use region::{RatePair, RateRegion};
pub use tol::Budget;
