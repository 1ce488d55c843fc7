//! Exact computation of function-field multiple zeta values, their u-analogs,
//! and mechanical verification of the identities relating them.

pub mod algebra;
pub mod carlitz;
pub mod cyclo;
pub mod error;
pub mod harmonic;
pub mod laurent;
pub mod shuffle;
pub mod uexp;
pub mod verify;

pub use algebra::*;
pub use error::{Error, Result};
pub use laurent::{Laurent, LaurentField};
