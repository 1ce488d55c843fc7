//! Precision-tracked Laurent series modelling K_∞ and the period field L.

pub mod dominance;
pub mod elem;
pub mod field;
pub mod serial;

pub use dominance::{argmax, dominance_profile, in_domain_d, ValuationReport};
pub use elem::{Laurent, EXACT};
pub use field::LaurentField;
pub use serial::{laurent_json, laurent_pairs};
