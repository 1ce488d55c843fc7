//! Multiple harmonic sums, Thakur MZVs, finite MZVs and the limits joining them.

pub mod bracket;
pub mod index;
pub mod limits;
pub mod sums;
pub mod zeta;

pub use bracket::{
    Bracket, IdentityBracket, LaurentBracket, TBracket, TorsionBracket, UFormalBracket, XBracket,
};
pub use index::Index;
pub use limits::{
    analytic_bound, analytic_limit_check, finite_euler_carlitz_check, finite_mzv,
    finite_mzv_via_torsion, harmonic_at_torsion, t_expansion, torsion_bracket_sizes,
    AnalyticLimitReport, FiniteMzvVector,
};
pub use sums::{h_lt_naive, Harmonic};
pub use zeta::{certified_cutoff, SlotBound, ZetaEngine};
