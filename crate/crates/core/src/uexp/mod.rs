//! ζ_u as a power series in u: its coefficients γ_N, the derivations 𝒟_N and
//! the shuffle identities they satisfy.

pub mod wpoly;

pub use wpoly::{local_expansion_direct, local_expansion_w, p_poly, w_poly, KPoly, WPoly};
pub mod gamma;

pub use gamma::{chain_sum, weak_compositions, UExpansion, USeries};
pub mod derivation;

pub use derivation::{
    compare_certified, derivation_d, derivation_index_exact, gamma_hat, gamma_shuffle_check,
    hasse_schmidt_check, identity_check_explicit, identity_sides, x_bracket_route_check,
};
