//! Exact arithmetic in 𝔽_{p^e}, A = 𝔽_r[θ], K = 𝔽_r(θ) and residue fields.

pub mod enumerate;
pub mod field;
pub mod poly;
pub mod polya;
pub mod ratk;
pub mod residue;
pub mod ring;
pub mod series;

pub use enumerate::{
    enumerate_monic, factor_monic, irreducibles_up_to, is_irreducible, mobius, monic_below,
    monic_divisors,
};
pub use field::{FfElem, FiniteField};
pub use poly::Poly;
pub use polya::PolyA;
pub use ratk::RatK;
pub use residue::{reduce_mod_v, ResidueField};
pub use ring::Ring;
pub use series::PowerSeries;
