//! Residue fields 𝔽_v = A/(v) for monic irreducible v.

use super::enumerate::is_irreducible;
use super::polya::PolyA;
use super::ratk::RatK;
use super::ring::Ring;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueField {
    v: PolyA,
}

impl ResidueField {
    pub fn new(v: PolyA) -> Result<Self> {
        if !v.is_monic() {
            return Err(Error::NotMonic);
        }
        if !is_irreducible(&v) {
            return Err(Error::WrongModulus);
        }
        Ok(ResidueField { v })
    }

    pub fn modulus(&self) -> &PolyA {
        &self.v
    }

    /// r^{deg v}.
    pub fn cardinality(&self) -> u64 {
        (self.v.field().order() as u64).pow(self.v.degree() as u32)
    }

    pub fn reduce(&self, a: &PolyA) -> PolyA {
        a.rem(&self.v)
    }

    /// Image of a v-integral rational function.
    pub fn reduce_rat(&self, x: &RatK) -> Result<PolyA> {
        let den = self.reduce(x.den());
        let inv = den.inv_mod(&self.v).ok_or(Error::DenominatorNotCoprime)?;
        Ok(self.reduce(&x.num().mul(&inv)))
    }

    pub fn add(&self, a: &PolyA, b: &PolyA) -> PolyA {
        self.reduce(&a.add(b))
    }

    pub fn mul(&self, a: &PolyA, b: &PolyA) -> PolyA {
        self.reduce(&a.mul(b))
    }

    pub fn inv(&self, a: &PolyA) -> Result<PolyA> {
        a.inv_mod(&self.v).ok_or(Error::NotInvertible)
    }
}

/// Reduction of `x` modulo a monic irreducible `v`.
pub fn reduce_mod_v(x: &RatK, v: &PolyA) -> Result<PolyA> {
    ResidueField::new(v.clone())?.reduce_rat(x)
}
