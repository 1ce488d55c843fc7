//! The rational function field K = 𝔽_r(θ) as reduced fractions.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use super::field::FiniteField;
use super::polya::PolyA;
use super::ring::Ring;
use crate::error::{Error, Result};

/// `num/den` with `den` monic and `gcd(num, den) = 1`.
#[derive(Clone, PartialEq, Eq)]
pub struct RatK {
    num: PolyA,
    den: PolyA,
}

impl Hash for RatK {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.num.hash(state);
        self.den.hash(state);
    }
}

impl RatK {
    pub fn new(num: PolyA, den: PolyA) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::NotInvertible);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: PolyA, den: PolyA) -> Self {
        if num.is_zero() {
            return Self::from_poly(PolyA::zero(num.field()));
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        let lead = d.lead();
        if lead != 1 {
            let inv = d.field().inv(lead).unwrap();
            n = n.scale(inv);
            d = d.scale(inv);
        }
        RatK { num: n, den: d }
    }

    /// Builds from parts already known to be coprime with monic denominator.
    fn from_parts_unchecked(num: PolyA, den: PolyA) -> Self {
        if num.is_zero() {
            return Self::from_poly(num);
        }
        RatK { num, den }
    }

    pub fn from_poly(p: PolyA) -> Self {
        let one = PolyA::one(p.field());
        RatK { num: p, den: one }
    }

    pub fn zero(field: &Arc<FiniteField>) -> Self {
        Self::from_poly(PolyA::zero(field))
    }

    pub fn one(field: &Arc<FiniteField>) -> Self {
        Self::from_poly(PolyA::one(field))
    }

    pub fn num(&self) -> &PolyA {
        &self.num
    }

    pub fn den(&self) -> &PolyA {
        &self.den
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        self.num.field()
    }

    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_poly(&self) -> Option<&PolyA> {
        self.is_integral().then_some(&self.num)
    }

    /// Valuation at the infinite place: deg den − deg num.
    pub fn v_inf(&self) -> Option<i64> {
        (!self.num.is_zero()).then(|| self.den.degree() - self.num.degree())
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::NotInvertible);
        }
        let lead = self.num.lead();
        let inv = self.field().inv(lead).unwrap();
        Ok(RatK {
            num: self.den.scale(inv),
            den: self.num.scale(inv),
        })
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.inverse()?))
    }

    pub fn scale(&self, k: u16) -> Self {
        Self::from_parts_unchecked(
            self.num.scale(k),
            if k == 0 {
                PolyA::one(self.field())
            } else {
                self.den.clone()
            },
        )
    }

    pub fn mul_poly(&self, p: &PolyA) -> Self {
        if self.den.is_one() {
            return Self::from_poly(self.num.mul(p));
        }
        let g = p.gcd(&self.den);
        if g.is_one() {
            Self::from_parts_unchecked(self.num.mul(p), self.den.clone())
        } else {
            Self::from_parts_unchecked(
                self.num.mul(&p.div_exact(&g).unwrap()),
                self.den.div_exact(&g).unwrap(),
            )
        }
    }

    pub fn div_poly(&self, p: &PolyA) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::NotInvertible);
        }
        Ok(self.mul(&RatK::reduce(PolyA::one(self.field()), p.clone())))
    }

    /// `self^(r^k)` by exponent spreading.
    pub fn frobenius(&self, k: u32) -> Self {
        RatK {
            num: self.num.frobenius(k),
            den: self.den.frobenius(k),
        }
    }
}

impl fmt::Debug for RatK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RatK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Ring for RatK {
    fn zero_like(&self) -> Self {
        Self::zero(self.field())
    }
    fn one_like(&self) -> Self {
        Self::one(self.field())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return Self::from_poly(self.num.add(&rhs.num));
            }
            return Self::reduce(self.num.add(&rhs.num), self.den.clone());
        }
        // Henrici: only the gcd of the denominators can cancel.
        let g = self.den.gcd(&rhs.den);
        if g.is_one() {
            let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
            return Self::from_parts_unchecked(num, self.den.mul(&rhs.den));
        }
        let d1 = self.den.div_exact(&g).unwrap();
        let d2 = rhs.den.div_exact(&g).unwrap();
        let t = self.num.mul(&d2).add(&rhs.num.mul(&d1));
        if t.is_zero() {
            return self.zero_like();
        }
        let g2 = t.gcd(&g);
        if g2.is_one() {
            Self::from_parts_unchecked(t, d2.mul(&self.den))
        } else {
            Self::from_parts_unchecked(
                t.div_exact(&g2).unwrap(),
                d2.mul(&self.den.div_exact(&g2).unwrap()),
            )
        }
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn neg(&self) -> Self {
        RatK {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return self.zero_like();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Self::from_poly(self.num.mul(&rhs.num));
        }
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let split = |x: &PolyA, g: &PolyA| {
            if g.is_one() {
                x.clone()
            } else {
                x.div_exact(g).unwrap()
            }
        };
        let num = split(&self.num, &g1).mul(&split(&rhs.num, &g2));
        let den = split(&self.den, &g2).mul(&split(&rhs.den, &g1));
        let lead = den.lead();
        if lead != 1 {
            let inv = den.field().inv(lead).unwrap();
            return Self::from_parts_unchecked(num.scale(inv), den.scale(inv));
        }
        Self::from_parts_unchecked(num, den)
    }
    fn from_int(&self, k: i64) -> Self {
        Self::from_poly(self.num.from_int(k))
    }
    fn try_inverse(&self) -> Option<Self> {
        self.inverse().ok()
    }
    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
    fn pow(&self, e: u64) -> Self {
        // Coprime parts stay coprime under powering.
        if e == 0 {
            return self.one_like();
        }
        Self::from_parts_unchecked(self.num.pow(e), self.den.pow(e))
    }
}
