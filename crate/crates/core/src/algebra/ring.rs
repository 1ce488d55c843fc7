//! The commutative-ring interface shared by every coefficient and target type.

use std::fmt::Debug;

/// A commutative ring whose elements carry their own context (field tables,
/// moduli, precision), so neutral elements are produced from an existing value.
#[allow(clippy::wrong_self_convention)]
pub trait Ring: Clone + PartialEq + Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// Image of an integer under the prime-field map.
    fn from_int(&self, k: i64) -> Self;
    /// Multiplicative inverse when it exists and is computable.
    fn try_inverse(&self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Integer power, negative exponents through `try_inverse`.
    fn pow_i64(&self, e: i64) -> Option<Self> {
        if e >= 0 {
            Some(self.pow(e as u64))
        } else {
            self.try_inverse().map(|inv| inv.pow(e.unsigned_abs()))
        }
    }

    /// Equality in the sense appropriate for the ring; truncated types compare
    /// only the digits both operands know.
    fn agrees_with(&self, other: &Self) -> bool {
        self == other
    }

    fn scale_int(&self, k: i64) -> Self {
        self.mul(&self.from_int(k))
    }
}

/// Sum of ring elements, with an explicit zero for the empty case.
pub fn sum<R: Ring>(zero: &R, items: impl IntoIterator<Item = R>) -> R {
    items.into_iter().fold(zero.clone(), |acc, x| acc.add(&x))
}
