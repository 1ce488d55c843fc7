//! Power series truncated at a fixed order: the quotient ring R[[X]]/(X^n).

use super::poly::Poly;
use super::ring::Ring;

#[derive(Clone, Debug, PartialEq)]
pub struct PowerSeries<R: Ring> {
    c: Vec<R>,
}

impl<R: Ring> PowerSeries<R> {
    /// Coefficients of `X^0 .. X^{order-1}`; `order` is at least 1.
    pub fn new(zero: &R, order: usize, mut c: Vec<R>) -> Self {
        assert!(order >= 1, "series order must be positive");
        c.truncate(order);
        c.resize(order, zero.zero_like());
        PowerSeries { c }
    }

    pub fn from_poly(p: &Poly<R>, order: usize) -> Self {
        Self::new(p.zero_elem(), order, p.coeffs().to_vec())
    }

    pub fn constant(x: R, order: usize) -> Self {
        let z = x.zero_like();
        Self::new(&z, order, vec![x])
    }

    pub fn order(&self) -> usize {
        self.c.len()
    }

    pub fn coeff(&self, i: usize) -> &R {
        &self.c[i]
    }

    pub fn coeffs(&self) -> &[R] {
        &self.c
    }

    pub fn truncate(&self, order: usize) -> Self {
        let z = self.c[0].zero_like();
        Self::new(&z, order.min(self.order()), self.c.clone())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> PowerSeries<S> {
        PowerSeries {
            c: self.c.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, k: &R) -> Self {
        PowerSeries {
            c: self.c.iter().map(|x| x.mul(k)).collect(),
        }
    }

    fn zip(&self, rhs: &Self, f: impl Fn(&R, &R) -> R) -> Self {
        let n = self.order().min(rhs.order());
        PowerSeries {
            c: (0..n).map(|i| f(&self.c[i], &rhs.c[i])).collect(),
        }
    }
}

impl<R: Ring> Ring for PowerSeries<R> {
    fn zero_like(&self) -> Self {
        let z = self.c[0].zero_like();
        PowerSeries {
            c: vec![z; self.order()],
        }
    }
    fn one_like(&self) -> Self {
        Self::constant(self.c[0].one_like(), self.order())
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }
    fn add(&self, rhs: &Self) -> Self {
        self.zip(rhs, |a, b| a.add(b))
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.zip(rhs, |a, b| a.sub(b))
    }
    fn neg(&self) -> Self {
        PowerSeries {
            c: self.c.iter().map(|x| x.neg()).collect(),
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        let z = self.c[0].zero_like();
        let mut v = vec![z; n];
        for i in 0..n {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..n - i {
                if !rhs.c[j].is_zero() {
                    v[i + j] = v[i + j].add(&self.c[i].mul(&rhs.c[j]));
                }
            }
        }
        PowerSeries { c: v }
    }
    fn from_int(&self, k: i64) -> Self {
        Self::constant(self.c[0].from_int(k), self.order())
    }
    /// Inverse through the coefficient recurrence; requires a unit constant term.
    fn try_inverse(&self) -> Option<Self> {
        let b0 = self.c[0].try_inverse()?;
        let n = self.order();
        let mut b = Vec::with_capacity(n);
        b.push(b0.clone());
        for k in 1..n {
            let mut s = self.c[0].zero_like();
            for i in 1..=k {
                if !self.c[i].is_zero() {
                    s = s.add(&self.c[i].mul(&b[k - i]));
                }
            }
            b.push(s.mul(&b0).neg());
        }
        Some(PowerSeries { c: b })
    }
    fn agrees_with(&self, other: &Self) -> bool {
        let n = self.order().min(other.order());
        self.c[..n] == other.c[..n]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::FiniteField;
    use crate::algebra::polya::PolyA;
    use crate::algebra::ratk::RatK;

    #[test]
    fn inverse_of_geometric() {
        let f = FiniteField::of_order(3).unwrap();
        let one = RatK::one(&f);
        let t = RatK::from_poly(PolyA::theta(&f));
        let s = PowerSeries::new(&one, 6, vec![one.clone(), t.neg()]);
        let inv = s.try_inverse().unwrap();
        for k in 0..6 {
            assert_eq!(inv.coeff(k), &t.pow(k as u64));
        }
        assert!(s.mul(&inv).is_one());
    }
}
