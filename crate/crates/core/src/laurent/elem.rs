//! Precision-tracked Laurent series.
//!
//! An element stores the coefficients of `w^val, w^{val+1}, …` up to its last
//! nonzero digit; every exponent below `prec` is known, everything from `prec`
//! on is unknown. Exact elements carry `prec = EXACT`.

use std::fmt;
use std::sync::Arc;

use num_rational::Ratio;

use super::field::LaurentField;
use crate::algebra::{PolyA, RatK, Ring};
use crate::error::{Error, Result};

pub const EXACT: i64 = i64::MAX / 4;

fn sat(a: i64, b: i64) -> i64 {
    (a + b).min(EXACT)
}

#[derive(Clone)]
pub struct Laurent {
    field: Arc<LaurentField>,
    val: i64,
    c: Vec<u16>,
    prec: i64,
}

impl PartialEq for Laurent {
    fn eq(&self, other: &Self) -> bool {
        self.val == other.val && self.c == other.c && self.prec == other.prec
    }
}

impl Laurent {
    fn build(field: &Arc<LaurentField>, val: i64, mut c: Vec<u16>, prec: i64) -> Self {
        let keep = (prec - val).clamp(0, c.len() as i64) as usize;
        c.truncate(keep);
        let lead = c.iter().position(|&x| x != 0);
        match lead {
            None => Laurent {
                field: field.clone(),
                val: prec,
                c: Vec::new(),
                prec,
            },
            Some(k) => {
                c.drain(..k);
                while c.last() == Some(&0) {
                    c.pop();
                }
                Laurent {
                    field: field.clone(),
                    val: val + k as i64,
                    c,
                    prec,
                }
            }
        }
    }

    /// Element from coefficients of `w^val, w^{val+1}, …` known below `prec`.
    pub fn from_coeffs(field: &Arc<LaurentField>, val: i64, c: Vec<u16>, prec: i64) -> Self {
        Self::build(field, val, c, prec)
    }

    pub fn zero(field: &Arc<LaurentField>, prec: i64) -> Self {
        Self::build(field, prec, Vec::new(), prec)
    }

    pub fn one(field: &Arc<LaurentField>) -> Self {
        Self::monomial(field, 1, 0)
    }

    /// `c·w^k`, exact.
    pub fn monomial(field: &Arc<LaurentField>, c: u16, k: i64) -> Self {
        Self::build(field, k, vec![c], EXACT)
    }

    pub fn field(&self) -> &Arc<LaurentField> {
        &self.field
    }

    /// Lowest exponent with a possibly nonzero digit (equals `prec` when zero to precision).
    pub fn lead_exp(&self) -> i64 {
        self.val
    }

    pub fn prec(&self) -> i64 {
        self.prec
    }

    pub fn is_exact(&self) -> bool {
        self.prec >= EXACT
    }

    pub fn coeffs(&self) -> &[u16] {
        &self.c
    }

    pub fn coeff(&self, k: i64) -> u16 {
        if k < self.val {
            return 0;
        }
        self.c.get((k - self.val) as usize).copied().unwrap_or(0)
    }

    pub fn is_zero_to_precision(&self) -> bool {
        self.c.is_empty()
    }

    pub fn valuation(&self) -> Option<i64> {
        (!self.c.is_empty()).then_some(self.val)
    }

    /// Exponent η with |x| = r^η, exact.
    pub fn abs_exponent(&self) -> Result<Ratio<i64>> {
        let v = self.valuation().ok_or(Error::ZeroToPrecision)?;
        Ok(Ratio::new(-v, self.field.e_ram()))
    }

    /// |x|_∞ as a float, for display only.
    pub fn abs_inf(&self) -> Result<f64> {
        let eta = self.abs_exponent()?;
        Ok((self.field.r() as f64).powf(*eta.numer() as f64 / *eta.denom() as f64))
    }

    pub fn with_prec(&self, prec: i64) -> Self {
        Self::build(&self.field, self.val, self.c.clone(), prec.min(self.prec))
    }

    /// Equality to precision T: both operands known below T and equal there.
    pub fn eq_to(&self, other: &Self, t: i64) -> bool {
        if self.prec < t || other.prec < t {
            return false;
        }
        let lo = self.val.min(other.val);
        (lo..t).all(|k| self.coeff(k) == other.coeff(k))
    }

    /// Largest T for which the two elements are known and agree below T.
    pub fn agreement(&self, other: &Self) -> i64 {
        let cap = self.prec.min(other.prec);
        let d = self.sub(other);
        match d.valuation() {
            Some(v) => v.min(cap),
            None => cap,
        }
    }

    pub fn embed_poly(field: &Arc<LaurentField>, a: &PolyA) -> Self {
        let Some(n) = a.deg() else {
            return Self::zero(field, EXACT);
        };
        let e = field.e_ram();
        let mut c = vec![0u16; n * e as usize + 1];
        for (i, &x) in a.coeffs().iter().enumerate() {
            c[(n - i) * e as usize] = field.embed_base(x);
        }
        Self::build(field, -(n as i64) * e, c, EXACT)
    }

    /// Expansion of x in the uniformizer, correct below `prec`.
    pub fn embed(field: &Arc<LaurentField>, x: &RatK, prec: i64) -> Self {
        let num = Self::embed_poly(field, x.num());
        if x.den().is_one() {
            return num.with_prec(prec);
        }
        let den = Self::embed_poly(field, x.den());
        let v_x = num.val - den.val;
        let rel = (prec - v_x).max(1);
        let inv = den.inverse_rel(rel).expect("nonzero denominator");
        num.mul(&inv).with_prec(prec)
    }

    /// Inverse with `rel` correct digits when `self` is exact.
    pub fn inverse_rel(&self, rel: i64) -> Result<Self> {
        if self.c.is_empty() {
            return Err(Error::ZeroToPrecision);
        }
        let f = self.field.coeff_field();
        let own_rel = self.prec.saturating_sub(self.val);
        let rel = if self.prec >= EXACT {
            if self.c.len() == 1 {
                return Ok(Self::build(
                    &self.field,
                    -self.val,
                    vec![f.inv(self.c[0]).unwrap()],
                    EXACT,
                ));
            }
            rel
        } else {
            own_rel.min(rel)
        };
        let n = rel.max(0) as usize;
        let b0 = f.inv(self.c[0]).unwrap();
        let mut b = Vec::with_capacity(n);
        if n > 0 {
            b.push(b0);
        }
        for k in 1..n {
            let mut s = 0u16;
            for i in 1..=k.min(self.c.len() - 1) {
                let a = self.c[i];
                if a != 0 {
                    s = f.add(s, f.mul(a, b[k - i]));
                }
            }
            b.push(f.neg(f.mul(s, b0)));
        }
        Ok(Self::build(&self.field, -self.val, b, -self.val + n as i64))
    }

    /// Inverse; exact non-monomial inputs need `inverse_rel`.
    pub fn inverse(&self) -> Result<Self> {
        if self.prec >= EXACT && self.c.len() > 1 {
            return Err(Error::PrecisionTooLow(
                "exact series inverse needs a target precision".into(),
            ));
        }
        self.inverse_rel(EXACT)
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        let inv = if other.prec >= EXACT && other.c.len() > 1 {
            let want = self.prec.saturating_sub(self.val).min(EXACT);
            other.inverse_rel(want)?
        } else {
            other.inverse()?
        };
        Ok(self.mul(&inv))
    }

    /// Quotient correct below `prec`; works for exact non-monomial divisors.
    pub fn div_to(&self, other: &Self, prec: i64) -> Result<Self> {
        let v_other = other.valuation().ok_or(Error::ZeroToPrecision)?;
        let num = self.with_prec(prec.saturating_add(v_other));
        if num.is_zero_to_precision() {
            return Ok(Self::zero(&self.field, num.prec - v_other));
        }
        let rel = num.prec - num.val;
        Ok(num.mul(&other.inverse_rel(rel)?).with_prec(prec))
    }

    /// `x^{r^k}`: coefficientwise Frobenius; precision scales by r^k.
    pub fn frobenius(&self, k: u32) -> Self {
        if k == 0 {
            return self.clone();
        }
        let q = self.field.r().pow(k) as i64;
        let f = self.field.coeff_field();
        let mut c = vec![
            0u16;
            if self.c.is_empty() {
                0
            } else {
                (self.c.len() - 1) * q as usize + 1
            }
        ];
        for (i, &x) in self.c.iter().enumerate() {
            c[i * q as usize] = f.pow(x, q as u64);
        }
        let prec = if self.prec >= EXACT {
            EXACT
        } else {
            self.prec.saturating_mul(q).min(EXACT)
        };
        let val = if self.c.is_empty() {
            prec
        } else {
            self.val * q
        };
        Self::build(&self.field, val, c, prec)
    }

    pub fn scale_coeff(&self, k: u16) -> Self {
        let f = self.field.coeff_field();
        Self::build(
            &self.field,
            self.val,
            self.c.iter().map(|&x| f.mul(x, k)).collect(),
            self.prec,
        )
    }

    /// Multiplication by w^k.
    pub fn shift(&self, k: i64) -> Self {
        Self::build(&self.field, self.val + k, self.c.clone(), sat(self.prec, k))
    }

    /// True when only exponents divisible by `m` carry nonzero digits.
    pub fn supported_on_multiples(&self, m: i64) -> bool {
        self.c
            .iter()
            .enumerate()
            .all(|(i, &x)| x == 0 || (self.val + i as i64).rem_euclid(m) == 0)
    }

    fn combine(&self, rhs: &Self, negate: bool) -> Self {
        let f = self.field.coeff_field();
        let prec = self.prec.min(rhs.prec);
        let span = |x: &Self| (!x.c.is_empty()).then(|| (x.val, x.val + x.c.len() as i64));
        let (lo, hi) = match (span(self), span(rhs)) {
            (None, None) => return Self::zero(&self.field, prec),
            (Some(a), None) | (None, Some(a)) => a,
            (Some(a), Some(b)) => (a.0.min(b.0), a.1.max(b.1)),
        };
        let hi = hi.min(prec);
        if hi <= lo {
            return Self::zero(&self.field, prec);
        }
        let mut c = vec![0u16; (hi - lo) as usize];
        for (i, &x) in self.c.iter().enumerate() {
            let k = self.val + i as i64 - lo;
            if k < c.len() as i64 {
                c[k as usize] = x;
            }
        }
        for (i, &x) in rhs.c.iter().enumerate() {
            let k = rhs.val + i as i64 - lo;
            if k < c.len() as i64 {
                let slot = &mut c[k as usize];
                *slot = if negate {
                    f.sub(*slot, x)
                } else {
                    f.add(*slot, x)
                };
            }
        }
        Self::build(&self.field, lo, c, prec)
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.field.name();
        let mut parts = Vec::new();
        for (i, &x) in self.c.iter().enumerate() {
            if x != 0 {
                parts.push(format!(
                    "{}*({})^{}",
                    self.field.coeff_field().digit_string(x),
                    w,
                    self.val + i as i64
                ));
            }
        }
        if parts.is_empty() {
            parts.push("0".into());
        }
        if self.prec < EXACT {
            parts.push(format!("O(({w})^{})", self.prec));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl Ring for Laurent {
    fn zero_like(&self) -> Self {
        Self::zero(&self.field, EXACT)
    }
    fn one_like(&self) -> Self {
        Self::one(&self.field)
    }
    /// Exact zero only; digits known to vanish below a finite precision do not count.
    fn is_zero(&self) -> bool {
        self.c.is_empty() && self.prec >= EXACT
    }
    fn add(&self, rhs: &Self) -> Self {
        self.combine(rhs, false)
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.combine(rhs, true)
    }
    fn neg(&self) -> Self {
        let f = self.field.coeff_field();
        Self::build(
            &self.field,
            self.val,
            self.c.iter().map(|&x| f.neg(x)).collect(),
            self.prec,
        )
    }
    fn mul(&self, rhs: &Self) -> Self {
        let prec = sat(self.val, rhs.prec).min(sat(rhs.val, self.prec));
        if self.c.is_empty() || rhs.c.is_empty() {
            return Self::zero(&self.field, prec);
        }
        let f = self.field.coeff_field();
        let lo = self.val + rhs.val;
        let len = ((self.c.len() + rhs.c.len() - 1) as i64)
            .min(prec - lo)
            .max(0) as usize;
        let mut c = vec![0u16; len];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 || i >= len {
                continue;
            }
            for (j, &b) in rhs.c.iter().enumerate().take(len - i) {
                if b != 0 {
                    c[i + j] = f.add(c[i + j], f.mul(a, b));
                }
            }
        }
        Self::build(&self.field, lo, c, prec)
    }
    fn from_int(&self, k: i64) -> Self {
        let x = self.field.coeff_field().from_int(k);
        Self::build(&self.field, 0, vec![x], EXACT)
    }
    fn try_inverse(&self) -> Option<Self> {
        self.inverse().ok()
    }
    fn agrees_with(&self, other: &Self) -> bool {
        let cap = self.prec.min(other.prec);
        self.agreement(other) >= cap
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FiniteField;

    #[test]
    fn embed_examples() {
        let base = FiniteField::of_order(3).unwrap();
        let kinf = LaurentField::k_inf(&base);
        let t = PolyA::theta(&base);
        let x = Laurent::embed(&kinf, &RatK::from_poly(t.clone()), 5);
        assert_eq!(x.lead_exp(), -1);
        assert_eq!(x.coeffs(), &[1]);
        let y = RatK::new(PolyA::one(&base), t.sub(&PolyA::one(&base))).unwrap();
        let ey = Laurent::embed(&kinf, &y, 4);
        assert_eq!(
            (ey.lead_exp(), ey.coeffs(), ey.prec()),
            (1, &[1u16, 1, 1][..], 4)
        );
        let z = Laurent::embed(&kinf, &RatK::zero(&base), 3);
        assert!(z.is_zero_to_precision());
        assert_eq!(z.prec(), 3);
    }

    #[test]
    fn abs_of_theta() {
        let base = FiniteField::of_order(3).unwrap();
        let kinf = LaurentField::k_inf(&base);
        let t = Laurent::embed_poly(&kinf, &PolyA::theta(&base));
        assert_eq!(t.abs_exponent().unwrap(), Ratio::from_integer(1));
        assert_eq!(t.abs_inf().unwrap(), 3.0);
        let l = LaurentField::period_field(&base).unwrap();
        let tl = Laurent::embed_poly(&l, &PolyA::theta(&base));
        assert_eq!(tl.lead_exp(), -2);
        assert_eq!(tl.abs_exponent().unwrap(), Ratio::from_integer(1));
    }

    #[test]
    fn precision_is_pessimistic() {
        let base = FiniteField::of_order(2).unwrap();
        let kinf = LaurentField::k_inf(&base);
        let a = Laurent::from_coeffs(&kinf, -2, vec![1, 1, 0, 1], 5);
        let b = Laurent::from_coeffs(&kinf, 1, vec![1, 1], 4);
        let p = a.mul(&b);
        assert_eq!(p.prec(), (-2 + 4));
        assert_eq!(a.add(&b).prec(), 4);
        let inv = a.inverse().unwrap();
        assert_eq!(inv.prec(), 2 + 7);
        assert!(a.mul(&inv).eq_to(&a.one_like(), 7));
    }

    #[test]
    fn period_field_root_constant() {
        for q in [2u64, 3, 4, 5] {
            let base = FiniteField::of_order(q).unwrap();
            let l = LaurentField::period_field(&base).unwrap();
            let f = l.coeff_field();
            let c = l.root_constant().unwrap();
            assert_eq!(f.pow(c, q - 1), f.neg(1));
            let expect_ext = q % 2 == 1;
            assert_eq!(f.order() as u64 != q, expect_ext);
        }
    }
}
