//! Dense polynomials in θ over 𝔽_r: the ring A.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use super::field::FiniteField;
use super::ring::Ring;

#[derive(Clone)]
pub struct PolyA {
    field: Arc<FiniteField>,
    c: Vec<u16>,
}

impl PolyA {
    pub fn from_coeffs(field: &Arc<FiniteField>, mut c: Vec<u16>) -> Self {
        while c.last() == Some(&0) {
            c.pop();
        }
        PolyA {
            field: field.clone(),
            c,
        }
    }

    pub fn zero(field: &Arc<FiniteField>) -> Self {
        PolyA {
            field: field.clone(),
            c: Vec::new(),
        }
    }

    pub fn one(field: &Arc<FiniteField>) -> Self {
        Self::constant(field, 1)
    }

    pub fn constant(field: &Arc<FiniteField>, c: u16) -> Self {
        Self::from_coeffs(field, vec![c])
    }

    pub fn theta(field: &Arc<FiniteField>) -> Self {
        Self::monomial(field, 1, 1)
    }

    pub fn monomial(field: &Arc<FiniteField>, c: u16, k: usize) -> Self {
        let mut v = vec![0u16; k + 1];
        v[k] = c;
        Self::from_coeffs(field, v)
    }

    /// `θ^k − θ^l` style binomials appear everywhere in the factorial tables.
    pub fn theta_pow(field: &Arc<FiniteField>, k: usize) -> Self {
        Self::monomial(field, 1, k)
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[u16] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> u16 {
        self.c.get(i).copied().unwrap_or(0)
    }

    pub fn deg(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to −1.
    pub fn degree(&self) -> i64 {
        self.c.len() as i64 - 1
    }

    pub fn lead(&self) -> u16 {
        self.c.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    pub fn monic(&self) -> Self {
        match self.field.inv(self.lead()) {
            Some(i) if i != 1 => self.scale(i),
            _ => self.clone(),
        }
    }

    pub fn scale(&self, k: u16) -> Self {
        if k == 0 {
            return Self::zero(&self.field);
        }
        let f = &self.field;
        PolyA {
            field: f.clone(),
            c: self.c.iter().map(|&x| f.mul(x, k)).collect(),
        }
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.c.is_empty() {
            return self.clone();
        }
        let mut v = vec![0u16; k];
        v.extend_from_slice(&self.c);
        PolyA {
            field: self.field.clone(),
            c: v,
        }
    }

    pub fn eval(&self, x: u16) -> u16 {
        let f = &self.field;
        self.c
            .iter()
            .rev()
            .fold(0u16, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// `self^(r^k)`: coefficients lie in 𝔽_r, so raising to r-th powers only
    /// spreads the exponents.
    pub fn frobenius(&self, k: u32) -> Self {
        if self.c.len() <= 1 || k == 0 {
            return self.clone();
        }
        let step = (self.field.order() as usize).pow(k);
        let mut v = vec![0u16; (self.c.len() - 1) * step + 1];
        for (i, &c) in self.c.iter().enumerate() {
            v[i * step] = c;
        }
        PolyA {
            field: self.field.clone(),
            c: v,
        }
    }

    fn add_into(&self, rhs: &Self, negate: bool) -> Self {
        let f = &self.field;
        let n = self.c.len().max(rhs.c.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeff(i);
            let b = rhs.coeff(i);
            v.push(if negate { f.sub(a, b) } else { f.add(a, b) });
        }
        Self::from_coeffs(f, v)
    }

    pub fn mul_poly(&self, rhs: &Self) -> Self {
        if self.c.is_empty() || rhs.c.is_empty() {
            return Self::zero(&self.field);
        }
        let f = &self.field;
        if self.c.len() == 1 {
            return rhs.scale(self.c[0]);
        }
        if rhs.c.len() == 1 {
            return self.scale(rhs.c[0]);
        }
        let n = self.c.len() + rhs.c.len() - 1;
        let v = if f.is_prime_field() {
            prime_convolve(&self.c, &rhs.c, f.p())
        } else {
            let mut v = vec![0u16; n];
            for (i, &a) in self.c.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                for (j, &b) in rhs.c.iter().enumerate() {
                    v[i + j] = f.add(v[i + j], f.mul(a, b));
                }
            }
            v
        };
        Self::from_coeffs(f, v)
    }

    pub fn square(&self) -> Self {
        self.mul_poly(self)
    }

    /// Euclidean division by a nonzero divisor.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.c.is_empty(), "division by the zero polynomial");
        let f = &self.field;
        if self.c.len() < d.c.len() {
            return (Self::zero(f), self.clone());
        }
        let dl = d.c.len();
        let inv = f.inv(d.lead()).unwrap();
        let mut r = self.c.clone();
        let mut q = vec![0u16; r.len() - dl + 1];
        for k in (0..q.len()).rev() {
            let top = r[k + dl - 1];
            if top == 0 {
                continue;
            }
            let t = f.mul(top, inv);
            q[k] = t;
            for (j, &dj) in d.c.iter().enumerate() {
                if dj != 0 {
                    r[k + j] = f.sub(r[k + j], f.mul(t, dj));
                }
            }
        }
        r.truncate(dl - 1);
        (Self::from_coeffs(f, q), Self::from_coeffs(f, r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    /// Exact quotient, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.divrem(d);
        r.c.is_empty().then_some(q)
    }

    /// Monic greatest common divisor (zero when both inputs vanish).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.c.is_empty() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s·self + t·other = g`, g monic.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let f = &self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(f), Self::zero(f));
        let (mut t0, mut t1) = (Self::zero(f), Self::one(f));
        while !r1.c.is_empty() {
            let (q, r) = r0.divrem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul_poly(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul_poly(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        match f.inv(r0.lead()) {
            Some(i) => (r0.scale(i), s0.scale(i), t0.scale(i)),
            None => (r0, s0, t0),
        }
    }

    /// Inverse modulo `m`, if it exists.
    pub fn inv_mod(&self, m: &Self) -> Option<Self> {
        let (g, s, _) = self.rem(m).ext_gcd(m);
        (g.c == [1]).then(|| s.rem(m))
    }

    /// Position of a monic polynomial in the enumeration of its degree.
    pub fn monic_index(&self) -> u64 {
        let q = self.field.order() as u64;
        self.c[..self.c.len().saturating_sub(1)]
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * q + c as u64)
    }

    /// Coefficients from θ^0 upward as base-p digit strings.
    pub fn digit_strings(&self) -> Vec<String> {
        self.c.iter().map(|&x| self.field.digit_string(x)).collect()
    }

    pub fn to_digit_arrays(&self) -> Vec<Vec<u32>> {
        self.c.iter().map(|&x| self.field.digits(x)).collect()
    }
}

fn prime_convolve(a: &[u16], b: &[u16], p: u32) -> Vec<u16> {
    let n = a.len() + b.len() - 1;
    let (short, long) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let bound = (p as u64 - 1).pow(2) * short.len() as u64;
    if bound < u32::MAX as u64 {
        let mut acc = vec![0u32; n];
        for (i, &x) in short.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let x = x as u32;
            for (slot, &y) in acc[i..i + long.len()].iter_mut().zip(long) {
                *slot += x * y as u32;
            }
        }
        acc.into_iter().map(|s| (s % p) as u16).collect()
    } else {
        let mut acc = vec![0u64; n];
        for (i, &x) in short.iter().enumerate() {
            let x = x as u64;
            for (slot, &y) in acc[i..i + long.len()].iter_mut().zip(long) {
                *slot += x * y as u64;
            }
        }
        acc.into_iter().map(|s| (s % p as u64) as u16).collect()
    }
}

impl PartialEq for PolyA {
    fn eq(&self, other: &Self) -> bool {
        self.c == other.c
    }
}
impl Eq for PolyA {}

impl Hash for PolyA {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.c.hash(state);
    }
}

impl PartialOrd for PolyA {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Degree first, then coefficients from the top: the enumeration order.
impl Ord for PolyA {
    fn cmp(&self, other: &Self) -> Ordering {
        self.c
            .len()
            .cmp(&other.c.len())
            .then_with(|| self.c.iter().rev().cmp(other.c.iter().rev()))
    }
}

impl fmt::Debug for PolyA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PolyA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_empty() {
            return write!(f, "0");
        }
        let fld = &self.field;
        let coef = |c: u16| {
            if fld.is_prime_field() {
                c.to_string()
            } else {
                format!("[{}]", fld.digit_string(c))
            }
        };
        let mut first = true;
        for (i, &c) in self.c.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let cs = if c == 1 && i > 0 {
                String::new()
            } else {
                coef(c)
            };
            match i {
                0 => write!(f, "{}", coef(c))?,
                1 => write!(f, "{cs}θ")?,
                _ => write!(f, "{cs}θ^{i}")?,
            }
        }
        Ok(())
    }
}

impl Ring for PolyA {
    fn zero_like(&self) -> Self {
        Self::zero(&self.field)
    }
    fn one_like(&self) -> Self {
        Self::one(&self.field)
    }
    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        self.add_into(rhs, false)
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add_into(rhs, true)
    }
    fn neg(&self) -> Self {
        let f = &self.field;
        PolyA {
            field: f.clone(),
            c: self.c.iter().map(|&x| f.neg(x)).collect(),
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.mul_poly(rhs)
    }
    fn from_int(&self, k: i64) -> Self {
        Self::constant(&self.field, self.field.from_int(k))
    }
    fn try_inverse(&self) -> Option<Self> {
        if self.c.len() == 1 {
            self.field
                .inv(self.c[0])
                .map(|i| Self::constant(&self.field, i))
        } else {
            None
        }
    }
    fn is_one(&self) -> bool {
        self.c == [1]
    }
}
