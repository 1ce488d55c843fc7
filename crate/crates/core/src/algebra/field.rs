//! Finite fields 𝔽_{p^e} with table-driven arithmetic.
//!
//! Elements are encoded as integers `Σ c_i p^i` where `c_i` are the base-p
//! digits of the representative polynomial modulo the defining modulus.

use std::fmt;
use std::sync::Arc;

use super::ring::Ring;
use crate::error::{Error, Result};

/// Largest field order with full operation tables.
pub const MAX_ORDER: u32 = 1024;

pub struct FiniteField {
    p: u32,
    e: u32,
    q: u32,
    modulus: Vec<u32>,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}; {:?})", self.p, self.e, self.modulus)
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.modulus == other.modulus
    }
}
impl Eq for FiniteField {}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits a prime power into `(p, e)`.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let (mut m, mut e) = (q, 0);
    while m % p == 0 {
        m /= p;
        e += 1;
    }
    (m == 1).then_some((p as u32, e))
}

// Small dense polynomials over 𝔽_p used only while building tables.
fn fp_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    let lead_inv = fp_inv(m[dm], p);
    while r.len() > dm {
        let top = *r.last().unwrap();
        if top != 0 {
            let f = top * lead_inv % p;
            let shift = r.len() - 1 - dm;
            for (i, &mi) in m.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - f * mi % p) % p;
            }
        }
        r.pop();
    }
    while r.last() == Some(&0) {
        r.pop();
    }
    r
}

fn fp_inv(a: u32, p: u32) -> u32 {
    let mut acc = 1u64;
    let (mut b, mut e) = (a as u64 % p as u64, p as u64 - 2);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p as u64;
        }
        b = b * b % p as u64;
        e >>= 1;
    }
    acc as u32
}

fn digits_of(mut x: u32, p: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(x % p);
        x /= p;
    }
    out
}

fn is_irreducible_fp(m: &[u32], p: u32) -> bool {
    let d = m.len() - 1;
    if d <= 1 {
        return d == 1;
    }
    for k in 1..=d / 2 {
        for idx in 0..p.pow(k as u32) {
            let mut f = digits_of(idx, p, k);
            f.push(1);
            if fp_rem(m, &f, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Lexicographically smallest monic irreducible of degree `e` over 𝔽_p
/// (low-order coefficients vary fastest).
pub fn smallest_irreducible(p: u32, e: u32) -> Vec<u32> {
    for idx in 0..p.pow(e) {
        let mut m = digits_of(idx, p, e as usize);
        m.push(1);
        if is_irreducible_fp(&m, p) {
            return m;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

impl FiniteField {
    /// 𝔽_{p^e} with the smallest irreducible modulus.
    pub fn new(p: u32, e: u32) -> Result<Arc<Self>> {
        if !is_prime(p as u64) || e == 0 {
            return Err(Error::InvalidField(format!("p = {p}, e = {e}")));
        }
        Self::with_modulus(p, smallest_irreducible(p, e))
    }

    pub fn of_order(q: u64) -> Result<Arc<Self>> {
        let (p, e) = prime_power(q)
            .ok_or_else(|| Error::InvalidField(format!("{q} is not a prime power")))?;
        Self::new(p, e)
    }

    pub fn with_modulus(p: u32, modulus: Vec<u32>) -> Result<Arc<Self>> {
        if !is_prime(p as u64) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        let e = modulus.len().saturating_sub(1) as u32;
        if e == 0 || *modulus.last().unwrap() != 1 || modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidField(
                "modulus must be monic of positive degree".into(),
            ));
        }
        if !is_irreducible_fp(&modulus, p) {
            return Err(Error::InvalidField("modulus is reducible".into()));
        }
        let q = (p as u64).pow(e);
        if q > MAX_ORDER as u64 {
            return Err(Error::InvalidField(format!(
                "field order {q} exceeds {MAX_ORDER}"
            )));
        }
        let q = q as u32;
        let n = q as usize;
        let el = e as usize;
        let digits: Vec<Vec<u32>> = (0..q).map(|x| digits_of(x, p, el)).collect();
        let encode = |d: &[u32]| d.iter().rev().fold(0u32, |acc, &c| acc * p + c);
        let mut add = vec![0u16; n * n];
        let mut mul = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                let s: Vec<u32> = (0..el).map(|i| (digits[a][i] + digits[b][i]) % p).collect();
                add[a * n + b] = encode(&s) as u16;
                if b < a {
                    mul[a * n + b] = mul[b * n + a];
                    continue;
                }
                let mut prod = vec![0u32; 2 * el - 1];
                for i in 0..el {
                    for j in 0..el {
                        prod[i + j] = (prod[i + j] + digits[a][i] * digits[b][j]) % p;
                    }
                }
                let mut red = fp_rem(&prod, &modulus, p);
                red.resize(el, 0);
                mul[a * n + b] = encode(&red) as u16;
            }
        }
        let mut neg = vec![0u16; n];
        let mut inv = vec![0u16; n];
        for a in 0..n {
            neg[a] = (0..n).find(|&b| add[a * n + b] == 0).unwrap() as u16;
            if a != 0 {
                inv[a] = (1..n).find(|&b| mul[a * n + b] == 1).unwrap() as u16;
            }
        }
        Ok(Arc::new(FiniteField {
            p,
            e,
            q,
            modulus,
            add,
            mul,
            neg,
            inv,
        }))
    }

    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn e(&self) -> u32 {
        self.e
    }
    pub fn order(&self) -> u32 {
        self.q
    }
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }
    pub fn is_prime_field(&self) -> bool {
        self.e == 1
    }

    #[inline]
    pub fn add(&self, a: u16, b: u16) -> u16 {
        self.add[a as usize * self.q as usize + b as usize]
    }
    #[inline]
    pub fn sub(&self, a: u16, b: u16) -> u16 {
        self.add(a, self.neg[b as usize])
    }
    #[inline]
    pub fn neg(&self, a: u16) -> u16 {
        self.neg[a as usize]
    }
    #[inline]
    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.mul[a as usize * self.q as usize + b as usize]
    }
    pub fn inv(&self, a: u16) -> Option<u16> {
        (a != 0).then(|| self.inv[a as usize])
    }
    pub fn pow(&self, a: u16, mut e: u64) -> u16 {
        let (mut base, mut acc) = (a, 1u16);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Image of an integer in the prime field.
    pub fn from_int(&self, k: i64) -> u16 {
        k.rem_euclid(self.p as i64) as u16
    }

    pub fn digits(&self, a: u16) -> Vec<u32> {
        digits_of(a as u32, self.p, self.e as usize)
    }

    pub fn from_digits(&self, d: &[u32]) -> Result<u16> {
        if d.len() > self.e as usize || d.iter().any(|&c| c >= self.p) {
            return Err(Error::InvalidField(format!("bad digit vector {d:?}")));
        }
        Ok(d.iter().rev().fold(0u32, |acc, &c| acc * self.p + c) as u16)
    }

    pub fn elements(&self) -> impl Iterator<Item = u16> {
        0..self.q as u16
    }

    /// Base-p digit string, lowest digit first.
    pub fn digit_string(&self, a: u16) -> String {
        self.digits(a)
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join("")
    }

    pub fn elem(self: &Arc<Self>, idx: u16) -> FfElem {
        FfElem {
            field: self.clone(),
            idx,
        }
    }

    /// Embedding of `small` into `self` (the smallest root of the modulus of
    /// `small` chosen as the image of its generator).
    pub fn embedding_from(&self, small: &FiniteField) -> Result<Vec<u16>> {
        if small.p != self.p || !self.e.is_multiple_of(small.e) {
            return Err(Error::InvalidField(
                "no embedding between these fields".into(),
            ));
        }
        let eval = |x: u16, poly: &[u32]| {
            poly.iter()
                .rev()
                .fold(0u16, |acc, &c| self.add(self.mul(acc, x), c as u16))
        };
        let gen = if small.e == 1 {
            0
        } else {
            self.elements()
                .find(|&y| eval(y, &small.modulus) == 0)
                .ok_or_else(|| Error::InvalidField("modulus has no root".into()))?
        };
        Ok(small
            .elements()
            .map(|a| {
                let d = small.digits(a);
                if small.e == 1 {
                    d[0] as u16
                } else {
                    d.iter()
                        .rev()
                        .fold(0u16, |acc, &c| self.add(self.mul(acc, gen), c as u16))
                }
            })
            .collect())
    }
}

/// A field element bundled with its field.
#[derive(Clone)]
pub struct FfElem {
    pub field: Arc<FiniteField>,
    pub idx: u16,
}

impl fmt::Debug for FfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.idx)
    }
}

impl PartialEq for FfElem {
    fn eq(&self, other: &Self) -> bool {
        self.idx == other.idx
            && (Arc::ptr_eq(&self.field, &other.field) || *self.field == *other.field)
    }
}
impl Eq for FfElem {}

impl Ring for FfElem {
    fn zero_like(&self) -> Self {
        self.field.elem(0)
    }
    fn one_like(&self) -> Self {
        self.field.elem(1)
    }
    fn is_zero(&self) -> bool {
        self.idx == 0
    }
    fn add(&self, rhs: &Self) -> Self {
        self.field.elem(self.field.add(self.idx, rhs.idx))
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.field.elem(self.field.sub(self.idx, rhs.idx))
    }
    fn neg(&self) -> Self {
        self.field.elem(self.field.neg(self.idx))
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.field.elem(self.field.mul(self.idx, rhs.idx))
    }
    fn from_int(&self, k: i64) -> Self {
        self.field.elem(self.field.from_int(k))
    }
    fn try_inverse(&self) -> Option<Self> {
        self.field.inv(self.idx).map(|i| self.field.elem(i))
    }
}
