//! Dense univariate polynomials over an arbitrary coefficient ring.

use super::ring::Ring;

#[derive(Clone, Debug)]
pub struct Poly<R: Ring> {
    zero: R,
    c: Vec<R>,
}

impl<R: Ring> PartialEq for Poly<R> {
    fn eq(&self, other: &Self) -> bool {
        self.c == other.c
    }
}

impl<R: Ring> Poly<R> {
    pub fn new(zero: &R, mut c: Vec<R>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly {
            zero: zero.zero_like(),
            c,
        }
    }

    pub fn zero(like: &R) -> Self {
        Poly {
            zero: like.zero_like(),
            c: Vec::new(),
        }
    }

    pub fn constant(c: R) -> Self {
        let zero = c.zero_like();
        Self::new(&zero, vec![c])
    }

    /// `c·X^k`.
    pub fn monomial(c: R, k: usize) -> Self {
        let zero = c.zero_like();
        let mut v = vec![zero.clone(); k];
        v.push(c);
        Self::new(&zero, v)
    }

    pub fn x(like: &R) -> Self {
        Self::monomial(like.one_like(), 1)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> R {
        self.c.get(i).cloned().unwrap_or_else(|| self.zero.clone())
    }

    pub fn deg(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lead(&self) -> R {
        self.c.last().cloned().unwrap_or_else(|| self.zero.clone())
    }

    pub fn zero_elem(&self) -> &R {
        &self.zero
    }

    pub fn scale(&self, k: &R) -> Self {
        Self::new(&self.zero, self.c.iter().map(|x| x.mul(k)).collect())
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.c.is_empty() {
            return self.clone();
        }
        let mut v = vec![self.zero.clone(); k];
        v.extend(self.c.iter().cloned());
        Poly {
            zero: self.zero.clone(),
            c: v,
        }
    }

    pub fn map<S: Ring>(&self, zero: &S, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(zero, self.c.iter().map(f).collect())
    }

    /// Horner evaluation at `x`.
    pub fn eval(&self, x: &R) -> R {
        self.c
            .iter()
            .rev()
            .fold(self.zero.clone(), |acc, c| acc.mul(x).add(c))
    }

    /// Horner evaluation in another ring through a coefficient map.
    pub fn eval_in<S: Ring>(&self, x: &S, lift: impl Fn(&R) -> S) -> S {
        let mut acc = x.zero_like();
        for c in self.c.iter().rev() {
            acc = acc.mul(x).add(&lift(c));
        }
        acc
    }

    /// Substitution `self(g(X))`.
    pub fn compose(&self, g: &Self) -> Self {
        let mut acc = Self::zero(&self.zero);
        for c in self.c.iter().rev() {
            acc = acc.mul(g).add(&Self::constant(c.clone()));
        }
        acc
    }

    /// Division by a divisor with unit leading coefficient.
    pub fn divrem(&self, d: &Self) -> Option<(Self, Self)> {
        let dl = d.c.len();
        if dl == 0 {
            return None;
        }
        let inv = d.lead().try_inverse()?;
        if self.c.len() < dl {
            return Some((Self::zero(&self.zero), self.clone()));
        }
        let monic_divisor = inv.is_one();
        let mut r = self.c.clone();
        let mut q = vec![self.zero.clone(); r.len() - dl + 1];
        for k in (0..q.len()).rev() {
            let top = &r[k + dl - 1];
            if top.is_zero() {
                continue;
            }
            let t = if monic_divisor {
                top.clone()
            } else {
                top.mul(&inv)
            };
            for (j, dj) in d.c.iter().enumerate() {
                if !dj.is_zero() {
                    r[k + j] = r[k + j].sub(&t.mul(dj));
                }
            }
            q[k] = t;
        }
        r.truncate(dl - 1);
        Some((Self::new(&self.zero, q), Self::new(&self.zero, r)))
    }

    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.divrem(d)?;
        r.c.is_empty().then_some(q)
    }

    pub fn rem(&self, d: &Self) -> Option<Self> {
        self.divrem(d).map(|(_, r)| r)
    }

    fn combine(&self, rhs: &Self, negate: bool) -> Self {
        let n = self.c.len().max(rhs.c.len());
        let v = (0..n)
            .map(|i| match (self.c.get(i), rhs.c.get(i)) {
                (Some(a), Some(b)) => {
                    if negate {
                        a.sub(b)
                    } else {
                        a.add(b)
                    }
                }
                (Some(a), None) => a.clone(),
                (None, Some(b)) => {
                    if negate {
                        b.neg()
                    } else {
                        b.clone()
                    }
                }
                (None, None) => unreachable!(),
            })
            .collect();
        Self::new(&self.zero, v)
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn zero_like(&self) -> Self {
        Self::zero(&self.zero)
    }
    fn one_like(&self) -> Self {
        Self::constant(self.zero.one_like())
    }
    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        self.combine(rhs, false)
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.combine(rhs, true)
    }
    fn neg(&self) -> Self {
        Poly {
            zero: self.zero.clone(),
            c: self.c.iter().map(|x| x.neg()).collect(),
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.c.is_empty() || rhs.c.is_empty() {
            return self.zero_like();
        }
        let mut v = vec![self.zero.clone(); self.c.len() + rhs.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] = v[i + j].add(&a.mul(b));
                }
            }
        }
        Self::new(&self.zero, v)
    }
    fn from_int(&self, k: i64) -> Self {
        Self::constant(self.zero.from_int(k))
    }
    fn try_inverse(&self) -> Option<Self> {
        if self.c.len() == 1 {
            self.c[0].try_inverse().map(Self::constant)
        } else {
            None
        }
    }
}
