//! Power sums and (truncated) multiple harmonic sums over any bracket.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::bracket::Bracket;
use super::index::Index;
use crate::algebra::{enumerate_monic, PolyA, Ring};
use crate::error::Result;

/// Bracket images per (degree, inverted).
type ImageCache<T> = HashMap<(usize, bool), Arc<Vec<T>>>;

/// Harmonic sums for one bracket, with per-degree caches of images and
/// power sums. Safe to share across threads.
pub struct Harmonic<B: Bracket> {
    b: B,
    images: Mutex<ImageCache<B::T>>,
    sums: Mutex<HashMap<(usize, i64), B::T>>,
}

impl<B: Bracket> Harmonic<B> {
    pub fn new(b: B) -> Self {
        Harmonic {
            b,
            images: Mutex::new(HashMap::new()),
            sums: Mutex::new(HashMap::new()),
        }
    }

    pub fn bracket(&self) -> &B {
        &self.b
    }

    fn images(&self, d: usize, inverse: bool) -> Result<Arc<Vec<B::T>>> {
        if let Some(v) = self.images.lock().unwrap().get(&(d, inverse)) {
            return Ok(v.clone());
        }
        let monics: Vec<PolyA> = enumerate_monic(self.b.field(), d);
        let v = monics
            .iter()
            .map(|a| {
                if inverse {
                    self.b.inverse_image(a)
                } else {
                    self.b.image(a)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        let v = Arc::new(v);
        self.images.lock().unwrap().insert((d, inverse), v.clone());
        Ok(v)
    }

    /// H_d(s) = Σ_{a ∈ A_{+,d}} [a]^{−s}.
    pub fn power_sum(&self, d: usize, s: i64) -> Result<B::T> {
        if let Some(v) = self.sums.lock().unwrap().get(&(d, s)) {
            return Ok(v.clone());
        }
        let v = match self.b.power_sum_shortcut(d, s) {
            Some(v) => v?,
            None => {
                let imgs = self.images(d, s > 0)?;
                let e = s.unsigned_abs();
                let zero = self.b.one().zero_like();
                imgs.iter().fold(zero, |acc, x| acc.add(&x.pow(e)))
            }
        };
        self.sums.lock().unwrap().insert((d, s), v.clone());
        Ok(v)
    }

    /// Σ over monic a_1, …, a_m with deg a_1 = d > deg a_2 > … > deg a_m ≥ 0.
    /// The empty index gives δ_{d,0}.
    pub fn h(&self, d: usize, s: &Index) -> Result<B::T> {
        let one = self.b.one();
        let Some((&s1, _)) = s.entries().split_first() else {
            return Ok(if d == 0 { one } else { one.zero_like() });
        };
        let lt = self.h_lt_table(d, &s.tail())?;
        Ok(self.power_sum(d, s1)?.mul(&lt[d]))
    }

    /// H_{<d}(𝐬) = Σ_{e<d} H_e(𝐬), with H_{<d}(∅) = 1 for every d.
    pub fn h_lt(&self, d: usize, s: &Index) -> Result<B::T> {
        Ok(self.h_lt_table(d, s)?.swap_remove(d))
    }

    /// `[H_{<0}(𝐬), …, H_{<dmax}(𝐬)]` by the recursion
    /// G_k(e+1) = G_k(e) + H_e(s_k)·G_{k+1}(e).
    pub fn h_lt_table(&self, dmax: usize, s: &Index) -> Result<Vec<B::T>> {
        let one = self.b.one();
        let mut g = vec![one.clone(); dmax + 1];
        for &sk in s.entries().iter().rev() {
            let mut next = Vec::with_capacity(dmax + 1);
            next.push(one.zero_like());
            for e in 0..dmax {
                let term = self.power_sum(e, sk)?.mul(&g[e]);
                next.push(next[e].add(&term));
            }
            g = next;
        }
        Ok(g)
    }

    /// S_{<d}(𝐬) with the convention S_{<d}(∅) = 1 for d ≥ 1 and 0 for d ≤ 0.
    pub fn truncated(&self, d: usize, s: &Index) -> Result<B::T> {
        if s.is_empty() && d == 0 {
            return Ok(self.b.one().zero_like());
        }
        self.h_lt(d, s)
    }
}

/// The same sums as chains of explicit monic tuples; exponential, for tests.
pub fn h_lt_naive<B: Bracket>(b: &B, d: usize, s: &Index) -> Result<B::T> {
    fn rec<B: Bracket>(b: &B, bound: usize, s: &[i64]) -> Result<B::T> {
        let one = b.one();
        let Some((&s1, rest)) = s.split_first() else {
            return Ok(one);
        };
        let mut acc = one.zero_like();
        for e in 0..bound {
            let inner = rec(b, e, rest)?;
            if inner.is_zero() {
                continue;
            }
            for a in enumerate_monic(b.field(), e) {
                let x = if s1 > 0 {
                    b.inverse_image(&a)?.pow(s1 as u64)
                } else {
                    b.image(&a)?.pow((-s1) as u64)
                };
                acc = acc.add(&x.mul(&inner));
            }
        }
        Ok(acc)
    }
    rec(b, d, s.entries())
}
