//! The r-shuffle algebra: 𝔽_p-linear combinations of words x_{s_1}⋯x_{s_m}
//! with Shi's recursive product.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

use serde_json::json;

use crate::algebra::Ring;
use crate::error::{Error, Result};
use crate::harmonic::Index;

/// A word in the letters x_k, k ≥ 1; the empty word is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<i64>);

impl Word {
    pub fn new(letters: impl Into<Vec<i64>>) -> Result<Self> {
        let v = letters.into();
        if let Some(&bad) = v.iter().find(|&&k| k < 1) {
            return Err(Error::Precondition(format!(
                "word letter x_{bad} is not positive"
            )));
        }
        Ok(Word(v))
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_index(s: &Index) -> Result<Self> {
        Word::new(s.entries().to_vec())
    }

    pub fn to_index(&self) -> Index {
        Index::new(self.0.clone())
    }

    pub fn letters(&self) -> &[i64] {
        &self.0
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn weight(&self) -> i64 {
        self.0.iter().sum()
    }

    fn split_first(&self) -> Option<(i64, Word)> {
        self.0
            .split_first()
            .map(|(&a, rest)| (a, Word(rest.to_vec())))
    }

    fn prepend(&self, k: i64) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(k);
        v.extend_from_slice(&self.0);
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|k| format!("x{k}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Σ c_w·w with c_w ∈ 𝔽_p nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ShuffleElem {
    p: u32,
    terms: BTreeMap<Word, u32>,
}

impl ShuffleElem {
    pub fn zero(p: u32) -> Self {
        ShuffleElem {
            p,
            terms: BTreeMap::new(),
        }
    }

    pub fn word(p: u32, w: Word) -> Self {
        Self::term(p, w, 1)
    }

    pub fn one(p: u32) -> Self {
        Self::word(p, Word::empty())
    }

    pub fn term(p: u32, w: Word, c: i64) -> Self {
        let mut x = Self::zero(p);
        x.add_term(w, c);
        x
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, u32)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn coeff(&self, w: &Word) -> u32 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Word, c: i64) {
        let c = c.rem_euclid(self.p as i64) as u32;
        if c == 0 {
            return;
        }
        let new = (self.coeff(&w) + c) % self.p;
        if new == 0 {
            self.terms.remove(&w);
        } else {
            self.terms.insert(w, new);
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in rhs.terms() {
            out.add_term(w.clone(), c as i64);
        }
        out
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut out = Self::zero(self.p);
        for (w, c) in self.terms() {
            out.add_term(w.clone(), c as i64 * k);
        }
        out
    }

    /// x_k·(self): prepend a letter to every word.
    pub fn left_mul_letter(&self, k: i64) -> Self {
        ShuffleElem {
            p: self.p,
            terms: self.terms.iter().map(|(w, &c)| (w.prepend(k), c)).collect(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!(self
            .terms()
            .map(|(w, c)| json!({"word": w.letters(), "coeff": c}))
            .collect::<Vec<_>>())
    }
}

impl fmt::Display for ShuffleElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(w, c)| {
                if c == 1 {
                    w.to_string()
                } else {
                    format!("{c}·{w}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// C(n, k) mod p by Lucas' theorem; zero when k > n or either is negative.
pub fn binom_mod_p(n: i64, k: i64, p: u32) -> u32 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let p64 = p as u64;
    let (mut n, mut k) = (n as u64, k as u64);
    let mut acc = 1u64;
    while k > 0 || n > 0 {
        let (ni, ki) = (n % p64, k % p64);
        if ki > ni {
            return 0;
        }
        let mut c = 1u64;
        for t in 0..ki {
            c = c * ((ni - t) % p64) % p64;
        }
        let mut den = 1u64;
        for t in 1..=ki {
            den = den * t % p64;
        }
        c = c * pow_mod(den, p64 - 2, p64) % p64;
        acc = acc * c % p64;
        n /= p64;
        k /= p64;
    }
    acc as u32
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

/// The generalized binomial C(−s, n) = (−1)^n C(s+n−1, n) mod p, for s ≥ 1 or n = 0.
pub fn binom_neg_mod_p(s: i64, n: i64, p: u32) -> u32 {
    if n == 0 {
        return 1 % p;
    }
    if s < 0 {
        // C(−s, n) with −s ≥ 1 is an ordinary binomial.
        return binom_mod_p(-s, n, p);
    }
    let c = binom_mod_p(s + n - 1, n, p);
    if n % 2 == 1 {
        (p - c) % p
    } else {
        c
    }
}

/// Δ^{i,j}_{r1,s1} ∈ 𝔽_p.
pub fn delta(r: u64, p: u32, r1: i64, s1: i64, i: i64, j: i64) -> Result<u32> {
    if r1 < 1 || s1 < 1 || i < 1 || j < 1 {
        return Err(Error::Precondition(format!(
            "Δ needs positive arguments, got ({r1},{s1};{i},{j})"
        )));
    }
    if i + j != r1 + s1 {
        return Err(Error::IndexMismatch(format!("{i} + {j} ≠ {r1} + {s1}")));
    }
    if j % (r as i64 - 1) != 0 {
        return Ok(0);
    }
    let sign = |e: i64, c: u32| if e % 2 == 1 { (p - c) % p } else { c };
    let a = sign(r1 - 1, binom_mod_p(j - 1, r1 - 1, p));
    let b = sign(s1 - 1, binom_mod_p(j - 1, s1 - 1, p));
    Ok((a + b) % p)
}

/// The product ∗ for a fixed r, memoized on word pairs.
pub struct ShuffleAlgebra {
    r: u64,
    p: u32,
    memo: Mutex<HashMap<(Word, Word), ShuffleElem>>,
}

impl ShuffleAlgebra {
    pub fn new(r: u64, p: u32) -> Self {
        ShuffleAlgebra {
            r,
            p,
            memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn delta(&self, r1: i64, s1: i64, i: i64, j: i64) -> Result<u32> {
        delta(self.r, self.p, r1, s1, i, j)
    }

    pub fn word(&self, letters: &[i64]) -> Result<ShuffleElem> {
        Ok(ShuffleElem::word(self.p, Word::new(letters.to_vec())?))
    }

    /// x_𝐫 ∗ x_𝐬 for two words.
    pub fn product_words(&self, a: &Word, b: &Word) -> ShuffleElem {
        if a.depth() == 0 {
            return ShuffleElem::word(self.p, b.clone());
        }
        if b.depth() == 0 {
            return ShuffleElem::word(self.p, a.clone());
        }
        let key = (a.clone(), b.clone());
        if let Some(x) = self.memo.lock().unwrap().get(&key) {
            return x.clone();
        }
        let (r1, ar) = a.split_first().unwrap();
        let (s1, bs) = b.split_first().unwrap();
        let mut out = self.product_words(&ar, b).left_mul_letter(r1);
        out = out.add(&self.product_words(a, &bs).left_mul_letter(s1));
        let inner = self.product_words(&ar, &bs);
        out = out.add(&inner.left_mul_letter(r1 + s1));
        for i in 1..r1 + s1 {
            let j = r1 + s1 - i;
            let c = self.delta(r1, s1, i, j).expect("i + j = r1 + s1");
            if c == 0 {
                continue;
            }
            let tail = self.product(&inner, &ShuffleElem::word(self.p, Word(vec![j])));
            out = out.add(&tail.left_mul_letter(i).scale(c as i64));
        }
        self.memo.lock().unwrap().insert(key, out.clone());
        out
    }

    /// Bilinear extension of ∗.
    pub fn product(&self, x: &ShuffleElem, y: &ShuffleElem) -> ShuffleElem {
        let mut out = ShuffleElem::zero(self.p);
        for (a, ca) in x.terms() {
            for (b, cb) in y.terms() {
                out = out.add(&self.product_words(a, b).scale(ca as i64 * cb as i64));
            }
        }
        out
    }
}

/// Σ c_w·eval(w), with scalars lifted through the prime field of the target.
pub fn realize<T: Ring>(x: &ShuffleElem, one: &T, eval: impl Fn(&Index) -> Result<T>) -> Result<T> {
    let mut acc = one.zero_like();
    for (w, c) in x.terms() {
        let v = if w.depth() == 0 {
            one.clone()
        } else {
            eval(&w.to_index())?
        };
        acc = acc.add(&v.scale_int(c as i64));
    }
    Ok(acc)
}

/// realize(x_𝐫 ∗ x_𝐬) = realize(x_𝐫)·realize(x_𝐬), compared with `Ring::agrees_with`.
pub fn homomorphism_check<T: Ring>(
    alg: &ShuffleAlgebra,
    rr: &Index,
    ss: &Index,
    one: &T,
    eval: impl Fn(&Index) -> Result<T>,
) -> Result<bool> {
    let a = ShuffleElem::word(alg.p(), Word::from_index(rr)?);
    let b = ShuffleElem::word(alg.p(), Word::from_index(ss)?);
    let lhs = realize(&alg.product(&a, &b), one, &eval)?;
    let rhs = realize(&a, one, &eval)?.mul(&realize(&b, one, &eval)?);
    Ok(lhs.agrees_with(&rhs))
}
