//! The Carlitz module: C_θ = θ + τ and everything built from it.

pub mod bernoulli;
pub mod cyclotomic;
pub mod exp;
pub mod factorial;

use std::sync::Arc;

use crate::algebra::{FiniteField, Poly, PolyA, Ring};
use crate::error::{Error, Result};

pub use bernoulli::{bernoulli_carlitz, degenerate_bernoulli_carlitz};
pub use cyclotomic::carlitz_cyclotomic;
pub use exp::{carlitz_period, exp_c, log_c, torsion_generator};
pub use factorial::{carlitz_factorial, d_fact, d_u, l_fact, u_carlitz_factorial};

/// Polynomials in one variable with coefficients in A.
pub type UPoly = Poly<PolyA>;

/// `[a,0], …, [a,deg a]`, the coefficients of `C_a = Σ [a,i] τ^i`.
pub fn carlitz_coeffs(a: &PolyA) -> Vec<PolyA> {
    let f = a.field();
    let theta = PolyA::theta(f);
    let mut acc: Vec<PolyA> = Vec::new();
    for &c in a.coeffs().iter().rev() {
        let mut next = Vec::with_capacity(acc.len() + 1);
        for i in 0..=acc.len() {
            let mut x = match acc.get(i) {
                Some(prev) => theta.mul(prev),
                None => PolyA::zero(f),
            };
            if i > 0 {
                x = x.add(&acc[i - 1].frobenius(1));
            }
            if i == 0 {
                x = x.add(&PolyA::constant(f, c));
            }
            next.push(x);
        }
        acc = next;
    }
    while acc.last().is_some_and(|x| x.is_zero()) {
        acc.pop();
    }
    acc
}

fn r_of(f: &Arc<FiniteField>) -> usize {
    f.order() as usize
}

/// `C_a(X) = Σ [a,i] X^{r^i}`.
pub fn carlitz_poly(a: &PolyA) -> UPoly {
    let f = a.field();
    let zero = PolyA::zero(f);
    let coeffs = carlitz_coeffs(a);
    let Some(top) = coeffs.len().checked_sub(1) else {
        return Poly::zero(&zero);
    };
    let mut v = vec![zero.clone(); r_of(f).pow(top as u32) + 1];
    for (i, c) in coeffs.into_iter().enumerate() {
        v[r_of(f).pow(i as u32)] = c;
    }
    Poly::new(&zero, v)
}

/// `[a]_u = C_a(u)/u`.
pub fn u_bracket(a: &PolyA) -> Result<UPoly> {
    if a.is_zero() {
        return Err(Error::ZeroInput);
    }
    Ok(bracket_from_coeffs(a.field(), &carlitz_coeffs(a)))
}

pub(crate) fn bracket_from_coeffs(f: &Arc<FiniteField>, coeffs: &[PolyA]) -> UPoly {
    let zero = PolyA::zero(f);
    let top = coeffs.len() - 1;
    let mut v = vec![zero.clone(); r_of(f).pow(top as u32)];
    for (i, c) in coeffs.iter().enumerate() {
        v[r_of(f).pow(i as u32) - 1] = c.clone();
    }
    Poly::new(&zero, v)
}

/// `[a]_u` evaluated at a point of any A-algebra, given the structure map.
pub fn bracket_at<R: Ring>(a: &PolyA, u: &R, lift: impl Fn(&PolyA) -> R) -> Result<R> {
    if a.is_zero() {
        return Err(Error::ZeroInput);
    }
    let coeffs = carlitz_coeffs(a);
    let r = a.field().order() as u64;
    let mut acc = lift(&coeffs[0]);
    let mut pw = u.pow(r - 1);
    let step = pw.clone();
    for (i, c) in coeffs.iter().enumerate().skip(1) {
        if i > 1 {
            // u^{r^i − 1} = (u^{r^{i−1} − 1})^r · u^{r−1}
            pw = pw.pow(r).mul(&step);
        }
        if !c.is_zero() {
            acc = acc.add(&lift(c).mul(&pw));
        }
    }
    Ok(acc)
}

/// `C_a(x)` evaluated in any A-algebra.
pub fn carlitz_eval<R: Ring>(a: &PolyA, x: &R, lift: impl Fn(&PolyA) -> R) -> R {
    let r = a.field().order() as u64;
    let mut acc = x.zero_like();
    let mut pw = x.clone();
    for (i, c) in carlitz_coeffs(a).iter().enumerate() {
        if i > 0 {
            pw = pw.pow(r);
        }
        if !c.is_zero() {
            acc = acc.add(&lift(c).mul(&pw));
        }
    }
    acc
}
