//! Carlitz factorials D_i, L_i, Γ_{n+1} and their u-deformations.

use std::sync::Arc;

use super::{u_bracket, UPoly};
use crate::algebra::{enumerate_monic, FiniteField, Poly, PolyA, Ring};

/// `D_i = ∏_{j<i} (θ^{r^i} − θ^{r^j})`.
pub fn d_fact(f: &Arc<FiniteField>, i: u32) -> PolyA {
    let t = PolyA::theta(f);
    let ti = t.frobenius(i);
    (0..i).fold(PolyA::one(f), |acc, j| acc.mul(&ti.sub(&t.frobenius(j))))
}

/// `L_i = ∏_{j=1}^{i} (θ − θ^{r^j})`.
pub fn l_fact(f: &Arc<FiniteField>, i: u32) -> PolyA {
    let t = PolyA::theta(f);
    (1..=i).fold(PolyA::one(f), |acc, j| acc.mul(&t.sub(&t.frobenius(j))))
}

/// Base-r digits of n, least significant first.
pub fn digits(n: u64, r: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut m = n;
    while m > 0 {
        out.push(m % r);
        m /= r;
    }
    out
}

/// `Γ_{n+1} = ∏ D_d^{n_d}` over the base-r digits of n.
pub fn carlitz_factorial(f: &Arc<FiniteField>, n: u64) -> PolyA {
    let r = f.order() as u64;
    digits(n, r)
        .iter()
        .enumerate()
        .fold(PolyA::one(f), |acc, (d, &nd)| {
            acc.mul(&d_fact(f, d as u32).pow(nd))
        })
}

/// `D_{u,d} = ∏_{a ∈ A_{+,d}} [a]_u`.
pub fn d_u(f: &Arc<FiniteField>, d: usize) -> UPoly {
    let one = Poly::constant(PolyA::one(f));
    enumerate_monic(f, d).iter().fold(one, |acc, a| {
        mul_sparse(&acc, &u_bracket(a).expect("monic is nonzero"))
    })
}

/// `Γ_{u,n+1} = ∏ D_{u,d}^{n_d}`.
pub fn u_carlitz_factorial(f: &Arc<FiniteField>, n: u64) -> UPoly {
    let r = f.order() as u64;
    let one = Poly::constant(PolyA::one(f));
    digits(n, r).iter().enumerate().fold(one, |acc, (d, &nd)| {
        if nd == 0 {
            acc
        } else {
            acc.mul(&d_u(f, d).pow(nd))
        }
    })
}

/// Product skipping the zero coefficients of `b`; brackets have at most deg a + 1 terms.
pub fn mul_sparse(a: &UPoly, b: &UPoly) -> UPoly {
    let zero = a.zero_elem().clone();
    if a.coeffs().is_empty() || b.coeffs().is_empty() {
        return Poly::zero(&zero);
    }
    let mut v = vec![zero.clone(); a.coeffs().len() + b.coeffs().len() - 1];
    for (j, bj) in b.coeffs().iter().enumerate() {
        if bj.is_zero() {
            continue;
        }
        for (i, ai) in a.coeffs().iter().enumerate() {
            if !ai.is_zero() {
                v[i + j] = v[i + j].add(&ai.mul(bj));
            }
        }
    }
    Poly::new(&zero, v)
}
