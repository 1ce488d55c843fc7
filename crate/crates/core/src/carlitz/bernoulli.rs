//! Bernoulli–Carlitz numbers and their degenerate versions.

use std::sync::Arc;

use super::carlitz_coeffs;
use super::factorial::{carlitz_factorial, d_fact};
use crate::algebra::{FiniteField, PolyA, PowerSeries, RatK, Ring};
use crate::error::{Error, Result};

fn inverse_coeff(f: &Arc<FiniteField>, n: u64, terms: impl Iterator<Item = (u64, RatK)>) -> RatK {
    let zero = RatK::zero(f);
    let order = n as usize + 1;
    let mut c = vec![zero.clone(); order];
    for (k, x) in terms {
        if (k as usize) < order {
            c[k as usize] = x;
        }
    }
    let s = PowerSeries::new(&zero, order, c);
    let inv = s.try_inverse().expect("constant term 1");
    inv.coeff(n as usize)
        .mul(&RatK::from_poly(carlitz_factorial(f, n)))
}

/// `BC_n` from `X/exp_C(X) = Σ BC_n/Γ_{n+1} X^n`.
pub fn bernoulli_carlitz(f: &Arc<FiniteField>, n: u64) -> RatK {
    let r = f.order() as u64;
    let terms = (0u32..).take_while(|&i| r.pow(i) - 1 <= n).map(|i| {
        (
            r.pow(i) - 1,
            RatK::new(PolyA::one(f), d_fact(f, i)).unwrap(),
        )
    });
    inverse_coeff(f, n, terms)
}

/// `dBC_n(a)` from `X/C_a(X/a) = Σ dBC_n(a)/Γ_{n+1} X^n`.
pub fn degenerate_bernoulli_carlitz(n: u64, a: &PolyA) -> Result<RatK> {
    if a.is_zero() {
        return Err(Error::ZeroInput);
    }
    let f = a.field();
    let r = f.order() as u64;
    let terms = carlitz_coeffs(a)
        .into_iter()
        .enumerate()
        .take_while(|(i, _)| r.pow(*i as u32) - 1 <= n)
        .map(|(i, c)| {
            let k = r.pow(i as u32);
            (k - 1, RatK::new(c, a.pow(k)).unwrap())
        })
        .collect::<Vec<_>>();
    Ok(inverse_coeff(f, n, terms.into_iter()))
}
