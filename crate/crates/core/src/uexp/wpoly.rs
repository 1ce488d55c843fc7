//! The polynomials P_i and W_n^{(s)} governing the u-expansion of [a]_u^{−s}.

use std::sync::Arc;

use crate::algebra::{FiniteField, Poly, PolyA, PowerSeries, RatK, Ring};
use crate::carlitz::{d_fact, l_fact};
use crate::harmonic::{Bracket, UFormalBracket};
use crate::shuffle::binom_neg_mod_p;

/// Polynomials in X over K.
pub type KPoly = Poly<RatK>;

/// P_i(X) = Σ_{j=0}^{i} X^{r^j − 1} / (D_j L_{i−j}^{r^j}).
pub fn p_poly(f: &Arc<FiniteField>, i: u32) -> KPoly {
    let r = f.order() as u64;
    let zero = RatK::zero(f);
    let mut c = vec![zero.clone(); r.pow(i) as usize];
    for j in 0..=i {
        let den = d_fact(f, j).mul(&l_fact(f, i - j).pow(r.pow(j)));
        c[r.pow(j) as usize - 1] = RatK::new(PolyA::one(f), den).unwrap();
    }
    Poly::new(&zero, c)
}

/// W_n^{(s)} with its coefficients c_{n,i}, 0 ≤ i ≤ n(r−1).
#[derive(Clone, Debug, PartialEq)]
pub struct WPoly {
    pub n: usize,
    pub s: i64,
    pub poly: KPoly,
}

impl WPoly {
    pub fn coeff(&self, i: usize) -> RatK {
        self.poly.coeff(i)
    }

    /// `(i, c_{n,i})` for the nonzero coefficients.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &RatK)> {
        self.poly
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
    }
}

/// Part sizes (r^i − 1)/(r − 1) ≤ n, paired with i.
fn parts(r: u64, n: usize) -> Vec<(u32, usize)> {
    (1u32..)
        .map(|i| (i, ((r.pow(i) - 1) / (r - 1)) as usize))
        .take_while(|&(_, p)| p <= n)
        .collect()
}

/// W_n^{(s)}(X) = Σ_k C(−s, k) Σ_{compositions} Π P_{i_ℓ}(X), with W_0 = 1.
pub fn w_poly(f: &Arc<FiniteField>, n: usize, s: i64) -> WPoly {
    let r = f.order() as u64;
    let zero = RatK::zero(f);
    let one = Poly::constant(RatK::one(f));
    if n == 0 {
        return WPoly { n, s, poly: one };
    }
    let table = parts(r, n);
    let ps: Vec<KPoly> = table.iter().map(|&(i, _)| p_poly(f, i)).collect();
    // q[k][m]: sum over compositions of m into k parts of the product of P's.
    let mut q: Vec<Vec<KPoly>> = vec![vec![Poly::zero(&zero); n + 1]];
    q[0][0] = one;
    let mut acc = Poly::zero(&zero);
    for k in 1..=n {
        let mut row = vec![Poly::zero(&zero); n + 1];
        for m in 1..=n {
            for (idx, &(_, size)) in table.iter().enumerate() {
                if size <= m && !q[k - 1][m - size].is_zero() {
                    row[m] = row[m].add(&ps[idx].mul(&q[k - 1][m - size]));
                }
            }
        }
        let b = binom_neg_mod_p(s, k as i64, f.p());
        if b != 0 && !row[n].is_zero() {
            acc = acc.add(&row[n].scale(&zero.from_int(b as i64)));
        }
        q.push(row);
    }
    WPoly { n, s, poly: acc }
}

/// Σ_n W_n^{(s)}(a)/a^s·u^{n(r−1)} truncated at u-order `order`.
pub fn local_expansion_w(a: &PolyA, s: i64, order: usize) -> PowerSeries<RatK> {
    let f = a.field();
    let step = f.order() as usize - 1;
    let zero = RatK::zero(f);
    let av = RatK::from_poly(a.clone());
    let a_s = if s >= 0 {
        av.pow(s as u64).inverse().unwrap()
    } else {
        av.pow((-s) as u64)
    };
    let mut c = vec![zero.clone(); order];
    for n in 0..=order / step {
        if n * step < order {
            let w = w_poly(f, n, s);
            c[n * step] = w.poly.eval(&av).mul(&a_s);
        }
    }
    PowerSeries::new(&zero, order, c)
}

/// [a]_u^{−s} by direct inversion and powering of the exact u-polynomial.
pub fn local_expansion_direct(a: &PolyA, s: i64, order: usize) -> PowerSeries<RatK> {
    let b = UFormalBracket::new(a.field(), order);
    let x = b.image(a).expect("nonzero a");
    if s >= 0 {
        x.try_inverse().expect("unit constant term").pow(s as u64)
    } else {
        x.pow((-s) as u64)
    }
}
