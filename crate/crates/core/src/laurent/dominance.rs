//! Which term dominates `C_a(u) = Σ [a,i] u^{r^i}` at the infinite place.
//!
//! For monic a of degree d and |u|_∞ = r^η the i-th term has absolute-value
//! exponent `R_d(i) = r^i (d − i + η)`; everything here is exact integer
//! arithmetic on `b·R_d(i)` where η = a/b.

use num_rational::Ratio;
use serde_json::json;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValuationReport {
    pub d: i64,
    pub eta: Ratio<i64>,
    pub i0: i64,
    pub unique: bool,
    /// Eventual value of `d − i0(d)`, when the eventual maximum is unique.
    pub kappa: Option<i64>,
}

impl ValuationReport {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "d": self.d,
            "eta": format!("{}", self.eta),
            "i0": self.i0,
            "unique": self.unique,
            "kappa": self.kappa,
        })
    }
}

/// `b·R_d(i)` for η = a/b.
fn scaled_exponent(r: u64, eta: Ratio<i64>, d: i64, i: i64) -> i128 {
    let (a, b) = (*eta.numer() as i128, *eta.denom() as i128);
    (r as i128).pow(i as u32) * (b * (d - i) as i128 + a)
}

/// Maximizing index and whether it is unique.
pub fn argmax(r: u64, eta: Ratio<i64>, d: i64) -> (i64, bool) {
    let mut best = (0, scaled_exponent(r, eta, d, 0));
    let mut unique = true;
    for i in 1..=d {
        let v = scaled_exponent(r, eta, d, i);
        if v > best.1 {
            best = (i, v);
            unique = true;
        } else if v == best.1 {
            unique = false;
        }
    }
    (best.0, unique)
}

/// Exact profile of the dominant Carlitz term for `|u|_∞ = r^η`.
pub fn dominance_profile(r: u64, eta: Ratio<i64>, d: i64) -> ValuationReport {
    assert!(d >= 0, "degree must be nonnegative");
    let (i0, unique) = argmax(r, eta, d);
    // d − i0 depends on d only while d is below the optimal gap, which is at most ⌈−η⌉ + 2.
    let ceil_neg = (-eta).ceil().to_integer().max(0);
    let d_stab = d.max(ceil_neg + 3);
    let (j0, stab_unique) = argmax(r, eta, d_stab);
    ValuationReport {
        d,
        eta,
        i0,
        unique,
        kappa: stab_unique.then_some(d_stab - j0),
    }
}

/// Membership of |u|_∞ = r^η in 𝔇: excluded exactly when η = k + 1/(r−1) with k ≤ 0.
pub fn in_domain_d(r: u64, eta: Ratio<i64>) -> bool {
    let k = eta - Ratio::new(1, r as i64 - 1);
    !(k.is_integer() && k.to_integer() <= 0)
}
