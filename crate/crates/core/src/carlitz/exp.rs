//! Carlitz exponential and logarithm, the period π̃ and torsion points λ_𝔫,
//! all as Laurent expansions.

use std::sync::Arc;

use super::carlitz_eval;
use super::factorial::{d_fact, l_fact};
use crate::algebra::{PolyA, Ring};
use crate::error::{Error, Result};
use crate::laurent::{Laurent, LaurentField};

/// `exp_C(x) = Σ x^{r^i}/D_i`, correct below `prec`.
pub fn exp_c(x: &Laurent, prec: i64) -> Result<Laurent> {
    series_sum(
        x,
        prec,
        d_fact,
        |i, r, e| (e * i as i64 * r.pow(i)) as i128,
    )
}

/// `log_C(x) = Σ x^{r^i}/L_i`, correct below `prec`; needs |x| < |π̃|.
pub fn log_c(x: &Laurent, prec: i64) -> Result<Laurent> {
    let field = x.field();
    let (r, e) = (field.r() as i64, field.e_ram());
    if let Some(v) = x.valuation() {
        if (r - 1) * v + e * r <= 0 {
            return Err(Error::Precondition("log_C diverges for |x| ≥ |π̃|".into()));
        }
    }
    series_sum(
        x,
        prec,
        l_fact,
        |i, r, e| (e * (1..=i).map(|j| r.pow(j)).sum::<i64>()) as i128,
    )
}

/// Σ_i x^{r^i}/F_i where `neg_val(i)` is −v_w(F_i); stops once the terms are
/// past `prec` and increasing.
fn series_sum(
    x: &Laurent,
    prec: i64,
    denom: impl Fn(&Arc<crate::algebra::FiniteField>, u32) -> PolyA,
    neg_val: impl Fn(u32, i64, i64) -> i128,
) -> Result<Laurent> {
    let field = x.field().clone();
    let (r, e) = (field.r() as i64, field.e_ram());
    let Some(v) = x.valuation() else {
        return Ok(Laurent::zero(&field, x.prec().min(prec)));
    };
    let mut acc = Laurent::zero(&field, prec);
    let mut prev: Option<i128> = None;
    for i in 0u32.. {
        if i > 40 {
            return Err(Error::PrecisionNotCertified(
                "Carlitz series did not reach precision".into(),
            ));
        }
        let term_val = (r as i128).pow(i) * v as i128 + neg_val(i, r, e);
        if term_val >= prec as i128 && prev.is_some_and(|p| term_val > p) {
            break;
        }
        prev = Some(term_val);
        let den = Laurent::embed_poly(&field, &denom(field.base(), i));
        let xi = x.with_prec(prec.max(v + 1) + e * r).frobenius(i);
        acc = acc.add(&xi.div_to(&den, prec)?);
    }
    Ok(acc)
}

/// `π̃ = (−θ)^{r/(r−1)} ∏_{i≥1} (1 − θ^{1−r^i})^{−1}` with `(−θ)^{1/(r−1)} = c·w^{−1}`.
pub fn carlitz_period(field: &Arc<LaurentField>, prec: i64) -> Result<Laurent> {
    let r = field.r() as i64;
    let c = field
        .root_constant()
        .ok_or_else(|| Error::Precondition("the period lives in the ramified field".into()))?;
    if prec <= -r {
        return Err(Error::PrecisionTooLow(format!(
            "period needs prec > {}",
            -r
        )));
    }
    let e = field.e_ram();
    let cf = field.coeff_field();
    let n = (prec + r) as usize;
    let mut s = vec![0u16; n];
    s[0] = 1;
    for i in 1u32.. {
        let m = (e * (r.pow(i) - 1)) as usize;
        if m >= n {
            break;
        }
        // multiply by 1/(1 − w^m): s_k += s_{k−m}
        for k in m..n {
            s[k] = cf.add(s[k], s[k - m]);
        }
    }
    let cr = cf.pow(c, r as u64);
    let s = s.into_iter().map(|x| cf.mul(x, cr)).collect();
    Ok(Laurent::from_coeffs(field, -r, s, prec))
}

/// `λ_𝔫 = exp_C(π̃/𝔫)`, certified by `C_𝔫(λ_𝔫) = 0` to precision.
pub fn torsion_generator(field: &Arc<LaurentField>, n: &PolyA, prec: i64) -> Result<Laurent> {
    if !n.is_monic() {
        return Err(Error::NotMonic);
    }
    let d = n.degree();
    if d < 1 {
        return Err(Error::Precondition(
            "torsion generator needs a nonconstant modulus".into(),
        ));
    }
    let (r, e) = (field.r() as i64, field.e_ram());
    let work = prec.max(0) + e * d + r;
    let pi = carlitz_period(field, work)?;
    let x = pi.div_to(&Laurent::embed_poly(field, n), work)?;
    let lambda = exp_c(&x, prec)?;
    let expect_v = e * (d - 1) - 1;
    if lambda.valuation() != Some(expect_v) {
        return Err(Error::PrecisionTooLow(format!(
            "λ not resolved at precision {prec}"
        )));
    }
    let check = carlitz_eval(n, &lambda, |a| Laurent::embed_poly(field, a));
    let lead = expect_v - e * d;
    if !check.is_zero_to_precision() || check.prec() <= lead {
        return Err(Error::PrecisionTooLow(format!(
            "C_𝔫(λ_𝔫) = 0 not certified at precision {prec}"
        )));
    }
    Ok(lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{enumerate_monic, FiniteField};
    use num_rational::Ratio;

    #[test]
    fn period_shape() {
        for q in [2u64, 3, 4, 5] {
            let base = FiniteField::of_order(q).unwrap();
            let l = LaurentField::period_field(&base).unwrap();
            let pi = carlitz_period(&l, 30).unwrap();
            let r = q as i64;
            assert_eq!(pi.abs_exponent().unwrap(), Ratio::new(r, r - 1));
            assert!(pi.pow(q - 1).supported_on_multiples(r - 1));
            let longer = carlitz_period(&l, 40).unwrap();
            assert!(pi.eq_to(&longer, 30));
        }
    }

    #[test]
    fn torsion_examples() {
        let base = FiniteField::of_order(3).unwrap();
        let l = LaurentField::period_field(&base).unwrap();
        let t = PolyA::theta(&base);
        let lam = torsion_generator(&l, &t, 30).unwrap();
        assert!(carlitz_eval(&t, &lam, |a| Laurent::embed_poly(&l, a)).is_zero_to_precision());
        for n in enumerate_monic(&base, 2).iter().take(3) {
            let lam = torsion_generator(&l, n, 30).unwrap();
            assert_eq!(
                lam.abs_exponent().unwrap(),
                Ratio::new(-2 + 1, 1) + Ratio::new(1, 2)
            );
        }
    }

    #[test]
    fn n_lambda_approaches_period() {
        let base = FiniteField::of_order(3).unwrap();
        let l = LaurentField::period_field(&base).unwrap();
        let pi = carlitz_period(&l, 80).unwrap();
        let mut last = None;
        for d in 1..=3 {
            let n = PolyA::theta_pow(&base, d);
            let lam = torsion_generator(&l, &n, 80).unwrap();
            let diff = Laurent::embed_poly(&l, &n).mul(&lam).sub(&pi);
            let v = diff.valuation().unwrap();
            if let Some(prev) = last {
                assert!(v > prev);
            }
            last = Some(v);
        }
    }

    #[test]
    fn functional_equation() {
        let base = FiniteField::of_order(3).unwrap();
        let l = LaurentField::period_field(&base).unwrap();
        let x = Laurent::from_coeffs(&l, -1, vec![1, 0, 2, 1], 20);
        let ex = exp_c(&x, 20).unwrap();
        for d in 0..=2 {
            for a in enumerate_monic(&base, d) {
                let lhs = carlitz_eval(&a, &ex, |c| Laurent::embed_poly(&l, c));
                let ax = Laurent::embed_poly(&l, &a).mul(&x);
                let rhs = exp_c(&ax, lhs.prec()).unwrap();
                let t = lhs.prec().min(rhs.prec());
                assert!(t > 0 && lhs.eq_to(&rhs, t));
            }
        }
        let y = Laurent::from_coeffs(&l, 1, vec![1, 1], 25);
        let back = exp_c(&log_c(&y, 25).unwrap(), 25).unwrap();
        assert!(back.eq_to(&y, back.prec().min(25)));
    }
}
