//! The derivations 𝒟_N on the shuffle algebra and the identities they generate.

use std::sync::Arc;

use super::gamma::{weak_compositions, UExpansion};
use crate::algebra::{PowerSeries, RatK, Ring};
use crate::error::{Error, Result};
use crate::harmonic::{Harmonic, Index, XBracket, ZetaEngine};
use crate::laurent::{Laurent, LaurentField};
use crate::shuffle::{binom_neg_mod_p, ShuffleAlgebra, ShuffleElem, Word};

/// Rounds of precision raising before a comparison is declared uncertified.
const RETRIES: usize = 6;

/// Runs `eval` at increasing working precision until both sides are known
/// below `target`, then compares them there.
pub fn compare_certified(
    target: i64,
    eval: impl Fn(i64) -> Result<(Laurent, Laurent)>,
) -> Result<bool> {
    let mut work = target;
    for _ in 0..RETRIES {
        let (a, b) = eval(work)?;
        let p = a.prec().min(b.prec());
        if p >= target {
            return Ok(a.eq_to(&b, target));
        }
        work += target - p + 1;
    }
    Err(Error::PrecisionNotCertified(format!(
        "could not reach precision {target}"
    )))
}

fn shifted(s: &Index, ns: &[usize], step: i64) -> Index {
    Index::new(
        s.entries()
            .iter()
            .zip(ns)
            .map(|(&sj, &n)| sj - n as i64 * step)
            .collect::<Vec<_>>(),
    )
}

/// 𝒟_N(x_𝐬) = Σ_{|n|=N} Π C(−s_j, n_j) ζ_A(s_1 − n_1(r−1), …), exactly in K.
pub fn derivation_index_exact(
    zeta: &ZetaEngine,
    n_total: usize,
    s: &Index,
    prec: i64,
) -> Result<RatK> {
    let f = zeta.field();
    let one = RatK::one(f);
    if s.is_empty() {
        return Ok(one);
    }
    let step = f.order() as i64 - 1;
    let mut acc = one.zero_like();
    for ns in weak_compositions(n_total, s.depth()) {
        let mut c = 1i64;
        for (&sj, &n) in s.entries().iter().zip(&ns) {
            c = c * binom_neg_mod_p(sj, n as i64, f.p()) as i64 % f.p() as i64;
        }
        if c == 0 {
            continue;
        }
        let (_, z) = zeta.zeta_truncation(&shifted(s, &ns, step), prec)?;
        acc = acc.add(&z.scale_int(c));
    }
    Ok(acc)
}

/// 𝒟_N(x) for x in the shuffle algebra, in K_∞; 𝒟_N(1) = 1.
pub fn derivation_d(
    zeta: &ZetaEngine,
    n_total: usize,
    x: &ShuffleElem,
    prec: i64,
) -> Result<Laurent> {
    let mut acc = RatK::zero(zeta.field());
    for (w, c) in x.terms() {
        acc = acc
            .add(&derivation_index_exact(zeta, n_total, &w.to_index(), prec)?.scale_int(c as i64));
    }
    Ok(Laurent::embed(
        &LaurentField::k_inf(zeta.field()),
        &acc,
        prec,
    ))
}

fn word_elem(alg: &ShuffleAlgebra, s: &Index) -> Result<ShuffleElem> {
    Ok(ShuffleElem::word(alg.p(), Word::from_index(s)?))
}

/// 𝒟_N(x_𝐫 ∗ x_𝐬) = Σ_{k ≤ N} 𝒟_k(x_𝐫)·𝒟_{N−k}(x_𝐬) to 1/θ-precision `prec`.
pub fn hasse_schmidt_check(
    zeta: &ZetaEngine,
    alg: &ShuffleAlgebra,
    n: usize,
    rr: &Index,
    ss: &Index,
    prec: i64,
) -> Result<bool> {
    let (a, b) = (word_elem(alg, rr)?, word_elem(alg, ss)?);
    let prod = alg.product(&a, &b);
    compare_certified(prec, |w| {
        let lhs = derivation_d(zeta, n, &prod, w)?;
        let mut rhs = Laurent::zero(lhs.field(), crate::laurent::EXACT);
        for k in 0..=n {
            rhs = rhs.add(&derivation_d(zeta, k, &a, w)?.mul(&derivation_d(zeta, n - k, &b, w)?));
        }
        Ok((lhs, rhs))
    })
}

/// γ̂_N(x) = Σ c_w γ_N(w), with γ_N(1) = δ_{N,0}.
pub fn gamma_hat(u: &UExpansion, n: usize, x: &ShuffleElem, prec: i64) -> Result<Laurent> {
    let mut acc = RatK::zero(u.zeta().field());
    for (w, c) in x.terms() {
        acc = acc.add(
            &u.gamma_mzv_exact(n, &w.to_index(), prec)?
                .scale_int(c as i64),
        );
    }
    Ok(Laurent::embed(
        &LaurentField::k_inf(u.zeta().field()),
        &acc,
        prec,
    ))
}

/// γ̂_N(x_𝐫 ∗ x_𝐬) = Σ_{k ≤ N} γ_k(𝐫)·γ_{N−k}(𝐬) to precision `prec`.
pub fn gamma_shuffle_check(
    u: &UExpansion,
    alg: &ShuffleAlgebra,
    n: usize,
    rr: &Index,
    ss: &Index,
    prec: i64,
) -> Result<bool> {
    let (a, b) = (word_elem(alg, rr)?, word_elem(alg, ss)?);
    let prod = alg.product(&a, &b);
    compare_certified(prec, |w| {
        let lhs = gamma_hat(u, n, &prod, w)?;
        let mut rhs = Laurent::zero(lhs.field(), crate::laurent::EXACT);
        for k in 0..=n {
            rhs = rhs.add(&gamma_hat(u, k, &a, w)?.mul(&gamma_hat(u, n - k, &b, w)?));
        }
        Ok((lhs, rhs))
    })
}

/// Both sides of the N = 1 (`level` 1) or N = 2 (`level` 2) identity for the
/// shuffle of x_{r1} and x_{s1}, evaluated term by term.
pub fn identity_sides(
    zeta: &ZetaEngine,
    level: u8,
    r1: i64,
    s1: i64,
    prec: i64,
) -> Result<(Laurent, Laurent)> {
    if r1 < 1 || s1 < 1 {
        return Err(Error::Precondition("r1 and s1 must be positive".into()));
    }
    let f = zeta.field();
    let (r, p) = (f.order() as u64, f.p());
    let k = LaurentField::k_inf(f);
    let z = |v: &[i64]| zeta.zeta_in(&k, &Index::new(v.to_vec()), prec);
    let c = |x: i64| Laurent::one(&k).scale_int(x);
    let bn = |s: i64| c(binom_neg_mod_p(s, 2, p) as i64);
    let q = r as i64 - 1;
    let alg = ShuffleAlgebra::new(r, p);
    let mut lhs;
    let mut rhs;
    match level {
        1 => {
            lhs = c(-r1).mul(&z(&[r1 - q])?).mul(&z(&[s1])?);
            lhs = lhs.add(&c(-s1).mul(&z(&[r1])?).mul(&z(&[s1 - q])?));
            rhs = c(-r1).mul(&z(&[r1 - q, s1])?);
            rhs = rhs.add(&c(-s1).mul(&z(&[r1, s1 - q])?));
            rhs = rhs.add(&c(-s1).mul(&z(&[s1 - q, r1])?));
            rhs = rhs.add(&c(-r1).mul(&z(&[s1, r1 - q])?));
            rhs = rhs.add(&c(-(r1 + s1)).mul(&z(&[r1 + s1 - q])?));
            for i in 1..r1 + s1 {
                let j = r1 + s1 - i;
                let d = alg.delta(r1, s1, i, j)? as i64;
                if d != 0 {
                    let t = c(-i)
                        .mul(&z(&[i - q, j])?)
                        .add(&c(-j).mul(&z(&[i, j - q])?));
                    rhs = rhs.add(&c(d).mul(&t));
                }
            }
        }
        2 => {
            lhs = c(r1 * s1).mul(&z(&[r1 - q])?).mul(&z(&[s1 - q])?);
            lhs = lhs.add(&bn(r1).mul(&z(&[r1 - 2 * q])?).mul(&z(&[s1])?));
            lhs = lhs.add(&bn(s1).mul(&z(&[r1])?).mul(&z(&[s1 - 2 * q])?));
            rhs = c(r1 * s1).mul(&z(&[r1 - q, s1 - q])?.add(&z(&[s1 - q, r1 - q])?));
            rhs = rhs.add(&bn(r1).mul(&z(&[r1 - 2 * q, s1])?.add(&z(&[s1, r1 - 2 * q])?)));
            rhs = rhs.add(&bn(s1).mul(&z(&[r1, s1 - 2 * q])?.add(&z(&[s1 - 2 * q, r1])?)));
            rhs = rhs.add(&bn(r1 + s1).mul(&z(&[r1 + s1 - 2 * q])?));
            for i in 1..r1 + s1 {
                let j = r1 + s1 - i;
                let d = alg.delta(r1, s1, i, j)? as i64;
                if d != 0 {
                    let mut t = c(i * j).mul(&z(&[i - q, j - q])?);
                    t = t.add(&bn(i).mul(&z(&[i - 2 * q, j])?));
                    t = t.add(&bn(j).mul(&z(&[i, j - 2 * q])?));
                    rhs = rhs.add(&c(d).mul(&t));
                }
            }
        }
        _ => {
            return Err(Error::Precondition(format!(
                "identity level {level} is not 1 or 2"
            )))
        }
    }
    Ok((lhs, rhs))
}

/// The N = 1 / N = 2 identity for (r1, s1), certified to precision `prec`.
pub fn identity_check_explicit(
    zeta: &ZetaEngine,
    level: u8,
    r1: i64,
    s1: i64,
    prec: i64,
) -> Result<bool> {
    compare_certified(prec, |w| identity_sides(zeta, level, r1, s1, w))
}

/// ℋ^X_{<d}(𝐬) for [a]_X = a + a^r X equals, coefficient by coefficient,
/// Σ_{|n|=N} Π C(−s_j, n_j) S_{<d}(s_1 − n_1(r−1), …), exactly in K.
pub fn x_bracket_route_check(
    zeta: &Arc<ZetaEngine>,
    s: &Index,
    d: usize,
    nmax: usize,
) -> Result<bool> {
    let f = zeta.field();
    let step = f.order() as i64 - 1;
    let h = Harmonic::new(XBracket::new(f, nmax + 1));
    let series: PowerSeries<RatK> = h.h_lt(d, s)?;
    for n in 0..=nmax {
        let mut want = RatK::zero(f);
        for ns in weak_compositions(n, s.depth()) {
            let mut c = 1i64;
            for (&sj, &nj) in s.entries().iter().zip(&ns) {
                c = c * binom_neg_mod_p(sj, nj as i64, f.p()) as i64 % f.p() as i64;
            }
            if c != 0 {
                want = want.add(
                    &zeta
                        .truncated_sum(d as i64, &shifted(s, &ns, step))
                        .scale_int(c),
                );
            }
        }
        if s.is_empty() {
            want = if n == 0 { RatK::one(f) } else { RatK::zero(f) };
        }
        if *series.coeff(n) != want {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FiniteField;

    fn zeta(q: u64) -> Arc<ZetaEngine> {
        Arc::new(ZetaEngine::new(&FiniteField::of_order(q).unwrap()))
    }

    #[test]
    fn explicit_identity_examples() {
        assert!(identity_check_explicit(&zeta(3), 1, 1, 2, 30).unwrap());
        assert!(identity_check_explicit(&zeta(2), 2, 1, 1, 30).unwrap());
        assert!(identity_check_explicit(&zeta(3), 1, 4, 3, 25).unwrap());
    }

    #[test]
    fn derivation_basics() {
        let z = zeta(3);
        let k = LaurentField::k_inf(z.field());
        let one = ShuffleElem::one(3);
        for n in 0..3 {
            assert!(derivation_d(&z, n, &one, 20)
                .unwrap()
                .eq_to(&Laurent::one(&k), 20));
        }
        let x2 = ShuffleElem::word(3, Word::new([2]).unwrap());
        let d0 = derivation_d(&z, 0, &x2, 20).unwrap();
        assert!(d0.eq_to(&z.zeta_in(&k, &Index::new([2]), 20).unwrap(), 20));
        // 𝒟_1(x_s) = −s·ζ_A(s − (r − 1))
        let d1 = derivation_d(&z, 1, &x2, 20).unwrap();
        let want = z.zeta_in(&k, &Index::new([0]), 20).unwrap().scale_int(-2);
        assert!(d1.eq_to(&want, 20));
    }

    #[test]
    fn hasse_schmidt_small() {
        let z = zeta(3);
        let alg = ShuffleAlgebra::new(3, 3);
        for n in 0..=2 {
            assert!(
                hasse_schmidt_check(&z, &alg, n, &Index::new([1]), &Index::new([2]), 25).unwrap()
            );
            assert!(
                hasse_schmidt_check(&z, &alg, n, &Index::new([2, 1]), &Index::new([1]), 25)
                    .unwrap()
            );
        }
    }

    #[test]
    fn gamma_shuffle_small() {
        let z = zeta(2);
        let u = UExpansion::new(z);
        let alg = ShuffleAlgebra::new(2, 2);
        for n in 0..=2 {
            assert!(
                gamma_shuffle_check(&u, &alg, n, &Index::new([1]), &Index::new([2]), 25).unwrap()
            );
        }
    }

    #[test]
    fn x_bracket_route() {
        for q in [2u64, 3] {
            let z = zeta(q);
            for s in [vec![1], vec![2, 1], vec![1, 1]] {
                for d in 0..=3 {
                    assert!(x_bracket_route_check(&z, &Index::new(s.clone()), d, 2).unwrap());
                }
            }
        }
    }

    #[test]
    fn checks_are_not_vacuous() {
        let z = zeta(3);
        let (lhs, rhs) = identity_sides(&z, 1, 1, 2, 25).unwrap();
        assert!(!lhs.is_zero_to_precision() && lhs.eq_to(&rhs, 25));
        let (lhs, _) = identity_sides(&z, 2, 1, 1, 25).unwrap();
        assert!(!lhs.is_zero_to_precision());
        let alg = ShuffleAlgebra::new(3, 3);
        let a = ShuffleElem::word(3, Word::new([1]).unwrap());
        let b = ShuffleElem::word(3, Word::new([2]).unwrap());
        let d1 = derivation_d(&z, 1, &alg.product(&a, &b), 25).unwrap();
        let d0 = derivation_d(&z, 0, &a, 25)
            .unwrap()
            .mul(&derivation_d(&z, 0, &b, 25).unwrap());
        assert!(!d1.is_zero_to_precision());
        assert!(!d1.eq_to(&d0, 25));
    }
}
