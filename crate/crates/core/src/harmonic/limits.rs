//! H_{<deg 𝔫}(𝐬; λ_𝔫) and its limits: the finite Euler–Carlitz formula, the
//! analytic limit ζ_A(𝐬), the algebraic limit ζ_𝒜(𝐬), and the t-expansion.

use std::sync::Arc;

use num_rational::Ratio;
use serde_json::json;

use super::bracket::{LaurentBracket, TBracket, TorsionBracket};
use super::index::Index;
use super::sums::Harmonic;
use super::zeta::ZetaEngine;
use crate::algebra::{irreducibles_up_to, reduce_mod_v, FiniteField, PolyA, RatK, Ring};
use crate::carlitz::{carlitz_factorial, degenerate_bernoulli_carlitz, torsion_generator};
use crate::cyclo::CycloElem;
use crate::error::{Error, Result};
use crate::laurent::{Laurent, LaurentField};

/// Compares H_{<deg 𝔫}(s; λ)·Γ_{s+1} with dBC_s(𝔫)·(𝔫λ)^s in K[λ]/(Φ_𝔫).
pub fn finite_euler_carlitz_check(n: &PolyA, s: u64) -> Result<bool> {
    let r = n.field().order() as u64;
    if s == 0 || !s.is_multiple_of(r - 1) {
        return Err(Error::Precondition(format!(
            "s = {s} is not a positive multiple of r − 1 = {}",
            r - 1
        )));
    }
    if !n.is_monic() || n.degree() < 1 {
        return Err(Error::NotMonic);
    }
    let h = Harmonic::new(TorsionBracket::new(n)?);
    let ring = h.bracket().ring().clone();
    let lhs = h.h_lt(n.deg().unwrap(), &Index::new([s as i64]))?;
    let lhs = lhs.mul(&CycloElem::from_a(&ring, &carlitz_factorial(n.field(), s)));
    let nl = CycloElem::lambda(&ring)
        .mul(&CycloElem::from_a(&ring, n))
        .pow(s);
    let rhs = nl.mul(&CycloElem::from_k(
        &ring,
        degenerate_bernoulli_carlitz(s, n)?,
    ));
    Ok(lhs == rhs)
}

/// Outcome of comparing H_{<d}(𝐬; λ_𝔫) with ζ_A(𝐬) in L.
#[derive(Clone, Debug, PartialEq)]
pub struct AnalyticLimitReport {
    pub n: PolyA,
    pub index: Index,
    /// log_r |H − ζ|, when the difference was resolved.
    pub defect: Option<Ratio<i64>>,
    /// log_r of the precision reached; |H − ζ| is at most this.
    pub resolved_to: Ratio<i64>,
    pub bound: Ratio<i64>,
    pub pass: bool,
    pub prec: i64,
}

impl AnalyticLimitReport {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "n": self.n.to_string(),
            "index": self.index.to_string(),
            "defect": self.defect.map(|x| x.to_string()),
            "resolved_to": self.resolved_to.to_string(),
            "bound": self.bound.to_string(),
            "pass": self.pass,
            "prec": self.prec,
        })
    }
}

/// r(−1 + 1/(r−1)) − d + 1 − 1/(r−1), the exponent of the convergence bound.
pub fn analytic_bound(r: u64, d: i64) -> Ratio<i64> {
    let r = r as i64;
    let inv = Ratio::new(1, r - 1);
    Ratio::from_integer(r) * (Ratio::from_integer(-1) + inv) - d + 1 - inv
}

/// H_{<deg 𝔫}(𝐬; λ_𝔫) in L to w-precision `prec`.
pub fn harmonic_at_torsion(
    l: &Arc<LaurentField>,
    n: &PolyA,
    s: &Index,
    prec: i64,
) -> Result<Laurent> {
    let d = n.degree();
    let margin = 2 * l.e_ram() * (d + 1) * l.r() as i64;
    let lambda = torsion_generator(l, n, prec + margin)?;
    let h = Harmonic::new(LaurentBracket::new(lambda, prec + margin));
    Ok(h.h_lt(d as usize, s)?.with_prec(prec))
}

/// Largest w-precision tried before reporting only an upper bound.
pub const ANALYTIC_PREC_CAP: i64 = 960;

/// Defect log_r|H_{<deg 𝔫}(𝐬; λ_𝔫) − ζ_A(𝐬)| against the bound; the
/// precision doubles from `prec` until the difference is resolved.
pub fn analytic_limit_check(
    zeta: &ZetaEngine,
    n: &PolyA,
    s: &Index,
    prec: i64,
) -> Result<AnalyticLimitReport> {
    if !s.is_positive() {
        return Err(Error::Precondition(format!("{s} is not positive")));
    }
    let l = LaurentField::period_field(zeta.field())?;
    let e = l.e_ram();
    let bound = analytic_bound(l.r(), n.degree());
    let mut p = prec.max(8);
    loop {
        let h = harmonic_at_torsion(&l, n, s, p)?;
        let z = zeta.zeta_in(&l, s, p)?;
        let diff = h.sub(&z);
        let resolved_to = Ratio::new(-diff.prec(), e);
        if let Some(v) = diff.valuation() {
            let defect = Ratio::new(-v, e);
            return Ok(AnalyticLimitReport {
                n: n.clone(),
                index: s.clone(),
                defect: Some(defect),
                resolved_to,
                bound,
                pass: defect <= bound,
                prec: p,
            });
        }
        if s.is_empty() || p >= ANALYTIC_PREC_CAP {
            return Ok(AnalyticLimitReport {
                n: n.clone(),
                index: s.clone(),
                defect: None,
                resolved_to,
                bound,
                pass: resolved_to <= bound,
                prec: p,
            });
        }
        p *= 2;
    }
}

/// |[a]_λ|_∞ = |a|_∞ and |[a]_λ − a|_∞ < |a|_∞ for all monic a with deg a < deg 𝔫.
pub fn torsion_bracket_sizes(l: &Arc<LaurentField>, n: &PolyA, prec: i64) -> Result<bool> {
    let lambda = torsion_generator(l, n, prec)?;
    let b = LaurentBracket::new(lambda, prec);
    use super::bracket::Bracket;
    for d in 0..n.deg().unwrap() {
        for a in crate::algebra::enumerate_monic(n.field(), d) {
            let x = b.image(&a)?;
            let ea = Laurent::embed_poly(l, &a);
            let eps = x.sub(&ea);
            let same = x.valuation() == ea.valuation();
            let smaller = match eps.valuation() {
                Some(v) => v > ea.valuation().unwrap(),
                None => eps.prec() > ea.valuation().unwrap(),
            };
            if !(same && smaller) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// (v, value in 𝔽_v) over all monic irreducibles v of degree ≤ D_max.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteMzvVector {
    pub components: Vec<(PolyA, PolyA)>,
}

impl FiniteMzvVector {
    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|(_, x)| x.is_zero())
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!(self
            .components
            .iter()
            .map(|(v, x)| json!({"v": v.to_digit_arrays(), "value": x.to_digit_arrays(), "v_text": v.to_string(), "value_text": x.to_string()}))
            .collect::<Vec<_>>())
    }
}

fn check_dmax(dmax: usize) -> Result<()> {
    if dmax == 0 {
        return Err(Error::Precondition("D_max must be at least 1".into()));
    }
    Ok(())
}

/// ζ_𝒜(𝐬) through S_{<deg v}(𝐬) mod v.
pub fn finite_mzv(zeta: &ZetaEngine, s: &Index, dmax: usize) -> Result<FiniteMzvVector> {
    check_dmax(dmax)?;
    let components = irreducibles_up_to(zeta.field(), dmax)
        .into_iter()
        .map(|v| {
            let x = zeta.truncated_sum(v.degree(), s);
            Ok((v.clone(), reduce_mod_v(&x, &v)?))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FiniteMzvVector { components })
}

/// ζ_𝒜(𝐬) through H_{<deg v}(𝐬; λ_v) in A[λ_v] reduced at λ_v = 0.
pub fn finite_mzv_via_torsion(
    f: &Arc<FiniteField>,
    s: &Index,
    dmax: usize,
) -> Result<FiniteMzvVector> {
    check_dmax(dmax)?;
    let components = irreducibles_up_to(f, dmax)
        .into_iter()
        .map(|v| {
            let h = Harmonic::new(TorsionBracket::new(&v)?);
            let x = h.h_lt(v.deg().unwrap(), s)?;
            Ok((v.clone(), x.reduce_at_zero(&v)?))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FiniteMzvVector { components })
}

/// The first `terms` coefficients in t = 1/u of ζ_u(𝐬), each checked to lie in A.
pub fn t_expansion(f: &Arc<FiniteField>, s: &Index, terms: usize) -> Result<Vec<PolyA>> {
    let Some(&s1) = s.entries().first() else {
        return Err(Error::Precondition(
            "t-expansion needs a non-empty index".into(),
        ));
    };
    if !s.is_positive() {
        return Err(Error::Precondition(format!("{s} is not positive")));
    }
    let r = f.order() as u128;
    let mut d = 1usize;
    while (s1 as u128) * (r.pow(d as u32) - 1) < terms as u128 {
        d += 1;
    }
    let h = Harmonic::new(TBracket::new(f, terms.max(1)));
    let series = h.h_lt(d, s)?;
    series
        .coeffs()
        .iter()
        .take(terms)
        .enumerate()
        .map(|(k, c): (usize, &RatK)| {
            c.as_poly()
                .cloned()
                .ok_or_else(|| Error::NonIntegralCoefficient(format!("t^{k}: {c}")))
        })
        .collect()
}
