//! Thakur multiple zeta values ζ_A(𝐬) in K_∞, with a certified truncation.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::bracket::IdentityBracket;
use super::index::Index;
use super::sums::Harmonic;
use crate::algebra::{FiniteField, RatK, Ring};
use crate::carlitz::factorial::digits;
use crate::error::{Error, Result};
use crate::laurent::{Laurent, LaurentField, EXACT};

/// Largest truncation degree the engine will try before giving up.
pub const MAX_CUTOFF: usize = 10;

/// A lower bound d ↦ v_∞ for one slot of a chain sum, `None` meaning the term
/// vanishes. From `settle` on the bound is nondecreasing.
pub struct SlotBound<'a> {
    pub f: Box<dyn Fn(usize) -> Option<i64> + 'a>,
    pub settle: usize,
}

impl SlotBound<'_> {
    fn min_from(&self, lo: usize) -> Option<i64> {
        (lo..=lo.max(self.settle)).filter_map(|d| (self.f)(d)).min()
    }
}

/// Smallest D such that every chain with top degree d_1 ≥ D is certified to
/// have valuation ≥ prec.
pub fn certified_cutoff(slots: &[SlotBound<'_>], prec: i64) -> Result<usize> {
    let Some((first, rest)) = slots.split_first() else {
        return Ok(1);
    };
    let mut rest_min = 0i64;
    for s in rest {
        match s.min_from(0) {
            Some(v) => rest_min = rest_min.saturating_add(v),
            None => return Ok(0),
        }
    }
    for d in 0..=MAX_CUTOFF {
        match first.min_from(d) {
            None => return Ok(d),
            Some(v) if v.saturating_add(rest_min) >= prec => return Ok(d),
            _ => {}
        }
    }
    Err(Error::PrecisionNotCertified(format!(
        "no cutoff ≤ {MAX_CUTOFF} reaches precision {prec}"
    )))
}

/// Exact power sums and truncated MZVs over K, plus the truncation policy.
pub struct ZetaEngine {
    f: Arc<FiniteField>,
    h: Harmonic<IdentityBracket>,
    d0: Mutex<HashMap<i64, usize>>,
}

impl ZetaEngine {
    pub fn new(f: &Arc<FiniteField>) -> Self {
        ZetaEngine {
            f: f.clone(),
            h: Harmonic::new(IdentityBracket::new(f)),
            d0: Mutex::new(HashMap::new()),
        }
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.f
    }

    pub fn harmonic(&self) -> &Harmonic<IdentityBracket> {
        &self.h
    }

    fn r(&self) -> u64 {
        self.f.order() as u64
    }

    /// S_d(s); zero for d < 0.
    pub fn power_sum(&self, d: i64, s: i64) -> RatK {
        if d < 0 {
            return RatK::zero(&self.f);
        }
        self.h
            .power_sum(d as usize, s)
            .expect("identity brackets are invertible")
    }

    /// S_d(𝐬), with S_d(∅) = δ_{d,0}.
    pub fn multi_power_sum(&self, d: i64, s: &Index) -> RatK {
        if d < 0 {
            return RatK::zero(&self.f);
        }
        self.h
            .h(d as usize, s)
            .expect("identity brackets are invertible")
    }

    /// S_{<d}(𝐬), with S_{<d}(∅) = 1 for d ≥ 1 and 0 for d ≤ 0.
    pub fn truncated_sum(&self, d: i64, s: &Index) -> RatK {
        if d <= 0 {
            return if s.is_empty() || d < 0 {
                RatK::zero(&self.f)
            } else {
                self.h.truncated(0, s).unwrap()
            };
        }
        self.h
            .truncated(d as usize, s)
            .expect("identity brackets are invertible")
    }

    /// Margin δ_r(k) = ⌈digit-sum_r(k)/(r−1)⌉ + 1 past observed vanishing.
    pub fn vanishing_margin(&self, k: u64) -> usize {
        let r = self.r();
        let ds: u64 = digits(k, r).iter().sum();
        (ds.div_ceil(r - 1) + 1) as usize
    }

    /// For s ≤ 0: the smallest d with S_e(s) = 0 for all e ∈ [d, d + δ_r(|s|)].
    pub fn vanishing_degree(&self, s: i64) -> Result<usize> {
        if s > 0 {
            return Err(Error::Precondition(format!(
                "vanishing degree needs s ≤ 0, got {s}"
            )));
        }
        if let Some(&d) = self.d0.lock().unwrap().get(&s) {
            return Ok(d);
        }
        let margin = self.vanishing_margin(s.unsigned_abs());
        let mut start = 0usize;
        let mut run = 0usize;
        let mut e = 0usize;
        let found = loop {
            if e > MAX_CUTOFF + margin {
                return Err(Error::PrecisionNotCertified(format!(
                    "S_d({s}) does not vanish for d ≤ {e}"
                )));
            }
            if self.power_sum(e as i64, s).is_zero() {
                if run == 0 {
                    start = e;
                }
                run += 1;
                if run > margin {
                    break start;
                }
            } else {
                run = 0;
            }
            e += 1;
        };
        self.d0.lock().unwrap().insert(s, found);
        Ok(found)
    }

    /// Lower bound for v_∞(S_d(s)); `None` when S_d(s) = 0 is certified.
    ///
    /// For s ≥ 1 this is max(s·d, deg L_d) with deg L_d = r + r² + … + r^d.
    pub fn valuation_bound(&self, d: usize, s: i64) -> Result<Option<i64>> {
        if s <= 0 {
            let d0 = self.vanishing_degree(s)?;
            return Ok((d < d0).then_some(s * d as i64));
        }
        let r = self.r() as i64;
        let mut deg_l = 0i64;
        let mut p = 1i64;
        for _ in 0..d {
            p = p.saturating_mul(r);
            deg_l = deg_l.saturating_add(p);
        }
        Ok(Some(deg_l.max(s.saturating_mul(d as i64))))
    }

    /// The slot bound of a single power sum S_d(s).
    pub fn slot(&self, s: i64) -> Result<SlotBound<'_>> {
        let settle = if s <= 0 { self.vanishing_degree(s)? } else { 0 };
        Ok(SlotBound {
            f: Box::new(move |d| self.valuation_bound(d, s).unwrap()),
            settle,
        })
    }

    /// Truncation degree D with v_∞(ζ_A(𝐬) − S_{<D}(𝐬)) ≥ prec.
    pub fn cutoff(&self, s: &Index, prec: i64) -> Result<usize> {
        let slots = s
            .entries()
            .iter()
            .map(|&x| self.slot(x))
            .collect::<Result<Vec<_>>>()?;
        Ok(certified_cutoff(&slots, prec)?.max(1))
    }

    /// ζ_A(𝐬) ≈ S_{<D}(𝐬) exactly in K, with the cutoff D used.
    pub fn zeta_truncation(&self, s: &Index, prec: i64) -> Result<(usize, RatK)> {
        let d = self.cutoff(s, prec)?;
        Ok((d, self.truncated_sum(d as i64, s)))
    }

    /// ζ_A(𝐬) in K_∞ to 1/θ-adic precision `prec`.
    pub fn zeta_thakur(&self, s: &Index, prec: i64) -> Result<Laurent> {
        self.zeta_in(&LaurentField::k_inf(&self.f), s, prec)
    }

    /// ζ_A(𝐬) in any Laurent field over K, to precision `prec` in its uniformizer.
    pub fn zeta_in(&self, field: &Arc<LaurentField>, s: &Index, prec: i64) -> Result<Laurent> {
        let e = field.e_ram();
        let (d, x) = self.zeta_truncation(s, prec.div_euclid(e) + 1)?;
        let exact = s
            .entries()
            .first()
            .is_some_and(|&s1| s1 <= 0 && d >= self.vanishing_degree(s1).unwrap_or(usize::MAX));
        let p = if exact && x.is_integral() {
            EXACT
        } else {
            prec
        };
        Ok(Laurent::embed(field, &x, p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{enumerate_monic, PolyA};

    #[test]
    fn tail_bound_is_sharp_enough() {
        for q in [2u64, 3] {
            let f = FiniteField::of_order(q).unwrap();
            let z = ZetaEngine::new(&f);
            for s in 1..5 {
                for d in 0..5 {
                    let x = z.power_sum(d, s);
                    let b = z.valuation_bound(d as usize, s).unwrap().unwrap();
                    assert!(x.v_inf().unwrap() >= b, "q={q} s={s} d={d}");
                }
            }
        }
    }

    #[test]
    fn negative_power_sums_vanish() {
        let f = FiniteField::of_order(3).unwrap();
        let z = ZetaEngine::new(&f);
        assert_eq!(z.vanishing_degree(0).unwrap(), 1);
        for k in 1..6i64 {
            let d0 = z.vanishing_degree(-k).unwrap();
            assert!(!z.power_sum(d0 as i64 - 1, -k).is_zero());
            let x = z.zeta_thakur(&Index::new([-k]), 20).unwrap();
            assert!(x.is_exact());
        }
    }

    #[test]
    fn truncation_meets_precision() {
        let f = FiniteField::of_order(3).unwrap();
        let z = ZetaEngine::new(&f);
        let kinf = LaurentField::k_inf(&f);
        for s in [vec![1], vec![2, 1], vec![1, -1], vec![3, 1, 1]] {
            let s = Index::new(s);
            let a = z.zeta_thakur(&s, 25).unwrap();
            let (d, _) = z.zeta_truncation(&s, 25).unwrap();
            let more = Laurent::embed(&kinf, &z.truncated_sum(d as i64 + 2, &s), 25);
            assert!(a.eq_to(&more, 25), "{s}");
        }
    }

    #[test]
    fn conventions() {
        let f = FiniteField::of_order(2).unwrap();
        let z = ZetaEngine::new(&f);
        let e = Index::empty();
        assert!(z.truncated_sum(0, &e).is_zero());
        assert!(z.truncated_sum(3, &e).is_one());
        assert!(z.multi_power_sum(0, &e).is_one());
        assert!(z.multi_power_sum(2, &e).is_zero());
        assert!(z.truncated_sum(2, &Index::new([1, 1, 1])).is_zero());
        assert!(z.multi_power_sum(1, &Index::new([1, 1, 1])).is_zero());
        assert_eq!(z.truncated_sum(2, &Index::new([1, 1])), z.power_sum(1, 1));
        assert!(z.power_sum(-1, 3).is_zero());
        for d in 1..4 {
            assert!(z.power_sum(d, 0).is_zero());
        }
        let one = PolyA::one(&f);
        let t = PolyA::theta(&f);
        assert_eq!(enumerate_monic(&f, 1).len(), 2);
        assert_eq!(
            z.power_sum(1, 1),
            RatK::new(one, t.mul(&t).add(&t)).unwrap()
        );
    }
}
