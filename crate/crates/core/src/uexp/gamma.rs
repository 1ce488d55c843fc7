//! γ_N(𝐬), the coefficient of u^{N(r−1)} in ζ_u(𝐬), by two independent routes.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use serde_json::json;

use super::wpoly::{w_poly, WPoly};
use crate::algebra::{PolyA, RatK, Ring};
use crate::carlitz::{d_fact, l_fact};
use crate::error::{Error, Result};
use crate::harmonic::{certified_cutoff, Index, SlotBound, ZetaEngine};
use crate::laurent::{Laurent, LaurentField};

/// All (n_1, …, n_m) of nonnegative integers with sum `total`.
pub fn weak_compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in weak_compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Exact sum over chains d_1 > d_2 > … > d_m ≥ 0 with d_1 < `d` of Π f_j(d_j).
pub fn chain_sum(d: usize, one: &RatK, slots: &[&dyn Fn(usize) -> RatK]) -> RatK {
    let mut g = vec![one.clone(); d + 1];
    for f in slots.iter().rev() {
        let mut next = Vec::with_capacity(d + 1);
        next.push(one.zero_like());
        for e in 0..d {
            let t = if g[e].is_zero() {
                one.zero_like()
            } else {
                f(e).mul(&g[e])
            };
            next.push(next[e].add(&t));
        }
        g = next;
    }
    g.swap_remove(d)
}

/// ζ_u(𝐬) = Σ γ_N u^{N(r−1)} up to N_max, in K_∞.
#[derive(Clone, Debug)]
pub struct USeries {
    pub index: Index,
    pub gammas: Vec<Laurent>,
    pub step: u64,
    /// γ_N by the harmonic-sum route agreed with the MZV route at the checked N.
    pub spot_checked: Vec<usize>,
}

impl USeries {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "index": self.index.entries(),
            "step": self.step,
            "gammas": self.gammas.iter().enumerate().map(|(n, g)| json!({
                "N": n,
                "u_exponent": n as u64 * self.step,
                "value": crate::laurent::laurent_json(g),
            })).collect::<Vec<_>>(),
            "spot_checked": self.spot_checked,
        })
    }
}

/// W-polynomials and H^W sums on top of a shared ζ_A engine.
pub struct UExpansion {
    zeta: Arc<ZetaEngine>,
    w: Mutex<HashMap<(usize, i64), Arc<WPoly>>>,
    hw: Mutex<HashMap<(usize, usize, i64), RatK>>,
}

impl UExpansion {
    pub fn new(zeta: Arc<ZetaEngine>) -> Self {
        UExpansion {
            zeta,
            w: Mutex::new(HashMap::new()),
            hw: Mutex::new(HashMap::new()),
        }
    }

    pub fn zeta(&self) -> &Arc<ZetaEngine> {
        &self.zeta
    }

    fn r(&self) -> u64 {
        self.zeta.field().order() as u64
    }

    pub fn w(&self, n: usize, s: i64) -> Arc<WPoly> {
        if let Some(w) = self.w.lock().unwrap().get(&(n, s)) {
            return w.clone();
        }
        let w = Arc::new(w_poly(self.zeta.field(), n, s));
        self.w.lock().unwrap().insert((n, s), w.clone());
        w
    }

    /// H^W_{d,n}(s) = Σ_i c_{n,i}^{(s)} S_d(s − i).
    pub fn hw(&self, d: usize, n: usize, s: i64) -> RatK {
        if let Some(x) = self.hw.lock().unwrap().get(&(d, n, s)) {
            return x.clone();
        }
        let w = self.w(n, s);
        let mut acc = RatK::zero(self.zeta.field());
        for (i, c) in w.terms() {
            acc = acc.add(&c.mul(&self.zeta.power_sum(d as i64, s - i as i64)));
        }
        self.hw.lock().unwrap().insert((d, n, s), acc.clone());
        acc
    }

    fn hw_slot(&self, n: usize, s: i64) -> Result<SlotBound<'_>> {
        let w = self.w(n, s);
        let mut settle = 0;
        for (i, _) in w.terms() {
            let t = s - i as i64;
            if t <= 0 {
                settle = settle.max(self.zeta.vanishing_degree(t)?);
            }
        }
        let terms: Vec<(i64, i64)> = w
            .terms()
            .map(|(i, c)| (i as i64, c.v_inf().unwrap()))
            .collect();
        let z = &self.zeta;
        Ok(SlotBound {
            f: Box::new(move |d| {
                terms
                    .iter()
                    .filter_map(|&(i, vc)| z.valuation_bound(d, s - i).unwrap().map(|v| v + vc))
                    .min()
            }),
            settle,
        })
    }

    /// γ_N(𝐬) by the chain sum of H^W, exactly in K, to 1/θ-precision `prec`.
    pub fn gamma_direct_exact(&self, n_total: usize, s: &Index, prec: i64) -> Result<RatK> {
        let f = self.zeta.field();
        let one = RatK::one(f);
        if s.is_empty() {
            return Ok(if n_total == 0 { one } else { one.zero_like() });
        }
        let mut acc = one.zero_like();
        for ns in weak_compositions(n_total, s.depth()) {
            let slots = ns
                .iter()
                .zip(s.entries())
                .map(|(&n, &sj)| self.hw_slot(n, sj))
                .collect::<Result<Vec<_>>>()?;
            let d = certified_cutoff(&slots, prec)?;
            let fs: Vec<Box<dyn Fn(usize) -> RatK + '_>> = ns
                .iter()
                .zip(s.entries())
                .map(|(&n, &sj)| Box::new(move |d| self.hw(d, n, sj)) as Box<dyn Fn(usize) -> RatK>)
                .collect();
            let refs: Vec<&dyn Fn(usize) -> RatK> = fs.iter().map(|b| b.as_ref()).collect();
            acc = acc.add(&chain_sum(d, &one, &refs));
        }
        Ok(acc)
    }

    /// γ_N(𝐬) through Σ Π c_{n_j,i_j} ζ_A(s_1 − i_1, …), exactly in K.
    pub fn gamma_mzv_exact(&self, n_total: usize, s: &Index, prec: i64) -> Result<RatK> {
        let f = self.zeta.field();
        let one = RatK::one(f);
        if s.is_empty() {
            return Ok(if n_total == 0 { one } else { one.zero_like() });
        }
        let mut acc = one.zero_like();
        for ns in weak_compositions(n_total, s.depth()) {
            let ws: Vec<Arc<WPoly>> = ns
                .iter()
                .zip(s.entries())
                .map(|(&n, &sj)| self.w(n, sj))
                .collect();
            let mut stack: Vec<(Vec<i64>, RatK)> = vec![(Vec::new(), one.clone())];
            for (w, &sj) in ws.iter().zip(s.entries()) {
                let mut next = Vec::new();
                for (shifted, c) in &stack {
                    for (i, ci) in w.terms() {
                        let mut v = shifted.clone();
                        v.push(sj - i as i64);
                        next.push((v, c.mul(ci)));
                    }
                }
                stack = next;
            }
            for (shifted, c) in stack {
                let need = prec - c.v_inf().unwrap().min(0);
                let (_, z) = self.zeta.zeta_truncation(&Index::new(shifted), need)?;
                acc = acc.add(&c.mul(&z));
            }
        }
        Ok(acc)
    }

    pub fn gamma_direct(&self, n: usize, s: &Index, prec: i64) -> Result<Laurent> {
        let kinf = LaurentField::k_inf(self.zeta.field());
        Ok(Laurent::embed(
            &kinf,
            &self.gamma_direct_exact(n, s, prec)?,
            prec,
        ))
    }

    pub fn gamma_mzv(&self, n: usize, s: &Index, prec: i64) -> Result<Laurent> {
        let kinf = LaurentField::k_inf(self.zeta.field());
        Ok(Laurent::embed(
            &kinf,
            &self.gamma_mzv_exact(n, s, prec)?,
            prec,
        ))
    }

    /// γ_1 of depth 1 or 2 through the closed forms in 1/L_1, 1/D_1 and ζ_A.
    pub fn gamma_one_closed_form(&self, s: &Index, prec: i64) -> Result<Laurent> {
        let f = self.zeta.field();
        let one = PolyA::one(f);
        let inv_l1 = RatK::new(one.clone(), l_fact(f, 1))?;
        let inv_d1 = RatK::new(one, d_fact(f, 1))?;
        let q = self.r() as i64 - 1;
        let z = |v: Vec<i64>| self.zeta.zeta_truncation(&Index::new(v), prec).map(|x| x.1);
        let x = match *s.entries() {
            [s1] => inv_l1
                .mul(&z(vec![s1])?)
                .add(&inv_d1.mul(&z(vec![s1 - q])?))
                .scale_int(-s1),
            [s1, s2] => {
                let a = inv_l1.mul(&z(vec![s1, s2])?).scale_int(-(s1 + s2));
                let b = inv_d1.mul(&z(vec![s1 - q, s2])?).scale_int(-s1);
                let c = inv_d1.mul(&z(vec![s1, s2 - q])?).scale_int(-s2);
                a.add(&b).add(&c)
            }
            _ => {
                return Err(Error::Precondition(format!(
                    "closed form for γ_1 needs depth 1 or 2, got {s}"
                )))
            }
        };
        Ok(Laurent::embed(&LaurentField::k_inf(f), &x, prec))
    }

    /// γ_0 … γ_{N_max} by the MZV route; N = 0 and N = N_max are rechecked by
    /// the harmonic-sum route.
    pub fn zeta_u_series(&self, s: &Index, nmax: usize, prec: i64) -> Result<USeries> {
        if s.is_empty() {
            return Err(Error::Precondition("ζ_u needs a non-empty index".into()));
        }
        let gammas = (0..=nmax)
            .map(|n| self.gamma_mzv(n, s, prec))
            .collect::<Result<Vec<_>>>()?;
        let mut spot_checked = vec![0];
        if nmax > 0 {
            spot_checked.push(nmax);
        }
        for &n in &spot_checked {
            let g = self.gamma_direct(n, s, prec)?;
            if !g.eq_to(&gammas[n], prec) {
                return Err(Error::PrecisionNotCertified(format!(
                    "γ_{n}{s}: the two routes disagree below {prec}"
                )));
            }
        }
        Ok(USeries {
            index: s.clone(),
            gammas,
            step: self.r() - 1,
            spot_checked,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FiniteField;

    fn engine(q: u64) -> UExpansion {
        let f = FiniteField::of_order(q).unwrap();
        UExpansion::new(Arc::new(ZetaEngine::new(&f)))
    }

    #[test]
    fn compositions() {
        assert_eq!(
            weak_compositions(2, 2),
            vec![vec![0, 2], vec![1, 1], vec![2, 0]]
        );
        assert_eq!(weak_compositions(0, 0), vec![Vec::<usize>::new()]);
        assert!(weak_compositions(1, 0).is_empty());
    }

    #[test]
    fn routes_agree() {
        for q in [2u64, 3] {
            let u = engine(q);
            for s in [vec![1], vec![2], vec![2, 1], vec![1, 3]] {
                let s = Index::new(s);
                for n in 0..=2 {
                    let a = u.gamma_direct(n, &s, 25).unwrap();
                    let b = u.gamma_mzv(n, &s, 25).unwrap();
                    assert!(a.eq_to(&b, 25), "q={q} {s} N={n}");
                }
            }
        }
    }

    #[test]
    fn gamma_one_depth_one_formula() {
        let u = engine(3);
        let f = u.zeta().field().clone();
        let kinf = LaurentField::k_inf(&f);
        let one = PolyA::one(&f);
        let inv_l1 = RatK::new(one.clone(), l_fact(&f, 1)).unwrap();
        let inv_d1 = RatK::new(one, d_fact(&f, 1)).unwrap();
        for s in 1..=4i64 {
            let z = |t: i64| u.zeta().zeta_truncation(&Index::new([t]), 40).unwrap().1;
            let want = inv_l1.mul(&z(s)).add(&inv_d1.mul(&z(s - 2))).scale_int(-s);
            let got = u.gamma_mzv(1, &Index::new([s]), 30).unwrap();
            assert!(got.eq_to(&Laurent::embed(&kinf, &want, 30), 30), "s={s}");
        }
    }

    #[test]
    fn gamma_one_closed_forms() {
        for q in [2u64, 3] {
            let u = engine(q);
            for s in [vec![1], vec![3], vec![1, 1], vec![2, 3]] {
                let s = Index::new(s);
                let want = u.gamma_one_closed_form(&s, 25).unwrap();
                assert!(
                    u.gamma_mzv(1, &s, 25).unwrap().eq_to(&want, 25),
                    "q={q} {s}"
                );
                if s.entries() == [1] {
                    assert!(!want.is_zero_to_precision());
                }
            }
        }
    }
}
