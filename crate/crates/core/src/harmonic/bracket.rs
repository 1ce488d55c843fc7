//! Images of monic polynomials in a target ring: the identity, formal or
//! evaluated u-brackets, the X-deformed bracket and the 1/t expansion.

use std::sync::Arc;

use crate::algebra::{FiniteField, PolyA, PowerSeries, RatK, Ring};
use crate::carlitz::{bracket_at, carlitz_coeffs};
use crate::cyclo::{bracket_at_lambda, inverse_bracket, CycloElem, CycloRing};
use crate::error::{Error, Result};
use crate::laurent::{Laurent, LaurentField};

/// A rule a ↦ [a] into a ring; harmonic sums are taken over its images.
pub trait Bracket: Send + Sync {
    type T: Ring;

    fn field(&self) -> &Arc<FiniteField>;

    fn one(&self) -> Self::T;

    fn image(&self, a: &PolyA) -> Result<Self::T>;

    fn inverse_image(&self, a: &PolyA) -> Result<Self::T> {
        self.image(a)?
            .try_inverse()
            .ok_or_else(|| Error::BracketNotInvertible(a.to_string()))
    }

    /// A closed form for Σ_{a monic, deg a = d} [a]^{−s}, if the provider has one.
    fn power_sum_shortcut(&self, _d: usize, _s: i64) -> Option<Result<Self::T>> {
        None
    }
}

/// [a] = a in K.
#[derive(Clone, Debug)]
pub struct IdentityBracket {
    f: Arc<FiniteField>,
}

impl IdentityBracket {
    pub fn new(f: &Arc<FiniteField>) -> Self {
        IdentityBracket { f: f.clone() }
    }
}

/// S_d(s) for s ≥ 1 as Σ (L/a)^s / L^s over the lcm L of the monics of degree d.
pub fn power_sum_lcm(f: &Arc<FiniteField>, d: usize, s: i64) -> RatK {
    let monics = crate::algebra::enumerate_monic(f, d);
    if s <= 0 {
        let k = (-s) as u64;
        let tot = monics
            .iter()
            .fold(PolyA::zero(f), |acc, a| acc.add(&a.pow(k)));
        return RatK::from_poly(tot);
    }
    let mut l = PolyA::one(f);
    for v in crate::algebra::irreducibles_up_to(f, d) {
        let k = d / v.deg().unwrap();
        l = l.mul(&v.pow(k as u64));
    }
    let ls = l.pow(s as u64);
    let mut num = PolyA::zero(f);
    for a in &monics {
        num = num.add(&ls.div_exact(&a.pow(s as u64)).expect("a^s divides L^s"));
    }
    RatK::new(num, ls).expect("nonzero lcm")
}

impl Bracket for IdentityBracket {
    type T = RatK;

    fn field(&self) -> &Arc<FiniteField> {
        &self.f
    }
    fn one(&self) -> RatK {
        RatK::one(&self.f)
    }
    fn image(&self, a: &PolyA) -> Result<RatK> {
        Ok(RatK::from_poly(a.clone()))
    }
    fn power_sum_shortcut(&self, d: usize, s: i64) -> Option<Result<RatK>> {
        Some(Ok(power_sum_lcm(&self.f, d, s)))
    }
}

/// [a]_u as a power series in u over K, truncated at a fixed order.
#[derive(Clone, Debug)]
pub struct UFormalBracket {
    f: Arc<FiniteField>,
    order: usize,
}

impl UFormalBracket {
    pub fn new(f: &Arc<FiniteField>, order: usize) -> Self {
        UFormalBracket {
            f: f.clone(),
            order: order.max(1),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }
}

impl Bracket for UFormalBracket {
    type T = PowerSeries<RatK>;

    fn field(&self) -> &Arc<FiniteField> {
        &self.f
    }
    fn one(&self) -> Self::T {
        PowerSeries::constant(RatK::one(&self.f), self.order)
    }
    fn image(&self, a: &PolyA) -> Result<Self::T> {
        if a.is_zero() {
            return Err(Error::ZeroInput);
        }
        let r = self.f.order() as usize;
        let zero = RatK::zero(&self.f);
        let mut c = vec![zero.clone(); self.order];
        let mut e = 1usize;
        for coeff in carlitz_coeffs(a) {
            if e > self.order {
                break;
            }
            c[e - 1] = RatK::from_poly(coeff);
            e = e.saturating_mul(r);
        }
        Ok(PowerSeries::new(&zero, self.order, c))
    }
}

/// [a]_λ in A[λ]/(Φ_𝔫(λ)), with the gcd-free inverse.
#[derive(Clone, Debug)]
pub struct TorsionBracket {
    ring: Arc<CycloRing>,
}

impl TorsionBracket {
    pub fn new(n: &PolyA) -> Result<Self> {
        Ok(TorsionBracket {
            ring: CycloRing::new(n)?,
        })
    }

    pub fn ring(&self) -> &Arc<CycloRing> {
        &self.ring
    }
}

impl Bracket for TorsionBracket {
    type T = CycloElem;

    fn field(&self) -> &Arc<FiniteField> {
        self.ring.modulus().field()
    }
    fn one(&self) -> CycloElem {
        CycloElem::from_k(&self.ring, RatK::one(self.field()))
    }
    fn image(&self, a: &PolyA) -> Result<CycloElem> {
        bracket_at_lambda(a, &self.ring)
    }
    fn inverse_image(&self, a: &PolyA) -> Result<CycloElem> {
        inverse_bracket(a, &self.ring)
    }
}

/// [a]_u at a point u of a Laurent field; inverses are taken to a fixed
/// absolute precision.
#[derive(Clone, Debug)]
pub struct LaurentBracket {
    u: Laurent,
    prec: i64,
}

impl LaurentBracket {
    pub fn new(u: Laurent, prec: i64) -> Self {
        LaurentBracket { u, prec }
    }

    pub fn point(&self) -> &Laurent {
        &self.u
    }

    pub fn laurent_field(&self) -> &Arc<LaurentField> {
        self.u.field()
    }
}

impl Bracket for LaurentBracket {
    type T = Laurent;

    fn field(&self) -> &Arc<FiniteField> {
        self.u.field().base()
    }
    fn one(&self) -> Laurent {
        Laurent::one(self.u.field())
    }
    fn image(&self, a: &PolyA) -> Result<Laurent> {
        let lf = self.u.field().clone();
        bracket_at(a, &self.u, |c| Laurent::embed_poly(&lf, c))
    }
    fn inverse_image(&self, a: &PolyA) -> Result<Laurent> {
        let x = self.image(a)?;
        let v = x
            .valuation()
            .ok_or_else(|| Error::BracketNotInvertible(a.to_string()))?;
        x.inverse_rel(self.prec + v).map(|y| y.with_prec(self.prec))
    }
}

/// [a]_X = a + a^r·X in K[[X]], truncated.
#[derive(Clone, Debug)]
pub struct XBracket {
    f: Arc<FiniteField>,
    order: usize,
}

impl XBracket {
    pub fn new(f: &Arc<FiniteField>, order: usize) -> Self {
        XBracket {
            f: f.clone(),
            order: order.max(1),
        }
    }
}

impl Bracket for XBracket {
    type T = PowerSeries<RatK>;

    fn field(&self) -> &Arc<FiniteField> {
        &self.f
    }
    fn one(&self) -> Self::T {
        PowerSeries::constant(RatK::one(&self.f), self.order)
    }
    fn image(&self, a: &PolyA) -> Result<Self::T> {
        let zero = RatK::zero(&self.f);
        let x = RatK::from_poly(a.clone());
        let xr = x.frobenius(1);
        Ok(PowerSeries::new(&zero, self.order, vec![x, xr]))
    }
}

/// 1/[a]_{1/t} as a power series in t over A, truncated. Only inverse images
/// exist here, so only positive exponents can be summed.
#[derive(Clone, Debug)]
pub struct TBracket {
    f: Arc<FiniteField>,
    order: usize,
}

impl TBracket {
    pub fn new(f: &Arc<FiniteField>, order: usize) -> Self {
        TBracket {
            f: f.clone(),
            order: order.max(1),
        }
    }
}

impl Bracket for TBracket {
    type T = PowerSeries<RatK>;

    fn field(&self) -> &Arc<FiniteField> {
        &self.f
    }
    fn one(&self) -> Self::T {
        PowerSeries::constant(RatK::one(&self.f), self.order)
    }
    fn image(&self, _a: &PolyA) -> Result<Self::T> {
        Err(Error::Unsupported("[a]_{1/t} has a pole at t = 0".into()))
    }
    /// `t^{r^d − 1}(1 + Σ_{i<d} [a,i] t^{r^d − r^i})^{−1}` for monic a of degree d.
    fn inverse_image(&self, a: &PolyA) -> Result<Self::T> {
        if !a.is_monic() {
            return Err(Error::NotMonic);
        }
        let r = self.f.order() as usize;
        let d = a.deg().unwrap();
        let zero = RatK::zero(&self.f);
        let rd = r.pow(d as u32);
        let shift = rd - 1;
        if shift >= self.order {
            return Ok(PowerSeries::new(&zero, self.order, Vec::new()));
        }
        let inner_order = self.order - shift;
        let mut c = vec![zero.clone(); inner_order];
        c[0] = RatK::one(&self.f);
        for (i, coeff) in carlitz_coeffs(a).into_iter().enumerate().take(d) {
            let e = rd - r.pow(i as u32);
            if e < inner_order {
                c[e] = RatK::from_poly(coeff);
            }
        }
        let inv = PowerSeries::new(&zero, inner_order, c)
            .try_inverse()
            .expect("unit constant term");
        let mut out = vec![zero.clone(); shift];
        out.extend(inv.coeffs().iter().cloned());
        Ok(PowerSeries::new(&zero, self.order, out))
    }
}
