//! K(Λ_𝔫) as the quotient K[X]/(Φ_𝔫^C(X)), with λ_𝔫 the class of X.

use std::fmt;
use std::sync::Arc;

use crate::algebra::{is_irreducible, Poly, PolyA, RatK, ResidueField, Ring};
use crate::carlitz::{bracket_at, carlitz_cyclotomic, carlitz_eval};
use crate::error::{Error, Result};

#[derive(Debug)]
pub struct CycloRing {
    n: PolyA,
    phi: Vec<RatK>,
    /// `(Φ_𝔫(X) − Φ_𝔫(0))/X` and `Φ_𝔫(0)`, used for `1/λ`.
    phi_tail: Vec<RatK>,
    phi_zero: RatK,
}

#[derive(Clone)]
pub struct CycloElem {
    ring: Arc<CycloRing>,
    c: Vec<RatK>,
}

impl PartialEq for CycloElem {
    fn eq(&self, other: &Self) -> bool {
        self.c == other.c && self.ring.n == other.ring.n
    }
}

impl CycloRing {
    pub fn new(n: &PolyA) -> Result<Arc<Self>> {
        if n.degree() < 1 {
            return Err(Error::Precondition(
                "cyclotomic ring needs a nonconstant modulus".into(),
            ));
        }
        let phi_a = carlitz_cyclotomic(n)?;
        let phi: Vec<RatK> = phi_a
            .coeffs()
            .iter()
            .map(|c| RatK::from_poly(c.clone()))
            .collect();
        let phi_tail = phi[1..].to_vec();
        let phi_zero = phi[0].clone();
        Ok(Arc::new(CycloRing {
            n: n.clone(),
            phi,
            phi_tail,
            phi_zero,
        }))
    }

    pub fn modulus(&self) -> &PolyA {
        &self.n
    }

    /// Φ_𝔫^C as a polynomial over A.
    pub fn phi(&self) -> Poly<PolyA> {
        let zero = PolyA::zero(self.n.field());
        Poly::new(
            &zero,
            self.phi
                .iter()
                .map(|c| c.as_poly().unwrap().clone())
                .collect(),
        )
    }

    /// Φ(𝔫) = deg Φ_𝔫^C.
    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }
}

impl CycloElem {
    pub fn new(ring: &Arc<CycloRing>, c: Vec<RatK>) -> Self {
        let mut e = CycloElem {
            ring: ring.clone(),
            c,
        };
        e.reduce();
        e
    }

    pub fn from_k(ring: &Arc<CycloRing>, x: RatK) -> Self {
        Self::new(ring, vec![x])
    }

    pub fn from_a(ring: &Arc<CycloRing>, a: &PolyA) -> Self {
        Self::from_k(ring, RatK::from_poly(a.clone()))
    }

    /// λ_𝔫, the class of X.
    pub fn lambda(ring: &Arc<CycloRing>) -> Self {
        let f = ring.n.field();
        Self::new(ring, vec![RatK::zero(f), RatK::one(f)])
    }

    pub fn ring(&self) -> &Arc<CycloRing> {
        &self.ring
    }

    /// Coefficients in the basis 1, λ, …, λ^{Φ(𝔫)−1}.
    pub fn coeffs(&self) -> &[RatK] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> RatK {
        self.c
            .get(i)
            .cloned()
            .unwrap_or_else(|| RatK::zero(self.ring.n.field()))
    }

    fn reduce(&mut self) {
        let deg = self.ring.degree();
        while self.c.len() > deg {
            let top = self.c.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let base = self.c.len() - deg;
            for (j, p) in self.ring.phi[..deg].iter().enumerate() {
                if !p.is_zero() {
                    self.c[base + j] = self.c[base + j].sub(&top.mul(p));
                }
            }
        }
        while self.c.last().is_some_and(|x| x.is_zero()) {
            self.c.pop();
        }
    }

    fn as_kpoly(&self) -> Poly<RatK> {
        Poly::new(&RatK::zero(self.ring.n.field()), self.c.clone())
    }

    /// Inverse by extended gcd in K[X]; fails when the class is a zero divisor.
    pub fn inverse_gcd(&self) -> Result<Self> {
        let f = self.ring.n.field();
        let zero = RatK::zero(f);
        let m = Poly::new(&zero, self.ring.phi.clone());
        let (mut r0, mut r1) = (m, self.as_kpoly());
        let (mut t0, mut t1) = (Poly::zero(&zero), Poly::constant(RatK::one(f)));
        if r1.is_zero() {
            return Err(Error::NotInvertible);
        }
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1).ok_or(Error::NotInvertible)?;
            let t = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.deg() != Some(0) {
            return Err(Error::NotInvertible);
        }
        let inv_lead = r0.lead().inverse()?;
        Ok(Self::new(&self.ring, t0.scale(&inv_lead).coeffs().to_vec()))
    }

    /// `1/λ = −q(λ)/Φ_𝔫(0)` where `Φ_𝔫(X) = X·q(X) + Φ_𝔫(0)`.
    pub fn lambda_inverse(ring: &Arc<CycloRing>) -> Result<Self> {
        let s = ring.phi_zero.inverse()?.neg();
        Ok(Self::new(
            ring,
            ring.phi_tail.iter().map(|c| c.mul(&s)).collect(),
        ))
    }

    /// `C_a(x)`.
    pub fn carlitz(&self, a: &PolyA) -> Self {
        carlitz_eval(a, self, |c| Self::from_a(&self.ring, c))
    }

    /// Image of `x` under `λ ↦ 0`, `θ ↦ θ mod v`, when 𝔫 = v is irreducible.
    pub fn reduce_at_zero(&self, v: &PolyA) -> Result<PolyA> {
        if *v != self.ring.n || !is_irreducible(v) {
            return Err(Error::WrongModulus);
        }
        let res = ResidueField::new(v.clone())?;
        for c in &self.c[1.min(self.c.len())..] {
            res.reduce_rat(c)?;
        }
        res.reduce_rat(&self.coeff(0))
    }
}

/// `[a]_λ = C_a(λ)/λ` in the quotient.
pub fn bracket_at_lambda(a: &PolyA, ring: &Arc<CycloRing>) -> Result<CycloElem> {
    bracket_at(a, &CycloElem::lambda(ring), |c| CycloElem::from_a(ring, c))
}

/// `1/[a]_λ` for monic a with deg a < deg 𝔫, without a gcd in K[X].
///
/// With g = gcd(a, 𝔫), a = g·a″, 𝔫 = g·𝔫″, μ = C_g(λ) and ν = C_a(λ): choose
/// b with a″b ≡ 1 (mod 𝔫″); then C_b(ν) = μ, so `1/[a]_λ = λ·[b]_ν / μ`.
pub fn inverse_bracket(a: &PolyA, ring: &Arc<CycloRing>) -> Result<CycloElem> {
    let n = &ring.n;
    if !a.is_monic() || a.degree() >= n.degree() {
        return bracket_at_lambda(a, ring)?
            .inverse_gcd()
            .map_err(|_| Error::BracketNotInvertible(a.to_string()));
    }
    let lam = CycloElem::lambda(ring);
    if a.degree() == 0 {
        return Ok(lam.one_like());
    }
    let g = a.gcd(n);
    let a2 = a.div_exact(&g).unwrap();
    let n2 = n.div_exact(&g).unwrap();
    let b = a2
        .rem(&n2)
        .inv_mod(&n2)
        .ok_or_else(|| Error::BracketNotInvertible(a.to_string()))?;
    let nu = lam.carlitz(a);
    let b_nu = bracket_at(&b, &nu, |c| CycloElem::from_a(ring, c))?;
    let inv = if g.is_one() {
        b_nu
    } else {
        let mu = lam.carlitz(&g);
        let sub = CycloRing::new(&n2)?;
        let s = sub.phi_zero.inverse()?.neg();
        let tail = Poly::new(
            &RatK::zero(n.field()),
            sub.phi_tail.iter().map(|c| c.mul(&s)).collect(),
        );
        let mu_inv = tail.eval_in(&mu, |c| CycloElem::from_k(ring, c.clone()));
        lam.mul(&b_nu).mul(&mu_inv)
    };
    let x = bracket_at_lambda(a, ring)?;
    if !x.mul(&inv).is_one() {
        return Err(Error::BracketNotInvertible(a.to_string()));
    }
    Ok(inv)
}

impl fmt::Debug for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .c
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("({c})"),
                1 => format!("({c})·λ"),
                _ => format!("({c})·λ^{i}"),
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl Ring for CycloElem {
    fn zero_like(&self) -> Self {
        CycloElem {
            ring: self.ring.clone(),
            c: Vec::new(),
        }
    }
    fn one_like(&self) -> Self {
        CycloElem::from_k(&self.ring, RatK::one(self.ring.n.field()))
    }
    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        let n = self.c.len().max(rhs.c.len());
        let c = (0..n).map(|i| self.coeff(i).add(&rhs.coeff(i))).collect();
        Self::new(&self.ring, c)
    }
    fn sub(&self, rhs: &Self) -> Self {
        let n = self.c.len().max(rhs.c.len());
        let c = (0..n).map(|i| self.coeff(i).sub(&rhs.coeff(i))).collect();
        Self::new(&self.ring, c)
    }
    fn neg(&self) -> Self {
        CycloElem {
            ring: self.ring.clone(),
            c: self.c.iter().map(|x| x.neg()).collect(),
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.c.is_empty() || rhs.c.is_empty() {
            return self.zero_like();
        }
        let zero = RatK::zero(self.ring.n.field());
        let mut v = vec![zero; self.c.len() + rhs.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] = v[i + j].add(&a.mul(b));
                }
            }
        }
        Self::new(&self.ring, v)
    }
    fn from_int(&self, k: i64) -> Self {
        Self::from_k(&self.ring, RatK::one(self.ring.n.field()).from_int(k))
    }
    fn try_inverse(&self) -> Option<Self> {
        self.inverse_gcd().ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{enumerate_monic, monic_below, FiniteField};

    #[test]
    fn lambda_is_torsion() {
        let f = FiniteField::of_order(3).unwrap();
        for n in enumerate_monic(&f, 2) {
            let ring = CycloRing::new(&n).unwrap();
            let lam = CycloElem::lambda(&ring);
            assert!(ring
                .phi()
                .eval_in(&lam, |c| CycloElem::from_a(&ring, c))
                .is_zero());
            assert!(lam.carlitz(&n).is_zero());
            let coprime = monic_below(&f, 2)
                .iter()
                .flat_map(|m| f.elements().skip(1).map(move |e| m.scale(e)))
                .chain(std::iter::once(PolyA::zero(&f)))
                .filter(|b| b.gcd(&n).is_one() && !b.is_zero())
                .count();
            assert_eq!(ring.degree(), coprime);
        }
    }

    #[test]
    fn inverse_examples() {
        let f = FiniteField::of_order(3).unwrap();
        let t = PolyA::theta(&f);
        let one = PolyA::one(&f);
        let ring = CycloRing::new(&t.mul(&t).add(&one)).unwrap();
        let x = bracket_at_lambda(&t, &ring).unwrap();
        let y = x.inverse_gcd().unwrap();
        assert!(x.mul(&y).is_one());
        assert!(x.one_like().inverse_gcd().unwrap().is_one());
        assert_eq!(x.zero_like().inverse_gcd(), Err(Error::NotInvertible));
        let ring_t = CycloRing::new(&t).unwrap();
        assert!(bracket_at_lambda(&t, &ring_t).unwrap().is_zero());
        let b = bracket_at_lambda(&t.add(&one), &ring_t).unwrap();
        assert!(b.inverse_gcd().is_ok());
        assert_eq!(b.reduce_at_zero(&t).unwrap(), one);
    }

    #[test]
    fn fast_inverse_matches_gcd() {
        for q in [2u64, 3] {
            let f = FiniteField::of_order(q).unwrap();
            for n in enumerate_monic(&f, 2) {
                let ring = CycloRing::new(&n).unwrap();
                for a in monic_below(&f, 2) {
                    let fast = inverse_bracket(&a, &ring).unwrap();
                    let slow = bracket_at_lambda(&a, &ring).unwrap().inverse_gcd().unwrap();
                    assert_eq!(fast, slow);
                }
            }
        }
    }

    #[test]
    fn reduction_at_zero() {
        let f = FiniteField::of_order(3).unwrap();
        let v = PolyA::from_coeffs(&f, vec![1, 0, 1]);
        let ring = CycloRing::new(&v).unwrap();
        for a in monic_below(&f, 2) {
            let x = bracket_at_lambda(&a, &ring).unwrap();
            assert_eq!(x.reduce_at_zero(&v).unwrap(), a.rem(&v));
            let inv = inverse_bracket(&a, &ring).unwrap();
            assert_eq!(
                inv.reduce_at_zero(&v).unwrap(),
                a.rem(&v).inv_mod(&v).unwrap()
            );
        }
        assert!(CycloElem::lambda(&ring)
            .reduce_at_zero(&v)
            .unwrap()
            .is_zero());
        let bad = CycloElem::from_k(&ring, RatK::new(PolyA::one(&f), v.clone()).unwrap());
        assert_eq!(bad.reduce_at_zero(&v), Err(Error::DenominatorNotCoprime));
        let composite = CycloRing::new(&PolyA::theta_pow(&f, 2)).unwrap();
        let t2 = PolyA::theta_pow(&f, 2);
        assert_eq!(
            CycloElem::lambda(&composite).reduce_at_zero(&t2),
            Err(Error::WrongModulus)
        );
    }
}
