//! Randomized invariants of the arithmetic layers, the Carlitz module, the
//! cyclotomic quotient, harmonic sums and the shuffle algebra.

use std::sync::Arc;

use num_rational::Ratio;
use proptest::prelude::*;

use carlitz_core::carlitz::{carlitz_eval, carlitz_poly, exp_c, u_bracket};
use carlitz_core::cyclo::{bracket_at_lambda, CycloElem, CycloRing};
use carlitz_core::harmonic::{h_lt_naive, Harmonic, IdentityBracket, Index, UFormalBracket};
use carlitz_core::laurent::{argmax, dominance_profile, in_domain_d, Laurent, LaurentField};
use carlitz_core::shuffle::{ShuffleAlgebra, ShuffleElem, Word};
use carlitz_core::uexp::{local_expansion_direct, local_expansion_w};
use carlitz_core::{
    enumerate_monic, irreducibles_up_to, reduce_mod_v, FiniteField, PolyA, RatK, ResidueField, Ring,
};

fn field(r: u64) -> Arc<FiniteField> {
    FiniteField::of_order(r).unwrap()
}

fn poly(f: &Arc<FiniteField>, c: &[u16]) -> PolyA {
    let q = f.order() as u16;
    PolyA::from_coeffs(f, c.iter().map(|&x| x % q).collect())
}

fn monic(f: &Arc<FiniteField>, c: &[u16]) -> PolyA {
    let mut v: Vec<u16> = c.iter().map(|&x| x % f.order() as u16).collect();
    v.push(1);
    PolyA::from_coeffs(f, v)
}

fn coeffs(max_len: usize) -> impl Strategy<Value = Vec<u16>> {
    prop::collection::vec(0u16..64, 0..=max_len)
}

fn order() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![2u64, 3, 4, 5, 7, 9])
}

fn small_order() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![2u64, 3])
}

fn cfg(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(cfg(64))]

    #[test]
    fn finite_field_axioms(r in order(), a in 0u16..81, b in 0u16..81, c in 0u16..81) {
        let f = field(r);
        let q = f.order() as u16;
        let (x, y, z) = (f.elem(a % q), f.elem(b % q), f.elem(c % q));
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert_eq!(x.add(&y).add(&z), x.add(&y.add(&z)));
        prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
        prop_assert_eq!(x.mul(&y), y.mul(&x));
        prop_assert!(x.sub(&x).is_zero());
        prop_assert_eq!(x.pow(r), x.clone());
        if !x.is_zero() {
            prop_assert!(x.mul(&x.try_inverse().unwrap()).is_one());
        }
    }

    #[test]
    fn polynomial_ring_axioms(r in order(), a in coeffs(6), b in coeffs(6), c in coeffs(6)) {
        let f = field(r);
        let (x, y, z) = (poly(&f, &a), poly(&f, &b), poly(&f, &c));
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
        prop_assert_eq!(x.mul(&y), y.mul(&x));
        if let (Some(dx), Some(dy)) = (x.deg(), y.deg()) {
            prop_assert_eq!(x.mul(&y).deg(), Some(dx + dy));
        }
        if !y.is_zero() {
            let (q, rem) = x.divrem(&y);
            prop_assert_eq!(q.mul(&y).add(&rem), x.clone());
            prop_assert!(rem.degree() < y.degree());
        }
    }

    #[test]
    fn rational_functions_stay_normalized(
        r in order(),
        a in coeffs(4), b in coeffs(3), c in coeffs(4), d in coeffs(3), e in coeffs(3)
    ) {
        let f = field(r);
        let (da, dc) = (monic(&f, &b), monic(&f, &d));
        let x = RatK::new(poly(&f, &a), da).unwrap();
        let y = RatK::new(poly(&f, &c), dc).unwrap();
        let z = RatK::from_poly(poly(&f, &e));
        for v in [x.add(&y), x.mul(&y), x.sub(&y).mul(&z)] {
            prop_assert!(v.den().is_monic());
            prop_assert!(v.num().gcd(v.den()).is_one());
        }
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
        if !y.is_zero() {
            prop_assert_eq!(x.div(&y).unwrap().mul(&y), x.clone());
        }
    }

    #[test]
    fn reduction_mod_v_is_a_homomorphism(
        r in small_order(), which in 0usize..64,
        a in coeffs(4), b in coeffs(3), c in coeffs(4), d in coeffs(3)
    ) {
        let f = field(r);
        let vs = irreducibles_up_to(&f, 3);
        let v = &vs[which % vs.len()];
        let (da, dc) = (monic(&f, &b), monic(&f, &d));
        prop_assume!(da.gcd(v).is_one() && dc.gcd(v).is_one());
        let x = RatK::new(poly(&f, &a), da).unwrap();
        let y = RatK::new(poly(&f, &c), dc).unwrap();
        let res = ResidueField::new(v.clone()).unwrap();
        let (rx, ry) = (reduce_mod_v(&x, v).unwrap(), reduce_mod_v(&y, v).unwrap());
        prop_assert_eq!(reduce_mod_v(&x.mul(&y), v).unwrap(), res.mul(&rx, &ry));
        prop_assert_eq!(reduce_mod_v(&x.add(&y), v).unwrap(), res.add(&rx, &ry));
        prop_assert!(rx.degree() < v.degree());
    }
}

#[test]
fn monic_enumeration() {
    for r in [2u64, 3, 4, 5] {
        let f = field(r);
        for d in 0..=3usize {
            let all = enumerate_monic(&f, d);
            assert_eq!(all.len() as u64, r.pow(d as u32));
            assert!(all.iter().all(|a| a.is_monic() && a.deg() == Some(d)));
            let mut seen = all.clone();
            seen.sort_by_key(|a| a.coeffs().to_vec());
            seen.dedup();
            assert_eq!(seen.len(), all.len());
        }
    }
}

fn laurent(l: &Arc<LaurentField>, val: i64, lead: u16, rest: &[u16], prec: i64) -> Laurent {
    let q = l.coeff_field().order() as u16;
    let mut c = vec![1 + lead % (q - 1)];
    c.extend(rest.iter().map(|&x| x % q));
    Laurent::from_coeffs(l, val, c, prec)
}

fn laurent_field(r: u64, ramified: bool) -> Arc<LaurentField> {
    let f = field(r);
    if ramified {
        LaurentField::period_field(&f).unwrap()
    } else {
        LaurentField::k_inf(&f)
    }
}

proptest! {
    #![proptest_config(cfg(64))]

    #[test]
    fn absolute_value_is_multiplicative_and_ultrametric(
        r in small_order(), ramified in any::<bool>(),
        v1 in -6i64..6, v2 in -6i64..6, l1 in 0u16..8, l2 in 0u16..8,
        c1 in coeffs(8), c2 in coeffs(8)
    ) {
        let l = laurent_field(r, ramified);
        let x = laurent(&l, v1, l1, &c1, 20);
        let y = laurent(&l, v2, l2, &c2, 20);
        let (ax, ay) = (x.abs_exponent().unwrap(), y.abs_exponent().unwrap());
        prop_assert_eq!(x.mul(&y).abs_exponent().unwrap(), ax + ay);
        match x.add(&y).abs_exponent() {
            Ok(s) => {
                prop_assert!(s <= ax.max(ay));
                if ax != ay {
                    prop_assert_eq!(s, ax.max(ay));
                }
            }
            Err(_) => prop_assert_eq!(ax, ay),
        }
    }

    #[test]
    fn embedding_respects_arithmetic(
        r in small_order(), ramified in any::<bool>(),
        a in coeffs(4), b in coeffs(3), c in coeffs(4), d in coeffs(3)
    ) {
        let f = field(r);
        let l = laurent_field(r, ramified);
        let x = RatK::new(poly(&f, &a), monic(&f, &b)).unwrap();
        let y = RatK::new(poly(&f, &c), monic(&f, &d)).unwrap();
        let p = 30;
        let (ex, ey) = (Laurent::embed(&l, &x, p), Laurent::embed(&l, &y, p));
        let prod = ex.mul(&ey);
        prop_assert!(prod.agrees_with(&Laurent::embed(&l, &x.mul(&y), p)));
        prop_assert!(ex.add(&ey).eq_to(&Laurent::embed(&l, &x.add(&y), p), p));
        prop_assert!(prod.prec() >= p - 4 * l.e_ram());
    }

    #[test]
    fn dominance_is_unique_and_stabilizes(r in small_order(), num in -12i64..=12, den in 1i64..=4) {
        let eta = Ratio::new(num, den);
        prop_assume!(in_domain_d(r, eta));
        let report = dominance_profile(r, eta, 12);
        let kappa = report.kappa.expect("stable gap for admissible η");
        let threshold = (-eta).ceil().to_integer().max(0) + 3;
        for d in 1..=12i64 {
            let (i0, unique) = argmax(r, eta, d);
            prop_assert!(unique, "η = {} d = {}", eta, d);
            prop_assert!((0..=d).contains(&i0));
            if d >= threshold {
                prop_assert_eq!(d - i0, kappa);
            }
        }
    }
}

proptest! {
    #![proptest_config(cfg(48))]

    #[test]
    fn carlitz_bracket_is_linear(r in small_order(), a in coeffs(4), b in coeffs(4), eps in 1u16..3) {
        let f = field(r);
        let (x, y) = (poly(&f, &a), poly(&f, &b));
        prop_assume!(!x.is_zero() && !y.is_zero() && !x.add(&y).is_zero());
        let sum = u_bracket(&x).unwrap().add(&u_bracket(&y).unwrap());
        prop_assert_eq!(u_bracket(&x.add(&y)).unwrap(), sum);
        let e = eps % f.order() as u16;
        prop_assume!(e != 0);
        let scaled = u_bracket(&x).unwrap().scale(&PolyA::constant(&f, e));
        prop_assert_eq!(u_bracket(&x.scale(e)).unwrap(), scaled);
        let ub = u_bracket(&x).unwrap();
        prop_assert_eq!(ub.coeff(0), x.clone());
        prop_assert_eq!(ub.deg(), Some(r.pow(x.deg().unwrap() as u32) as usize - 1));
    }

    #[test]
    fn carlitz_composition_law(r in small_order(), a in coeffs(3), b in coeffs(3)) {
        let f = field(r);
        let (x, y) = (poly(&f, &a), poly(&f, &b));
        prop_assume!(!x.is_zero() && !y.is_zero());
        let lhs = u_bracket(&x).unwrap().mul(&u_bracket(&y).unwrap().compose(&carlitz_poly(&x)));
        prop_assert_eq!(lhs, u_bracket(&x.mul(&y)).unwrap());
    }

    #[test]
    fn carlitz_functional_equation(r in small_order(), a in coeffs(3), val in 1i64..4, lead in 0u16..8, rest in coeffs(6)) {
        let f = field(r);
        let x = poly(&f, &a);
        prop_assume!(!x.is_zero());
        let l = LaurentField::period_field(&f).unwrap();
        let prec = 40;
        let u = laurent(&l, val, lead, &rest, prec);
        let lift = |c: &PolyA| Laurent::embed_poly(&l, c);
        let lhs = carlitz_eval(&x, &exp_c(&u, prec).unwrap(), lift);
        let rhs = exp_c(&lift(&x).mul(&u), prec).unwrap();
        prop_assert!(lhs.agrees_with(&rhs));
        prop_assert!(lhs.prec().min(rhs.prec()) > lhs.lead_exp() + 4);
    }
}

proptest! {
    #![proptest_config(cfg(24))]

    #[test]
    fn torsion_point_is_a_root(r in small_order(), a in prop::collection::vec(0u16..64, 3), deg in 1usize..=3) {
        let f = field(r);
        let n = monic(&f, &a[..deg]);
        let ring = CycloRing::new(&n).unwrap();
        let lam = CycloElem::lambda(&ring);
        let phi = ring.phi().eval_in(&lam, |c| CycloElem::from_a(&ring, c));
        prop_assert!(phi.is_zero());
        prop_assert!(lam.carlitz(&n).is_zero());
    }

    #[test]
    fn reduction_at_zero_is_a_homomorphism(
        r in small_order(), which in 0usize..64,
        xs in prop::collection::vec(coeffs(3), 1..6), ys in prop::collection::vec(coeffs(3), 1..6)
    ) {
        let f = field(r);
        let vs = irreducibles_up_to(&f, 3);
        let v = &vs[which % vs.len()];
        let ring = CycloRing::new(v).unwrap();
        let elem = |cs: &[Vec<u16>]| CycloElem::new(&ring, cs.iter().map(|c| RatK::from_poly(poly(&f, c))).collect());
        let (x, y) = (elem(&xs), elem(&ys));
        let res = ResidueField::new(v.clone()).unwrap();
        let (rx, ry) = (x.reduce_at_zero(v).unwrap(), y.reduce_at_zero(v).unwrap());
        prop_assert_eq!(x.mul(&y).reduce_at_zero(v).unwrap(), res.mul(&rx, &ry));
        prop_assert_eq!(x.add(&y).reduce_at_zero(v).unwrap(), res.add(&rx, &ry));
    }
}

#[test]
fn bracket_at_lambda_reduces_to_a() {
    for r in [2u64, 3] {
        let f = field(r);
        for v in irreducibles_up_to(&f, 3) {
            let ring = CycloRing::new(&v).unwrap();
            let res = ResidueField::new(v.clone()).unwrap();
            for d in 0..v.deg().unwrap() {
                for a in enumerate_monic(&f, d) {
                    let b = bracket_at_lambda(&a, &ring).unwrap();
                    assert!(b.try_inverse().is_some(), "[{a}]_λ invertible mod Φ_{v}");
                    assert_eq!(
                        b.reduce_at_zero(&v).unwrap(),
                        res.reduce(&a),
                        "v = {v}, a = {a}"
                    );
                }
            }
        }
    }
}

#[test]
fn cyclotomic_degree_counts_units() {
    for r in [2u64, 3] {
        let f = field(r);
        for d in 1..=4usize {
            if r == 3 && d == 4 {
                continue;
            }
            for n in enumerate_monic(&f, d) {
                let units = (0..r.pow(d as u32))
                    .map(|k| {
                        let c = (0..d).map(|i| ((k / r.pow(i as u32)) % r) as u16).collect();
                        PolyA::from_coeffs(&f, c)
                    })
                    .filter(|b| !b.is_zero() && b.gcd(&n).is_one())
                    .count();
                assert_eq!(CycloRing::new(&n).unwrap().degree(), units, "𝔫 = {n}");
            }
        }
    }
}

fn index(entries: Vec<i64>) -> Index {
    Index::new(entries)
}

proptest! {
    #![proptest_config(cfg(24))]

    #[test]
    fn harmonic_decomposition_identity_provider(
        r in small_order(), d in 0usize..=4, s in prop::collection::vec(-2i64..=4, 0..=3)
    ) {
        prop_assume!(r == 2 || d <= 3);
        let f = field(r);
        let s = index(s);
        let h = Harmonic::new(IdentityBracket::new(&f));
        let lt = h.h_lt(d, &s).unwrap();
        let parts = (0..d).map(|e| h.h(e, &s).unwrap()).fold(RatK::zero(&f), |acc, x| acc.add(&x));
        if !s.is_empty() {
            prop_assert_eq!(&lt, &parts);
        }
        prop_assert_eq!(&lt, &h_lt_naive(h.bracket(), d, &s).unwrap());
        if let Some((&s1, _)) = s.entries().split_first() {
            prop_assert_eq!(h.h(d, &s).unwrap(), h.power_sum(d, s1).unwrap().mul(&h.h_lt(d, &s.tail()).unwrap()));
        }
        if s.depth() > d {
            prop_assert!(lt.is_zero());
        }
    }

    #[test]
    fn harmonic_decomposition_formal_u_provider(
        r in small_order(), d in 0usize..=3, s in prop::collection::vec(-2i64..=4, 0..=3)
    ) {
        let f = field(r);
        let s = index(s);
        let h = Harmonic::new(UFormalBracket::new(&f, r.pow(2) as usize));
        let lt = h.h_lt(d, &s).unwrap();
        let parts = (0..d).map(|e| h.h(e, &s).unwrap()).fold(lt.zero_like(), |acc, x| acc.add(&x));
        if !s.is_empty() {
            prop_assert_eq!(&lt, &parts);
        }
        prop_assert_eq!(&lt, &h_lt_naive(h.bracket(), d, &s).unwrap());
        if s.depth() > d {
            prop_assert!(lt.is_zero());
        }
    }

    #[test]
    fn local_expansion_matches_direct_series(r in small_order(), a in coeffs(2), s in -2i64..=4) {
        let f = field(r);
        let x = monic(&f, &a);
        let order = 3 * (r as usize - 1) + 1;
        prop_assert_eq!(local_expansion_w(&x, s, order), local_expansion_direct(&x, s, order));
    }

    #[test]
    fn product_difference_identity(
        r in order(), xs in prop::collection::vec(coeffs(3), 1..=4), ys in prop::collection::vec(coeffs(3), 4)
    ) {
        let f = field(r);
        let m = xs.len();
        let x: Vec<PolyA> = xs.iter().map(|c| poly(&f, c)).collect();
        let y: Vec<PolyA> = ys[..m].iter().map(|c| poly(&f, c)).collect();
        let prod = |v: &[PolyA]| v.iter().fold(PolyA::one(&f), |acc, a| acc.mul(a));
        let rhs = (0..m).fold(PolyA::zero(&f), |acc, i| {
            acc.add(&prod(&x[..i]).mul(&x[i].sub(&y[i])).mul(&prod(&y[i + 1..])))
        });
        prop_assert_eq!(prod(&x).sub(&prod(&y)), rhs);
    }
}

/// H_d(r1)H_d(s1) = H_d(r1+s1) + Σ Δ^{i,j}_{r1,s1} H_d(i,j).
fn base_case<B: carlitz_core::harmonic::Bracket>(
    h: &Harmonic<B>,
    r: u64,
    r1: i64,
    s1: i64,
    d: usize,
) {
    let alg = ShuffleAlgebra::new(r, h.bracket().field().p());
    let lhs = h
        .power_sum(d, r1)
        .unwrap()
        .mul(&h.power_sum(d, s1).unwrap());
    let mut rhs = h.power_sum(d, r1 + s1).unwrap();
    for i in 1..r1 + s1 {
        let j = r1 + s1 - i;
        let c = alg.delta(r1, s1, i, j).unwrap();
        rhs = rhs.add(&h.h(d, &index(vec![i, j])).unwrap().scale_int(c as i64));
    }
    assert!(
        lhs.agrees_with(&rhs),
        "r = {r} (r1, s1) = ({r1}, {s1}) d = {d}"
    );
}

#[test]
fn partial_fraction_base_case() {
    for r in [2u64, 3] {
        let f = field(r);
        let hid = Harmonic::new(IdentityBracket::new(&f));
        let hu = Harmonic::new(UFormalBracket::new(&f, r.pow(2) as usize));
        for d in 0..=3 {
            for r1 in 1..=4 {
                for s1 in 1..=4 {
                    base_case(&hid, r, r1, s1, d);
                    base_case(&hu, r, r1, s1, d);
                }
            }
        }
    }
}

fn word() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(1i64..=3, 0..=2)
}

fn word_elem(p: u32, w: &[i64]) -> ShuffleElem {
    ShuffleElem::word(p, Word::new(w.to_vec()).unwrap())
}

proptest! {
    #![proptest_config(cfg(48))]

    #[test]
    fn shuffle_product_laws(r in small_order(), a in word(), b in word(), c in word(), k in 0i64..5) {
        let f = field(r);
        let p = f.p();
        let alg = ShuffleAlgebra::new(r, p);
        let (x, y, z) = (word_elem(p, &a), word_elem(p, &b), word_elem(p, &c));
        let xy = alg.product(&x, &y);
        prop_assert_eq!(&xy, &alg.product(&y, &x));
        prop_assert_eq!(alg.product(&ShuffleElem::one(p), &x), x.clone());
        let lhs = alg.product(&x, &y.add(&z.scale(k)));
        prop_assert_eq!(lhs, xy.add(&alg.product(&x, &z).scale(k)));
        let wt: i64 = a.iter().chain(&b).sum();
        prop_assert!(xy.terms().all(|(w, _)| w.weight() == wt));
    }

    #[test]
    fn shuffle_associativity_under_truncated_sums(r in small_order(), a in word(), b in word(), c in word(), d in 1usize..=3) {
        prop_assume!(a.len() + b.len() + c.len() <= 3);
        let f = field(r);
        let p = f.p();
        let alg = ShuffleAlgebra::new(r, p);
        let (x, y, z) = (word_elem(p, &a), word_elem(p, &b), word_elem(p, &c));
        let left = alg.product(&alg.product(&x, &y), &z);
        let right = alg.product(&x, &alg.product(&y, &z));
        let h = Harmonic::new(IdentityBracket::new(&f));
        let eval = |s: &Index| h.truncated(d, s);
        let one = RatK::one(&f);
        let lv = carlitz_core::shuffle::realize(&left, &one, eval).unwrap();
        let rv = carlitz_core::shuffle::realize(&right, &one, eval).unwrap();
        prop_assert_eq!(lv, rv);
    }
}
