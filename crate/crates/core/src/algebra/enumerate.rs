//! Monic polynomials, irreducibles and factorizations over 𝔽_r.

use std::sync::Arc;

use super::field::FiniteField;
use super::polya::PolyA;
use super::ring::Ring;

/// The r^d monic polynomials of degree d, low-order coefficients varying fastest.
pub fn enumerate_monic(field: &Arc<FiniteField>, d: usize) -> Vec<PolyA> {
    let q = field.order() as u64;
    let count = q.pow(d as u32);
    (0..count)
        .map(|idx| monic_from_index(field, d, idx))
        .collect()
}

pub fn monic_from_index(field: &Arc<FiniteField>, d: usize, mut idx: u64) -> PolyA {
    let q = field.order() as u64;
    let mut c = Vec::with_capacity(d + 1);
    for _ in 0..d {
        c.push((idx % q) as u16);
        idx /= q;
    }
    c.push(1);
    PolyA::from_coeffs(field, c)
}

/// All monic polynomials of degree < d, by degree then index.
pub fn monic_below(field: &Arc<FiniteField>, d: usize) -> Vec<PolyA> {
    (0..d).flat_map(|k| enumerate_monic(field, k)).collect()
}

pub fn is_irreducible(a: &PolyA) -> bool {
    let Some(d) = a.deg() else { return false };
    if d == 0 {
        return false;
    }
    let f = a.field();
    for k in 1..=d / 2 {
        for b in enumerate_monic(f, k) {
            if a.rem(&b).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Monic irreducibles of degree ≤ `max_deg`, by degree then index.
pub fn irreducibles_up_to(field: &Arc<FiniteField>, max_deg: usize) -> Vec<PolyA> {
    (1..=max_deg)
        .flat_map(|d| enumerate_monic(field, d).into_iter().filter(is_irreducible))
        .collect()
}

/// Factorization of a monic polynomial into `(irreducible, multiplicity)`
/// pairs by trial division.
pub fn factor_monic(a: &PolyA) -> Vec<(PolyA, u32)> {
    let f = a.field();
    let mut rest = a.clone();
    let mut out = Vec::new();
    let mut k = 1;
    while rest.degree() > 0 {
        if 2 * k > rest.degree() as usize {
            out.push((rest.monic(), 1));
            break;
        }
        for b in enumerate_monic(f, k) {
            let mut m = 0;
            while let Some(q) = rest.div_exact(&b) {
                rest = q;
                m += 1;
            }
            if m > 0 {
                out.push((b, m));
            }
        }
        k += 1;
    }
    out.sort();
    out
}

/// Möbius function on monic polynomials.
pub fn mobius(a: &PolyA) -> i32 {
    let fac = factor_monic(a);
    if fac.iter().any(|(_, m)| *m > 1) {
        0
    } else if fac.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Monic divisors of a monic polynomial, sorted by degree then index.
pub fn monic_divisors(a: &PolyA) -> Vec<PolyA> {
    let mut divs = vec![PolyA::one(a.field())];
    for (v, m) in factor_monic(a) {
        let mut next = Vec::new();
        for d in &divs {
            let mut acc = d.clone();
            next.push(acc.clone());
            for _ in 0..m {
                acc = acc.mul(&v);
                next.push(acc.clone());
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}

/// If `a = v^e` for a monic irreducible v, returns `(v, e)`.
pub fn prime_power_base(a: &PolyA) -> Option<(PolyA, u32)> {
    let fac = factor_monic(a);
    (fac.len() == 1).then(|| fac[0].clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monic_counts_and_order() {
        let f = FiniteField::of_order(3).unwrap();
        let ms = enumerate_monic(&f, 1);
        assert_eq!(
            ms.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
            ["θ", "θ + 1", "θ + 2"]
        );
        assert_eq!(enumerate_monic(&f, 0), vec![PolyA::one(&f)]);
        let f2 = FiniteField::of_order(2).unwrap();
        assert_eq!(enumerate_monic(&f2, 3).len(), 8);
    }

    #[test]
    fn irreducibles_binary() {
        let f = FiniteField::of_order(2).unwrap();
        let names: Vec<String> = irreducibles_up_to(&f, 2)
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(names, ["θ", "θ + 1", "θ^2 + θ + 1"]);
        assert_eq!(
            irreducibles_up_to(&FiniteField::of_order(3).unwrap(), 1).len(),
            3
        );
    }

    #[test]
    fn irreducible_counts_match_necklace_formula() {
        // r = 3: 3, 3, 8, 18 irreducibles in degrees 1..4
        let f = FiniteField::of_order(3).unwrap();
        let all = irreducibles_up_to(&f, 4);
        let counts: Vec<usize> = (1..=4)
            .map(|d| all.iter().filter(|p| p.degree() == d).count())
            .collect();
        assert_eq!(counts, [3, 3, 8, 18]);
    }

    #[test]
    fn factorization_round_trip() {
        let f = FiniteField::of_order(3).unwrap();
        for a in enumerate_monic(&f, 4) {
            let prod = factor_monic(&a)
                .iter()
                .fold(PolyA::one(&f), |acc, (v, m)| acc.mul(&v.pow(*m as u64)));
            assert_eq!(prod, a);
        }
    }
}
