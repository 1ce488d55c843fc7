//! Carlitz cyclotomic polynomials by Möbius inversion.

use super::{carlitz_poly, UPoly};
use crate::algebra::{mobius, monic_divisors, PolyA, Ring};
use crate::error::{Error, Result};

/// `Φ_a^C(X) = ∏_{b | a} C_b(X)^{μ(a/b)}`, with exact division in A[X].
pub fn carlitz_cyclotomic(a: &PolyA) -> Result<UPoly> {
    if !a.is_monic() {
        return Err(Error::NotMonic);
    }
    let mut num = UPoly::constant(PolyA::one(a.field()));
    let mut den = Vec::new();
    for b in monic_divisors(a) {
        match mobius(&a.div_exact(&b).expect("divisor")) {
            1 => num = num.mul(&carlitz_poly(&b)),
            -1 => den.push(carlitz_poly(&b)),
            _ => {}
        }
    }
    for d in den {
        num = num.div_exact(&d).expect("Möbius quotient is exact");
    }
    Ok(num)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{enumerate_monic, FiniteField};
    use crate::carlitz::u_bracket;

    #[test]
    fn examples() {
        let f = FiniteField::of_order(3).unwrap();
        let t = PolyA::theta(&f);
        let one = PolyA::one(&f);
        let zero = PolyA::zero(&f);
        assert_eq!(
            carlitz_cyclotomic(&one).unwrap().coeffs(),
            &[zero.clone(), one.clone()]
        );
        assert_eq!(
            carlitz_cyclotomic(&t).unwrap().coeffs(),
            &[t.clone(), zero.clone(), one.clone()]
        );
        assert_eq!(carlitz_cyclotomic(&t.scale(2)), Err(Error::NotMonic));
        for v in [t.clone(), t.add(&one)] {
            for e in 1..=2 {
                let phi = carlitz_cyclotomic(&v.pow(e)).unwrap();
                assert_eq!(phi.coeff(0), v);
            }
        }
    }

    #[test]
    fn bracket_factors_into_cyclotomics() {
        let f = FiniteField::of_order(2).unwrap();
        for d in 1..=3 {
            for a in enumerate_monic(&f, d) {
                let prod = monic_divisors(&a)
                    .iter()
                    .skip(1)
                    .fold(UPoly::constant(PolyA::one(&f)), |acc, b| {
                        acc.mul(&carlitz_cyclotomic(b).unwrap())
                    });
                assert_eq!(prod, u_bracket(&a).unwrap());
            }
        }
    }
}
