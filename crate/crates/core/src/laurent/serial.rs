//! Stable text encodings of Laurent elements.

use serde_json::json;

use super::elem::Laurent;

/// `{"uniformizer", "e_ram", "lead", "prec", "coeffs"}`; coefficients are
/// base-p digit strings of w^lead, w^{lead+1}, …; an exact element has
/// `"prec": null`, and a zero element `"lead": null`.
pub fn laurent_json(x: &Laurent) -> serde_json::Value {
    let f = x.field().coeff_field();
    json!({
        "uniformizer": x.field().name(),
        "e_ram": x.field().e_ram(),
        "lead": x.valuation(),
        "prec": (!x.is_exact()).then_some(x.prec()),
        "coeffs": x.coeffs().iter().map(|&c| f.digit_string(c)).collect::<Vec<_>>(),
    })
}

/// Space-separated `exponent:coeff` pairs for the nonzero digits, followed by
/// `O:prec` unless exact.
pub fn laurent_pairs(x: &Laurent) -> String {
    let f = x.field().coeff_field();
    let v = x.lead_exp();
    let mut parts: Vec<String> = x
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| format!("{}:{}", v + i as i64, f.digit_string(c)))
        .collect();
    if !x.is_exact() {
        parts.push(format!("O:{}", x.prec()));
    }
    parts.join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{FiniteField, PolyA, RatK};
    use crate::laurent::LaurentField;

    #[test]
    fn encodings() {
        let f = FiniteField::of_order(3).unwrap();
        let k = LaurentField::k_inf(&f);
        let t = PolyA::theta(&f);
        let x = Laurent::embed(&k, &RatK::new(PolyA::one(&f), t).unwrap(), 4);
        assert_eq!(laurent_pairs(&x), "1:1 O:4");
        let j = laurent_json(&x);
        assert_eq!(j["lead"], 1);
        assert_eq!(j["e_ram"], 1);
        assert_eq!(j["prec"], 4);
        let e = Laurent::embed_poly(&k, &PolyA::theta(&f));
        assert_eq!(laurent_pairs(&e), "-1:1");
        assert!(laurent_json(&e)["prec"].is_null());
    }
}
