use std::sync::Arc;

use crate::algebra::FiniteField;
use crate::error::{Error, Result};

/// A Laurent-series field over a finite coefficient field in a uniformizer w
/// with `w^e_ram = 1/θ`.
#[derive(Debug)]
pub struct LaurentField {
    name: String,
    base: Arc<FiniteField>,
    coeff: Arc<FiniteField>,
    embed: Vec<u16>,
    e_ram: i64,
    root_constant: Option<u16>,
}

impl PartialEq for LaurentField {
    fn eq(&self, other: &Self) -> bool {
        self.e_ram == other.e_ram && *self.base == *other.base && *self.coeff == *other.coeff
    }
}

impl LaurentField {
    /// K_∞ = 𝔽_r((1/θ)).
    pub fn k_inf(base: &Arc<FiniteField>) -> Arc<Self> {
        Arc::new(LaurentField {
            name: "1/θ".into(),
            base: base.clone(),
            coeff: base.clone(),
            embed: base.elements().collect(),
            e_ram: 1,
            root_constant: None,
        })
    }

    /// The field L ∋ π̃: ramification r − 1, coefficients in 𝔽_r or 𝔽_{r²}
    /// depending on whether −1 is an (r−1)-th power in 𝔽_r.
    pub fn period_field(base: &Arc<FiniteField>) -> Result<Arc<Self>> {
        let r = base.order() as u64;
        let minus_one = base.neg(1);
        let in_base = base.elements().find(|&c| base.pow(c, r - 1) == minus_one);
        let (coeff, embed, c) = match in_base {
            Some(c) => (base.clone(), base.elements().collect(), c),
            None => {
                let big = FiniteField::new(base.p(), 2 * base.e())?;
                let embed = big.embedding_from(base)?;
                let m1 = big.neg(1);
                let c = big
                    .elements()
                    .find(|&c| big.pow(c, r - 1) == m1)
                    .ok_or_else(|| Error::InvalidField("no (r−1)-th root of −1".into()))?;
                (big, embed, c)
            }
        };
        Ok(Arc::new(LaurentField {
            name: "w".into(),
            base: base.clone(),
            coeff,
            embed,
            e_ram: (r - 1) as i64,
            root_constant: Some(c),
        }))
    }

    pub fn name(&self) -> &str {
        &self.name
    }
    pub fn base(&self) -> &Arc<FiniteField> {
        &self.base
    }
    pub fn coeff_field(&self) -> &Arc<FiniteField> {
        &self.coeff
    }
    pub fn e_ram(&self) -> i64 {
        self.e_ram
    }
    pub fn r(&self) -> u64 {
        self.base.order() as u64
    }
    /// The constant c with c^{r−1} = −1 fixing (−θ)^{1/(r−1)} = c·w^{−1}.
    pub fn root_constant(&self) -> Option<u16> {
        self.root_constant
    }
    pub fn embed_base(&self, a: u16) -> u16 {
        self.embed[a as usize]
    }
}
