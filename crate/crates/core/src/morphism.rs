//! Finite linear combinations of standard basis elements.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::diagram::{Matching, ObjectWord};
use crate::error::{Result, SkeinError};
use crate::Scalar;

/// An element of `Hom(source, target)` in the standard basis. No stored coefficient is zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Morphism {
    source: ObjectWord,
    target: ObjectWord,
    coeffs: BTreeMap<Matching, Scalar>,
}

impl Morphism {
    pub fn zero(source: &ObjectWord, target: &ObjectWord) -> Self {
        Morphism { source: source.clone(), target: target.clone(), coeffs: BTreeMap::new() }
    }

    pub fn basis(m: &Matching) -> Self {
        Self::term(m, Scalar::one())
    }

    pub fn term(m: &Matching, c: Scalar) -> Self {
        let mut x = Self::zero(m.source(), m.target());
        x.add_term(m, c);
        x
    }

    pub fn source(&self) -> &ObjectWord {
        &self.source
    }

    pub fn target(&self) -> &ObjectWord {
        &self.target
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, m: &Matching) -> Scalar {
        self.coeffs.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, m: &Matching, c: Scalar) {
        debug_assert_eq!((m.source(), m.target()), (&self.source, &self.target));
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(m) {
            Some(x) => {
                *x = &*x + &c;
                if x.is_zero() {
                    self.coeffs.remove(m);
                }
            }
            None => {
                self.coeffs.insert(m.clone(), c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Morphism, c: &Scalar) {
        for (m, x) in &other.coeffs {
            self.add_term(m, x * c);
        }
    }

    pub fn scale(&self, c: &Scalar) -> Morphism {
        let mut out = Morphism::zero(&self.source, &self.target);
        out.add_scaled(self, c);
        out
    }

    /// Terms in standard basis order (length, then partner array).
    pub fn terms(&self) -> Vec<(&Matching, &Scalar)> {
        let mut v: Vec<_> = self.coeffs.iter().collect();
        v.sort_by_cached_key(|(m, _)| m.basis_key());
        v
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Apply the bar map to coefficients only.
    pub fn bar_coeffs(&self) -> Morphism {
        Morphism {
            source: self.source.clone(),
            target: self.target.clone(),
            coeffs: self.coeffs.iter().map(|(m, c)| (m.clone(), c.bar())).collect(),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "source": self.source.to_string(),
            "target": self.target.to_string(),
            "terms": self.terms().iter().map(|(m, c)| json!({
                "matching": m.signed_pairs(),
                "coeff": scalar_to_json(c),
            })).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Morphism> {
        let bad = |what: &str| SkeinError::InvalidDiagram(format!("morphism JSON: {what}"));
        let word = |k: &str| -> Result<ObjectWord> { v[k].as_str().ok_or_else(|| bad(k))?.parse() };
        let (source, target) = (word("source")?, word("target")?);
        let mut out = Morphism::zero(&source, &target);
        for t in v["terms"].as_array().ok_or_else(|| bad("terms"))? {
            let pairs: Vec<[i64; 2]> = serde_json::from_value(t["matching"].clone()).map_err(|_| bad("matching"))?;
            let m = Matching::from_signed_pairs(source.clone(), target.clone(), &pairs)?;
            out.add_term(&m, scalar_from_json(&t["coeff"])?);
        }
        Ok(out)
    }
}

impl std::ops::Add for &Morphism {
    type Output = Morphism;
    fn add(self, rhs: &Morphism) -> Morphism {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::one());
        out
    }
}

impl std::ops::Sub for &Morphism {
    type Output = Morphism;
    fn sub(self, rhs: &Morphism) -> Morphism {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::from_int(-1));
        out
    }
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms().iter().map(|(m, c)| format!("({c})*{m}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// `{"num": [[qexp, texp, "coeff"], ...], "zpow": k}` with terms ascending.
pub fn scalar_to_json(c: &Scalar) -> Value {
    let num: Vec<Value> = c.num().terms().map(|((a, b), x)| json!([a, b, x.to_string()])).collect();
    json!({ "num": num, "zpow": c.zpow() })
}

pub fn scalar_from_json(v: &Value) -> Result<Scalar> {
    let bad = || SkeinError::InvalidDiagram(format!("bad scalar JSON {v}"));
    let zpow = v["zpow"].as_u64().ok_or_else(bad)? as u32;
    let mut num = crate::IntLaurent::zero();
    for t in v["num"].as_array().ok_or_else(bad)? {
        let a = t[0].as_i64().ok_or_else(bad)? as i32;
        let b = t[1].as_i64().ok_or_else(bad)? as i32;
        let c: num_bigint::BigInt = t[2].as_str().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
        num.add_term((a, b), c);
    }
    Ok(Scalar::reduce(num, zpow))
}
