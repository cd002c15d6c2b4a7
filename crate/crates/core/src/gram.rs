//! Coordinates through the closure pairing: an independent route to the
//! standard-basis expansion, practical for small spaces.

use std::path::Path;

use serde_json::{json, Value};

use crate::diagram::{enumerate_matchings, positive_lift, Matching, ObjectWord, SlicedDiagram};
use crate::engine::Engine;
use crate::error::{Result, SkeinError};
use crate::homspace::standard_basis;
use crate::linalg::{bareiss_solve, quotient_in_ring};
use crate::morphism::{scalar_from_json, scalar_to_json, Morphism};
use crate::tangle::Tangle;
use crate::{IntLaurent, Scalar};

pub const CACHE_FORMAT: &str = "gram-v1";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramData {
    /// Basis of `Hom(a, b)`.
    pub basis_a: Vec<Matching>,
    /// Basis of `Hom(b, a)`.
    pub basis_b: Vec<Matching>,
    /// `gram[s][t] = eval(closure(S ∘ T))` for `S` in `basis_b`, `T` in `basis_a`.
    pub gram: Vec<Vec<Scalar>>,
}

impl GramData {
    pub fn to_json(&self) -> Value {
        let a = self.basis_a[0].source();
        let b = self.basis_a[0].target();
        json!({
            "format": CACHE_FORMAT,
            "source": a.to_string(),
            "target": b.to_string(),
            "gram": self.gram.iter().map(|r| r.iter().map(scalar_to_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }

    fn from_json(v: &Value, a: &ObjectWord, b: &ObjectWord) -> Option<GramData> {
        if v["format"] != CACHE_FORMAT || v["source"] != a.to_string() || v["target"] != b.to_string() {
            return None;
        }
        let basis_a = enumerate_matchings(a, b);
        let basis_b = enumerate_matchings(b, a);
        let rows = v["gram"].as_array()?;
        let gram: Vec<Vec<Scalar>> = rows
            .iter()
            .map(|r| r.as_array().map(|r| r.iter().map(|c| scalar_from_json(c).ok()).collect::<Option<Vec<_>>>()))
            .collect::<Option<Option<Vec<_>>>>()??;
        let n = basis_a.len();
        if gram.len() != n || gram.iter().any(|r| r.len() != n) {
            return None;
        }
        Some(GramData { basis_a, basis_b, gram })
    }
}

fn cache_file(dir: &Path, a: &ObjectWord, b: &ObjectWord) -> std::path::PathBuf {
    let name = |w: &ObjectWord| if w.is_empty() { "e".to_string() } else { w.to_string() };
    dir.join(format!("{CACHE_FORMAT}-{}-{}.json", name(a), name(b)))
}

impl Engine {
    /// Value of the closure of an endomorphism diagram.
    pub fn trace(&mut self, d: &SlicedDiagram) -> Result<Scalar> {
        let closed = Tangle::from_sliced(d).closure()?;
        Ok(self.eval_tangle(&closed))
    }

    /// The Gram matrix of `Hom(a, b)`, optionally persisted under `cache_dir`.
    pub fn gram_data(&mut self, a: &ObjectWord, b: &ObjectWord, cache_dir: Option<&Path>) -> Result<GramData> {
        if let Some(dir) = cache_dir {
            if let Ok(text) = std::fs::read_to_string(cache_file(dir, a, b)) {
                if let Some(g) = serde_json::from_str(&text).ok().and_then(|v| GramData::from_json(&v, a, b)) {
                    return Ok(g);
                }
            }
        }
        let basis_a = standard_basis(a, b)?;
        let basis_b = enumerate_matchings(b, a);
        let mut gram = Vec::with_capacity(basis_b.len());
        for s in &basis_b {
            let ps = positive_lift(s);
            let mut row = Vec::with_capacity(basis_a.len());
            for t in &basis_a {
                row.push(self.trace(&SlicedDiagram::compose(&ps, &positive_lift(t))?)?);
            }
            gram.push(row);
        }
        let g = GramData { basis_a, basis_b, gram };
        if let Some(dir) = cache_dir {
            // the cache is an optimisation; failing to write it is not an error
            let _ = std::fs::create_dir_all(dir)
                .and_then(|_| std::fs::write(cache_file(dir, a, b), g.to_json().to_string()));
        }
        Ok(g)
    }

    /// Standard-basis coordinates of `d` obtained by solving `gram · x = p`
    /// with `p_S = eval(closure(S ∘ d))`.
    pub fn expand_by_pairing(&mut self, g: &GramData, d: &SlicedDiagram) -> Result<Morphism> {
        let n = g.basis_a.len();
        let mut rhs = Vec::with_capacity(n);
        for s in &g.basis_b {
            rhs.push(self.trace(&SlicedDiagram::compose(&positive_lift(s), d)?)?);
        }
        // clear z-denominators row by row
        let z = IntLaurent::z();
        let mut rows = Vec::with_capacity(n);
        let mut cleared_rhs = Vec::with_capacity(n);
        for (row, r) in g.gram.iter().zip(&rhs) {
            let k = row.iter().chain(std::iter::once(r)).map(|x| x.zpow()).max().unwrap_or(0);
            let lift = |x: &Scalar| x.num() * &z.pow(k - x.zpow());
            rows.push(row.iter().map(lift).collect::<Vec<_>>());
            cleared_rhs.push(lift(r));
        }
        let (y, det) = bareiss_solve(&rows, &cleared_rhs).map_err(|e| match e {
            SkeinError::DegeneratePairing(_) => SkeinError::DegeneratePairing(format!("{} -> {}", d.bottom(), d.top())),
            other => other,
        })?;
        let mut out = Morphism::zero(d.bottom(), d.top());
        for (m, yi) in g.basis_a.iter().zip(&y) {
            out.add_term(m, quotient_in_ring(yi, &det, 64)?);
        }
        Ok(out)
    }
}
