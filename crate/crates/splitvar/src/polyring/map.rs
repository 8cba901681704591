//! Substitution homomorphisms between polynomial rings.

use std::sync::Arc;

use super::{ring_eq, LaurentPoly, RingSpec};
use crate::error::{Error, Result};

/// A ring homomorphism determined by the images of the source variables.
/// Invertible source variables must map to unit monomials so that the
/// images of their inverses exist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingMap {
    source: Arc<RingSpec>,
    target: Arc<RingSpec>,
    images: Vec<LaurentPoly>,
}

impl RingMap {
    pub fn new(
        source: &Arc<RingSpec>,
        target: &Arc<RingSpec>,
        images: Vec<LaurentPoly>,
    ) -> Result<Self> {
        if images.len() != source.num_vars() {
            return Err(Error::RingMismatch(format!(
                "{} images given for {} source variables",
                images.len(),
                source.num_vars()
            )));
        }
        for (i, img) in images.iter().enumerate() {
            if !ring_eq(img.ring(), target) {
                return Err(Error::RingMismatch(format!(
                    "image of `{}` lives in the wrong ring",
                    source.var_name(i)
                )));
            }
            if source.is_invertible(i) && !img.is_unit_monomial() {
                return Err(Error::NotAUnit(source.var_name(i).to_string()));
            }
        }
        Ok(RingMap {
            source: source.clone(),
            target: target.clone(),
            images,
        })
    }

    /// The identity map of a ring.
    pub fn identity(ring: &Arc<RingSpec>) -> Self {
        let images = (0..ring.num_vars())
            .map(|i| LaurentPoly::var(ring, i))
            .collect();
        RingMap {
            source: ring.clone(),
            target: ring.clone(),
            images,
        }
    }

    /// The inclusion of a ring whose variables all occur (by name) in a
    /// larger ring.
    pub fn inclusion(source: &Arc<RingSpec>, target: &Arc<RingSpec>) -> Result<Self> {
        let mut images = Vec::with_capacity(source.num_vars());
        for v in source.var_names() {
            let idx = target.var_index(v).ok_or_else(|| {
                Error::RingMismatch(format!("variable `{v}` missing from target ring"))
            })?;
            images.push(LaurentPoly::var(target, idx));
        }
        RingMap::new(source, target, images)
    }

    pub fn source(&self) -> &Arc<RingSpec> {
        &self.source
    }

    pub fn target(&self) -> &Arc<RingSpec> {
        &self.target
    }

    pub fn image_of(&self, var: usize) -> &LaurentPoly {
        &self.images[var]
    }

    pub fn image_of_named(&self, name: &str) -> Option<&LaurentPoly> {
        self.source.var_index(name).map(|i| &self.images[i])
    }

    /// Apply the substitution to a polynomial of the source ring.
    pub fn apply(&self, f: &LaurentPoly) -> LaurentPoly {
        assert!(
            ring_eq(f.ring(), &self.source),
            "polynomial is not in the source ring of the map"
        );
        let mut out = LaurentPoly::zero(&self.target);
        for (m, c) in f.terms() {
            let mut term = LaurentPoly::constant(&self.target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e != 0 {
                    let img_pow = self.images[i]
                        .pow(e as i64)
                        .expect("validated unit image for negative exponents");
                    term = term.mul(&img_pow);
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Composition `self` after `first`: apply(compose(m2, m1), f) =
    /// apply(m2, apply(m1, f)).
    pub fn compose(second: &RingMap, first: &RingMap) -> Result<RingMap> {
        if !ring_eq(&first.target, &second.source) {
            return Err(Error::RingMismatch(
                "inner map's target is not the outer map's source".into(),
            ));
        }
        let images = first.images.iter().map(|img| second.apply(img)).collect();
        RingMap::new(&first.source, &second.target, images)
    }
}
