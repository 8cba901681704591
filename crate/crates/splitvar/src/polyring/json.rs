//! Deterministic serialization: a JSON shape with terms sorted by the
//! ring's monomial order (descending), and a CAS-syntax text form, one
//! polynomial per line, loadable by mainstream computer-algebra systems
//! for independent verification.

use std::sync::Arc;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{parse_poly, LaurentPoly, Mono, RingSpec};
use crate::cyclotomic::{cyclotomic_polynomial, CycloNum};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RingRepr {
    pub coeff_order: u32,
    pub variables: Vec<String>,
    pub invertible: Vec<String>,
}

impl RingRepr {
    pub fn of(ring: &RingSpec) -> Self {
        RingRepr {
            coeff_order: ring.coeff_order(),
            variables: ring.var_names().to_vec(),
            invertible: ring
                .invertible_names()
                .into_iter()
                .map(|s| s.to_string())
                .collect(),
        }
    }

    pub fn to_ring(&self) -> Result<Arc<RingSpec>> {
        let vars: Vec<&str> = self.variables.iter().map(|s| s.as_str()).collect();
        let inv: Vec<&str> = self.invertible.iter().map(|s| s.as_str()).collect();
        RingSpec::new(self.coeff_order, &vars, &inv)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct TermRepr {
    exps: Vec<i32>,
    coeff: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolyRepr {
    pub ring: RingRepr,
    terms: Vec<TermRepr>,
}

impl PolyRepr {
    pub fn of(poly: &LaurentPoly) -> Self {
        let mut terms: Vec<TermRepr> = poly
            .terms()
            .map(|(m, c)| TermRepr {
                exps: m.0.clone(),
                coeff: c.to_coeff_strings(),
            })
            .collect();
        terms.reverse(); // storage ascends in the monomial order
        PolyRepr {
            ring: RingRepr::of(poly.ring()),
            terms,
        }
    }

    pub fn to_poly(&self) -> Result<LaurentPoly> {
        let ring = self.ring.to_ring()?;
        self.to_poly_in(&ring)
    }

    pub fn to_poly_in(&self, ring: &Arc<RingSpec>) -> Result<LaurentPoly> {
        let mut p = LaurentPoly::zero(ring);
        for t in &self.terms {
            if t.exps.len() != ring.num_vars() {
                return Err(Error::Parse(format!(
                    "term has {} exponents for a {}-variable ring",
                    t.exps.len(),
                    ring.num_vars()
                )));
            }
            let c = CycloNum::from_coeff_strings(ring.coeff_order(), &t.coeff)?;
            p.add_term(Mono(t.exps.clone()), c);
        }
        Ok(p)
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PolyRepr::of(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(deserializer)?;
        repr.to_poly().map_err(D::Error::custom)
    }
}

/// Render the minimal polynomial of zeta as a univariate expression.
fn minimal_polynomial_text(order: u32) -> String {
    let phi = cyclotomic_polynomial(order);
    let mut parts: Vec<String> = Vec::new();
    for (k, c) in phi.iter().enumerate().rev() {
        use num_traits::{Signed, Zero};
        if c.is_zero() {
            continue;
        }
        let sign = if c.is_negative() { "-" } else { "+" };
        let mag = c.abs();
        let body = if k == 0 {
            format!("{mag}")
        } else {
            let var = if k == 1 {
                "zeta".to_string()
            } else {
                format!("zeta^{k}")
            };
            if mag == 1u32.into() {
                var
            } else {
                format!("{mag}*{var}")
            }
        };
        if parts.is_empty() {
            parts.push(if sign == "-" {
                format!("-{body}")
            } else {
                body
            });
        } else {
            parts.push(format!("{sign} {body}"));
        }
    }
    parts.join(" ")
}

/// One polynomial per line, preceded by comment lines declaring the
/// coefficient field and the ring. `--` comments are understood by
/// Macaulay2; our own reader skips them as well.
pub fn polys_to_cas_text(ring: &RingSpec, polys: &[LaurentPoly]) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "-- coefficient field: QQ[zeta] / ({} = 0)\n",
        minimal_polynomial_text(ring.coeff_order())
    ));
    out.push_str(&format!("-- variables: {}\n", ring.var_names().join(", ")));
    let inv = ring.invertible_names();
    if !inv.is_empty() {
        out.push_str(&format!("-- invertible: {}\n", inv.join(", ")));
    }
    for p in polys {
        out.push_str(&p.to_string());
        out.push('\n');
    }
    out
}

/// Read the format written by `polys_to_cas_text` (header optional).
pub fn polys_from_cas_text(ring: &Arc<RingSpec>, text: &str) -> Result<Vec<LaurentPoly>> {
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with("--") || line.starts_with('#') {
            continue;
        }
        out.push(parse_poly(ring, line)?);
    }
    Ok(out)
}
