//! Specialization of the kernel ideal at concrete unit values (a, b), the
//! membership test for the resulting variety, and point production over
//! finite fields through the theta-images.
//!
//! The excluded locus is the single point z = 0: a point of the ambient
//! affine space is fixed by a nontrivial group element only if its x-part
//! vanishes (alpha and beta are units and every nontrivial element moves
//! some coordinate by a root of unity), and the image of x = 0 is z = 0.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{EvalField, PrimeField};
use crate::splitkernel::{ThetaSystem, WeightedIdeal};

/// One defining equation with coefficients specialized into the field,
/// exponents over z_1..z_N only.
#[derive(Debug, Clone)]
pub struct SpecializedEq<F: EvalField> {
    pub terms: Vec<(Vec<i32>, F::Elem)>,
}

impl<F: EvalField> SpecializedEq<F> {
    pub fn evaluate(&self, field: &F, z: &[F::Elem]) -> Result<F::Elem> {
        let mut acc = field.zero();
        for (exps, coeff) in &self.terms {
            let mut term = coeff.clone();
            for (i, &e) in exps.iter().enumerate() {
                if e != 0 {
                    term = field.mul(&term, &field.pow(&z[i], e as i64)?);
                }
            }
            acc = field.add(&acc, &term);
        }
        Ok(acc)
    }
}

/// The variety X(a, b) over a fixed field: the kernel equations with a and
/// b substituted, minus the excluded point z = 0.
#[derive(Debug, Clone)]
pub struct SpecializedVariety<F: EvalField> {
    pub field: F,
    pub z_count: usize,
    pub a_val: F::Elem,
    pub b_val: F::Elem,
    pub equations: Vec<SpecializedEq<F>>,
}

/// A candidate point, never the origin.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VarietyPoint<T> {
    pub z: Vec<T>,
}

impl<T: Clone + PartialEq> VarietyPoint<T> {
    pub fn new(z: Vec<T>, zero: &T) -> Result<Self> {
        if z.iter().all(|c| c == zero) {
            return Err(Error::OnExcludedLocus("z = 0".into()));
        }
        Ok(VarietyPoint { z })
    }
}

/// Substitute a |-> a_val, b |-> b_val (and their inverses) into every
/// generator. Both values must be units of the field.
pub fn specialize<F: EvalField>(
    ideal: &WeightedIdeal,
    theta: &ThetaSystem,
    a_val: F::Elem,
    b_val: F::Elem,
    field: &F,
) -> Result<SpecializedVariety<F>> {
    if field.is_zero(&a_val) || field.is_zero(&b_val) {
        return Err(Error::Field("a and b must be units".into()));
    }
    let zr = theta.z_ring();
    let count = zr.num_vars() - 2;
    let mut equations = Vec::with_capacity(ideal.generators.len());
    for g in &ideal.generators {
        let mut terms: Vec<(Vec<i32>, F::Elem)> = Vec::new();
        for (mono, coeff) in g.terms() {
            let mut c = field.embed(coeff)?;
            c = field.mul(&c, &field.pow(&a_val, mono.0[count] as i64)?);
            c = field.mul(&c, &field.pow(&b_val, mono.0[count + 1] as i64)?);
            if field.is_zero(&c) {
                continue;
            }
            let exps = mono.0[..count].to_vec();
            match terms.iter_mut().find(|(e, _)| *e == exps) {
                Some((_, existing)) => {
                    *existing = field.add(existing, &c);
                }
                None => terms.push((exps, c)),
            }
        }
        terms.retain(|(_, c)| !field.is_zero(c));
        equations.push(SpecializedEq { terms });
    }
    Ok(SpecializedVariety {
        field: field.clone(),
        z_count: count,
        a_val,
        b_val,
        equations,
    })
}

/// True iff every equation vanishes at z and z is off the excluded locus.
pub fn is_on_variety<F: EvalField>(z: &[F::Elem], sv: &SpecializedVariety<F>) -> Result<bool> {
    if z.len() != sv.z_count {
        return Err(Error::Field(format!(
            "point has {} coordinates, variety lives in {} variables",
            z.len(),
            sv.z_count
        )));
    }
    if z.iter().all(|c| sv.field.is_zero(c)) {
        return Ok(false);
    }
    for eq in &sv.equations {
        if !sv.field.is_zero(&eq.evaluate(&sv.field, z)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Evaluate the theta-images at (x, alpha, beta): the z-coordinates of the
/// resulting point, together with a = alpha^n and b = beta^n. The point
/// always satisfies the specialized equations; x = 0 is rejected because
/// its image is the excluded point.
pub fn theta_point<F: EvalField>(
    theta: &ThetaSystem,
    field: &F,
    x: &[F::Elem],
    alpha: &F::Elem,
    beta: &F::Elem,
) -> Result<(VarietyPoint<F::Elem>, F::Elem, F::Elem)> {
    let n = theta.n() as usize;
    if x.len() != n {
        return Err(Error::Field(format!("expected {n} x-coordinates")));
    }
    if x.iter().all(|c| field.is_zero(c)) {
        return Err(Error::OnExcludedLocus("x = 0 maps to z = 0".into()));
    }
    if field.is_zero(alpha) || field.is_zero(beta) {
        return Err(Error::Field("alpha and beta must be units".into()));
    }
    let mut point = x.to_vec();
    point.push(alpha.clone());
    point.push(beta.clone());
    let count = theta.z_ring().num_vars() - 2;
    let z: Vec<F::Elem> = (0..count)
        .map(|i| theta.theta().image_of(i).evaluate(field, &point))
        .collect::<Result<_>>()?;
    let a_val = field.pow(alpha, theta.n() as i64)?;
    let b_val = field.pow(beta, theta.n() as i64)?;
    let pt = VarietyPoint::new(z, &field.zero())?;
    Ok((pt, a_val, b_val))
}

/// Outcome of a finite-field point search, in the shape the CLI emits.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PointSearch {
    pub q: u64,
    pub a: u64,
    pub b: u64,
    pub found: bool,
    pub point: Option<Vec<u64>>,
    /// "theta" for direct construction from n-th roots, "random" for the
    /// budgeted fallback search
    pub method: String,
    pub checked: u64,
}

/// Search for a point of X(a, b) over F_q. When a and b are both n-th
/// powers the point is constructed directly from the theta-images at a
/// random x != 0; otherwise fall back to budgeted random sampling of
/// z-vectors. Whatever is returned has been re-verified against every
/// specialized equation.
pub fn find_point(
    theta: &ThetaSystem,
    ideal: &WeightedIdeal,
    q: u64,
    a_val: u64,
    b_val: u64,
    budget: u64,
    seed: u64,
) -> Result<PointSearch> {
    let fp = PrimeField::new(q, theta.n())?;
    let a_val = a_val % q;
    let b_val = b_val % q;
    if a_val == 0 || b_val == 0 {
        return Err(Error::Usage("a and b must be nonzero mod q".into()));
    }
    let sv = specialize(ideal, theta, a_val, b_val, &fp)?;
    let mut rng = StdRng::seed_from_u64(seed);

    let alpha_roots = fp.nth_roots(a_val);
    let beta_roots = fp.nth_roots(b_val);
    if let (Some(&alpha), Some(&beta)) = (alpha_roots.first(), beta_roots.first()) {
        let mut checked = 0u64;
        loop {
            checked += 1;
            let x: Vec<u64> = (0..theta.n()).map(|_| rng.gen_range(0..q)).collect();
            if x.iter().all(|&c| c == 0) {
                continue;
            }
            let (pt, a_check, b_check) = theta_point(theta, &fp, &x, &alpha, &beta)?;
            debug_assert_eq!((a_check, b_check), (a_val, b_val));
            if is_on_variety(&pt.z, &sv)? {
                return Ok(PointSearch {
                    q,
                    a: a_val,
                    b: b_val,
                    found: true,
                    point: Some(pt.z),
                    method: "theta".into(),
                    checked,
                });
            }
            // the theta-image always satisfies the equations; reaching this
            // line means the off-locus check failed, so draw another x
            if checked >= budget.max(1) {
                return Ok(PointSearch {
                    q,
                    a: a_val,
                    b: b_val,
                    found: false,
                    point: None,
                    method: "theta".into(),
                    checked,
                });
            }
        }
    }

    // no n-th roots: bounded random search over z-vectors
    let count = theta.z_ring().num_vars() - 2;
    for checked in 1..=budget {
        let z: Vec<u64> = (0..count).map(|_| rng.gen_range(0..q)).collect();
        if z.iter().all(|&c| c == 0) {
            continue;
        }
        if is_on_variety(&z, &sv)? {
            return Ok(PointSearch {
                q,
                a: a_val,
                b: b_val,
                found: true,
                point: Some(z),
                method: "random".into(),
                checked,
            });
        }
    }
    Ok(PointSearch {
        q,
        a: a_val,
        b: b_val,
        found: false,
        point: None,
        method: "random".into(),
        checked: budget,
    })
}
