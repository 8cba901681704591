//! Multivariate Laurent polynomial rings over Q(zeta_n).
//!
//! A ring declares an ordered list of variables, a subset of which are
//! invertible (Laurent) variables; exponents are dense integer vectors,
//! negative only on invertible variables. Terms are stored in a BTreeMap
//! keyed by graded-reverse-lexicographic order, so every polynomial has one
//! canonical form and equality is structural.

mod groebner;
mod json;
mod map;
mod parse;

pub use groebner::{groebner, ideal_equal, interreduce_generators, GroebnerBasis, MonomialOrder};
pub use json::{polys_from_cas_text, polys_to_cas_text, PolyRepr, RingRepr};
pub use map::RingMap;
pub use parse::{parse_cyclo, parse_poly};

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::cyclotomic::CycloNum;
use crate::error::{Error, Result};
use crate::field::EvalField;

/// A polynomial ring declaration: named variables over Q(zeta_n), with a
/// designated subset of invertible variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingSpec {
    vars: Vec<String>,
    invertible: Vec<bool>,
    coeff_order: u32,
}

impl RingSpec {
    pub fn new(coeff_order: u32, vars: &[&str], invertible: &[&str]) -> Result<Arc<RingSpec>> {
        if coeff_order < 2 {
            return Err(Error::InvalidOrder(coeff_order));
        }
        let names: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        for (i, v) in names.iter().enumerate() {
            if names[..i].contains(v) {
                return Err(Error::RingMismatch(format!("duplicate variable `{v}`")));
            }
        }
        let mut inv = vec![false; names.len()];
        for u in invertible {
            match names.iter().position(|v| v == u) {
                Some(i) => inv[i] = true,
                None => {
                    return Err(Error::RingMismatch(format!(
                        "invertible variable `{u}` is not declared"
                    )))
                }
            }
        }
        Ok(Arc::new(RingSpec {
            vars: names,
            invertible: inv,
            coeff_order,
        }))
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn coeff_order(&self) -> u32 {
        self.coeff_order
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.vars[i]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn is_invertible(&self, i: usize) -> bool {
        self.invertible[i]
    }

    pub fn invertible_names(&self) -> Vec<&str> {
        self.vars
            .iter()
            .enumerate()
            .filter(|(i, _)| self.invertible[*i])
            .map(|(_, v)| v.as_str())
            .collect()
    }
}

/// Rings are compared by content; sharing an Arc is an optimization only.
pub fn ring_eq(a: &Arc<RingSpec>, b: &Arc<RingSpec>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Dense exponent vector. The natural `Ord` is graded reverse
/// lexicographic with respect to the declared variable order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mono(pub Vec<i32>);

impl Mono {
    pub fn one(nvars: usize) -> Self {
        Mono(vec![0; nvars])
    }

    pub fn var(nvars: usize, idx: usize, exp: i32) -> Self {
        let mut e = vec![0; nvars];
        e[idx] = exp;
        Mono(e)
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        Mono(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn pow(&self, k: i32) -> Mono {
        Mono(self.0.iter().map(|e| e * k).collect())
    }

    /// Componentwise quotient if `other` divides `self` (all exponents of
    /// `self` at least those of `other`); meaningful for non-negative
    /// exponent vectors.
    pub fn checked_div(&self, other: &Mono) -> Option<Mono> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            out.push(a - b);
        }
        Some(Mono(out))
    }

    pub fn lcm(&self, other: &Mono) -> Mono {
        Mono(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn coprime(&self, other: &Mono) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        let da = self.total_degree();
        let db = other.total_degree();
        if da != db {
            return da.cmp(&db);
        }
        for i in (0..self.0.len()).rev() {
            if self.0[i] != other.0[i] {
                // larger in grevlex = smaller exponent in the last
                // position where they differ
                return other.0[i].cmp(&self.0[i]);
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A Laurent polynomial in canonical form: no zero coefficients, exponents
/// of non-invertible variables non-negative.
#[derive(Clone)]
pub struct LaurentPoly {
    ring: Arc<RingSpec>,
    terms: BTreeMap<Mono, CycloNum>,
}

impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        ring_eq(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for LaurentPoly {}

impl LaurentPoly {
    pub fn zero(ring: &Arc<RingSpec>) -> Self {
        LaurentPoly {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Arc<RingSpec>) -> Self {
        Self::constant(ring, CycloNum::one(ring.coeff_order))
    }

    pub fn constant(ring: &Arc<RingSpec>, c: CycloNum) -> Self {
        let mut p = Self::zero(ring);
        p.add_term(Mono::one(ring.num_vars()), c);
        p
    }

    pub fn var(ring: &Arc<RingSpec>, idx: usize) -> Self {
        Self::var_pow(ring, idx, 1)
    }

    pub fn var_pow(ring: &Arc<RingSpec>, idx: usize, exp: i32) -> Self {
        assert!(
            exp >= 0 || ring.is_invertible(idx),
            "negative exponent on non-invertible variable `{}`",
            ring.var_name(idx)
        );
        let mut p = Self::zero(ring);
        p.add_term(
            Mono::var(ring.num_vars(), idx, exp),
            CycloNum::one(ring.coeff_order),
        );
        p
    }

    pub fn monomial(ring: &Arc<RingSpec>, mono: Mono, coeff: CycloNum) -> Self {
        let mut p = Self::zero(ring);
        p.add_term(mono, coeff);
        p
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &CycloNum)> {
        self.terms.iter()
    }

    pub fn coeff_of(&self, mono: &Mono) -> CycloNum {
        self.terms
            .get(mono)
            .cloned()
            .unwrap_or_else(|| CycloNum::zero(self.ring.coeff_order))
    }

    /// Leading term under the storage (grevlex) order.
    pub fn leading(&self) -> Option<(&Mono, &CycloNum)> {
        self.terms.last_key_value()
    }

    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    /// Accumulate one term, dropping the entry if the coefficient cancels.
    pub fn add_term(&mut self, mono: Mono, coeff: CycloNum) {
        if coeff.is_zero() {
            return;
        }
        debug_assert!(mono
            .0
            .iter()
            .enumerate()
            .all(|(i, &e)| e >= 0 || self.ring.is_invertible(i)));
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().add_ref(&coeff);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn assert_same_ring(&self, other: &Self) {
        assert!(
            ring_eq(&self.ring, &other.ring),
            "polynomial ring mismatch: {:?} vs {:?}",
            self.ring.vars,
            other.ring.vars
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_ring(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_same_ring(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.neg_ref());
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg_ref()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_ring(other);
        let mut out = Self::zero(&self.ring);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.mul_ref(cb));
            }
        }
        out
    }

    pub fn scale(&self, c: &CycloNum) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        LaurentPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k.mul_ref(c)))
                .collect(),
        }
    }

    /// self - c * x^m * g, the basic reduction step.
    pub fn sub_scaled(&self, c: &CycloNum, m: &Mono, g: &Self) -> Self {
        let mut out = self.clone();
        for (gm, gc) in &g.terms {
            out.add_term(m.mul(gm), gc.mul_ref(c).neg_ref());
        }
        out
    }

    /// True iff the polynomial is a single term supported only on
    /// invertible variables (hence a unit of the Laurent ring).
    pub fn is_unit_monomial(&self) -> bool {
        if self.terms.len() != 1 {
            return false;
        }
        let (m, _) = self.terms.iter().next().unwrap();
        m.0.iter()
            .enumerate()
            .all(|(i, &e)| e == 0 || self.ring.is_invertible(i))
    }

    /// Inverse of a unit monomial.
    pub fn unit_inverse(&self) -> Result<Self> {
        if !self.is_unit_monomial() {
            return Err(Error::NotAUnit(format!("{self}")));
        }
        let (m, c) = self.terms.iter().next().unwrap();
        Ok(Self::monomial(&self.ring, m.pow(-1), c.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        if e < 0 {
            return self.unit_inverse()?.pow(-e);
        }
        let mut acc = Self::one(&self.ring);
        let mut sq = self.clone();
        let mut k = e as u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&sq);
            }
            sq = sq.mul(&sq);
            k >>= 1;
        }
        Ok(acc)
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.inv().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// Shift exponents of invertible variables so that each one's maximal
    /// exponent across the terms becomes 0 (the smallest Laurent form
    /// whose unit part does not inflate any term).
    pub fn cleared_units(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let n = self.ring.num_vars();
        let mut shift = vec![0i32; n];
        for i in 0..n {
            if self.ring.is_invertible(i) {
                let max = self.terms.keys().map(|m| m.0[i]).max().unwrap();
                shift[i] = -max;
            }
        }
        if shift.iter().all(|&s| s == 0) {
            return self.clone();
        }
        let shift = Mono(shift);
        LaurentPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.mul(&shift), c.clone()))
                .collect(),
        }
    }

    /// Is `other` a nonzero scalar multiple of `self`?
    pub fn is_scalar_multiple_of(&self, other: &Self) -> bool {
        if !ring_eq(&self.ring, &other.ring) || self.terms.len() != other.terms.len() {
            return false;
        }
        if self.is_zero() {
            return other.is_zero();
        }
        let (m0, c0) = self.leading().unwrap();
        let c1 = other.coeff_of(m0);
        if c1.is_zero() {
            return false;
        }
        let ratio = c1.mul_ref(&c0.inv().unwrap());
        self.scale(&ratio) == *other
    }

    /// Evaluate at a point, one field element per ring variable.
    pub fn evaluate<F: EvalField>(&self, field: &F, point: &[F::Elem]) -> Result<F::Elem> {
        if point.len() != self.ring.num_vars() {
            return Err(Error::Field(format!(
                "point has {} coordinates, ring has {} variables",
                point.len(),
                self.ring.num_vars()
            )));
        }
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut term = field.embed(c)?;
            for (i, &e) in m.0.iter().enumerate() {
                if e != 0 {
                    term = field.mul(&term, &field.pow(&point[i], e as i64)?);
                }
            }
            acc = field.add(&acc, &term);
        }
        Ok(acc)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let (lead_sign, body) = format_term(&self.ring, m, c);
            if first {
                if lead_sign == '-' {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {lead_sign} ")?;
            }
            write!(f, "{body}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

/// Render one term as (sign, body) with the monomial in CAS syntax.
fn format_term(ring: &RingSpec, m: &Mono, c: &CycloNum) -> (char, String) {
    let mut sign = '+';
    let mut coeff_str = None;
    match c.as_rational() {
        Some(r) => {
            let mag: BigRational = if r.is_negative() {
                sign = '-';
                -r.clone()
            } else {
                r
            };
            if !mag.is_one() || m.is_one() {
                coeff_str = Some(mag.to_string());
            }
        }
        None => {
            coeff_str = Some(format!("({c})"));
        }
    }
    let mut parts: Vec<String> = Vec::new();
    if let Some(cs) = coeff_str {
        parts.push(cs);
    }
    for (i, &e) in m.0.iter().enumerate() {
        if e == 0 {
            continue;
        }
        let v = ring.var_name(i);
        if e == 1 {
            parts.push(v.to_string());
        } else if e > 1 {
            parts.push(format!("{v}^{e}"));
        } else {
            parts.push(format!("{v}^({e})"));
        }
    }
    (sign, parts.join("*"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::{zeta, zeta_pow, CycloNum};
    use crate::field::{CyclotomicField, PrimeField};
    use num_rational::BigRational;

    fn xring() -> Arc<RingSpec> {
        RingSpec::new(3, &["x1", "x2", "x3", "alpha", "beta"], &["alpha", "beta"]).unwrap()
    }

    #[test]
    fn ring_spec_validation() {
        assert!(RingSpec::new(3, &["x", "x"], &[]).is_err());
        assert!(RingSpec::new(3, &["x"], &["y"]).is_err());
        assert!(RingSpec::new(1, &["x"], &[]).is_err());
    }

    #[test]
    fn grevlex_order_on_monomials() {
        // degree first
        assert!(Mono(vec![2, 0, 0]) > Mono(vec![1, 0, 0]));
        // same degree: last differing exponent smaller means larger
        assert!(Mono(vec![2, 0, 0]) > Mono(vec![1, 1, 0]));
        assert!(Mono(vec![1, 1, 0]) > Mono(vec![0, 2, 0]));
        assert!(Mono(vec![0, 2, 0]) > Mono(vec![1, 0, 1]));
    }

    #[test]
    fn difference_of_squares() {
        let r = xring();
        let x1 = LaurentPoly::var(&r, 0);
        let x2 = LaurentPoly::var(&r, 1);
        let lhs = x1.add(&x2).mul(&x1.sub(&x2));
        let expected = x1.mul(&x1).sub(&x2.mul(&x2));
        assert_eq!(lhs, expected);
    }

    #[test]
    fn unit_cancellation() {
        let r = xring();
        let a = LaurentPoly::var_pow(&r, 3, 1);
        let a_inv = LaurentPoly::var_pow(&r, 3, -1);
        assert_eq!(a.mul(&a_inv), LaurentPoly::one(&r));
    }

    #[test]
    fn zeta_coefficients_multiply_to_one() {
        let r = xring();
        let f = LaurentPoly::var_pow(&r, 0, 3).scale(&zeta(3).unwrap());
        let g = LaurentPoly::var_pow(&r, 1, 3).scale(&zeta_pow(3, 2).unwrap());
        let prod = f.mul(&g);
        let expected = LaurentPoly::monomial(
            &r,
            Mono(vec![3, 3, 0, 0, 0]),
            CycloNum::one(3),
        );
        assert_eq!(prod, expected);
    }

    #[test]
    #[should_panic(expected = "negative exponent")]
    fn negative_exponent_on_plain_variable_panics() {
        let r = xring();
        let _ = LaurentPoly::var_pow(&r, 0, -1);
    }

    #[test]
    fn cleared_units_shifts_to_max_zero() {
        let r = xring();
        // alpha^-2 * x1 + alpha^-1  ->  x1*alpha^-1 + 1 after clearing
        let mut p = LaurentPoly::zero(&r);
        p.add_term(Mono(vec![1, 0, 0, -2, 0]), CycloNum::one(3));
        p.add_term(Mono(vec![0, 0, 0, -1, 0]), CycloNum::one(3));
        let cleared = p.cleared_units();
        let mut expected = LaurentPoly::zero(&r);
        expected.add_term(Mono(vec![1, 0, 0, -1, 0]), CycloNum::one(3));
        expected.add_term(Mono(vec![0, 0, 0, 0, 0]), CycloNum::one(3));
        assert_eq!(cleared, expected);
    }

    #[test]
    fn scalar_multiple_detection() {
        let r = xring();
        let f = LaurentPoly::var(&r, 0).add(&LaurentPoly::var(&r, 1).scale(&zeta(3).unwrap()));
        let g = f.scale(&zeta_pow(3, 2).unwrap().scale(
            &BigRational::new(3.into(), 7.into()),
        ));
        assert!(f.is_scalar_multiple_of(&g));
        let h = f.add(&LaurentPoly::one(&r));
        assert!(!f.is_scalar_multiple_of(&h));
    }

    #[test]
    fn evaluation_over_both_fields() {
        let r = xring();
        // f = x1^2*x2 - alpha^(-1)
        let mut f = LaurentPoly::zero(&r);
        f.add_term(Mono(vec![2, 1, 0, 0, 0]), CycloNum::one(3));
        f.add_term(Mono(vec![0, 0, 0, -1, 0]), CycloNum::from_integer(3, -1));

        let kf = CyclotomicField { order: 3 };
        let two = CycloNum::from_integer(3, 2);
        let point = vec![
            two.clone(),
            CycloNum::from_integer(3, 3),
            CycloNum::zero(3),
            two.clone(),
            CycloNum::one(3),
        ];
        // 4*3 - 1/2 = 23/2
        let got = f.evaluate(&kf, &point).unwrap();
        let expected = CycloNum::from_rational(
            3,
            BigRational::new(23.into(), 2.into()),
        );
        assert_eq!(got, expected);

        let fp = PrimeField::new(7, 3).unwrap();
        let got = f.evaluate(&fp, &[2, 3, 0, 2, 1]).unwrap();
        // 12 - 4 = 8 = 1 mod 7  (1/2 = 4 mod 7)
        assert_eq!(got, 1);
    }

    #[test]
    fn values_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<CycloNum>();
        assert_send_sync::<RingSpec>();
        assert_send_sync::<LaurentPoly>();
        assert_send_sync::<RingMap>();
        assert_send_sync::<GroebnerBasis>();
    }

    #[test]
    fn display_format() {
        let r = xring();
        let mut f = LaurentPoly::zero(&r);
        f.add_term(Mono(vec![2, 0, 0, 0, 0]), CycloNum::from_integer(3, 1));
        f.add_term(Mono(vec![0, 1, 0, -1, 0]), zeta(3).unwrap());
        f.add_term(Mono(vec![0, 0, 0, 0, 0]), CycloNum::from_integer(3, -3));
        assert_eq!(f.to_string(), "x1^2 + (zeta)*x2*alpha^(-1) - 3");
    }
}
