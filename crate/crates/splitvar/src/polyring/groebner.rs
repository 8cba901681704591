//! Buchberger's algorithm with inter-reduction, and normal forms for
//! ideal-membership and ideal-equality testing.
//!
//! Laurent rings are handled by lifting into an ordinary polynomial ring:
//! every invertible variable u gets a companion variable u_inv, negative
//! exponents move to the companion monomial-wise, and the relation
//! u*u_inv - 1 joins every ideal computation. Membership in the localized
//! ring is then exactly membership in the lifted ideal, and because the
//! reduced basis always reduces u*u_inv, remainders never mix u with u_inv,
//! which makes the Laurent normal form well defined and idempotent.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{ring_eq, LaurentPoly, Mono, RingSpec};
use crate::cyclotomic::CycloNum;
use crate::error::{Error, Result};

/// Monomial order tag. Graded reverse lexicographic is the default
/// everywhere; lexicographic is available for experiments.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum MonomialOrder {
    #[default]
    GrevLex,
    Lex,
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Mono, b: &Mono) -> Ordering {
        match self {
            MonomialOrder::GrevLex => a.cmp(b),
            MonomialOrder::Lex => {
                for (x, y) in a.0.iter().zip(&b.0) {
                    if x != y {
                        return x.cmp(y);
                    }
                }
                Ordering::Equal
            }
        }
    }
}

/// Leading term of a nonzero polynomial under the given order.
fn leading_under<'a>(f: &'a LaurentPoly, order: MonomialOrder) -> (&'a Mono, &'a CycloNum) {
    match order {
        MonomialOrder::GrevLex => f.leading().expect("nonzero polynomial"),
        MonomialOrder::Lex => f
            .terms()
            .max_by(|(a, _), (b, _)| order.cmp(a, b))
            .expect("nonzero polynomial"),
    }
}

/// A reduced Groebner basis of an ideal of a Laurent polynomial ring,
/// stored in the lifted (companion-variable) polynomial ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    source_ring: Arc<RingSpec>,
    ext_ring: Arc<RingSpec>,
    order: MonomialOrder,
    basis: Vec<LaurentPoly>,
    /// ext-ring variable index of the companion of each source variable
    /// (identity for non-invertible variables).
    companion: Vec<Option<usize>>,
}

impl GroebnerBasis {
    /// Compute the reduced Groebner basis of the ideal generated by `gens`
    /// (together with the unit relations of the ring's invertible
    /// variables).
    pub fn compute(
        ring: &Arc<RingSpec>,
        gens: &[LaurentPoly],
        order: MonomialOrder,
    ) -> Result<GroebnerBasis> {
        for g in gens {
            if !ring_eq(g.ring(), ring) {
                return Err(Error::RingMismatch(
                    "generator outside the declared ring".into(),
                ));
            }
        }
        let (ext_ring, companion) = extend_ring(ring)?;
        let mut work: Vec<LaurentPoly> = Vec::new();
        for g in gens {
            let lifted = lift(&ext_ring, &companion, g);
            if !lifted.is_zero() {
                work.push(lifted.monic_under(order));
            }
        }
        // unit relations u * u_inv - 1
        for (i, comp) in companion.iter().enumerate() {
            if let Some(j) = comp {
                let mut rel = LaurentPoly::zero(&ext_ring);
                let mut m = Mono::one(ext_ring.num_vars());
                m.0[i] = 1;
                m.0[*j] = 1;
                rel.add_term(m, CycloNum::one(ring.coeff_order()));
                rel.add_term(
                    Mono::one(ext_ring.num_vars()),
                    CycloNum::from_integer(ring.coeff_order(), -1),
                );
                work.push(rel);
            }
        }
        let basis = buchberger(work, order);
        Ok(GroebnerBasis {
            source_ring: ring.clone(),
            ext_ring,
            order,
            basis,
            companion,
        })
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.source_ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// The reduced basis in the lifted polynomial ring.
    pub fn basis(&self) -> &[LaurentPoly] {
        &self.basis
    }

    /// Basis elements mapped back to the Laurent ring.
    pub fn basis_in_source(&self) -> Vec<LaurentPoly> {
        self.basis
            .iter()
            .map(|g| unlift(&self.source_ring, &self.companion, g))
            .collect()
    }

    /// Remainder of multivariate division: zero exactly for ideal members.
    pub fn normal_form(&self, f: &LaurentPoly) -> LaurentPoly {
        assert!(
            ring_eq(f.ring(), &self.source_ring),
            "normal form of a polynomial from a different ring"
        );
        let lifted = lift(&self.ext_ring, &self.companion, f);
        let reduced = reduce_full(&lifted, &self.basis, self.order);
        unlift(&self.source_ring, &self.companion, &reduced)
    }

    pub fn contains(&self, f: &LaurentPoly) -> bool {
        self.normal_form(f).is_zero()
    }
}

/// Build the lifted ring: one companion variable per invertible variable,
/// nothing invertible in the result.
fn extend_ring(ring: &Arc<RingSpec>) -> Result<(Arc<RingSpec>, Vec<Option<usize>>)> {
    let mut names: Vec<String> = ring.var_names().to_vec();
    let mut companion = vec![None; ring.num_vars()];
    for i in 0..ring.num_vars() {
        if ring.is_invertible(i) {
            let mut cname = format!("{}_inv", ring.var_name(i));
            while names.contains(&cname) {
                cname.push('_');
            }
            companion[i] = Some(names.len());
            names.push(cname);
        }
    }
    let name_refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let ext = RingSpec::new(ring.coeff_order(), &name_refs, &[])?;
    Ok((ext, companion))
}

/// Move negative exponents onto companion variables, term by term.
fn lift(ext_ring: &Arc<RingSpec>, companion: &[Option<usize>], f: &LaurentPoly) -> LaurentPoly {
    let mut out = LaurentPoly::zero(ext_ring);
    for (m, c) in f.terms() {
        let mut exps = vec![0i32; ext_ring.num_vars()];
        for (i, &e) in m.0.iter().enumerate() {
            if e >= 0 {
                exps[i] = e;
            } else {
                exps[companion[i].expect("negative exponent on invertible variable")] = -e;
            }
        }
        out.add_term(Mono(exps), c.clone());
    }
    out
}

/// Inverse of `lift` on companion-reduced polynomials: u_inv^k |-> u^(-k).
fn unlift(ring: &Arc<RingSpec>, companion: &[Option<usize>], f: &LaurentPoly) -> LaurentPoly {
    let mut out = LaurentPoly::zero(ring);
    for (m, c) in f.terms() {
        let mut exps = vec![0i32; ring.num_vars()];
        for (i, comp) in companion.iter().enumerate() {
            exps[i] = m.0[i];
            if let Some(j) = comp {
                exps[i] -= m.0[*j];
            }
        }
        out.add_term(Mono(exps), c.clone());
    }
    out
}

impl LaurentPoly {
    fn monic_under(&self, order: MonomialOrder) -> LaurentPoly {
        if self.is_zero() {
            return self.clone();
        }
        let (_, c) = leading_under(self, order);
        let inv = c.inv().expect("nonzero leading coefficient");
        self.scale(&inv)
    }
}

/// Full reduction: every term of the remainder is irreducible by the basis.
fn reduce_full(f: &LaurentPoly, basis: &[LaurentPoly], order: MonomialOrder) -> LaurentPoly {
    let mut work = f.clone();
    let mut remainder = LaurentPoly::zero(f.ring());
    'outer: while !work.is_zero() {
        let (lm, lc) = {
            let (m, c) = leading_under(&work, order);
            (m.clone(), c.clone())
        };
        for g in basis {
            let (glm, _) = leading_under(g, order);
            if let Some(q) = lm.checked_div(glm) {
                // basis elements are monic
                work = work.sub_scaled(&lc, &q, g);
                continue 'outer;
            }
        }
        work.add_term(lm.clone(), lc.neg_ref());
        remainder.add_term(lm, lc);
    }
    remainder
}

/// Buchberger with the coprimality and chain criteria, followed by
/// inter-reduction to the reduced basis, which is unique for (ideal, order).
fn buchberger(mut basis: Vec<LaurentPoly>, order: MonomialOrder) -> Vec<LaurentPoly> {
    basis.retain(|g| !g.is_zero());
    basis = interreduce(basis, order);
    if basis.is_empty() {
        return basis;
    }

    let mut pairs: BTreeSet<(i64, usize, usize)> = BTreeSet::new();
    let add_pairs =
        |pairs: &mut BTreeSet<(i64, usize, usize)>, basis: &[LaurentPoly], k: usize| {
            let (ltk, _) = leading_under(&basis[k], order);
            for i in 0..k {
                let (lti, _) = leading_under(&basis[i], order);
                let lcm = lti.lcm(ltk);
                pairs.insert((lcm.total_degree(), i, k));
            }
        };
    for k in 0..basis.len() {
        add_pairs(&mut pairs, &basis, k);
    }

    while let Some(&(_, i, j)) = pairs.iter().next() {
        pairs.remove(&(lcm_degree(&basis, i, j, order), i, j));
        let (lti, _) = leading_under(&basis[i], order);
        let (ltj, _) = leading_under(&basis[j], order);
        if lti.coprime(ltj) {
            continue; // Buchberger's first criterion
        }
        let lcm = lti.lcm(ltj);
        // chain criterion: some k with LT(k) | lcm and both mixed pairs done
        let mut skip = false;
        for (k, g) in basis.iter().enumerate() {
            if k == i || k == j {
                continue;
            }
            let (ltk, _) = leading_under(g, order);
            if lcm.checked_div(ltk).is_some() {
                let p1 = ordered_pair(i, k);
                let p2 = ordered_pair(j, k);
                let live = |(a, b): (usize, usize)| {
                    pairs.contains(&(lcm_degree(&basis, a, b, order), a, b))
                };
                if !live(p1) && !live(p2) {
                    skip = true;
                    break;
                }
            }
        }
        if skip {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], order);
        let r = reduce_full(&s, &basis, order);
        if !r.is_zero() {
            basis.push(r.monic_under(order));
            add_pairs(&mut pairs, &basis, basis.len() - 1);
        }
    }

    interreduce(basis, order)
}

fn ordered_pair(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

fn lcm_degree(basis: &[LaurentPoly], i: usize, j: usize, order: MonomialOrder) -> i64 {
    let (lti, _) = leading_under(&basis[i], order);
    let (ltj, _) = leading_under(&basis[j], order);
    lti.lcm(ltj).total_degree()
}

fn s_polynomial(f: &LaurentPoly, g: &LaurentPoly, order: MonomialOrder) -> LaurentPoly {
    let (ltf, cf) = leading_under(f, order);
    let (ltg, cg) = leading_under(g, order);
    let lcm = ltf.lcm(ltg);
    let mf = lcm.checked_div(ltf).unwrap();
    let mg = lcm.checked_div(ltg).unwrap();
    let f_scaled = {
        let inv = cf.inv().unwrap();
        let mut out = LaurentPoly::zero(f.ring());
        for (m, c) in f.terms() {
            out.add_term(m.mul(&mf), c.mul_ref(&inv));
        }
        out
    };
    let g_scaled = {
        let inv = cg.inv().unwrap();
        let mut out = LaurentPoly::zero(g.ring());
        for (m, c) in g.terms() {
            out.add_term(m.mul(&mg), c.mul_ref(&inv));
        }
        out
    };
    f_scaled.sub(&g_scaled)
}

/// Reduce every element against all the others until nothing changes, then
/// sort by leading monomial, descending. On a Groebner basis this yields
/// the reduced basis.
fn interreduce(mut basis: Vec<LaurentPoly>, order: MonomialOrder) -> Vec<LaurentPoly> {
    basis.retain(|g| !g.is_zero());
    loop {
        let mut changed = false;
        let mut next: Vec<LaurentPoly> = Vec::with_capacity(basis.len());
        for i in 0..basis.len() {
            let mut others: Vec<LaurentPoly> = Vec::with_capacity(basis.len() - 1);
            others.extend(next.iter().cloned());
            others.extend(basis[i + 1..].iter().cloned());
            let r = reduce_full(&basis[i], &others, order);
            if r != basis[i] {
                changed = true;
            }
            if !r.is_zero() {
                next.push(r.monic_under(order));
            } else if !basis[i].is_zero() {
                changed = true;
            }
        }
        basis = next;
        if !changed {
            break;
        }
    }
    basis.sort_by(|a, b| {
        let (la, _) = leading_under(a, order);
        let (lb, _) = leading_under(b, order);
        order.cmp(lb, la)
    });
    basis
}

/// Reduced Groebner basis of a generator list (unit relations included).
pub fn groebner(
    ring: &Arc<RingSpec>,
    gens: &[LaurentPoly],
    order: MonomialOrder,
) -> Result<GroebnerBasis> {
    GroebnerBasis::compute(ring, gens, order)
}

/// Inter-reduce a generator list in its own ring (no companion lifting, no
/// S-pairs): used to canonicalize generating sets without computing the
/// full basis.
pub fn interreduce_generators(gens: &[LaurentPoly], order: MonomialOrder) -> Vec<LaurentPoly> {
    let monic: Vec<LaurentPoly> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.monic_under(order))
        .collect();
    interreduce(monic, order)
}

/// Two generator lists cut out the same ideal iff each generator of one
/// reduces to zero modulo the basis of the other.
pub fn ideal_equal(
    ring: &Arc<RingSpec>,
    gens_a: &[LaurentPoly],
    gens_b: &[LaurentPoly],
    order: MonomialOrder,
) -> Result<bool> {
    let gb_a = GroebnerBasis::compute(ring, gens_a, order)?;
    for b in gens_b {
        if !gb_a.contains(b) {
            return Ok(false);
        }
    }
    let gb_b = GroebnerBasis::compute(ring, gens_b, order)?;
    for a in gens_a {
        if !gb_b.contains(a) {
            return Ok(false);
        }
    }
    Ok(true)
}
