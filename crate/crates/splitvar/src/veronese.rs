//! The monomial basis of Sym^n V, the substitution map pi from the w-ring
//! onto degree-n monomials, and a generating set for its kernel: the toric
//! ideal of the n-th Veronese embedding of P^(n-1).
//!
//! Generators come from exponent-sum collisions: whenever two products of
//! basis monomials agree, the difference of the corresponding w-quadrics
//! lies in the kernel. Chaining the products inside each collision bucket
//! yields a minimal generating set (Veronese toric ideals are generated by
//! quadrics), which is then inter-reduced into a canonical presentation.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::heisenberg::sigma_ring;
use crate::polyring::{
    interreduce_generators, parse_poly, LaurentPoly, Mono, MonomialOrder, RingMap, RingSpec,
};

/// Binomial coefficient, small arguments only.
pub fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// All exponent vectors of total degree n in n variables, lexicographically
/// descending; the canonical basis enumeration for n != 3.
pub fn degree_n_monomials(n: u32) -> Vec<Vec<i32>> {
    fn rec(vars_left: usize, degree_left: i32, prefix: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        if vars_left == 1 {
            let mut full = prefix.clone();
            full.push(degree_left);
            out.push(full);
            return;
        }
        for e in (0..=degree_left).rev() {
            prefix.push(e);
            rec(vars_left - 1, degree_left - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n as usize, n as i32, &mut Vec::new(), &mut out);
    out
}

/// The ordered correspondence w_i <-> degree-n monomial.
///
/// For n = 3 the order is pinned to the assignment that the explicit maps
/// of the n = 3 construction require (x1x2x3 first, then the cubes, then
/// the mixed quadrics); every downstream table is only reproducible under
/// this assignment. Other n use the lexicographic enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialTable {
    n: u32,
    entries: Vec<Vec<i32>>,
}

impl MonomialTable {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Vec<i32>] {
        &self.entries
    }

    pub fn entry(&self, i: usize) -> &[i32] {
        &self.entries[i]
    }

    pub fn index_of(&self, exps: &[i32]) -> Option<usize> {
        self.entries.iter().position(|e| e == exps)
    }
}

/// Enumerate the monomial basis of Sym^n V.
pub fn sym_basis(n: u32) -> Result<MonomialTable> {
    if n < 2 {
        return Err(Error::InvalidOrder(n));
    }
    let entries = if n == 3 {
        vec![
            vec![1, 1, 1], // w1 = x1*x2*x3
            vec![3, 0, 0], // w2 = x1^3
            vec![0, 3, 0], // w3 = x2^3
            vec![0, 0, 3], // w4 = x3^3
            vec![2, 1, 0], // w5 = x1^2*x2
            vec![2, 0, 1], // w6 = x1^2*x3
            vec![1, 2, 0], // w7 = x1*x2^2
            vec![0, 2, 1], // w8 = x2^2*x3
            vec![1, 0, 2], // w9 = x1*x3^2
            vec![0, 1, 2], // w10 = x2*x3^2
        ]
    } else {
        degree_n_monomials(n)
    };
    debug_assert_eq!(entries.len() as u64, binom(2 * n as u64 - 1, n as u64));
    Ok(MonomialTable { n, entries })
}

/// k[w_1..w_N], no invertible variables.
pub fn w_ring(n: u32) -> Result<Arc<RingSpec>> {
    let count = binom(2 * n as u64 - 1, n as u64);
    let names: Vec<String> = (1..=count).map(|i| format!("w{i}")).collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    RingSpec::new(n, &refs, &[])
}

/// k[w_1..w_N, alpha, beta] with alpha, beta invertible.
pub fn w_unit_ring(n: u32) -> Result<Arc<RingSpec>> {
    let count = binom(2 * n as u64 - 1, n as u64);
    let mut names: Vec<String> = (1..=count).map(|i| format!("w{i}")).collect();
    names.push("alpha".into());
    names.push("beta".into());
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    RingSpec::new(n, &refs, &["alpha", "beta"])
}

/// pi: k[w_1..w_N] -> k[x_1..x_n, alpha, beta], w_i to the i-th monomial.
pub fn pi_map(n: u32) -> Result<RingMap> {
    let table = sym_basis(n)?;
    let source = w_ring(n)?;
    let target = sigma_ring(n)?;
    let images = table
        .entries()
        .iter()
        .map(|exps| {
            let mut padded = exps.clone();
            padded.extend([0, 0]); // alpha, beta exponents
            LaurentPoly::monomial(
                &target,
                Mono(padded),
                crate::cyclotomic::CycloNum::one(n),
            )
        })
        .collect();
    RingMap::new(&source, &target, images)
}

/// pi tensored with the identity on the unit variables.
pub fn pi_unit_map(n: u32) -> Result<RingMap> {
    let table = sym_basis(n)?;
    let source = w_unit_ring(n)?;
    let target = sigma_ring(n)?;
    let mut images: Vec<LaurentPoly> = table
        .entries()
        .iter()
        .map(|exps| {
            let mut padded = exps.clone();
            padded.extend([0, 0]);
            LaurentPoly::monomial(
                &target,
                Mono(padded),
                crate::cyclotomic::CycloNum::one(n),
            )
        })
        .collect();
    let nv = target.num_vars();
    images.push(LaurentPoly::var(&target, nv - 2));
    images.push(LaurentPoly::var(&target, nv - 1));
    RingMap::new(&source, &target, images)
}

/// Group the quadratic w-monomials w_i*w_j by their image monomial.
fn collision_buckets(table: &MonomialTable) -> BTreeMap<Vec<i32>, Vec<Mono>> {
    let count = table.len();
    let mut buckets: BTreeMap<Vec<i32>, Vec<Mono>> = BTreeMap::new();
    for i in 0..count {
        for j in i..count {
            let key: Vec<i32> = table
                .entry(i)
                .iter()
                .zip(table.entry(j))
                .map(|(a, b)| a + b)
                .collect();
            let mut exps = vec![0i32; count];
            exps[i] += 1;
            exps[j] += 1;
            buckets.entry(key).or_default().push(Mono(exps));
        }
    }
    buckets
}

/// A generating set for Ker(pi): within each collision bucket, chain the
/// products in descending monomial order and take consecutive differences,
/// then inter-reduce. Every emitted binomial maps to zero by construction.
pub fn toric_ideal(n: u32) -> Result<Vec<LaurentPoly>> {
    let table = sym_basis(n)?;
    let ring = w_ring(n)?;
    let one = crate::cyclotomic::CycloNum::one(n);
    let mut gens = Vec::new();
    for (_, mut products) in collision_buckets(&table) {
        if products.len() < 2 {
            continue;
        }
        products.sort_by(|a, b| b.cmp(a)); // descending grevlex
        for pair in products.windows(2) {
            let mut g = LaurentPoly::zero(&ring);
            g.add_term(pair[0].clone(), one.clone());
            g.add_term(pair[1].clone(), one.neg_ref());
            gens.push(g);
        }
    }
    Ok(interreduce_generators(&gens, MonomialOrder::GrevLex))
}

/// Count of exponent-sum collisions, the expected generator count.
pub fn collision_count(n: u32) -> Result<usize> {
    let table = sym_basis(n)?;
    Ok(collision_buckets(&table)
        .values()
        .map(|v| v.len().saturating_sub(1))
        .sum())
}

/// The five relation shapes of the n = 3 kernel, recognized from the
/// partition of the common image monomial:
/// 1: (3,3,0) products of opposite mixed quadrics vs two cubes
/// 2: (4,1,1) two mixed quadrics sharing a square vs cube times w1
/// 3: (4,2,0) square of a mixed quadric vs cube times its opposite
/// 4: (3,2,1) the two relations of each x_i^2 x_j * x_j^2 x_k product
/// 5: (2,2,2) rewritings of (x1*x2*x3)^2
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Category(pub u8);

/// Classify each generator of the n = 3 toric ideal. Errors on any input
/// that is not a quadratic binomial difference of same-image products.
pub fn classify_generators_n3(gens: &[LaurentPoly]) -> Result<Vec<Category>> {
    let table = sym_basis(3)?;
    let mut out = Vec::with_capacity(gens.len());
    for g in gens {
        out.push(classify_one(&table, g)?);
    }
    Ok(out)
}

fn classify_one(table: &MonomialTable, g: &LaurentPoly) -> Result<Category> {
    if g.num_terms() != 2 {
        return Err(Error::Parse(format!("not a binomial: {g}")));
    }
    let terms: Vec<_> = g.terms().collect();
    let (m1, c1) = terms[0];
    let (m2, c2) = terms[1];
    if !c1.add_ref(c2).is_zero() {
        return Err(Error::Parse(format!("not a difference of monomials: {g}")));
    }
    let image = |m: &Mono| -> Result<Vec<i32>> {
        if m.total_degree() != 2 || m.0.iter().any(|&e| e < 0) {
            return Err(Error::Parse(format!("not quadratic in the w-ring: {g}")));
        }
        let mut acc = vec![0i32; 3];
        for (i, &e) in m.0.iter().enumerate() {
            for _ in 0..e {
                for (k, &x) in table.entry(i).iter().enumerate() {
                    acc[k] += x;
                }
            }
        }
        Ok(acc)
    };
    let img1 = image(m1)?;
    let img2 = image(m2)?;
    if img1 != img2 {
        return Err(Error::Parse(format!("terms map to different monomials: {g}")));
    }
    let mut pattern = img1;
    pattern.sort_unstable_by(|a, b| b.cmp(a));
    match pattern.as_slice() {
        [3, 3, 0] => Ok(Category(1)),
        [4, 1, 1] => Ok(Category(2)),
        [4, 2, 0] => Ok(Category(3)),
        [3, 2, 1] => Ok(Category(4)),
        [2, 2, 2] => Ok(Category(5)),
        other => Err(Error::Parse(format!(
            "image pattern {other:?} matches no known relation shape: {g}"
        ))),
    }
}

/// Tally of categories 1..5.
pub fn category_counts(categories: &[Category]) -> [usize; 5] {
    let mut counts = [0usize; 5];
    for c in categories {
        counts[(c.0 - 1) as usize] += 1;
    }
    counts
}

/// The 27 quadratic binomials generating Ker(pi) at n = 3, as tabulated
/// independently of this crate's construction; a cross-check oracle only,
/// never used as the computed result.
pub fn known_toric_generators_n3() -> Vec<LaurentPoly> {
    let ring = w_ring(3).expect("w-ring for n = 3");
    KNOWN_TORIC_N3
        .iter()
        .map(|s| parse_poly(&ring, s).expect("reference binomial parses"))
        .collect()
}

const KNOWN_TORIC_N3: [&str; 27] = [
    "w8*w9 - w1*w10",
    "w7*w9 - w5*w10",
    "w5*w9 - w2*w10",
    "w3*w9 - w7*w10",
    "w1*w9 - w6*w10",
    "w8^2 - w3*w10",
    "w6*w8 - w5*w10",
    "w4*w8 - w10^2",
    "w1*w8 - w7*w10",
    "w6*w7 - w2*w8",
    "w4*w7 - w1*w10",
    "w1*w7 - w5*w8",
    "w6^2 - w2*w9",
    "w4*w6 - w9^2",
    "w3*w6 - w5*w8",
    "w1*w6 - w2*w10",
    "w5^2 - w2*w7",
    "w4*w5 - w6*w10",
    "w3*w5 - w7^2",
    "w1*w5 - w2*w8",
    "w3*w4 - w8*w10",
    "w2*w4 - w6*w9",
    "w1*w4 - w9*w10",
    "w2*w3 - w5*w7",
    "w1*w3 - w7*w8",
    "w1*w2 - w5*w6",
    "w1^2 - w5*w10",
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{ideal_equal, GroebnerBasis};

    #[test]
    fn basis_sizes() {
        assert_eq!(sym_basis(2).unwrap().len(), 3);
        assert_eq!(sym_basis(3).unwrap().len(), 10);
        assert_eq!(sym_basis(4).unwrap().len(), 35);
        assert!(sym_basis(1).is_err());
    }

    #[test]
    fn n2_table_order() {
        let t = sym_basis(2).unwrap();
        assert_eq!(t.entries(), &[vec![2, 0], vec![1, 1], vec![0, 2]]);
    }

    #[test]
    fn n3_assignment() {
        let pi = pi_map(3).unwrap();
        let x = sigma_ring(3).unwrap();
        let expected = [
            "x1*x2*x3", "x1^3", "x2^3", "x3^3", "x1^2*x2", "x1^2*x3", "x1*x2^2", "x2^2*x3",
            "x1*x3^2", "x2*x3^2",
        ];
        for (i, e) in expected.iter().enumerate() {
            assert_eq!(
                pi.image_of(i),
                &parse_poly(&x, e).unwrap(),
                "image of w{}",
                i + 1
            );
        }
    }

    #[test]
    fn n3_assignment_kills_known_generators() {
        // the tabulated binomials must all vanish under the reconstructed
        // assignment; this pins the w-ordering
        let pi = pi_map(3).unwrap();
        for g in known_toric_generators_n3() {
            assert!(pi.apply(&g).is_zero(), "pi({g}) != 0");
        }
    }

    #[test]
    fn toric_n2_single_binomial() {
        let gens = toric_ideal(2).unwrap();
        assert_eq!(gens.len(), 1);
        // the relation w(x1^2) * w(x2^2) = w(x1x2)^2
        let ring = w_ring(2).unwrap();
        let expected = parse_poly(&ring, "w2^2 - w1*w3").unwrap();
        assert_eq!(gens[0], expected);
    }

    #[test]
    fn toric_n3_has_27_generators_equal_to_known_ideal() {
        let gens = toric_ideal(3).unwrap();
        assert_eq!(gens.len(), 27);
        let ring = w_ring(3).unwrap();
        let known = known_toric_generators_n3();
        assert!(ideal_equal(&ring, &gens, &known, MonomialOrder::GrevLex).unwrap());
    }

    #[test]
    fn every_generator_maps_to_zero() {
        for n in [2u32, 3, 4] {
            let pi = pi_map(n).unwrap();
            for g in toric_ideal(n).unwrap() {
                assert!(pi.apply(&g).is_zero());
            }
        }
    }

    #[test]
    fn generator_count_matches_collision_count() {
        // independent route: count collisions by hashing pairwise sums
        use std::collections::HashMap;
        for n in [2u32, 3, 4] {
            let table = sym_basis(n).unwrap();
            let mut seen: HashMap<String, usize> = HashMap::new();
            for i in 0..table.len() {
                for j in i..table.len() {
                    let key: Vec<i32> = table
                        .entry(i)
                        .iter()
                        .zip(table.entry(j))
                        .map(|(a, b)| a + b)
                        .collect();
                    *seen.entry(format!("{key:?}")).or_default() += 1;
                }
            }
            let expected: usize = seen.values().map(|&c| c - 1).sum();
            assert_eq!(toric_ideal(n).unwrap().len(), expected);
            assert_eq!(collision_count(n).unwrap(), expected);
        }
    }

    #[test]
    fn classification_examples_and_counts() {
        let ring = w_ring(3).unwrap();
        let cat = |s: &str| {
            classify_one(&sym_basis(3).unwrap(), &parse_poly(&ring, s).unwrap()).unwrap()
        };
        assert_eq!(cat("w5*w7 - w2*w3"), Category(1));
        assert_eq!(cat("w5*w6 - w1*w2"), Category(2));
        assert_eq!(cat("w8^2 - w3*w10"), Category(3));
        assert_eq!(cat("w1^2 - w5*w10"), Category(5));

        let gens = toric_ideal(3).unwrap();
        let cats = classify_generators_n3(&gens).unwrap();
        assert_eq!(category_counts(&cats), [3, 3, 6, 12, 3]);

        // the tabulated generators classify identically
        let known_cats = classify_generators_n3(&known_toric_generators_n3()).unwrap();
        assert_eq!(category_counts(&known_cats), [3, 3, 6, 12, 3]);
    }

    #[test]
    fn classifier_flags_foreign_input() {
        let ring = w_ring(3).unwrap();
        let table = sym_basis(3).unwrap();
        for bad in ["w1*w2 - w1*w3", "w1^2 - 2*w5*w10", "w1 - w2", "w1^2 + w5*w10"] {
            assert!(
                classify_one(&table, &parse_poly(&ring, bad).unwrap()).is_err(),
                "{bad} should not classify"
            );
        }
    }

    #[test]
    fn normal_forms_against_the_known_basis() {
        let ring = w_ring(3).unwrap();
        let gb =
            GroebnerBasis::compute(&ring, &known_toric_generators_n3(), MonomialOrder::GrevLex)
                .unwrap();
        // members reduce to zero
        let member = parse_poly(&ring, "w8*w9 - w1*w10").unwrap();
        assert!(gb.normal_form(&member).is_zero());
        // a single variable is untouched: the toric ideal has no linear part
        let w1 = parse_poly(&ring, "w1").unwrap();
        assert_eq!(gb.normal_form(&w1), w1);
        // zero reduces to zero
        assert!(gb.normal_form(&LaurentPoly::zero(&ring)).is_zero());
    }

    #[test]
    fn minimality_at_n3() {
        // the 27 generators are linearly independent quadrics; since the
        // ideal is homogeneous and generated in degree 2, dropping any one
        // strictly shrinks it. One membership check ties the linear-algebra
        // route to the Groebner route.
        let gens = toric_ideal(3).unwrap();
        let ring = w_ring(3).unwrap();

        // linear independence over Q(zeta): each generator has a distinct
        // leading monomial after inter-reduction
        let mut leads: Vec<_> = gens
            .iter()
            .map(|g| g.leading().unwrap().0.clone())
            .collect();
        leads.sort();
        leads.dedup();
        assert_eq!(leads.len(), 27, "leading monomials must be distinct");

        let rest: Vec<_> = gens[1..].to_vec();
        let gb = GroebnerBasis::compute(&ring, &rest, MonomialOrder::GrevLex).unwrap();
        assert!(
            !gb.contains(&gens[0]),
            "dropped generator must not be implied by the remaining 26"
        );
    }
}
