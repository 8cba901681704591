//! The simultaneous Z/n x Z/n eigenbasis of Sym^n V under (E12, E23), the
//! change-of-basis maps between the monomial and eigenvector coordinates,
//! and eigenspace projection.
//!
//! E23 is diagonal on x-monomials and E12 permutes them along rotation
//! orbits (length 1 or n for prime n), so the eigenvectors are discrete
//! Fourier combinations along each orbit: for the orbit listed from its
//! lexicographically greatest member, the zeta^m eigenvector carries the
//! coefficient zeta^(m(n-1-k)) on member k. That scaling gives every
//! eigenvector coefficient 1 on its final orbit member, which is the
//! normalization the explicit n = 3 tables downstream are written in.

use std::sync::Arc;

use crate::cyclotomic::{zeta_pow, CycloNum};
use crate::error::{Error, Result};
use crate::field::is_prime;
use crate::heisenberg::sigma_ring;
use crate::polyring::{LaurentPoly, Mono, RingMap, RingSpec};
use crate::veronese::{sym_basis, w_unit_ring, MonomialTable};

/// An eigenvector of Sym^n V with its weight (m, n'), meaning eigenvalues
/// (zeta^m, zeta^n') under (E12, E23).
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedVector {
    pub vector: LaurentPoly,
    pub weight: (u32, u32),
}

/// The eigenbasis together with the three coordinate maps: p (monomial
/// w-coordinates to eigenvector v-coordinates), its inverse, and pi'
/// (v-coordinates to the x-ring).
#[derive(Debug, Clone)]
pub struct EigenSystem {
    n: u32,
    vectors: Vec<WeightedVector>,
    v_ring: Arc<RingSpec>,
    /// weight of every v_ring variable (the v_i, then alpha, then beta)
    var_weights: Vec<(u32, u32)>,
    p: RingMap,
    p_inv: RingMap,
    pi_prime: RingMap,
}

/// E23 scales x_(i+1) by zeta^(-i); the weight of a monomial adds those up.
fn e23_weight(n: u32, exps: &[i32]) -> u32 {
    let mut acc: i64 = 0;
    for (i, &e) in exps.iter().enumerate() {
        acc -= i as i64 * e as i64;
    }
    acc.rem_euclid(n as i64) as u32
}

/// x_i |-> x_(i+1) on exponent vectors.
fn rotate(exps: &[i32]) -> Vec<i32> {
    let n = exps.len();
    let mut out = vec![0; n];
    for (i, &e) in exps.iter().enumerate() {
        out[(i + 1) % n] = e;
    }
    out
}

struct Orbit {
    /// members listed from the lexicographically greatest one, following
    /// repeated E12 application
    members: Vec<Vec<i32>>,
}

fn orbits(table: &MonomialTable) -> Vec<Orbit> {
    let mut seen: Vec<Vec<i32>> = Vec::new();
    let mut out = Vec::new();
    for entry in table.entries() {
        if seen.contains(entry) {
            continue;
        }
        let mut members = vec![entry.clone()];
        let mut cur = rotate(entry);
        while &cur != entry {
            members.push(cur.clone());
            cur = rotate(&cur);
        }
        let rep = members.iter().max().unwrap().clone();
        let start = members.iter().position(|m| *m == rep).unwrap();
        members.rotate_left(start);
        seen.extend(members.iter().cloned());
        out.push(Orbit { members });
    }
    out
}

impl EigenSystem {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn vectors(&self) -> &[WeightedVector] {
        &self.vectors
    }

    pub fn vector(&self, i: usize) -> &WeightedVector {
        &self.vectors[i]
    }

    /// k[v_1..v_N, alpha, beta] with alpha, beta invertible.
    pub fn v_ring(&self) -> &Arc<RingSpec> {
        &self.v_ring
    }

    pub fn p(&self) -> &RingMap {
        &self.p
    }

    pub fn p_inv(&self) -> &RingMap {
        &self.p_inv
    }

    pub fn pi_prime(&self) -> &RingMap {
        &self.pi_prime
    }

    /// Weight of the i-th v_ring variable; alpha has weight (1,0) and beta
    /// has weight (0,1).
    pub fn var_weight(&self, i: usize) -> (u32, u32) {
        self.var_weights[i]
    }

    /// The four unit weights (alpha, alpha^-1, beta, beta^-1).
    pub fn unit_weights(&self) -> [(String, (u32, u32)); 4] {
        let n = self.n;
        [
            ("alpha".into(), (1, 0)),
            ("alpha^(-1)".into(), (n - 1, 0)),
            ("beta".into(), (0, 1)),
            ("beta^(-1)".into(), (0, n - 1)),
        ]
    }

    /// Total weight of a v_ring monomial: the exponent-weighted sum of the
    /// variable weights, mod n.
    pub fn monomial_weight(&self, mono: &Mono) -> (u32, u32) {
        let n = self.n as i64;
        let mut m: i64 = 0;
        let mut nn: i64 = 0;
        for (i, &e) in mono.0.iter().enumerate() {
            let (wm, wn) = self.var_weights[i];
            m += e as i64 * wm as i64;
            nn += e as i64 * wn as i64;
        }
        (m.rem_euclid(n) as u32, nn.rem_euclid(n) as u32)
    }

    /// The part of f supported on the (zeta^m, zeta^n') eigenspace; summing
    /// over all weights recovers f.
    pub fn eigen_project(&self, f: &LaurentPoly, weight: (u32, u32)) -> LaurentPoly {
        let target = (weight.0 % self.n, weight.1 % self.n);
        let mut out = LaurentPoly::zero(&self.v_ring);
        for (mono, coeff) in f.terms() {
            if self.monomial_weight(mono) == target {
                out.add_term(mono.clone(), coeff.clone());
            }
        }
        out
    }

    /// All weights with a nonzero projection, in scan order.
    pub fn nonzero_weights(&self, f: &LaurentPoly) -> Vec<(u32, u32)> {
        let mut seen = Vec::new();
        for (mono, _) in f.terms() {
            let w = self.monomial_weight(mono);
            if !seen.contains(&w) {
                seen.push(w);
            }
        }
        seen.sort_unstable();
        seen
    }

    /// Apply p to a polynomial of the w-ring (with units).
    pub fn p_of(&self, f: &LaurentPoly) -> LaurentPoly {
        self.p.apply(f)
    }
}

/// Build the eigenbasis for prime n.
pub fn build_eigensystem(n: u32) -> Result<EigenSystem> {
    if n < 2 {
        return Err(Error::InvalidOrder(n));
    }
    if !is_prime(n as u64) {
        return Err(Error::NotPrime(n as u64));
    }
    let table = sym_basis(n)?;
    let x_ring = sigma_ring(n)?;
    let count = table.len();

    // one weighted vector per (orbit, m), plus one per fixed monomial
    let mut raw: Vec<(WeightedVector, Vec<(usize, CycloNum)>)> = Vec::new();
    for orbit in orbits(&table) {
        let len = orbit.members.len();
        let wt23 = e23_weight(n, &orbit.members[0]);
        if len == 1 {
            let vector = monomial_in_x(&x_ring, &orbit.members[0]);
            let idx = table.index_of(&orbit.members[0]).unwrap();
            raw.push((
                WeightedVector { vector, weight: (0, wt23) },
                vec![(idx, CycloNum::one(n))],
            ));
            continue;
        }
        debug_assert_eq!(len, n as usize, "orbit length must divide prime n");
        for m in 0..n {
            let mut vector = LaurentPoly::zero(&x_ring);
            let mut support = Vec::with_capacity(len);
            for (k, member) in orbit.members.iter().enumerate() {
                let c = zeta_pow(n, m as i64 * (n as i64 - 1 - k as i64))?;
                vector = vector.add(&monomial_in_x(&x_ring, member).scale(&c));
                support.push((table.index_of(member).unwrap(), c));
            }
            raw.push((WeightedVector { vector, weight: (m, wt23) }, support));
        }
    }
    debug_assert_eq!(raw.len(), count);

    // ordering: n = 3 follows the explicit table (cubes, the x1^2*x3
    // orbit, the x1^2*x2 orbit, then the fixed monomial); otherwise order
    // by weight, then by orbit representative
    if n == 3 {
        let rank = |wv: &WeightedVector, support: &[(usize, CycloNum)]| -> (u8, u32) {
            let first = table.entry(support[0].0).to_vec();
            let orbit_rank = match first.as_slice() {
                [3, 0, 0] => 0u8,
                [2, 0, 1] => 1,
                [2, 1, 0] => 2,
                [1, 1, 1] => 3,
                other => unreachable!("unexpected orbit representative {other:?}"),
            };
            (orbit_rank, wv.weight.0)
        };
        raw.sort_by_key(|(wv, support)| rank(wv, support));
    } else {
        raw.sort_by(|(a, sa), (b, sb)| {
            a.weight
                .cmp(&b.weight)
                .then_with(|| table.entry(sb[0].0).cmp(table.entry(sa[0].0)))
        });
    }

    let vectors: Vec<WeightedVector> = raw.iter().map(|(wv, _)| wv.clone()).collect();

    // v-ring and its variable weights
    let mut names: Vec<String> = (1..=count).map(|i| format!("v{i}")).collect();
    names.push("alpha".into());
    names.push("beta".into());
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let v_ring = RingSpec::new(n, &refs, &["alpha", "beta"])?;
    let mut var_weights: Vec<(u32, u32)> = vectors.iter().map(|wv| wv.weight).collect();
    var_weights.push((1, 0)); // alpha
    var_weights.push((0, 1)); // beta

    let wu_ring = w_unit_ring(n)?;

    // p_inv: v_j |-> its expression in the w basis
    let mut p_inv_images: Vec<LaurentPoly> = Vec::with_capacity(count + 2);
    for (_, support) in &raw {
        let mut img = LaurentPoly::zero(&wu_ring);
        for (w_idx, coeff) in support {
            img.add_term(
                Mono::var(wu_ring.num_vars(), *w_idx, 1),
                coeff.clone(),
            );
        }
        p_inv_images.push(img);
    }
    p_inv_images.push(LaurentPoly::var(&wu_ring, count));
    p_inv_images.push(LaurentPoly::var(&wu_ring, count + 1));
    let p_inv = RingMap::new(&v_ring, &wu_ring, p_inv_images)?;

    // p: w_i |-> inverse Fourier combination of its orbit's eigenvectors;
    // member k picks up (1/n) sum_m zeta^(m(k+1)) v_(orbit, m)
    let inv_n = CycloNum::from_integer(n, n as i64).inv()?;
    let mut p_images: Vec<Option<LaurentPoly>> = vec![None; count];
    for orbit in orbits(&table) {
        let len = orbit.members.len();
        if len == 1 {
            let w_idx = table.index_of(&orbit.members[0]).unwrap();
            let v_idx = vectors
                .iter()
                .position(|wv| wv.vector == monomial_in_x(&x_ring, &orbit.members[0]))
                .unwrap();
            p_images[w_idx] = Some(LaurentPoly::var(&v_ring, v_idx));
            continue;
        }
        // locate the n eigenvectors of this orbit by matching supports
        let orbit_vector_idx: Vec<usize> = (0..n)
            .map(|m| {
                raw.iter()
                    .position(|(wv, support)| {
                        wv.weight.0 == m && table.entry(support[0].0) == orbit.members[0]
                    })
                    .map(|pos_in_raw| {
                        // raw was sorted in place; recover position among vectors
                        vectors
                            .iter()
                            .position(|wv| *wv == raw[pos_in_raw].0)
                            .unwrap()
                    })
                    .unwrap()
            })
            .collect();
        for (k, member) in orbit.members.iter().enumerate() {
            let w_idx = table.index_of(member).unwrap();
            let mut img = LaurentPoly::zero(&v_ring);
            for m in 0..n {
                let c = zeta_pow(n, m as i64 * (k as i64 + 1))?.mul_ref(&inv_n);
                img.add_term(
                    Mono::var(v_ring.num_vars(), orbit_vector_idx[m as usize], 1),
                    c,
                );
            }
            p_images[w_idx] = Some(img);
        }
    }
    let mut p_images: Vec<LaurentPoly> = p_images.into_iter().map(Option::unwrap).collect();
    p_images.push(LaurentPoly::var(&v_ring, count));
    p_images.push(LaurentPoly::var(&v_ring, count + 1));
    let p = RingMap::new(&wu_ring, &v_ring, p_images)?;

    // pi': v_j |-> its x-expression
    let mut pi_prime_images: Vec<LaurentPoly> =
        vectors.iter().map(|wv| wv.vector.clone()).collect();
    let xv = x_ring.num_vars();
    pi_prime_images.push(LaurentPoly::var(&x_ring, xv - 2));
    pi_prime_images.push(LaurentPoly::var(&x_ring, xv - 1));
    let pi_prime = RingMap::new(&v_ring, &x_ring, pi_prime_images)?;

    Ok(EigenSystem {
        n,
        vectors,
        v_ring,
        var_weights,
        p,
        p_inv,
        pi_prime,
    })
}

fn monomial_in_x(x_ring: &Arc<RingSpec>, exps: &[i32]) -> LaurentPoly {
    let mut padded = exps.to_vec();
    padded.extend([0, 0]);
    LaurentPoly::monomial(
        x_ring,
        Mono(padded),
        CycloNum::one(x_ring.coeff_order()),
    )
}
