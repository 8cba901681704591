//! The mod-n Heisenberg group, its induced monomial representation, and the
//! action on the coordinate ring k[x_1..x_n, alpha^(+-1), beta^(+-1)].
//!
//! H is the group of unitriangular 3x3 matrices over Z/n, coordinatized by
//! the strictly-upper entries (a12, a13, a23). The n-dimensional
//! representation is induced from the character g |-> zeta^a13(g) of the
//! subgroup a12 = 0, with coset representatives the powers of E12; working
//! that induction out gives
//!
//! ```text
//! g . u_i = zeta^(a13(g) - (i + a12(g)) * a23(g)) u_(i + a12(g) mod n)
//! ```
//!
//! and the coordinate functions x_1..x_n transform by the same data. The
//! two abelian characters a12 and a23 scale alpha and beta.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cyclotomic::{zeta_pow, CycloNum};
use crate::error::Result;
use crate::polyring::{LaurentPoly, RingMap, RingSpec};

/// An element of the mod-n Heisenberg group, reduced coordinates in [0, n).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupElement {
    pub n: u32,
    pub a12: u32,
    pub a13: u32,
    pub a23: u32,
}

impl GroupElement {
    pub fn new(n: u32, a12: i64, a13: i64, a23: i64) -> Self {
        let m = n as i64;
        GroupElement {
            n,
            a12: a12.rem_euclid(m) as u32,
            a13: a13.rem_euclid(m) as u32,
            a23: a23.rem_euclid(m) as u32,
        }
    }

    pub fn identity(n: u32) -> Self {
        GroupElement { n, a12: 0, a13: 0, a23: 0 }
    }

    pub fn e12(n: u32) -> Self {
        GroupElement { n, a12: 1, a13: 0, a23: 0 }
    }

    pub fn e13(n: u32) -> Self {
        GroupElement { n, a12: 0, a13: 1, a23: 0 }
    }

    pub fn e23(n: u32) -> Self {
        GroupElement { n, a12: 0, a13: 0, a23: 1 }
    }

    /// Matrix product; the (1,3) entry picks up the cross term
    /// a12(self) * a23(other).
    pub fn mul(&self, other: &GroupElement) -> GroupElement {
        assert_eq!(self.n, other.n, "group modulus mismatch");
        GroupElement::new(
            self.n,
            self.a12 as i64 + other.a12 as i64,
            self.a13 as i64 + other.a13 as i64 + self.a12 as i64 * other.a23 as i64,
            self.a23 as i64 + other.a23 as i64,
        )
    }

    pub fn inv(&self) -> GroupElement {
        GroupElement::new(
            self.n,
            -(self.a12 as i64),
            -(self.a13 as i64) + self.a12 as i64 * self.a23 as i64,
            -(self.a23 as i64),
        )
    }

    pub fn is_identity(&self) -> bool {
        self.a12 == 0 && self.a13 == 0 && self.a23 == 0
    }

    /// Membership in the subgroup N = Ker(a12), the domain of the
    /// inducing character.
    pub fn in_kernel_subgroup(&self) -> bool {
        self.a12 == 0
    }

    /// The inducing character zeta^a13, defined on N.
    pub fn character(&self) -> Result<CycloNum> {
        debug_assert!(self.in_kernel_subgroup());
        zeta_pow(self.n, self.a13 as i64)
    }

    /// All n^3 elements, in lexicographic coordinate order.
    pub fn enumerate(n: u32) -> Vec<GroupElement> {
        let mut out = Vec::with_capacity((n * n * n) as usize);
        for a12 in 0..n {
            for a13 in 0..n {
                for a23 in 0..n {
                    out.push(GroupElement { n, a12, a13, a23 });
                }
            }
        }
        out
    }
}

/// A monomial matrix: u_i |-> scalars[i] * u_perm[i]. Exactly one nonzero
/// entry per row and column; all scalars are roots of unity here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialMatrix {
    pub dim: usize,
    pub perm: Vec<usize>,
    pub scalars: Vec<CycloNum>,
}

impl MonomialMatrix {
    /// Operator composition: (self . other)(u) = self(other(u)).
    pub fn mul(&self, other: &MonomialMatrix) -> MonomialMatrix {
        assert_eq!(self.dim, other.dim);
        let mut perm = vec![0; self.dim];
        let mut scalars = Vec::with_capacity(self.dim);
        for i in 0..self.dim {
            let j = other.perm[i];
            perm[i] = self.perm[j];
            scalars.push(other.scalars[i].mul_ref(&self.scalars[j]));
        }
        MonomialMatrix { dim: self.dim, perm, scalars }
    }
}

/// The induced representation as a function from group elements to
/// monomial matrices.
pub fn induced_rep(n: u32, g: &GroupElement) -> Result<MonomialMatrix> {
    assert_eq!(g.n, n);
    let mut perm = Vec::with_capacity(n as usize);
    let mut scalars = Vec::with_capacity(n as usize);
    for i in 0..n as i64 {
        perm.push(((i + g.a12 as i64) % n as i64) as usize);
        let e = g.a13 as i64 - (i + g.a12 as i64) * g.a23 as i64;
        scalars.push(zeta_pow(n, e)?);
    }
    Ok(MonomialMatrix { dim: n as usize, perm, scalars })
}

/// The coordinate ring acted on by sigma: k[x_1..x_n, alpha, beta] with
/// alpha and beta invertible.
pub fn sigma_ring(n: u32) -> Result<Arc<RingSpec>> {
    let mut names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    names.push("alpha".into());
    names.push("beta".into());
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    RingSpec::new(n, &refs, &["alpha", "beta"])
}

/// The substitution action of g on the coordinate ring: coordinates
/// transform by the same permutation and scalars as the basis vectors,
/// alpha picks up zeta^a12(g) and beta picks up zeta^a23(g).
pub fn sigma_action(ring: &Arc<RingSpec>, g: &GroupElement) -> Result<RingMap> {
    let n = g.n as usize;
    assert_eq!(ring.num_vars(), n + 2, "expected a sigma ring for n = {}", g.n);
    let rep = induced_rep(g.n, g)?;
    let mut images = Vec::with_capacity(n + 2);
    for i in 0..n {
        let target = LaurentPoly::var(ring, rep.perm[i]);
        images.push(target.scale(&rep.scalars[i]));
    }
    let alpha = LaurentPoly::var(ring, n).scale(&zeta_pow(g.n, g.a12 as i64)?);
    let beta = LaurentPoly::var(ring, n + 1).scale(&zeta_pow(g.n, g.a23 as i64)?);
    images.push(alpha);
    images.push(beta);
    RingMap::new(ring, ring, images)
}

/// Fixed-ring membership: f is H-invariant iff the three generators fix it
/// (E12 and E23 already generate H; E13 is checked as well for symmetry).
pub fn is_fixed(f: &LaurentPoly) -> Result<bool> {
    let n = f.ring().coeff_order();
    for g in [GroupElement::e12(n), GroupElement::e23(n), GroupElement::e13(n)] {
        let action = sigma_action(f.ring(), &g)?;
        if action.apply(f) != *f {
            return Ok(false);
        }
    }
    Ok(true)
}
