//! Coefficient fields for evaluation: exact Q(zeta_n) and prime fields F_q
//! that contain an n-th root of unity.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::cyclotomic::CycloNum;
use crate::error::{Error, Result};

pub fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= q {
        if q % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// The prime field F_q together with a chosen primitive n-th root of unity,
/// fixing the embedding Q(zeta_n) -> F_q by zeta |-> root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeField {
    q: u64,
    order: u32,
    root: u64,
}

impl PrimeField {
    /// Build F_q with an explicitly chosen root of unity.
    pub fn with_root(q: u64, order: u32, root: u64) -> Result<Self> {
        if order < 2 {
            return Err(Error::InvalidOrder(order));
        }
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        if (q - 1) % order as u64 != 0 {
            return Err(Error::Field(format!(
                "q = {q} is not 1 mod {order}, so F_{q} has no primitive {order}-th root of unity"
            )));
        }
        let root = root % q;
        if pow_mod(root, order as u64, q) != 1 {
            return Err(Error::Field(format!("{root}^{order} != 1 mod {q}")));
        }
        for d in 1..order {
            if order % d == 0 && pow_mod(root, d as u64, q) == 1 {
                return Err(Error::Field(format!(
                    "{root} has order dividing {d}, not a primitive {order}-th root mod {q}"
                )));
            }
        }
        Ok(PrimeField { q, order, root })
    }

    /// Build F_q with the smallest primitive n-th root of unity, for
    /// deterministic output.
    pub fn new(q: u64, order: u32) -> Result<Self> {
        if order < 2 {
            return Err(Error::InvalidOrder(order));
        }
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        if (q - 1) % order as u64 != 0 {
            return Err(Error::Field(format!(
                "q = {q} is not 1 mod {order}, so F_{q} has no primitive {order}-th root of unity"
            )));
        }
        for r in 2..q {
            if pow_mod(r, order as u64, q) == 1
                && (1..order).all(|d| order % d != 0 || pow_mod(r, d as u64, q) != 1)
            {
                return Self::with_root(q, order, r);
            }
        }
        Err(Error::Field(format!(
            "no primitive {order}-th root of unity found in F_{q}"
        )))
    }

    pub fn modulus(&self) -> u64 {
        self.q
    }

    pub fn root_order(&self) -> u32 {
        self.order
    }

    pub fn root(&self) -> u64 {
        self.root
    }

    pub fn check_admits_order(&self, order: u32) -> Result<()> {
        if order != self.order {
            return Err(Error::Field(format!(
                "field fixes a root of order {}, element has order {order}",
                self.order
            )));
        }
        Ok(())
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.q
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.q - b % self.q) % self.q
    }

    pub fn neg(&self, a: u64) -> u64 {
        (self.q - a % self.q) % self.q
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.q as u128) as u64
    }

    pub fn inv(&self, a: u64) -> Result<u64> {
        let a = a % self.q;
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(pow_mod(a, self.q - 2, self.q))
    }

    pub fn pow(&self, a: u64, e: i64) -> Result<u64> {
        if e >= 0 {
            Ok(pow_mod(a % self.q, e as u64, self.q))
        } else {
            let inv = self.inv(a)?;
            Ok(pow_mod(inv, e.unsigned_abs(), self.q))
        }
    }

    /// Image of a rational number, failing if the denominator is 0 mod q.
    pub fn from_rational(&self, r: &BigRational) -> Result<u64> {
        let q = BigInt::from(self.q);
        let num = r.numer().mod_floor(&q).to_u64().unwrap();
        let den = r.denom().mod_floor(&q).to_u64().unwrap();
        if den == 0 {
            return Err(Error::Field(format!(
                "denominator of {r} vanishes mod {}",
                self.q
            )));
        }
        Ok(self.mul(num, self.inv(den)?))
    }

    /// All n-th roots of x in F_q, ascending. Empty when x is not an n-th power.
    pub fn nth_roots(&self, x: u64) -> Vec<u64> {
        (0..self.q)
            .filter(|&r| pow_mod(r, self.order as u64, self.q) == x % self.q)
            .collect()
    }
}

pub fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    base %= modulus;
    let mut acc: u64 = 1 % modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % modulus as u128) as u64;
        }
        base = ((base as u128 * base as u128) % modulus as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// A field in which polynomials over Q(zeta_n) can be evaluated. The two
/// implementations are Q(zeta_n) itself and a prime field with a chosen
/// root of unity.
pub trait EvalField: Clone {
    type Elem: Clone + PartialEq + std::fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// Image of a coefficient from Q(zeta_n).
    fn embed(&self, c: &CycloNum) -> Result<Self::Elem>;

    fn pow(&self, a: &Self::Elem, e: i64) -> Result<Self::Elem> {
        let base = if e < 0 { self.inv(a)? } else { a.clone() };
        let mut acc = self.one();
        let mut k = e.unsigned_abs();
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &sq);
            }
            sq = self.mul(&sq, &sq);
            k >>= 1;
        }
        Ok(acc)
    }
}

/// Q(zeta_n) as an evaluation field (the identity embedding).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicField {
    pub order: u32,
}

impl EvalField for CyclotomicField {
    type Elem = CycloNum;

    fn zero(&self) -> CycloNum {
        CycloNum::zero(self.order)
    }
    fn one(&self) -> CycloNum {
        CycloNum::one(self.order)
    }
    fn add(&self, a: &CycloNum, b: &CycloNum) -> CycloNum {
        a.add_ref(b)
    }
    fn mul(&self, a: &CycloNum, b: &CycloNum) -> CycloNum {
        a.mul_ref(b)
    }
    fn neg(&self, a: &CycloNum) -> CycloNum {
        a.neg_ref()
    }
    fn inv(&self, a: &CycloNum) -> Result<CycloNum> {
        a.inv()
    }
    fn is_zero(&self, a: &CycloNum) -> bool {
        a.is_zero()
    }
    fn embed(&self, c: &CycloNum) -> Result<CycloNum> {
        if c.order() != self.order {
            return Err(Error::Field(format!(
                "coefficient order {} does not match field order {}",
                c.order(),
                self.order
            )));
        }
        Ok(c.clone())
    }
}

impl EvalField for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        PrimeField::add(self, *a, *b)
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        PrimeField::mul(self, *a, *b)
    }
    fn neg(&self, a: &u64) -> u64 {
        PrimeField::neg(self, *a)
    }
    fn inv(&self, a: &u64) -> Result<u64> {
        PrimeField::inv(self, *a)
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a % self.q == 0
    }
    fn embed(&self, c: &CycloNum) -> Result<u64> {
        c.to_prime_field(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::{zeta, zeta_pow, CycloNum};
    use num_bigint::BigInt;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn smallest_primitive_cube_root_mod_7_is_2() {
        // independent oracle: exhaust all residues mod 7
        let by_search: Vec<u64> = (2..7)
            .filter(|&r| pow_mod(r, 3, 7) == 1 && r != 1)
            .collect();
        assert_eq!(by_search, vec![2, 4]);
        let fp = PrimeField::new(7, 3).unwrap();
        assert_eq!(fp.root(), 2);
    }

    #[test]
    fn zeta_maps_to_root() {
        let fp = PrimeField::new(7, 3).unwrap();
        assert_eq!(zeta(3).unwrap().to_prime_field(&fp).unwrap(), 2);
    }

    #[test]
    fn one_third_maps_to_five_mod_7() {
        // 3 * 5 = 15 = 1 mod 7
        let fp = PrimeField::new(7, 3).unwrap();
        let third = CycloNum::from_rational(
            3,
            BigRational::new(BigInt::from(1), BigInt::from(3)),
        );
        assert_eq!(third.to_prime_field(&fp).unwrap(), 5);
    }

    #[test]
    fn zero_maps_to_zero() {
        let fp = PrimeField::new(7, 3).unwrap();
        assert_eq!(CycloNum::zero(3).to_prime_field(&fp).unwrap(), 0);
    }

    #[test]
    fn rejects_wrong_residue_modulus() {
        assert!(PrimeField::new(5, 3).is_err()); // 5 != 1 mod 3
        assert!(PrimeField::new(11, 3).is_err());
        assert!(PrimeField::new(13, 3).is_ok());
    }

    #[test]
    fn rejects_non_prime_modulus() {
        assert!(matches!(PrimeField::new(9, 2), Err(Error::NotPrime(9))));
    }

    #[test]
    fn rejects_bad_roots() {
        // 3^3 = 27 = 6 mod 7, not 1
        assert!(PrimeField::with_root(7, 3, 3).is_err());
        // 1 is an n-th root but not primitive
        assert!(PrimeField::with_root(7, 3, 1).is_err());
        // order 6 requires primitivity: 6^2 = 1 mod 7, so 6 has order 2
        assert!(PrimeField::with_root(7, 6, 6).is_err());
        assert!(PrimeField::with_root(7, 6, 3).is_ok()); // 3 generates F_7^*
    }

    #[test]
    fn prime_field_image_is_a_ring_homomorphism() {
        let mut rng = StdRng::seed_from_u64(11);
        for (q, n) in [(7u64, 3u32), (13, 3), (11, 5), (29, 7)] {
            let fp = PrimeField::new(q, n).unwrap();
            for _ in 0..200 {
                let x = random_cyclo(&mut rng, n);
                let y = random_cyclo(&mut rng, n);
                let img = |v: &CycloNum| v.to_prime_field(&fp).unwrap();
                assert_eq!(img(&x.mul_ref(&y)), fp.mul(img(&x), img(&y)));
                assert_eq!(img(&x.add_ref(&y)), fp.add(img(&x), img(&y)));
            }
        }
    }

    fn random_cyclo(rng: &mut StdRng, n: u32) -> CycloNum {
        let mut acc = CycloNum::zero(n);
        for k in 0..n {
            let c = CycloNum::from_integer(n, rng.gen_range(-5..=5));
            acc = acc.add_ref(&c.mul_ref(&zeta_pow(n, k as i64).unwrap()));
        }
        acc
    }

    #[test]
    fn nth_roots_enumeration() {
        let fp = PrimeField::new(7, 3).unwrap();
        assert_eq!(fp.nth_roots(1), vec![1, 2, 4]);
        assert_eq!(fp.nth_roots(6), vec![3, 5, 6]);
        assert_eq!(fp.nth_roots(2), Vec::<u64>::new());
    }
}
