//! Exact arithmetic in the cyclotomic field Q(zeta_n).
//!
//! Elements are stored in the power basis 1, zeta, ..., zeta^(phi(n)-1),
//! always reduced modulo the n-th cyclotomic polynomial, so equality is a
//! coefficient-vector comparison. Coefficients are arbitrary-precision
//! rationals; there is no floating point anywhere in this module.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::PrimeField;

/// Euler totient.
pub fn euler_phi(n: u32) -> u32 {
    let mut m = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

fn divisors(n: u32) -> Vec<u32> {
    let mut ds: Vec<u32> = (1..=n).filter(|d| n % d == 0).collect();
    ds.sort_unstable();
    ds
}

/// Exact division of integer polynomials, used by the cyclotomic recurrence.
/// `num` must be divisible by `den`; `den` must be monic up to sign.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    assert!(!den[dd].is_zero());
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for i in (dd..rem.len()).rev() {
        let c = &rem[i] / &den[dd];
        quot[i - dd] = c.clone();
        if !c.is_zero() {
            for (j, dc) in den.iter().enumerate() {
                let v = &rem[i - dd + j] - &c * dc;
                rem[i - dd + j] = v;
            }
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "non-exact polynomial division");
    quot
}

/// Coefficients of the n-th cyclotomic polynomial, ascending degree, monic.
///
/// Computed by Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d and cached.
pub fn cyclotomic_polynomial(n: u32) -> Arc<Vec<BigInt>> {
    static CACHE: OnceLock<Mutex<BTreeMap<u32, Arc<Vec<BigInt>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&n) {
        return hit.clone();
    }
    let result = if n == 1 {
        vec![-BigInt::one(), BigInt::one()]
    } else {
        // x^n - 1
        let mut num = vec![BigInt::zero(); n as usize + 1];
        num[0] = -BigInt::one();
        num[n as usize] = BigInt::one();
        let mut num = num;
        for d in divisors(n) {
            if d < n {
                let phi_d = cyclotomic_polynomial(d);
                num = poly_div_exact(&num, &phi_d);
            }
        }
        num
    };
    let arc = Arc::new(result);
    cache.lock().unwrap().insert(n, arc.clone());
    arc
}

/// An element of Q(zeta_n), reduced modulo the n-th cyclotomic polynomial.
///
/// `coeffs` always has exactly `euler_phi(order)` entries; rationals are
/// kept in lowest terms with positive denominator by `BigRational` itself.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloNum {
    order: u32,
    coeffs: Vec<BigRational>,
}

impl CycloNum {
    pub fn zero(order: u32) -> Self {
        CycloNum {
            order,
            coeffs: vec![BigRational::zero(); euler_phi(order) as usize],
        }
    }

    pub fn one(order: u32) -> Self {
        Self::from_rational(order, BigRational::one())
    }

    pub fn from_rational(order: u32, r: BigRational) -> Self {
        let mut x = Self::zero(order);
        x.coeffs[0] = r;
        x
    }

    pub fn from_integer(order: u32, k: i64) -> Self {
        Self::from_rational(order, BigRational::from_integer(BigInt::from(k)))
    }

    /// Reduce an arbitrary coefficient vector (ascending powers of zeta)
    /// modulo Phi_n into the canonical power basis.
    pub fn from_poly_coeffs(order: u32, mut coeffs: Vec<BigRational>) -> Self {
        let phi = cyclotomic_polynomial(order);
        let deg = phi.len() - 1;
        if coeffs.len() < deg {
            coeffs.resize(deg, BigRational::zero());
        }
        for i in (deg..coeffs.len()).rev() {
            let c = std::mem::replace(&mut coeffs[i], BigRational::zero());
            if c.is_zero() {
                continue;
            }
            // zeta^i = -c * (lower-degree part of Phi) * zeta^(i-deg)
            for (j, pc) in phi.iter().take(deg).enumerate() {
                let delta = &c * BigRational::from_integer(pc.clone());
                let v = &coeffs[i - deg + j] - delta;
                coeffs[i - deg + j] = v;
            }
        }
        coeffs.truncate(deg);
        CycloNum { order, coeffs }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self == &Self::one(self.order)
    }

    /// Some(r) iff the element lies in Q.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn assert_same_order(&self, other: &Self) {
        assert_eq!(
            self.order, other.order,
            "cyclotomic order mismatch: {} vs {}",
            self.order, other.order
        );
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        self.assert_same_order(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        CycloNum { order: self.order, coeffs }
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        self.assert_same_order(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        CycloNum { order: self.order, coeffs }
    }

    pub fn neg_ref(&self) -> Self {
        CycloNum {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        self.assert_same_order(other);
        let mut prod = vec![BigRational::zero(); 2 * self.coeffs.len()];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let v = &prod[i + j] + a * b;
                prod[i + j] = v;
            }
        }
        Self::from_poly_coeffs(self.order, prod)
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        CycloNum {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiplicative inverse, computed by the extended Euclidean algorithm
    /// against Phi_n over Q.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let phi: Vec<BigRational> = cyclotomic_polynomial(self.order)
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        // invariant: r0 = s0 * self (mod Phi), r1 = s1 * self (mod Phi)
        let mut r0 = phi;
        let mut r1 = trim(self.coeffs.clone());
        let mut s0 = vec![BigRational::zero()];
        let mut s1 = vec![BigRational::one()];
        while !is_zero_poly(&r1) {
            let (q, r) = poly_div_rem(&r0, &r1);
            let s = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        // r0 = gcd(self, Phi) is a nonzero constant (Phi_n is irreducible).
        let c = r0[r0.len() - 1].clone();
        assert_eq!(r0.len(), 1, "cyclotomic polynomial must be irreducible over Q");
        let inv_c = BigRational::one() / c;
        let coeffs = s0.iter().map(|x| x * &inv_c).collect();
        Ok(Self::from_poly_coeffs(self.order, coeffs))
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one(self.order);
        let mut k = e.unsigned_abs();
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul_ref(&sq);
            }
            sq = sq.mul_ref(&sq);
            k >>= 1;
        }
        Ok(acc)
    }

    /// Ring-homomorphic image in F_q under zeta |-> root.
    ///
    /// `root` must be a primitive n-th root of unity in F_q, which forces
    /// q = 1 (mod n); every coefficient denominator must be invertible mod q.
    pub fn to_prime_field(&self, fp: &PrimeField) -> Result<u64> {
        fp.check_admits_order(self.order)?;
        let mut acc = 0u64;
        let mut zpow = 1u64;
        for c in &self.coeffs {
            let img = fp.from_rational(c)?;
            acc = fp.add(acc, fp.mul(img, zpow));
            zpow = fp.mul(zpow, fp.root());
        }
        Ok(acc)
    }

    /// Serialized text form: one "p/q" string per power of zeta.
    pub fn to_coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    pub fn from_coeff_strings(order: u32, strings: &[String]) -> Result<Self> {
        if order < 2 {
            return Err(Error::InvalidOrder(order));
        }
        let mut coeffs = Vec::with_capacity(strings.len());
        for s in strings {
            let r: BigRational = s
                .parse()
                .map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}")))?;
            coeffs.push(r);
        }
        Ok(Self::from_poly_coeffs(order, coeffs))
    }

    /// Numerical value as a complex pair (re, im), test-support only;
    /// the library itself never consumes this.
    pub fn to_complex_f64(&self) -> (f64, f64) {
        use std::f64::consts::TAU;
        let angle = TAU / self.order as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.coeffs.iter().enumerate() {
            let v = rational_to_f64(c);
            re += v * (angle * k as f64).cos();
            im += v * (angle * k as f64).sin();
        }
        (re, im)
    }
}

fn rational_to_f64(r: &BigRational) -> f64 {
    let n: f64 = r.numer().to_string().parse().unwrap();
    let d: f64 = r.denom().to_string().parse().unwrap();
    n / d
}

/// The canonical representative of zeta_n^k (k may be negative).
pub fn zeta_pow(order: u32, k: i64) -> Result<CycloNum> {
    if order < 2 {
        return Err(Error::InvalidOrder(order));
    }
    let k = k.rem_euclid(order as i64) as usize;
    let mut coeffs = vec![BigRational::zero(); order as usize];
    coeffs[k] = BigRational::one();
    Ok(CycloNum::from_poly_coeffs(order, coeffs))
}

/// zeta_n itself.
pub fn zeta(order: u32) -> Result<CycloNum> {
    zeta_pow(order, 1)
}

// --- dense Q[x] helpers for the extended Euclidean algorithm ---

fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.len() > 1 && v.last().unwrap().is_zero() {
        v.pop();
    }
    v
}

fn is_zero_poly(v: &[BigRational]) -> bool {
    v.iter().all(|c| c.is_zero())
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    trim(out)
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if is_zero_poly(a) || is_zero_poly(b) {
        return vec![BigRational::zero()];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            let v = &out[i + j] + x * y;
            out[i + j] = v;
        }
    }
    trim(out)
}

fn poly_div_rem(num: &[BigRational], den: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let den = trim(den.to_vec());
    let dd = den.len() - 1;
    let lead = den[dd].clone();
    let mut rem = trim(num.to_vec());
    if rem.len() <= dd && !(rem.len() == den.len() && dd == 0) {
        if dd == 0 {
            // dividing by a constant
            let q: Vec<BigRational> = rem.iter().map(|c| c / &lead).collect();
            return (trim(q), vec![BigRational::zero()]);
        }
        return (vec![BigRational::zero()], rem);
    }
    if dd == 0 {
        let q: Vec<BigRational> = rem.iter().map(|c| c / &lead).collect();
        return (trim(q), vec![BigRational::zero()]);
    }
    let mut quot = vec![BigRational::zero(); rem.len().saturating_sub(dd)];
    for i in (dd..rem.len()).rev() {
        let c = &rem[i] / &lead;
        if !c.is_zero() {
            quot[i - dd] = c.clone();
            for (j, dc) in den.iter().enumerate() {
                let v = &rem[i - dd + j] - &c * dc;
                rem[i - dd + j] = v;
            }
        }
    }
    (trim(quot), trim(rem))
}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloNum(n={}, {})", self.order, self)
    }
}

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() {
                ("-", -c.clone())
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            let unit_mag = mag.is_one();
            if k == 0 {
                write!(f, "{mag}")?;
            } else {
                if !unit_mag {
                    write!(f, "{mag}*")?;
                }
                if k == 1 {
                    write!(f, "zeta")?;
                } else {
                    write!(f, "zeta^{k}")?;
                }
            }
        }
        Ok(())
    }
}

impl Add for &CycloNum {
    type Output = CycloNum;
    fn add(self, rhs: &CycloNum) -> CycloNum {
        self.add_ref(rhs)
    }
}

impl Sub for &CycloNum {
    type Output = CycloNum;
    fn sub(self, rhs: &CycloNum) -> CycloNum {
        self.sub_ref(rhs)
    }
}

impl Mul for &CycloNum {
    type Output = CycloNum;
    fn mul(self, rhs: &CycloNum) -> CycloNum {
        self.mul_ref(rhs)
    }
}

impl Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        self.neg_ref()
    }
}

#[derive(Serialize, Deserialize)]
struct CycloNumRepr {
    order: u32,
    coeffs: Vec<String>,
}

impl Serialize for CycloNum {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        CycloNumRepr {
            order: self.order,
            coeffs: self.to_coeff_strings(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CycloNum {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = CycloNumRepr::deserialize(deserializer)?;
        CycloNum::from_coeff_strings(repr.order, &repr.coeffs).map_err(D::Error::custom)
    }
}
