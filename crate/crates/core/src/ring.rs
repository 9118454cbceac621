//! Coefficient rings: Z, Q and prime fields F_p.
//!
//! Rings are passed around as small structure values so the modulus of F_p
//! can be chosen at runtime. Matrix entries are plain data (`BigInt`,
//! `BigRational`, reduced `u64`) and every arithmetic operation goes through
//! the ring, never through operator overloading on the entries.

use num::bigint::Sign;
use num::{BigInt, BigRational, One, ToPrimitive, Zero};
use std::fmt;

use crate::homology::HomologyGroup;
use crate::matrix::Matrix;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("modulus {0} is not prime")]
    ModulusNotPrime(u64),
    #[error("unknown ring `{0}` (expected Z, Q or Fp:<prime>)")]
    UnknownRing(String),
}

/// A commutative ring with exact arithmetic on its element type.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse, `None` when `a` is not a unit.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn from_int(&self, n: &BigInt) -> Self::Elem;
    fn is_field(&self) -> bool;
    fn name(&self) -> String;

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_int(&BigInt::from(n))
    }

    fn elem_string(&self, a: &Self::Elem) -> String;

    /// Homology at the middle of `target <- d_out - middle <- d_in - source`.
    ///
    /// Over a field this is nullity minus rank; over Z the kernel lattice is
    /// computed via Smith normal form and the image expressed inside it, so
    /// torsion comes out as well.
    fn homology_of_pair(
        &self,
        d_out: &Matrix<Self>,
        d_in: &Matrix<Self>,
    ) -> Result<HomologyGroup, crate::matrix::AlgebraError>
    where
        Self: Sized;
}

/// The ring of integers; elements are arbitrary-precision `BigInt`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Integers;

/// The field of rationals; elements are `BigRational`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rationals;

/// The field F_p for a u64 prime `p`; elements are kept reduced in `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, RingError> {
        if is_prime_u64(p) {
            Ok(PrimeField { p })
        } else {
            Err(RingError::ModulusNotPrime(p))
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

impl Ring for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn inv(&self, a: &BigInt) -> Option<BigInt> {
        if a.is_one() || (-a).is_one() {
            Some(a.clone())
        } else {
            None
        }
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn from_int(&self, n: &BigInt) -> BigInt {
        n.clone()
    }
    fn is_field(&self) -> bool {
        false
    }
    fn name(&self) -> String {
        "Z".into()
    }
    fn elem_string(&self, a: &BigInt) -> String {
        a.to_string()
    }

    fn homology_of_pair(
        &self,
        d_out: &Matrix<Self>,
        d_in: &Matrix<Self>,
    ) -> Result<HomologyGroup, crate::matrix::AlgebraError> {
        crate::snf::homology_of_pair_z(d_out, d_in)
    }
}

impl Ring for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn from_int(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
    fn is_field(&self) -> bool {
        true
    }
    fn name(&self) -> String {
        "Q".into()
    }
    fn elem_string(&self, a: &BigRational) -> String {
        a.to_string()
    }

    fn homology_of_pair(
        &self,
        d_out: &Matrix<Self>,
        d_in: &Matrix<Self>,
    ) -> Result<HomologyGroup, crate::matrix::AlgebraError> {
        crate::gauss::homology_of_pair_field(d_out, d_in)
    }
}

impl Ring for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.p as u128) as u64
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + (self.p - b) as u128) % self.p as u128) as u64
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        // extended Euclid in i128; p is prime so every nonzero a is a unit
        let (mut r0, mut r1) = (self.p as i128, *a as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Some(t0.rem_euclid(self.p as i128) as u64)
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn from_int(&self, n: &BigInt) -> u64 {
        let p = BigInt::from(self.p);
        let mut r = n % &p;
        if r.sign() == Sign::Minus {
            r += &p;
        }
        r.to_u64().expect("residue fits u64")
    }
    fn is_field(&self) -> bool {
        true
    }
    fn name(&self) -> String {
        format!("Fp:{}", self.p)
    }
    fn elem_string(&self, a: &u64) -> String {
        a.to_string()
    }

    fn homology_of_pair(
        &self,
        d_out: &Matrix<Self>,
        d_in: &Matrix<Self>,
    ) -> Result<HomologyGroup, crate::matrix::AlgebraError> {
        crate::gauss::homology_of_pair_field(d_out, d_in)
    }
}

/// Runtime ring selector, as it appears in CLI flags and file headers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingSpec {
    Integers,
    Rationals,
    PrimeField(u64),
}

impl RingSpec {
    /// Parse `Z`, `Q` or `Fp:<prime>`.
    pub fn parse(s: &str) -> Result<Self, RingError> {
        match s {
            "Z" => Ok(RingSpec::Integers),
            "Q" => Ok(RingSpec::Rationals),
            _ => {
                if let Some(rest) = s.strip_prefix("Fp:") {
                    let p: u64 = rest
                        .parse()
                        .map_err(|_| RingError::UnknownRing(s.to_string()))?;
                    PrimeField::new(p)?;
                    Ok(RingSpec::PrimeField(p))
                } else {
                    Err(RingError::UnknownRing(s.to_string()))
                }
            }
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Integers => write!(f, "Z"),
            RingSpec::Rationals => write!(f, "Q"),
            RingSpec::PrimeField(p) => write!(f, "Fp:{p}"),
        }
    }
}

/// Deterministic Miller-Rabin, valid for all u64.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let pow = |b: u64, mut e: u64| -> u64 {
        let m = n as u128;
        let mut acc: u128 = 1;
        let mut bb = b as u128 % m;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * bb % m;
            }
            bb = bb * bb % m;
            e >>= 1;
        }
        acc as u64
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_rejects_composites() {
        assert!(PrimeField::new(6).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(0).is_err());
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(3).is_ok());
        assert!(PrimeField::new(1_000_000_007).is_ok());
    }

    #[test]
    fn fp_arithmetic() {
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(f5.add(&3, &4), 2);
        assert_eq!(f5.mul(&3, &4), 2);
        assert_eq!(f5.neg(&2), 3);
        assert_eq!(f5.inv(&3), Some(2)); // 3*2 = 6 = 1 mod 5
        assert_eq!(f5.inv(&0), None);
        assert_eq!(f5.from_i64(-7), 3);
    }

    #[test]
    fn integer_units() {
        let z = Integers;
        assert_eq!(z.inv(&BigInt::from(1)), Some(BigInt::from(1)));
        assert_eq!(z.inv(&BigInt::from(-1)), Some(BigInt::from(-1)));
        assert_eq!(z.inv(&BigInt::from(2)), None);
    }

    #[test]
    fn ringspec_roundtrip() {
        for s in ["Z", "Q", "Fp:7"] {
            assert_eq!(RingSpec::parse(s).unwrap().to_string(), s);
        }
        assert!(RingSpec::parse("Fp:9").is_err());
        assert!(RingSpec::parse("GF(2)").is_err());
    }
}
