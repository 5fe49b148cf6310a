//! Exact coefficient fields.
//!
//! Two fields are supported: prime fields `GF(p)` with `p < 2^31` (elements
//! stored as `u32`, products computed in `u64`) and the rationals, backed by
//! arbitrary precision fractions. Nothing in the crate touches floating point.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// Default characteristic, the one used for all the published computations.
pub const DEFAULT_PRIME: u64 = 31991;

/// Random rationals are integers drawn uniformly from `[-R, R]`.
pub const RATIONAL_SAMPLE_RADIUS: i64 = 64;

/// An exact field with a runtime context (the modulus for prime fields).
///
/// Element operations go through the field value so that the modulus does
/// not have to be stored in every coefficient.
pub trait Field: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Hash + Send + Sync;

    fn characteristic(&self) -> u64;
    /// Display name in the ideal-file syntax (`GF(p)` or `QQ`).
    fn name(&self) -> String;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|ib| self.mul(a, &ib))
    }

    /// `a -= b * c`
    fn sub_mul_assign(&self, a: &mut Self::Elem, b: &Self::Elem, c: &Self::Elem) {
        *a = self.sub(a, &self.mul(b, c));
    }

    fn from_i64(&self, v: i64) -> Self::Elem;
    fn from_bigint(&self, v: &BigInt) -> Self::Elem;
    /// `num / den`; fails when the denominator vanishes in the field.
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Self::Elem> {
        let d = self.from_bigint(den);
        self.div(&self.from_bigint(num), &d)
            .ok_or_else(|| Error::Parse {
                line: 0,
                col: 0,
                msg: format!("denominator {den} vanishes in {}", self.name()),
            })
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;
    fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem {
        loop {
            let e = self.random(rng);
            if !self.is_zero(&e) {
                return e;
            }
        }
    }

    /// Text form that the polynomial parser reads back to the same element.
    fn format(&self, a: &Self::Elem) -> String;
    /// True if `format` would start with a minus sign.
    fn is_negative(&self, a: &Self::Elem) -> bool;

    /// Modulus of a prime field, `None` for the rationals.
    fn modulus(&self) -> Option<u64>;
    fn to_u64(&self, a: &Self::Elem) -> Option<u64>;
    fn from_u64(&self, v: u64) -> Self::Elem;

    /// Number of elements, `None` when infinite.
    fn size(&self) -> Option<u64> {
        self.modulus()
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// `GF(p)` for a prime `p < 2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 31 {
            return Err(Error::InvalidField(format!("characteristic {p} exceeds 2^31")));
        }
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(PrimeField { p })
    }

    pub fn default_field() -> Self {
        PrimeField { p: DEFAULT_PRIME }
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut base: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            e >>= 1;
        }
        acc
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn characteristic(&self) -> u64 {
        self.p
    }
    fn name(&self) -> String {
        format!("GF({})", self.p)
    }
    #[inline]
    fn zero(&self) -> u32 {
        0
    }
    #[inline]
    fn one(&self) -> u32 {
        1
    }
    #[inline]
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    #[inline]
    fn is_one(&self, a: &u32) -> bool {
        *a == 1
    }
    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = *a as u64 + *b as u64;
        (if s >= self.p { s - self.p } else { s }) as u32
    }
    #[inline]
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        let (a, b) = (*a as u64, *b as u64);
        (if a >= b { a - b } else { a + self.p - b }) as u32
    }
    #[inline]
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            (self.p - *a as u64) as u32
        }
    }
    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p) as u32
    }
    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            None
        } else {
            Some(self.pow(*a as u64, self.p - 2) as u32)
        }
    }
    #[inline]
    fn sub_mul_assign(&self, a: &mut u32, b: &u32, c: &u32) {
        let prod = (*b as u64 * *c as u64) % self.p;
        let a64 = *a as u64;
        *a = (if a64 >= prod { a64 - prod } else { a64 + self.p - prod }) as u32;
    }
    fn from_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }
    fn from_bigint(&self, v: &BigInt) -> u32 {
        let m = v.mod_floor(&BigInt::from(self.p));
        m.to_u64().expect("reduced residue fits") as u32
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u32 {
        rng.gen_range(0..self.p) as u32
    }
    fn format(&self, a: &u32) -> String {
        let a = *a as i64;
        let p = self.p as i64;
        if a > p / 2 {
            format!("{}", a - p)
        } else {
            format!("{a}")
        }
    }
    fn is_negative(&self, a: &u32) -> bool {
        *a as u64 > self.p / 2
    }
    fn modulus(&self) -> Option<u64> {
        Some(self.p)
    }
    fn to_u64(&self, a: &u32) -> Option<u64> {
        Some(*a as u64)
    }
    fn from_u64(&self, v: u64) -> u32 {
        (v % self.p) as u32
    }
}

/// The rational numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn characteristic(&self) -> u64 {
        0
    }
    fn name(&self) -> String {
        "QQ".to_string()
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn sub_mul_assign(&self, a: &mut BigRational, b: &BigRational, c: &BigRational) {
        *a -= b * c;
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn from_bigint(&self, v: &BigInt) -> BigRational {
        BigRational::from_integer(v.clone())
    }
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<BigRational> {
        if den.is_zero() {
            return Err(Error::Parse {
                line: 0,
                col: 0,
                msg: "division by zero".into(),
            });
        }
        Ok(BigRational::new(num.clone(), den.clone()))
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        let r = RATIONAL_SAMPLE_RADIUS;
        self.from_i64(rng.gen_range(-r..=r))
    }
    fn format(&self, a: &BigRational) -> String {
        if a.is_integer() {
            format!("{}", a.numer())
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn is_negative(&self, a: &BigRational) -> bool {
        a.is_negative()
    }
    fn modulus(&self) -> Option<u64> {
        None
    }
    fn to_u64(&self, _a: &BigRational) -> Option<u64> {
        None
    }
    fn from_u64(&self, v: u64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
}
