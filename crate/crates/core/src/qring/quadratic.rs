//! Exact arithmetic in `Q(sqrt q)` for a prime `q`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A prime number, the order of the finite field the Hall engine works over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct Prime(u64);

impl Prime {
    pub fn new(q: u64) -> Result<Self> {
        if q < 2 || (2..q).take_while(|d| d * d <= q).any(|d| q.is_multiple_of(d)) {
            return Err(Error::NotPrime(q));
        }
        Ok(Self(q))
    }

    pub fn get(self) -> u64 {
        self.0
    }

    /// Smallest generator of the multiplicative group of `F_q`.
    pub fn primitive_root(self) -> u64 {
        let q = self.0;
        if q == 2 {
            return 1;
        }
        (2..q)
            .find(|&g| {
                let mut x = 1;
                for k in 1..q - 1 {
                    x = x * g % q;
                    if x == 1 && k < q - 1 {
                        return false;
                    }
                }
                true
            })
            .unwrap()
    }
}

impl TryFrom<u64> for Prime {
    type Error = Error;
    fn try_from(q: u64) -> Result<Self> {
        Prime::new(q)
    }
}

impl From<Prime> for u64 {
    fn from(p: Prime) -> u64 {
        p.0
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `rational + surd * sqrt(radicand)`.
///
/// Combining elements with different radicands is a programming error for the
/// operator impls (they panic); the `checked_*` methods report it instead.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadraticFieldElement {
    rational: BigRational,
    surd: BigRational,
    radicand: u64,
}

impl QuadraticFieldElement {
    pub fn new(rational: BigRational, surd: BigRational, radicand: Prime) -> Self {
        Self {
            rational,
            surd,
            radicand: radicand.get(),
        }
    }

    pub fn zero(radicand: Prime) -> Self {
        Self::new(BigRational::zero(), BigRational::zero(), radicand)
    }

    pub fn one(radicand: Prime) -> Self {
        Self::from_int(1, radicand)
    }

    pub fn from_int(c: i64, radicand: Prime) -> Self {
        Self::from_rational(BigRational::from_integer(c.into()), radicand)
    }

    pub fn from_bigint(c: BigInt, radicand: Prime) -> Self {
        Self::from_rational(BigRational::from_integer(c), radicand)
    }

    pub fn from_rational(r: BigRational, radicand: Prime) -> Self {
        Self::new(r, BigRational::zero(), radicand)
    }

    /// `sqrt(q)^e`, i.e. `v^e` at `v = +sqrt q`.
    pub fn sqrt_q_pow(e: i64, radicand: Prime) -> Self {
        let q = BigInt::from(radicand.get());
        let half = e.div_euclid(2);
        let p = if half >= 0 {
            BigRational::from_integer(num_traits::pow(q, half as usize))
        } else {
            BigRational::new(BigInt::one(), num_traits::pow(q, (-half) as usize))
        };
        if e.rem_euclid(2) == 0 {
            Self::new(p, BigRational::zero(), radicand)
        } else {
            Self::new(BigRational::zero(), p, radicand)
        }
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.rational
    }

    pub fn surd_part(&self) -> &BigRational {
        &self.surd
    }

    pub fn radicand(&self) -> u64 {
        self.radicand
    }

    pub fn prime(&self) -> Prime {
        Prime(self.radicand)
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.surd.is_zero()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.radicand != other.radicand {
            return Err(Error::MixedRadicand(self.radicand, other.radicand));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self {
            rational: &self.rational + &other.rational,
            surd: &self.surd + &other.surd,
            radicand: self.radicand,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let q = BigRational::from_integer(self.radicand.into());
        Ok(Self {
            rational: &self.rational * &other.rational + &self.surd * &other.surd * q,
            surd: &self.rational * &other.surd + &self.surd * &other.rational,
            radicand: self.radicand,
        })
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let q = BigRational::from_integer(self.radicand.into());
        let norm = &self.rational * &self.rational - &self.surd * &self.surd * q;
        Some(Self {
            rational: &self.rational / &norm,
            surd: -&self.surd / &norm,
            radicand: self.radicand,
        })
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self {
            rational: &self.rational * c,
            surd: &self.surd * c,
            radicand: self.radicand,
        }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&BigRational::from_integer(c.into()))
    }

    /// Sign under the real embedding `sqrt q > 0`.
    pub fn signum(&self) -> i32 {
        let sa = sign(&self.rational);
        let sb = sign(&self.surd);
        if sa == sb || sb == 0 {
            return sa;
        }
        if sa == 0 {
            return sb;
        }
        // opposite signs: compare a^2 with q b^2
        let q = BigRational::from_integer(self.radicand.into());
        match (&self.rational * &self.rational).cmp(&(&self.surd * &self.surd * q)) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.rational.to_f64().unwrap_or(f64::NAN)
            + self.surd.to_f64().unwrap_or(f64::NAN) * (self.radicand as f64).sqrt()
    }
}

fn sign(r: &BigRational) -> i32 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

impl<'a> Add<&'a QuadraticFieldElement> for &'a QuadraticFieldElement {
    type Output = QuadraticFieldElement;
    fn add(self, rhs: &QuadraticFieldElement) -> QuadraticFieldElement {
        self.checked_add(rhs).unwrap()
    }
}

impl<'a> Sub<&'a QuadraticFieldElement> for &'a QuadraticFieldElement {
    type Output = QuadraticFieldElement;
    fn sub(self, rhs: &QuadraticFieldElement) -> QuadraticFieldElement {
        self.checked_sub(rhs).unwrap()
    }
}

impl<'a> Mul<&'a QuadraticFieldElement> for &'a QuadraticFieldElement {
    type Output = QuadraticFieldElement;
    fn mul(self, rhs: &QuadraticFieldElement) -> QuadraticFieldElement {
        self.checked_mul(rhs).unwrap()
    }
}

impl Neg for &QuadraticFieldElement {
    type Output = QuadraticFieldElement;
    fn neg(self) -> QuadraticFieldElement {
        QuadraticFieldElement {
            rational: -&self.rational,
            surd: -&self.surd,
            radicand: self.radicand,
        }
    }
}

impl Neg for QuadraticFieldElement {
    type Output = QuadraticFieldElement;
    fn neg(self) -> QuadraticFieldElement {
        -&self
    }
}

impl Add for QuadraticFieldElement {
    type Output = QuadraticFieldElement;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl Mul for QuadraticFieldElement {
    type Output = QuadraticFieldElement;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl Sub for QuadraticFieldElement {
    type Output = QuadraticFieldElement;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl fmt::Display for QuadraticFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rational.is_zero(), self.surd.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.rational),
            (true, false) => write!(f, "{}*sqrt({})", self.surd, self.radicand),
            (false, false) => write!(f, "{} + {}*sqrt({})", self.rational, self.surd, self.radicand),
        }
    }
}

impl fmt::Debug for QuadraticFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn primes() {
        assert!(Prime::new(2).is_ok());
        assert!(Prime::new(7).is_ok());
        assert!(matches!(Prime::new(4), Err(Error::NotPrime(4))));
        assert!(Prime::new(1).is_err());
        assert_eq!(Prime::new(5).unwrap().primitive_root(), 2);
        assert_eq!(Prime::new(7).unwrap().primitive_root(), 3);
    }

    #[test]
    fn arithmetic() {
        let q = Prime::new(2).unwrap();
        let a = QuadraticFieldElement::new(r(1, 1), r(1, 1), q); // 1 + sqrt2
        let b = QuadraticFieldElement::new(r(-1, 1), r(1, 1), q); // -1 + sqrt2
        assert_eq!(&a * &b, QuadraticFieldElement::one(q));
        assert_eq!(a.inv().unwrap(), b);
        assert_eq!(QuadraticFieldElement::sqrt_q_pow(-3, q), QuadraticFieldElement::new(r(0, 1), r(1, 4), q));
    }

    #[test]
    fn mixed_radicands_are_rejected() {
        let a = QuadraticFieldElement::one(Prime::new(2).unwrap());
        let b = QuadraticFieldElement::one(Prime::new(3).unwrap());
        assert!(matches!(a.checked_add(&b), Err(Error::MixedRadicand(2, 3))));
        assert!(a.checked_mul(&b).is_err());
    }

    #[test]
    fn sign_under_real_embedding() {
        let q = Prime::new(3).unwrap();
        assert_eq!(QuadraticFieldElement::new(r(2, 1), r(-1, 1), q).signum(), 1); // 2 - 1.73
        assert_eq!(QuadraticFieldElement::new(r(1, 1), r(-1, 1), q).signum(), -1);
        assert_eq!(QuadraticFieldElement::new(r(-2, 1), r(1, 1), q).signum(), -1);
        assert_eq!(QuadraticFieldElement::zero(q).signum(), 0);
    }
}
