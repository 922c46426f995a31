//! The field `Q(v)` of rational functions.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::laurent::LaurentPolynomial;

/// A reduced fraction of Laurent polynomials.
///
/// Canonical form: the denominator is a polynomial with nonzero constant term
/// and positive leading coefficient, numerator and denominator share no common
/// factor in `Z[v]` (including integer content). Equality is therefore
/// structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: LaurentPolynomial,
    den: LaurentPolynomial,
}

impl RationalFunction {
    pub fn zero() -> Self {
        Self {
            num: LaurentPolynomial::zero(),
            den: LaurentPolynomial::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentPolynomial::one())
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_laurent(LaurentPolynomial::constant(c))
    }

    pub fn v_pow(e: i64) -> Self {
        Self::from_laurent(LaurentPolynomial::v_pow(e))
    }

    pub fn from_laurent(p: LaurentPolynomial) -> Self {
        Self {
            num: p,
            den: LaurentPolynomial::one(),
        }
    }

    /// `num / den`, reduced. Panics if `den` is zero.
    pub fn new(num: LaurentPolynomial, den: LaurentPolynomial) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let mut num = num.div_exact(&g).expect("gcd divides numerator");
        let mut den = den.div_exact(&g).expect("gcd divides denominator");
        let shift = den.min_exponent().unwrap();
        num = num.shift(-shift);
        den = den.shift(-shift);
        if den.leading_coefficient().unwrap().is_negative() {
            num = -num;
            den = -den;
        }
        Self { num, den }
    }

    pub fn numerator(&self) -> &LaurentPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// `Some(p)` when the denominator is a unit.
    pub fn as_laurent(&self) -> Option<&LaurentPolynomial> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| Self::new(self.den.clone(), self.num.clone()))
    }

    pub fn bar(&self) -> Self {
        Self::new(self.num.bar(), self.den.bar())
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 {
            self.inv().expect("negative power of zero")
        } else {
            self.clone()
        };
        Self::new(base.num.pow(n.unsigned_abs() as u32), base.den.pow(n.unsigned_abs() as u32))
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        Self::new(self.num.scale(c), self.den.clone())
    }
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalFunction::new(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunction::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RationalFunction::from_laurent(&self.num * &rhs.num);
        }
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<'a> Div<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self * &rhs.inv().expect("division by zero rational function")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl From<LaurentPolynomial> for RationalFunction {
    fn from(p: LaurentPolynomial) -> Self {
        Self::from_laurent(p)
    }
}

impl From<i64> for RationalFunction {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            let simple_num = self.num.terms().count() == 1;
            if simple_num {
                write!(f, "{}/({})", self.num, self.den)
            } else {
                write!(f, "({})/({})", self.num, self.den)
            }
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        RationalFunction::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(terms.iter().copied())
    }

    #[test]
    fn canonical_form_is_unique() {
        // (v^2 - 1) / (2v - 2) == (v + 1) / 2
        let a = RationalFunction::new(lp(&[(2, 1), (0, -1)]), lp(&[(1, 2), (0, -2)]));
        let b = RationalFunction::new(lp(&[(1, 1), (0, 1)]), lp(&[(0, 2)]));
        assert_eq!(a, b);
        // v / v^3 == v^-2
        let c = RationalFunction::new(lp(&[(1, 1)]), lp(&[(3, 1)]));
        assert_eq!(c, RationalFunction::v_pow(-2));
        // sign lives in the numerator
        let d = RationalFunction::new(lp(&[(0, 1)]), lp(&[(0, -1)]));
        assert_eq!(d, RationalFunction::from_int(-1));
    }

    #[test]
    fn field_operations() {
        let x = RationalFunction::new(lp(&[(1, 1), (0, 1)]), lp(&[(2, 1), (0, 3)]));
        let y = RationalFunction::new(lp(&[(-1, 2)]), lp(&[(1, 1), (0, -1)]));
        let s = &x + &y;
        assert_eq!(&s - &y, x);
        assert_eq!(&(&x * &y) / &y, x);
        assert_eq!(&x * &x.inv().unwrap(), RationalFunction::one());
        assert!(RationalFunction::zero().inv().is_none());
    }

    #[test]
    fn lusztig_constant() {
        // (1 - v^-2)^-1 = v^2 / (v^2 - 1)
        let c = RationalFunction::from_laurent(lp(&[(0, 1), (-2, -1)])).inv().unwrap();
        assert_eq!(c, RationalFunction::new(lp(&[(2, 1)]), lp(&[(2, 1), (0, -1)])));
        assert_eq!(c.to_string(), "v^2/(v^2 - 1)");
    }
}
