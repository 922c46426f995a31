//! Quantum integers, factorials and Gaussian binomials in the symmetric
//! normalization, and evaluation at `v = sqrt q`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::laurent::LaurentPolynomial;
use super::quadratic::{Prime, QuadraticFieldElement};
use crate::error::{Error, Result};

/// `[n] = (v^n - v^-n) / (v - v^-1) = v^(n-1) + v^(n-3) + ... + v^(1-n)`.
///
/// `[0] = 0` and `[-n] = -[n]`.
pub fn quantum_integer(n: i64) -> LaurentPolynomial {
    if n < 0 {
        return -quantum_integer(-n);
    }
    LaurentPolynomial::from_terms((0..n).map(|k| (n - 1 - 2 * k, 1)))
}

/// `[n]! = [n][n-1]...[1]`, with `[0]! = 1`.
pub fn quantum_factorial(n: u32) -> LaurentPolynomial {
    (1..=n as i64).fold(LaurentPolynomial::one(), |acc, k| &acc * &quantum_integer(k))
}

/// `[n]! / ([k]! [n-k]!)`.
pub fn gaussian_binomial(n: i64, k: i64) -> Result<LaurentPolynomial> {
    if n < 0 || k < 0 || k > n {
        return Err(Error::BinomialRange { n, k });
    }
    let num = quantum_factorial(n as u32);
    let den = &quantum_factorial(k as u32) * &quantum_factorial((n - k) as u32);
    Ok(num.div_exact(&den).expect("quantum binomials are Laurent polynomials"))
}

/// `[n]! / ([p_1]! ... [p_r]!)` where `n = sum p_i`.
pub fn gaussian_multinomial(parts: &[u32]) -> LaurentPolynomial {
    let n: u32 = parts.iter().sum();
    let den = parts
        .iter()
        .fold(LaurentPolynomial::one(), |acc, &p| &acc * &quantum_factorial(p));
    quantum_factorial(n)
        .div_exact(&den)
        .expect("quantum multinomials are Laurent polynomials")
}

/// Substitutes `v = +sqrt q`: even powers land in the rational part, odd
/// powers in the surd part.
pub fn evaluate_at_sqrt_q(p: &LaurentPolynomial, q: Prime) -> QuadraticFieldElement {
    let qq = BigInt::from(q.get());
    let mut rational = BigRational::zero();
    let mut surd = BigRational::zero();
    for (e, c) in p.terms() {
        let half = e.div_euclid(2);
        let pw = if half >= 0 {
            BigRational::from_integer(c * num_traits::pow(qq.clone(), half as usize))
        } else {
            BigRational::new(c.clone(), num_traits::pow(qq.clone(), (-half) as usize))
        };
        if e.rem_euclid(2) == 0 {
            rational += pw;
        } else {
            surd += pw;
        }
    }
    QuadraticFieldElement::new(rational, surd, q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(terms.iter().copied())
    }

    #[test]
    fn quantum_integers() {
        assert_eq!(quantum_integer(1), LaurentPolynomial::one());
        assert_eq!(quantum_integer(2), lp(&[(1, 1), (-1, 1)]));
        assert!(quantum_integer(0).is_zero());
        assert_eq!(quantum_integer(-3), -quantum_integer(3));
    }

    #[test]
    fn factorial_three_by_hand() {
        // (v^2 + 1 + v^-2)(v + v^-1) expanded by hand:
        // v^3 + 2v + 2v^-1 + v^-3
        let expected = lp(&[(3, 1), (1, 2), (-1, 2), (-3, 1)]);
        assert_eq!(quantum_factorial(3), expected);
        assert_eq!(
            quantum_factorial(3),
            &lp(&[(2, 1), (0, 1), (-2, 1)]) * &lp(&[(1, 1), (-1, 1)])
        );
    }

    #[test]
    fn binomials() {
        assert_eq!(gaussian_binomial(2, 1).unwrap(), lp(&[(1, 1), (-1, 1)]));
        assert_eq!(gaussian_binomial(5, 0).unwrap(), LaurentPolynomial::one());
        // [4]!/([2]![2]!) expanded by brute force: v^4 + v^2 + 2 + v^-2 + v^-4
        assert_eq!(
            gaussian_binomial(4, 2).unwrap(),
            lp(&[(4, 1), (2, 1), (0, 2), (-2, 1), (-4, 1)])
        );
        assert!(matches!(gaussian_binomial(2, 3), Err(Error::BinomialRange { .. })));
        assert!(gaussian_binomial(2, -1).is_err());
    }

    #[test]
    fn evaluation() {
        let q2 = Prime::new(2).unwrap();
        let q3 = Prime::new(3).unwrap();
        let e = evaluate_at_sqrt_q(&lp(&[(1, 1), (-1, 1)]), q2);
        assert!(e.rational_part().is_zero());
        assert_eq!(*e.surd_part(), BigRational::new(3.into(), 2.into()));
        let five = evaluate_at_sqrt_q(&LaurentPolynomial::constant(5), q3);
        assert_eq!(five, QuadraticFieldElement::from_int(5, q3));
        assert_eq!(evaluate_at_sqrt_q(&LaurentPolynomial::v_pow(2), q3), QuadraticFieldElement::from_int(3, q3));
    }
}
