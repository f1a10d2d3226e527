//! Univariate polynomials with rational coefficients.

use std::ops::Mul;

use num_traits::{One, Zero};

use crate::rational::Rational;

/// Coefficients are stored lowest degree first with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolynomialR {
    coeffs: Vec<Rational>,
}

impl PolynomialR {
    pub fn new(mut coeffs: Vec<Rational>) -> PolynomialR {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        PolynomialR { coeffs }
    }

    pub fn zero() -> PolynomialR {
        PolynomialR { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> PolynomialR {
        PolynomialR::new(vec![c])
    }

    /// `x - root`.
    pub fn linear_factor(root: &Rational) -> PolynomialR {
        PolynomialR::new(vec![-root.clone(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, s: &Rational) -> PolynomialR {
        PolynomialR::new(self.coeffs.iter().map(|c| c * s).collect())
    }
}

impl Mul for &PolynomialR {
    type Output = PolynomialR;

    fn mul(self, rhs: &PolynomialR) -> PolynomialR {
        if self.is_zero() || rhs.is_zero() {
            return PolynomialR::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolynomialR::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn arithmetic() {
        let p = &PolynomialR::linear_factor(&int(2)) * &PolynomialR::linear_factor(&int(-3));
        // (x - 2)(x + 3) = x^2 + x - 6
        assert_eq!(p.coeffs(), &[int(-6), int(1), int(1)]);
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.eval(&int(2)), int(0));
        assert_eq!(p.eval(&ratio(1, 2)), ratio(-21, 4));
        assert_eq!(p.scale(&int(0)), PolynomialR::zero());
        assert_eq!(PolynomialR::new(vec![int(1), int(0)]).degree(), Some(0));
        assert_eq!(PolynomialR::zero().degree(), None);
        assert_eq!((&p * &PolynomialR::zero()).degree(), None);
    }

    #[test]
    fn evaluation_is_linear_in_coefficients() {
        let a = PolynomialR::new(vec![int(1), int(-2), ratio(3, 5)]);
        let b = PolynomialR::new(vec![ratio(-1, 3), int(4)]);
        let sum = PolynomialR::new(vec![ratio(2, 3), int(2), ratio(3, 5)]);
        for x in [int(0), int(3), ratio(-7, 2)] {
            assert_eq!(sum.eval(&x), a.eval(&x) + b.eval(&x));
        }
    }
}
