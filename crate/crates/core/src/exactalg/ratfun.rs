use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::One;

use super::QPolynomial;
use crate::{Error, Result};

/// A reduced fraction of polynomials in `q` with a monic denominator.
///
/// Since the pair is reduced and the denominator monic, two values are equal
/// exactly when their fields are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QRationalFunction {
    num: QPolynomial,
    den: QPolynomial,
}

/// Reduces `n / d` to lowest terms with a monic denominator.
pub fn ratfun_reduce(n: QPolynomial, d: QPolynomial) -> Result<QRationalFunction> {
    QRationalFunction::new(n, d)
}

impl QRationalFunction {
    pub fn new(num: QPolynomial, den: QPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = QPolynomial::gcd(&num, &den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g)?, den.div_exact(&g)?)
        };
        let lc = den.leading().expect("nonzero").clone();
        if !lc.is_one() {
            let inv = lc.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Ok(QRationalFunction { num, den })
    }

    pub fn zero() -> Self {
        QRationalFunction {
            num: QPolynomial::zero(),
            den: QPolynomial::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(QPolynomial::one())
    }

    pub fn from_poly(p: QPolynomial) -> Self {
        QRationalFunction {
            num: p,
            den: QPolynomial::one(),
        }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_poly(QPolynomial::constant(c))
    }

    pub fn numerator(&self) -> &QPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &QPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `Some` when the denominator is 1.
    pub fn as_polynomial(&self) -> Option<&QPolynomial> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    pub fn eval(&self, at: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(at);
        if num_traits::Zero::is_zero(&d) {
            return Err(Error::ZeroDenominator);
        }
        Ok(self.num.eval(at) / d)
    }
}

impl fmt::Display for QRationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Add for &QRationalFunction {
    type Output = QRationalFunction;

    fn add(self, rhs: &QRationalFunction) -> QRationalFunction {
        if self.den == rhs.den {
            return QRationalFunction::new(&self.num + &rhs.num, self.den.clone())
                .expect("denominator is nonzero");
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        QRationalFunction::new(num, &self.den * &rhs.den).expect("denominator is nonzero")
    }
}

impl Neg for &QRationalFunction {
    type Output = QRationalFunction;

    fn neg(self) -> QRationalFunction {
        QRationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Sub for &QRationalFunction {
    type Output = QRationalFunction;

    fn sub(self, rhs: &QRationalFunction) -> QRationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &QRationalFunction {
    type Output = QRationalFunction;

    fn mul(self, rhs: &QRationalFunction) -> QRationalFunction {
        QRationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("denominator is nonzero")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> QPolynomial {
        QPolynomial::from_ints(c)
    }

    #[test]
    fn cancels_common_factor() {
        let r = ratfun_reduce(p(&[-1, 0, 1]), p(&[-1, 1])).unwrap();
        assert_eq!(r.numerator(), &p(&[1, 1]));
        assert!(r.denominator().is_one());
    }

    #[test]
    fn zero_numerator() {
        let r = ratfun_reduce(QPolynomial::zero(), p(&[0, 0, 0, 1])).unwrap();
        assert!(r.is_zero());
        assert!(r.denominator().is_one());
    }

    #[test]
    fn normalizes_denominator_sign_and_scale() {
        let r = ratfun_reduce(p(&[0, 2]), p(&[2, -2])).unwrap();
        assert_eq!(r.numerator(), &p(&[0, -1]));
        assert_eq!(r.denominator(), &p(&[-1, 1]));
        // cross-multiplication: (-q)(2-2q) == (2q)(q-1)
        assert_eq!(
            r.numerator() * &p(&[2, -2]),
            &p(&[0, 2]) * r.denominator()
        );
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            ratfun_reduce(p(&[1]), QPolynomial::zero()),
            Err(Error::ZeroDenominator)
        );
        assert!(QRationalFunction::zero().recip().is_err());
    }

    #[test]
    fn field_operations() {
        let a = ratfun_reduce(p(&[1]), p(&[1, -1])).unwrap();
        let b = ratfun_reduce(p(&[1]), p(&[1, 1])).unwrap();
        // 1/(1-q) + 1/(1+q) = 2/(1-q^2)
        let s = &a + &b;
        assert_eq!(s, ratfun_reduce(p(&[2]), p(&[1, 0, -1])).unwrap());
        assert_eq!(&s - &b, a);
        assert_eq!(&a * &a.recip().unwrap(), QRationalFunction::one());
        assert_eq!(s.to_string(), "(-2)/(q^2 - 1)");
    }
}
