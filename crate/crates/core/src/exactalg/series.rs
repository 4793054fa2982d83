use super::{QPolynomial, QRationalFunction};
use crate::{Error, Result};

/// A power series in `z` known modulo `z^{order+1}`, with coefficients that
/// are rational functions of `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<QRationalFunction>,
}

impl TruncatedSeries {
    /// `coeffs[i]` is the coefficient of `z^i`; the order is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<QRationalFunction>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidArgument(
                "a truncated series needs at least one coefficient".into(),
            ));
        }
        Ok(TruncatedSeries { coeffs })
    }

    pub fn from_polys(coeffs: Vec<QPolynomial>) -> Result<Self> {
        Self::new(coeffs.into_iter().map(QRationalFunction::from_poly).collect())
    }

    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![QRationalFunction::zero(); order + 1];
        coeffs[0] = QRationalFunction::one();
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[QRationalFunction] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &QRationalFunction {
        &self.coeffs[i]
    }

    /// Product truncated to the smaller of the two orders.
    pub fn mul(&self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|n| {
                (0..=n).fold(QRationalFunction::zero(), |acc, k| {
                    let a = &self.coeffs[k];
                    let b = &rhs.coeffs[n - k];
                    if a.is_zero() || b.is_zero() {
                        acc
                    } else {
                        &acc + &(a * b)
                    }
                })
            })
            .collect();
        TruncatedSeries { coeffs }
    }

    /// Multiplicative inverse modulo `z^{order+1}`.
    pub fn reciprocal(&self) -> Result<TruncatedSeries> {
        series_reciprocal(self)
    }
}

/// Inverts a series with nonzero constant term by the triangular recurrence
/// `t_0 = 1/s_0`, `t_n = -(1/s_0) Σ_{k=1..n} s_k t_{n-k}`.
pub fn series_reciprocal(s: &TruncatedSeries) -> Result<TruncatedSeries> {
    let inv0 = s.coeffs[0].recip().map_err(|_| Error::NonInvertibleSeries)?;
    let neg_inv0 = -&inv0;
    let mut t: Vec<QRationalFunction> = Vec::with_capacity(s.coeffs.len());
    t.push(inv0);
    for n in 1..s.coeffs.len() {
        let mut acc = QRationalFunction::zero();
        for k in 1..=n {
            if !s.coeffs[k].is_zero() && !t[n - k].is_zero() {
                acc = &acc + &(&s.coeffs[k] * &t[n - k]);
            }
        }
        t.push(&neg_inv0 * &acc);
    }
    Ok(TruncatedSeries { coeffs: t })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{q_factorial, ratfun_reduce};

    fn c(v: i64) -> QPolynomial {
        QPolynomial::from_ints(&[v])
    }

    #[test]
    fn geometric_series() {
        let s = TruncatedSeries::from_polys(vec![c(1), c(-1), c(0), c(0)]).unwrap();
        let t = series_reciprocal(&s).unwrap();
        assert_eq!(t, TruncatedSeries::from_polys(vec![c(1); 4]).unwrap());
        assert_eq!(s.mul(&t), TruncatedSeries::one(3));
    }

    #[test]
    fn identity_is_self_inverse() {
        let one = TruncatedSeries::one(2);
        assert_eq!(series_reciprocal(&one).unwrap(), one);
    }

    #[test]
    fn zero_constant_term_rejected() {
        let s = TruncatedSeries::from_polys(vec![c(0), c(1)]).unwrap();
        assert_eq!(series_reciprocal(&s), Err(Error::NonInvertibleSeries));
        assert!(TruncatedSeries::new(vec![]).is_err());
    }

    #[test]
    fn second_coefficient_of_inverse_q_bessel() {
        let coeffs = (0..=2)
            .map(|n| {
                let f = q_factorial(n);
                let sign = if n % 2 == 0 { 1 } else { -1 };
                ratfun_reduce(c(sign), &f * &f).unwrap()
            })
            .collect();
        let t = series_reciprocal(&TruncatedSeries::new(coeffs).unwrap()).unwrap();
        let f2 = q_factorial(2);
        let expected = ratfun_reduce(QPolynomial::from_ints(&[0, 2, 1]), &f2 * &f2).unwrap();
        assert_eq!(t.coeff(2), &expected);
    }
}
