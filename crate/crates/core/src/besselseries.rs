//! The series `F(z) = Σ_n (-1)^n z^n / ([n]_q!)²` and its reciprocal, whose
//! `n`-th coefficient should be `W_n(q) / ([n]_q!)²`.
//!
//! `q` stays symbolic here; numeric specialization is left to callers.

use crate::exactalg::{q_factorial, ratfun_reduce, QPolynomial, QRationalFunction, TruncatedSeries};
use crate::permstats::w_polynomial_bounded;
use crate::permstats::DEFAULT_ENUMERATION_BOUND;
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BesselCoefficients {
    pub order: usize,
    pub f: TruncatedSeries,
    pub f_inv: TruncatedSeries,
}

impl BesselCoefficients {
    pub fn new(order: usize) -> Result<Self> {
        let f = build_f(order);
        let f_inv = f.reciprocal()?;
        Ok(BesselCoefficients { order, f, f_inv })
    }
}

fn factorial_squared(n: usize) -> QPolynomial {
    let f = q_factorial(n);
    &f * &f
}

pub fn build_f(order: usize) -> TruncatedSeries {
    let coeffs = (0..=order)
        .map(|n| {
            let sign = if n % 2 == 0 { 1 } else { -1 };
            ratfun_reduce(QPolynomial::from_ints(&[sign]), factorial_squared(n))
                .expect("q-factorials are nonzero")
        })
        .collect();
    TruncatedSeries::new(coeffs).expect("order + 1 >= 1 coefficients")
}

/// `W_n(q) / ([n]_q!)²` with `W_n` enumerated.
pub fn expected_reciprocal_coefficient(n: usize, bound: usize) -> Result<QRationalFunction> {
    ratfun_reduce(w_polynomial_bounded(n, bound)?, factorial_squared(n))
}

pub fn verify_reciprocal(order: usize) -> Result<Vec<bool>> {
    verify_reciprocal_bounded(order, DEFAULT_ENUMERATION_BOUND)
}

/// Entry `n` compares coefficient `n` of `1/F` with `W_n(q)/([n]_q!)²`.
pub fn verify_reciprocal_bounded(order: usize, bound: usize) -> Result<Vec<bool>> {
    let inv = build_f(order).reciprocal()?;
    (0..=order)
        .map(|n| Ok(inv.coeff(n) == &expected_reciprocal_coefficient(n, bound)?))
        .collect()
}
