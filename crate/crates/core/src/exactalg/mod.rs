//! Exact arithmetic: polynomials and rational functions in `q` over the
//! rationals, and truncated power series in `z` with rational-function
//! coefficients. No floating point is used anywhere.

mod poly;
mod ratfun;
mod series;

pub use poly::{poly_arith, q_factorial, q_integer, ArithOp, QPolynomial};
pub use ratfun::{ratfun_reduce, QRationalFunction};
pub use series::{series_reciprocal, TruncatedSeries};
