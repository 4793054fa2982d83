//! Exact computations around Segre products of boolean and subspace lattices.
//!
//! The crate builds the combinatorial objects involved in the q-analogue of
//! the Carlitz–Scoville–Vaughan identity and checks every identity exactly:
//!
//! * [`exactalg`]: rational polynomials in `q`, reduced rational functions and
//!   truncated power series over them.
//! * [`permstats`]: inversions, ascents, pairs with no common ascent and the
//!   polynomials `W_n(q)`.
//! * [`besselseries`]: the series `F(z) = Σ (-1)^n z^n / ([n]_q!)²` and its
//!   reciprocal.
//! * [`poset`]: finite graded posets, Segre products, Möbius numbers, edge
//!   labelings and rational homology of order complexes.
//! * [`subspace`]: finite fields, the subspace lattice `B_n(q)` and its
//!   rightmost-coordinate edge labeling.
//! * [`symfrob`]: partitions, characters of `S_m × S_n`, the product Frobenius
//!   characteristic and principal specialization.

pub mod besselseries;
pub mod exactalg;
pub mod permstats;
pub mod poset;
pub mod subspace;
pub mod symfrob;

mod error;

pub use error::{Error, Result};
