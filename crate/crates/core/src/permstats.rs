//! Inversions and ascents of permutations, pairs with no common ascent, and
//! the polynomials `W_n(q) = Σ_{(σ,ω) ∈ D_n} q^{inv σ + inv ω}`.
//!
//! `D_n` is the set of pairs of permutations of `[n]` that share no ascent.
//! Enumeration is the ground truth for `W_n`; [`w_by_recurrence`] solves the
//! alternating q-binomial identity for `W_n` and is only used past the
//! enumeration bound.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::exactalg::{q_factorial, QPolynomial};
use crate::{Error, Result};

/// Largest `n` for which `D_n` is enumerated by default (`7!² ≈ 2.5e7` pairs).
pub const DEFAULT_ENUMERATION_BOUND: usize = 7;

/// A permutation of `[n]` in one-line notation; `image()[i-1] = σ(i)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n + 1];
        for &v in &image {
            if v == 0 || v > n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPermutation(format!(
                    "{image:?} is not a bijection on [{n}]"
                )));
            }
        }
        Ok(Permutation { image })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (1..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// One-line notation read right to left.
    pub fn reversed(&self) -> Self {
        Permutation {
            image: self.image.iter().rev().copied().collect(),
        }
    }

    pub fn inversions(&self) -> usize {
        inversions(self)
    }

    /// Bit `i-1` is set iff position `i` is an ascent.
    pub fn ascent_mask(&self) -> u64 {
        self.image
            .iter()
            .tuple_windows()
            .enumerate()
            .filter(|(_, (a, b))| a < b)
            .fold(0, |m, (i, _)| m | (1 << i))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.image.len() < 10 {
            self.image.iter().try_for_each(|v| write!(f, "{v}"))
        } else {
            write!(f, "{}", self.image.iter().join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `"231"` (single digits) or `"2,3,1"`.
    fn from_str(s: &str) -> Result<Self> {
        let image = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<usize>().ok())
                .collect::<Option<Vec<_>>>()
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect::<Option<Vec<_>>>()
        };
        image
            .ok_or_else(|| Error::Parse(format!("bad permutation {s:?}")))
            .and_then(Permutation::new)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PermutationPair {
    first: Permutation,
    second: Permutation,
}

impl PermutationPair {
    pub fn new(first: Permutation, second: Permutation) -> Result<Self> {
        if first.len() != second.len() {
            return Err(Error::InvalidPermutation(format!(
                "pair of sizes {} and {}",
                first.len(),
                second.len()
            )));
        }
        Ok(PermutationPair { first, second })
    }

    pub fn first(&self) -> &Permutation {
        &self.first
    }

    pub fn second(&self) -> &Permutation {
        &self.second
    }
}

/// Number of pairs `i < j` with `σ(i) > σ(j)`.
pub fn inversions(s: &Permutation) -> usize {
    let img = &s.image;
    (0..img.len())
        .map(|i| img[i + 1..].iter().filter(|&&b| b < img[i]).count())
        .sum()
}

/// Positions `i ∈ [n-1]` (1-based) with `σ(i) < σ(i+1)`.
pub fn ascent_set(s: &Permutation) -> BTreeSet<usize> {
    s.image
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] < w[1])
        .map(|(i, _)| i + 1)
        .collect()
}

pub fn has_common_ascent(p: &PermutationPair) -> bool {
    p.first.ascent_mask() & p.second.ascent_mask() != 0
}

/// All permutations of `[n]` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    (1..=n)
        .permutations(n)
        .map(|image| Permutation { image })
        .collect()
}

fn check_bound(n: usize, bound: usize) -> Result<()> {
    if n > bound {
        Err(Error::bound("permutation size n", n as u64, bound as u64))
    } else {
        Ok(())
    }
}

pub fn enumerate_no_common_ascent(n: usize) -> Result<Vec<PermutationPair>> {
    enumerate_no_common_ascent_bounded(n, DEFAULT_ENUMERATION_BOUND)
}

/// Lists `D_n` in lexicographic order of `(σ, ω)`.
pub fn enumerate_no_common_ascent_bounded(n: usize, bound: usize) -> Result<Vec<PermutationPair>> {
    check_bound(n, bound)?;
    let perms = all_permutations(n);
    let masks: Vec<u64> = perms.iter().map(Permutation::ascent_mask).collect();
    let mut out = Vec::new();
    for (s, &ms) in perms.iter().zip(&masks) {
        for (w, &mw) in perms.iter().zip(&masks) {
            if ms & mw == 0 {
                out.push(PermutationPair {
                    first: s.clone(),
                    second: w.clone(),
                });
            }
        }
    }
    Ok(out)
}

pub fn w_polynomial(n: usize) -> Result<QPolynomial> {
    w_polynomial_bounded(n, DEFAULT_ENUMERATION_BOUND)
}

/// `W_n(q)` by running over every pair in `S_n × S_n` and keeping those with
/// disjoint ascent sets. The outer loop is split across threads; the merge
/// is a coefficient-wise sum, so the result does not depend on scheduling.
pub fn w_polynomial_bounded(n: usize, bound: usize) -> Result<QPolynomial> {
    check_bound(n, bound)?;
    let stats: Vec<(u64, usize)> = all_permutations(n)
        .iter()
        .map(|p| (p.ascent_mask(), p.inversions()))
        .collect();
    let width = n * n.saturating_sub(1) + 1;
    let counts = stats
        .par_iter()
        .map(|&(ms, is)| {
            let mut local = vec![0u64; width];
            for &(mw, iw) in &stats {
                if ms & mw == 0 {
                    local[is + iw] += 1;
                }
            }
            local
        })
        .reduce(
            || vec![0u64; width],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    Ok(QPolynomial::from_ints(&counts))
}

/// `|D_n|`, i.e. the Carlitz–Scoville–Vaughan number `ω_n`.
pub fn omega(n: usize) -> Result<BigInt> {
    w_polynomial(n)?.eval_integer(1)
}

/// Gaussian binomial `[n]_q! / ([k]_q! [n-k]_q!)`.
pub fn q_binomial(n: usize, k: usize) -> Result<QPolynomial> {
    if k > n {
        return Err(Error::InvalidArgument(format!(
            "q-binomial needs k <= n, got n = {n}, k = {k}"
        )));
    }
    let den = &q_factorial(k) * &q_factorial(n - k);
    q_factorial(n).div_exact(&den)
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

pub fn verify_q_csv_identity(n: usize) -> Result<QPolynomial> {
    verify_q_csv_identity_bounded(n, DEFAULT_ENUMERATION_BOUND)
}

/// Residual `Σ_{i=0..n} (-1)^i [n brack i]_q² W_i(q)` with every `W_i`
/// enumerated. Zero when the identity holds.
pub fn verify_q_csv_identity_bounded(n: usize, bound: usize) -> Result<QPolynomial> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "the alternating identity needs n >= 1".into(),
        ));
    }
    check_bound(n, bound)?;
    let mut residual = QPolynomial::zero();
    for i in 0..=n {
        let b = q_binomial(n, i)?;
        let term = &(&b * &b) * &w_polynomial_bounded(i, bound)?;
        residual = if i % 2 == 0 {
            &residual + &term
        } else {
            &residual - &term
        };
    }
    Ok(residual)
}

/// `W_0..=W_n` obtained by solving the alternating identity for its last
/// term: `W_n = Σ_{i<n} (-1)^{n-1+i} [n brack i]_q² W_i`.
pub fn w_by_recurrence(n: usize) -> Vec<QPolynomial> {
    let mut ws = vec![QPolynomial::one()];
    for m in 1..=n {
        let mut acc = QPolynomial::zero();
        for (i, w) in ws.iter().enumerate() {
            let b = q_binomial(m, i).expect("i < m");
            let term = &(&b * &b) * w;
            acc = if (m - 1 + i) % 2 == 0 {
                &acc + &term
            } else {
                &acc - &term
            };
        }
        ws.push(acc);
    }
    ws
}

/// `ω_0..=ω_n` from `Σ_k (-1)^k C(n,k)² ω_k = 0`, with no enumeration.
pub fn omega_by_recurrence(n: usize) -> Vec<BigInt> {
    let mut ws = vec![BigInt::one()];
    for m in 1..=n {
        let acc = ws.iter().enumerate().fold(BigInt::zero(), |acc, (k, w)| {
            let b = binomial(m, k);
            let term = &b * &b * w;
            if (m - 1 + k) % 2 == 0 {
                acc + term
            } else {
                acc - term
            }
        });
        ws.push(acc);
    }
    ws
}

/// `Σ_{σ ∈ S_n} q^{inv σ}` by enumeration.
pub fn inversion_generating_function(n: usize) -> QPolynomial {
    let mut counts = vec![0u64; n * n.saturating_sub(1) / 2 + 1];
    for p in all_permutations(n) {
        counts[p.inversions()] += 1;
    }
    QPolynomial::from_ints(&counts)
}

/// `Σ_k (-1)^k C(n,k)² ω_k` with the given `ω` values.
pub fn csv_residual(n: usize, omegas: &[BigInt]) -> BigInt {
    (0..=n).fold(BigInt::zero(), |acc, k| {
        let b = binomial(n, k);
        let term = &b * &b * &omegas[k];
        if k % 2 == 0 {
            acc + term
        } else {
            acc - term
        }
    })
}
