//! Reduced rational homology of order complexes.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{order_complex_chains, GradedPoset};

/// Reduced Betti numbers `b̃_j`, `j = -1, 0, 1, ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedBetti {
    values: Vec<usize>,
}

impl ReducedBetti {
    /// `b̃_j`; zero outside the computed range.
    pub fn get(&self, dim: isize) -> usize {
        usize::try_from(dim + 1)
            .ok()
            .and_then(|i| self.values.get(i).copied())
            .unwrap_or(0)
    }

    /// Values starting at dimension -1.
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Highest dimension with a nonzero Betti number, if any.
    pub fn top_nonzero(&self) -> Option<isize> {
        self.values.iter().rposition(|&b| b != 0).map(|i| i as isize - 1)
    }

    /// `Σ_j (-1)^j b̃_j`.
    pub fn euler_characteristic(&self) -> i64 {
        self.values
            .iter()
            .enumerate()
            .map(|(i, &b)| if i % 2 == 0 { -(b as i64) } else { b as i64 })
            .sum()
    }

    /// True when all homology sits in the single dimension `dim`.
    pub fn concentrated_in(&self, dim: isize) -> bool {
        self.values
            .iter()
            .enumerate()
            .all(|(i, &b)| b == 0 || i as isize - 1 == dim)
    }
}

type SparseColumn = Vec<(usize, BigRational)>;

/// `a - factor * b` for sorted sparse vectors.
fn axpy(a: &SparseColumn, factor: &BigRational, b: &SparseColumn) -> SparseColumn {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, -(factor * &b[j].1)));
            j += 1;
        } else {
            let v = &a[i].1 - factor * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Rank over `Q` of the matrix whose columns are the given sparse vectors
/// (row indices ascending). Column reduction keyed on the lowest nonzero row.
pub fn rank_over_rationals(columns: Vec<SparseColumn>) -> usize {
    let mut pivots: HashMap<usize, SparseColumn> = HashMap::new();
    for mut col in columns {
        while let Some((low, val)) = col.last().cloned() {
            match pivots.get(&low) {
                Some(p) => {
                    let factor = &val / &p.last().expect("pivot column nonempty").1;
                    col = axpy(&col, &factor, p);
                }
                None => {
                    pivots.insert(low, col);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// Reduced Betti numbers of the order complex of `p` over the rationals.
///
/// Faces of dimension `j` are chains with `j + 1` elements; the augmented
/// complex includes the empty face in dimension -1, so `b̃_j = dim C_j -
/// rank ∂_j - rank ∂_{j+1}`.
pub fn rational_betti_numbers(p: &GradedPoset) -> ReducedBetti {
    let chains = order_complex_chains(p);
    // dims[k] = number of faces of dimension k - 1
    let mut dims = vec![1usize];
    dims.extend(chains.iter().map(Vec::len));

    // ranks[k] = rank of ∂ from dimension k-1 to k-2; ranks[0] = 0
    let mut ranks = vec![0usize; dims.len() + 1];
    if !chains.is_empty() {
        ranks[1] = 1; // augmentation C_0 -> C_{-1} is onto
    }
    for k in 1..chains.len() {
        let index: HashMap<&[usize], usize> = chains[k - 1]
            .iter()
            .enumerate()
            .map(|(i, c)| (c.as_slice(), i))
            .collect();
        let columns = chains[k]
            .iter()
            .map(|c| {
                let mut col: SparseColumn = (0..c.len())
                    .map(|drop| {
                        let face: Vec<usize> = c
                            .iter()
                            .enumerate()
                            .filter(|&(i, _)| i != drop)
                            .map(|(_, &x)| x)
                            .collect();
                        let sign = if drop % 2 == 0 {
                            BigRational::one()
                        } else {
                            -BigRational::one()
                        };
                        (index[face.as_slice()], sign)
                    })
                    .collect();
                col.sort_by_key(|e| e.0);
                col
            })
            .collect();
        ranks[k + 1] = rank_over_rationals(columns);
    }
    let values = (0..dims.len())
        .map(|k| dims[k] - ranks[k] - ranks[k + 1])
        .collect();
    ReducedBetti { values }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::{proper_part, reduced_euler_characteristic, segre_product};

    fn r(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    #[test]
    fn small_ranks() {
        assert_eq!(rank_over_rationals(vec![]), 0);
        let cols = vec![
            vec![(0, r(1)), (1, r(1))],
            vec![(1, r(1)), (2, r(1))],
            vec![(0, r(1)), (2, r(-1))],
        ];
        // third = first - second
        assert_eq!(rank_over_rationals(cols), 2);
        let cols = vec![vec![(0, r(2))], vec![(0, r(3)), (1, r(1))]];
        assert_eq!(rank_over_rationals(cols), 2);
    }

    #[test]
    fn empty_and_discrete() {
        let e = rational_betti_numbers(&GradedPoset::antichain(0));
        assert_eq!(e.get(-1), 1);
        assert_eq!(e.euler_characteristic(), -1);
        let a = rational_betti_numbers(&GradedPoset::antichain(4));
        assert_eq!(a.values(), &[0, 3]);
        assert_eq!(a.get(0), 3);
        assert_eq!(a.top_nonzero(), Some(0));
    }

    #[test]
    fn chain_is_contractible() {
        let b = rational_betti_numbers(&GradedPoset::chain(4));
        assert!(b.values().iter().all(|&v| v == 0));
    }

    #[test]
    fn boolean_proper_part_is_a_sphere() {
        for n in 1..=4 {
            let pp = proper_part(&GradedPoset::boolean_lattice(n)).unwrap();
            let b = rational_betti_numbers(&pp);
            let top = n as isize - 2;
            assert_eq!(b.get(top), 1, "n = {n}");
            assert!(b.concentrated_in(top));
        }
    }

    #[test]
    fn segre_of_b3() {
        let b3 = GradedPoset::boolean_lattice(3);
        let pp = proper_part(&segre_product(&b3, &b3)).unwrap();
        let b = rational_betti_numbers(&pp);
        assert_eq!(b.get(0), 0);
        assert_eq!(b.get(1), 19);
        assert_eq!(b.euler_characteristic(), reduced_euler_characteristic(&pp));
    }
}
