use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use super::characters::{class_representative, CharacterTable2};
use super::partition::{partitions_of, Partition};
use crate::poset::{order_complex_chains, proper_part, segre_product_indexed, GradedPoset};
use crate::{Error, Result};

/// Largest `n` accepted by [`lefschetz_character`].
pub const DEFAULT_LEFSCHETZ_BOUND: usize = 4;

/// `P_n`, the proper part of `B_n ∘ B_n`, with the pair of subset bitmasks
/// behind each element.
pub fn segre_boolean_proper_part(n: usize) -> Result<(GradedPoset, Vec<(usize, usize)>)> {
    let b = GradedPoset::boolean_lattice(n);
    let sp = segre_product_indexed(&b, &b);
    let (bottom, top) = (
        sp.poset.bottom().expect("bounded"),
        sp.poset.top().expect("bounded"),
    );
    let pairs = (0..sp.poset.len())
        .filter(|&x| x != bottom && x != top)
        .map(|x| sp.pairs[x])
        .collect();
    Ok((proper_part(&sp.poset)?, pairs))
}

fn permute_mask(perm: &[usize], mask: usize) -> usize {
    perm.iter()
        .enumerate()
        .filter(|&(i, _)| mask >> i & 1 == 1)
        .fold(0, |acc, (_, &j)| acc | 1 << j)
}

pub fn lefschetz_character(n: usize) -> Result<CharacterTable2> {
    lefschetz_character_bounded(n, DEFAULT_LEFSCHETZ_BOUND)
}

/// The character of `S_n × S_n` on the top reduced homology of `P_n`, as
/// `(-1)^n Σ_{j ≥ -1} (-1)^j · #{fixed chains with j+1 elements}`.
///
/// `P_0` is assigned the trivial character of the trivial group, and the
/// empty `P_1` carries the trivial character on `H̃_{-1}`.
pub fn lefschetz_character_bounded(n: usize, bound: usize) -> Result<CharacterTable2> {
    if n > bound {
        return Err(Error::bound("Lefschetz size", n as u128, bound as u128));
    }
    if n == 0 {
        return CharacterTable2::trivial(0, 0);
    }
    let (pp, pairs) = segre_boolean_proper_part(n)?;
    let index: HashMap<(usize, usize), usize> =
        pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let chains = order_complex_chains(&pp);

    let classes = partitions_of(n)?;
    let class_pairs: Vec<(Partition, Partition)> = classes
        .iter()
        .flat_map(|a| classes.iter().map(move |b| (a.clone(), b.clone())))
        .collect();
    let values: BTreeMap<(Partition, Partition), i64> = class_pairs
        .into_par_iter()
        .map(|(mu, lambda)| {
            let (s, w) = (class_representative(&mu), class_representative(&lambda));
            let image: Vec<usize> = pairs
                .iter()
                .map(|&(a, b)| index[&(permute_mask(&s, a), permute_mask(&w, b))])
                .collect();
            // the empty chain, dimension -1
            let mut sum: i64 = -1;
            for (k, level) in chains.iter().enumerate() {
                let fixed = level
                    .iter()
                    .filter(|c| {
                        let pointwise = c.iter().all(|&x| image[x] == x);
                        let mut moved: Vec<usize> = c.iter().map(|&x| image[x]).collect();
                        moved.sort_unstable();
                        let mut orig = c.to_vec();
                        orig.sort_unstable();
                        assert_eq!(
                            moved == orig,
                            pointwise,
                            "a rank-preserving action fixes chains pointwise"
                        );
                        pointwise
                    })
                    .count() as i64;
                sum += if k % 2 == 0 { fixed } else { -fixed };
            }
            let v = if n.is_multiple_of(2) { sum } else { -sum };
            ((mu, lambda), v)
        })
        .collect();
    CharacterTable2::new(n, n, values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::rational_betti_numbers;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn smallest_cases() {
        let t0 = lefschetz_character(0).unwrap();
        assert_eq!(t0.values(), &BTreeMap::from([((p(&[]), p(&[])), 1)]));
        let t1 = lefschetz_character(1).unwrap();
        assert_eq!(t1.values(), &BTreeMap::from([((p(&[1]), p(&[1])), 1)]));
        let t2 = lefschetz_character(2).unwrap();
        assert_eq!(
            t2.values(),
            &BTreeMap::from([
                ((p(&[1, 1]), p(&[1, 1])), 3),
                ((p(&[2]), p(&[1, 1])), -1),
                ((p(&[1, 1]), p(&[2])), -1),
                ((p(&[2]), p(&[2])), -1),
            ])
        );
    }

    #[test]
    fn degree_is_top_betti_number() {
        for (n, w) in [(1, 1), (2, 3), (3, 19), (4, 211)] {
            let t = lefschetz_character(n).unwrap();
            assert_eq!(t.degree(), w);
            let (pp, _) = segre_boolean_proper_part(n).unwrap();
            let b = rational_betti_numbers(&pp);
            assert_eq!(b.get(n as isize - 2), w as usize);
            assert!(b.concentrated_in(n as isize - 2));
        }
    }

    #[test]
    fn bound() {
        assert!(lefschetz_character(5).is_err());
    }

    #[test]
    fn mask_action() {
        assert_eq!(permute_mask(&[1, 2, 0], 0b011), 0b110);
        assert_eq!(permute_mask(&[1, 0], 0b11), 0b11);
    }
}
