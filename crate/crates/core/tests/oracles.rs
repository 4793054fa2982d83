//! Cross-checks between independent computations of the same quantity.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use qsegre::exactalg::QPolynomial;
use qsegre::permstats::{all_permutations, q_binomial, w_by_recurrence, w_polynomial};
use qsegre::poset::{chain_report, GradedPoset, segre_product_indexed, EdgeLabeling, PairLabel};
use qsegre::subspace::{build_segre_bnq, enumerate_subspaces, FiniteField};
use qsegre::symfrob::{
    class_representative, induce_product_character, partitions_of, CharacterTable2,
};

/// `W_n(q)` from its definition, one pair at a time.
fn naive_w(n: usize) -> QPolynomial {
    let perms: Vec<Vec<usize>> = all_permutations(n).iter().map(|p| p.image().to_vec()).collect();
    let inv = |s: &[usize]| {
        (0..s.len())
            .flat_map(|i| (i + 1..s.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| s[i] > s[j])
            .count()
    };
    let mut coeffs = vec![0i64; n * n.saturating_sub(1) + 1];
    for s in &perms {
        for w in &perms {
            let common = (1..n).any(|i| s[i - 1] < s[i] && w[i - 1] < w[i]);
            if !common {
                coeffs[inv(s) + inv(w)] += 1;
            }
        }
    }
    QPolynomial::from_ints(&coeffs)
}

#[test]
fn w_polynomial_three_ways() {
    let rec = w_by_recurrence(6);
    for n in 0..=6 {
        let e = w_polynomial(n).unwrap();
        assert_eq!(e, naive_w(n), "n = {n}");
        assert_eq!(e, rec[n], "n = {n}");
    }
}

#[test]
fn gaussian_binomials_count_rref_matrices() {
    for q in [2u64, 3] {
        let f = FiniteField::of_order(q).unwrap();
        let subs = enumerate_subspaces(4, &f).unwrap();
        for k in 0..=4 {
            let count = subs.iter().filter(|s| s.dim() == k).count();
            let expected = q_binomial(4, k).unwrap().eval_integer(q as i64).unwrap();
            assert_eq!(BigInt::from(count), expected);
        }
    }
    // [4 brack 2]_q = 1 + q + 2q^2 + q^3 + q^4, which is 35 at q = 2
    assert_eq!(q_binomial(4, 2).unwrap(), QPolynomial::from_ints(&[1, 1, 2, 1, 1]));
    assert_eq!(q_binomial(4, 2).unwrap().eval_integer(2).unwrap(), 35.into());
}

#[test]
fn boolean_segre_descending_chains_count_omega() {
    // q = 1: the boolean lattice labeled by the added element
    for n in 1..=4 {
        let b = GradedPoset::boolean_lattice(n);
        let mut l = EdgeLabeling::new();
        for &(x, y) in b.covers() {
            l.insert(x, y, ((x ^ y).trailing_zeros() + 1) as usize);
        }
        let sp = segre_product_indexed(&b, &b);
        let labels: EdgeLabeling<PairLabel> = sp.product_labels(&l, &l).unwrap();
        let r = chain_report(&sp.poset, &labels).unwrap();
        assert_eq!(
            BigInt::from(r.descending_count),
            w_polynomial(n).unwrap().eval_integer(1).unwrap()
        );
    }
}

#[test]
fn segre_descending_chains_at_f3() {
    let s = build_segre_bnq(2, &FiniteField::of_order(3).unwrap()).unwrap();
    let r = chain_report(&s.poset, &s.labeling).unwrap();
    assert_eq!(r.descending_count, 15);
}

fn permute_mask(perm: &[usize], mask: usize) -> usize {
    (0..perm.len())
        .filter(|i| mask >> i & 1 == 1)
        .fold(0, |acc, i| acc | 1 << perm[i])
}

/// Inducing the trivial character of `(S_k × S_{n-k})²` gives the
/// permutation character on rank-`k` pairs of `B_n ∘ B_n`, counted here by
/// fixed points.
#[test]
fn induction_matches_orbit_counting() {
    for n in 1..=4usize {
        for k in 0..=n {
            let t = CharacterTable2::trivial(k, k).unwrap();
            let u = CharacterTable2::trivial(n - k, n - k).unwrap();
            let ind = induce_product_character(&t, &u).unwrap();
            let rank_k: Vec<usize> = (0..1usize << n).filter(|m| m.count_ones() as usize == k).collect();
            let mut fixed = BTreeMap::new();
            for mu in partitions_of(n).unwrap() {
                for la in partitions_of(n).unwrap() {
                    let (s, w) = (class_representative(&mu), class_representative(&la));
                    let a = rank_k.iter().filter(|&&m| permute_mask(&s, m) == m).count();
                    let b = rank_k.iter().filter(|&&m| permute_mask(&w, m) == m).count();
                    fixed.insert((mu.clone(), la.clone()), (a * b) as i64);
                }
            }
            assert_eq!(ind.values(), &fixed, "n = {n}, k = {k}");
        }
    }
}
