//! Finite graded posets given by explicit cover relations.
//!
//! Elements are dense ids `0..len()`. The order relation is answered from a
//! precomputed down-set bitset per element.

mod homology;
mod json;
mod labeling;
mod mobius;

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::{Error, Result};

pub use homology::{rank_over_rationals, rational_betti_numbers, ReducedBetti};
pub use json::PosetJson;
pub use labeling::{
    chain_report, check_el_labeling, ChainReport, EdgeLabeling, ElReport, ElViolation, Label,
    PairLabel, ViolationKind,
};
pub use mobius::{mobius_number, order_complex_chains, order_complex_face_counts, reduced_euler_characteristic};

#[derive(Clone, Debug)]
pub struct GradedPoset {
    names: Vec<String>,
    ranks: Vec<usize>,
    covers: Vec<(usize, usize)>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    below: Vec<FixedBitSet>,
    bottom: Option<usize>,
    top: Option<usize>,
}

impl GradedPoset {
    /// Builds a poset from names, ranks and cover pairs `(lower, upper)`.
    ///
    /// Every cover must raise the rank by exactly one; that also rules out
    /// cycles. Duplicate covers are rejected.
    pub fn new(names: Vec<String>, ranks: Vec<usize>, covers: Vec<(usize, usize)>) -> Result<Self> {
        let n = names.len();
        if ranks.len() != n {
            return Err(Error::InvalidPoset(format!(
                "{n} names but {} ranks",
                ranks.len()
            )));
        }
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        let mut covers = covers;
        covers.sort_unstable();
        for w in covers.windows(2) {
            if w[0] == w[1] {
                return Err(Error::InvalidPoset(format!("duplicate cover {:?}", w[0])));
            }
        }
        for &(a, b) in &covers {
            if a >= n || b >= n {
                return Err(Error::InvalidPoset(format!("cover ({a}, {b}) out of range")));
            }
            if ranks[b] != ranks[a] + 1 {
                return Err(Error::InvalidPoset(format!(
                    "cover ({a}, {b}) goes from rank {} to rank {}",
                    ranks[a], ranks[b]
                )));
            }
            up[a].push(b);
            down[b].push(a);
        }

        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&x| ranks[x]);
        let mut below = vec![FixedBitSet::with_capacity(n); n];
        for &x in &order {
            let mut set = FixedBitSet::with_capacity(n);
            set.insert(x);
            for &y in &down[x] {
                set.union_with(&below[y]);
            }
            below[x] = set;
        }

        let mut poset = GradedPoset {
            names,
            ranks,
            covers,
            up,
            down,
            below,
            bottom: None,
            top: None,
        };
        poset.bottom = poset.find_bottom();
        poset.top = poset.find_top();
        Ok(poset)
    }

    fn find_bottom(&self) -> Option<usize> {
        let min = *self.ranks.iter().min()?;
        let mut candidates = (0..self.len()).filter(|&x| self.ranks[x] == min);
        let b = candidates.next()?;
        if candidates.next().is_some() {
            return None;
        }
        (0..self.len()).all(|x| self.leq(b, x)).then_some(b)
    }

    fn find_top(&self) -> Option<usize> {
        let max = *self.ranks.iter().max()?;
        let mut candidates = (0..self.len()).filter(|&x| self.ranks[x] == max);
        let t = candidates.next()?;
        if candidates.next().is_some() {
            return None;
        }
        (self.below[t].count_ones(..) == self.len()).then_some(t)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn rank(&self, x: usize) -> usize {
        self.ranks[x]
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.up[x]
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.down[x]
    }

    pub fn is_cover(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(&b)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.below[b].contains(a)
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    /// Elements strictly below `x`.
    pub fn strictly_below(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        self.below[x].ones().filter(move |&y| y != x)
    }

    pub fn bottom(&self) -> Option<usize> {
        self.bottom
    }

    pub fn top(&self) -> Option<usize> {
        self.top
    }

    pub fn has_bottom(&self) -> bool {
        self.bottom.is_some()
    }

    pub fn has_top(&self) -> bool {
        self.top.is_some()
    }

    pub(crate) fn bounds(&self) -> Result<(usize, usize)> {
        let b = self.bottom.ok_or(Error::MissingBound("bottom element"))?;
        let t = self.top.ok_or(Error::MissingBound("top element"))?;
        Ok((b, t))
    }

    pub fn max_rank(&self) -> Option<usize> {
        self.ranks.iter().copied().max()
    }

    /// Number of elements at each rank `0..=max_rank`.
    pub fn rank_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.max_rank().map_or(0, |r| r + 1)];
        for &r in &self.ranks {
            sizes[r] += 1;
        }
        sizes
    }

    pub fn elements_of_rank(&self, r: usize) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.ranks[x] == r).collect()
    }

    /// Element ids sorted by rank (ties by id).
    pub fn rank_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&x| (self.ranks[x], x));
        order
    }

    /// Induced subposet on `keep`, in the given order, with covers restricted.
    ///
    /// Only valid when `keep` is convex enough that covers of the subposet
    /// are covers of `self` (true for removing bounds).
    fn restrict(&self, keep: &[usize]) -> Result<GradedPoset> {
        let mut index = vec![usize::MAX; self.len()];
        for (i, &x) in keep.iter().enumerate() {
            index[x] = i;
        }
        let covers = self
            .covers
            .iter()
            .filter(|&&(a, b)| index[a] != usize::MAX && index[b] != usize::MAX)
            .map(|&(a, b)| (index[a], index[b]))
            .collect();
        GradedPoset::new(
            keep.iter().map(|&x| self.names[x].clone()).collect(),
            keep.iter().map(|&x| self.ranks[x]).collect(),
            covers,
        )
    }

    /// The subset lattice of `[n]`; element id is the subset's bitmask.
    pub fn boolean_lattice(n: usize) -> GradedPoset {
        let size = 1usize << n;
        let names = (0..size)
            .map(|m| {
                let items: Vec<String> = (0..n)
                    .filter(|i| m >> i & 1 == 1)
                    .map(|i| (i + 1).to_string())
                    .collect();
                format!("{{{}}}", items.join(","))
            })
            .collect();
        let ranks = (0..size).map(|m: usize| m.count_ones() as usize).collect();
        let covers = (0..size)
            .flat_map(|m| {
                (0..n)
                    .filter(move |i| m >> i & 1 == 0)
                    .map(move |i| (m, m | 1 << i))
            })
            .collect();
        GradedPoset::new(names, ranks, covers).expect("boolean lattice is graded")
    }

    /// A chain `0 < 1 < ... < len-1`.
    pub fn chain(len: usize) -> GradedPoset {
        GradedPoset::new(
            (0..len).map(|i| i.to_string()).collect(),
            (0..len).collect(),
            (1..len).map(|i| (i - 1, i)).collect(),
        )
        .expect("chain is graded")
    }

    /// `k` incomparable elements, all of rank 1.
    pub fn antichain(k: usize) -> GradedPoset {
        GradedPoset::new((0..k).map(|i| i.to_string()).collect(), vec![1; k], Vec::new())
            .expect("antichain is graded")
    }

    /// Adjoins a new bottom and top; ranks are shifted so the new bottom has
    /// rank 0. All minimal elements must share a rank and likewise all
    /// maximal elements.
    pub fn with_bounds(&self) -> Result<GradedPoset> {
        let n = self.len();
        let minimal: Vec<usize> = (0..n).filter(|&x| self.down[x].is_empty()).collect();
        let maximal: Vec<usize> = (0..n).filter(|&x| self.up[x].is_empty()).collect();
        let min_rank = minimal.iter().map(|&x| self.ranks[x]).min().unwrap_or(0);
        let max_rank = maximal.iter().map(|&x| self.ranks[x]).max().unwrap_or(0);
        if minimal.iter().any(|&x| self.ranks[x] != min_rank)
            || maximal.iter().any(|&x| self.ranks[x] != max_rank)
        {
            return Err(Error::InvalidPoset(
                "adjoining bounds needs all minimal (maximal) elements at one rank".into(),
            ));
        }
        let mut names = self.names.clone();
        let mut ranks: Vec<usize> = self.ranks.iter().map(|r| r - min_rank + 1).collect();
        let mut covers = self.covers.clone();
        let (b, t) = (n, n + 1);
        names.push("0^".into());
        names.push("1^".into());
        ranks.push(0);
        ranks.push(if n == 0 { 1 } else { max_rank - min_rank + 2 });
        covers.extend(minimal.iter().map(|&x| (b, x)));
        covers.extend(maximal.iter().map(|&x| (x, t)));
        if n == 0 {
            covers.push((b, t));
        }
        GradedPoset::new(names, ranks, covers)
    }
}

/// The poset with its bottom and top removed.
pub fn proper_part(p: &GradedPoset) -> Result<GradedPoset> {
    let (b, t) = p.bounds()?;
    let keep: Vec<usize> = (0..p.len()).filter(|&x| x != b && x != t).collect();
    p.restrict(&keep)
}

/// Segre product together with the pair `(a, b)` behind each element.
#[derive(Clone, Debug)]
pub struct SegreProduct {
    pub poset: GradedPoset,
    pub pairs: Vec<(usize, usize)>,
}

/// Pairs of equal rank, ordered componentwise. Covers are exactly the pairs
/// of covers; the rank of `(a, b)` is the rank of `a`.
pub fn segre_product(p: &GradedPoset, q: &GradedPoset) -> GradedPoset {
    segre_product_indexed(p, q).poset
}

pub fn segre_product_indexed(p: &GradedPoset, q: &GradedPoset) -> SegreProduct {
    let mut q_by_rank: HashMap<usize, Vec<usize>> = HashMap::new();
    for y in 0..q.len() {
        q_by_rank.entry(q.rank(y)).or_default().push(y);
    }
    let mut pairs = Vec::new();
    for x in p.rank_order() {
        if let Some(ys) = q_by_rank.get(&p.rank(x)) {
            pairs.extend(ys.iter().map(|&y| (x, y)));
        }
    }
    let index: HashMap<(usize, usize), usize> =
        pairs.iter().enumerate().map(|(i, &pr)| (pr, i)).collect();
    let mut covers = Vec::new();
    for (i, &(a, b)) in pairs.iter().enumerate() {
        for &c in p.upper_covers(a) {
            for &d in q.upper_covers(b) {
                covers.push((i, index[&(c, d)]));
            }
        }
    }
    let names = pairs
        .iter()
        .map(|&(a, b)| format!("({},{})", p.name(a), q.name(b)))
        .collect();
    let ranks = pairs.iter().map(|&(a, _)| p.rank(a)).collect();
    let poset = GradedPoset::new(names, ranks, covers).expect("Segre product is graded");
    SegreProduct { poset, pairs }
}

impl SegreProduct {
    /// Pairs the integer labels of the two factors on every cover, giving
    /// [`PairLabel`]s ordered componentwise.
    pub fn product_labels(
        &self,
        left: &EdgeLabeling<usize>,
        right: &EdgeLabeling<usize>,
    ) -> Result<EdgeLabeling<PairLabel>> {
        let mut out = EdgeLabeling::new();
        for &(i, j) in self.poset.covers() {
            let (a, b) = self.pairs[i];
            let (c, d) = self.pairs[j];
            let l = left.get(a, c).ok_or(Error::UnlabeledCover(a, c))?;
            let m = right.get(b, d).ok_or(Error::UnlabeledCover(b, d))?;
            out.insert(i, j, PairLabel(*l, *m));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_ungraded_covers() {
        let r = GradedPoset::new(vec!["a".into(), "b".into()], vec![0, 2], vec![(0, 1)]);
        assert!(matches!(r, Err(Error::InvalidPoset(_))));
        let r = GradedPoset::new(vec!["a".into()], vec![0, 1], vec![]);
        assert!(r.is_err());
        let r = GradedPoset::new(
            vec!["a".into(), "b".into()],
            vec![0, 1],
            vec![(0, 1), (0, 1)],
        );
        assert!(r.is_err());
    }

    #[test]
    fn boolean_lattice_basics() {
        let b3 = GradedPoset::boolean_lattice(3);
        assert_eq!(b3.rank_sizes(), vec![1, 3, 3, 1]);
        assert_eq!(b3.bottom(), Some(0));
        assert_eq!(b3.top(), Some(7));
        assert!(b3.leq(0b001, 0b011));
        assert!(!b3.leq(0b001, 0b110));
        assert_eq!(b3.name(0b101), "{1,3}");
    }

    #[test]
    fn segre_of_small_boolean_lattices() {
        let b1 = GradedPoset::boolean_lattice(1);
        let s = segre_product(&b1, &b1);
        assert_eq!(s.len(), 2);
        assert_eq!(s.covers(), &[(0, 1)]);

        let b2 = GradedPoset::boolean_lattice(2);
        let s = segre_product(&b2, &b2);
        assert_eq!(s.rank_sizes(), vec![1, 4, 1]);
        let pp = proper_part(&s).unwrap();
        assert_eq!(pp.len(), 4);
        assert!(pp.covers().is_empty());

        let b3 = GradedPoset::boolean_lattice(3);
        let pp = proper_part(&segre_product(&b3, &b3)).unwrap();
        assert_eq!(pp.rank_sizes(), vec![0, 9, 9]);
    }

    #[test]
    fn segre_order_is_componentwise() {
        let b3 = GradedPoset::boolean_lattice(3);
        let sp = segre_product_indexed(&b3, &b3);
        let s = &sp.poset;
        for i in 0..s.len() {
            for j in 0..s.len() {
                let (a, b) = sp.pairs[i];
                let (c, d) = sp.pairs[j];
                assert_eq!(s.leq(i, j), b3.leq(a, c) && b3.leq(b, d));
            }
        }
    }

    #[test]
    fn proper_part_needs_bounds() {
        assert!(proper_part(&GradedPoset::chain(2)).unwrap().is_empty());
        assert_eq!(
            proper_part(&GradedPoset::antichain(2)).unwrap_err(),
            Error::MissingBound("bottom element")
        );
    }

    #[test]
    fn adjoining_bounds() {
        let p = GradedPoset::antichain(3).with_bounds().unwrap();
        assert_eq!(p.rank_sizes(), vec![1, 3, 1]);
        assert!(p.has_bottom() && p.has_top());
        let e = GradedPoset::antichain(0).with_bounds().unwrap();
        assert_eq!(e.len(), 2);
        assert_eq!(e.covers(), &[(0, 1)]);
    }
}
