use std::collections::{BTreeSet, HashMap};
use std::fmt;

use itertools::Itertools;

use super::field::{Elem, FiniteField};
use crate::poset::{segre_product_indexed, EdgeLabeling, GradedPoset, PairLabel};
use crate::{Error, Result};

/// Largest number of lattice elements built by default.
pub const DEFAULT_SUBSPACE_BOUND: u128 = 100_000;

/// A subspace of `F_q^n`, stored as its reduced row-echelon basis.
///
/// Pivots are the leftmost nonzero entries, so equal subspaces have equal
/// representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vec<Elem>>,
}

/// Index in `1..=n` of the rightmost nonzero coordinate of an atom.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AtomLabel(pub usize);

impl AtomLabel {
    pub fn value(self) -> usize {
        self.0
    }
}

fn rightmost_nonzero(v: &[Elem]) -> Option<usize> {
    v.iter().rposition(|&c| c != 0)
}

fn check_vector(field: &FiniteField, ambient: usize, v: &[Elem]) -> Result<()> {
    if v.len() != ambient {
        return Err(Error::InvalidArgument(format!(
            "vector of length {} in a space of dimension {ambient}",
            v.len()
        )));
    }
    if let Some(&c) = v.iter().find(|&&c| c as usize >= field.order()) {
        return Err(Error::InvalidArgument(format!(
            "{c} is not an element of F_{}",
            field.order()
        )));
    }
    Ok(())
}

/// `a += c * b`.
fn add_multiple(field: &FiniteField, a: &mut [Elem], c: Elem, b: &[Elem]) {
    for (x, &y) in a.iter_mut().zip(b) {
        *x = field.add(*x, field.mul(c, y));
    }
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        let rows = (0..ambient)
            .map(|i| (0..ambient).map(|j| Elem::from(i == j)).collect())
            .collect();
        Subspace { ambient, rows }
    }

    /// The span of `vectors`, brought to reduced row-echelon form.
    pub fn span(field: &FiniteField, ambient: usize, vectors: &[Vec<Elem>]) -> Result<Self> {
        for v in vectors {
            check_vector(field, ambient, v)?;
        }
        let mut m: Vec<Vec<Elem>> = vectors.to_vec();
        let mut rank = 0;
        for col in 0..ambient {
            let Some(r) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
                continue;
            };
            m.swap(rank, r);
            let inv = field.inv(m[rank][col]).expect("pivot is nonzero");
            for x in m[rank].iter_mut() {
                *x = field.mul(inv, *x);
            }
            let pivot_row = m[rank].clone();
            for (i, row) in m.iter_mut().enumerate() {
                if i != rank && row[col] != 0 {
                    let c = field.neg(row[col]);
                    add_multiple(field, row, c, &pivot_row);
                }
            }
            rank += 1;
        }
        m.truncate(rank);
        Ok(Subspace { ambient, rows: m })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Elem>] {
        &self.rows
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows
            .iter()
            .map(|r| r.iter().position(|&c| c != 0).expect("rows are nonzero"))
            .collect()
    }

    pub fn contains_vector(&self, field: &FiniteField, v: &[Elem]) -> bool {
        if v.len() != self.ambient {
            return false;
        }
        let mut w = v.to_vec();
        for (row, p) in self.rows.iter().zip(self.pivots()) {
            if w[p] != 0 {
                let c = field.neg(w[p]);
                add_multiple(field, &mut w, c, row);
            }
        }
        w.iter().all(|&c| c == 0)
    }

    pub fn is_subspace_of(&self, field: &FiniteField, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.rows.iter().all(|r| other.contains_vector(field, r))
    }

    pub fn join(&self, field: &FiniteField, other: &Subspace) -> Result<Subspace> {
        let mut vs = self.rows.clone();
        vs.extend(other.rows.iter().cloned());
        Subspace::span(field, self.ambient, &vs)
    }

    /// One spanning vector per one-dimensional subspace, obtained from the
    /// coefficient vectors whose last nonzero entry is 1.
    pub fn atom_vectors(&self, field: &FiniteField) -> Vec<Vec<Elem>> {
        let d = self.dim();
        let q = field.order();
        let mut out = Vec::new();
        for last in 0..d {
            for free in 0..q.pow(last as u32) {
                let mut v = self.rows[last].clone();
                let mut code = free;
                for row in &self.rows[..last] {
                    add_multiple(field, &mut v, (code % q) as Elem, row);
                    code /= q;
                }
                out.push(v);
            }
        }
        out
    }

    /// `f(A(X))` as a bitmask: bit `i - 1` is set when some atom of `X` has
    /// label `i`.
    pub fn atom_label_set(&self, field: &FiniteField) -> u64 {
        self.atom_vectors(field)
            .iter()
            .map(|v| 1u64 << rightmost_nonzero(v).expect("atom vectors are nonzero"))
            .fold(0, |a, b| a | b)
    }
}

impl fmt::Display for Subspace {
    /// Rows of the echelon basis, e.g. `<101,012>`; `<>` for the zero space.
    /// Entries above 9 are written in base 36.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&c| char::from_digit(c as u32, 36).unwrap_or('?'))
                    .collect::<String>()
            })
            .join(",");
        write!(f, "<{rows}>")
    }
}

/// `f(X)` for a one-dimensional subspace.
pub fn atom_label(a: &Subspace) -> Result<AtomLabel> {
    if a.dim() != 1 {
        return Err(Error::InvalidArgument(format!(
            "atom label needs a one-dimensional subspace, got dimension {}",
            a.dim()
        )));
    }
    Ok(AtomLabel(
        rightmost_nonzero(&a.rows[0]).expect("rows are nonzero") + 1,
    ))
}

/// The unique element of `f(A(Y)) \ f(A(X))` for a cover `X ⋖ Y`.
pub fn edge_label(field: &FiniteField, x: &Subspace, y: &Subspace) -> Result<usize> {
    if y.dim() != x.dim() + 1 || !x.is_subspace_of(field, y) {
        return Err(Error::InvalidArgument(format!("{x} is not covered by {y}")));
    }
    label_from_sets(x.atom_label_set(field), y.atom_label_set(field))
}

fn label_from_sets(below: u64, above: u64) -> Result<usize> {
    let diff = above & !below;
    if diff.count_ones() != 1 {
        return Err(Error::InvalidArgument(format!(
            "label sets {below:#b} and {above:#b} differ in {} places",
            diff.count_ones()
        )));
    }
    Ok(diff.trailing_zeros() as usize + 1)
}

/// `Σ_k [n brack k]_q` by the q-Pascal rule, saturating on overflow.
pub fn subspace_count(n: usize, q: u128) -> u128 {
    let mut row = vec![1u128];
    for m in 1..=n {
        let mut next = vec![1u128; m + 1];
        for (k, slot) in next.iter_mut().enumerate().take(m).skip(1) {
            let qk = q.checked_pow(k as u32).unwrap_or(u128::MAX);
            *slot = row[k - 1].saturating_add(qk.saturating_mul(row[k]));
        }
        row = next;
    }
    row.iter().fold(0u128, |a, &b| a.saturating_add(b))
}

pub fn enumerate_subspaces(n: usize, field: &FiniteField) -> Result<Vec<Subspace>> {
    enumerate_subspaces_bounded(n, field, DEFAULT_SUBSPACE_BOUND)
}

/// Every subspace of `F_q^n`, rank by rank; within a rank, by pivot columns
/// in lexicographic order and then by the free entries.
pub fn enumerate_subspaces_bounded(
    n: usize,
    field: &FiniteField,
    bound: u128,
) -> Result<Vec<Subspace>> {
    let q = field.order();
    let total = subspace_count(n, q as u128);
    if total > bound {
        return Err(Error::bound("number of subspaces", total, bound));
    }
    let mut out = Vec::with_capacity(total as usize);
    for k in 0..=n {
        for pivots in (0..n).combinations(k) {
            // free positions: (row, column) right of the row's pivot, off the pivot columns
            let free: Vec<(usize, usize)> = pivots
                .iter()
                .enumerate()
                .flat_map(|(r, &p)| {
                    (p + 1..n)
                        .filter(|c| !pivots.contains(c))
                        .map(move |c| (r, c))
                })
                .collect();
            for code in 0..q.pow(free.len() as u32) {
                let mut rows = vec![vec![0 as Elem; n]; k];
                for (r, &p) in pivots.iter().enumerate() {
                    rows[r][p] = 1;
                }
                let mut c = code;
                for &(r, col) in &free {
                    rows[r][col] = (c % q) as Elem;
                    c /= q;
                }
                out.push(Subspace { ambient: n, rows });
            }
        }
    }
    Ok(out)
}

/// `B_n(q)` with its edge labeling and the subspace behind each element.
#[derive(Clone, Debug)]
pub struct SubspaceLattice {
    pub poset: GradedPoset,
    pub labeling: EdgeLabeling<usize>,
    pub subspaces: Vec<Subspace>,
}

pub fn build_bnq(n: usize, field: &FiniteField) -> Result<SubspaceLattice> {
    build_bnq_bounded(n, field, DEFAULT_SUBSPACE_BOUND)
}

pub fn build_bnq_bounded(n: usize, field: &FiniteField, bound: u128) -> Result<SubspaceLattice> {
    if n >= 64 {
        return Err(Error::bound("ambient dimension", n as u128, 63u128));
    }
    let subspaces = enumerate_subspaces_bounded(n, field, bound)?;
    let index: HashMap<&Subspace, usize> =
        subspaces.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let label_sets: Vec<u64> = subspaces.iter().map(|s| s.atom_label_set(field)).collect();
    let ambient_atoms = Subspace::full(n).atom_vectors(field);

    let mut labeling = EdgeLabeling::new();
    let mut covers = Vec::new();
    for (i, x) in subspaces.iter().enumerate() {
        let mut above = BTreeSet::new();
        for a in &ambient_atoms {
            if x.contains_vector(field, a) {
                continue;
            }
            let mut vs = x.rows.clone();
            vs.push(a.clone());
            let y = Subspace::span(field, n, &vs)?;
            above.insert(index[&y]);
        }
        for j in above {
            labeling.insert(i, j, label_from_sets(label_sets[i], label_sets[j])?);
            covers.push((i, j));
        }
    }
    let names = subspaces.iter().map(|s| s.to_string()).collect();
    let ranks = subspaces.iter().map(Subspace::dim).collect();
    let poset = GradedPoset::new(names, ranks, covers)?;
    Ok(SubspaceLattice {
        poset,
        labeling,
        subspaces,
    })
}

/// `B_n(q) ∘ B_n(q)` with the componentwise pair labeling.
#[derive(Clone, Debug)]
pub struct SegreSubspaceLattice {
    pub poset: GradedPoset,
    pub labeling: EdgeLabeling<PairLabel>,
    /// Indices into `factor` for each element.
    pub pairs: Vec<(usize, usize)>,
    pub factor: SubspaceLattice,
}

pub fn build_segre_bnq(n: usize, field: &FiniteField) -> Result<SegreSubspaceLattice> {
    build_segre_bnq_bounded(n, field, DEFAULT_SUBSPACE_BOUND)
}

pub fn build_segre_bnq_bounded(
    n: usize,
    field: &FiniteField,
    bound: u128,
) -> Result<SegreSubspaceLattice> {
    let factor = build_bnq_bounded(n, field, bound)?;
    let size: u128 = factor
        .poset
        .rank_sizes()
        .iter()
        .map(|&s| (s as u128) * (s as u128))
        .sum();
    if size > bound {
        return Err(Error::bound("Segre product size", size, bound));
    }
    let sp = segre_product_indexed(&factor.poset, &factor.poset);
    let labeling = sp.product_labels(&factor.labeling, &factor.labeling)?;
    Ok(SegreSubspaceLattice {
        poset: sp.poset,
        labeling,
        pairs: sp.pairs,
        factor,
    })
}
