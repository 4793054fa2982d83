use std::collections::BTreeMap;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::partition::{factorial, partitions_of, z_of, Partition};
use super::symfun::SymFun2;
use crate::{Error, Result};

/// Largest `k + m` (and `l + n`) accepted by [`induce_product_character`].
pub const DEFAULT_INDUCTION_BOUND: usize = 5;

/// Cycle type of a permutation of `0..n` given in one-line form.
pub fn cycle_type(perm: &[usize]) -> Partition {
    let mut seen = vec![false; perm.len()];
    let mut parts = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        parts.push(len);
    }
    Partition::from_parts(parts)
}

/// A permutation of cycle type `shape`, cycles on consecutive blocks.
pub fn class_representative(shape: &Partition) -> Vec<usize> {
    let mut perm = Vec::with_capacity(shape.weight());
    let mut start = 0;
    for &len in shape.parts() {
        perm.extend((start + 1..start + len).chain([start]));
        start += len;
    }
    perm
}

/// A class function on `S_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    n: usize,
    values: BTreeMap<Partition, i64>,
}

impl Character {
    pub fn from_fn(n: usize, f: impl Fn(&Partition) -> i64) -> Result<Self> {
        let values = partitions_of(n)?.into_iter().map(|c| (c.clone(), f(&c))).collect();
        Ok(Character { n, values })
    }

    pub fn trivial(n: usize) -> Result<Self> {
        Character::from_fn(n, |_| 1)
    }

    pub fn sign(n: usize) -> Result<Self> {
        Character::from_fn(n, |c| if (n - c.len()).is_multiple_of(2) { 1 } else { -1 })
    }

    /// The irreducible character indexed by `shape`, by the
    /// Murnaghan–Nakayama rule.
    pub fn irreducible(shape: &Partition) -> Result<Self> {
        let len = shape.len();
        let beta: Vec<usize> = shape
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &p)| p + len - 1 - i)
            .collect();
        Character::from_fn(shape.weight(), |c| murnaghan_nakayama(&beta, c.parts()))
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &BTreeMap<Partition, i64> {
        &self.values
    }

    pub fn get(&self, class: &Partition) -> i64 {
        self.values[class]
    }

    pub fn degree(&self) -> i64 {
        self.get(&Partition::from_parts(vec![1; self.n]))
    }

    /// `⟨χ, ψ⟩ = Σ_μ χ(μ)ψ(μ)/z_μ`.
    pub fn inner_product(&self, other: &Character) -> BigRational {
        self.values
            .iter()
            .map(|(c, &v)| BigRational::new(BigInt::from(v * other.get(c)), z_of(c)))
            .sum()
    }
}

/// Signed count of rim-hook removals, on beta-numbers (strictly decreasing).
fn murnaghan_nakayama(beta: &[usize], parts: &[usize]) -> i64 {
    let Some((&r, rest)) = parts.split_first() else {
        return 1;
    };
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let crossed = beta.iter().filter(|&&c| target < c && c < b).count();
        let mut next = beta.to_vec();
        next[i] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let sign = if crossed % 2 == 0 { 1 } else { -1 };
        total += sign * murnaghan_nakayama(&next, rest);
    }
    total
}

/// All irreducible characters of `S_n`, indexed by shapes in the order of
/// [`partitions_of`].
pub fn irreducible_characters(n: usize) -> Result<Vec<(Partition, Character)>> {
    partitions_of(n)?
        .into_iter()
        .map(|s| Character::irreducible(&s).map(|c| (s, c)))
        .collect()
}

/// Row and column orthogonality of a full list of irreducible characters.
pub fn is_orthonormal(chars: &[(Partition, Character)]) -> bool {
    let rows = chars.iter().enumerate().all(|(i, (_, a))| {
        chars.iter().enumerate().all(|(j, (_, b))| {
            let expected = if i == j { BigRational::one() } else { BigRational::zero() };
            a.inner_product(b) == expected
        })
    });
    let classes: Vec<&Partition> = chars
        .first()
        .map(|(_, c)| c.values.keys().collect())
        .unwrap_or_default();
    let columns = classes.iter().all(|&c| {
        classes.iter().all(|&d| {
            let s: i64 = chars.iter().map(|(_, x)| x.get(c) * x.get(d)).sum();
            let expected = if c == d { z_of(c) } else { BigInt::zero() };
            BigInt::from(s) == expected
        })
    });
    rows && columns && chars.len() == classes.len()
}

/// A class function on `S_m × S_n`, one value per pair of cycle types.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable2 {
    m: usize,
    n: usize,
    values: BTreeMap<(Partition, Partition), i64>,
}

impl CharacterTable2 {
    pub fn new(m: usize, n: usize, values: BTreeMap<(Partition, Partition), i64>) -> Result<Self> {
        let expected = partitions_of(m)?.len() * partitions_of(n)?.len();
        let ok = values.len() == expected
            && values.keys().all(|(a, b)| a.weight() == m && b.weight() == n);
        if !ok {
            return Err(Error::InvalidArgument(format!(
                "a class function on S_{m} x S_{n} needs exactly one value per class pair"
            )));
        }
        Ok(CharacterTable2 { m, n, values })
    }

    pub fn from_fn(m: usize, n: usize, f: impl Fn(&Partition, &Partition) -> i64) -> Result<Self> {
        let mut values = BTreeMap::new();
        for a in partitions_of(m)? {
            for b in partitions_of(n)? {
                let v = f(&a, &b);
                values.insert((a.clone(), b), v);
            }
        }
        Ok(CharacterTable2 { m, n, values })
    }

    pub fn trivial(m: usize, n: usize) -> Result<Self> {
        CharacterTable2::from_fn(m, n, |_, _| 1)
    }

    /// `(σ, ω) ↦ χ(σ) ψ(ω)`.
    pub fn outer(chi: &Character, psi: &Character) -> Self {
        CharacterTable2::from_fn(chi.size(), psi.size(), |a, b| chi.get(a) * psi.get(b))
            .expect("sizes come from existing characters")
    }

    pub fn sizes(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn values(&self) -> &BTreeMap<(Partition, Partition), i64> {
        &self.values
    }

    pub fn get(&self, mu: &Partition, lambda: &Partition) -> i64 {
        self.values[&(mu.clone(), lambda.clone())]
    }

    /// Value at the identity.
    pub fn degree(&self) -> i64 {
        self.get(
            &Partition::from_parts(vec![1; self.m]),
            &Partition::from_parts(vec![1; self.n]),
        )
    }

    /// `a·self + b·other`.
    pub fn combine(&self, a: i64, other: &CharacterTable2, b: i64) -> Result<Self> {
        if self.sizes() != other.sizes() {
            return Err(Error::InvalidArgument("class functions on different groups".into()));
        }
        CharacterTable2::from_fn(self.m, self.n, |x, y| {
            a * self.get(x, y) + b * other.get(x, y)
        })
    }

    /// Values keyed `"μ|λ"`.
    pub fn to_string_map(&self) -> BTreeMap<String, i64> {
        self.values
            .iter()
            .map(|((a, b), &v)| (format!("{a}|{b}"), v))
            .collect()
    }
}

/// `ch(χ) = Σ z_μ⁻¹ z_λ⁻¹ χ(μ,λ) p_μ(x) p_λ(y)`.
pub fn product_frobenius(t: &CharacterTable2) -> SymFun2 {
    let mut s = SymFun2::zero();
    for ((mu, l), &v) in &t.values {
        let c = BigRational::new(BigInt::from(v), z_of(mu) * z_of(l));
        s.add_term(mu.clone(), l.clone(), c);
    }
    s
}

/// For each class `μ ⊢ k+m`, the number of `x ∈ S_{k+m}` conjugating a
/// representative of `μ` into `S_k × S_m`, split by the two cycle types of
/// the conjugate.
fn young_conjugation_counts(k: usize, m: usize) -> Result<BTreeMap<Partition, BTreeMap<(Partition, Partition), u64>>> {
    let total = k + m;
    let mut out = BTreeMap::new();
    for class in partitions_of(total)? {
        let g = class_representative(&class);
        let mut counts: BTreeMap<(Partition, Partition), u64> = BTreeMap::new();
        for x in (0..total).permutations(total) {
            // c = x g x⁻¹ sends x(i) to x(g(i))
            let mut c = vec![0; total];
            for i in 0..total {
                c[x[i]] = x[g[i]];
            }
            if c[..k].iter().any(|&j| j >= k) {
                continue;
            }
            let left = cycle_type(&c[..k]);
            let right: Vec<usize> = c[k..].iter().map(|&j| j - k).collect();
            *counts.entry((left, cycle_type(&right))).or_default() += 1;
        }
        out.insert(class, counts);
    }
    Ok(out)
}

pub fn induce_product_character(t: &CharacterTable2, u: &CharacterTable2) -> Result<CharacterTable2> {
    induce_product_character_bounded(t, u, DEFAULT_INDUCTION_BOUND)
}

/// The induction product `ψ∘φ`: `t ⊗ u` on `(S_k × S_l) × (S_m × S_n)`,
/// induced to `S_{k+m} × S_{l+n}` by averaging the inflated character over
/// conjugates by the whole group.
pub fn induce_product_character_bounded(
    t: &CharacterTable2,
    u: &CharacterTable2,
    bound: usize,
) -> Result<CharacterTable2> {
    let (k, l) = t.sizes();
    let (m, n) = u.sizes();
    for size in [k + m, l + n] {
        if size > bound {
            return Err(Error::bound("induction size", size as u128, bound as u128));
        }
    }
    let left = young_conjugation_counts(k, m)?;
    let right = young_conjugation_counts(l, n)?;
    let order = factorial(k) * factorial(m) * factorial(l) * factorial(n);
    let mut values = BTreeMap::new();
    for (mu, lc) in &left {
        for (lambda, rc) in &right {
            let mut sum = BigInt::zero();
            for ((a, b), &c1) in lc {
                for ((g, d), &c2) in rc {
                    sum += BigInt::from(c1) * BigInt::from(c2) * t.get(a, g) * u.get(b, d);
                }
            }
            let v = BigRational::new(sum, order.clone());
            if !v.is_integer() {
                return Err(Error::InvalidArgument(format!(
                    "induced value {v} at ({mu}|{lambda}) is not an integer"
                )));
            }
            let v = v.to_integer().to_i64().ok_or_else(|| {
                Error::InvalidArgument("induced character value out of range".into())
            })?;
            values.insert((mu.clone(), lambda.clone()), v);
        }
    }
    CharacterTable2::new(k + m, l + n, values)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn cycle_types_and_representatives() {
        assert_eq!(cycle_type(&[1, 2, 0, 4, 3]), p(&[3, 2]));
        assert_eq!(cycle_type(&[]), Partition::empty());
        for n in 0..=6 {
            for c in partitions_of(n).unwrap() {
                assert_eq!(cycle_type(&class_representative(&c)), c);
            }
        }
    }

    #[test]
    fn small_character_tables() {
        let s3 = irreducible_characters(3).unwrap();
        let by_shape: BTreeMap<_, _> = s3.iter().cloned().collect();
        let std = &by_shape[&p(&[2, 1])];
        assert_eq!(std.get(&p(&[1, 1, 1])), 2);
        assert_eq!(std.get(&p(&[2, 1])), 0);
        assert_eq!(std.get(&p(&[3])), -1);
        assert_eq!(by_shape[&p(&[1, 1, 1])], Character::sign(3).unwrap());
        assert_eq!(by_shape[&p(&[3])], Character::trivial(3).unwrap());
        let s4 = irreducible_characters(4).unwrap();
        let degrees: Vec<i64> = s4.iter().map(|(_, c)| c.degree()).collect();
        assert_eq!(degrees, vec![1, 3, 2, 3, 1]);
    }

    #[test]
    fn orthogonality() {
        for n in 0..=7 {
            assert!(is_orthonormal(&irreducible_characters(n).unwrap()), "n = {n}");
        }
        let mut broken = irreducible_characters(3).unwrap();
        broken.pop();
        assert!(!is_orthonormal(&broken));
    }

    #[test]
    fn degrees_squared_sum_to_group_order() {
        for n in 0..=7 {
            let s: i64 = irreducible_characters(n)
                .unwrap()
                .iter()
                .map(|(_, c)| c.degree().pow(2))
                .sum();
            assert_eq!(BigInt::from(s), factorial(n));
        }
    }

    #[test]
    fn frobenius_examples() {
        let t = CharacterTable2::trivial(1, 1).unwrap();
        assert_eq!(
            product_frobenius(&t),
            SymFun2::monomial(p(&[1]), p(&[1]), r(1, 1))
        );
        let t = CharacterTable2::trivial(2, 2).unwrap();
        assert_eq!(product_frobenius(&t), SymFun2::h_pair(2, 2).unwrap());
        let vals = BTreeMap::from([
            ((p(&[1, 1]), p(&[1, 1])), 3),
            ((p(&[2]), p(&[1, 1])), -1),
            ((p(&[1, 1]), p(&[2])), -1),
            ((p(&[2]), p(&[2])), -1),
        ]);
        let ch = product_frobenius(&CharacterTable2::new(2, 2, vals).unwrap());
        assert_eq!(ch.coeff(&p(&[1, 1]), &p(&[1, 1])), r(3, 4));
        assert_eq!(ch.coeff(&p(&[2]), &p(&[1, 1])), r(-1, 4));
        assert_eq!(ch.coeff(&p(&[1, 1]), &p(&[2])), r(-1, 4));
        assert_eq!(ch.coeff(&p(&[2]), &p(&[2])), r(-1, 4));
    }

    #[test]
    fn table_validation() {
        assert!(CharacterTable2::new(1, 1, BTreeMap::new()).is_err());
        let t = CharacterTable2::trivial(2, 1).unwrap();
        assert_eq!(t.to_string_map()["2|1"], 1);
        assert!(t.combine(1, &CharacterTable2::trivial(1, 2).unwrap(), 1).is_err());
    }

    #[test]
    fn inducing_trivial_characters() {
        let one = CharacterTable2::trivial(1, 1).unwrap();
        let ind = induce_product_character(&one, &one).unwrap();
        let expected = BTreeMap::from([
            ((p(&[1, 1]), p(&[1, 1])), 4),
            ((p(&[2]), p(&[1, 1])), 0),
            ((p(&[1, 1]), p(&[2])), 0),
            ((p(&[2]), p(&[2])), 0),
        ]);
        assert_eq!(ind.values(), &expected);
    }

    #[test]
    fn induction_scales_degree_by_index() {
        let sign = Character::sign(2).unwrap();
        let t = CharacterTable2::outer(&sign, &Character::trivial(1).unwrap());
        let u = CharacterTable2::outer(&Character::trivial(1).unwrap(), &sign);
        let ind = induce_product_character(&t, &u).unwrap();
        assert_eq!(ind.sizes(), (3, 3));
        // [S_3 : S_2 × S_1]^2 = 9
        assert_eq!(ind.degree(), 9 * t.degree() * u.degree());
        assert!(induce_product_character(
            &CharacterTable2::trivial(3, 1).unwrap(),
            &CharacterTable2::trivial(3, 1).unwrap()
        )
        .is_err());
    }
}
