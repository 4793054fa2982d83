use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Largest size accepted by [`partitions_of`].
pub const MAX_PARTITION_SIZE: usize = 12;

/// Weakly decreasing positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidArgument("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!(
                "partition parts must be weakly decreasing: {parts:?}"
            )));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts and drops zeros.
    pub fn from_parts(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        Partition(
            self.0
                .iter()
                .merge_by(other.0.iter(), |a, b| a >= b)
                .copied()
                .collect(),
        )
    }

    /// `part -> multiplicity`.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        self.0.iter().copied().counts().into_iter().collect()
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    /// Comma-separated parts; the empty partition renders as the empty string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.iter().join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition part {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n`, in reverse lexicographic order (`4, 31, 22, 211, 1111`).
pub fn partitions_of(n: usize) -> Result<Vec<Partition>> {
    if n > MAX_PARTITION_SIZE {
        return Err(Error::bound("partition size", n as u128, MAX_PARTITION_SIZE as u128));
    }
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    Ok(out)
}

/// `z_λ = Π_i i^{m_i} m_i!`, the order of the centralizer of a permutation
/// of cycle type `λ`.
pub fn z_of(l: &Partition) -> BigInt {
    l.multiplicities()
        .into_iter()
        .fold(BigInt::from(1), |acc, (i, m)| {
            let fact: BigInt = (1..=m).map(BigInt::from).product();
            acc * BigInt::from(i).pow(m as u32) * fact
        })
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn enumeration() {
        assert_eq!(partitions_of(0).unwrap(), vec![Partition::empty()]);
        assert_eq!(
            partitions_of(4).unwrap(),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
        let counts: Vec<usize> = (0..=12).map(|n| partitions_of(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
        assert!(partitions_of(13).is_err());
    }

    #[test]
    fn centralizer_orders() {
        assert_eq!(z_of(&p(&[1, 1])), 2.into());
        assert_eq!(z_of(&p(&[2])), 2.into());
        assert_eq!(z_of(&p(&[2, 1])), 2.into());
        assert_eq!(z_of(&Partition::empty()), 1.into());
        // class sizes n!/z_λ add up to n!
        for n in 0..=8 {
            let total: BigInt = partitions_of(n)
                .unwrap()
                .iter()
                .map(|l| factorial(n) / z_of(l))
                .sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn validation_and_parsing() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(Partition::from_parts(vec![1, 3, 0, 2]), p(&[3, 2, 1]));
        assert_eq!("2,1,1".parse::<Partition>().unwrap(), p(&[2, 1, 1]));
        assert_eq!("(3)".parse::<Partition>().unwrap(), p(&[3]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,x".parse::<Partition>().is_err());
        assert_eq!(p(&[2, 1, 1]).to_string(), "2,1,1");
        assert_eq!(p(&[3, 1]).union(&p(&[2, 1])), p(&[3, 2, 1, 1]));
    }
}
