use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::partition::{partitions_of, z_of, Partition};
use crate::Result;

/// Symmetric function in one alphabet, in the power-sum basis.
pub type SymFun = BTreeMap<Partition, BigRational>;

/// `h_n = Σ_{λ ⊢ n} p_λ / z_λ`.
pub fn h_to_p(n: usize) -> Result<SymFun> {
    Ok(partitions_of(n)?
        .into_iter()
        .map(|l| {
            let c = BigRational::new(BigInt::one(), z_of(&l));
            (l, c)
        })
        .collect())
}

/// `Σ c_{μλ} p_μ(x) p_λ(y)` with no stored zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymFun2 {
    terms: BTreeMap<(Partition, Partition), BigRational>,
}

impl SymFun2 {
    pub fn zero() -> Self {
        SymFun2::default()
    }

    pub fn one() -> Self {
        SymFun2::monomial(Partition::empty(), Partition::empty(), BigRational::one())
    }

    /// `c · p_μ(x) p_λ(y)`.
    pub fn monomial(mu: Partition, lambda: Partition, c: BigRational) -> Self {
        let mut s = SymFun2::zero();
        s.add_term(mu, lambda, c);
        s
    }

    /// `f(x)` viewed in both alphabets.
    pub fn from_x(f: &SymFun) -> Self {
        let mut s = SymFun2::zero();
        for (mu, c) in f {
            s.add_term(mu.clone(), Partition::empty(), c.clone());
        }
        s
    }

    pub fn from_y(f: &SymFun) -> Self {
        let mut s = SymFun2::zero();
        for (l, c) in f {
            s.add_term(Partition::empty(), l.clone(), c.clone());
        }
        s
    }

    /// `h_a(x) h_b(y)`.
    pub fn h_pair(a: usize, b: usize) -> Result<Self> {
        Ok(&SymFun2::from_x(&h_to_p(a)?) * &SymFun2::from_y(&h_to_p(b)?))
    }

    pub fn add_term(&mut self, mu: Partition, lambda: Partition, c: BigRational) {
        let key = (mu, lambda);
        let v = self.terms.remove(&key).unwrap_or_else(BigRational::zero) + c;
        if !v.is_zero() {
            self.terms.insert(key, v);
        }
    }

    pub fn terms(&self) -> &BTreeMap<(Partition, Partition), BigRational> {
        &self.terms
    }

    pub fn coeff(&self, mu: &Partition, lambda: &Partition) -> BigRational {
        self.terms
            .get(&(mu.clone(), lambda.clone()))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return SymFun2::zero();
        }
        SymFun2 {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v * c))
                .collect(),
        }
    }

    /// Coefficients keyed `"μ|λ"`, values as reduced fractions.
    pub fn to_string_map(&self) -> BTreeMap<String, String> {
        self.terms
            .iter()
            .map(|((mu, l), c)| (format!("{mu}|{l}"), c.to_string()))
            .collect()
    }
}

impl Add for &SymFun2 {
    type Output = SymFun2;
    fn add(self, rhs: &SymFun2) -> SymFun2 {
        let mut out = self.clone();
        for ((mu, l), c) in &rhs.terms {
            out.add_term(mu.clone(), l.clone(), c.clone());
        }
        out
    }
}

impl Neg for &SymFun2 {
    type Output = SymFun2;
    fn neg(self) -> SymFun2 {
        SymFun2 {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }
}

impl Sub for &SymFun2 {
    type Output = SymFun2;
    fn sub(self, rhs: &SymFun2) -> SymFun2 {
        self + &(-rhs)
    }
}

impl Mul for &SymFun2 {
    type Output = SymFun2;
    /// `p_μ(x)p_λ(y) · p_ν(x)p_κ(y) = p_{μ∪ν}(x) p_{λ∪κ}(y)`, extended bilinearly.
    fn mul(self, rhs: &SymFun2) -> SymFun2 {
        let mut out = SymFun2::zero();
        for ((mu, l), a) in &self.terms {
            for ((nu, k), b) in &rhs.terms {
                out.add_term(mu.union(nu), l.union(k), a * b);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for SymFun2 {
            type Output = SymFun2;
            fn $m(self, rhs: SymFun2) -> SymFun2 {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Display for SymFun2 {
    /// E.g. `3/4 p[1,1|1,1] - 1/4 p[2|1,1]`; `0` when empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, ((mu, l), c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (i, sign) {
                (0, "+") => {}
                (0, _) => write!(f, "-")?,
                _ => write!(f, " {sign} ")?,
            }
            write!(f, "{} p[{mu}|{l}]", c.abs())?;
        }
        Ok(())
    }
}
