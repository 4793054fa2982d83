//! Small finite fields `F_{p^k}` with precomputed operation tables.
//!
//! An element is stored as its index `Σ c_i p^i`, where `c_i` are the
//! coefficients of its residue modulo the defining polynomial. Index 0 is
//! zero and index 1 is one.

use crate::{Error, Result};

/// Largest field order accepted by default.
pub const DEFAULT_FIELD_BOUND: u64 = 16;

pub type Elem = u8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteField {
    p: u32,
    k: u32,
    order: usize,
    /// Monic, ascending coefficients, length `k + 1`.
    modulus: Vec<u32>,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
    inv: Vec<Elem>,
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// `Some((p, k))` when `q = p^k` with `p` prime and `k >= 1`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

// Polynomials over F_p as ascending coefficient vectors without trailing zeros.

fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv_mod_p(a: u32, p: u32) -> u32 {
    (1..p).find(|&b| a * b % p == 1).expect("nonzero residue mod a prime")
}

fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = trim(a.to_vec());
    let dm = m.len() - 1;
    let lead_inv = inv_mod_p(m[dm], p);
    while r.len() > dm {
        let shift = r.len() - 1 - dm;
        let c = r[r.len() - 1] * lead_inv % p;
        for (i, &mi) in m.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p * p - c * mi % p) % p;
        }
        r = trim(r);
    }
    r
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

/// Monic polynomial of degree `deg` whose lower coefficients are the base-`p`
/// digits of `code`.
fn monic_from_code(mut code: u64, deg: u32, p: u32) -> Vec<u32> {
    let mut c = Vec::with_capacity(deg as usize + 1);
    for _ in 0..deg {
        c.push((code % p as u64) as u32);
        code /= p as u64;
    }
    c.push(1);
    c
}

/// Irreducibility by trial division with every monic polynomial of degree
/// `1..=deg/2`.
pub fn is_irreducible(m: &[u32], p: u32) -> bool {
    let deg = (m.len() - 1) as u32;
    for d in 1..=deg / 2 {
        for code in 0..(p as u64).pow(d) {
            if poly_rem(m, &monic_from_code(code, d, p), p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl FiniteField {
    pub fn new(p: u64, k: u32) -> Result<Self> {
        Self::with_bound(p, k, DEFAULT_FIELD_BOUND)
    }

    /// The field of order `q`, which must be a prime power.
    pub fn of_order(q: u64) -> Result<Self> {
        let (p, k) = prime_power(q).ok_or_else(|| {
            Error::InvalidArgument(format!("{q} is not a prime power"))
        })?;
        Self::new(p, k)
    }

    pub fn with_bound(p: u64, k: u32, bound: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::InvalidArgument("extension degree must be >= 1".into()));
        }
        let order = p.checked_pow(k).unwrap_or(u64::MAX);
        if order > bound {
            return Err(Error::bound("field order", order, bound));
        }
        if order > 256 {
            return Err(Error::bound("field order", order, 256u64));
        }
        let p32 = p as u32;
        let modulus = (0..p.pow(k))
            .map(|code| monic_from_code(code, k, p32))
            .find(|m| is_irreducible(m, p32))
            .expect("an irreducible polynomial of every degree exists");

        let order = order as usize;
        let to_poly = |e: usize| -> Vec<u32> {
            let mut c = Vec::with_capacity(k as usize);
            let mut e = e;
            for _ in 0..k {
                c.push((e % p as usize) as u32);
                e /= p as usize;
            }
            trim(c)
        };
        let from_poly = |c: &[u32]| -> usize {
            c.iter().rev().fold(0usize, |acc, &d| acc * p as usize + d as usize)
        };
        let polys: Vec<Vec<u32>> = (0..order).map(to_poly).collect();

        let mut add = vec![0; order * order];
        let mut mul = vec![0; order * order];
        for a in 0..order {
            for b in 0..order {
                let len = polys[a].len().max(polys[b].len());
                let sum: Vec<u32> = (0..len)
                    .map(|i| {
                        (polys[a].get(i).copied().unwrap_or(0) + polys[b].get(i).copied().unwrap_or(0))
                            % p32
                    })
                    .collect();
                add[a * order + b] = from_poly(&sum) as Elem;
                let prod = poly_rem(&poly_mul(&polys[a], &polys[b], p32), &modulus, p32);
                mul[a * order + b] = from_poly(&prod) as Elem;
            }
        }
        let neg = (0..order)
            .map(|a| (0..order).find(|&b| add[a * order + b] == 0).expect("additive inverse") as Elem)
            .collect();
        let inv = (0..order)
            .map(|a| {
                if a == 0 {
                    0
                } else {
                    (1..order)
                        .find(|&b| mul[a * order + b] == 1)
                        .expect("modulus is irreducible") as Elem
                }
            })
            .collect();

        let field = FiniteField {
            p: p32,
            k,
            order,
            modulus,
            add,
            mul,
            neg,
            inv,
        };
        for a in 1..order {
            assert_eq!(
                field.pow(a as Elem, order as u64 - 1),
                1,
                "multiplicative group has order q - 1"
            );
        }
        Ok(field)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    /// Ascending coefficients of the monic defining polynomial.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.order).map(|e| e as Elem)
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a as usize * self.order + b as usize]
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a as usize * self.order + b as usize]
    }

    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a as usize]
    }

    /// `None` for zero.
    pub fn inv(&self, a: Elem) -> Option<Elem> {
        (a != 0).then(|| self.inv[a as usize])
    }

    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let (mut base, mut acc) = (a, 1);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
}
