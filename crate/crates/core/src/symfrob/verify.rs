use num_rational::BigRational;
use num_traits::One;

use super::characters::{
    induce_product_character_bounded, irreducible_characters, product_frobenius, CharacterTable2,
    DEFAULT_INDUCTION_BOUND,
};
use super::lefschetz::lefschetz_character;
use super::partition::Partition;
use super::symfun::SymFun2;
use crate::exactalg::{QPolynomial, QRationalFunction};
use crate::permstats::w_polynomial;
use crate::{Error, Result};

/// Largest `k + m` (and `l + n`) accepted by [`verify_prop_26`].
pub const DEFAULT_PROP26_BOUND: usize = 4;

/// `ch(H̃_{n-2}(P_n))` from the Lefschetz character.
pub fn homology_characteristic(n: usize) -> Result<SymFun2> {
    Ok(product_frobenius(&lefschetz_character(n)?))
}

/// `Σ_{i=0}^n (-1)^i h_{n-i}(x) h_{n-i}(y) ch(H̃_{i-2}(P_i))`, expected to vanish.
pub fn verify_theorem_31(n: usize) -> Result<SymFun2> {
    if n == 0 {
        return Err(Error::InvalidArgument("the alternating sum needs n >= 1".into()));
    }
    let mut total = SymFun2::zero();
    for i in 0..=n {
        let term = &SymFun2::h_pair(n - i, n - i)? * &homology_characteristic(i)?;
        total = if i % 2 == 0 { &total + &term } else { &total - &term };
    }
    Ok(total)
}

/// `ch_n = Σ_{r<n} (-1)^{n-1+r} ch_r h_{n-r}(x) h_{n-r}(y)` with `ch_0 = 1`,
/// built bottom-up; returns `ch_0, ..., ch_n`.
pub fn whitney_characteristics(n: usize) -> Result<Vec<SymFun2>> {
    let mut chs = vec![SymFun2::one()];
    for m in 1..=n {
        let mut ch = SymFun2::zero();
        for (r, prev) in chs.iter().enumerate() {
            let term = prev * &SymFun2::h_pair(m - r, m - r)?;
            ch = if (m - 1 + r) % 2 == 0 { &ch + &term } else { &ch - &term };
        }
        chs.push(ch);
    }
    Ok(chs)
}

pub fn whitney_characteristic(n: usize) -> Result<SymFun2> {
    Ok(whitney_characteristics(n)?.pop().expect("ch_0 is always present"))
}

/// `1 - q^k`.
fn one_minus_q_pow(k: usize) -> QPolynomial {
    &QPolynomial::one() - &QPolynomial::monomial(BigRational::one(), k)
}

/// `Π_{i=1}^n (1 - q^i)`.
pub fn q_pochhammer(n: usize) -> QPolynomial {
    (1..=n).fold(QPolynomial::one(), |acc, i| &acc * &one_minus_q_pow(i))
}

/// `x_i = y_i = q^{i-1}`, i.e. `p_k ↦ 1/(1 - q^k)` in each alphabet.
pub fn principal_specialization(s: &SymFun2) -> QRationalFunction {
    let mut total = QRationalFunction::zero();
    for ((mu, l), c) in s.terms() {
        let den = mu
            .parts()
            .iter()
            .chain(l.parts())
            .fold(QPolynomial::one(), |acc, &a| &acc * &one_minus_q_pow(a));
        let term = QRationalFunction::new(QPolynomial::constant(c.clone()), den)
            .expect("1 - q^k is nonzero");
        total = &total + &term;
    }
    total
}

/// `(ps(ch(H̃_{n-2}(P_n))), W_n(q) / Π (1-q^i)^2)`.
pub fn theorem_48_sides(n: usize) -> Result<(QRationalFunction, QRationalFunction)> {
    let lhs = principal_specialization(&homology_characteristic(n)?);
    let rhs = QRationalFunction::new(w_polynomial(n)?, q_pochhammer(n).pow(2))?;
    Ok((lhs, rhs))
}

pub fn verify_theorem_48(n: usize) -> Result<bool> {
    let (lhs, rhs) = theorem_48_sides(n)?;
    Ok(lhs == rhs)
}

/// Terms of the specialized alternating sum with the common denominator
/// cleared: `ps(h_{n-i}(x) h_{n-i}(y) ch_i) · Π_{k≤n} (1-q^k)^2`, for
/// `i = 0..=n`. Each is a polynomial.
pub fn specialized_whitney_terms(n: usize) -> Result<Vec<QPolynomial>> {
    let clear = QRationalFunction::from_poly(q_pochhammer(n).pow(2));
    (0..=n)
        .map(|i| {
            let term = &SymFun2::h_pair(n - i, n - i)? * &homology_characteristic(i)?;
            let v = &principal_specialization(&term) * &clear;
            v.as_polynomial().cloned().ok_or_else(|| {
                Error::InvalidArgument(format!("term {i} did not clear to a polynomial: {v}"))
            })
        })
        .collect()
}

/// Outcome of checking `ch(ψ∘φ) = ch(ψ)ch(φ)` over pairs of irreducibles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prop26Report {
    pub pairs_checked: usize,
    /// Shapes `(α, γ, β, δ)` of `ψ = χ^α ⊗ χ^γ`, `φ = χ^β ⊗ χ^δ` that failed.
    pub failures: Vec<[Partition; 4]>,
}

impl Prop26Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn verify_prop_26(k: usize, l: usize, m: usize, n: usize) -> Result<Prop26Report> {
    verify_prop_26_bounded(k, l, m, n, DEFAULT_PROP26_BOUND)
}

/// Checks multiplicativity of the product Frobenius map on every pair
/// `ψ` of `S_k × S_l` and `φ` of `S_m × S_n` drawn from outer products of
/// irreducible characters.
pub fn verify_prop_26_bounded(
    k: usize,
    l: usize,
    m: usize,
    n: usize,
    bound: usize,
) -> Result<Prop26Report> {
    for size in [k + m, l + n] {
        if size > bound {
            return Err(Error::bound("Prop26 size", size as u128, bound as u128));
        }
    }
    let (ik, il, im, in_) = (
        irreducible_characters(k)?,
        irreducible_characters(l)?,
        irreducible_characters(m)?,
        irreducible_characters(n)?,
    );
    let mut report = Prop26Report {
        pairs_checked: 0,
        failures: Vec::new(),
    };
    for (a, chi_a) in &ik {
        for (g, chi_g) in &il {
            let psi = CharacterTable2::outer(chi_a, chi_g);
            let ch_psi = product_frobenius(&psi);
            for (b, chi_b) in &im {
                for (d, chi_d) in &in_ {
                    let phi = CharacterTable2::outer(chi_b, chi_d);
                    let induced =
                        induce_product_character_bounded(&psi, &phi, DEFAULT_INDUCTION_BOUND)?;
                    let lhs = product_frobenius(&induced);
                    let rhs = &ch_psi * &product_frobenius(&phi);
                    report.pairs_checked += 1;
                    if lhs != rhs {
                        report
                            .failures
                            .push([a.clone(), g.clone(), b.clone(), d.clone()]);
                    }
                }
            }
        }
    }
    Ok(report)
}
