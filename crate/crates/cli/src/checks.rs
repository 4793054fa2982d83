//! Individual PASS/FAIL checks shared by the `verify` subcommands.

use num_bigint::BigInt;
use serde_json::{json, Value};

use qsegre::besselseries::verify_reciprocal_bounded;
use qsegre::exactalg::q_factorial;
use qsegre::permstats::{all_permutations, verify_q_csv_identity_bounded, w_polynomial_bounded};
use qsegre::poset::{chain_report, check_el_labeling, mobius_number, proper_part, rational_betti_numbers};
use qsegre::subspace::{build_bnq_bounded, build_segre_bnq_bounded, FiniteField};
use qsegre::symfrob::{theorem_48_sides, verify_prop_26_bounded, verify_theorem_31};

use crate::Bounds;

pub struct Check {
    pub name: String,
    pub passed: bool,
    pub summary: String,
    pub data: Value,
}

impl Check {
    fn new(name: String, passed: bool, summary: String, data: Value) -> Self {
        Check {
            name,
            passed,
            summary,
            data,
        }
    }

    pub fn status(&self) -> &'static str {
        if self.passed {
            "PASS"
        } else {
            "FAIL"
        }
    }

    pub fn to_json(&self) -> Value {
        json!({"name": self.name, "status": self.status(), "data": self.data})
    }

    /// A failed check standing in for a computation that errored.
    pub fn errored(name: String, err: impl std::fmt::Display) -> Self {
        let msg = err.to_string();
        Check::new(name, false, format!("error: {msg}"), json!({"error": msg}))
    }
}

fn w_at(n: usize, q: u64, b: &Bounds) -> anyhow::Result<BigInt> {
    Ok(w_polynomial_bounded(n, b.enumeration)?.eval_integer(q as i64)?)
}

fn field(q: u64, b: &Bounds) -> anyhow::Result<FiniteField> {
    let (p, k) = qsegre::subspace::prime_power(q)
        .ok_or_else(|| anyhow::anyhow!("{q} is not a prime power"))?;
    Ok(FiniteField::with_bound(p, k, b.field)?)
}

pub fn csv(n: usize, b: &Bounds) -> anyhow::Result<Check> {
    let r = verify_q_csv_identity_bounded(n, b.enumeration)?;
    Ok(Check::new(
        format!("csv n={n}"),
        r.is_zero(),
        format!("residual {r}"),
        json!({"n": n, "residual": r.to_coeff_strings()}),
    ))
}

pub fn bessel(order: usize, b: &Bounds) -> anyhow::Result<Check> {
    let flags = verify_reciprocal_bounded(order, b.enumeration)?;
    let bad: Vec<usize> = (0..flags.len()).filter(|&i| !flags[i]).collect();
    Ok(Check::new(
        format!("bessel order={order}"),
        bad.is_empty(),
        if bad.is_empty() {
            format!("coefficients 0..={order} match")
        } else {
            format!("mismatched coefficients {bad:?}")
        },
        json!({"order": order, "mismatched": bad}),
    ))
}

/// EL check on `B_n(q)` and the chain-count check `#σ = q^{inv σ}`.
pub fn el_lattice(n: usize, q: u64, b: &Bounds) -> anyhow::Result<Vec<Check>> {
    let f = field(q, b)?;
    let l = build_bnq_bounded(n, &f, b.subspaces)?;
    let el = check_el_labeling(&l.poset, &l.labeling)?;
    let report = chain_report(&l.poset, &l.labeling)?;
    let mut wrong = Vec::new();
    for s in all_permutations(n) {
        let got = report.count(s.image());
        let expected = q.pow(s.inversions() as u32);
        if got != expected {
            wrong.push(json!({"word": s.to_string(), "count": got, "expected": expected}));
        }
    }
    let total = q_factorial(n).eval_integer(q as i64)?;
    let total_ok = BigInt::from(report.total()) == total;
    Ok(vec![
        el_check(format!("el n={n} q={q}"), &el),
        Check::new(
            format!("chains n={n} q={q}"),
            wrong.is_empty() && total_ok,
            format!("{} maximal chains, expected {total}", report.total()),
            json!({"total": report.total(), "expected_total": total.to_string(), "mismatches": wrong}),
        ),
    ])
}

fn el_check(name: String, el: &qsegre::poset::ElReport) -> Check {
    Check::new(
        name,
        el.passed(),
        match &el.violation {
            None => format!("{} intervals", el.intervals_checked),
            Some(v) => v.to_string(),
        },
        json!({
            "intervals_checked": el.intervals_checked,
            "violation": el.violation.as_ref().map(|v| v.to_string()),
        }),
    )
}

pub fn el_segre(n: usize, q: u64, b: &Bounds) -> anyhow::Result<Check> {
    let f = field(q, b)?;
    let s = build_segre_bnq_bounded(n, &f, b.subspaces)?;
    let el = check_el_labeling(&s.poset, &s.labeling)?;
    Ok(el_check(format!("el-segre n={n} q={q}"), &el))
}

/// `μ = (-1)^n W_n(q)` and descending chains `= W_n(q)` on the Segre square.
pub fn mobius(n: usize, q: u64, b: &Bounds) -> anyhow::Result<Check> {
    let f = field(q, b)?;
    let s = build_segre_bnq_bounded(n, &f, b.subspaces)?;
    let mu = mobius_number(&s.poset)?;
    let desc = chain_report(&s.poset, &s.labeling)?.descending_count;
    let w = w_at(n, q, b)?;
    let signed = if n.is_multiple_of(2) { w.clone() } else { -w.clone() };
    let passed = BigInt::from(mu) == signed && BigInt::from(desc) == w;
    Ok(Check::new(
        format!("mobius n={n} q={q}"),
        passed,
        format!("mu {mu}, descending {desc}, W {w}"),
        json!({"mobius": mu, "descending_count": desc, "w": w.to_string()}),
    ))
}

/// Homology of the proper part concentrated on top, with rank `W_n(q)`.
pub fn betti(n: usize, q: u64, b: &Bounds) -> anyhow::Result<Check> {
    let f = field(q, b)?;
    let s = build_segre_bnq_bounded(n, &f, b.subspaces)?;
    let pp = proper_part(&s.poset)?;
    let betti = rational_betti_numbers(&pp);
    let top = n as isize - 2;
    let w = w_at(n, q, b)?;
    let passed = betti.concentrated_in(top) && BigInt::from(betti.get(top)) == w;
    Ok(Check::new(
        format!("betti n={n} q={q}"),
        passed,
        format!("reduced Betti numbers from dimension -1: {:?}", betti.values()),
        json!({"reduced_betti": betti.values(), "top_dimension": top, "w": w.to_string()}),
    ))
}

pub fn thm31(n: usize) -> anyhow::Result<Check> {
    let r = verify_theorem_31(n)?;
    Ok(Check::new(
        format!("thm31 n={n}"),
        r.is_zero(),
        format!("residual {r}"),
        json!({"n": n, "residual": r.to_string_map()}),
    ))
}

pub fn thm48(n: usize) -> anyhow::Result<Check> {
    let (lhs, rhs) = theorem_48_sides(n)?;
    Ok(Check::new(
        format!("thm48 n={n}"),
        lhs == rhs,
        format!("ps(ch) = {lhs}"),
        json!({"n": n, "ps": lhs.to_string(), "expected": rhs.to_string()}),
    ))
}

pub fn prop26(sizes: [usize; 4], bound: usize) -> anyhow::Result<Check> {
    let [k, l, m, n] = sizes;
    let r = verify_prop_26_bounded(k, l, m, n, bound)?;
    let failures: Vec<String> = r
        .failures
        .iter()
        .map(|f| f.iter().map(|p| format!("({p})")).collect::<Vec<_>>().join(" "))
        .collect();
    Ok(Check::new(
        format!("prop26 sizes={k},{l},{m},{n}"),
        r.passed(),
        format!("{} character pairs", r.pairs_checked),
        json!({"pairs_checked": r.pairs_checked, "failures": failures}),
    ))
}
