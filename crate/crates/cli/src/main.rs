mod checks;

use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use qsegre::besselseries::{verify_reciprocal_bounded, BesselCoefficients};
use qsegre::exactalg::QPolynomial;
use qsegre::permstats::{q_binomial, w_by_recurrence, w_polynomial_bounded, DEFAULT_ENUMERATION_BOUND};
use qsegre::poset::{
    chain_report, check_el_labeling, mobius_number, proper_part, rational_betti_numbers, PosetJson,
};
use qsegre::subspace::{
    build_bnq_bounded, build_segre_bnq_bounded, prime_power, FiniteField, DEFAULT_FIELD_BOUND,
    DEFAULT_SUBSPACE_BOUND,
};
use qsegre::symfrob::{
    lefschetz_character_bounded, principal_specialization, product_frobenius,
    DEFAULT_LEFSCHETZ_BOUND, DEFAULT_PROP26_BOUND,
};

use checks::Check;

#[derive(Parser)]
#[command(name = "qsegre", version, about = "Pairs of permutations with no common ascent, q-analogues and Segre products")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(flatten)]
    bounds: BoundArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct BoundArgs {
    /// Largest n for which permutation pairs are enumerated.
    #[arg(long, global = true, default_value_t = DEFAULT_ENUMERATION_BOUND)]
    enum_bound: usize,
    /// Largest field order.
    #[arg(long, global = true, default_value_t = DEFAULT_FIELD_BOUND)]
    field_bound: u64,
    /// Largest number of lattice elements built.
    #[arg(long, global = true, default_value_t = DEFAULT_SUBSPACE_BOUND)]
    subspace_bound: u128,
    /// Largest n for the fixed-chain character computation.
    #[arg(long, global = true, default_value_t = DEFAULT_LEFSCHETZ_BOUND)]
    lefschetz_bound: usize,
    /// Largest k+m and l+n for the induction-product check.
    #[arg(long, global = true, default_value_t = DEFAULT_PROP26_BOUND)]
    prop26_bound: usize,
}

pub struct Bounds {
    pub enumeration: usize,
    pub field: u64,
    pub subspaces: u128,
    pub lefschetz: usize,
    pub prop26: usize,
}

impl BoundArgs {
    fn resolve(&self) -> Bounds {
        let raised = [
            ("--enum-bound", self.enum_bound as u128 > DEFAULT_ENUMERATION_BOUND as u128),
            ("--field-bound", self.field_bound > DEFAULT_FIELD_BOUND),
            ("--subspace-bound", self.subspace_bound > DEFAULT_SUBSPACE_BOUND),
            ("--lefschetz-bound", self.lefschetz_bound > DEFAULT_LEFSCHETZ_BOUND),
            ("--prop26-bound", self.prop26_bound > DEFAULT_PROP26_BOUND),
        ];
        for (flag, above) in raised {
            if above {
                eprintln!("warning: {flag} above its default; running time grows quickly");
            }
        }
        Bounds {
            enumeration: self.enum_bound,
            field: self.field_bound,
            subspaces: self.subspace_bound,
            lefschetz: self.lefschetz_bound,
            prop26: self.prop26_bound,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// W_n(q) as ascending coefficients, or its value at an integer.
    Wq {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        at: Option<i64>,
    },
    /// Gaussian binomial [n brack k]_q.
    Qbinom {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        at: Option<i64>,
    },
    /// Truncated F(z), its reciprocal, and the coefficient checks.
    Bessel {
        #[arg(long)]
        order: usize,
    },
    /// B_n(q) (or its Segre square) as poset JSON, chain counts or an EL check.
    Lattice {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        check_el: bool,
        #[arg(long)]
        chains: bool,
        #[arg(long)]
        segre: bool,
    },
    /// Summary of B_n(q) ∘ B_n(q).
    Segre {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u64,
    },
    /// Möbius number of B_n(q) ∘ B_n(q).
    Mobius {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u64,
    },
    /// Reduced Betti numbers of the proper part of B_n(q) ∘ B_n(q).
    Betti {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u64,
    },
    /// Character and Frobenius characteristic on the top homology of P_n.
    Frobenius {
        #[arg(long)]
        n: usize,
    },
    /// Run checks and report PASS/FAIL; exit status 0 iff all pass.
    Verify {
        #[arg(value_enum)]
        target: Target,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        order: Option<usize>,
        /// k,l,m,n for prop26.
        #[arg(long, value_parser = parse_sizes)]
        sizes: Option<[usize; 4]>,
        /// Cap on n for the lattice and character checks of `all`.
        #[arg(long, default_value_t = 4)]
        max_n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Target {
    Csv,
    Bessel,
    El,
    Mobius,
    Thm31,
    Thm48,
    Prop26,
    All,
}

fn parse_sizes(s: &str) -> Result<[usize; 4], String> {
    let v: Vec<usize> = s
        .split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}")))
        .collect::<Result<_, _>>()?;
    v.try_into().map_err(|_| "expected four sizes k,l,m,n".to_string())
}

const CSV_RANGE: std::ops::RangeInclusive<usize> = 1..=6;
const BESSEL_ORDER: usize = 6;
const EL_LATTICES: [(usize, u64); 7] = [(2, 2), (2, 3), (2, 4), (2, 5), (3, 2), (3, 3), (4, 2)];
const EL_SEGRE: [(usize, u64); 3] = [(2, 2), (2, 3), (3, 2)];
const MOBIUS_CASES: [(usize, u64); 5] = [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3)];
const BETTI_CASES: [(usize, u64); 3] = [(2, 2), (2, 3), (3, 2)];

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if t == 0 {
            eprintln!("error: --threads must be positive");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .expect("thread pool is configured once");
    }
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string(v).expect("JSON values serialize"));
}

fn check_q(q: u64) -> anyhow::Result<()> {
    if prime_power(q).is_none() {
        bail!("--q {q} is not a prime power");
    }
    Ok(())
}

fn field(q: u64, b: &Bounds) -> anyhow::Result<FiniteField> {
    let (p, k) = prime_power(q).ok_or_else(|| anyhow!("--q {q} is not a prime power"))?;
    Ok(FiniteField::with_bound(p, k, b.field)?)
}

fn poly_output(p: &QPolynomial, at: Option<i64>) -> anyhow::Result<Value> {
    Ok(match at {
        Some(x) => json!(p.eval_integer(x)?.to_string()),
        None => json!(p.to_coeff_strings()),
    })
}

/// Returns whether every reported check passed.
fn run(cli: &Cli) -> anyhow::Result<bool> {
    let b = cli.bounds.resolve();
    match &cli.command {
        Command::Wq { n, at } => {
            let (w, source) = if *n <= b.enumeration {
                (w_polynomial_bounded(*n, b.enumeration)?, "enumeration")
            } else {
                let w = w_by_recurrence(*n).pop().expect("W_0 is always present");
                (w, "recurrence")
            };
            let out = poly_output(&w, *at)?;
            if cli.json {
                print_json(&json!({"n": n, "source": source, "w": out}));
            } else {
                if source == "recurrence" {
                    eprintln!(
                        "note: n = {n} is above the enumeration bound {}; W_n is recurrence-derived",
                        b.enumeration
                    );
                }
                print_json(&out);
            }
            Ok(true)
        }
        Command::Qbinom { n, k, at } => {
            print_json(&poly_output(&q_binomial(*n, *k)?, *at)?);
            Ok(true)
        }
        Command::Bessel { order } => {
            let c = BesselCoefficients::new(*order)?;
            let flags = verify_reciprocal_bounded(*order, b.enumeration)?;
            let render = |s: &qsegre::exactalg::TruncatedSeries| -> Vec<String> {
                s.coeffs().iter().map(|c| c.to_string()).collect()
            };
            let statuses: Vec<&str> = flags.iter().map(|&f| if f { "PASS" } else { "FAIL" }).collect();
            print_json(&json!({
                "order": order,
                "f": render(&c.f),
                "f_inv": render(&c.f_inv),
                "checks": statuses,
            }));
            Ok(flags.iter().all(|&f| f))
        }
        Command::Lattice {
            n,
            q,
            check_el,
            chains,
            segre,
        } => lattice(*n, *q, *check_el, *chains, *segre, &b),
        Command::Segre { n, q } => {
            let f = field(*q, &b)?;
            let s = build_segre_bnq_bounded(*n, &f, b.subspaces)?;
            let report = chain_report(&s.poset, &s.labeling)?;
            let mu = mobius_number(&s.poset)?;
            let out = json!({
                "n": n,
                "q": q,
                "elements": s.poset.len(),
                "rank_sizes": s.poset.rank_sizes(),
                "maximal_chains": report.total(),
                "descending_count": report.descending_count,
                "mobius": mu,
            });
            emit_record(cli.json, &out);
            Ok(true)
        }
        Command::Mobius { n, q } => {
            let f = field(*q, &b)?;
            let s = build_segre_bnq_bounded(*n, &f, b.subspaces)?;
            let mu = mobius_number(&s.poset)?;
            if cli.json {
                print_json(&json!({"n": n, "q": q, "mobius": mu}));
            } else {
                println!("{mu}");
            }
            Ok(true)
        }
        Command::Betti { n, q } => {
            let f = field(*q, &b)?;
            let s = build_segre_bnq_bounded(*n, &f, b.subspaces)?;
            let betti = rational_betti_numbers(&proper_part(&s.poset)?);
            let out = json!({
                "n": n,
                "q": q,
                "reduced_betti": betti.values(),
                "top_nonzero_dimension": betti.top_nonzero(),
            });
            emit_record(cli.json, &out);
            Ok(true)
        }
        Command::Frobenius { n } => {
            let t = lefschetz_character_bounded(*n, b.lefschetz)?;
            let ch = product_frobenius(&t);
            print_json(&json!({
                "character": t.to_string_map(),
                "ch": ch.to_string_map(),
                "ps": principal_specialization(&ch).to_string(),
            }));
            Ok(true)
        }
        Command::Verify {
            target,
            n,
            q,
            order,
            sizes,
            max_n,
        } => {
            if let Some(q) = q {
                check_q(*q)?;
            }
            let jobs = plan(*target, *n, *q, *order, *sizes, *max_n, &b)?;
            let results: Vec<Check> = jobs
                .into_par_iter()
                .flat_map_iter(|job| run_job(job, &b))
                .collect();
            report(cli.json, &results);
            Ok(results.iter().all(|c| c.passed))
        }
    }
}

fn emit_record(as_json: bool, v: &Value) {
    if as_json {
        print_json(v);
    } else if let Value::Object(map) = v {
        for (k, val) in map {
            println!("{k}: {val}");
        }
    }
}

fn lattice(
    n: usize,
    q: u64,
    check_el: bool,
    chains: bool,
    segre: bool,
    b: &Bounds,
) -> anyhow::Result<bool> {
    let f = field(q, b)?;
    let mut out = serde_json::Map::new();
    let mut passed = true;
    macro_rules! fill {
        ($poset:expr, $labels:expr) => {{
            if check_el {
                let el = check_el_labeling($poset, $labels)?;
                passed &= el.passed();
                out.insert(
                    "el".into(),
                    json!({
                        "status": if el.passed() { "PASS" } else { "FAIL" },
                        "intervals_checked": el.intervals_checked,
                        "violation": el.violation.as_ref().map(|v| v.to_string()),
                    }),
                );
            }
            if chains {
                let r = chain_report($poset, $labels)?;
                out.insert("chains".into(), json!(r.rendered()));
                out.insert("descending_count".into(), json!(r.descending_count));
                out.insert("increasing_count".into(), json!(r.increasing_count));
            }
            if !check_el && !chains {
                let j = PosetJson::from_poset($poset, Some($labels));
                out.insert("poset".into(), serde_json::to_value(&j).context("poset JSON")?);
            }
        }};
    }
    if segre {
        let s = build_segre_bnq_bounded(n, &f, b.subspaces)?;
        fill!(&s.poset, &s.labeling);
    } else {
        let l = build_bnq_bounded(n, &f, b.subspaces)?;
        fill!(&l.poset, &l.labeling);
    }
    print_json(&Value::Object(out));
    Ok(passed)
}

enum Job {
    Csv(usize),
    Bessel(usize),
    ElLattice(usize, u64),
    ElSegre(usize, u64),
    Mobius(usize, u64),
    Betti(usize, u64),
    Thm31(usize),
    Thm48(usize),
    Prop26([usize; 4]),
}

fn plan(
    target: Target,
    n: Option<usize>,
    q: Option<u64>,
    order: Option<usize>,
    sizes: Option<[usize; 4]>,
    max_n: usize,
    b: &Bounds,
) -> anyhow::Result<Vec<Job>> {
    let pairs = |default: &[(usize, u64)]| -> Vec<(usize, u64)> {
        match (n, q) {
            (Some(n), Some(q)) => vec![(n, q)],
            _ => default
                .iter()
                .copied()
                .filter(|&(dn, dq)| n.is_none_or(|n| n == dn) && q.is_none_or(|q| q == dq))
                .collect(),
        }
    };
    let up_to = |cap: usize| -> Vec<usize> { n.map_or_else(|| (1..=cap).collect(), |n| vec![n]) };
    let prop26_sizes = |bound: usize| -> Vec<[usize; 4]> {
        let mut out = Vec::new();
        for km in 0..=bound {
            for ln in 0..=bound {
                for k in 0..=km {
                    for l in 0..=ln {
                        out.push([k, l, km - k, ln - l]);
                    }
                }
            }
        }
        out
    };
    let jobs = match target {
        Target::Csv => up_to(*CSV_RANGE.end()).into_iter().map(Job::Csv).collect(),
        Target::Bessel => vec![Job::Bessel(order.or(n).unwrap_or(BESSEL_ORDER))],
        Target::El => {
            let mut v: Vec<Job> = pairs(&EL_LATTICES)
                .into_iter()
                .map(|(n, q)| Job::ElLattice(n, q))
                .collect();
            v.extend(pairs(&EL_SEGRE).into_iter().map(|(n, q)| Job::ElSegre(n, q)));
            v
        }
        Target::Mobius => pairs(&MOBIUS_CASES)
            .into_iter()
            .map(|(n, q)| Job::Mobius(n, q))
            .collect(),
        Target::Thm31 => up_to(b.lefschetz).into_iter().map(Job::Thm31).collect(),
        Target::Thm48 => up_to(b.lefschetz).into_iter().map(Job::Thm48).collect(),
        Target::Prop26 => match sizes {
            Some(s) => vec![Job::Prop26(s)],
            None => prop26_sizes(b.prop26).into_iter().map(Job::Prop26).collect(),
        },
        Target::All => {
            if n.is_some() || q.is_some() || order.is_some() || sizes.is_some() {
                bail!("`verify all` takes only --max-n; use a specific target for single cases");
            }
            let small = |c: &[(usize, u64)]| -> Vec<(usize, u64)> {
                c.iter().copied().filter(|&(n, _)| n <= max_n).collect()
            };
            let mut v: Vec<Job> = CSV_RANGE.map(Job::Csv).collect();
            v.push(Job::Bessel(BESSEL_ORDER.min(5)));
            v.extend(small(&EL_LATTICES).into_iter().map(|(n, q)| Job::ElLattice(n, q)));
            v.extend(small(&EL_SEGRE).into_iter().map(|(n, q)| Job::ElSegre(n, q)));
            v.extend(small(&MOBIUS_CASES).into_iter().map(|(n, q)| Job::Mobius(n, q)));
            v.extend(small(&BETTI_CASES).into_iter().map(|(n, q)| Job::Betti(n, q)));
            let top = max_n.min(b.lefschetz);
            v.extend((1..=top).map(Job::Thm31));
            v.extend((1..=top).map(Job::Thm48));
            v.extend(prop26_sizes(b.prop26).into_iter().map(Job::Prop26));
            v
        }
    };
    if jobs.is_empty() {
        bail!("no checks match the given flags");
    }
    Ok(jobs)
}

fn run_job(job: Job, b: &Bounds) -> Vec<Check> {
    let one = |r: anyhow::Result<Check>, name: String| vec![r.unwrap_or_else(|e| Check::errored(name, e))];
    match job {
        Job::Csv(n) => one(checks::csv(n, b), format!("csv n={n}")),
        Job::Bessel(o) => one(checks::bessel(o, b), format!("bessel order={o}")),
        Job::ElLattice(n, q) => checks::el_lattice(n, q, b)
            .unwrap_or_else(|e| vec![Check::errored(format!("el n={n} q={q}"), e)]),
        Job::ElSegre(n, q) => one(checks::el_segre(n, q, b), format!("el-segre n={n} q={q}")),
        Job::Mobius(n, q) => one(checks::mobius(n, q, b), format!("mobius n={n} q={q}")),
        Job::Betti(n, q) => one(checks::betti(n, q, b), format!("betti n={n} q={q}")),
        Job::Thm31(n) => one(checks::thm31(n), format!("thm31 n={n}")),
        Job::Thm48(n) => one(checks::thm48(n), format!("thm48 n={n}")),
        Job::Prop26(s) => one(
            checks::prop26(s, b.prop26),
            format!("prop26 sizes={},{},{},{}", s[0], s[1], s[2], s[3]),
        ),
    }
}

fn report(as_json: bool, results: &[Check]) {
    let all = results.iter().all(|c| c.passed);
    if as_json {
        print_json(&json!({
            "status": if all { "PASS" } else { "FAIL" },
            "checks": results.iter().map(Check::to_json).collect::<Vec<_>>(),
        }));
    } else {
        for c in results {
            println!("{}  {}  {}", c.status(), c.name, c.summary);
        }
        let failed = results.iter().filter(|c| !c.passed).count();
        let noun = if results.len() == 1 { "check" } else { "checks" };
        println!("{} {noun}, {} failed", results.len(), failed);
    }
}
