//! Edge labelings, the EL property and maximal-chain tallies.
//!
//! A label type carries two orders: the strict partial order used to decide
//! whether consecutive labels ascend ([`Label::precedes`]), and a linear
//! extension of it (`Ord`) used to compare label words lexicographically.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::GradedPoset;
use crate::{Error, Result};

pub trait Label: Clone + Ord + fmt::Debug {
    /// Separator placed between rendered labels of a word.
    const WORD_SEPARATOR: &'static str;

    /// Strict order deciding ascents.
    fn precedes(&self, other: &Self) -> bool;

    fn render(&self) -> String;

    fn render_word(word: &[Self]) -> String {
        word.iter()
            .map(Label::render)
            .collect::<Vec<_>>()
            .join(Self::WORD_SEPARATOR)
    }
}

impl Label for usize {
    const WORD_SEPARATOR: &'static str = "";

    fn precedes(&self, other: &Self) -> bool {
        self < other
    }

    fn render(&self) -> String {
        self.to_string()
    }
}

/// A label in `[n] × [n]` with the componentwise order.
///
/// The derived `Ord` (first component, then second) is the linear extension
/// used for lexicographic comparison of words.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PairLabel(pub usize, pub usize);

impl Label for PairLabel {
    const WORD_SEPARATOR: &'static str = "|";

    fn precedes(&self, other: &Self) -> bool {
        self != other && self.0 <= other.0 && self.1 <= other.1
    }

    fn render(&self) -> String {
        format!("{},{}", self.0, self.1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeLabeling<L> {
    labels: BTreeMap<(usize, usize), L>,
}

impl<L> Default for EdgeLabeling<L> {
    fn default() -> Self {
        EdgeLabeling {
            labels: BTreeMap::new(),
        }
    }
}

impl<L: Label> EdgeLabeling<L> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, lower: usize, upper: usize, label: L) -> Option<L> {
        self.labels.insert((lower, upper), label)
    }

    pub fn get(&self, lower: usize, upper: usize) -> Option<&L> {
        self.labels.get(&(lower, upper))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize), &L)> {
        self.labels.iter()
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Errors on the first cover (in sorted order) without a label.
    pub fn ensure_complete(&self, p: &GradedPoset) -> Result<()> {
        match p.covers().iter().find(|&&(a, b)| self.get(a, b).is_none()) {
            Some(&(a, b)) => Err(Error::UnlabeledCover(a, b)),
            None => Ok(()),
        }
    }
}

fn is_increasing<L: Label>(word: &[L]) -> bool {
    word.windows(2).all(|w| w[0].precedes(&w[1]))
}

fn is_descending<L: Label>(word: &[L]) -> bool {
    word.windows(2).all(|w| !w[0].precedes(&w[1]))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    NoIncreasingChain,
    SeveralIncreasingChains(u64),
    /// The increasing chain is not strictly lexicographically first.
    NotLexicographicallyFirst,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElViolation {
    pub lower: usize,
    pub upper: usize,
    pub kind: ViolationKind,
}

impl fmt::Display for ElViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.kind {
            ViolationKind::NoIncreasingChain => "no increasing maximal chain".to_string(),
            ViolationKind::SeveralIncreasingChains(k) => format!("{k} increasing maximal chains"),
            ViolationKind::NotLexicographicallyFirst => {
                "increasing chain is not lexicographically first".to_string()
            }
        };
        write!(f, "interval [{}, {}]: {what}", self.lower, self.upper)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElReport {
    pub intervals_checked: usize,
    pub violation: Option<ElViolation>,
}

impl ElReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

struct IntervalTally<L> {
    increasing: u64,
    increasing_word: Option<Vec<L>>,
    min_word: Option<Vec<L>>,
    min_count: u64,
}

impl<L: Label> IntervalTally<L> {
    fn record(&mut self, word: &[L]) {
        if is_increasing(word) {
            self.increasing += 1;
            self.increasing_word = Some(word.to_vec());
        }
        match self.min_word.as_deref().map(|m| word.cmp(m)) {
            None | Some(Ordering::Less) => {
                self.min_word = Some(word.to_vec());
                self.min_count = 1;
            }
            Some(Ordering::Equal) => self.min_count += 1,
            Some(Ordering::Greater) => {}
        }
    }

    fn verdict(&self) -> Option<ViolationKind> {
        match self.increasing {
            0 => Some(ViolationKind::NoIncreasingChain),
            1 if self.min_count == 1 && self.min_word == self.increasing_word => None,
            1 => Some(ViolationKind::NotLexicographicallyFirst),
            k => Some(ViolationKind::SeveralIncreasingChains(k)),
        }
    }
}

/// Walks every saturated chain upward from `start`, calling `visit` with the
/// endpoint and the label word so far.
fn walk_up<L: Label>(
    p: &GradedPoset,
    l: &EdgeLabeling<L>,
    start: usize,
    word: &mut Vec<L>,
    visit: &mut dyn FnMut(usize, &[L]),
) {
    for &y in p.upper_covers(start) {
        word.push(l.get(start, y).expect("labeling checked complete").clone());
        visit(y, word);
        walk_up(p, l, y, word, visit);
        word.pop();
    }
}

/// Checks that every interval `[x, y]` with `x < y` has exactly one
/// increasing maximal chain and that its word is strictly smallest.
/// Intervals are scanned by `x`, then `y`, in id order; the first failure is
/// reported.
pub fn check_el_labeling<L: Label>(p: &GradedPoset, l: &EdgeLabeling<L>) -> Result<ElReport> {
    l.ensure_complete(p)?;
    let mut checked = 0;
    for x in 0..p.len() {
        let mut tallies: BTreeMap<usize, IntervalTally<L>> = BTreeMap::new();
        walk_up(p, l, x, &mut Vec::new(), &mut |y, word| {
            tallies
                .entry(y)
                .or_insert_with(|| IntervalTally {
                    increasing: 0,
                    increasing_word: None,
                    min_word: None,
                    min_count: 0,
                })
                .record(word)
        });
        for (y, tally) in tallies {
            checked += 1;
            if let Some(kind) = tally.verdict() {
                return Ok(ElReport {
                    intervals_checked: checked,
                    violation: Some(ElViolation { lower: x, upper: y, kind }),
                });
            }
        }
    }
    Ok(ElReport {
        intervals_checked: checked,
        violation: None,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainReport<L> {
    pub by_label_word: BTreeMap<Vec<L>, u64>,
    pub increasing_count: u64,
    pub descending_count: u64,
}

impl<L: Label> ChainReport<L> {
    pub fn total(&self) -> u64 {
        self.by_label_word.values().sum()
    }

    pub fn count(&self, word: &[L]) -> u64 {
        self.by_label_word.get(word).copied().unwrap_or(0)
    }

    /// Words rendered as strings, e.g. `"21"` or `"2,1|1,2"`.
    pub fn rendered(&self) -> BTreeMap<String, u64> {
        self.by_label_word
            .iter()
            .map(|(w, &c)| (L::render_word(w), c))
            .collect()
    }
}

/// Tallies the maximal chains `0̂ → 1̂` by label word. A chain is descending
/// when no consecutive pair of labels ascends in the label order;
/// incomparable neighbours count as non-ascending.
pub fn chain_report<L: Label>(p: &GradedPoset, l: &EdgeLabeling<L>) -> Result<ChainReport<L>> {
    l.ensure_complete(p)?;
    let (bottom, top) = p.bounds()?;
    let mut by_label_word = BTreeMap::new();
    if bottom == top {
        by_label_word.insert(Vec::new(), 1);
    } else {
        walk_up(p, l, bottom, &mut Vec::new(), &mut |y, word| {
            if y == top {
                *by_label_word.entry(word.to_vec()).or_insert(0) += 1;
            }
        });
    }
    let increasing_count = by_label_word
        .iter()
        .filter(|(w, _)| is_increasing(w))
        .map(|(_, c)| c)
        .sum();
    let descending_count = by_label_word
        .iter()
        .filter(|(w, _)| is_descending(w))
        .map(|(_, c)| c)
        .sum();
    Ok(ChainReport {
        by_label_word,
        increasing_count,
        descending_count,
    })
}
