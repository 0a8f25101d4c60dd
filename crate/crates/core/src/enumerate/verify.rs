//! Row-by-row comparison of computed counting sequences with the closed
//! forms of the reference tables.
//!
//! The tables state formulas without the least `n` from which they hold, so
//! each check discovers that threshold `n0` from the data and passes when
//! `n0 <= MAX_THRESHOLD` and the formula holds for every `n0 <= n <= n_max`.

use std::collections::BTreeMap;
use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::enumerate::classify::k_subsets;
use crate::enumerate::tables::{multi_table, pair_table, single_table, TableRow};
use crate::enumerate::{check_n, counting_sequence, orbit, CountSequence};
use crate::error::{Error, Result};
use crate::pattern::{avoids, PatternSet};
use crate::perm::Permutation;
use crate::sequences::{catalog_value, SequenceName};

/// Largest accepted agreement threshold.
pub const MAX_THRESHOLD: usize = 6;

/// A table entry: a catalog sequence or a constant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Catalog(SequenceName),
    Constant(u64),
}

impl Formula {
    pub fn value(&self, n: usize) -> Result<u64> {
        match self {
            Formula::Catalog(name) => catalog_value(*name, n),
            Formula::Constant(c) => Ok(*c),
        }
    }

    /// Human-readable form as printed in the tables.
    pub fn display_form(&self) -> String {
        match self {
            Formula::Catalog(name) => match name {
                SequenceName::Zero => "0".into(),
                SequenceName::N => "n".into(),
                SequenceName::TwoNMinus2 => "2(n-1)".into(),
                SequenceName::NChoose2Plus1 => "C(n,2)+1".into(),
                SequenceName::Pow2NMinus1 => "2^(n-1)".into(),
                SequenceName::Pow2NMinus2Plus1 => "2^(n-2)+1".into(),
                SequenceName::CentralBinomial => "C(n,[n/2])".into(),
                SequenceName::Fibonacci => "F_n".into(),
                SequenceName::Catalan => "C_n".into(),
                SequenceName::Motzkin => "M_n".into(),
                SequenceName::Bell => "B_n".into(),
                SequenceName::Bessel => "B*_n".into(),
                SequenceName::Involutions => "I_n".into(),
                SequenceName::AStronglyMonotone => "a_n".into(),
                SequenceName::BClass7 => "b_n".into(),
            },
            Formula::Constant(c) => c.to_string(),
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Catalog(name) => write!(f, "{name}"),
            Formula::Constant(c) => write!(f, "{c}"),
        }
    }
}

impl FromStr for Formula {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.parse::<u64>() {
            Ok(c) => Ok(Formula::Constant(c)),
            Err(_) => s.parse().map(Formula::Catalog),
        }
    }
}

impl Serialize for Formula {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Formula {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaCheck {
    pub pattern_set: PatternSet,
    /// Table row label (symmetry class number, or the formula for panels).
    pub row: String,
    /// Representative of the symmetry class of `pattern_set`.
    pub orbit: PatternSet,
    pub orbit_size: usize,
    pub formula: Formula,
    pub sequence: CountSequence,
    pub n0: Option<usize>,
    /// Inclusive range of `n` on which the formula was confirmed.
    pub window: Option<[usize; 2]>,
    pub verdict: Verdict,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "table", content = "k")]
pub enum TableKind {
    Singles,
    Pairs,
    Multi(usize),
}

/// Least `n0` such that `seq[n] == formula(n)` for all `n0 <= n <= n_max`,
/// or `None` when even the last term disagrees.
pub fn discover_threshold(seq: &[u64], formula: Formula) -> Result<Option<usize>> {
    let mut n0 = seq.len();
    for n in (0..seq.len()).rev() {
        if seq[n] != formula.value(n)? {
            break;
        }
        n0 = n;
    }
    Ok((n0 < seq.len()).then_some(n0))
}

fn make_check(
    set: &PatternSet,
    row: String,
    formula: Formula,
    sequence: CountSequence,
) -> Result<FormulaCheck> {
    let n0 = discover_threshold(&sequence, formula)?;
    let members = orbit(set);
    let pass = matches!(n0, Some(t) if t <= MAX_THRESHOLD);
    Ok(FormulaCheck {
        pattern_set: set.clone(),
        row,
        orbit: members[0].clone(),
        orbit_size: members.len(),
        formula,
        window: n0.map(|t| [t, sequence.n_max()]),
        sequence,
        n0,
        verdict: if pass { Verdict::Pass } else { Verdict::Fail },
    })
}

fn check_rows(rows: &[TableRow], n_max: usize) -> Result<Vec<FormulaCheck>> {
    let jobs: Vec<(&TableRow, &PatternSet)> = rows
        .iter()
        .flat_map(|r| r.sets.iter().map(move |s| (r, s)))
        .collect();
    jobs.par_iter()
        .map(|(r, s)| {
            let seq = counting_sequence(s, n_max)?;
            make_check(s, r.label.to_string(), r.formula, seq)
        })
        .collect()
}

fn check_panel(k: usize, n_max: usize) -> Result<Vec<FormulaCheck>> {
    let candidates = (3..=12)
        .contains(&k)
        .then(|| candidate_formulas(k))
        .flatten()
        .ok_or(Error::OutOfRange {
            what: "k",
            value: k,
            max: 12,
        })?;
    k_subsets(k)
        .par_iter()
        .map(|s| {
            let seq = counting_sequence(s, n_max)?;
            let formula = best_formula(&seq, &candidates)?.map_or(candidates[0], |(_, f)| f);
            let label = formula.display_form();
            make_check(s, label, formula, seq)
        })
        .collect()
}

/// The distinct formulas of the reference table for sets of size `k`, in
/// table order.
pub(crate) fn candidate_formulas(k: usize) -> Option<Vec<Formula>> {
    let listed: Vec<Formula> = match k {
        1 => single_table().iter().map(|r| r.formula).collect(),
        2 => pair_table().iter().map(|r| r.formula).collect(),
        _ => multi_table(k)?.rows.iter().map(|r| r.formula).collect(),
    };
    let mut out: Vec<Formula> = Vec::new();
    for f in listed {
        if !out.contains(&f) {
            out.push(f);
        }
    }
    Some(out)
}

/// The candidate matching `seq` from the smallest threshold; ties go to the
/// earlier candidate.
pub(crate) fn best_formula(
    seq: &[u64],
    candidates: &[Formula],
) -> Result<Option<(usize, Formula)>> {
    let mut best: Option<(usize, Formula)> = None;
    for &f in candidates {
        if let Some(t) = discover_threshold(seq, f)? {
            if best.is_none_or(|(b, _)| t < b) {
                best = Some((t, f));
            }
        }
    }
    Ok(best)
}

/// Checks every set of the selected table against its formula.
pub fn verify_table(kind: TableKind, n_max: usize) -> Result<Vec<FormulaCheck>> {
    check_n(n_max)?;
    match kind {
        TableKind::Singles => check_rows(&single_table(), n_max),
        TableKind::Pairs => check_rows(&pair_table(), n_max),
        TableKind::Multi(k) => check_panel(k, n_max),
    }
}

pub fn render_checks(checks: &[FormulaCheck]) -> String {
    let rows: Vec<[String; 6]> = checks
        .iter()
        .map(|c| {
            [
                c.row.clone(),
                c.pattern_set.to_string(),
                c.formula.display_form(),
                c.sequence.to_string(),
                c.n0.map_or("-".into(), |t| t.to_string()),
                c.verdict.to_string(),
            ]
        })
        .collect();
    let headers = ["class", "set", "formula", "|S_n(P)|", "n0", "verdict"];
    let widths: Vec<usize> = (0..6)
        .map(|i| {
            rows.iter()
                .map(|r| r[i].chars().count())
                .max()
                .unwrap_or(0)
                .max(headers[i].len())
        })
        .collect();
    let mut out = String::new();
    let line = |cells: &[&str]| {
        let mut s = String::new();
        for (i, c) in cells.iter().enumerate() {
            if i > 0 {
                s.push_str("  ");
            }
            let pad = widths[i].saturating_sub(c.chars().count());
            s.push_str(c);
            if i + 1 < cells.len() {
                s.push_str(&" ".repeat(pad));
            }
        }
        s
    };
    let _ = writeln!(out, "{}", line(&headers));
    for r in &rows {
        let cells: Vec<&str> = r.iter().map(String::as_str).collect();
        let _ = writeln!(out, "{}", line(&cells));
    }
    out
}

/// Per-row comparison of observed class multiplicities with a panel.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowSummary {
    pub formula: Formula,
    /// `(classes, class size)`, sorted by class size.
    pub expected: Vec<(usize, usize)>,
    pub observed: Vec<(usize, usize)>,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiSummary {
    pub k: usize,
    pub sets: usize,
    pub expected_sets: usize,
    pub symmetry_classes: usize,
    pub expected_symmetry_classes: usize,
    /// Distinct formulas observed among passing classes.
    pub formula_classes: usize,
    pub expected_wilf_classes: usize,
    pub rows: Vec<RowSummary>,
    pub failed_checks: usize,
    pub verdict: Verdict,
}

impl MultiSummary {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "|P| = {}: {} sets (expected {}), {} symmetry classes (expected {}), {} formula classes (table states {} Wilf-classes)",
            self.k,
            self.sets,
            self.expected_sets,
            self.symmetry_classes,
            self.expected_symmetry_classes,
            self.formula_classes,
            self.expected_wilf_classes
        );
        let fmt_mult = |m: &[(usize, usize)]| {
            if m.is_empty() {
                return "-".to_string();
            }
            m.iter()
                .map(|(c, s)| format!("{c}x{s}"))
                .collect::<Vec<_>>()
                .join("+")
        };
        let cells: Vec<[String; 4]> = self
            .rows
            .iter()
            .map(|r| {
                [
                    r.formula.display_form(),
                    fmt_mult(&r.expected),
                    fmt_mult(&r.observed),
                    if r.matches { "pass" } else { "fail" }.to_string(),
                ]
            })
            .collect();
        let w: Vec<usize> = (0..4)
            .map(|i| cells.iter().map(|c| c[i].len()).max().unwrap_or(0).max(11))
            .collect();
        let _ = writeln!(
            out,
            "{:<w0$}  {:>w1$}  {:>w2$}  verdict",
            "cardinality",
            "# sets",
            "observed",
            w0 = w[0],
            w1 = w[1],
            w2 = w[2]
        );
        for c in &cells {
            let _ = writeln!(
                out,
                "{:<w0$}  {:>w1$}  {:>w2$}  {}",
                c[0],
                c[1],
                c[2],
                c[3],
                w0 = w[0],
                w1 = w[1],
                w2 = w[2]
            );
        }
        let _ = writeln!(
            out,
            "failed checks: {}; verdict: {}",
            self.failed_checks, self.verdict
        );
        out
    }
}

/// Compares the checks of a `Multi(k)` run with the panel for `k`.
pub fn summarize_multi(k: usize, checks: &[FormulaCheck]) -> Result<MultiSummary> {
    let panel = multi_table(k).ok_or(Error::OutOfRange {
        what: "k",
        value: k,
        max: 12,
    })?;
    let mut classes: BTreeMap<&PatternSet, &FormulaCheck> = BTreeMap::new();
    for c in checks {
        classes.entry(&c.orbit).or_insert(c);
    }
    let mut observed: BTreeMap<Formula, BTreeMap<usize, usize>> = BTreeMap::new();
    for c in classes.values().filter(|c| c.verdict == Verdict::Pass) {
        *observed
            .entry(c.formula)
            .or_default()
            .entry(c.orbit_size)
            .or_default() += 1;
    }
    let mut rows = Vec::new();
    for r in &panel.rows {
        let mut expected = r.multiplicities.clone();
        expected.sort_by_key(|&(_, size)| size);
        let obs: Vec<(usize, usize)> = observed
            .remove(&r.formula)
            .unwrap_or_default()
            .into_iter()
            .map(|(size, count)| (count, size))
            .collect();
        rows.push(RowSummary {
            formula: r.formula,
            matches: obs == expected,
            expected,
            observed: obs,
        });
    }
    // Formulas observed but absent from the panel.
    for (formula, by_size) in observed {
        rows.push(RowSummary {
            formula,
            expected: Vec::new(),
            observed: by_size.into_iter().map(|(s, c)| (c, s)).collect(),
            matches: false,
        });
    }
    let failed_checks = checks.iter().filter(|c| c.verdict == Verdict::Fail).count();
    let formula_classes = rows.iter().filter(|r| !r.observed.is_empty()).count();
    let ok = failed_checks == 0
        && rows.iter().all(|r| r.matches)
        && checks.len() == panel.sets
        && classes.len() == panel.symmetry_classes;
    Ok(MultiSummary {
        k,
        sets: checks.len(),
        expected_sets: panel.sets,
        symmetry_classes: classes.len(),
        expected_symmetry_classes: panel.symmetry_classes,
        formula_classes,
        expected_wilf_classes: panel.wilf_classes,
        rows,
        failed_checks,
        verdict: if ok { Verdict::Pass } else { Verdict::Fail },
    })
}

/// The element of `S_n(1-23, 3-21)` of the form `σ n 1`:
/// `(⌈(n+1)/2⌉, ..., n-2, 3, n-1, 2, n, 1)`.
pub fn class2_witness(n: usize) -> Result<Permutation> {
    if n < 2 {
        return Err(Error::domain("class2_witness", format!("n = {n} < 2")));
    }
    check_n(n)?;
    // Read backwards the word is 1, n, 2, n-1, 3, ...
    let (mut lo, mut hi) = (1u32, n as u32);
    let mut backwards = Vec::with_capacity(n);
    while lo <= hi {
        backwards.push(lo);
        if lo != hi {
            backwards.push(hi);
        }
        lo += 1;
        hi -= 1;
    }
    backwards.reverse();
    let p = Permutation::new(backwards)?;
    let set: PatternSet = "1-23,3-21".parse()?;
    if !avoids(&set, &p) {
        return Err(Error::domain(
            "class2_witness",
            format!("{p} contains 1-23 or 3-21"),
        ));
    }
    Ok(p)
}
