//! Exhaustive enumeration of pattern avoiders.
//!
//! Permutations are grown left to right by appending an unused value. A
//! prefix is abandoned as soon as it contains an occurrence: letters already
//! placed never move, so appending can only create occurrences, never destroy
//! one. Each step therefore only has to look for occurrences that end at the
//! newly appended position.
//!
//! The top level of the search is split on the first letter and run on the
//! current rayon pool; results are merged in first-letter order, so output
//! does not depend on the number of threads.

mod classify;
mod tables;
mod verify;

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pattern::{PatternSet, VincularPattern};
use crate::perm::{Permutation, Symmetry};

pub use classify::{classify, ClassificationReport, EventualClass, Orbit, WilfGroup};
pub use tables::{multi_table, pair_table, single_table, MultiPanel, PanelRow, TableRow};
pub use verify::{
    class2_witness, discover_threshold, render_checks, summarize_multi, verify_table, Formula,
    FormulaCheck, MultiSummary, RowSummary, TableKind, Verdict, MAX_THRESHOLD,
};

/// Largest permutation length the enumerator accepts.
pub const MAX_N: usize = 12;

pub(crate) fn check_n(n: usize) -> Result<()> {
    if n > MAX_N {
        return Err(Error::OutOfRange {
            what: "n",
            value: n,
            max: MAX_N,
        });
    }
    Ok(())
}

/// `|S_n(P)|` for `n = 0..=n_max`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CountSequence(pub Vec<u64>);

impl CountSequence {
    pub fn counts(&self) -> &[u64] {
        &self.0
    }

    pub fn n_max(&self) -> usize {
        self.0.len().saturating_sub(1)
    }
}

impl std::ops::Deref for CountSequence {
    type Target = [u64];

    fn deref(&self) -> &[u64] {
        &self.0
    }
}

impl fmt::Display for CountSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

struct Search<'a> {
    patterns: &'a [VincularPattern],
    n: usize,
}

impl Search<'_> {
    fn extend(&self, prefix: &mut Vec<u32>, used: u32, visit: &mut dyn FnMut(&[u32])) {
        if prefix.len() == self.n {
            visit(prefix);
            return;
        }
        let end = prefix.len();
        for v in 1..=self.n as u32 {
            if used & (1 << v) != 0 {
                continue;
            }
            prefix.push(v);
            if !self
                .patterns
                .iter()
                .any(|p| p.occurs_ending_at(prefix, end))
            {
                self.extend(prefix, used | (1 << v), visit);
            }
            prefix.pop();
        }
    }

    fn run_from(&self, first: u32, visit: &mut dyn FnMut(&[u32])) {
        let mut prefix = Vec::with_capacity(self.n);
        prefix.push(first);
        if !self.patterns.iter().any(|p| p.occurs_ending_at(&prefix, 0)) {
            self.extend(&mut prefix, 1 << first, visit);
        }
    }
}

/// Members of `S_n(P)` in lexicographic order.
pub fn list_avoiders(set: &PatternSet, n: usize) -> Result<Vec<Permutation>> {
    check_n(n)?;
    if n == 0 {
        return Ok(vec![Permutation::empty()]);
    }
    let search = Search {
        patterns: set.patterns(),
        n,
    };
    let parts: Vec<Vec<Permutation>> = (1..=n as u32)
        .into_par_iter()
        .map(|first| {
            let mut out = Vec::new();
            search.run_from(first, &mut |w| {
                out.push(Permutation::from_vec_unchecked(w.to_vec()))
            });
            out
        })
        .collect();
    Ok(parts.into_iter().flatten().collect())
}

/// `|S_n(P)|`.
pub fn count_avoiders(set: &PatternSet, n: usize) -> Result<u64> {
    check_n(n)?;
    if n == 0 {
        return Ok(1);
    }
    let search = Search {
        patterns: set.patterns(),
        n,
    };
    Ok((1..=n as u32)
        .into_par_iter()
        .map(|first| {
            let mut count = 0u64;
            search.run_from(first, &mut |_| count += 1);
            count
        })
        .sum())
}

pub fn counting_sequence(set: &PatternSet, n_max: usize) -> Result<CountSequence> {
    check_n(n_max)?;
    (0..=n_max)
        .map(|n| count_avoiders(set, n))
        .collect::<Result<Vec<_>>>()
        .map(CountSequence)
}

/// The symmetry class of `set`: its images under reverse and complement,
/// sorted and without repeats.
pub fn orbit(set: &PatternSet) -> Vec<PatternSet> {
    let mut out: Vec<PatternSet> = Symmetry::ALL.iter().map(|&g| set.apply(g)).collect();
    out.sort();
    out.dedup();
    out
}
