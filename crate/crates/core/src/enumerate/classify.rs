use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::enumerate::verify::{best_formula, candidate_formulas, Formula};
use crate::enumerate::{check_n, counting_sequence, orbit, CountSequence};
use crate::error::{Error, Result};
use crate::pattern::{type_one_two_patterns, PatternSet};
use crate::sequences::{identify, Identification};

/// One symmetry class: its members in canonical order (the first is the
/// representative) and their shared counting sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Orbit {
    pub members: Vec<PatternSet>,
    pub sequence: CountSequence,
}

/// Orbits with identical counting sequences through `n_max`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WilfGroup {
    pub sequence: CountSequence,
    /// Indices into [`ClassificationReport::orbits`].
    pub orbits: Vec<usize>,
    pub sets: usize,
    pub identified_as: Vec<Identification>,
}

/// Orbits whose sequences settle on the same closed form from the
/// reference tables, the grouping used by the per-cardinality panels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EventualClass {
    /// `None` collects orbits that match no listed formula.
    pub formula: Option<Formula>,
    /// Largest threshold among the member orbits.
    pub n0: Option<usize>,
    pub orbits: Vec<usize>,
    pub sets: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub k: usize,
    pub n_max: usize,
    pub sets: usize,
    pub orbits: Vec<Orbit>,
    pub wilf_groups: Vec<WilfGroup>,
    pub eventual_classes: Vec<EventualClass>,
    /// Whether every orbit member produced the same sequence.
    pub symmetry_consistent: bool,
    pub evidence: String,
}

impl ClassificationReport {
    pub fn symmetry_class_count(&self) -> usize {
        self.orbits.len()
    }

    /// Groups of orbits with identical sequences through `n_max`.
    pub fn wilf_class_count(&self) -> usize {
        self.wilf_groups.len()
    }

    /// Groups of orbits sharing an eventual closed form.
    pub fn eventual_class_count(&self) -> usize {
        self.eventual_classes.len()
    }

    /// `count x size` terms for the given orbits, e.g. `1x2+30x4`.
    fn multiplicities(&self, orbits: &[usize]) -> String {
        let mut by_size: BTreeMap<usize, usize> = BTreeMap::new();
        for &i in orbits {
            *by_size.entry(self.orbits[i].members.len()).or_default() += 1;
        }
        by_size
            .iter()
            .map(|(size, count)| format!("{count}x{size}"))
            .collect::<Vec<_>>()
            .join("+")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "|P| = {}: {} sets, {} symmetry classes, {} Wilf classes by sequence, {} by eventual formula (n <= {}; {})",
            self.k,
            self.sets,
            self.orbits.len(),
            self.wilf_groups.len(),
            self.eventual_classes.len(),
            self.n_max,
            self.evidence
        );
        let rows: Vec<(String, String, String)> = self
            .wilf_groups
            .iter()
            .map(|g| {
                let mult = self.multiplicities(&g.orbits);
                let ids = g
                    .identified_as
                    .iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(", ");
                (g.sequence.to_string(), mult, ids)
            })
            .collect();
        let w0 = rows.iter().map(|r| r.0.len()).max().unwrap_or(0).max(8);
        let w1 = rows.iter().map(|r| r.1.len()).max().unwrap_or(0).max(7);
        let _ = writeln!(out, "{:<w0$}  {:>w1$}  identified as", "sequence", "# sets");
        for (seq, mult, ids) in rows {
            let _ = writeln!(out, "{seq:<w0$}  {mult:>w1$}  {ids}");
        }
        let _ = writeln!(out);
        let _ = writeln!(out, "{:<14}  {:>14}  n0", "eventually", "# sets");
        for c in &self.eventual_classes {
            let mult = self.multiplicities(&c.orbits);
            let formula = c.formula.map_or("-".to_string(), |f| f.display_form());
            let n0 = c.n0.map_or("-".to_string(), |t| t.to_string());
            let _ = writeln!(out, "{formula:<14}  {mult:>14}  {n0}");
        }
        out
    }
}

/// All `k`-subsets of the twelve type (1,2)/(2,1) patterns in canonical
/// text order.
pub(crate) fn k_subsets(k: usize) -> Vec<PatternSet> {
    let pats = type_one_two_patterns();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pats.len()) {
        if mask.count_ones() as usize == k {
            out.push(PatternSet::new(
                (0..pats.len())
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| pats[i].clone()),
            ));
        }
    }
    out.sort();
    out
}

/// Splits all `k`-subsets into symmetry classes and groups the classes by
/// counting sequence through `n_max`.
pub fn classify(k: usize, n_max: usize) -> Result<ClassificationReport> {
    if !(1..=12).contains(&k) {
        return Err(Error::OutOfRange {
            what: "k",
            value: k,
            max: 12,
        });
    }
    check_n(n_max)?;
    let sets = k_subsets(k);
    let sequences: Vec<CountSequence> = sets
        .par_iter()
        .map(|s| counting_sequence(s, n_max))
        .collect::<Result<_>>()?;
    let index: BTreeMap<&PatternSet, usize> =
        sets.iter().enumerate().map(|(i, s)| (s, i)).collect();

    let mut orbits = Vec::new();
    let mut symmetry_consistent = true;
    let mut assigned = vec![false; sets.len()];
    for (i, s) in sets.iter().enumerate() {
        if assigned[i] {
            continue;
        }
        let members = orbit(s);
        for m in &members {
            let j = index[m];
            assigned[j] = true;
            symmetry_consistent &= sequences[j] == sequences[i];
        }
        orbits.push(Orbit {
            members,
            sequence: sequences[i].clone(),
        });
    }

    let mut groups: BTreeMap<&CountSequence, Vec<usize>> = BTreeMap::new();
    for (i, o) in orbits.iter().enumerate() {
        groups.entry(&o.sequence).or_default().push(i);
    }
    let wilf_groups = groups
        .into_iter()
        .map(|(seq, idx)| {
            let identified_as = if seq.len() >= crate::sequences::catalog::MIN_IDENTIFY_TERMS {
                identify(seq)?
            } else {
                Vec::new()
            };
            Ok(WilfGroup {
                sequence: seq.clone(),
                sets: idx.iter().map(|&i| orbits[i].members.len()).sum(),
                orbits: idx,
                identified_as,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let candidates = candidate_formulas(k).unwrap_or_default();
    let mut eventual: BTreeMap<Option<Formula>, EventualClass> = BTreeMap::new();
    for (i, o) in orbits.iter().enumerate() {
        let best = best_formula(&o.sequence, &candidates)?;
        let class = eventual
            .entry(best.map(|(_, f)| f))
            .or_insert_with(|| EventualClass {
                formula: best.map(|(_, f)| f),
                n0: None,
                orbits: Vec::new(),
                sets: 0,
            });
        class.n0 = class.n0.max(best.map(|(t, _)| t));
        class.orbits.push(i);
        class.sets += o.members.len();
    }
    let eventual_classes = eventual.into_values().collect();

    let evidence = if k <= 2 {
        format!("sequences agree through n = {n_max}")
    } else {
        format!("consistent with conjecture through n = {n_max}")
    };
    Ok(ClassificationReport {
        k,
        n_max,
        sets: sets.len(),
        orbits,
        wilf_groups,
        eventual_classes,
        symmetry_consistent,
        evidence,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_counts() {
        assert_eq!(k_subsets(1).len(), 12);
        assert_eq!(k_subsets(2).len(), 66);
        assert_eq!(k_subsets(12).len(), 1);
        let two = k_subsets(2);
        assert!(two.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn singles() {
        let r = classify(1, 9).unwrap();
        assert_eq!(r.sets, 12);
        assert_eq!(r.symmetry_class_count(), 3);
        assert_eq!(r.wilf_class_count(), 2);
        assert!(r.symmetry_consistent);
        assert!(r.orbits.iter().all(|o| 4 % o.members.len() == 0));
        assert_eq!(r.eventual_class_count(), 2);
    }

    #[test]
    fn triples_split_by_sequence_but_not_by_eventual_formula() {
        let r = classify(3, 8).unwrap();
        assert_eq!((r.sets, r.symmetry_class_count()), (220, 55));
        assert_eq!(r.eventual_class_count(), 9);
        // Several eventually-zero orbits die out at different lengths.
        assert_eq!(r.wilf_class_count(), 14);
        assert!(r.eventual_classes.iter().all(|c| c.formula.is_some()));
    }

    #[test]
    fn report_round_trips_through_json() {
        let r = classify(1, 6).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        let back: ClassificationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
        assert!(r.render_text().contains("3 symmetry classes"));
    }

    #[test]
    fn k_out_of_range() {
        assert!(classify(0, 5).is_err());
        assert!(classify(13, 5).is_err());
    }
}
