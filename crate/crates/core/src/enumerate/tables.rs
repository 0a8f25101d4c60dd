//! Reference tables: the single-pattern classes, the 21 symmetry classes of
//! pattern pairs with their counting formulas, and the per-cardinality panels
//! for larger sets.

use crate::enumerate::verify::Formula;
use crate::pattern::PatternSet;
use crate::sequences::SequenceName;

/// One symmetry class with its stated counting formula.
#[derive(Clone, Debug)]
pub struct TableRow {
    pub label: &'static str,
    pub sets: Vec<PatternSet>,
    pub formula: Formula,
}

fn row(label: &'static str, sets: &[&str], name: SequenceName) -> TableRow {
    TableRow {
        label,
        sets: sets.iter().map(|s| s.parse().unwrap()).collect(),
        formula: Formula::Catalog(name),
    }
}

pub fn single_table() -> Vec<TableRow> {
    use SequenceName::*;
    vec![
        row("1", &["1-23", "3-21", "12-3", "32-1"], Bell),
        row("2", &["1-32", "3-12", "21-3", "23-1"], Bell),
        row("3", &["2-13", "2-31", "13-2", "31-2"], Catalan),
    ]
}

pub fn pair_table() -> Vec<TableRow> {
    use SequenceName::*;
    vec![
        row("1", &["1-23,32-1", "3-21,12-3"], Zero),
        row("2", &["1-23,3-21", "32-1,12-3"], TwoNMinus2),
        row(
            "3",
            &["1-23,2-31", "3-21,2-13", "12-3,31-2", "32-1,13-2"],
            NChoose2Plus1,
        ),
        row(
            "4a",
            &["1-23,2-13", "3-21,2-31", "12-3,13-2", "32-1,31-2"],
            Pow2NMinus1,
        ),
        row(
            "4b",
            &["1-23,23-1", "3-21,21-3", "12-3,3-12", "32-1,1-32"],
            Pow2NMinus1,
        ),
        row(
            "4c",
            &["1-23,31-2", "3-21,13-2", "12-3,2-31", "32-1,2-13"],
            Pow2NMinus1,
        ),
        row(
            "4d",
            &["1-32,2-13", "3-12,2-31", "13-2,21-3", "23-1,31-2"],
            Pow2NMinus1,
        ),
        row(
            "4e",
            &["1-32,2-31", "3-12,2-13", "31-2,21-3", "23-1,13-2"],
            Pow2NMinus1,
        ),
        row("4f", &["1-32,3-12", "23-1,21-3"], Pow2NMinus1),
        row("4g", &["1-32,23-1", "3-12,21-3"], Pow2NMinus1),
        row(
            "4h",
            &["1-32,31-2", "3-12,13-2", "21-3,2-31", "23-1,2-13"],
            Pow2NMinus1,
        ),
        row("4i", &["2-13,2-31", "31-2,13-2"], Pow2NMinus1),
        row("4j", &["2-13,13-2", "2-31,31-2"], Pow2NMinus1),
        row("4k", &["2-13,31-2", "2-31,13-2"], Pow2NMinus1),
        row(
            "5a",
            &["1-23,13-2", "3-21,31-2", "12-3,2-13", "32-1,2-31"],
            Motzkin,
        ),
        row(
            "5b",
            &["1-23,21-3", "3-21,23-1", "12-3,1-32", "32-1,3-12"],
            Motzkin,
        ),
        row("6", &["1-32,21-3", "3-12,23-1"], AStronglyMonotone),
        row(
            "7",
            &["1-23,3-12", "3-21,1-32", "23-1,12-3", "32-1,21-3"],
            BClass7,
        ),
        row(
            "8",
            &["1-23,1-32", "3-21,3-12", "21-3,12-3", "32-1,23-1"],
            Involutions,
        ),
        row(
            "9",
            &["1-32,13-2", "3-12,31-2", "21-3,2-13", "23-1,2-31"],
            Catalan,
        ),
        row("10", &["1-23,12-3", "3-21,32-1"], Bessel),
    ]
}

/// A cardinality row: `(classes, class size)` pairs, e.g. `1×1 + 6×2 + 30×4`.
#[derive(Clone, Debug)]
pub struct PanelRow {
    pub formula: Formula,
    pub multiplicities: Vec<(usize, usize)>,
}

/// The panel for sets of a given size, as stated in the reference table.
#[derive(Clone, Debug)]
pub struct MultiPanel {
    pub k: usize,
    pub sets: usize,
    pub symmetry_classes: usize,
    pub wilf_classes: usize,
    pub rows: Vec<PanelRow>,
}

pub fn multi_table(k: usize) -> Option<MultiPanel> {
    use Formula::{Catalog as C, Constant as K};
    use SequenceName::*;
    let r = |formula: Formula, multiplicities: &[(usize, usize)]| PanelRow {
        formula,
        multiplicities: multiplicities.to_vec(),
    };
    let (sets, symmetry_classes, wilf_classes, rows) = match k {
        3 => (
            220,
            55,
            9,
            vec![
                r(C(Zero), &[(7, 4)]),
                r(K(3), &[(1, 4)]),
                r(C(N), &[(24, 4)]),
                r(C(NChoose2Plus1), &[(2, 4)]),
                r(C(Fibonacci), &[(7, 4)]),
                r(C(CentralBinomial), &[(1, 4)]),
                r(C(Pow2NMinus2Plus1), &[(1, 4)]),
                r(C(Pow2NMinus1), &[(10, 4)]),
                r(C(Motzkin), &[(2, 4)]),
            ],
        ),
        4 => (
            495,
            135,
            9,
            vec![
                r(C(Zero), &[(1, 1), (6, 2), (30, 4)]),
                r(K(2), &[(2, 1), (5, 2), (35, 4)]),
                r(K(3), &[(1, 4)]),
                r(C(N), &[(37, 4), (1, 2)]),
                r(C(NChoose2Plus1), &[(1, 4)]),
                r(C(Fibonacci), &[(9, 4), (1, 2)]),
                r(C(CentralBinomial), &[(1, 2)]),
                r(C(Pow2NMinus2Plus1), &[(1, 2)]),
                r(C(Pow2NMinus1), &[(1, 4), (3, 2)]),
            ],
        ),
        5 => (
            792,
            198,
            5,
            vec![
                r(C(Zero), &[(84, 4)]),
                r(K(1), &[(16, 4)]),
                r(K(2), &[(74, 4)]),
                r(C(N), &[(20, 4)]),
                r(C(Fibonacci), &[(4, 4)]),
            ],
        ),
        6 => (
            924,
            246,
            4,
            vec![
                r(C(Zero), &[(17, 2), (124, 4)]),
                r(K(1), &[(4, 2), (38, 4)]),
                r(K(2), &[(7, 2), (51, 4)]),
                r(C(N), &[(1, 2), (3, 4)]),
                r(C(Fibonacci), &[(1, 2)]),
            ],
        ),
        7 => (
            792,
            198,
            3,
            vec![
                r(C(Zero), &[(140, 4)]),
                r(K(1), &[(40, 4)]),
                r(K(2), &[(18, 4)]),
            ],
        ),
        8 => (
            495,
            135,
            3,
            vec![
                r(C(Zero), &[(2, 1), (14, 2), (94, 4)]),
                r(K(1), &[(4, 2), (18, 4)]),
                r(K(2), &[(1, 1), (2, 4)]),
            ],
        ),
        9 => (220, 55, 2, vec![r(C(Zero), &[(50, 4)]), r(K(1), &[(5, 4)])]),
        10 => (
            66,
            21,
            2,
            vec![r(C(Zero), &[(8, 2), (12, 4)]), r(K(1), &[(1, 2)])],
        ),
        11 => (12, 3, 1, vec![r(C(Zero), &[(3, 4)])]),
        12 => (1, 1, 1, vec![r(C(Zero), &[(1, 1)])]),
        _ => return None,
    };
    Some(MultiPanel {
        k,
        sets,
        symmetry_classes,
        wilf_classes,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::orbit;
    use crate::pattern::type_one_two_patterns;
    use std::collections::BTreeSet;

    #[test]
    fn pair_rows_are_symmetry_classes_covering_all_pairs() {
        let rows = pair_table();
        assert_eq!(rows.len(), 21);
        let mut seen = BTreeSet::new();
        for r in &rows {
            let mut listed = r.sets.clone();
            listed.sort();
            assert_eq!(orbit(&r.sets[0]), listed, "row {}", r.label);
            for s in &r.sets {
                assert_eq!(s.len(), 2);
                assert!(seen.insert(s.clone()), "{s} listed twice");
            }
        }
        assert_eq!(seen.len(), 66);
    }

    #[test]
    fn single_rows_cover_all_patterns() {
        let all: BTreeSet<_> = single_table().iter().flat_map(|r| r.sets.clone()).collect();
        assert_eq!(all.len(), 12);
        for p in type_one_two_patterns() {
            assert!(all.contains(&PatternSet::new([p])));
        }
    }

    #[test]
    fn panel_multiplicities_add_up() {
        for k in 3..=12 {
            let panel = multi_table(k).unwrap();
            let classes: usize = panel
                .rows
                .iter()
                .flat_map(|r| r.multiplicities.iter())
                .map(|&(c, _)| c)
                .sum();
            let sets: usize = panel
                .rows
                .iter()
                .flat_map(|r| r.multiplicities.iter())
                .map(|&(c, s)| c * s)
                .sum();
            assert_eq!(classes, panel.symmetry_classes, "k = {k}");
            assert_eq!(sets, panel.sets, "k = {k}");
        }
        assert!(multi_table(2).is_none());
    }
}
