//! Enumeration of permutations avoiding sets of vincular (dashed) patterns,
//! with reference counting sequences and explicit bijections to partitions,
//! Dyck words, compositions, subsets and bit strings.

pub mod bijections;
pub mod enumerate;
pub mod error;
pub mod pattern;
pub mod perm;
pub mod sequences;

pub use enumerate::{
    classify, count_avoiders, counting_sequence, list_avoiders, orbit, verify_table,
    ClassificationReport, CountSequence, FormulaCheck, TableKind, Verdict, MAX_N,
};
pub use error::{Error, Result};
pub use pattern::{
    avoids, occurrences, parse_pattern, symmetry_apply, type_one_two_patterns, Occurrence,
    PatternSet, VincularPattern,
};
pub use perm::{
    all_permutations, complement, from_increasing_tree, left_to_right_minima, reduce, reverse,
    to_increasing_tree, unlabel, IncreasingBinaryTree, Permutation, Symmetry, TreeShape, Word,
};
pub use sequences::{SequenceName, SetPartition};
