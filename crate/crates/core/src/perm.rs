//! Permutations, words with distinct letters, order reduction, the
//! reverse/complement symmetries and the increasing binary tree of a word.
//!
//! Positions and letters are 1-based. A permutation of length `n` is written
//! in one-line notation: a digit string such as `316452` when `n <= 9`, a
//! comma separated list such as `10,3,1,2,4,5,6,7,8,9` otherwise, and `ε` for
//! the empty permutation.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A finite word over the positive integers with no repeated letter.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<u32>,
}

impl Word {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if let Some(&zero) = letters.iter().find(|&&x| x == 0) {
            return Err(Error::InvalidWord(format!("letter {zero} is not positive")));
        }
        let mut sorted = letters.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidWord(format!("letter {} is repeated", w[0])));
        }
        Ok(Word { letters })
    }

    pub fn empty() -> Self {
        Word::default()
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl From<&Permutation> for Word {
    fn from(p: &Permutation) -> Self {
        Word {
            letters: p.letters.clone(),
        }
    }
}

impl From<Permutation> for Word {
    fn from(p: Permutation) -> Self {
        Word { letters: p.letters }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.letters)
    }
}

/// A bijection of `[n]` in one-line notation.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    letters: Vec<u32>,
}

impl Permutation {
    /// Checks that `letters` is a permutation of `1..=letters.len()`.
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        let n = letters.len();
        let mut seen = vec![false; n + 1];
        for &x in &letters {
            let idx = x as usize;
            if x == 0 || idx > n {
                return Err(Error::InvalidPermutation(format!(
                    "letter {x} is outside 1..={n}"
                )));
            }
            if seen[idx] {
                return Err(Error::InvalidPermutation(format!("letter {x} is repeated")));
            }
            seen[idx] = true;
        }
        Ok(Permutation { letters })
    }

    pub(crate) fn from_vec_unchecked(letters: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(letters.clone()).is_ok());
        Permutation { letters }
    }

    pub fn empty() -> Self {
        Permutation::default()
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            letters: (1..=n as u32).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<u32> {
        self.letters
    }

    /// The letter at 1-based position `i`.
    pub fn at(&self, i: usize) -> u32 {
        self.letters[i - 1]
    }

    pub fn reverse(&self) -> Permutation {
        reverse(self)
    }

    pub fn complement(&self) -> Permutation {
        complement(self)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.letters)
    }
}

fn write_letters(f: &mut fmt::Formatter<'_>, letters: &[u32]) -> fmt::Result {
    if letters.is_empty() {
        return f.write_str("ε");
    }
    let compact = letters.len() <= 9 && letters.iter().all(|&x| x <= 9);
    for (i, x) in letters.iter().enumerate() {
        if !compact && i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

fn parse_letters(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s.is_empty() || s == "ε" {
        return Ok(Vec::new());
    }
    if s.contains(',') {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::parse("permutation", format!("`{t}` is not a letter")))
            })
            .collect()
    } else {
        s.chars()
            .map(|c| match c.to_digit(10) {
                Some(d) => Ok(d),
                None => Err(Error::parse("permutation", format!("`{c}` is not a digit"))),
            })
            .collect()
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Permutation::new(parse_letters(s)?)
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::new(parse_letters(s)?)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The permutation order-isomorphic to `w`.
pub fn reduce(w: &Word) -> Permutation {
    Permutation {
        letters: reduce_slice(&w.letters),
    }
}

/// Reduction of a slice already known to have distinct letters.
pub(crate) fn reduce_slice(letters: &[u32]) -> Vec<u32> {
    let mut order: Vec<usize> = (0..letters.len()).collect();
    order.sort_unstable_by_key(|&i| letters[i]);
    let mut out = vec![0; letters.len()];
    for (rank, &i) in order.iter().enumerate() {
        out[i] = rank as u32 + 1;
    }
    out
}

pub fn reverse(p: &Permutation) -> Permutation {
    Permutation {
        letters: p.letters.iter().rev().copied().collect(),
    }
}

pub fn complement(p: &Permutation) -> Permutation {
    let n = p.len() as u32;
    Permutation {
        letters: p.letters.iter().map(|&x| n + 1 - x).collect(),
    }
}

/// Positions (1-based) of the left-to-right minima of `p`.
pub fn left_to_right_minima(p: &Permutation) -> Vec<usize> {
    let mut best = u32::MAX;
    let mut out = Vec::new();
    for (i, &x) in p.letters.iter().enumerate() {
        if x < best {
            best = x;
            out.push(i + 1);
        }
    }
    out
}

/// An element of the Klein four-group generated by reverse and complement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Symmetry {
    Identity,
    Reverse,
    Complement,
    ReverseComplement,
}

impl Symmetry {
    pub const ALL: [Symmetry; 4] = [
        Symmetry::Identity,
        Symmetry::Reverse,
        Symmetry::Complement,
        Symmetry::ReverseComplement,
    ];

    pub fn reverses(self) -> bool {
        matches!(self, Symmetry::Reverse | Symmetry::ReverseComplement)
    }

    pub fn complements(self) -> bool {
        matches!(self, Symmetry::Complement | Symmetry::ReverseComplement)
    }

    pub fn apply(self, p: &Permutation) -> Permutation {
        let mut out = p.clone();
        if self.complements() {
            out = complement(&out);
        }
        if self.reverses() {
            out = reverse(&out);
        }
        out
    }

    pub fn compose(self, other: Symmetry) -> Symmetry {
        let r = self.reverses() ^ other.reverses();
        let c = self.complements() ^ other.complements();
        match (r, c) {
            (false, false) => Symmetry::Identity,
            (true, false) => Symmetry::Reverse,
            (false, true) => Symmetry::Complement,
            (true, true) => Symmetry::ReverseComplement,
        }
    }
}

/// Binary tree whose labels increase along every path from the root.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum IncreasingBinaryTree {
    Leaf,
    Node {
        label: u32,
        left: Box<IncreasingBinaryTree>,
        right: Box<IncreasingBinaryTree>,
    },
}

impl IncreasingBinaryTree {
    pub fn node(label: u32, left: IncreasingBinaryTree, right: IncreasingBinaryTree) -> Self {
        IncreasingBinaryTree::Node {
            label,
            left: Box::new(left),
            right: Box::new(right),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            IncreasingBinaryTree::Leaf => 0,
            IncreasingBinaryTree::Node { left, right, .. } => 1 + left.size() + right.size(),
        }
    }
}

/// Unlabelled binary tree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TreeShape {
    Leaf,
    Node(Box<TreeShape>, Box<TreeShape>),
}

impl TreeShape {
    pub fn node(left: TreeShape, right: TreeShape) -> Self {
        TreeShape::Node(Box::new(left), Box::new(right))
    }

    pub fn size(&self) -> usize {
        match self {
            TreeShape::Leaf => 0,
            TreeShape::Node(l, r) => 1 + l.size() + r.size(),
        }
    }
}

/// Factors `w = σ m τ` at its minimum `m` and recurses on both sides.
pub fn to_increasing_tree(w: &Word) -> IncreasingBinaryTree {
    tree_of_slice(&w.letters)
}

fn tree_of_slice(letters: &[u32]) -> IncreasingBinaryTree {
    match letters
        .iter()
        .enumerate()
        .min_by_key(|&(_, &x)| x)
        .map(|(i, _)| i)
    {
        None => IncreasingBinaryTree::Leaf,
        Some(i) => IncreasingBinaryTree::node(
            letters[i],
            tree_of_slice(&letters[..i]),
            tree_of_slice(&letters[i + 1..]),
        ),
    }
}

/// In-order reading of the labels.
pub fn from_increasing_tree(t: &IncreasingBinaryTree) -> Result<Word> {
    fn walk(t: &IncreasingBinaryTree, floor: u32, out: &mut Vec<u32>) -> Result<()> {
        if let IncreasingBinaryTree::Node { label, left, right } = t {
            if *label <= floor {
                return Err(Error::InvalidTree(format!(
                    "label {label} does not exceed its parent label {floor}"
                )));
            }
            walk(left, *label, out)?;
            out.push(*label);
            walk(right, *label, out)?;
        }
        Ok(())
    }
    let mut out = Vec::with_capacity(t.size());
    walk(t, 0, &mut out)?;
    Word::new(out).map_err(|e| Error::InvalidTree(e.to_string()))
}

pub fn unlabel(t: &IncreasingBinaryTree) -> TreeShape {
    match t {
        IncreasingBinaryTree::Leaf => TreeShape::Leaf,
        IncreasingBinaryTree::Node { left, right, .. } => {
            TreeShape::node(unlabel(left), unlabel(right))
        }
    }
}

/// All permutations of `[n]` in lexicographic order.
pub fn all_permutations(n: usize) -> Permutations {
    Permutations {
        next: Some((1..=n as u32).collect()),
    }
}

pub struct Permutations {
    next: Option<Vec<u32>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_lexicographic(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation { letters: current })
    }
}

fn next_lexicographic(a: &mut [u32]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let Some(i) = (0..a.len() - 1).rev().find(|&i| a[i] < a[i + 1]) else {
        return false;
    };
    let j = (i + 1..a.len()).rev().find(|&j| a[j] > a[i]).unwrap();
    a.swap(i, j);
    a[i + 1..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn word(letters: &[u32]) -> Word {
        Word::new(letters.to_vec()).unwrap()
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(reduce(&word(&[2, 6, 5, 9])), perm("1324"));
        assert_eq!(reduce(&Word::empty()), Permutation::empty());
        assert_eq!(reduce(&word(&[3, 1, 2])), perm("312"));
    }

    #[test]
    fn repeated_letter_is_rejected() {
        assert!(matches!(
            Word::new(vec![2, 5, 2]),
            Err(Error::InvalidWord(_))
        ));
        assert!(matches!(Word::new(vec![0, 1]), Err(Error::InvalidWord(_))));
        assert!(Permutation::new(vec![1, 3]).is_err());
        assert!(Permutation::new(vec![1, 1]).is_err());
    }

    #[test]
    fn reverse_and_complement_examples() {
        assert_eq!(reverse(&perm("316452")), perm("254613"));
        assert_eq!(complement(&perm("316452")), perm("461325"));
        assert_eq!(reverse(&Permutation::empty()), Permutation::empty());
        assert_eq!(complement(&Permutation::empty()), Permutation::empty());
        assert_eq!(reverse(&perm("1")), perm("1"));
        assert_eq!(complement(&perm("21")), perm("12"));
    }

    #[test]
    fn one_line_notation() {
        assert_eq!(perm("316452").to_string(), "316452");
        assert_eq!(Permutation::empty().to_string(), "ε");
        let long = Permutation::identity(10).reverse();
        assert_eq!(long.to_string(), "10,9,8,7,6,5,4,3,2,1");
        assert_eq!(long.to_string().parse::<Permutation>().unwrap(), long);
        assert!("3a1".parse::<Permutation>().is_err());
    }

    fn t316452() -> IncreasingBinaryTree {
        use IncreasingBinaryTree::Leaf;
        let n = IncreasingBinaryTree::node;
        n(
            1,
            n(3, Leaf, Leaf),
            n(2, n(4, n(6, Leaf, Leaf), n(5, Leaf, Leaf)), Leaf),
        )
    }

    #[test]
    fn increasing_tree_of_316452() {
        let w = Word::from(perm("316452"));
        assert_eq!(to_increasing_tree(&w), t316452());
        assert_eq!(from_increasing_tree(&t316452()).unwrap(), w);
        let leaf = || TreeShape::Leaf;
        let shape = TreeShape::node(
            TreeShape::node(leaf(), leaf()),
            TreeShape::node(
                TreeShape::node(
                    TreeShape::node(leaf(), leaf()),
                    TreeShape::node(leaf(), leaf()),
                ),
                leaf(),
            ),
        );
        assert_eq!(unlabel(&t316452()), shape);
    }

    #[test]
    fn increasing_tree_small_cases() {
        use IncreasingBinaryTree::Leaf;
        assert_eq!(to_increasing_tree(&Word::empty()), Leaf);
        assert_eq!(unlabel(&Leaf), TreeShape::Leaf);
        assert!(from_increasing_tree(&Leaf).unwrap().is_empty());
        let single = IncreasingBinaryTree::node(1, Leaf, Leaf);
        assert_eq!(from_increasing_tree(&single).unwrap(), word(&[1]));
        assert_eq!(
            to_increasing_tree(&word(&[2, 1])),
            IncreasingBinaryTree::node(1, IncreasingBinaryTree::node(2, Leaf, Leaf), Leaf)
        );
        assert_eq!(
            unlabel(&to_increasing_tree(&word(&[2, 1]))),
            unlabel(&to_increasing_tree(&word(&[3, 1])))
        );
    }

    #[test]
    fn non_increasing_tree_is_rejected() {
        use IncreasingBinaryTree::Leaf;
        let bad = IncreasingBinaryTree::node(2, IncreasingBinaryTree::node(1, Leaf, Leaf), Leaf);
        assert!(matches!(
            from_increasing_tree(&bad),
            Err(Error::InvalidTree(_))
        ));
        let dup = IncreasingBinaryTree::node(
            1,
            IncreasingBinaryTree::node(2, Leaf, Leaf),
            IncreasingBinaryTree::node(2, Leaf, Leaf),
        );
        assert!(from_increasing_tree(&dup).is_err());
    }

    #[test]
    fn left_to_right_minima_examples() {
        assert_eq!(left_to_right_minima(&perm("316452")), vec![1, 2]);
        assert_eq!(left_to_right_minima(&Permutation::identity(6)), vec![1]);
        assert_eq!(
            left_to_right_minima(&Permutation::identity(6).reverse()),
            vec![1, 2, 3, 4, 5, 6]
        );
    }

    #[test]
    fn tree_round_trip_is_exhaustive_through_nine() {
        for n in 0..=9 {
            for p in all_permutations(n) {
                let w = Word::from(&p);
                let t = to_increasing_tree(&w);
                assert_eq!(from_increasing_tree(&t).unwrap(), w);
                assert_eq!(to_increasing_tree(&from_increasing_tree(&t).unwrap()), t);
            }
        }
    }

    #[test]
    fn permutations_are_lexicographic_and_complete() {
        let all: Vec<_> = all_permutations(4).collect();
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all_permutations(0).count(), 1);
    }

    #[test]
    fn symmetry_group_is_klein_four() {
        let p = perm("316452");
        for g in Symmetry::ALL {
            for h in Symmetry::ALL {
                assert_eq!(g.apply(&h.apply(&p)), g.compose(h).apply(&p));
                assert_eq!(g.compose(h), h.compose(g));
            }
            assert_eq!(g.compose(g), Symmetry::Identity);
        }
    }

    fn arb_perm() -> impl Strategy<Value = Permutation> {
        (0usize..12)
            .prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|v| Permutation::new(v).unwrap())
    }

    fn arb_word() -> impl Strategy<Value = Word> {
        proptest::collection::btree_set(1u32..60, 0..10)
            .prop_flat_map(|s| Just(s.into_iter().collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|v| Word::new(v).unwrap())
    }

    proptest! {
        #[test]
        fn reverse_complement_are_commuting_involutions(p in arb_perm()) {
            prop_assert_eq!(reverse(&reverse(&p)), p.clone());
            prop_assert_eq!(complement(&complement(&p)), p.clone());
            prop_assert_eq!(reverse(&complement(&p)), complement(&reverse(&p)));
        }

        #[test]
        fn reduce_is_idempotent_and_order_preserving(w in arb_word()) {
            let r = reduce(&w);
            prop_assert_eq!(reduce(&Word::from(&r)), r.clone());
            for i in 0..w.len() {
                for j in 0..w.len() {
                    prop_assert_eq!(w.letters()[i] < w.letters()[j], r.letters()[i] < r.letters()[j]);
                }
            }
        }

        #[test]
        fn tree_reads_back_in_order(w in arb_word()) {
            prop_assert_eq!(from_increasing_tree(&to_increasing_tree(&w)).unwrap(), w);
        }
    }
}
