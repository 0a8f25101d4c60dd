//! Explicit bijections between avoider classes and other combinatorial
//! families, each with a constructive inverse.
//!
//! Most maps work on the factorization of a permutation at its left-to-right
//! minima, `π = m_k τ_k ⋯ m_1 τ_1 m_0 τ_0` with `m_k > ⋯ > m_0 = 1`; each
//! `m_i τ_i` is called a run below. Every map rejects inputs outside its
//! domain with [`Error::Domain`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pattern::{avoids, PatternSet};
use crate::perm::{to_increasing_tree, unlabel, Permutation, TreeShape, Word};
use crate::sequences::SetPartition;

fn require(map: &'static str, set: &str, p: &Permutation) -> Result<()> {
    let set: PatternSet = set.parse().expect("static pattern set");
    if avoids(&set, p) {
        Ok(())
    } else {
        Err(Error::domain(map, format!("{p} does not avoid {set}")))
    }
}

/// Splits `p` into runs, each starting at a left-to-right minimum.
fn runs(p: &[u32]) -> Vec<&[u32]> {
    let mut out = Vec::new();
    let mut start = 0;
    let mut best = u32::MAX;
    for (i, &x) in p.iter().enumerate() {
        if x < best {
            if i > 0 {
                out.push(&p[start..i]);
            }
            start = i;
            best = x;
        }
    }
    if !p.is_empty() {
        out.push(&p[start..]);
    }
    out
}

fn partition_of_runs(p: &Permutation) -> SetPartition {
    SetPartition::new(runs(p.letters()).into_iter().map(<[u32]>::to_vec).collect())
        .expect("runs of a permutation partition [n]")
}

/// Writes the blocks in order of decreasing minimum, each as its minimum
/// followed by the other elements in ascending or descending order.
fn permutation_of_blocks(part: &SetPartition, descending_tail: bool) -> Permutation {
    let mut letters = Vec::with_capacity(part.n());
    for block in part.blocks().iter().rev() {
        letters.push(block[0]);
        if descending_tail {
            letters.extend(block[1..].iter().rev());
        } else {
            letters.extend(&block[1..]);
        }
    }
    Permutation::from_vec_unchecked(letters)
}

/// `S_n(1-23)` to set partitions of `[n]`: the first block of `σ1τ` is the
/// letter set of `1τ`, the rest come from `σ`.
pub fn phi_123(p: &Permutation) -> Result<SetPartition> {
    require("phi_123", "1-23", p)?;
    Ok(partition_of_runs(p))
}

pub fn phi_123_inverse(part: &SetPartition) -> Permutation {
    permutation_of_blocks(part, true)
}

/// `S_n(1-32)` to set partitions of `[n]`, same block extraction.
pub fn phi_132(p: &Permutation) -> Result<SetPartition> {
    require("phi_132", "1-32", p)?;
    Ok(partition_of_runs(p))
}

pub fn phi_132_inverse(part: &SetPartition) -> Permutation {
    permutation_of_blocks(part, false)
}

/// `Θ(σ1τ) = Θ(σ) 1 τ^r`; exchanges `S_n(1-23)` and `S_n(1-32)` and is its
/// own inverse.
pub fn theta(p: &Permutation) -> Result<Permutation> {
    let a: PatternSet = "1-23".parse()?;
    let b: PatternSet = "1-32".parse()?;
    if !avoids(&a, p) && !avoids(&b, p) {
        return Err(Error::domain(
            "theta",
            format!("{p} avoids neither 1-23 nor 1-32"),
        ));
    }
    let mut letters = Vec::with_capacity(p.len());
    for run in runs(p.letters()) {
        letters.push(run[0]);
        letters.extend(run[1..].iter().rev());
    }
    Ok(Permutation::from_vec_unchecked(letters))
}

/// Word over `{u, d}`, balanced and never dipping below zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckWord {
    /// `true` for `u`.
    steps: Vec<bool>,
}

impl DyckWord {
    pub fn new(steps: Vec<bool>) -> Result<Self> {
        let mut height = 0i64;
        for (i, &up) in steps.iter().enumerate() {
            height += if up { 1 } else { -1 };
            if height < 0 {
                return Err(Error::parse(
                    "Dyck word",
                    format!("prefix of length {} dips below zero", i + 1),
                ));
            }
        }
        if height != 0 {
            return Err(Error::parse("Dyck word", "unbalanced"));
        }
        Ok(DyckWord { steps })
    }

    pub fn steps(&self) -> &[bool] {
        &self.steps
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }
}

impl fmt::Display for DyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.steps.is_empty() {
            return f.write_str("ε");
        }
        for &up in &self.steps {
            f.write_str(if up { "u" } else { "d" })?;
        }
        Ok(())
    }
}

impl FromStr for DyckWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "ε" {
            return Ok(DyckWord::default());
        }
        let steps = s
            .chars()
            .map(|c| match c {
                'u' => Ok(true),
                'd' => Ok(false),
                other => Err(Error::parse(
                    "Dyck word",
                    format!("unexpected letter `{other}`"),
                )),
            })
            .collect::<Result<Vec<_>>>()?;
        DyckWord::new(steps)
    }
}

/// `Ψ(leaf) = ε`, `Ψ(node(L, R)) = u Ψ(L) d Ψ(R)`.
pub fn psi_dyck(t: &TreeShape) -> DyckWord {
    fn walk(t: &TreeShape, out: &mut Vec<bool>) {
        if let TreeShape::Node(l, r) = t {
            out.push(true);
            walk(l, out);
            out.push(false);
            walk(r, out);
        }
    }
    let mut steps = Vec::with_capacity(2 * t.size());
    walk(t, &mut steps);
    DyckWord { steps }
}

pub fn psi_dyck_inverse(w: &DyckWord) -> TreeShape {
    fn parse(steps: &[bool]) -> TreeShape {
        if steps.is_empty() {
            return TreeShape::Leaf;
        }
        // steps[0] is u; find its matching d.
        let mut height = 0;
        let mut close = 0;
        for (i, &up) in steps.iter().enumerate() {
            height += if up { 1 } else { -1 };
            if height == 0 {
                close = i;
                break;
            }
        }
        TreeShape::node(parse(&steps[1..close]), parse(&steps[close + 1..]))
    }
    parse(&w.steps)
}

/// `S_n(2-13)` to Dyck words of semilength `n` through the unlabelled
/// increasing tree.
pub fn dyck_of_avoider(p: &Permutation) -> Result<DyckWord> {
    require("psi_dyck", "2-13", p)?;
    Ok(psi_dyck(&unlabel(&to_increasing_tree(&Word::from(p)))))
}

/// The unique `2-13` avoider whose tree has the shape encoded by `w`: the
/// root takes the smallest label, then the right subtree, then the left.
pub fn avoider_of_dyck(w: &DyckWord) -> Permutation {
    fn label(t: &TreeShape, base: u32, out: &mut Vec<u32>) {
        if let TreeShape::Node(l, r) = t {
            let right = r.size() as u32;
            label(l, base + 1 + right, out);
            out.push(base + 1);
            label(r, base + 1, out);
        }
    }
    let shape = psi_dyck_inverse(w);
    let mut letters = Vec::with_capacity(shape.size());
    label(&shape, 0, &mut letters);
    Permutation::from_vec_unchecked(letters)
}

/// Ordered sum of positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::parse("composition", "parts must be positive"));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn total(&self) -> u32 {
        self.parts.iter().sum()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("ε");
        }
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join("+"))
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "ε" {
            return Ok(Composition::default());
        }
        let parts = s
            .split('+')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::parse("composition", format!("`{t}` is not a part")))
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}

/// `S_n(1-23, 2-13)` to compositions of `n`: `Ψ(σ1τ) = Ψ(σ) + |1τ|`.
pub fn psi_comp(p: &Permutation) -> Result<Composition> {
    require("psi_comp", "1-23,2-13", p)?;
    Ok(Composition {
        parts: runs(p.letters()).iter().map(|r| r.len() as u32).collect(),
    })
}

/// Rebuilds the avoider: the rightmost run holds the smallest letters, each
/// run is its minimum followed by the rest in decreasing order.
pub fn psi_comp_inverse(c: &Composition) -> Permutation {
    let mut blocks: Vec<Vec<u32>> = Vec::with_capacity(c.parts.len());
    let mut base = 0u32;
    for &part in c.parts.iter().rev() {
        let mut block = vec![base + 1];
        block.extend((base + 2..=base + part).rev());
        blocks.push(block);
        base += part;
    }
    blocks.reverse();
    Permutation::from_vec_unchecked(blocks.concat())
}

/// A subset of `{2, ..., n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Subset {
    pub n: usize,
    elements: Vec<u32>,
}

impl Subset {
    pub fn new(n: usize, mut elements: Vec<u32>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        if let Some(&x) = elements.iter().find(|&&x| x < 2 || x as usize > n) {
            return Err(Error::parse("subset", format!("{x} is not in {{2..{n}}}")));
        }
        Ok(Subset { n, elements })
    }

    /// Parses `{2,4}` as a subset of `{2..n}`.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let inner = text
            .trim()
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| Error::parse("subset", format!("`{text}` is not in braces")))?;
        let elements = if inner.trim().is_empty() {
            Vec::new()
        } else {
            inner
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::parse("subset", format!("`{t}` is not an element")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Subset::new(n, elements)
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.elements.iter().map(|x| x.to_string()).collect();
        write!(f, "{{{}}}", inner.join(","))
    }
}

/// `S_n(1-23, 23-1)` to subsets of `{2..n}`: the letters left of `1`.
pub fn subset_map(p: &Permutation) -> Result<Subset> {
    require("subset_map", "1-23,23-1", p)?;
    let one = p.letters().iter().position(|&x| x == 1).unwrap_or(0);
    Subset::new(p.len(), p.letters()[..one].to_vec())
}

/// `S` in decreasing order, then `1`, then the complement in decreasing
/// order.
pub fn subset_inverse(s: &Subset) -> Permutation {
    if s.n == 0 {
        return Permutation::empty();
    }
    let mut letters: Vec<u32> = s.elements.iter().rev().copied().collect();
    letters.push(1);
    letters.extend(
        (2..=s.n as u32)
            .rev()
            .filter(|x| s.elements.binary_search(x).is_err()),
    );
    Permutation::from_vec_unchecked(letters)
}

/// A word in `{0,1}^(n-1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BinarySequence {
    bits: Vec<bool>,
}

impl BinarySequence {
    pub fn new(bits: Vec<bool>) -> Self {
        BinarySequence { bits }
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Size of the permutations this sequence encodes.
    pub fn host_len(&self) -> usize {
        self.bits.len() + 1
    }
}

impl fmt::Display for BinarySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bits.is_empty() {
            return f.write_str("ε");
        }
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for BinarySequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "ε" {
            return Ok(BinarySequence::new(Vec::new()));
        }
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::parse(
                    "binary sequence",
                    format!("unexpected `{other}`"),
                )),
            })
            .collect::<Result<Vec<_>>>()
            .map(BinarySequence::new)
    }
}

/// `S_n(3-12, 2-13)` to `{0,1}^(n-1)`, `n >= 1`: `Ψ(σ1τ) = xΨ(στ)` with
/// `x = 1` when `σ` is nonempty and `x = 0` when `τ` is nonempty.
pub fn binstring_map(p: &Permutation) -> Result<BinarySequence> {
    if p.is_empty() {
        return Err(Error::domain(
            "binstring_map",
            "the empty permutation has no bit string",
        ));
    }
    require("binstring_map", "3-12,2-13", p)?;
    let mut rest: Vec<u32> = p.letters().to_vec();
    let mut bits = Vec::with_capacity(p.len() - 1);
    while rest.len() > 1 {
        let (i, _) = rest.iter().enumerate().min_by_key(|&(_, &x)| x).unwrap();
        if i == 0 {
            bits.push(false);
        } else if i == rest.len() - 1 {
            bits.push(true);
        } else {
            return Err(Error::domain(
                "binstring_map",
                format!("{p}: a minimum has letters on both sides"),
            ));
        }
        rest.remove(i);
    }
    Ok(BinarySequence::new(bits))
}

/// Letters `1..n-1` go to the front (`0`) or back (`1`) of the free slots in
/// turn; `n` takes the last free slot.
pub fn binstring_inverse(b: &BinarySequence) -> Permutation {
    let n = b.host_len();
    let mut out = vec![0u32; n];
    let (mut lo, mut hi) = (0usize, n - 1);
    for (i, &bit) in b.bits.iter().enumerate() {
        if bit {
            out[hi] = i as u32 + 1;
            hi -= 1;
        } else {
            out[lo] = i as u32 + 1;
            lo += 1;
        }
    }
    out[lo] = n as u32;
    Permutation::from_vec_unchecked(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Step {
    Up,
    Flat,
    Down,
}

/// Motzkin path of a `{1-23, 21-3}` avoider. Its runs are `m_i U_i` with
/// `U_i` decreasing and above every later letter, so reading values from
/// `n` down to `1` meets each `U_i` in one stretch and the minima in run
/// order: the top of a tail opens (up), the rest of a tail is flat, a
/// minimum closes the oldest open run (down) or is a singleton run (flat at
/// height zero).
fn path_of_upper_avoider(p: &[u32]) -> Vec<Step> {
    let n = p.len();
    let mut step = vec![Step::Flat; n + 1];
    for run in runs(p) {
        if run.len() > 1 {
            step[run[0] as usize] = Step::Down;
            step[run[1] as usize] = Step::Up;
        }
    }
    (1..=n).rev().map(|v| step[v]).collect()
}

fn upper_avoider_of_path(path: &[Step]) -> Vec<u32> {
    // (minimum, tail) per run, in run order.
    let mut runs: Vec<(u32, Vec<u32>)> = Vec::new();
    let mut open = std::collections::VecDeque::new();
    let mut v = path.len() as u32;
    for &s in path {
        match s {
            Step::Up => {
                open.push_back(runs.len());
                runs.push((0, vec![v]));
            }
            Step::Flat if open.is_empty() => runs.push((v, Vec::new())),
            Step::Flat => runs.last_mut().expect("an open run").1.push(v),
            Step::Down => {
                let i = open.pop_front().expect("an open run");
                runs[i].0 = v;
            }
        }
        v -= 1;
    }
    runs.into_iter()
        .flat_map(|(m, tail)| std::iter::once(m).chain(tail))
        .collect()
}

/// Motzkin path of a `{1-23, 13-2}` avoider. Its runs have at most two
/// letters and form a non-crossing partial matching; reading values from
/// `1` up, a run minimum with a partner is up, the partner is down, a
/// singleton is flat.
fn path_of_lower_avoider(p: &[u32]) -> Vec<Step> {
    let n = p.len();
    let mut step = vec![Step::Flat; n + 1];
    for run in runs(p) {
        if run.len() > 1 {
            step[run[0] as usize] = Step::Up;
            step[run[1] as usize] = Step::Down;
        }
    }
    (1..=n).map(|v| step[v]).collect()
}

fn lower_avoider_of_path(path: &[Step]) -> Vec<u32> {
    let mut runs: Vec<Vec<u32>> = Vec::new();
    let mut open = Vec::new();
    for (i, &s) in path.iter().enumerate() {
        let v = i as u32 + 1;
        match s {
            Step::Up => open.push(v),
            Step::Flat => runs.push(vec![v]),
            Step::Down => runs.push(vec![open.pop().expect("an open letter"), v]),
        }
    }
    runs.sort_by(|a, b| b[0].cmp(&a[0]));
    runs.concat()
}

/// `Λ: S_n(1-23, 21-3) → S_n(1-23, 13-2)`, through a shared Motzkin path.
/// A permutation starting with `n` maps to one ending in `1`, and one with
/// `n` second maps to one with `1` second to last.
pub fn lambda_map(p: &Permutation) -> Result<Permutation> {
    require("lambda_map", "1-23,21-3", p)?;
    let path = path_of_upper_avoider(p.letters());
    Ok(Permutation::from_vec_unchecked(lower_avoider_of_path(
        &path,
    )))
}

pub fn lambda_inverse(s: &Permutation) -> Result<Permutation> {
    require("lambda_inverse", "1-23,13-2", s)?;
    let path = path_of_lower_avoider(s.letters());
    Ok(Permutation::from_vec_unchecked(upper_avoider_of_path(
        &path,
    )))
}

/// `S_n(1-32, 21-3)` to strongly monotone partitions: each block is a
/// left-to-right minimum together with the run that follows it.
pub fn smp_map(p: &Permutation) -> Result<SetPartition> {
    require("smp_map", "1-32,21-3", p)?;
    Ok(partition_of_runs(p))
}

pub fn smp_inverse(part: &SetPartition) -> Result<Permutation> {
    if !part.flags().strongly_monotone {
        return Err(Error::domain(
            "smp_inverse",
            format!("{part} is not strongly monotone"),
        ));
    }
    Ok(permutation_of_blocks(part, false))
}

/// All Dyck words of semilength `n`, lexicographic with `u < d`.
pub fn dyck_words(n: usize) -> Vec<DyckWord> {
    fn rec(steps: &mut Vec<bool>, ups: usize, downs: usize, n: usize, out: &mut Vec<DyckWord>) {
        if downs == n {
            out.push(DyckWord {
                steps: steps.clone(),
            });
            return;
        }
        if ups < n {
            steps.push(true);
            rec(steps, ups + 1, downs, n, out);
            steps.pop();
        }
        if downs < ups {
            steps.push(false);
            rec(steps, ups, downs + 1, n, out);
            steps.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(2 * n), 0, 0, n, &mut out);
    out
}

/// All compositions of `n`.
pub fn compositions(n: usize) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition::default()];
    }
    // Each of the n-1 gaps between unit parts is cut or not.
    (0u32..1 << (n - 1))
        .map(|cuts| {
            let mut parts = Vec::new();
            let mut run = 1;
            for gap in 0..n - 1 {
                if cuts & (1 << gap) != 0 {
                    parts.push(run);
                    run = 1;
                } else {
                    run += 1;
                }
            }
            parts.push(run);
            Composition { parts }
        })
        .collect()
}

/// All subsets of `{2..n}`.
pub fn subsets(n: usize) -> Vec<Subset> {
    let m = n.saturating_sub(1);
    (0u32..1 << m)
        .map(|mask| Subset {
            n,
            elements: (0..m)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| i as u32 + 2)
                .collect(),
        })
        .collect()
}

/// All of `{0,1}^(n-1)` for `n >= 1`.
pub fn binary_sequences(n: usize) -> Vec<BinarySequence> {
    assert!(n >= 1);
    let m = n - 1;
    (0u32..1 << m)
        .map(|mask| BinarySequence::new((0..m).map(|i| mask & (1 << i) != 0).collect()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn part(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    #[test]
    fn phi_examples() {
        let expected = part("{1,3,8}/{2}/{4,5,7,9}/{6}");
        assert_eq!(phi_123(&perm("649752183")).unwrap(), expected);
        assert_eq!(phi_132(&perm("645792138")).unwrap(), expected);
        assert_eq!(phi_123_inverse(&expected), perm("649752183"));
        assert_eq!(phi_132_inverse(&expected), perm("645792138"));
        assert_eq!(
            phi_123(&Permutation::empty()).unwrap(),
            SetPartition::empty()
        );
        assert_eq!(
            phi_132(&Permutation::empty()).unwrap(),
            SetPartition::empty()
        );
        assert_eq!(phi_123(&perm("321")).unwrap(), part("{1}/{2}/{3}"));
        assert_eq!(phi_132(&perm("123")).unwrap(), part("{1,2,3}"));
        assert!(matches!(phi_123(&perm("123")), Err(Error::Domain { .. })));
        assert!(matches!(phi_132(&perm("132")), Err(Error::Domain { .. })));
    }

    #[test]
    fn theta_examples() {
        assert_eq!(theta(&Permutation::empty()).unwrap(), Permutation::empty());
        assert_eq!(theta(&perm("3142")).unwrap(), perm("3124"));
        let image = theta(&perm("649752183")).unwrap();
        assert_eq!(image, perm("645792138"));
        assert_eq!(theta(&image).unwrap(), perm("649752183"));
        // 1243 contains both 1-23 (124) and 1-32 (143).
        assert!(matches!(theta(&perm("1243")), Err(Error::Domain { .. })));
    }

    #[test]
    fn dyck_examples() {
        assert_eq!(psi_dyck(&TreeShape::Leaf).to_string(), "ε");
        let single = TreeShape::node(TreeShape::Leaf, TreeShape::Leaf);
        assert_eq!(psi_dyck(&single).to_string(), "ud");
        let shape = unlabel(&to_increasing_tree(&"213".parse().unwrap()));
        assert_eq!(psi_dyck(&shape).to_string(), "uuddud");
        assert_eq!(psi_dyck_inverse(&"uuddud".parse().unwrap()), shape);
        assert_eq!(avoider_of_dyck(&"uuddud".parse().unwrap()), perm("312"));
        assert_eq!(dyck_of_avoider(&perm("312")).unwrap().to_string(), "uuddud");
        assert!(matches!(
            dyck_of_avoider(&perm("213")),
            Err(Error::Domain { .. })
        ));
        assert!("udd".parse::<DyckWord>().is_err());
        assert!("duud".parse::<DyckWord>().is_err());
    }

    #[test]
    fn composition_examples() {
        assert_eq!(psi_comp(&perm("958764132")).unwrap().to_string(), "1+4+1+3");
        assert_eq!(
            psi_comp_inverse(&"1+4+1+3".parse().unwrap()),
            perm("958764132")
        );
        assert_eq!(psi_comp(&perm("1")).unwrap().parts(), &[1]);
        assert_eq!(psi_comp(&perm("321")).unwrap().parts(), &[1, 1, 1]);
        assert!(psi_comp(&perm("123")).is_err());
    }

    #[test]
    fn subset_examples() {
        let s = subset_map(&perm("421653")).unwrap();
        assert_eq!(s.to_string(), "{2,4}");
        assert_eq!(subset_inverse(&s), perm("421653"));
        assert!(subset_map(&perm("165432")).unwrap().elements().is_empty());
        assert_eq!(
            subset_map(&perm("654321")).unwrap().elements(),
            &[2, 3, 4, 5, 6]
        );
        assert_eq!(Subset::parse("{2,4}", 6).unwrap(), s);
        assert!(Subset::parse("{1}", 6).is_err());
    }

    #[test]
    fn binstring_examples() {
        let b = binstring_map(&perm("136542")).unwrap();
        assert_eq!(b.to_string(), "01011");
        assert_eq!(binstring_inverse(&b), perm("136542"));
        assert!(binstring_map(&perm("1")).unwrap().bits().is_empty());
        assert_eq!(
            binstring_map(&Permutation::identity(6))
                .unwrap()
                .to_string(),
            "00000"
        );
        assert!(matches!(
            binstring_map(&Permutation::empty()),
            Err(Error::Domain { .. })
        ));
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(
            lambda_map(&Permutation::empty()).unwrap(),
            Permutation::empty()
        );
        assert_eq!(lambda_map(&perm("1")).unwrap(), perm("1"));
        assert_eq!(lambda_map(&perm("132")).unwrap(), perm("213"));
        assert_eq!(lambda_map(&perm("312")).unwrap(), perm("231"));
        assert_eq!(lambda_map(&perm("2413")).unwrap(), perm("2314"));
        assert_eq!(lambda_inverse(&perm("2314")).unwrap(), perm("2413"));
        assert!(lambda_map(&perm("213")).is_err());
        assert!(lambda_inverse(&perm("132")).is_err());
    }

    #[test]
    fn smp_examples() {
        assert_eq!(smp_map(&perm("312")).unwrap(), part("{1,2}/{3}"));
        assert_eq!(
            smp_map(&Permutation::empty()).unwrap(),
            SetPartition::empty()
        );
        assert_eq!(smp_inverse(&part("{1,2}/{3}")).unwrap(), perm("312"));
        assert!(smp_inverse(&part("{1,3}/{2}")).is_err());
    }

    #[test]
    fn image_sizes() {
        use crate::enumerate::list_avoiders;
        let domain = list_avoiders(&"1-23,21-3".parse().unwrap(), 6).unwrap();
        let images: std::collections::BTreeSet<_> =
            domain.iter().map(|p| lambda_map(p).unwrap()).collect();
        assert_eq!(images.len(), 51);
        let domain = list_avoiders(&"1-32,21-3".parse().unwrap(), 8).unwrap();
        let images: std::collections::BTreeSet<_> =
            domain.iter().map(|p| smp_map(p).unwrap()).collect();
        assert_eq!(images.len(), 496);
    }

    #[test]
    fn codomain_listings() {
        assert_eq!(dyck_words(3).len(), 5);
        assert_eq!(dyck_words(0), vec![DyckWord::default()]);
        assert_eq!(compositions(4).len(), 8);
        assert!(compositions(5).iter().all(|c| c.total() == 5));
        assert_eq!(subsets(1).len(), 1);
        assert_eq!(subsets(4).len(), 8);
        assert_eq!(binary_sequences(1).len(), 1);
        assert_eq!(binary_sequences(4).len(), 8);
    }
}
