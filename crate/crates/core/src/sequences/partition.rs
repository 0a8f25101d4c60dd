//! Set partitions of `[n]` and the block-order predicates used by the
//! counting oracles.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest `n` for which partitions are listed or brute-forced.
pub const MAX_PARTITION_N: usize = 12;

/// Blocks sorted by minimum, elements ascending.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    blocks: Vec<Vec<u32>>,
}

impl SetPartition {
    /// Canonicalizes `blocks` and checks that they partition `[n]` for
    /// `n` = total number of elements.
    pub fn new(blocks: Vec<Vec<u32>>) -> Result<Self> {
        let mut blocks = blocks;
        if blocks.iter().any(|b| b.is_empty()) {
            return Err(Error::parse("set partition", "empty block"));
        }
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for &x in blocks.iter().flatten() {
            if x == 0 || x as usize > n || seen[x as usize] {
                return Err(Error::parse(
                    "set partition",
                    format!("blocks do not partition 1..={n} (offending element {x})"),
                ));
            }
            seen[x as usize] = true;
        }
        Ok(SetPartition { blocks })
    }

    pub fn empty() -> Self {
        SetPartition::default()
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn flags(&self) -> PartitionFlags {
        partition_flags(self)
    }

    fn from_rgs(rgs: &[u8]) -> Self {
        let k = rgs.iter().map(|&b| b as usize + 1).max().unwrap_or(0);
        let mut blocks = vec![Vec::new(); k];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b as usize].push(i as u32 + 1);
        }
        SetPartition { blocks }
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.blocks.is_empty() {
            return f.write_str("∅");
        }
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            let inner: Vec<String> = b.iter().map(|x| x.to_string()).collect();
            write!(f, "{{{}}}", inner.join(","))?;
        }
        Ok(())
    }
}

impl FromStr for SetPartition {
    type Err = Error;

    /// Accepts `{1,3,8}/{2}/{4,5,7,9}/{6}` and `∅`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "∅" {
            return Ok(SetPartition::empty());
        }
        let blocks = s
            .split('/')
            .map(|b| {
                let inner = b
                    .trim()
                    .strip_prefix('{')
                    .and_then(|b| b.strip_suffix('}'))
                    .ok_or_else(|| {
                        Error::parse("set partition", format!("`{b}` is not a block"))
                    })?;
                inner
                    .split(',')
                    .map(|x| {
                        x.trim().parse::<u32>().map_err(|_| {
                            Error::parse("set partition", format!("`{x}` is not an element"))
                        })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        SetPartition::new(blocks)
    }
}

impl Serialize for SetPartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SetPartition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionFlags {
    /// No blocks `A`, `B` with `min A < min B < max A < max B`.
    pub non_overlapping: bool,
    /// Non-singleton blocks in order of minimum also have increasing maxima.
    pub monotone: bool,
    /// All blocks in order of minimum also have increasing maxima.
    pub strongly_monotone: bool,
}

pub fn partition_flags(p: &SetPartition) -> PartitionFlags {
    let spans: Vec<(u32, u32, usize)> = p
        .blocks
        .iter()
        .map(|b| (b[0], *b.last().unwrap(), b.len()))
        .collect();
    flags_from_spans(&spans)
}

/// `spans` are `(min, max, size)` per block, sorted by `min`.
fn flags_from_spans(spans: &[(u32, u32, usize)]) -> PartitionFlags {
    let mut non_overlapping = true;
    'outer: for (i, a) in spans.iter().enumerate() {
        for b in &spans[i + 1..] {
            if a.0 < b.0 && b.0 < a.1 && a.1 < b.1 {
                non_overlapping = false;
                break 'outer;
            }
        }
    }
    let increasing = |maxima: Vec<u32>| maxima.windows(2).all(|w| w[0] < w[1]);
    let monotone = increasing(spans.iter().filter(|s| s.2 > 1).map(|s| s.1).collect());
    let strongly_monotone = increasing(spans.iter().map(|s| s.1).collect());
    PartitionFlags {
        non_overlapping,
        monotone,
        strongly_monotone,
    }
}

fn check_n(n: usize) -> Result<()> {
    if n > MAX_PARTITION_N {
        return Err(Error::OutOfRange {
            what: "n",
            value: n,
            max: MAX_PARTITION_N,
        });
    }
    Ok(())
}

/// Visits every restricted growth string of length `n` (block index of each
/// element, blocks numbered by first appearance).
fn for_each_rgs(n: usize, mut visit: impl FnMut(&[u8])) {
    fn rec(rgs: &mut Vec<u8>, n: usize, blocks: u8, visit: &mut dyn FnMut(&[u8])) {
        if rgs.len() == n {
            visit(rgs);
            return;
        }
        for b in 0..=blocks {
            rgs.push(b);
            rec(rgs, n, blocks.max(b + 1), visit);
            rgs.pop();
        }
    }
    let mut rgs = Vec::with_capacity(n);
    rec(&mut rgs, n, 0, &mut visit);
}

/// All set partitions of `[n]` in restricted-growth-string order.
pub fn partitions(n: usize) -> Result<Vec<SetPartition>> {
    check_n(n)?;
    let mut out = Vec::new();
    for_each_rgs(n, |rgs| out.push(SetPartition::from_rgs(rgs)));
    Ok(out)
}

fn count_by_flags(n: usize, pick: impl Fn(&PartitionFlags) -> bool) -> Result<u64> {
    check_n(n)?;
    let mut count = 0u64;
    let mut spans: Vec<(u32, u32, usize)> = Vec::with_capacity(n);
    for_each_rgs(n, |rgs| {
        spans.clear();
        for (i, &b) in rgs.iter().enumerate() {
            let x = i as u32 + 1;
            match spans.get_mut(b as usize) {
                Some(s) => {
                    s.1 = x;
                    s.2 += 1;
                }
                None => spans.push((x, x, 1)),
            }
        }
        if pick(&flags_from_spans(&spans)) {
            count += 1;
        }
    });
    Ok(count)
}

/// Number of non-overlapping partitions of `[n]` (Bessel number), by
/// exhaustive listing.
pub fn bessel_bruteforce(n: usize) -> Result<u64> {
    count_by_flags(n, |f| f.non_overlapping)
}

/// Number of strongly monotone partitions of `[n]`, by exhaustive listing.
pub fn strongly_monotone_count(n: usize) -> Result<u64> {
    count_by_flags(n, |f| f.strongly_monotone)
}

pub fn monotone_count(n: usize) -> Result<u64> {
    count_by_flags(n, |f| f.monotone)
}

/// Number of set partitions of `[n]`, by exhaustive listing.
pub fn partition_count(n: usize) -> Result<u64> {
    count_by_flags(n, |_| true)
}
