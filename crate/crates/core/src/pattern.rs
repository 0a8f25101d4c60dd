//! Dash-separated (vincular) patterns and occurrence matching.
//!
//! A pattern such as `1-23` is a permutation of `[k]` cut into segments by
//! dashes. An occurrence in a host permutation picks one host position per
//! pattern letter such that the positions of each segment are consecutive,
//! the segments appear left to right (any gap, including none, between two
//! segments), and the picked letters are order-isomorphic to the pattern.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::perm::{Permutation, Symmetry};

/// Longest supported pattern; letters are single digits.
pub const MAX_PATTERN_LEN: usize = 9;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VincularPattern {
    letters: Vec<u32>,
    segment_lens: Vec<usize>,
    text: String,
}

impl VincularPattern {
    /// Builds a pattern from its segments. The concatenation must be a
    /// permutation of `[k]` with `1 <= k <= 9`.
    pub fn from_segments(segments: &[Vec<u32>]) -> Result<Self> {
        let text = segments
            .iter()
            .map(|s| s.iter().map(|d| d.to_string()).collect::<String>())
            .collect::<Vec<_>>()
            .join("-");
        text.parse()
    }

    fn build(letters: Vec<u32>, segment_lens: Vec<usize>) -> Self {
        let mut text = String::with_capacity(letters.len() + segment_lens.len());
        let mut i = 0;
        for (s, &len) in segment_lens.iter().enumerate() {
            if s > 0 {
                text.push('-');
            }
            for &x in &letters[i..i + len] {
                text.push(char::from_digit(x, 10).expect("pattern letters are digits"));
            }
            i += len;
        }
        VincularPattern {
            letters,
            segment_lens,
            text,
        }
    }

    /// Number of letters.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The dash-free permutation.
    pub fn underlying(&self) -> Permutation {
        Permutation::from_vec_unchecked(self.letters.clone())
    }

    pub fn type_signature(&self) -> &[usize] {
        &self.segment_lens
    }

    pub fn segments(&self) -> Vec<&[u32]> {
        let mut out = Vec::with_capacity(self.segment_lens.len());
        let mut i = 0;
        for &len in &self.segment_lens {
            out.push(&self.letters[i..i + len]);
            i += len;
        }
        out
    }

    pub fn is_classical(&self) -> bool {
        self.segment_lens.iter().all(|&l| l == 1)
    }

    /// The classical pattern with the same underlying permutation.
    pub fn fully_dashed(&self) -> VincularPattern {
        VincularPattern::build(self.letters.clone(), vec![1; self.letters.len()])
    }

    pub fn as_str(&self) -> &str {
        &self.text
    }

    pub fn apply(&self, g: Symmetry) -> VincularPattern {
        symmetry_apply(g, self)
    }

    /// All occurrences in `host`, ordered lexicographically by position.
    pub fn occurrences(&self, host: &Permutation) -> Vec<Occurrence> {
        let mut out = Vec::new();
        let mut pos = [0usize; MAX_PATTERN_LEN];
        self.search(host.letters(), 0, 0, 0, None, &mut pos, &mut |p| {
            out.push(Occurrence {
                positions: p.iter().map(|&i| i + 1).collect(),
                block_lens: self.segment_lens.clone(),
            });
            false
        });
        out
    }

    pub fn count_in(&self, host: &Permutation) -> usize {
        let mut count = 0;
        let mut pos = [0usize; MAX_PATTERN_LEN];
        self.search(host.letters(), 0, 0, 0, None, &mut pos, &mut |_| {
            count += 1;
            false
        });
        count
    }

    pub fn is_contained_in(&self, host: &[u32]) -> bool {
        let mut pos = [0usize; MAX_PATTERN_LEN];
        self.search(host, 0, 0, 0, None, &mut pos, &mut |_| true)
    }

    /// Whether some occurrence in `host` uses position `end` (0-based) as its
    /// last position. Only `host[..=end]` is inspected.
    pub(crate) fn occurs_ending_at(&self, host: &[u32], end: usize) -> bool {
        let k = self.letters.len();
        if end + 1 < k {
            return false;
        }
        // Cheap rejection: the final segment is pinned, so its internal order
        // can be checked before anything else is searched.
        let last = *self.segment_lens.last().unwrap();
        let start = end + 1 - last;
        let pat = &self.letters[k - last..];
        let seg = &host[start..=end];
        for a in 0..last {
            for b in a + 1..last {
                if (pat[a] < pat[b]) != (seg[a] < seg[b]) {
                    return false;
                }
            }
        }
        let mut pos = [0usize; MAX_PATTERN_LEN];
        self.search(&host[..=end], 0, 0, 0, Some(end), &mut pos, &mut |_| true)
    }

    /// Depth-first placement of segment `seg` (pattern letters from
    /// `placed` onwards) at host positions `>= min_start`. `visit` returns
    /// true to stop the search; the return value reports whether it stopped.
    #[allow(clippy::too_many_arguments)]
    fn search(
        &self,
        host: &[u32],
        seg: usize,
        placed: usize,
        min_start: usize,
        last_end: Option<usize>,
        pos: &mut [usize; MAX_PATTERN_LEN],
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if seg == self.segment_lens.len() {
            return visit(&pos[..placed]);
        }
        let len = self.segment_lens[seg];
        let remaining: usize = self.segment_lens[seg..].iter().sum();
        if host.len() < min_start + remaining {
            return false;
        }
        let is_last = seg + 1 == self.segment_lens.len();
        let (lo, hi) = match (is_last, last_end) {
            (true, Some(end)) => {
                let s = end + 1 - len;
                if s < min_start {
                    return false;
                }
                (s, s)
            }
            _ => (min_start, host.len() - remaining),
        };
        'starts: for start in lo..=hi {
            for off in 0..len {
                let t = placed + off;
                let q = start + off;
                let x = host[q];
                let pt = self.letters[t];
                for s in 0..t {
                    if (self.letters[s] < pt) != (host[pos[s]] < x) {
                        continue 'starts;
                    }
                }
                pos[t] = q;
            }
            if self.search(
                host,
                seg + 1,
                placed + len,
                start + len,
                last_end,
                pos,
                visit,
            ) {
                return true;
            }
        }
        false
    }
}

impl fmt::Display for VincularPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

impl Ord for VincularPattern {
    fn cmp(&self, other: &Self) -> Ordering {
        self.text.cmp(&other.text)
    }
}

impl PartialOrd for VincularPattern {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `pattern := segment ("-" segment)*`, `segment := [1-9]+`, and the digits
/// together form `{1..k}`.
pub fn parse_pattern(text: &str) -> Result<VincularPattern> {
    let err = |position: usize, message: String| Error::PatternParse { position, message };
    let mut letters = Vec::new();
    let mut segment_lens = Vec::new();
    let mut current = 0usize;
    for (i, c) in text.chars().enumerate() {
        match c {
            '1'..='9' => {
                let d = c.to_digit(10).unwrap();
                if letters.contains(&d) {
                    return Err(err(i, format!("digit {d} is repeated")));
                }
                letters.push(d);
                current += 1;
            }
            '-' => {
                if current == 0 {
                    return Err(err(i, "empty segment before `-`".into()));
                }
                segment_lens.push(current);
                current = 0;
            }
            other => return Err(err(i, format!("unexpected character `{other}`"))),
        }
    }
    if current == 0 {
        return Err(err(
            text.chars().count(),
            if text.is_empty() {
                "empty pattern".into()
            } else {
                "pattern ends with an empty segment".into()
            },
        ));
    }
    segment_lens.push(current);
    let k = letters.len();
    if let Some(&d) = letters.iter().find(|&&d| d as usize > k) {
        let position = text
            .chars()
            .position(|c| c.to_digit(10) == Some(d))
            .unwrap();
        return Err(err(
            position,
            format!("digit {d} exceeds the pattern length {k}; digits must form 1..={k}"),
        ));
    }
    Ok(VincularPattern::build(letters, segment_lens))
}

impl FromStr for VincularPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_pattern(s)
    }
}

impl Serialize for VincularPattern {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.text)
    }
}

impl<'de> Deserialize<'de> for VincularPattern {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Complement keeps the dashes in place; reverse reads the dashed word
/// backwards.
pub fn symmetry_apply(g: Symmetry, p: &VincularPattern) -> VincularPattern {
    let k = p.letters.len() as u32;
    let mut letters = p.letters.clone();
    let mut lens = p.segment_lens.clone();
    if g.complements() {
        letters.iter_mut().for_each(|x| *x = k + 1 - *x);
    }
    if g.reverses() {
        letters.reverse();
        lens.reverse();
    }
    VincularPattern::build(letters, lens)
}

/// The twelve patterns of type (1,2) or (2,1), in canonical (text) order.
pub fn type_one_two_patterns() -> Vec<VincularPattern> {
    let mut out: Vec<VincularPattern> = ["123", "132", "213", "231", "312", "321"]
        .iter()
        .flat_map(|u| {
            let d: Vec<char> = u.chars().collect();
            [
                format!("{}-{}{}", d[0], d[1], d[2]),
                format!("{}{}-{}", d[0], d[1], d[2]),
            ]
        })
        .map(|t| t.parse().unwrap())
        .collect();
    out.sort();
    out
}

/// One match of a pattern: host positions (1-based), grouped into blocks of
/// the pattern's segment lengths.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Occurrence {
    pub positions: Vec<usize>,
    pub block_lens: Vec<usize>,
}

impl Occurrence {
    pub fn blocks(&self) -> Vec<&[usize]> {
        let mut out = Vec::new();
        let mut i = 0;
        for &len in &self.block_lens {
            out.push(&self.positions[i..i + len]);
            i += len;
        }
        out
    }

    pub fn letters(&self, host: &Permutation) -> Vec<u32> {
        self.positions.iter().map(|&i| host.at(i)).collect()
    }
}

impl fmt::Display for Occurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .blocks()
            .iter()
            .map(|b| {
                b.iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "({})", blocks.join("; "))
    }
}

pub fn occurrences(p: &VincularPattern, host: &Permutation) -> Vec<Occurrence> {
    p.occurrences(host)
}

/// A set of patterns kept in canonical text order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PatternSet {
    patterns: Vec<VincularPattern>,
}

impl PatternSet {
    pub fn new(patterns: impl IntoIterator<Item = VincularPattern>) -> Self {
        let mut patterns: Vec<_> = patterns.into_iter().collect();
        patterns.sort();
        patterns.dedup();
        PatternSet { patterns }
    }

    pub fn empty() -> Self {
        PatternSet::default()
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, VincularPattern> {
        self.patterns.iter()
    }

    pub fn patterns(&self) -> &[VincularPattern] {
        &self.patterns
    }

    pub fn contains(&self, p: &VincularPattern) -> bool {
        self.patterns.binary_search(p).is_ok()
    }

    pub fn is_subset(&self, other: &PatternSet) -> bool {
        self.patterns.iter().all(|p| other.contains(p))
    }

    pub fn apply(&self, g: Symmetry) -> PatternSet {
        PatternSet::new(self.patterns.iter().map(|p| symmetry_apply(g, p)))
    }

    pub fn avoided_by(&self, host: &Permutation) -> bool {
        avoids(self, host)
    }
}

impl fmt::Display for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.patterns.is_empty() {
            return f.write_str("{}");
        }
        for (i, p) in self.patterns.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(p.as_str())?;
        }
        Ok(())
    }
}

impl FromStr for PatternSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "{}" {
            return Ok(PatternSet::empty());
        }
        s.split(',')
            .map(|t| parse_pattern(t.trim()))
            .collect::<Result<Vec<_>>>()
            .map(PatternSet::new)
    }
}

impl Ord for PatternSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.to_string().cmp(&other.to_string())
    }
}

impl PartialOrd for PatternSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Serialize for PatternSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for PatternSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// True iff `host` has no occurrence of any pattern in `set`.
pub fn avoids(set: &PatternSet, host: &Permutation) -> bool {
    set.iter().all(|p| !p.is_contained_in(host.letters()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_permutations;

    fn pat(s: &str) -> VincularPattern {
        s.parse().unwrap()
    }

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn set(s: &str) -> PatternSet {
        s.parse().unwrap()
    }

    #[test]
    fn parse_examples() {
        let p = pat("1-23");
        assert_eq!(p.segments(), vec![&[1][..], &[2, 3][..]]);
        assert_eq!(p.type_signature(), &[1, 2]);
        let p = pat("2-1-3");
        assert_eq!(p.type_signature(), &[1, 1, 1]);
        assert!(p.is_classical());
        let p = pat("13-2");
        assert_eq!(p.segments(), vec![&[1, 3][..], &[2][..]]);
        assert_eq!(p.type_signature(), &[2, 1]);
        assert_eq!(p.underlying(), perm("132"));
        assert_eq!(pat("142-5-367").type_signature(), &[3, 1, 3]);
        for t in ["1-23", "2-1-3", "13-2", "142-5-367", "1"] {
            assert_eq!(pat(t).to_string(), t);
        }
    }

    #[test]
    fn parse_errors_carry_positions() {
        let cases = [
            ("", 0),
            ("1--23", 2),
            ("-12", 0),
            ("12-", 3),
            ("1-21", 3),
            ("1-24", 3),
            ("1a2", 1),
            ("0-1", 0),
        ];
        for (text, expected) in cases {
            match parse_pattern(text) {
                Err(Error::PatternParse { position, .. }) => {
                    assert_eq!(position, expected, "{text}")
                }
                other => panic!("{text}: expected a parse error, got {other:?}"),
            }
        }
    }

    #[test]
    fn symmetry_examples() {
        assert_eq!(
            symmetry_apply(Symmetry::Complement, &pat("1-23")),
            pat("3-21")
        );
        assert_eq!(symmetry_apply(Symmetry::Reverse, &pat("1-23")), pat("32-1"));
        assert_eq!(
            symmetry_apply(Symmetry::ReverseComplement, &pat("1-23")),
            pat("12-3")
        );
        let p = pat("142-5-367");
        assert_eq!(symmetry_apply(Symmetry::Identity, &p), p);
        assert_eq!(symmetry_apply(Symmetry::Reverse, &p), pat("763-5-241"));
    }

    #[test]
    fn occurrence_examples() {
        let host = perm("491273865");
        let occ = occurrences(&pat("1-23"), &host);
        assert_eq!(occ.len(), 3);
        let triples: Vec<Vec<u32>> = occ.iter().map(|o| o.letters(&host)).collect();
        assert_eq!(triples, vec![vec![1, 2, 7], vec![1, 3, 8], vec![2, 3, 8]]);

        let occ = occurrences(&pat("1-23"), &perm("123"));
        assert_eq!(occ.len(), 1);
        assert_eq!(occ[0].blocks(), vec![&[1][..], &[2, 3][..]]);
        assert_eq!(occ[0].to_string(), "(1; 2,3)");

        let occ = occurrences(&pat("13-2"), &perm("132"));
        assert_eq!(occ.len(), 1);
        assert_eq!(occ[0].blocks(), vec![&[1, 2][..], &[3][..]]);
    }

    #[test]
    fn avoidance_examples() {
        assert!(avoids(&set("1-23,32-1"), &perm("45132")));
        assert!(!avoids(&set("1-23"), &perm("123")));
        assert!(avoids(&PatternSet::empty(), &perm("123")));
    }

    #[test]
    fn twelve_patterns_in_text_order() {
        let all: Vec<String> = type_one_two_patterns()
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(
            all,
            [
                "1-23", "1-32", "12-3", "13-2", "2-13", "2-31", "21-3", "23-1", "3-12", "3-21",
                "31-2", "32-1"
            ]
        );
    }

    #[test]
    fn pattern_set_text_is_canonical() {
        let s = set("32-1, 1-23,1-23");
        assert_eq!(s.len(), 2);
        assert_eq!(s.to_string(), "1-23,32-1");
        assert_eq!(PatternSet::empty().to_string(), "{}");
        assert_eq!(set("{}"), PatternSet::empty());
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, "\"1-23,32-1\"");
        assert_eq!(serde_json::from_str::<PatternSet>(&json).unwrap(), s);
    }

    #[test]
    fn ending_at_agrees_with_full_search() {
        let pats: Vec<_> = ["1-23", "13-2", "2-1-3", "12-34", "2-413"].map(pat).into();
        for n in 0..=6 {
            for host in all_permutations(n) {
                let h = host.letters();
                for p in &pats {
                    let full = p.is_contained_in(h);
                    let any_end = (0..n).any(|e| p.occurs_ending_at(h, e));
                    assert_eq!(full, any_end, "{p} in {host}");
                    for e in 0..n {
                        let direct = p
                            .occurrences(&host)
                            .iter()
                            .any(|o| *o.positions.last().unwrap() == e + 1);
                        assert_eq!(p.occurs_ending_at(h, e), direct);
                    }
                }
            }
        }
    }
}
