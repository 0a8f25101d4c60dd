//! Named counting sequences, each generated by its own recurrence, plus
//! offset-tolerant identification of an observed sequence.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sequences::series::{a_series_from_cf, bessel_series_from_cf};

/// Catalog values are defined for `0 <= n <= CATALOG_MAX_N`.
pub const CATALOG_MAX_N: usize = 20;

/// Offsets tried by [`identify`].
pub const MAX_IDENTIFY_OFFSET: usize = 3;

pub const MIN_IDENTIFY_TERMS: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SequenceName {
    Zero,
    N,
    #[serde(rename = "two_n_minus_2")]
    TwoNMinus2,
    #[serde(rename = "n_choose_2_plus_1")]
    NChoose2Plus1,
    #[serde(rename = "pow2_n_minus_1")]
    Pow2NMinus1,
    #[serde(rename = "pow2_n_minus_2_plus_1")]
    Pow2NMinus2Plus1,
    CentralBinomial,
    Fibonacci,
    Catalan,
    Motzkin,
    Bell,
    Bessel,
    Involutions,
    AStronglyMonotone,
    BClass7,
}

impl SequenceName {
    pub const ALL: [SequenceName; 15] = [
        SequenceName::Zero,
        SequenceName::N,
        SequenceName::TwoNMinus2,
        SequenceName::NChoose2Plus1,
        SequenceName::Pow2NMinus1,
        SequenceName::Pow2NMinus2Plus1,
        SequenceName::CentralBinomial,
        SequenceName::Fibonacci,
        SequenceName::Catalan,
        SequenceName::Motzkin,
        SequenceName::Bell,
        SequenceName::Bessel,
        SequenceName::Involutions,
        SequenceName::AStronglyMonotone,
        SequenceName::BClass7,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SequenceName::Zero => "zero",
            SequenceName::N => "n",
            SequenceName::TwoNMinus2 => "two_n_minus_2",
            SequenceName::NChoose2Plus1 => "n_choose_2_plus_1",
            SequenceName::Pow2NMinus1 => "pow2_n_minus_1",
            SequenceName::Pow2NMinus2Plus1 => "pow2_n_minus_2_plus_1",
            SequenceName::CentralBinomial => "central_binomial",
            SequenceName::Fibonacci => "fibonacci",
            SequenceName::Catalan => "catalan",
            SequenceName::Motzkin => "motzkin",
            SequenceName::Bell => "bell",
            SequenceName::Bessel => "bessel",
            SequenceName::Involutions => "involutions",
            SequenceName::AStronglyMonotone => "a_strongly_monotone",
            SequenceName::BClass7 => "b_class7",
        }
    }

    pub fn entry(self) -> SequenceCatalogEntry {
        let (description, offset_convention) = match self {
            SequenceName::Zero => ("0", "total"),
            SequenceName::N => ("n", "total"),
            SequenceName::TwoNMinus2 => ("2(n-1)", "0 at n = 0"),
            SequenceName::NChoose2Plus1 => ("C(n,2) + 1", "total"),
            SequenceName::Pow2NMinus1 => ("2^(n-1)", "1 at n = 0"),
            SequenceName::Pow2NMinus2Plus1 => ("2^(n-2) + 1", "1 at n = 0 and n = 1"),
            SequenceName::CentralBinomial => ("C(n, floor(n/2))", "total"),
            SequenceName::Fibonacci => ("F_n with F_0 = F_1 = 1", "total"),
            SequenceName::Catalan => ("Catalan numbers C_n", "total"),
            SequenceName::Motzkin => ("Motzkin numbers M_n", "total"),
            SequenceName::Bell => ("Bell numbers B_n", "total"),
            SequenceName::Bessel => ("Bessel numbers B*_n (non-overlapping partitions)", "total"),
            SequenceName::Involutions => ("number of involutions I_n", "total"),
            SequenceName::AStronglyMonotone => ("strongly monotone partitions a_n", "total"),
            SequenceName::BClass7 => (
                "b_0 = b_1 = 1, b_(n+2) = b_(n+1) + sum_k C(n,k) b_k",
                "total",
            ),
        };
        SequenceCatalogEntry {
            name: self,
            description,
            offset_convention,
        }
    }
}

impl fmt::Display for SequenceName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SequenceName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SequenceName::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| Error::UnknownSequence(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SequenceCatalogEntry {
    pub name: SequenceName,
    pub description: &'static str,
    /// How the entry is extended below the range where its formula is an
    /// integer count.
    pub offset_convention: &'static str,
}

impl SequenceCatalogEntry {
    pub fn value(&self, n: usize) -> Result<u64> {
        catalog_value(self.name, n)
    }
}

pub fn catalog() -> Vec<SequenceCatalogEntry> {
    SequenceName::ALL.iter().map(|n| n.entry()).collect()
}

pub fn catalog_value(name: SequenceName, n: usize) -> Result<u64> {
    if n > CATALOG_MAX_N {
        return Err(Error::OutOfRange {
            what: "n",
            value: n,
            max: CATALOG_MAX_N,
        });
    }
    Ok(catalog_values(name)?[n])
}

/// Values `0..=CATALOG_MAX_N`, computed once per entry.
pub fn catalog_values(name: SequenceName) -> Result<&'static [u64]> {
    static TABLES: [OnceLock<std::result::Result<Vec<u64>, Error>>; 15] =
        [const { OnceLock::new() }; 15];
    let slot = SequenceName::ALL.iter().position(|&x| x == name).unwrap();
    match TABLES[slot].get_or_init(|| generate(name, CATALOG_MAX_N)) {
        Ok(v) => Ok(v.as_slice()),
        Err(e) => Err(e.clone()),
    }
}

fn add(a: u64, b: u64, what: &'static str) -> Result<u64> {
    a.checked_add(b).ok_or(Error::Overflow(what))
}

fn mul(a: u64, b: u64, what: &'static str) -> Result<u64> {
    a.checked_mul(b).ok_or(Error::Overflow(what))
}

fn binomial_row(n: usize) -> Result<Vec<u64>> {
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![1u64; row.len() + 1];
        for k in 1..row.len() {
            next[k] = add(row[k - 1], row[k], "binomial coefficient")?;
        }
        row = next;
    }
    Ok(row)
}

fn generate(name: SequenceName, n_max: usize) -> Result<Vec<u64>> {
    let len = n_max + 1;
    let closed = |f: &dyn Fn(u64) -> Result<u64>| (0..len as u64).map(f).collect();
    match name {
        SequenceName::Zero => Ok(vec![0; len]),
        SequenceName::N => closed(&|n| Ok(n)),
        SequenceName::TwoNMinus2 => closed(&|n| Ok(2 * n.saturating_sub(1))),
        SequenceName::NChoose2Plus1 => closed(&|n| Ok(n * n.saturating_sub(1) / 2 + 1)),
        SequenceName::Pow2NMinus1 => closed(&|n| Ok(1u64 << n.saturating_sub(1))),
        SequenceName::Pow2NMinus2Plus1 => {
            closed(&|n| Ok(if n < 2 { 1 } else { (1u64 << (n - 2)) + 1 }))
        }
        SequenceName::CentralBinomial => closed(&|n| Ok(binomial_row(n as usize)?[n as usize / 2])),
        SequenceName::Fibonacci => {
            let mut v = vec![1u64; len];
            for n in 2..len {
                v[n] = add(v[n - 1], v[n - 2], "fibonacci")?;
            }
            Ok(v)
        }
        SequenceName::Catalan => {
            // C_(n+1) = sum_k C_k C_(n-k)
            let mut v = vec![1u64];
            for n in 0..n_max {
                let mut acc = 0;
                for k in 0..=n {
                    acc = add(acc, mul(v[k], v[n - k], "catalan")?, "catalan")?;
                }
                v.push(acc);
            }
            Ok(v)
        }
        SequenceName::Motzkin => {
            // M_(n+1) = M_n + sum_(k=0)^(n-1) M_k M_(n-1-k)
            let mut v = vec![1u64];
            for n in 0..n_max {
                let mut acc = v[n];
                for k in 0..n {
                    acc = add(acc, mul(v[k], v[n - 1 - k], "motzkin")?, "motzkin")?;
                }
                v.push(acc);
            }
            Ok(v)
        }
        SequenceName::Bell => {
            // Bell triangle: each row starts with the last entry of the previous.
            let mut v = vec![1u64];
            let mut row = vec![1u64];
            for _ in 0..n_max {
                let mut next = vec![*row.last().unwrap()];
                for &x in &row {
                    let last = *next.last().unwrap();
                    next.push(add(last, x, "bell")?);
                }
                v.push(next[0]);
                row = next;
            }
            v.truncate(len);
            Ok(v)
        }
        SequenceName::Involutions => {
            // I_(n+1) = I_n + n I_(n-1)
            let mut v = vec![1u64, 1];
            for n in 1..n_max {
                let next = add(v[n], mul(n as u64, v[n - 1], "involutions")?, "involutions")?;
                v.push(next);
            }
            v.truncate(len);
            Ok(v)
        }
        SequenceName::Bessel => bessel_series_from_cf(n_max),
        SequenceName::AStronglyMonotone => a_series_from_cf(n_max, n_max.div_ceil(2) + 1),
        SequenceName::BClass7 => b_class7(n_max),
    }
}

/// `b_0 = b_1 = 1`, `b_(n+2) = b_(n+1) + sum_(k=0)^n C(n,k) b_k`.
fn b_class7(n_max: usize) -> Result<Vec<u64>> {
    let mut v = vec![1u64, 1];
    for n in 0..n_max.saturating_sub(1) {
        let row = binomial_row(n)?;
        let mut acc = v[n + 1];
        for k in 0..=n {
            acc = add(acc, mul(row[k], v[k], "b_class7")?, "b_class7")?;
        }
        v.push(acc);
    }
    v.truncate(n_max + 1);
    Ok(v)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Identification {
    pub name: SequenceName,
    /// Least index from which the sequence agrees with the catalog entry.
    pub offset: usize,
}

impl fmt::Display for Identification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.offset == 0 {
            write!(f, "{}", self.name)
        } else {
            write!(f, "{} (from n = {})", self.name, self.offset)
        }
    }
}

/// Every catalog entry agreeing with `s[n]` for all `n >= offset`, with the
/// least such `offset <= 3`.
pub fn identify(s: &[u64]) -> Result<Vec<Identification>> {
    if s.len() < MIN_IDENTIFY_TERMS {
        return Err(Error::TooFewTerms {
            needed: MIN_IDENTIFY_TERMS,
            got: s.len(),
        });
    }
    if s.len() > CATALOG_MAX_N + 1 {
        return Err(Error::OutOfRange {
            what: "sequence length",
            value: s.len(),
            max: CATALOG_MAX_N + 1,
        });
    }
    let mut out = Vec::new();
    for name in SequenceName::ALL {
        let values = catalog_values(name)?;
        if let Some(offset) =
            (0..=MAX_IDENTIFY_OFFSET).find(|&o| (o..s.len()).all(|n| s[n] == values[n]))
        {
            out.push(Identification { name, offset });
        }
    }
    Ok(out)
}
