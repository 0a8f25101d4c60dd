//! Truncated integer power series and continued-fraction evaluation.

use crate::error::{Error, Result};
use crate::sequences::partition::bessel_bruteforce;

/// Coefficients `c[0..=n_max]` of a formal power series with exact integer
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Series(Vec<i128>);

impl Series {
    fn zero(n_max: usize) -> Self {
        Series(vec![0; n_max + 1])
    }

    fn n_max(&self) -> usize {
        self.0.len() - 1
    }

    /// Reciprocal of a series with constant term 1.
    fn reciprocal(&self) -> Result<Series> {
        assert_eq!(self.0[0], 1, "reciprocal needs a unit constant term");
        let n = self.n_max();
        let mut out = Series::zero(n);
        out.0[0] = 1;
        for k in 1..=n {
            let mut acc: i128 = 0;
            for j in 1..=k {
                let term = self.0[j]
                    .checked_mul(out.0[k - j])
                    .ok_or(Error::Overflow("power series reciprocal"))?;
                acc = acc
                    .checked_sub(term)
                    .ok_or(Error::Overflow("power series reciprocal"))?;
            }
            out.0[k] = acc;
        }
        Ok(out)
    }

    fn into_counts(self) -> Result<Vec<u64>> {
        self.0
            .into_iter()
            .map(|c| u64::try_from(c).map_err(|_| Error::Overflow("series coefficient")))
            .collect()
    }
}

/// `1 / (1 - b(0)x - x^2 / (1 - b(1)x - x^2 / (...)))` truncated after
/// `depth` levels, up to `x^n_max`. The innermost level is `1/(1 - b(depth-1)x)`.
pub(crate) fn j_fraction(n_max: usize, depth: usize, b: impl Fn(usize) -> i128) -> Result<Series> {
    assert!(depth >= 1);
    let mut inner: Option<Series> = None;
    for level in (0..depth).rev() {
        let mut denom = Series::zero(n_max);
        denom.0[0] = 1;
        if n_max >= 1 {
            denom.0[1] = -b(level);
        }
        if let Some(f) = inner {
            // subtract x^2 * f
            for i in 2..=n_max {
                denom.0[i] = denom.0[i]
                    .checked_sub(f.0[i - 2])
                    .ok_or(Error::Overflow("continued fraction"))?;
            }
        }
        inner = Some(denom.reciprocal()?);
    }
    Ok(inner.unwrap())
}

fn check_depth(n_max: usize, depth: usize) -> Result<()> {
    let needed = n_max.div_ceil(2) + 1;
    if depth < needed {
        return Err(Error::Precision {
            n_max,
            depth,
            needed,
        });
    }
    Ok(())
}

/// Partial denominators of the strongly-monotone fraction: `1 - kx` with
/// `k = 1, 1, 2, 3, 4, ...`.
fn a_weight(level: usize) -> i128 {
    level.max(1) as i128
}

/// `a_0..=a_n_max` from `sum a_n x^n = 1 / (1 - x - x^2 B*(x))`, with the
/// Bessel coefficients of `B*` taken from exhaustive partition counts.
pub fn a_series_from_gf(n_max: usize) -> Result<Vec<u64>> {
    if n_max > 14 {
        return Err(Error::OutOfRange {
            what: "n_max",
            value: n_max,
            max: 14,
        });
    }
    let mut denom = Series::zero(n_max);
    denom.0[0] = 1;
    if n_max >= 1 {
        denom.0[1] = -1;
    }
    for i in 2..=n_max {
        denom.0[i] -= bessel_bruteforce(i - 2)? as i128;
    }
    denom.reciprocal()?.into_counts()
}

/// `a_0..=a_n_max` from the continued fraction with partial denominators
/// `1 - kx`, `k = 1, 1, 2, 3, ...`, truncated after `depth` levels.
pub fn a_series_from_cf(n_max: usize, depth: usize) -> Result<Vec<u64>> {
    check_depth(n_max, depth)?;
    j_fraction(n_max, depth, a_weight)?.into_counts()
}

/// Bessel numbers from the fraction with partial denominators `1 - kx`,
/// `k = 1, 2, 3, ...`.
pub(crate) fn bessel_series_from_cf(n_max: usize) -> Result<Vec<u64>> {
    let depth = n_max.div_ceil(2) + 1;
    j_fraction(n_max, depth, |level| level as i128 + 1)?.into_counts()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf_examples() {
        assert_eq!(a_series_from_gf(4).unwrap(), vec![1, 1, 2, 4, 9]);
        assert_eq!(a_series_from_gf(0).unwrap(), vec![1]);
        assert_eq!(*a_series_from_gf(14).unwrap().last().unwrap(), 1354279);
        assert!(a_series_from_gf(15).is_err());
    }

    #[test]
    fn cf_examples() {
        assert_eq!(a_series_from_cf(5, 4).unwrap(), vec![1, 1, 2, 4, 9, 22]);
        assert_eq!(a_series_from_cf(0, 1).unwrap(), vec![1]);
        assert_eq!(
            a_series_from_cf(10, 7).unwrap(),
            a_series_from_gf(10).unwrap()
        );
    }

    #[test]
    fn shallow_fraction_is_a_precision_error() {
        assert!(matches!(
            a_series_from_cf(12, 6),
            Err(Error::Precision { needed: 7, .. })
        ));
        assert!(a_series_from_cf(12, 7).is_ok());
    }

    #[test]
    fn deeper_truncation_does_not_change_exact_terms() {
        let base = a_series_from_cf(12, 7).unwrap();
        for depth in 8..=12 {
            assert_eq!(a_series_from_cf(12, depth).unwrap(), base);
        }
    }

    #[test]
    fn bessel_fraction_matches_brute_force() {
        let cf = bessel_series_from_cf(12).unwrap();
        for (n, &v) in cf.iter().enumerate() {
            assert_eq!(v, bessel_bruteforce(n).unwrap(), "n = {n}");
        }
    }
}
