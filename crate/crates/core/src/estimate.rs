//! Estimate records and the geometric advice search shared by the dense and
//! sparse counters.

use serde::{Deserialize, Serialize};

use crate::access::QueryLedger;
use crate::detect::next_odd_at_least;
use crate::error::Result;
use crate::rng::RandomSource;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    Exact,
    Dense,
    DenseAdditive,
    Sparse,
}

impl Algorithm {
    pub fn name(&self) -> &'static str {
        match self {
            Algorithm::Exact => "exact",
            Algorithm::Dense => "dense",
            Algorithm::DenseAdditive => "dense-additive",
            Algorithm::Sparse => "sparse",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Estimate {
    pub algorithm: Algorithm,
    pub value: f64,
    pub seed: u64,
    /// Advice values tried, in order; the last one is where the search stopped.
    pub advice_trace: Vec<f64>,
    pub ledger: QueryLedger,
    /// Deepest dense recursion frame reached (0 when the top call was a base case).
    pub max_depth: usize,
    pub wall_time_ms: f64,
}

/// Median of an odd-length sample.
pub fn median(mut values: Vec<f64>) -> f64 {
    assert!(values.len() % 2 == 1, "median over an even count");
    values.sort_by(f64::total_cmp);
    values[values.len() / 2]
}

/// Executions per advice level: `max(3, next odd ≥ 2 ln ln max(n, 16))`.
pub fn advice_width(n: usize) -> usize {
    next_odd_at_least(2.0 * (n.max(16) as f64).ln().ln()).max(3)
}

/// `C(n, 3)` as a real.
pub fn choose3(n: usize) -> f64 {
    let n = n as f64;
    n * (n - 1.0) * (n - 2.0) / 6.0
}

/// Advice below this means "no triangles expected".
pub const ADVICE_FLOOR: f64 = 0.2;

pub(crate) struct SearchOutcome {
    pub value: f64,
    pub trace: Vec<f64>,
}

/// Starts at `C(n, 3)` and halves. At each level takes the median of `width`
/// runs of `run(advice, rng)` and stops once that median reaches the advice.
/// Returns 0 when the advice falls below [`ADVICE_FLOOR`].
pub(crate) fn advice_search<F>(n: usize, width: usize, rng: &RandomSource, mut run: F) -> Result<SearchOutcome>
where
    F: FnMut(f64, &mut RandomSource) -> Result<f64>,
{
    let mut advice = choose3(n);
    let mut trace = Vec::new();
    let mut level = 0u64;
    while advice >= ADVICE_FLOOR {
        trace.push(advice);
        let level_rng = rng.derive(level);
        let mut runs = Vec::with_capacity(width);
        for i in 0..width {
            runs.push(run(advice, &mut level_rng.derive(i as u64))?);
        }
        let est = median(runs);
        if est >= advice {
            return Ok(SearchOutcome { value: est, trace });
        }
        advice /= 2.0;
        level += 1;
    }
    Ok(SearchOutcome { value: 0.0, trace })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn widths() {
        assert_eq!(advice_width(0), 3);
        assert_eq!(advice_width(16), 3);
        assert_eq!(advice_width(100), 5);
        assert_eq!(advice_width(1_000_000), 7);
    }

    #[test]
    fn median_of_odd() {
        assert_eq!(median(vec![3.0, 1.0, 2.0]), 2.0);
        assert_eq!(median(vec![5.0]), 5.0);
    }

    #[test]
    #[should_panic]
    fn median_rejects_even() {
        median(vec![1.0, 2.0]);
    }

    #[test]
    fn search_accepts_first_level_below_truth() {
        let out = advice_search(20, 3, &RandomSource::new(0), |_, _| Ok(100.0)).unwrap();
        assert_eq!(out.value, 100.0);
        let last = *out.trace.last().unwrap();
        assert!(last <= 100.0 && last * 2.0 > 100.0);
        assert!(out.trace.windows(2).all(|w| w[1] == w[0] / 2.0));
    }

    #[test]
    fn search_bottoms_out_at_zero() {
        let out = advice_search(50, 3, &RandomSource::new(0), |_, _| Ok(0.0)).unwrap();
        assert_eq!(out.value, 0.0);
        assert!(*out.trace.last().unwrap() >= ADVICE_FLOOR);
        assert!(out.trace.len() as f64 <= choose3(50).log2() + 3.0);
        let out = advice_search(2, 3, &RandomSource::new(0), |_, _| Ok(1.0)).unwrap();
        assert!(out.trace.is_empty());
    }
}
