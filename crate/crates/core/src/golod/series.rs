//! The upper bound `(1 + tx)ⁿ / (1 − Σ β_{i,j} t^{i+1} xʲ)` for the Poincaré
//! series, expanded as a truncated power series in `t` and `x`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::betti::BigradedBettiTable;

pub const DEFAULT_TRUNCATION: usize = 12;

/// Power series in `t, x` known exactly up to total degree `bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedBiSeries {
    pub bound: usize,
    /// Nonzero coefficients keyed by `(power of t, power of x)`.
    pub coefficients: BTreeMap<(usize, usize), BigInt>,
}

impl TruncatedBiSeries {
    pub fn coefficient(&self, t: usize, x: usize) -> BigInt {
        self.coefficients.get(&(t, x)).cloned().unwrap_or_default()
    }
}

fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::from(1)];
    for k in 0..n {
        let next = &row[k] * (n - k) / (k + 1);
        row.push(next);
    }
    row
}

/// Expands the series degree by degree: `S = N + P·S`, where `N = (1 + tx)ⁿ`
/// and every term of `P` has positive total degree.
pub fn serre_rhs_series(table: &BigradedBettiTable, bound: usize) -> TruncatedBiSeries {
    let numerator = binomial_row(table.n_vertices);
    let denominator: Vec<((usize, usize), BigInt)> =
        table.entries.iter().map(|(&(i, j), &b)| ((i + 1, j), BigInt::from(b))).collect();
    let mut coefficients: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
    for total in 0..=bound {
        for t in 0..=total {
            let x = total - t;
            let mut c = if t == x && t < numerator.len() { numerator[t].clone() } else { BigInt::zero() };
            for ((dt, dx), b) in &denominator {
                if *dt <= t && *dx <= x {
                    if let Some(s) = coefficients.get(&(t - dt, x - dx)) {
                        c += b * s;
                    }
                }
            }
            if !c.is_zero() {
                coefficients.insert((t, x), c);
            }
        }
    }
    TruncatedBiSeries { bound, coefficients }
}
