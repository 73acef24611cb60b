//! The tribes parameter sweep.

use std::cmp::Ordering;
use std::ops::RangeInclusive;

use crate::error::{Error, Result};
use crate::families::{tribes, tribes_closed_form, tribes_closed_form_exact, tribes_exact, TribesParams, TribesStats};
use crate::inequalities::{CheckerId, Params};
use crate::profile::FamilyProfile;
use crate::MAX_DIM;

use super::{Acc, ExtremalRecord, Objective, ScanSpec, SearchClass};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepMode {
    /// Brute force on the truth table (`r·m ≤ 24`).
    Exact,
    /// Exact rationals from the product formulas, any size.
    ClosedFormExact,
    /// Floating-point product formulas.
    ClosedForm,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TribesSweep {
    pub rows: Vec<TribesStats>,
    /// Whether the balanced ratio decreases along the rows.
    pub balanced_ratio_decreasing: bool,
}

/// The `m` with `(1 − 2^−r)^m` nearest ½, ties toward smaller `m`.
pub fn balancing_tribe_count(r: usize) -> usize {
    let q = 1.0 - 0.5f64.powi(r as i32);
    let guess = ((0.5f64).ln() / q.ln()).floor().max(1.0) as usize;
    let dist = |m: usize| (q.powi(m as i32) - 0.5).abs();
    let mut best = guess.saturating_sub(1).max(1);
    for m in best..=guess + 2 {
        if dist(m).total_cmp(&dist(best)) == Ordering::Less {
            best = m;
        }
    }
    best
}

pub fn tribes_sweep(r_range: RangeInclusive<usize>, mode: SweepMode) -> Result<TribesSweep> {
    let mut rows = Vec::new();
    for r in r_range {
        if r == 0 {
            return Err(Error::InvalidInput("tribe size must be positive".into()));
        }
        let params = TribesParams::new(r, balancing_tribe_count(r))?;
        rows.push(match mode {
            SweepMode::Exact => {
                if params.n() > MAX_DIM {
                    return Err(Error::LimitExceeded(format!(
                        "r = {r} needs m = {} (n = {}) beyond exact range",
                        params.m,
                        params.n()
                    )));
                }
                tribes_exact(params)?
            }
            SweepMode::ClosedFormExact => tribes_closed_form_exact(params),
            SweepMode::ClosedForm => tribes_closed_form(params),
        });
    }
    let ratios: Vec<f64> = rows.iter().map(|s| s.ratio_balanced.to_f64()).collect();
    Ok(TribesSweep { balanced_ratio_decreasing: ratios.windows(2).all(|w| w[1] < w[0]), rows })
}

/// Evaluates `checker` on every tribes pair `(A, A′)` with `r·m ≤ max_n`.
pub fn tribes_scan(checker: CheckerId, params: &Params, objective: Objective, max_n: usize) -> Result<ExtremalRecord> {
    let spec = ScanSpec {
        params: params.clone(),
        objective,
        ..ScanSpec::new(max_n, checker, SearchClass::Increasing, SearchClass::Increasing)
    };
    let mut pairs = Vec::new();
    for n in 1..=max_n.min(MAX_DIM) {
        for r in 1..=n {
            if n % r == 0 {
                let (a, b) = tribes(TribesParams::new(r, n / r)?)?;
                pairs.push((FamilyProfile::new(a), FamilyProfile::new(b)));
            }
        }
    }
    let mut acc = Acc::default();
    for (idx, (a, b)) in pairs.iter().enumerate() {
        super::visit(&mut acc, &spec, Some(a), Some(b), idx as u64)?;
    }
    super::finish(&spec, acc, |idx| {
        let (a, b) = &pairs[idx as usize];
        (Some(a.family().clone()), Some(b.family().clone()))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::value::ratio;

    #[test]
    fn balancing_counts() {
        assert_eq!(balancing_tribe_count(1), 1);
        assert_eq!(balancing_tribe_count(2), 2);
        assert_eq!(balancing_tribe_count(3), 5);
        assert_eq!(balancing_tribe_count(10), 709);
    }

    #[test]
    fn exact_rows_and_limit() {
        let s = tribes_sweep(2..=2, SweepMode::Exact).unwrap();
        assert_eq!(s.rows[0].ratio_balanced.as_exact(), Some(&ratio(136, 189)));
        assert!(tribes_sweep(4..=4, SweepMode::Exact).is_err());
    }

    #[test]
    fn closed_form_limit_at_ten() {
        let s = tribes_sweep(2..=10, SweepMode::ClosedForm).unwrap();
        let last = s.rows.last().unwrap();
        assert!((last.ratio_balanced.to_f64() - std::f64::consts::LN_2).abs() < 0.02);
        assert!((last.ratio_chvatal.to_f64() - std::f64::consts::LN_2 / 4.0).abs() < 0.005);
    }

    #[test]
    fn tribes_scan_beats_point_seven() {
        let rec = tribes_scan(CheckerId::BalancedC, &Params::default(), Objective::MinRatio, 12).unwrap();
        assert!(rec.best.unwrap().to_f64() < 0.70);
    }
}
