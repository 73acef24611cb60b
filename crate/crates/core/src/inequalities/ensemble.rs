//! Averages over pairs drawn independently and uniformly from a finite list
//! of increasing families.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::profile::FamilyProfile;
use crate::set_family::SetFamily;
use crate::value::Value;

use super::special::{entropy_term, times};
use super::FLOAT_SLACK;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnsembleChecker {
    /// `E[Cor] ≥ ¼ E[Σ I_k(A) I_k(B)]`.
    AvgDream,
    /// `E[Cor] ≥ ½ t log2(1/t) E[I_min]` for a common measure `t`.
    AvgChvatal,
    /// `E[Cor] ≥ (4γ)⁻¹ (2 − 2√(2γ log2 e)) t E[s_γ]`.
    AvgSgamma,
}

impl EnsembleChecker {
    pub const ALL: [EnsembleChecker; 3] =
        [EnsembleChecker::AvgDream, EnsembleChecker::AvgChvatal, EnsembleChecker::AvgSgamma];

    pub fn name(self) -> &'static str {
        match self {
            EnsembleChecker::AvgDream => "avg_dream",
            EnsembleChecker::AvgChvatal => "avg_chvatal",
            EnsembleChecker::AvgSgamma => "avg_sgamma",
        }
    }
}

impl fmt::Display for EnsembleChecker {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EnsembleChecker {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        EnsembleChecker::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownChecker(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EnsembleReport {
    pub checker: EnsembleChecker,
    pub size: usize,
    /// Common measure, when all families share one.
    pub measure: Option<Dyadic>,
    /// `E[Cor(A,B)]` over all `size²` ordered pairs.
    pub expected_cor: BigRational,
    pub lhs: Value,
    pub rhs: Value,
    pub margin: Value,
    pub holds: bool,
    pub gamma: Option<f64>,
    /// `max(1, ⌊γ log2(1/t)⌋)` for `avg_sgamma`.
    pub q: Option<u64>,
    /// Whether `γ log2(1/t)` is itself a positive integer; the bound is
    /// only guaranteed then.
    pub q_integral: Option<bool>,
}

fn mean<I: IntoIterator<Item = BigRational>>(items: I, k: usize) -> BigRational {
    items.into_iter().sum::<BigRational>() / BigInt::from(k)
}

/// Evaluates an averaged inequality exactly over all ordered pairs.
///
/// `E[Cor]` is computed as the literal double average and cross-checked
/// against `Σ_{S≠∅} (E Â(S))²`, which holds by independence.
pub fn evaluate_ensemble(checker: EnsembleChecker, families: &[SetFamily], gamma: f64) -> Result<EnsembleReport> {
    let Some(first) = families.first() else {
        return Err(Error::InvalidInput("empty ensemble".into()));
    };
    let n = first.n();
    let profiles: Vec<FamilyProfile> = families.iter().cloned().map(FamilyProfile::new).collect();
    for (i, p) in profiles.iter().enumerate() {
        first.same_dim(p.family())?;
        if !p.predicates().increasing {
            return Err(Error::InvalidInput(format!("ensemble member {i} is not increasing")));
        }
    }
    let k = profiles.len();
    let measure = {
        let t = profiles[0].measure();
        profiles.iter().all(|p| p.measure() == t).then_some(t)
    };
    if checker != EnsembleChecker::AvgDream && measure.is_none() {
        return Err(Error::InvalidInput(format!("{checker} needs all measures equal")));
    }

    let mut pairwise = BigInt::zero();
    for a in &profiles {
        for b in &profiles {
            pairwise += BigInt::from(a.correlation_numerator(b)?);
        }
    }
    let scale = BigInt::from(1) << (2 * n);
    let expected_cor = BigRational::new(pairwise, scale.clone() * BigInt::from(k * k));

    let size = 1usize << n;
    let spectral: BigInt = (1..size)
        .map(|s| {
            let total: i128 = profiles.iter().map(|p| p.walsh()[s] as i128).sum();
            BigInt::from(total) * BigInt::from(total)
        })
        .sum();
    if BigRational::new(spectral, scale * BigInt::from(k * k)) != expected_cor {
        return Err(Error::Inconsistent("E[Cor] disagrees with Σ (E Â(S))²".into()));
    }

    let lhs = Value::Exact(expected_cor.clone());
    let mut q_info = None;
    let rhs = match checker {
        EnsembleChecker::AvgDream => {
            let q: BigRational = (1..=n)
                .map(|c| {
                    let e = mean(profiles.iter().map(|p| p.influence(c).to_rational()), k);
                    &e * &e
                })
                .sum();
            Value::Exact(q / BigInt::from(4))
        }
        EnsembleChecker::AvgChvatal => {
            let t = measure.clone().expect("checked");
            let e_min = mean(profiles.iter().map(|p| p.influences().minimum.to_rational()), k);
            times(&Value::Exact(e_min / BigInt::from(2)), &entropy_term(&t))
        }
        EnsembleChecker::AvgSgamma => {
            if !(gamma > 0.0) {
                return Err(Error::InvalidInput(format!("gamma must be positive, got {gamma}")));
            }
            let t = measure.clone().expect("checked");
            let raw = gamma * -t.to_f64().log2();
            let q = (raw.floor() as u64).max(1);
            q_info = Some((q, raw >= 1.0 && (raw - raw.round()).abs() < 1e-12));
            let mut e_s = BigRational::zero();
            for p in &profiles {
                e_s += p.family().s_gamma(gamma)?.to_rational();
            }
            let e_s = e_s / BigInt::from(k);
            let coef = (2.0 - 2.0 * (2.0 * gamma * std::f64::consts::LOG2_E).sqrt()) / (4.0 * gamma);
            Value::Float(coef * t.to_f64() * crate::value::rational_to_f64(&e_s))
        }
    };
    let margin = lhs.minus(&rhs);
    let holds = match &margin {
        Value::Exact(m) => !m.is_negative(),
        Value::Float(m) => *m >= -FLOAT_SLACK,
    };
    Ok(EnsembleReport {
        checker,
        size: k,
        measure,
        expected_cor,
        lhs,
        rhs,
        margin,
        holds,
        gamma: (checker == EnsembleChecker::AvgSgamma).then_some(gamma),
        q: q_info.map(|(q, _)| q),
        q_integral: q_info.map(|(_, i)| i),
    })
}
