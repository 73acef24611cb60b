//! The tribes family `A = {X : X ⊇ S_i for some block S_i}` with its dual.
//!
//! Blocks are consecutive: `S_1 = {1..r}`, `S_2 = {r+1..2r}`, and so on.
//! Statistics come from three independent paths: brute force over the
//! truth table, an exact closed form (all of `μ`, `Cor` and `I` are dyadic),
//! and a float closed form usable for any parameters.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::profile::FamilyProfile;
use crate::set_family::SetFamily;
use crate::value::Value;
use crate::MAX_DIM;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TribesParams {
    pub r: usize,
    pub m: usize,
}

impl TribesParams {
    pub fn new(r: usize, m: usize) -> Result<Self> {
        if r == 0 || m == 0 {
            return Err(Error::InvalidInput(format!("tribes needs r, m ≥ 1, got r={r}, m={m}")));
        }
        Ok(TribesParams { r, m })
    }

    pub fn n(&self) -> usize {
        self.r * self.m
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TribesSource {
    BruteForce,
    ClosedFormExact,
    ClosedFormFloat,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TribesStats {
    pub params: TribesParams,
    pub source: TribesSource,
    pub mu_a: Value,
    pub mu_b: Value,
    pub cor: Value,
    /// Influence of every coordinate, on `A` and on `B` alike.
    pub influence: Value,
    /// `Cor / I_min`.
    pub ratio_chvatal: Value,
    /// `Cor / (I_min · μ_B (1 − μ_B))`.
    pub ratio_balanced: Value,
}

impl TribesStats {
    fn assemble(params: TribesParams, source: TribesSource, mu_b: Value, cor: Value, influence: Value) -> Self {
        let mu_a = Value::int(1).minus(&mu_b);
        let ratio_chvatal = cor.ratio(&influence).unwrap_or(Value::Float(f64::NAN));
        let denom = match (&influence, &mu_b) {
            (Value::Exact(i), Value::Exact(mb)) => {
                Value::Exact(i * mb * (BigRational::one() - mb))
            }
            _ => Value::Float(influence.to_f64() * mu_b.to_f64() * (1.0 - mu_b.to_f64())),
        };
        let ratio_balanced = cor.ratio(&denom).unwrap_or(Value::Float(f64::NAN));
        TribesStats { params, source, mu_a, mu_b, cor, influence, ratio_chvatal, ratio_balanced }
    }
}

/// `(A, B)` with `B` the dual of the tribes family `A`.
pub fn tribes(params: TribesParams) -> Result<(SetFamily, SetFamily)> {
    let n = params.n();
    if n > MAX_DIM {
        return Err(Error::DimensionTooLarge(n));
    }
    let block = (1u32 << params.r) - 1;
    let blocks: Vec<u32> = (0..params.m).map(|i| block << (i * params.r)).collect();
    let a = SetFamily::from_fn(n, |x| blocks.iter().any(|&b| x & b == b))?;
    let b = a.dual();
    Ok((a, b))
}

/// Brute force over the `2^(rm)` truth table.
pub fn tribes_exact(params: TribesParams) -> Result<TribesStats> {
    let (a, b) = tribes(params)?;
    let pa = FamilyProfile::new(a);
    let pb = FamilyProfile::new(b);
    let infl = pa.influences();
    Ok(TribesStats::assemble(
        params,
        TribesSource::BruteForce,
        pb.measure().into(),
        pa.correlation(&pb)?.into(),
        infl.minimum.into(),
    ))
}

/// Exact closed form, for any parameters:
/// `μ_B = (1 − 2^-r)^m`,
/// `Cor = ((2^r − 1)^{2m} − (2^r (2^r − 2))^m) / 2^{2rm}`,
/// `I = 2^{1−r} (1 − 2^-r)^{m−1}`.
pub fn tribes_closed_form_exact(params: TribesParams) -> TribesStats {
    let TribesParams { r, m } = params;
    let q = (BigInt::one() << r) - 1u32;
    let mu_b = Dyadic::new(q.pow(m as u32), (r * m) as u32);
    let shrink = (BigInt::one() << r) * ((BigInt::one() << r) - 2u32);
    let cor = Dyadic::new(q.pow(2 * m as u32) - shrink.pow(m as u32), (2 * r * m) as u32);
    let influence = Dyadic::new(q.pow(m as u32 - 1), (r * m - 1) as u32);
    TribesStats::assemble(
        params,
        TribesSource::ClosedFormExact,
        mu_b.into(),
        cor.into(),
        influence.into(),
    )
}

/// Float closed form via `ln_1p`/`expm1`, accurate for large `r` and `m`.
pub fn tribes_closed_form(params: TribesParams) -> TribesStats {
    let (r, m) = (params.r as f64, params.m as f64);
    let p = (-r).exp2();
    let ln_q = (-p).ln_1p();
    let mu_b = (m * ln_q).exp();
    let eps = 1.0 / (r.exp2() - 1.0).powi(2);
    let cor = mu_b * mu_b * -(m * (-eps).ln_1p()).exp_m1();
    let influence = 2.0 * p * ((m - 1.0) * ln_q).exp();
    TribesStats::assemble(
        params,
        TribesSource::ClosedFormFloat,
        Value::Float(mu_b),
        Value::Float(cor),
        Value::Float(influence),
    )
}

/// `⌊log2 n − log2 log2 n + log2 log2 e⌋`, at least 1.
pub fn tribe_size_for(n: usize) -> Result<usize> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("tribe size rule needs n ≥ 2, got {n}")));
    }
    let l = (n as f64).log2();
    let r = l - l.log2() + std::f64::consts::LOG2_E.log2();
    Ok((r.floor() as usize).max(1))
}
