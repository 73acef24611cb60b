//! Cached integer statistics of a family, shared by checkers and scans.
//!
//! Everything is kept as integers over a known power of two: member count
//! over `2^n`, boundary counts `b_k` with `I_k = b_k / 2^(n-1)`, and the
//! unnormalized Walsh sums `W(S) = 2^n · χ̂_F(S)`.

use std::sync::OnceLock;

use crate::cube::{walsh_i64, Spectrum};
use crate::dyadic::Dyadic;
use crate::error::Result;
use crate::set_family::{InfluenceVector, Predicates, SetFamily};

#[derive(Debug)]
pub struct FamilyProfile {
    family: SetFamily,
    count: u64,
    boundary: Vec<u64>,
    predicates: OnceLock<Predicates>,
    walsh: OnceLock<Vec<i64>>,
}

impl Clone for FamilyProfile {
    fn clone(&self) -> Self {
        FamilyProfile {
            family: self.family.clone(),
            count: self.count,
            boundary: self.boundary.clone(),
            predicates: self.predicates.clone(),
            walsh: self.walsh.clone(),
        }
    }
}

impl FamilyProfile {
    pub fn new(family: SetFamily) -> Self {
        let count = family.count();
        let boundary = family.boundary_counts();
        FamilyProfile {
            family,
            count,
            boundary,
            predicates: OnceLock::new(),
            walsh: OnceLock::new(),
        }
    }

    pub fn family(&self) -> &SetFamily {
        &self.family
    }

    pub fn n(&self) -> usize {
        self.family.n()
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    pub fn boundary(&self) -> &[u64] {
        &self.boundary
    }

    pub fn measure(&self) -> Dyadic {
        Dyadic::new(self.count, self.n() as u32)
    }

    /// `I_k` for 1-based `k`.
    pub fn influence(&self, k: usize) -> Dyadic {
        Dyadic::new(2 * self.boundary[k - 1], self.n() as u32)
    }

    pub fn influences(&self) -> InfluenceVector {
        let entries: Vec<Dyadic> = (1..=self.n()).map(|k| self.influence(k)).collect();
        InfluenceVector {
            total: entries.iter().sum(),
            minimum: entries.iter().min().cloned().unwrap_or_default(),
            entries,
        }
    }

    pub fn total_boundary(&self) -> u64 {
        self.boundary.iter().sum()
    }

    pub fn min_boundary(&self) -> u64 {
        self.boundary.iter().copied().min().unwrap_or(0)
    }

    pub fn max_boundary(&self) -> u64 {
        self.boundary.iter().copied().max().unwrap_or(0)
    }

    pub fn predicates(&self) -> &Predicates {
        self.predicates.get_or_init(|| self.family.predicates())
    }

    /// `W(S) = Σ_T χ_F(T) (−1)^{|S∩T|}`; `|W(S)| ≤ 2^n`.
    pub fn walsh(&self) -> &[i64] {
        self.walsh.get_or_init(|| {
            let mut t: Vec<i64> = (0..1u32 << self.n())
                .map(|m| self.family.contains(m) as i64)
                .collect();
            walsh_i64(&mut t);
            t
        })
    }

    /// `χ̂_F(S)` exactly.
    pub fn coefficient(&self, set_mask: u32) -> Dyadic {
        Dyadic::new(self.walsh()[set_mask as usize], self.n() as u32)
    }

    pub fn spectrum(&self) -> Spectrum {
        let n = self.n();
        Spectrum::new(n, self.walsh().iter().map(|&w| Dyadic::new(w, n as u32)).collect())
            .expect("dimension already validated")
    }

    /// Numerator of `Cor(A,B)` over `2^(2n)`, from member counts.
    pub fn correlation_numerator(&self, other: &FamilyProfile) -> Result<i128> {
        let both = self.family.intersection_count(&other.family)? as i128;
        Ok((both << self.n()) - self.count as i128 * other.count as i128)
    }

    /// Numerator of `Σ_{S≠∅} Â(S) B̂(S)` over `2^(2n)`.
    pub fn spectral_correlation_numerator(&self, other: &FamilyProfile) -> Result<i128> {
        self.family.same_dim(&other.family)?;
        Ok(self
            .walsh()
            .iter()
            .zip(other.walsh())
            .skip(1)
            .map(|(&a, &b)| a as i128 * b as i128)
            .sum())
    }

    pub fn correlation(&self, other: &FamilyProfile) -> Result<Dyadic> {
        Ok(Dyadic::from_i128(
            self.correlation_numerator(other)?,
            2 * self.n() as u32,
        ))
    }
}

impl From<SetFamily> for FamilyProfile {
    fn from(f: SetFamily) -> Self {
        FamilyProfile::new(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cube::wht;

    #[test]
    fn cached_spectrum_matches_exact_transform() {
        let f = SetFamily::from_fn(6, |m| (m * 7 + 3) % 5 < 2).unwrap();
        let p = FamilyProfile::new(f.clone());
        assert_eq!(p.spectrum(), wht(&f.indicator()));
        assert_eq!(p.influences(), f.influences());
    }

    #[test]
    fn pointwise_and_spectral_correlation_agree() {
        let a = FamilyProfile::new(SetFamily::from_fn(5, |m| m.count_ones() >= 3).unwrap());
        let b = FamilyProfile::new(SetFamily::from_fn(5, |m| m & 3 == 3 || m & 12 == 12).unwrap());
        assert_eq!(
            a.correlation_numerator(&b).unwrap(),
            a.spectral_correlation_numerator(&b).unwrap()
        );
    }
}
