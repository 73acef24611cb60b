//! The three equivalent forms of Chvátal's conjecture on one decreasing
//! family: largest intersecting subfamily, best star, and the correlation
//! form `Cor(F,B) ≤ −¼ I_min(F)` over maximal intersecting `B`.

use num_rational::BigRational;
use num_traits::Signed;

use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::families::{enumerate, principal, FamilyClass};
use crate::profile::FamilyProfile;
use crate::set_family::SetFamily;

/// Largest dimension for the check (the maximal intersecting families are
/// enumerated).
pub const MAX_EQUIVALENCE_DIM: usize = 4;

#[derive(Clone, Debug, PartialEq)]
pub struct EquivalenceRecord {
    /// `max |F ∩ B|` over maximal intersecting `B`.
    pub max_intersecting_subfamily_size: u64,
    /// `max_k |F ∩ F_k|`.
    pub best_principal_size: u64,
    /// `min_B (−¼ I_min(F) − Cor(F,B))`.
    pub cor_form_margin: BigRational,
    pub consistent: bool,
}

pub fn equivalence_check(family: &SetFamily) -> Result<EquivalenceRecord> {
    let n = family.n();
    if n == 0 || n > MAX_EQUIVALENCE_DIM {
        return Err(Error::LimitExceeded(format!("equivalence check needs 1 ≤ n ≤ {MAX_EQUIVALENCE_DIM}, got {n}")));
    }
    if !family.is_decreasing() {
        return Err(Error::ClassViolation { operand: "F", requirement: "decreasing" });
    }
    let pf = FamilyProfile::new(family.clone());
    let half_mu = pf.measure().half();
    let quarter_min = Dyadic::new(2 * pf.min_boundary(), n as u32 + 2);
    let size = Dyadic::pow2_inv(0).scale_pow2(n as i32);

    let mut best_sub = 0u64;
    let mut margin: Option<Dyadic> = None;
    for b in enumerate(n, FamilyClass::MaximalIntersecting)? {
        let pb = FamilyProfile::new(b.clone());
        let cor = pf.correlation(&pb)?;
        let via_cor = (cor.clone() + half_mu.clone()) * size.clone();
        let direct = family.intersection_count(&b)?;
        if via_cor != Dyadic::new(direct, 0) {
            return Err(Error::Inconsistent(format!(
                "|F∩B| = {direct} but 2^n(Cor + μ/2) = {via_cor}"
            )));
        }
        best_sub = best_sub.max(direct);
        let m = -quarter_min.clone() - cor;
        margin = Some(match margin {
            Some(old) if old <= m => old,
            _ => m,
        });
    }
    let best_principal = (1..=n)
        .map(|k| family.intersection_count(&principal(n, k)?))
        .collect::<Result<Vec<u64>>>()?
        .into_iter()
        .max()
        .unwrap_or(0);
    let margin = margin.expect("at least one maximal intersecting family").to_rational();
    let consistent = (best_sub == best_principal) == !margin.is_negative();
    Ok(EquivalenceRecord {
        max_intersecting_subfamily_size: best_sub,
        best_principal_size: best_principal,
        cor_form_margin: margin,
        consistent,
    })
}
