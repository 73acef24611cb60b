//! First-improvement local search over monotone single-point moves.

use std::cmp::Ordering;

use rand::seq::SliceRandom;

use crate::error::{Error, Result};
use crate::families::rng_from_seed;
use crate::inequalities::{evaluate, CheckerId, Operands, Params};
use crate::profile::FamilyProfile;
use crate::set_family::SetFamily;
use crate::value::Value;

use super::{ExtremalRecord, Objective, SearchClass};

#[derive(Clone, Debug, PartialEq)]
pub struct LocalSearchSpec {
    pub checker: CheckerId,
    pub params: Params,
    pub objective: Objective,
    pub a_class: SearchClass,
    pub b_class: SearchClass,
    /// Maximum number of candidate evaluations.
    pub budget: u64,
    pub seed: u64,
}

/// Moves that keep `f` inside `class`.
///
/// Increasing classes toggle a minimal member or a maximal non-member;
/// decreasing ones the mirror image. Maximal intersecting families have no
/// such single toggles, so they swap a minimal member `X` for `X^c`.
fn moves(f: &SetFamily, class: SearchClass) -> Vec<SetFamily> {
    let top = (1u32 << f.n()) - 1;
    let mut out: Vec<SetFamily> = match class {
        SearchClass::MaximalIntersecting => f
            .minimal_members()
            .into_iter()
            .map(|x| f.with_toggled(x).with_toggled(x ^ top))
            .collect(),
        SearchClass::Decreasing => {
            let c = f.complement();
            c.minimal_members().into_iter().chain(c.maximal_non_members()).map(|m| f.with_toggled(m)).collect()
        }
        SearchClass::Any => (0..=top).map(|m| f.with_toggled(m)).collect(),
        _ => f.minimal_members().into_iter().chain(f.maximal_non_members()).map(|m| f.with_toggled(m)).collect(),
    };
    out.retain(|g| class.admits(g));
    out
}

fn score(spec: &LocalSearchSpec, a: &SetFamily, b: &SetFamily) -> Result<Option<Value>> {
    let (pa, pb) = (FamilyProfile::new(a.clone()), FamilyProfile::new(b.clone()));
    match evaluate(spec.checker, Some(&pa), Some(&pb), &spec.params) {
        Ok(r) => Ok(spec.objective.of(&r)),
        Err(Error::ClassViolation { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Improves `(a, b)` one move at a time until no neighbour is strictly
/// better or the budget runs out. The trace of accepted values is
/// nonincreasing.
pub fn local_search(spec: &LocalSearchSpec, a: &SetFamily, b: &SetFamily) -> Result<ExtremalRecord> {
    if !spec.a_class.admits(a) {
        return Err(Error::ClassViolation { operand: "A", requirement: spec.a_class.name() });
    }
    if !spec.b_class.admits(b) {
        return Err(Error::ClassViolation { operand: "B", requirement: spec.b_class.name() });
    }
    let (pa, pb) = (FamilyProfile::new(a.clone()), FamilyProfile::new(b.clone()));
    let start = evaluate(spec.checker, Some(&pa), Some(&pb), &spec.params)?;
    let mut rec = ExtremalRecord::empty(spec.checker, spec.objective);
    rec.examined = 1;
    let Some(mut current) = spec.objective.of(&start) else {
        rec.vacuous = 1;
        rec.witness_a = Some(a.clone());
        rec.witness_b = Some(b.clone());
        rec.witness_report = Some(start);
        return Ok(rec);
    };
    let (move_a, move_b) = match spec.checker.operands() {
        Operands::Pair => (true, true),
        Operands::OnlyA => (true, false),
        Operands::OnlyB => (false, true),
    };
    let mut rng = rng_from_seed(spec.seed);
    let (mut a, mut b) = (a.clone(), b.clone());
    rec.trace.push(current.clone());
    let mut spent = 0u64;
    'outer: while spent < spec.budget {
        let mut candidates: Vec<(SetFamily, SetFamily)> = Vec::new();
        if move_a {
            candidates.extend(moves(&a, spec.a_class).into_iter().map(|x| (x, b.clone())));
        }
        if move_b {
            candidates.extend(moves(&b, spec.b_class).into_iter().map(|y| (a.clone(), y)));
        }
        candidates.shuffle(&mut rng);
        for (x, y) in candidates {
            if spent >= spec.budget {
                break 'outer;
            }
            spent += 1;
            rec.examined += 1;
            match score(spec, &x, &y)? {
                Some(v) if v.compare(&current) == Ordering::Less => {
                    current = v;
                    rec.trace.push(current.clone());
                    a = x;
                    b = y;
                    continue 'outer;
                }
                Some(_) => {}
                None => rec.vacuous += 1,
            }
        }
        break;
    }
    let (pa, pb) = (FamilyProfile::new(a.clone()), FamilyProfile::new(b.clone()));
    let report = evaluate(spec.checker, Some(&pa), Some(&pb), &spec.params)?;
    rec.best = Some(current);
    rec.ratio_min = report.ratio.as_ref().map(Value::to_f64);
    rec.witness_a = Some(a);
    rec.witness_b = Some(b);
    rec.witness_report = Some(report);
    Ok(rec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{majority, principal};
    use crate::value::ratio;

    fn spec(budget: u64) -> LocalSearchSpec {
        LocalSearchSpec {
            checker: CheckerId::ChvatalEquiv,
            params: Params::default(),
            objective: Objective::MinMargin,
            a_class: SearchClass::Increasing,
            b_class: SearchClass::MaximalIntersecting,
            budget,
            seed: 1,
        }
    }

    #[test]
    fn tight_start_stays_tight() {
        let rec = local_search(&spec(500), &majority(3).unwrap(), &principal(3, 1).unwrap()).unwrap();
        assert_eq!(rec.best, Some(Value::exact(ratio(0, 1))));
        assert_eq!(rec.trace.len(), 1);
    }

    #[test]
    fn zero_budget_returns_start() {
        let a = SetFamily::full(3).unwrap().with_toggled(0);
        let rec = local_search(&spec(0), &a, &majority(3).unwrap()).unwrap();
        assert_eq!(rec.examined, 1);
        assert_eq!(rec.witness_a.as_ref(), Some(&a));
    }

    #[test]
    fn trace_is_nonincreasing_and_classes_hold() {
        let a = SetFamily::full(4).unwrap().with_toggled(0);
        let b = principal(4, 2).unwrap();
        let rec = local_search(&spec(2000), &a, &b).unwrap();
        for w in rec.trace.windows(2) {
            assert!(w[1].compare(&w[0]) == Ordering::Less);
        }
        assert!(!rec.best.unwrap().is_negative());
        assert!(rec.witness_b.unwrap().predicates().maximal_intersecting());
    }

    #[test]
    fn swap_moves_preserve_maximal_intersecting() {
        let b = majority(5).unwrap();
        let next = moves(&b, SearchClass::MaximalIntersecting);
        assert!(!next.is_empty());
        assert!(next.iter().all(|g| g.predicates().maximal_intersecting()));
    }

    #[test]
    fn rejects_out_of_class_start() {
        let r = local_search(&spec(10), &majority(3).unwrap(), &SetFamily::full(3).unwrap());
        assert!(r.is_err());
    }
}
