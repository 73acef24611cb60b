//! Extremal search: exhaustive and sampled scans of a registry checker over
//! two family classes, local search, and the tribes sweep.
//!
//! Scans are deterministic in `(spec, seed)`: instances are generated
//! sequentially from one seeded stream, evaluated in parallel, and reduced
//! with a total order (objective, then instance index), so the record does
//! not depend on the worker count.

mod local;
mod sweep;

pub use local::{local_search, LocalSearchSpec};
pub use sweep::{balancing_tribe_count, tribes_scan, tribes_sweep, SweepMode, TribesSweep};

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::families::{
    enumerate, random_increasing_with, random_maximal_intersecting, rng_from_seed, FamilyClass, RandomModel,
};
use crate::inequalities::{evaluate, evaluate_with, CheckerId, InequalityReport, Operands, Params, Verdict};
use crate::profile::FamilyProfile;
use crate::set_family::SetFamily;
use crate::value::Value;

/// Largest number of instances an exhaustive scan will visit.
pub const MAX_EXHAUSTIVE_INSTANCES: u64 = 50_000_000;

/// Operand classes a scan draws from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchClass {
    /// Every family (exhaustive only for `n ≤ 3`).
    Any,
    Increasing,
    Decreasing,
    IncreasingIntersecting,
    MaximalIntersecting,
    /// Increasing with measure ½.
    Balanced,
}

impl SearchClass {
    pub const ALL: [SearchClass; 6] = [
        SearchClass::Any,
        SearchClass::Increasing,
        SearchClass::Decreasing,
        SearchClass::IncreasingIntersecting,
        SearchClass::MaximalIntersecting,
        SearchClass::Balanced,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SearchClass::Any => "any",
            SearchClass::Increasing => "increasing",
            SearchClass::Decreasing => "decreasing",
            SearchClass::IncreasingIntersecting => "increasing-intersecting",
            SearchClass::MaximalIntersecting => "maximal-intersecting",
            SearchClass::Balanced => "balanced",
        }
    }

    pub fn admits(self, f: &SetFamily) -> bool {
        match self {
            SearchClass::Any => true,
            SearchClass::Increasing => f.is_increasing(),
            SearchClass::Decreasing => f.is_decreasing(),
            SearchClass::IncreasingIntersecting => f.is_increasing() && f.is_intersecting(),
            SearchClass::MaximalIntersecting => f.predicates().maximal_intersecting(),
            SearchClass::Balanced => f.is_increasing() && f.is_balanced(),
        }
    }

    /// All members at dimension `n`, in ascending bitset order.
    pub fn enumerate(self, n: usize) -> Result<Vec<SetFamily>> {
        let base = match self {
            SearchClass::Any => {
                if n > 3 {
                    return Err(Error::LimitExceeded(format!("all families at n = {n} are not enumerable")));
                }
                return (0..1u64 << (1 << n)).map(|w| SetFamily::from_words(n, vec![w])).collect();
            }
            SearchClass::Increasing | SearchClass::Balanced => FamilyClass::Increasing,
            SearchClass::Decreasing => FamilyClass::Decreasing,
            SearchClass::IncreasingIntersecting => FamilyClass::IncreasingIntersecting,
            SearchClass::MaximalIntersecting => FamilyClass::MaximalIntersecting,
        };
        Ok(enumerate(n, base)?.filter(|f| self.admits(f)).collect())
    }

    /// One random member.
    pub fn sample<R: Rng>(self, n: usize, rng: &mut R) -> Result<SetFamily> {
        let increasing = |rng: &mut R| -> Result<SetFamily> {
            let model = if rng.gen_bool(0.5) {
                RandomModel::Generators { count: rng.gen_range(1..=n + 2) }
            } else {
                RandomModel::ThresholdPerturbation { steps: rng.gen_range(0..=2 * n) }
            };
            random_increasing_with(n, rng, model)
        };
        match self {
            SearchClass::Any => SetFamily::from_fn(n, |_| rng.gen_bool(0.5)),
            SearchClass::Increasing => increasing(rng),
            SearchClass::Decreasing => Ok(increasing(rng)?.complement()),
            SearchClass::IncreasingIntersecting => Ok(increasing(rng)?.plus_minus_parts()?.0),
            SearchClass::MaximalIntersecting => random_maximal_intersecting(n, rng),
            SearchClass::Balanced => {
                // rejection first, antipodal families as the fallback
                for _ in 0..64 {
                    let f = increasing(rng)?;
                    if f.is_balanced() {
                        return Ok(f);
                    }
                }
                random_maximal_intersecting(n, rng)
            }
        }
    }
}

impl fmt::Display for SearchClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SearchClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.replace('_', "-");
        let alias = match s.as_str() {
            "intersecting" => "increasing-intersecting",
            "maxint" => "maximal-intersecting",
            other => other,
        };
        SearchClass::ALL
            .into_iter()
            .find(|c| c.name() == alias)
            .ok_or_else(|| Error::InvalidInput(format!("unknown class `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Objective {
    MinMargin,
    MinRatio,
}

impl Objective {
    pub fn name(self) -> &'static str {
        match self {
            Objective::MinMargin => "min-margin",
            Objective::MinRatio => "min-ratio",
        }
    }

    /// The objective value of a report; `None` when it has none.
    pub fn of(self, report: &InequalityReport) -> Option<Value> {
        if report.verdict == Verdict::Vacuous {
            return None;
        }
        match self {
            Objective::MinMargin => Some(report.margin.clone()),
            Objective::MinRatio => report.ratio.clone(),
        }
    }
}

impl FromStr for Objective {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "min-margin" | "margin" => Ok(Objective::MinMargin),
            "min-ratio" | "ratio" => Ok(Objective::MinRatio),
            _ => Err(Error::InvalidInput(format!("unknown objective `{s}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Budget {
    Exhaustive,
    Samples(u64),
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScanSpec {
    pub n: usize,
    pub a_class: SearchClass,
    pub b_class: SearchClass,
    pub checker: CheckerId,
    pub params: Params,
    pub objective: Objective,
    pub budget: Budget,
    pub seed: u64,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
}

impl ScanSpec {
    pub fn new(n: usize, checker: CheckerId, a_class: SearchClass, b_class: SearchClass) -> Self {
        ScanSpec {
            n,
            a_class,
            b_class,
            checker,
            params: Params::default(),
            objective: Objective::MinMargin,
            budget: Budget::Exhaustive,
            seed: 0,
            jobs: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExtremalRecord {
    pub checker: CheckerId,
    pub objective: Objective,
    pub best: Option<Value>,
    pub witness_a: Option<SetFamily>,
    pub witness_b: Option<SetFamily>,
    /// Full evaluation of the witness.
    pub witness_report: Option<InequalityReport>,
    pub examined: u64,
    /// Instances without an objective value (vacuous or zero core).
    pub vacuous: u64,
    /// Instances rejected by the checker's class requirements.
    pub skipped: u64,
    /// Instances with verdict `fails`.
    pub failures: u64,
    pub ratio_min: Option<f64>,
    pub ratio_median: Option<f64>,
    /// Accepted objective values, for local search.
    pub trace: Vec<Value>,
}

impl ExtremalRecord {
    fn empty(checker: CheckerId, objective: Objective) -> Self {
        ExtremalRecord {
            checker,
            objective,
            best: None,
            witness_a: None,
            witness_b: None,
            witness_report: None,
            examined: 0,
            vacuous: 0,
            skipped: 0,
            failures: 0,
            ratio_min: None,
            ratio_median: None,
            trace: Vec::new(),
        }
    }

    /// Combines two records; ties keep `self`'s witness. Medians are not
    /// recomputed, so the merged median is `None`.
    pub fn merge(self, other: ExtremalRecord) -> ExtremalRecord {
        let take_other = match (&self.best, &other.best) {
            (None, Some(_)) => true,
            (Some(x), Some(y)) => y.compare(x) == Ordering::Less,
            _ => false,
        };
        let (keep, drop) = if take_other { (other, self) } else { (self, other) };
        ExtremalRecord {
            examined: keep.examined + drop.examined,
            vacuous: keep.vacuous + drop.vacuous,
            skipped: keep.skipped + drop.skipped,
            failures: keep.failures + drop.failures,
            ratio_min: match (keep.ratio_min, drop.ratio_min) {
                (Some(x), Some(y)) => Some(x.min(y)),
                (x, y) => x.or(y),
            },
            ratio_median: None,
            ..keep
        }
    }
}

/// Per-worker partial result, reduced in a fixed total order.
#[derive(Clone, Debug, Default)]
struct Acc {
    best: Option<(Value, u64)>,
    examined: u64,
    vacuous: u64,
    skipped: u64,
    failures: u64,
    ratios: Vec<f64>,
}

impl Acc {
    fn offer(&mut self, v: Value, idx: u64) {
        let better = match &self.best {
            None => true,
            Some((b, bi)) => match v.compare(b) {
                Ordering::Less => true,
                Ordering::Equal => idx < *bi,
                Ordering::Greater => false,
            },
        };
        if better {
            self.best = Some((v, idx));
        }
    }

    fn merge(mut self, other: Acc) -> Acc {
        if let Some((v, i)) = other.best {
            self.offer(v, i);
        }
        self.examined += other.examined;
        self.vacuous += other.vacuous;
        self.skipped += other.skipped;
        self.failures += other.failures;
        self.ratios.extend(other.ratios);
        self
    }
}

fn visit(
    acc: &mut Acc,
    spec: &ScanSpec,
    a: Option<&FamilyProfile>,
    b: Option<&FamilyProfile>,
    idx: u64,
) -> Result<()> {
    acc.examined += 1;
    let report = match evaluate_with(spec.checker, a, b, &spec.params, false) {
        Ok(r) => r,
        Err(Error::ClassViolation { .. }) => {
            acc.skipped += 1;
            return Ok(());
        }
        Err(e) => return Err(e),
    };
    if report.verdict == Verdict::Fails {
        acc.failures += 1;
    }
    if let Some(r) = report.ratio.as_ref().filter(|_| report.verdict != Verdict::Vacuous) {
        acc.ratios.push(r.to_f64());
    }
    match spec.objective.of(&report) {
        Some(v) => acc.offer(v, idx),
        None => acc.vacuous += 1,
    }
    Ok(())
}

fn run_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match jobs {
        None => Ok(f()),
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j.max(1))
                .build()
                .map_err(|e| Error::InvalidInput(format!("thread pool: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

fn finish(spec: &ScanSpec, acc: Acc, witness: impl Fn(u64) -> (Option<SetFamily>, Option<SetFamily>)) -> Result<ExtremalRecord> {
    let mut rec = ExtremalRecord::empty(spec.checker, spec.objective);
    rec.examined = acc.examined;
    rec.vacuous = acc.vacuous;
    rec.skipped = acc.skipped;
    rec.failures = acc.failures;
    let mut ratios = acc.ratios;
    ratios.sort_by(f64::total_cmp);
    rec.ratio_min = ratios.first().copied();
    rec.ratio_median = (!ratios.is_empty()).then(|| ratios[(ratios.len() - 1) / 2]);
    if let Some((v, idx)) = acc.best {
        let (wa, wb) = witness(idx);
        let pa = wa.clone().map(FamilyProfile::new);
        let pb = wb.clone().map(FamilyProfile::new);
        let report = evaluate(spec.checker, pa.as_ref(), pb.as_ref(), &spec.params)?;
        if spec.objective.of(&report).as_ref() != Some(&v) {
            return Err(Error::Inconsistent("witness re-evaluation differs from the scanned value".into()));
        }
        rec.best = Some(v);
        rec.witness_a = wa;
        rec.witness_b = wb;
        rec.witness_report = Some(report);
    }
    Ok(rec)
}

/// Scans a checker over `A-class × B-class` (or one class for
/// single-operand rows).
pub fn scan(spec: &ScanSpec) -> Result<ExtremalRecord> {
    let (use_a, use_b) = match spec.checker.operands() {
        Operands::Pair => (true, true),
        Operands::OnlyA => (true, false),
        Operands::OnlyB => (false, true),
    };
    match spec.budget {
        Budget::Exhaustive => {
            let list = |use_it: bool, class: SearchClass| -> Result<Vec<FamilyProfile>> {
                if !use_it {
                    return Ok(vec![]);
                }
                Ok(class.enumerate(spec.n)?.into_iter().map(FamilyProfile::new).collect())
            };
            let a_list = list(use_a, spec.a_class)?;
            let b_list = list(use_b, spec.b_class)?;
            let rows = if use_a { a_list.len() } else { 1 };
            let cols = if use_b { b_list.len() } else { 1 };
            let total = rows as u64 * cols as u64;
            if total > MAX_EXHAUSTIVE_INSTANCES {
                return Err(Error::LimitExceeded(format!("{total} instances exceed {MAX_EXHAUSTIVE_INSTANCES}")));
            }
            let acc = run_pool(spec.jobs, || {
                (0..rows)
                    .into_par_iter()
                    .map(|i| -> Result<Acc> {
                        let mut acc = Acc::default();
                        for j in 0..cols {
                            let a = use_a.then(|| &a_list[i]);
                            let b = use_b.then(|| &b_list[j]);
                            visit(&mut acc, spec, a, b, (i * cols + j) as u64)?;
                        }
                        Ok(acc)
                    })
                    .try_reduce(Acc::default, |x, y| Ok(x.merge(y)))
            })??;
            finish(spec, acc, |idx| {
                let (i, j) = ((idx / cols as u64) as usize, (idx % cols as u64) as usize);
                (
                    use_a.then(|| a_list[i].family().clone()),
                    use_b.then(|| b_list[j].family().clone()),
                )
            })
        }
        Budget::Samples(count) => {
            let mut rng = rng_from_seed(spec.seed);
            let mut pairs = Vec::with_capacity(count as usize);
            for _ in 0..count {
                let a = if use_a { Some(FamilyProfile::new(spec.a_class.sample(spec.n, &mut rng)?)) } else { None };
                let b = if use_b { Some(FamilyProfile::new(spec.b_class.sample(spec.n, &mut rng)?)) } else { None };
                pairs.push((a, b));
            }
            let acc = run_pool(spec.jobs, || {
                pairs
                    .par_iter()
                    .enumerate()
                    .map(|(idx, (a, b))| -> Result<Acc> {
                        let mut acc = Acc::default();
                        visit(&mut acc, spec, a.as_ref(), b.as_ref(), idx as u64)?;
                        Ok(acc)
                    })
                    .try_reduce(Acc::default, |x, y| Ok(x.merge(y)))
            })??;
            finish(spec, acc, |idx| {
                let (a, b) = &pairs[idx as usize];
                (a.as_ref().map(|p| p.family().clone()), b.as_ref().map(|p| p.family().clone()))
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::value::ratio;

    #[test]
    fn exhaustive_chvatal_at_three() {
        let spec = ScanSpec::new(3, CheckerId::ChvatalEquiv, SearchClass::Increasing, SearchClass::MaximalIntersecting);
        let rec = scan(&spec).unwrap();
        assert_eq!(rec.examined, 20 * 4);
        assert_eq!(rec.failures, 0);
        assert_eq!(rec.best, Some(Value::exact(ratio(0, 1))));
    }

    #[test]
    fn sampled_scans_are_reproducible() {
        let mut spec = ScanSpec::new(5, CheckerId::Harris, SearchClass::Increasing, SearchClass::Increasing);
        spec.budget = Budget::Samples(200);
        spec.seed = 9;
        let one = scan(&spec).unwrap();
        spec.jobs = Some(1);
        let two = scan(&spec).unwrap();
        assert_eq!(one, two);
        assert_eq!(one.failures, 0);
        assert!(!one.best.unwrap().is_negative());
    }

    #[test]
    fn samples_respect_classes() {
        let mut rng = rng_from_seed(3);
        for class in SearchClass::ALL {
            for _ in 0..20 {
                let f = class.sample(4, &mut rng).unwrap();
                assert!(class.admits(&f), "{class}");
            }
        }
    }

    #[test]
    fn single_operand_scan() {
        let spec = ScanSpec::new(3, CheckerId::Harper, SearchClass::Increasing, SearchClass::Increasing);
        let rec = scan(&spec).unwrap();
        assert_eq!(rec.examined, 20);
        assert_eq!(rec.failures, 0);
        assert!(rec.witness_b.is_none());
    }
}
