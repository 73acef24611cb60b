//! Registry of correlation inequalities evaluated as margin/ratio reports.
//!
//! Every row is oriented `lhs ≥ rhs`. Rows with an explicit constant are
//! asserted (exactly when all parts are rational, with a small slack when
//! logarithms enter); rows whose constant is unspecified report the
//! empirical constant `lhs / core` instead of a verdict.
//!
//! Correlations are always computed twice, pointwise and through the
//! spectrum, and a disagreement is an error.

mod ensemble;
mod equivalence;
pub mod special;

pub use ensemble::{evaluate_ensemble, EnsembleChecker, EnsembleReport};
pub use equivalence::{equivalence_check, EquivalenceRecord};

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::cube::{directional_difference, m_alpha, DiffConvention, CubeFunction};
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::profile::FamilyProfile;
use crate::set_family::SetFamily;
use crate::value::Value;

use special::{entropy_term, phi, psi, psi_alpha, times};

/// Slack allowed on the transcendental side of float assertions.
pub const FLOAT_SLACK: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckerId {
    Harris,
    Harper,
    ChvatalEquiv,
    BalancedC,
    HalfWeak,
    WeakPhi,
    Talagrand,
    Kms,
    Kkl,
    Talagrand94,
    Chang,
    Dream,
    MajorityAvg,
    KahnIntro,
    KahnCorrA,
    KahnCorrB,
    SumWithDual,
    Reduction,
    AlphaNondiag,
    SymMHalf,
    DiagWeak,
    DiagMaxint,
    DiagStrong,
    GilAlpha,
    GilDual,
    MAlphaBound,
    KahnSmallA,
    KahnSmallB,
    ChvatalSmall,
    KahnSmallRatio,
    WeaklySymmetric,
    Wrong3,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckKind {
    /// Explicit constant, rational sides: `margin ≥ 0` exactly.
    ExactAssert,
    /// Explicit constant with a logarithm on one side.
    FloatAssert,
    /// Unspecified constant: report `lhs / core`.
    EmpiricalConstant,
    /// Report `lhs / core` for a conjectured constant.
    RatioReporter,
    /// Report the margin of a statement known to fail in general.
    MarginReporter,
}

/// Which operands a row reads.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Operands {
    Pair,
    OnlyA,
    OnlyB,
}

impl CheckerId {
    pub const ALL: [CheckerId; 32] = [
        CheckerId::Harris,
        CheckerId::Harper,
        CheckerId::ChvatalEquiv,
        CheckerId::BalancedC,
        CheckerId::HalfWeak,
        CheckerId::WeakPhi,
        CheckerId::Talagrand,
        CheckerId::Kms,
        CheckerId::Kkl,
        CheckerId::Talagrand94,
        CheckerId::Chang,
        CheckerId::Dream,
        CheckerId::MajorityAvg,
        CheckerId::KahnIntro,
        CheckerId::KahnCorrA,
        CheckerId::KahnCorrB,
        CheckerId::SumWithDual,
        CheckerId::Reduction,
        CheckerId::AlphaNondiag,
        CheckerId::SymMHalf,
        CheckerId::DiagWeak,
        CheckerId::DiagMaxint,
        CheckerId::DiagStrong,
        CheckerId::GilAlpha,
        CheckerId::GilDual,
        CheckerId::MAlphaBound,
        CheckerId::KahnSmallA,
        CheckerId::KahnSmallB,
        CheckerId::ChvatalSmall,
        CheckerId::KahnSmallRatio,
        CheckerId::WeaklySymmetric,
        CheckerId::Wrong3,
    ];

    pub fn name(self) -> &'static str {
        use CheckerId::*;
        match self {
            Harris => "harris",
            Harper => "harper",
            ChvatalEquiv => "chvatal_equiv",
            BalancedC => "balanced_c",
            HalfWeak => "half_weak",
            WeakPhi => "weak_phi",
            Talagrand => "talagrand",
            Kms => "kms",
            Kkl => "kkl",
            Talagrand94 => "talagrand94",
            Chang => "chang",
            Dream => "dream",
            MajorityAvg => "majority_avg",
            KahnIntro => "kahn_intro",
            KahnCorrA => "kahn_corr_a",
            KahnCorrB => "kahn_corr_b",
            SumWithDual => "sum_with_dual",
            Reduction => "reduction",
            AlphaNondiag => "alpha_nondiag",
            SymMHalf => "sym_m_half",
            DiagWeak => "diag_weak",
            DiagMaxint => "diag_maxint",
            DiagStrong => "diag_strong",
            GilAlpha => "gil_alpha",
            GilDual => "gil_dual",
            MAlphaBound => "m_alpha_bound",
            KahnSmallA => "kahn_small_a",
            KahnSmallB => "kahn_small_b",
            ChvatalSmall => "chvatal_small",
            KahnSmallRatio => "kahn_small_ratio",
            WeaklySymmetric => "weakly_symmetric",
            Wrong3 => "wrong3",
        }
    }

    pub fn kind(self) -> CheckKind {
        use CheckKind::*;
        use CheckerId::*;
        match self {
            Harris | ChvatalEquiv | MajorityAvg | KahnCorrA | KahnCorrB | SumWithDual
            | DiagMaxint | DiagStrong | GilDual | KahnSmallA | KahnSmallB | ChvatalSmall
            | KahnSmallRatio => ExactAssert,
            Harper | Chang => FloatAssert,
            HalfWeak | WeakPhi | Talagrand | Kms | Kkl | Talagrand94 | GilAlpha | MAlphaBound
            | WeaklySymmetric => EmpiricalConstant,
            BalancedC | KahnIntro | AlphaNondiag | SymMHalf | DiagWeak => RatioReporter,
            Dream | Reduction | Wrong3 => MarginReporter,
        }
    }

    pub fn operands(self) -> Operands {
        match self {
            CheckerId::Harper | CheckerId::Kkl | CheckerId::MAlphaBound => Operands::OnlyA,
            CheckerId::Talagrand94 | CheckerId::Chang => Operands::OnlyB,
            _ => Operands::Pair,
        }
    }

    /// One-line statement, oriented `lhs ≥ rhs`.
    pub fn statement(self) -> &'static str {
        use CheckerId::*;
        match self {
            Harris => "Cor(A,B) ≥ 0 for increasing A, B",
            Harper => "I(A) ≥ 2 μ(A) log2(1/μ(A))",
            ChvatalEquiv => "Cor(A,B) ≥ I_min(A)/4 for increasing A and increasing antipodal B",
            BalancedC => "Cor(A,B) ≥ c · I_min(A) μ(B)(1−μ(B)); reports c",
            HalfWeak => "Cor(A,B) ≥ c · ψ(I_min(A)) μ(B)(1−μ(B)); reports c",
            WeakPhi => "Cor(A,B) ≥ c · φ(I_min(A)) for antipodal B; reports c",
            Talagrand => "Cor(A,B) ≥ c · φ(Σ I_k(A) I_k(B)); reports c",
            Kms => "Cor(A,B) ≥ c · Σ ψ_α(I_k(A)) ψ_{1−α}(I_k(B)); reports c",
            Kkl => "max_k I_k(A) ≥ c · μ(1−μ) log2(n)/n; reports c",
            Talagrand94 => "Σ φ(I_k(B)) ≥ c · μ(B)(1−μ(B)); reports c",
            Chang => "8 μ(B)² ln(1/μ(B)) ≥ Σ I_k(B)²",
            Dream => "Cor(A,B) ≥ Σ I_k(A) I_k(B) / 4",
            MajorityAvg => "Cor(A, majority) ≥ I(A)/(4n)",
            KahnIntro => "Cor(A,B) ≥ c · Σ_k I_k(A) Σ{B̂(S)²/|S| : S ∋ k}; reports c",
            KahnCorrA => "Cor(A,B) ≥ Σ_i I_i(A) Σ{B̂(S)² : max S = i} for maximal intersecting B",
            KahnCorrB => "Cor(A,B) ≥ Σ_i I_i(A) Σ{B̂(S)²/|S| : S ∋ i} for maximal intersecting B",
            SumWithDual => "Cor(A,B) + Cor(A,B') ≥ 2 μ(B)(1−μ(B)) I_min(A)",
            Reduction => "Cor(A,B) ≥ ½ Σ_i I_i(A) Σ{B̂(S)² : max S = i}",
            AlphaNondiag => "Cor(A,B) ≥ c · Σ_{S,T≠∅} |S∩T| Â(S)² B̂(T)² / (|S|^α |T|^{1−α}); reports c",
            SymMHalf => "Cor(A,B) ≥ c · Σ_i M_½(Δ_i A) M_½(Δ_i B); reports c",
            DiagWeak => "Cor(A,B) ≥ c · Σ_{S≠∅} Â(S)² B̂(S)²; reports c",
            DiagMaxint => "Cor(A,B) ≥ 4 Σ_{S≠∅} Â(S)² B̂(S)² for maximal intersecting B",
            DiagStrong => "Cor(A,B) ≥ Σ_{S≠∅} |S| Â(S)² B̂(S)²",
            GilAlpha => "Cor(A,B) ≥ c · (Var A/I(A))^α (Var B/I(B))^{1−α} Σ I_i(A) I_i(B); reports c",
            GilDual => "Cor(A,B) + Cor(A,B') ≥ 2 μ(A)(1−μ(A)) Σ I_i(A) I_i(B) / I(B)",
            MAlphaBound => "M_α(f) ≤ c · ln(e‖f‖₂/‖f‖₁)^{−α} ‖f‖₂² for f = χ_A − μ(A); reports c",
            KahnSmallA => "Cor(A,B⁺) ≥ Σ_i I_i(A) Σ{B̂(S)² : max S = i, |S| odd}",
            KahnSmallB => "Cor(A,B⁺) ≥ Σ_i I_i(A) Σ{B̂(S)²/|S| : S ∋ i, |S| odd}",
            ChvatalSmall => "Cor(A,B) ≥ ½ μ(B) I_min(A) for increasing intersecting B",
            KahnSmallRatio => "max_i |F_i ∩ I| / 2^(n−1) ≥ |F ∩ I| / |F| for increasing intersecting F = A, decreasing I = B",
            WeaklySymmetric => "Cor(A,B) ≥ c · I_min(A) for balanced regular B, μ(A) ∈ (n^−a, 1 − n^−a); reports c",
            Wrong3 => "Cor(A,B) ≥ ½ μ(B) log2(1/μ(B)) I_min(A)",
        }
    }
}

impl fmt::Display for CheckerId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckerId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckerId::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownChecker(s.to_string()))
    }
}

/// Coordinate order for the max-coordinate weights.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum Permutation {
    #[default]
    Identity,
    /// 1-based coordinates, earliest first.
    Explicit(Vec<usize>),
    /// Order by `I_k(A)` ascending, ties by index (the strongest form).
    AscendingInfluence,
    /// Order by `I_k(A)` descending, ties by index (the weakest form).
    DescendingInfluence,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Params {
    pub alpha: f64,
    pub permutation: Permutation,
    /// Measure window exponent for `weakly_symmetric`.
    pub a: f64,
}

impl Default for Params {
    fn default() -> Self {
        Params { alpha: 0.5, permutation: Permutation::Identity, a: 1.0 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
    /// The constant is unspecified; only the empirical ratio is reported.
    Unknown,
    /// The core quantity vanishes or the input is outside the row's range.
    Vacuous,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::Unknown => "n/a (unknown constant)",
            Verdict::Vacuous => "vacuous",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct InequalityReport {
    pub checker: CheckerId,
    pub kind: CheckKind,
    pub lhs: Value,
    /// The right-hand side, or its constant-free core for reporter rows.
    pub rhs: Value,
    pub margin: Value,
    pub ratio: Option<Value>,
    pub verdict: Verdict,
    /// Secondary quantities (e.g. the consequence form of `dream`).
    pub extras: Vec<(&'static str, Value)>,
    pub digest_a: Option<String>,
    pub digest_b: Option<String>,
    pub params: Params,
}

impl InequalityReport {
    /// `true` unless an asserted row failed.
    pub fn passes(&self) -> bool {
        !(matches!(self.kind, CheckKind::ExactAssert | CheckKind::FloatAssert) && self.verdict == Verdict::Fails)
    }
}

struct Outcome {
    lhs: Value,
    rhs: Value,
    vacuous: bool,
    extras: Vec<(&'static str, Value)>,
}

impl Outcome {
    fn new(lhs: impl Into<Value>, rhs: impl Into<Value>) -> Self {
        Outcome { lhs: lhs.into(), rhs: rhs.into(), vacuous: false, extras: Vec::new() }
    }

    fn vacuous(lhs: impl Into<Value>, rhs: impl Into<Value>) -> Self {
        Outcome { vacuous: true, ..Outcome::new(lhs, rhs) }
    }
}

/// Class requirement on one operand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Req {
    Any,
    Increasing,
    Decreasing,
    MaximalIntersecting,
    IncreasingIntersecting,
    IncreasingBalanced,
    IncreasingBalancedRegular,
    Majority,
}

fn require(p: &FamilyProfile, operand: &'static str, req: Req) -> Result<()> {
    let pr = p.predicates();
    let (ok, requirement) = match req {
        Req::Any => (true, ""),
        Req::Increasing => (pr.increasing, "increasing"),
        Req::Decreasing => (pr.decreasing, "decreasing"),
        Req::MaximalIntersecting => (pr.maximal_intersecting(), "maximal intersecting"),
        Req::IncreasingIntersecting => (pr.increasing && pr.intersecting, "increasing intersecting"),
        Req::IncreasingBalanced => (pr.increasing && pr.balanced, "increasing balanced"),
        Req::IncreasingBalancedRegular => {
            (pr.increasing && pr.balanced && pr.regular, "increasing balanced regular")
        }
        Req::Majority => {
            let n = p.n();
            let ok = n % 2 == 1
                && *p.family() == SetFamily::from_fn(n, |m| 2 * m.count_ones() as usize > n)?;
            (ok, "majority")
        }
    };
    if ok {
        Ok(())
    } else {
        Err(Error::ClassViolation { operand, requirement })
    }
}

fn requirements(id: CheckerId) -> (Req, Req) {
    use CheckerId::*;
    use Req::*;
    match id {
        Harper | Kkl | MAlphaBound => (Any, Any),
        Talagrand94 | Chang => (Any, Increasing),
        ChvatalEquiv | WeakPhi | KahnCorrA | KahnCorrB | DiagMaxint => (Increasing, MaximalIntersecting),
        MajorityAvg => (Increasing, Majority),
        AlphaNondiag | SymMHalf => (Increasing, IncreasingBalanced),
        ChvatalSmall => (Increasing, IncreasingIntersecting),
        KahnSmallRatio => (IncreasingIntersecting, Decreasing),
        WeaklySymmetric => (Increasing, IncreasingBalancedRegular),
        Wrong3 => (Any, Any),
        _ => (Increasing, Increasing),
    }
}

/// `Cor(A,B)` computed pointwise and spectrally; they must agree.
pub fn checked_correlation(a: &FamilyProfile, b: &FamilyProfile) -> Result<Dyadic> {
    let pointwise = a.correlation_numerator(b)?;
    let spectral = a.spectral_correlation_numerator(b)?;
    if pointwise != spectral {
        return Err(Error::Inconsistent(format!(
            "pointwise Cor numerator {pointwise} differs from spectral {spectral}"
        )));
    }
    Ok(Dyadic::from_i128(pointwise, 2 * a.n() as u32))
}

fn min_influence(p: &FamilyProfile) -> Dyadic {
    Dyadic::new(2 * p.min_boundary(), p.n() as u32)
}

fn total_influence(p: &FamilyProfile) -> Dyadic {
    Dyadic::new(2 * p.total_boundary(), p.n() as u32)
}

/// `Σ_k I_k(A) I_k(B)`.
fn influence_dot(a: &FamilyProfile, b: &FamilyProfile) -> Dyadic {
    let s: i128 = a.boundary().iter().zip(b.boundary()).map(|(&x, &y)| 4 * x as i128 * y as i128).sum();
    Dyadic::from_i128(s, 2 * a.n() as u32)
}

/// `μ(1 − μ)`.
fn variance(p: &FamilyProfile) -> Dyadic {
    let c = p.count() as i128;
    Dyadic::from_i128(c * ((1i128 << p.n()) - c), 2 * p.n() as u32)
}

/// Rank of each coordinate in the order (larger rank = later).
fn ranks(a: &FamilyProfile, perm: &Permutation) -> Result<Vec<usize>> {
    let n = a.n();
    let order: Vec<usize> = match perm {
        Permutation::Identity => (0..n).collect(),
        Permutation::Explicit(p) => {
            let mut seen = vec![false; n];
            if p.len() != n || p.iter().any(|&k| k == 0 || k > n || std::mem::replace(&mut seen[k - 1], true)) {
                return Err(Error::InvalidInput(format!("{p:?} is not a permutation of 1..={n}")));
            }
            p.iter().map(|k| k - 1).collect()
        }
        Permutation::AscendingInfluence => {
            let mut idx: Vec<usize> = (0..n).collect();
            idx.sort_by_key(|&i| (a.boundary()[i], i));
            idx
        }
        Permutation::DescendingInfluence => {
            let mut idx: Vec<usize> = (0..n).collect();
            idx.sort_by_key(|&i| (std::cmp::Reverse(a.boundary()[i]), i));
            idx
        }
    };
    let mut rank = vec![0; n];
    for (pos, &i) in order.iter().enumerate() {
        rank[i] = pos;
    }
    Ok(rank)
}

/// `w_i = Σ{B̂(S)² : S's last element in the order is i}`, optionally odd `|S|` only.
pub fn max_coordinate_weights(b: &FamilyProfile, rank: &[usize], odd_only: bool) -> Vec<Dyadic> {
    let n = b.n();
    let mut acc = vec![0i128; n];
    for (s, &w) in b.walsh().iter().enumerate().skip(1) {
        if w == 0 || (odd_only && s.count_ones() % 2 == 0) {
            continue;
        }
        let last = (0..n).filter(|&i| s >> i & 1 == 1).max_by_key(|&i| rank[i]).expect("S nonempty");
        acc[last] += w as i128 * w as i128;
    }
    acc.into_iter().map(|v| Dyadic::from_i128(v, 2 * n as u32)).collect()
}

/// `w_i = Σ{B̂(S)²/|S| : S ∋ i}`, optionally odd `|S|` only.
pub fn average_weights(b: &FamilyProfile, odd_only: bool) -> Vec<BigRational> {
    let n = b.n();
    // per coordinate, per level
    let mut acc = vec![vec![0i128; n + 1]; n];
    for (s, &w) in b.walsh().iter().enumerate().skip(1) {
        let k = s.count_ones() as usize;
        if w == 0 || (odd_only && k % 2 == 0) {
            continue;
        }
        for (i, row) in acc.iter_mut().enumerate() {
            if s >> i & 1 == 1 {
                row[k] += w as i128 * w as i128;
            }
        }
    }
    let scale = BigInt::from(1) << (2 * n);
    acc.into_iter()
        .map(|row| {
            row.into_iter()
                .enumerate()
                .skip(1)
                .filter(|(_, v)| *v != 0)
                .map(|(k, v)| BigRational::new(BigInt::from(v), &scale * BigInt::from(k)))
                .sum()
        })
        .collect()
}

fn weighted_influence_dyadic(a: &FamilyProfile, w: &[Dyadic]) -> Dyadic {
    (1..=a.n()).map(|k| a.influence(k) * w[k - 1].clone()).sum()
}

fn weighted_influence_rational(a: &FamilyProfile, w: &[BigRational]) -> BigRational {
    (1..=a.n()).map(|k| a.influence(k).to_rational() * &w[k - 1]).sum()
}

/// `Σ_{S≠∅} |S|^p Â(S)² B̂(S)²` as a numerator over `2^(4n)`.
fn diagonal_sum(a: &FamilyProfile, b: &FamilyProfile, weight_by_size: bool) -> Dyadic {
    let n = a.n();
    let mut total = BigInt::zero();
    for (s, (&x, &y)) in a.walsh().iter().zip(b.walsh()).enumerate().skip(1) {
        if x == 0 || y == 0 {
            continue;
        }
        let prod = (x as i128 * x as i128) * (y as i128 * y as i128);
        let mult = if weight_by_size { s.count_ones() as i128 } else { 1 };
        total += BigInt::from(prod) * mult;
    }
    Dyadic::new(total, 4 * n as u32)
}

/// `Σ_i (Σ_{S∋i} Â(S)²/|S|^α)(Σ_{T∋i} B̂(T)²/|T|^{1−α})`.
fn nondiagonal_sum(a: &FamilyProfile, b: &FamilyProfile, alpha: f64) -> f64 {
    let n = a.n();
    let side = |p: &FamilyProfile, e: f64| -> Vec<f64> {
        let mut out = vec![0.0; n];
        let norm = 4f64.powi(n as i32);
        for (s, &w) in p.walsh().iter().enumerate().skip(1) {
            if w == 0 {
                continue;
            }
            let v = (w as f64) * (w as f64) / norm / (s.count_ones() as f64).powf(e);
            for (i, o) in out.iter_mut().enumerate() {
                if s >> i & 1 == 1 {
                    *o += v;
                }
            }
        }
        out
    };
    side(a, alpha).iter().zip(side(b, 1.0 - alpha)).map(|(x, y)| x * y).sum()
}

/// The same sum through `M_α(½Δ_i χ_A) M_{1−α}(½Δ_i χ_B)`.
pub fn nondiagonal_sum_via_differences(a: &SetFamily, b: &SetFamily, alpha: f64) -> Result<f64> {
    let (fa, fb) = (a.indicator(), b.indicator());
    let mut total = 0.0;
    for i in 1..=a.n() {
        let da = directional_difference(&fa, i, DiffConvention::Half)?;
        let db = directional_difference(&fb, i, DiffConvention::Half)?;
        total += m_alpha(&da, alpha)? * m_alpha(&db, 1.0 - alpha)?;
    }
    Ok(total)
}

fn float_of(v: Option<f64>) -> Result<f64> {
    v.ok_or_else(|| Error::InvalidInput("argument outside the domain of φ/ψ".into()))
}

/// Empirical-constant report for `M_α(f) ≤ c · ln(e‖f‖₂/‖f‖₁)^{−α} ‖f‖₂²`.
pub fn m_alpha_report(f: &CubeFunction, alpha: f64) -> Result<(f64, f64)> {
    let lhs = m_alpha(f, alpha)?;
    let size = f.values().len() as f64;
    let l2sq = f.norm2_squared().to_f64() / size;
    let l1 = f.norm1().to_f64() / size;
    if l1 == 0.0 {
        return Ok((lhs, 0.0));
    }
    let core = (1.0 + (l2sq.sqrt() / l1).ln()).powf(-alpha) * l2sq;
    Ok((lhs, core))
}

fn compute(id: CheckerId, a: Option<&FamilyProfile>, b: Option<&FamilyProfile>, params: &Params) -> Result<Outcome> {
    use CheckerId::*;
    let pa = || a.expect("operand A checked");
    let pb = || b.expect("operand B checked");
    let cor = || checked_correlation(pa(), pb());
    let quarter = Dyadic::new(1, 2);
    Ok(match id {
        Harris => Outcome::new(cor()?, Dyadic::zero()),
        Harper => {
            let p = pa();
            let rhs = times(&Value::int(2), &entropy_term(&p.measure()));
            Outcome::new(total_influence(p), rhs)
        }
        ChvatalEquiv => Outcome::new(cor()?, min_influence(pa()) * quarter),
        BalancedC => Outcome::new(cor()?, min_influence(pa()) * variance(pb())),
        HalfWeak => {
            let core = float_of(psi(min_influence(pa()).to_f64()))? * variance(pb()).to_f64();
            Outcome::new(cor()?, Value::Float(core))
        }
        WeakPhi => Outcome::new(cor()?, Value::Float(float_of(phi(min_influence(pa()).to_f64()))?)),
        Talagrand => {
            let x = influence_dot(pa(), pb()).to_f64();
            match phi(x) {
                Some(core) => Outcome::new(cor()?, Value::Float(core)),
                None => Outcome::vacuous(cor()?, Value::Float(f64::NAN)),
            }
        }
        Kms => {
            let (p, q) = (pa(), pb());
            let mut core = 0.0;
            for k in 1..=p.n() {
                let x = float_of(psi_alpha(p.influence(k).to_f64(), params.alpha))?;
                let y = float_of(psi_alpha(q.influence(k).to_f64(), 1.0 - params.alpha))?;
                core += x * y;
            }
            Outcome::new(cor()?, Value::Float(core))
        }
        Kkl => {
            let p = pa();
            let n = p.n();
            let lhs = Dyadic::new(2 * p.max_boundary(), n as u32);
            if n < 2 {
                return Ok(Outcome::vacuous(lhs, Value::int(0)));
            }
            let core = variance(p).to_f64() * (n as f64).log2() / n as f64;
            Outcome::new(lhs, Value::Float(core))
        }
        Talagrand94 => {
            let p = pb();
            let mut lhs = 0.0;
            for k in 1..=p.n() {
                lhs += float_of(phi(p.influence(k).to_f64()))?;
            }
            Outcome::new(Value::Float(lhs), variance(p))
        }
        Chang => {
            let p = pb();
            let mu = p.measure();
            let sq: Dyadic = (1..=p.n()).map(|k| p.influence(k).square()).sum();
            let lhs = if mu.is_zero() || mu == Dyadic::one() {
                Value::int(0)
            } else {
                let m = mu.to_f64();
                Value::Float(8.0 * m * m * (1.0 / m).ln())
            };
            let mut o = Outcome::new(lhs, sq);
            if !mu.is_zero() && mu != Dyadic::one() {
                let m = mu.to_f64();
                o.extras.push(("constant", Value::Float(o.rhs.to_f64() / (m * m * (1.0 / m).ln()))));
            }
            o
        }
        Dream => {
            let (p, q) = (pa(), pb());
            let c = cor()?;
            let mut o = Outcome::new(c.clone(), influence_dot(p, q) * quarter);
            let mu_b = q.measure();
            let cons = times(&Value::from(min_influence(p).half()), &entropy_term(&mu_b));
            o.extras.push(("consequence_rhs", cons.clone()));
            o.extras.push(("consequence_margin", Value::from(c).minus(&cons)));
            o
        }
        MajorityAvg => {
            let p = pa();
            let rhs = total_influence(p).scale_pow2(-2).to_rational() / BigInt::from(p.n());
            Outcome::new(cor()?, Value::Exact(rhs))
        }
        KahnIntro | KahnCorrB => {
            let w = average_weights(pb(), false);
            Outcome::new(cor()?, Value::Exact(weighted_influence_rational(pa(), &w)))
        }
        KahnCorrA | Reduction => {
            let rank = ranks(pa(), &params.permutation)?;
            let w = max_coordinate_weights(pb(), &rank, false);
            let mut rhs = weighted_influence_dyadic(pa(), &w);
            if id == Reduction {
                rhs = rhs.half();
            }
            Outcome::new(cor()?, rhs)
        }
        SumWithDual | GilDual => {
            let (p, q) = (pa(), pb());
            let dual = FamilyProfile::new(q.family().dual());
            let lhs = cor()? + checked_correlation(p, &dual)?;
            if id == SumWithDual {
                Outcome::new(lhs, (variance(q) * min_influence(p)).scale_pow2(1))
            } else {
                let total_b = total_influence(q);
                if total_b.is_zero() {
                    return Ok(Outcome::vacuous(lhs, Value::int(0)));
                }
                let num = (variance(p) * influence_dot(p, q)).scale_pow2(1).to_rational();
                Outcome::new(lhs, Value::Exact(num / total_b.to_rational()))
            }
        }
        AlphaNondiag | SymMHalf => {
            let alpha = if id == SymMHalf { 0.5 } else { params.alpha };
            let core = nondiagonal_sum(pa(), pb(), alpha);
            let mut o = Outcome::new(cor()?, Value::Float(core));
            if id == SymMHalf && pa().n() <= 12 {
                let via = nondiagonal_sum_via_differences(pa().family(), pb().family(), 0.5)?;
                if (via - core).abs() > 1e-9 * core.abs().max(1.0) {
                    return Err(Error::Inconsistent(format!(
                        "M_½ difference form {via} disagrees with the spectral double sum {core}"
                    )));
                }
                o.extras.push(("difference_form", Value::Float(via)));
            }
            o
        }
        DiagWeak => Outcome::new(cor()?, diagonal_sum(pa(), pb(), false)),
        DiagMaxint => Outcome::new(cor()?, diagonal_sum(pa(), pb(), false).scale_pow2(2)),
        DiagStrong => Outcome::new(cor()?, diagonal_sum(pa(), pb(), true)),
        GilAlpha => {
            let (p, q) = (pa(), pb());
            let (ia, ib) = (total_influence(p), total_influence(q));
            let c = cor()?;
            if ia.is_zero() || ib.is_zero() {
                return Ok(Outcome::vacuous(c, Value::int(0)));
            }
            let ra = variance(p).to_f64() / ia.to_f64();
            let rb = variance(q).to_f64() / ib.to_f64();
            let core = ra.powf(params.alpha) * rb.powf(1.0 - params.alpha) * influence_dot(p, q).to_f64();
            Outcome::new(c, Value::Float(core))
        }
        MAlphaBound => {
            let p = pa();
            let mu = p.measure();
            if mu.is_zero() || mu == Dyadic::one() {
                return Ok(Outcome::vacuous(Value::int(0), Value::int(0)));
            }
            let f = p.family().indicator().map(|v| v - &mu);
            let (lhs, core) = m_alpha_report(&f, params.alpha)?;
            Outcome::new(Value::Float(lhs), Value::Float(core))
        }
        KahnSmallA | KahnSmallB => {
            let (p, q) = (pa(), pb());
            let (plus, _) = q.family().plus_minus_parts()?;
            let plus = FamilyProfile::new(plus);
            let lhs = checked_correlation(p, &plus)?;
            let rhs = if id == KahnSmallA {
                let rank = ranks(p, &params.permutation)?;
                Value::from(weighted_influence_dyadic(p, &max_coordinate_weights(q, &rank, true)))
            } else {
                Value::Exact(weighted_influence_rational(p, &average_weights(q, true)))
            };
            Outcome::new(lhs, rhs)
        }
        ChvatalSmall => Outcome::new(cor()?, (pb().measure() * min_influence(pa())).half()),
        KahnSmallRatio => {
            let (f, i) = (pa(), pb());
            let n = f.n();
            let size = f.count();
            if size == 0 || n == 0 {
                return Ok(Outcome::vacuous(Value::int(0), Value::int(0)));
            }
            let best = (1..=n)
                .map(|k| {
                    let fk = crate::families::principal(n, k)?;
                    fk.intersection_count(i.family())
                })
                .collect::<Result<Vec<u64>>>()?
                .into_iter()
                .max()
                .unwrap_or(0);
            let both = f.family().intersection_count(i.family())?;
            Outcome::new(Dyadic::new(best, n as u32 - 1), Value::exact(crate::value::ratio(both, size)))
        }
        WeaklySymmetric => {
            let (p, q) = (pa(), pb());
            let n = p.n() as f64;
            let mu = p.measure().to_f64();
            let lo = n.powf(-params.a);
            let c = cor()?;
            let core = min_influence(p);
            if !(mu > lo && mu < 1.0 - lo) {
                return Ok(Outcome::vacuous(c, core));
            }
            let _ = q;
            Outcome::new(c, core)
        }
        Wrong3 => {
            let (p, q) = (pa(), pb());
            let rhs = times(&Value::from(min_influence(p).half()), &entropy_term(&q.measure()));
            Outcome::new(cor()?, rhs)
        }
    })
}

/// Evaluates one registry row. Single-family rows read only the operand
/// they name (`A` for harper/kkl/m_alpha_bound, `B` for talagrand94/chang).
pub fn evaluate(
    id: CheckerId,
    a: Option<&FamilyProfile>,
    b: Option<&FamilyProfile>,
    params: &Params,
) -> Result<InequalityReport> {
    evaluate_with(id, a, b, params, true)
}

/// [`evaluate`] with optional input digests (scans skip them).
pub(crate) fn evaluate_with(
    id: CheckerId,
    a: Option<&FamilyProfile>,
    b: Option<&FamilyProfile>,
    params: &Params,
    digests: bool,
) -> Result<InequalityReport> {
    let (need_a, need_b) = match id.operands() {
        Operands::Pair => (true, true),
        Operands::OnlyA => (true, false),
        Operands::OnlyB => (false, true),
    };
    let a = if need_a { Some(a.ok_or_else(|| Error::InvalidInput(format!("{id} needs operand A")))?) } else { None };
    let b = if need_b { Some(b.ok_or_else(|| Error::InvalidInput(format!("{id} needs operand B")))?) } else { None };
    if let (Some(x), Some(y)) = (a, b) {
        x.family().same_dim(y.family())?;
    }
    let (ra, rb) = requirements(id);
    if let Some(x) = a {
        require(x, "A", ra)?;
    }
    if let Some(y) = b {
        require(y, "B", rb)?;
    }
    if !(0.0..=1.0).contains(&params.alpha) {
        return Err(Error::InvalidInput(format!("alpha must lie in [0,1], got {}", params.alpha)));
    }
    let out = compute(id, a, b, params)?;
    let kind = id.kind();
    let margin = out.lhs.minus(&out.rhs);
    let ratio = out.lhs.ratio(&out.rhs);
    let verdict = if out.vacuous {
        Verdict::Vacuous
    } else {
        match kind {
            CheckKind::ExactAssert | CheckKind::MarginReporter => {
                if margin.is_negative() {
                    Verdict::Fails
                } else {
                    Verdict::Holds
                }
            }
            CheckKind::FloatAssert => {
                let ok = match &margin {
                    Value::Exact(m) => !m.is_negative(),
                    Value::Float(m) => *m >= -FLOAT_SLACK,
                };
                if ok {
                    Verdict::Holds
                } else {
                    Verdict::Fails
                }
            }
            CheckKind::EmpiricalConstant | CheckKind::RatioReporter => {
                if out.rhs.is_zero() {
                    Verdict::Vacuous
                } else {
                    Verdict::Unknown
                }
            }
        }
    };
    Ok(InequalityReport {
        checker: id,
        kind,
        lhs: out.lhs,
        rhs: out.rhs,
        margin,
        ratio,
        verdict,
        extras: out.extras,
        digest_a: a.filter(|_| digests).map(|p| crate::io::family_digest(p.family())),
        digest_b: b.filter(|_| digests).map(|p| crate::io::family_digest(p.family())),
        params: params.clone(),
    })
}

/// [`evaluate`] on plain families.
pub fn evaluate_families(id: CheckerId, a: &SetFamily, b: &SetFamily, params: &Params) -> Result<InequalityReport> {
    let pa = FamilyProfile::new(a.clone());
    let pb = FamilyProfile::new(b.clone());
    evaluate(id, Some(&pa), Some(&pb), params)
}
