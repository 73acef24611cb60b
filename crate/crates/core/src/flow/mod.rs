//! The "flows to" relation, Kahn's λ-weights, and the Kleitman LP.
//!
//! `f` flows to `g` when some `v(A,B) ≥ 0` supported on `A ⊆ B` has row
//! sums `f` and column sums `g`; equivalently `Σf = Σg` and `f(D) ≥ g(D)`
//! for every decreasing `D`. Feasibility is decided by an exact integer
//! max-flow, and an infeasible instance comes with a decreasing family
//! violating the criterion.

mod lp;
mod maxflow;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::cube::{antipodal_lift, f_star, wht, CubeFunction};
use crate::error::{Error, Result};
use crate::families::{enumerate, FamilyClass};
use crate::set_family::{check_dim, SetFamily};

use lp::LpOutcome;
use maxflow::Network;

/// Largest dimension for the direct decreasing-family criterion and the LP.
pub const MAX_DIRECT_DIM: usize = 5;

#[derive(Clone, Debug, PartialEq)]
pub struct FlowInstance {
    n: usize,
    supply: Vec<BigRational>,
    demand: Vec<BigRational>,
}

impl FlowInstance {
    pub fn new(n: usize, supply: Vec<BigRational>, demand: Vec<BigRational>) -> Result<Self> {
        check_dim(n)?;
        for v in [&supply, &demand] {
            if v.len() != 1 << n {
                return Err(Error::DimensionMismatch(v.len(), 1 << n));
            }
            if let Some(x) = v.iter().position(|x| x.is_negative()) {
                return Err(Error::NegativeValue(x as u32));
            }
        }
        Ok(FlowInstance { n, supply, demand })
    }

    pub fn from_functions(f: &CubeFunction, g: &CubeFunction) -> Result<Self> {
        if f.n() != g.n() {
            return Err(Error::DimensionMismatch(f.n(), g.n()));
        }
        let conv = |h: &CubeFunction| h.values().iter().map(|d| d.to_rational()).collect();
        FlowInstance::new(f.n(), conv(f), conv(g))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn supply(&self) -> &[BigRational] {
        &self.supply
    }

    pub fn demand(&self) -> &[BigRational] {
        &self.demand
    }

    pub fn supply_total(&self) -> BigRational {
        self.supply.iter().sum()
    }

    pub fn demand_total(&self) -> BigRational {
        self.demand.iter().sum()
    }

    fn sum_over(values: &[BigRational], family: &SetFamily) -> BigRational {
        family.members().map(|m| &values[m as usize]).sum()
    }

    /// `f(D) − g(D)`.
    pub fn excess(&self, family: &SetFamily) -> Result<BigRational> {
        if family.n() != self.n {
            return Err(Error::DimensionMismatch(family.n(), self.n));
        }
        Ok(Self::sum_over(&self.supply, family) - Self::sum_over(&self.demand, family))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FlowResult {
    pub feasible: bool,
    /// `Σf ≠ Σg`; no flow search was attempted.
    pub structurally_infeasible: bool,
    /// Value of the maximum flow found.
    pub value: BigRational,
    /// Positive entries of `v(A,B)`, keyed by point masks with `A ⊆ B`.
    pub flow: BTreeMap<(u32, u32), BigRational>,
    /// Decreasing family `D` with `f(D) < g(D)`, when infeasible.
    pub certificate: Option<SetFamily>,
}

impl FlowResult {
    /// Re-checks the flow conditions (feasible) or the certificate
    /// (infeasible) exactly against the instance.
    pub fn verify(&self, inst: &FlowInstance) -> bool {
        if self.feasible {
            let size = 1usize << inst.n;
            let mut rows = vec![BigRational::zero(); size];
            let mut cols = vec![BigRational::zero(); size];
            for (&(a, b), v) in &self.flow {
                if a & !b != 0 || !v.is_positive() {
                    return false;
                }
                rows[a as usize] += v;
                cols[b as usize] += v;
            }
            rows == inst.supply && cols == inst.demand
        } else if let Some(cert) = &self.certificate {
            cert.is_decreasing() && inst.excess(cert).map(|e| e.is_negative()).unwrap_or(false)
        } else {
            self.structurally_infeasible && inst.supply_total() != inst.demand_total()
        }
    }
}

fn common_scale(values: impl Iterator<Item = BigInt>) -> BigInt {
    values.fold(BigInt::one(), |acc, d| acc.lcm(&d))
}

fn to_i128(v: &BigInt) -> Result<i128> {
    v.to_i128()
        .ok_or_else(|| Error::LimitExceeded("flow capacities overflow 128-bit integers".into()))
}

/// Decides whether `f` flows to `g`.
pub fn flow_to(inst: &FlowInstance) -> Result<FlowResult> {
    let total_f = inst.supply_total();
    let total_g = inst.demand_total();
    if total_f != total_g {
        return Ok(FlowResult {
            feasible: false,
            structurally_infeasible: true,
            value: BigRational::zero(),
            flow: BTreeMap::new(),
            certificate: None,
        });
    }
    let scale = common_scale(inst.supply.iter().chain(&inst.demand).map(|v| v.denom().clone()));
    let scaled = |v: &BigRational| to_i128(&(v.numer() * (&scale / v.denom())));
    let size = 1usize << inst.n;
    let supply: Vec<i128> = inst.supply.iter().map(scaled).collect::<Result<_>>()?;
    let demand: Vec<i128> = inst.demand.iter().map(scaled).collect::<Result<_>>()?;
    let total: i128 = supply.iter().sum();

    // Nodes: source, sink, then one node per supported point on each side.
    let (source, sink) = (0, 1);
    let mut a_node = vec![usize::MAX; size];
    let mut b_node = vec![usize::MAX; size];
    let mut next = 2;
    for x in 0..size {
        if supply[x] > 0 {
            a_node[x] = next;
            next += 1;
        }
    }
    for x in 0..size {
        if demand[x] > 0 {
            b_node[x] = next;
            next += 1;
        }
    }
    let mut net = Network::new(next);
    for x in 0..size {
        if supply[x] > 0 {
            net.add_edge(source, a_node[x], supply[x]);
        }
        if demand[x] > 0 {
            net.add_edge(b_node[x], sink, demand[x]);
        }
    }
    let mut pair_edges = Vec::new();
    for b in 0..size as u32 {
        if demand[b as usize] == 0 {
            continue;
        }
        // every A ⊆ B carrying supply
        let mut a = b;
        loop {
            if supply[a as usize] > 0 {
                let e = net.add_edge(a_node[a as usize], b_node[b as usize], total);
                pair_edges.push((a, b, e));
            }
            if a == 0 {
                break;
            }
            a = (a - 1) & b;
        }
    }
    let value = net.max_flow(source, sink);
    let unscale = |v: i128| BigRational::new(BigInt::from(v), scale.clone());

    if value == total {
        let flow = pair_edges
            .iter()
            .filter_map(|&(a, b, e)| {
                let v = net.flow_on(e);
                (v > 0).then(|| ((a, b), unscale(v)))
            })
            .collect();
        return Ok(FlowResult {
            feasible: true,
            structurally_infeasible: false,
            value: unscale(value),
            flow,
            certificate: None,
        });
    }

    // Source-reachable supply points X; the B side of the cut is up(X).
    // Its complement D satisfies f(D) < g(D); shrink D to the down-closure
    // of its demand support, which keeps g(D) and can only lower f(D).
    let reach = net.residual_reachable(source);
    let reached = SetFamily::from_fn(inst.n, |x| {
        let node = a_node[x as usize];
        node != usize::MAX && reach[node]
    })?;
    let outside = reached.up_closure().complement();
    let demanded = SetFamily::from_fn(inst.n, |x| demand[x as usize] > 0)?;
    let certificate = outside.intersection(&demanded)?.down_closure();
    Ok(FlowResult {
        feasible: false,
        structurally_infeasible: false,
        value: unscale(value),
        flow: BTreeMap::new(),
        certificate: Some(certificate),
    })
}

/// First decreasing family `D` (in enumeration order) with `f(D) < g(D)`.
pub fn direct_violation(inst: &FlowInstance) -> Result<Option<SetFamily>> {
    if inst.n > MAX_DIRECT_DIM {
        return Err(Error::LimitExceeded(format!(
            "direct criterion enumerates decreasing families; needs n ≤ {MAX_DIRECT_DIM}"
        )));
    }
    for d in enumerate(inst.n, FamilyClass::Decreasing)? {
        if inst.excess(&d)?.is_negative() {
            return Ok(Some(d));
        }
    }
    Ok(None)
}

/// `Σf = Σg` and `f(D) ≥ g(D)` for every decreasing `D`.
pub fn direct_criterion(inst: &FlowInstance) -> Result<bool> {
    Ok(inst.supply_total() == inst.demand_total() && direct_violation(inst)?.is_none())
}

/// How `f̂(S)²` is split among the elements of `S`.
#[derive(Clone, Debug)]
pub enum LambdaScheme {
    /// All of `f̂(S)²` goes to the element of `S` appearing last in `order`
    /// (1-based coordinates; `None` is the identity order).
    MaxCoordinate { order: Option<Vec<usize>> },
    /// `f̂(S)²/|S|` to each element of `S`.
    Average,
    /// Fractions for the elements of `S` in increasing order, summing to 1.
    Custom(fn(u32) -> Vec<BigRational>),
}

impl LambdaScheme {
    pub fn max_coordinate() -> Self {
        LambdaScheme::MaxCoordinate { order: None }
    }

    pub fn name(&self) -> &'static str {
        match self {
            LambdaScheme::MaxCoordinate { .. } => "max",
            LambdaScheme::Average => "average",
            LambdaScheme::Custom(_) => "custom",
        }
    }
}

fn rank_of(n: usize, order: &Option<Vec<usize>>) -> Result<Vec<usize>> {
    let Some(order) = order else {
        return Ok((0..n).collect());
    };
    let mut rank = vec![usize::MAX; n];
    if order.len() != n {
        return Err(Error::InvalidInput(format!("permutation has {} entries, expected {n}", order.len())));
    }
    for (pos, &k) in order.iter().enumerate() {
        if k == 0 || k > n || rank[k - 1] != usize::MAX {
            return Err(Error::InvalidInput(format!("{order:?} is not a permutation of 1..={n}")));
        }
        rank[k - 1] = pos;
    }
    Ok(rank)
}

/// Kahn's weights `λ_1..λ_n` of a mean-zero (e.g. antipodal) function.
/// They always sum to `Σ_{S≠∅} f̂(S)²`.
pub fn kahn_lambda(f: &CubeFunction, scheme: &LambdaScheme) -> Result<Vec<BigRational>> {
    let n = f.n();
    let spec = wht(f);
    if !spec.coeff(0).is_zero() {
        return Err(Error::NonzeroMean);
    }
    let mut lambda = vec![BigRational::zero(); n];
    let rank = match scheme {
        LambdaScheme::MaxCoordinate { order } => rank_of(n, order)?,
        _ => Vec::new(),
    };
    for (s, c) in spec.coeffs().iter().enumerate().skip(1) {
        if c.is_zero() {
            continue;
        }
        let weight = c.square().to_rational();
        let elems: Vec<usize> = (0..n).filter(|&i| s >> i & 1 == 1).collect();
        match scheme {
            LambdaScheme::MaxCoordinate { .. } => {
                let last = *elems.iter().max_by_key(|&&i| rank[i]).expect("S nonempty");
                lambda[last] += weight;
            }
            LambdaScheme::Average => {
                let share = weight / BigInt::from(elems.len());
                for &i in &elems {
                    lambda[i] += &share;
                }
            }
            LambdaScheme::Custom(split) => {
                let fractions = split(s as u32);
                if fractions.len() != elems.len()
                    || fractions.iter().any(|x| x.is_negative())
                    || fractions.iter().sum::<BigRational>() != BigRational::one()
                {
                    return Err(Error::InvalidInput(format!(
                        "custom split for set {s:#b} is not a distribution over its elements"
                    )));
                }
                for (&i, p) in elems.iter().zip(&fractions) {
                    lambda[i] += &weight * p;
                }
            }
        }
    }
    Ok(lambda)
}

/// `Σ λ_i χ_i`, with `χ_i` the indicator of `{x : i ∈ x}`.
pub fn principal_mix(n: usize, lambda: &[BigRational]) -> Vec<BigRational> {
    (0..1u32 << n)
        .map(|x| {
            lambda
                .iter()
                .enumerate()
                .filter(|(i, _)| x >> i & 1 == 1)
                .map(|(_, l)| l)
                .sum()
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct KahnCheck {
    pub lambda: Vec<BigRational>,
    pub instance: FlowInstance,
    pub result: FlowResult,
    /// Outcome of the decreasing-family criterion, run when `n ≤ 5`.
    pub direct: Option<bool>,
}

/// Does `Σ λ_i(f) χ_i` flow to `f*` for a nondecreasing antipodal `f`?
pub fn kahn_flow(f: &CubeFunction, scheme: &LambdaScheme) -> Result<KahnCheck> {
    if !f.is_antipodal() {
        return Err(Error::ClassViolation { operand: "f", requirement: "antipodal" });
    }
    if !f.is_monotone() {
        return Err(Error::ClassViolation { operand: "f", requirement: "nondecreasing" });
    }
    let lambda = kahn_lambda(f, scheme)?;
    let demand = f_star(f).values().iter().map(|d| d.to_rational()).collect();
    let instance = FlowInstance::new(f.n(), principal_mix(f.n(), &lambda), demand)?;
    let result = flow_to(&instance)?;
    let direct = if f.n() <= MAX_DIRECT_DIM {
        let d = direct_criterion(&instance)?;
        if d != result.feasible {
            return Err(Error::Inconsistent(format!(
                "max-flow says {} but the decreasing-family criterion says {d}",
                result.feasible
            )));
        }
        Some(d)
    } else {
        None
    };
    Ok(KahnCheck { lambda, instance, result, direct })
}

/// Kahn's conjecture for `f = 2χ_F − 1`, `F` maximal intersecting.
pub fn check_kahn_flow(family: &SetFamily, scheme: &LambdaScheme) -> Result<KahnCheck> {
    let p = family.predicates();
    if !p.maximal_intersecting() {
        return Err(Error::ClassViolation { operand: "F", requirement: "maximal intersecting" });
    }
    kahn_flow(&antipodal_lift(family).function, scheme)
}

#[derive(Clone, Debug, PartialEq)]
pub struct KleitmanResult {
    pub feasible: bool,
    /// A convex `λ` with `Σ λ_i χ_i` flowing to `χ_F`, when feasible.
    pub lambda: Option<Vec<BigRational>>,
    /// Largest achievable `min_D (Σ λ_i χ_i(D) − χ_F(D))` over convex `λ`
    /// (only when the LP ran; candidates short-circuit it).
    pub best_slack: Option<BigRational>,
    /// Decreasing-family constraints used by the final LP.
    pub active_rows: usize,
}

/// Rows `Σ λ_i |F_i ∩ D| ≥ |F ∩ D|`, one per decreasing `D`.
fn kleitman_rows(family: &SetFamily) -> Result<Vec<(Vec<i64>, i64)>> {
    let n = family.n();
    let fw = family.words()[0];
    let principal: Vec<u64> = (0..n)
        .map(|i| (0..1u32 << n).filter(|x| x >> i & 1 == 1).fold(0u64, |w, x| w | 1 << x))
        .collect();
    let mut e = enumerate(n, FamilyClass::Decreasing)?;
    let mut rows = Vec::new();
    while let Some(d) = e.next_word() {
        let a = principal.iter().map(|p| (p & d).count_ones() as i64).collect();
        rows.push((a, (fw & d).count_ones() as i64));
    }
    Ok(rows)
}

fn min_slack(rows: &[(Vec<i64>, i64)], lambda: &[BigRational]) -> (BigRational, usize) {
    rows.iter()
        .enumerate()
        .map(|(k, (a, b))| {
            let lhs: BigRational = a.iter().zip(lambda).map(|(&ai, l)| l * BigInt::from(ai)).sum();
            (lhs - BigInt::from(*b), k)
        })
        .min()
        .expect("at least one decreasing family")
}

/// Is there any convex `λ` with `Σ λ_i χ_i` flowing to `χ_F`?
///
/// Candidate weights (uniform, Kahn's two schemes, the coordinate vectors)
/// are tried first; otherwise an exact LP maximizing the worst slack is run
/// with constraint generation over the decreasing families. Any witness is
/// confirmed by max-flow.
pub fn kleitman_feasible(family: &SetFamily) -> Result<KleitmanResult> {
    let n = family.n();
    if !family.predicates().maximal_intersecting() {
        return Err(Error::ClassViolation { operand: "F", requirement: "maximal intersecting" });
    }
    if n > MAX_DIRECT_DIM {
        return Err(Error::LimitExceeded(format!("Kleitman LP needs n ≤ {MAX_DIRECT_DIM}, got {n}")));
    }
    let rows = kleitman_rows(family)?;
    let confirm = |lambda: &[BigRational]| -> Result<bool> {
        let demand = (0..1u32 << n)
            .map(|x| if family.contains(x) { BigRational::one() } else { BigRational::zero() })
            .collect();
        let inst = FlowInstance::new(n, principal_mix(n, lambda), demand)?;
        let r = flow_to(&inst)?;
        Ok(r.feasible && r.verify(&inst))
    };
    let witness = |lambda: Vec<BigRational>, best_slack, active_rows| -> Result<KleitmanResult> {
        if !confirm(&lambda)? {
            return Err(Error::Inconsistent("LP witness does not flow to the family".into()));
        }
        Ok(KleitmanResult { feasible: true, lambda: Some(lambda), best_slack, active_rows })
    };

    let f = antipodal_lift(family).function;
    let mut candidates = vec![vec![BigRational::new(1.into(), n.into()); n]];
    candidates.push(kahn_lambda(&f, &LambdaScheme::max_coordinate())?);
    candidates.push(kahn_lambda(&f, &LambdaScheme::Average)?);
    for i in 0..n {
        let mut e = vec![BigRational::zero(); n];
        e[i] = BigRational::one();
        candidates.push(e);
    }
    for c in candidates {
        if !min_slack(&rows, &c).0.is_negative() {
            return witness(c, None, rows.len());
        }
    }

    match max_min_slack(&rows, n)? {
        (Some(lambda), slack, k) => witness(lambda, Some(slack), k),
        (None, slack, k) => Ok(KleitmanResult { feasible: false, lambda: None, best_slack: Some(slack), active_rows: k }),
    }
}

/// Maximizes `min_D (a_D·λ − b_D)` over convex `λ` by constraint generation.
/// Returns the maximizing `λ` when the optimum is nonnegative, the optimum
/// over the active rows, and the number of active rows.
fn max_min_slack(rows: &[(Vec<i64>, i64)], n: usize) -> Result<(Option<Vec<BigRational>>, BigRational, usize)> {
    // Variables: λ_1..λ_n, t⁺, t⁻, one slack per active row.
    // Row D: Σ a_i λ_i − t⁺ + t⁻ − s_D = b_D; plus Σ λ_i = 1. Maximize t⁺ − t⁻.
    let q = |v: i64| BigRational::from_integer(v.into());
    let mut active: Vec<usize> = vec![min_slack(rows, &candidates_uniform(n)).1];
    loop {
        let k = active.len();
        let width = n + 2 + k;
        let mut a = Vec::with_capacity(k + 1);
        let mut b = Vec::with_capacity(k + 1);
        for (j, &r) in active.iter().enumerate() {
            let mut row = vec![BigRational::zero(); width];
            for i in 0..n {
                row[i] = q(rows[r].0[i]);
            }
            row[n] = q(-1);
            row[n + 1] = q(1);
            row[n + 2 + j] = q(-1);
            a.push(row);
            b.push(q(rows[r].1));
        }
        let mut sum_row = vec![BigRational::zero(); width];
        for v in sum_row.iter_mut().take(n) {
            *v = q(1);
        }
        a.push(sum_row);
        b.push(q(1));
        let mut c = vec![BigRational::zero(); width];
        c[n] = q(1);
        c[n + 1] = q(-1);
        let (x, value) = match lp::solve(&a, &b, &c) {
            LpOutcome::Optimal { x, value } => (x, value),
            other => return Err(Error::Inconsistent(format!("Kleitman LP ended {other:?}"))),
        };
        if value.is_negative() {
            return Ok((None, value, k));
        }
        let lambda = x[..n].to_vec();
        let (worst, at) = min_slack(rows, &lambda);
        if !worst.is_negative() {
            return Ok((Some(lambda), value, k));
        }
        active.push(at);
    }
}

fn candidates_uniform(n: usize) -> Vec<BigRational> {
    vec![BigRational::new(1.into(), n.into()); n]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{majority, principal};
    use crate::value::ratio;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    fn point_mass(n: usize, at: u32) -> Vec<BigRational> {
        (0..1u32 << n).map(|x| q((x == at) as i64)).collect()
    }

    #[test]
    fn identity_and_corner_flows() {
        let f1 = principal(2, 1).unwrap().indicator();
        let inst = FlowInstance::from_functions(&f1, &f1).unwrap();
        let r = flow_to(&inst).unwrap();
        assert!(r.feasible && r.verify(&inst));

        let up = FlowInstance::new(3, point_mass(3, 0), point_mass(3, 7)).unwrap();
        let r = flow_to(&up).unwrap();
        assert!(r.feasible && r.verify(&up));
        assert_eq!(r.flow.len(), 1);
        assert_eq!(r.flow[&(0, 7)], q(1));

        let down = FlowInstance::new(3, point_mass(3, 7), point_mass(3, 0)).unwrap();
        let r = flow_to(&down).unwrap();
        assert!(!r.feasible && r.verify(&down));
        assert_eq!(r.certificate.unwrap().member_subsets(), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn structural_infeasibility() {
        let inst = FlowInstance::new(2, point_mass(2, 0), vec![q(0); 4]).unwrap();
        let r = flow_to(&inst).unwrap();
        assert!(r.structurally_infeasible && !r.feasible && r.certificate.is_none());
        assert!(FlowInstance::new(1, vec![q(-1), q(1)], vec![q(0), q(0)]).is_err());
    }

    #[test]
    fn lambda_examples() {
        let f = antipodal_lift(&principal(4, 1).unwrap()).function;
        for scheme in [LambdaScheme::max_coordinate(), LambdaScheme::Average] {
            assert_eq!(kahn_lambda(&f, &scheme).unwrap(), vec![q(1), q(0), q(0), q(0)]);
        }
        let maj = antipodal_lift(&majority(3).unwrap()).function;
        assert_eq!(
            kahn_lambda(&maj, &LambdaScheme::max_coordinate()).unwrap(),
            vec![ratio(1, 4), ratio(1, 4), ratio(1, 2)]
        );
        assert_eq!(kahn_lambda(&maj, &LambdaScheme::Average).unwrap(), vec![ratio(1, 3); 3]);
        let reversed = LambdaScheme::MaxCoordinate { order: Some(vec![3, 2, 1]) };
        assert_eq!(
            kahn_lambda(&maj, &reversed).unwrap(),
            vec![ratio(1, 2), ratio(1, 4), ratio(1, 4)]
        );
        fn first_only(s: u32) -> Vec<BigRational> {
            let k = s.count_ones() as usize;
            (0..k).map(|i| BigRational::from_integer(((i == 0) as i64).into())).collect()
        }
        assert_eq!(
            kahn_lambda(&maj, &LambdaScheme::Custom(first_only)).unwrap(),
            vec![ratio(1, 2), ratio(1, 4), ratio(1, 4)]
        );
        let biased = CubeFunction::constant(2, 1.into()).unwrap();
        assert!(matches!(kahn_lambda(&biased, &LambdaScheme::Average), Err(Error::NonzeroMean)));
    }

    #[test]
    fn kahn_flows_on_small_families() {
        for scheme in [LambdaScheme::max_coordinate(), LambdaScheme::Average] {
            let c = check_kahn_flow(&principal(3, 1).unwrap(), &scheme).unwrap();
            assert!(c.result.feasible && c.result.verify(&c.instance));
            let c = check_kahn_flow(&majority(3).unwrap(), &scheme).unwrap();
            assert!(c.result.feasible && c.direct == Some(true));
        }
        assert!(check_kahn_flow(&majority(3).unwrap().with_toggled(7), &LambdaScheme::Average).is_err());
    }

    #[test]
    fn kleitman_examples() {
        let r = kleitman_feasible(&principal(3, 1).unwrap()).unwrap();
        assert!(r.feasible);
        let maj = kleitman_feasible(&majority(3).unwrap()).unwrap();
        assert_eq!(maj.lambda, Some(vec![ratio(1, 3); 3]));
    }

    #[test]
    fn lp_stage_alone() {
        // Majority(3): the LP must find a convex λ on its own.
        let rows = kleitman_rows(&majority(3).unwrap()).unwrap();
        let (lambda, slack, _) = max_min_slack(&rows, 3).unwrap();
        let lambda = lambda.unwrap();
        assert!(!min_slack(&rows, &lambda).0.is_negative());
        assert_eq!(lambda.iter().sum::<BigRational>(), q(1));
        assert!(!slack.is_negative());

        // Dictator on 2 among 3 coordinates: only λ = e_2 works.
        let rows = kleitman_rows(&principal(3, 2).unwrap()).unwrap();
        assert!(min_slack(&rows, &candidates_uniform(3)).0.is_negative());
        let (lambda, slack, _) = max_min_slack(&rows, 3).unwrap();
        assert_eq!(lambda, Some(vec![q(0), q(1), q(0)]));
        assert_eq!(slack, q(0));

        // An impossible demand: every row asks for one more unit.
        let bumped: Vec<(Vec<i64>, i64)> = rows.iter().map(|(a, b)| (a.clone(), b + 1)).collect();
        let (lambda, slack, _) = max_min_slack(&bumped, 3).unwrap();
        assert!(lambda.is_none() && slack.is_negative());
    }
}
