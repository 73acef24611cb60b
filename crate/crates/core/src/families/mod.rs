//! Named constructions, random generators and exhaustive enumeration.

mod enumerate;
mod tribes;

pub use enumerate::{count, enumerate, increasing_tables, Enumeration, FamilyClass};
pub use tribes::{
    tribe_size_for, tribes, tribes_closed_form, tribes_closed_form_exact, tribes_exact,
    TribesParams, TribesSource, TribesStats,
};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cube::CubeFunction;
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::set_family::SetFamily;

/// The dictator family `F_i = {A : i ∈ A}`.
pub fn principal(n: usize, i: usize) -> Result<SetFamily> {
    if i == 0 || i > n {
        return Err(Error::CoordinateOutOfRange { k: i, n });
    }
    SetFamily::from_fn(n, |m| m >> (i - 1) & 1 == 1)
}

/// `{A : |A| ≥ k}` for `0 ≤ k ≤ n + 1`.
pub fn threshold(n: usize, k: usize) -> Result<SetFamily> {
    if k > n + 1 {
        return Err(Error::InvalidInput(format!("threshold {k} exceeds n + 1 = {}", n + 1)));
    }
    SetFamily::from_fn(n, |m| m.count_ones() as usize >= k)
}

pub fn majority(n: usize) -> Result<SetFamily> {
    if n % 2 == 0 {
        return Err(Error::InvalidInput(format!("majority needs odd n, got {n}")));
    }
    threshold(n, (n + 1) / 2)
}

/// Increasing family generated by the given subsets.
pub fn up_closure_of(n: usize, generators: &[Vec<usize>]) -> Result<SetFamily> {
    Ok(SetFamily::from_subsets(n, generators)?.up_closure())
}

/// How [`random_increasing`] draws a family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RandomModel {
    /// Up-closure of `count` independent uniform subsets.
    Generators { count: usize },
    /// A threshold family at a uniform level, followed by `steps` random
    /// monotone toggles (drop a minimal member or add a maximal non-member).
    ThresholdPerturbation { steps: usize },
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Deterministic in `(n, seed, model)`; the result is always increasing.
pub fn random_increasing(n: usize, seed: u64, model: RandomModel) -> Result<SetFamily> {
    random_increasing_with(n, &mut rng_from_seed(seed), model)
}

pub fn random_increasing_with<R: Rng>(n: usize, rng: &mut R, model: RandomModel) -> Result<SetFamily> {
    match model {
        RandomModel::Generators { count } => {
            let masks: Vec<u32> = (0..count).map(|_| rng.gen_range(0..1u32 << n)).collect();
            Ok(SetFamily::from_masks(n, masks)?.up_closure())
        }
        RandomModel::ThresholdPerturbation { steps } => {
            let mut f = threshold(n, rng.gen_range(0..=n + 1))?;
            for _ in 0..steps {
                let mut moves = f.minimal_members();
                moves.extend(f.maximal_non_members());
                if let Some(&m) = moves.choose(rng) {
                    f = f.with_toggled(m);
                }
            }
            Ok(f)
        }
    }
}

/// A random maximal intersecting (increasing, antipodal) family.
///
/// Complementary pairs are visited in random order; an undecided pair has
/// a random side chosen and its up-closure added. For an increasing
/// intersecting family with neither `X` nor `X^c` present, adding the
/// up-closure of a nonempty side keeps it intersecting.
pub fn random_maximal_intersecting<R: Rng>(n: usize, rng: &mut R) -> Result<SetFamily> {
    if n == 0 {
        return Err(Error::InvalidInput("no maximal intersecting family on the empty ground set".into()));
    }
    let mut f = SetFamily::empty(n)?;
    let top = (1u32 << n) - 1;
    let mut reps: Vec<u32> = (0..1u32 << (n - 1)).collect();
    reps.shuffle(rng);
    for x in reps {
        let y = x ^ top;
        if f.contains(x) || f.contains(y) {
            continue;
        }
        // ∅ meets nothing, so the pair {∅, [n]} always takes [n]
        let pick = if x != 0 && rng.gen_bool(0.5) { x } else { y };
        // all supersets of `pick`
        let free = pick ^ top;
        let mut sub = free;
        loop {
            f.set(pick | sub);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & free;
        }
    }
    Ok(f)
}

/// Output of [`lift_pair`].
#[derive(Clone, Debug)]
pub struct LiftedPair {
    pub a: SetFamily,
    pub b: SetFamily,
    /// The antipodal `{0, ±1}`-valued function equal to 1 on the lifted `B`
    /// and 0 on the other sets containing element 1.
    pub f: CubeFunction,
}

/// Lifts families on the ground set `{2..n}` (given as families on `n − 1`
/// elements, element `j` standing for `j + 1`) to `[n]`:
/// `A' = A ∪ {A ∪ {1}}` and `B' = {B ∪ {1}}`.
///
/// Guarantees `Cor(A',B') = Cor(A,B)/2`, `I_1(A') = 0` and
/// `I_{j+1}(A') = I_j(A)`.
pub fn lift_pair(a: &SetFamily, b: &SetFamily) -> Result<LiftedPair> {
    a.same_dim(b)?;
    if !a.is_increasing() {
        return Err(Error::ClassViolation { operand: "A", requirement: "increasing" });
    }
    if !b.is_increasing() {
        return Err(Error::ClassViolation { operand: "B", requirement: "increasing" });
    }
    let n = a.n() + 1;
    let lifted_a = SetFamily::from_fn(n, |m| a.contains(m >> 1))?;
    let lifted_b = SetFamily::from_fn(n, |m| m & 1 == 1 && b.contains(m >> 1))?;
    let top = (1u32 << n) - 1;
    let f = CubeFunction::from_fn(n, |m| {
        let on_top = |x: u32| if lifted_b.contains(x) { 1 } else { 0 };
        Dyadic::from_int(if m & 1 == 1 { on_top(m) } else { -on_top(m ^ top) })
    })?;
    Ok(LiftedPair { a: lifted_a, b: lifted_b, f })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cube::wht;

    /// Probability that coordinate `k` is pivotal, by direct edge count.
    fn edge_influence(f: &SetFamily, k: usize) -> Dyadic {
        let bit = 1u32 << (k - 1);
        let edges = (0..1u32 << f.n())
            .filter(|&x| x & bit == 0 && f.contains(x) != f.contains(x | bit))
            .count();
        Dyadic::new(edges as i64, f.n() as u32 - 1)
    }

    #[test]
    fn principal_examples() {
        let f = principal(3, 1).unwrap();
        assert_eq!(f.member_subsets(), vec![vec![1], vec![1, 2], vec![1, 3], vec![1, 2, 3]]);
        let inf: Vec<Dyadic> = (1..=3).map(|k| edge_influence(&f, k)).collect();
        assert_eq!(inf, vec![Dyadic::one(), Dyadic::zero(), Dyadic::zero()]);
        assert_eq!(f.influences().entries, inf);
        assert_eq!(f.dual(), f);
        assert!(principal(3, 4).is_err());
        assert!(principal(3, 0).is_err());
    }

    #[test]
    fn threshold_and_majority_examples() {
        let maj = majority(3).unwrap();
        assert_eq!(maj.count(), 4);
        assert!(maj.members().all(|m| m.count_ones() >= 2));
        assert!(threshold(3, 4).unwrap().is_empty());
        assert_eq!(threshold(3, 0).unwrap(), SetFamily::full(3).unwrap());
        assert!(majority(4).is_err());
        assert!(threshold(3, 5).is_err());

        let maj5 = majority(5).unwrap();
        for k in 1..=5 {
            let oracle = edge_influence(&maj5, k);
            assert_eq!(maj5.influence(k).unwrap(), oracle);
            assert_eq!(oracle, Dyadic::new(3, 3));
        }
        let p = maj5.predicates();
        assert!(p.increasing && p.regular);
    }

    #[test]
    fn random_models_are_deterministic_and_increasing() {
        for seed in 0..50 {
            for model in [
                RandomModel::Generators { count: 3 },
                RandomModel::ThresholdPerturbation { steps: 10 },
            ] {
                let f = random_increasing(6, seed, model).unwrap();
                assert!(f.is_increasing());
                assert_eq!(f, random_increasing(6, seed, model).unwrap());
            }
        }
        assert!(random_increasing(4, 1, RandomModel::Generators { count: 0 }).unwrap().is_empty());
        let closure = up_closure_of(3, &[vec![]]).unwrap();
        assert_eq!(closure, SetFamily::full(3).unwrap());
        assert_eq!(up_closure_of(3, &[vec![1], vec![2, 3]]).unwrap().count(), 5);
    }

    #[test]
    fn random_maximal_intersecting_is_maximal_intersecting() {
        let mut rng = rng_from_seed(7);
        for n in 1..=8 {
            for _ in 0..20 {
                let f = random_maximal_intersecting(n, &mut rng).unwrap();
                let p = f.predicates();
                assert!(p.increasing && p.antipodal && p.intersecting, "{f:?}");
            }
        }
    }

    #[test]
    fn lift_pair_examples() {
        let maj = majority(3).unwrap();
        let lifted = lift_pair(&maj, &maj).unwrap();
        // Brute force on the 2^4 cube.
        let mu = |f: &SetFamily| Dyadic::new(f.count(), 4);
        let both = lifted.a.intersection(&lifted.b).unwrap();
        let cor = mu(&both) - mu(&lifted.a) * mu(&lifted.b);
        assert_eq!(cor, Dyadic::new(1, 3));
        assert_eq!(cor, maj.correlation(&maj).unwrap().half());
        assert_eq!(lifted.a.influence(1).unwrap(), Dyadic::zero());
        for k in 1..=3 {
            assert_eq!(lifted.a.influence(k + 1).unwrap(), maj.influence(k).unwrap());
        }
        assert!(lifted.f.is_antipodal());

        let full = SetFamily::full(3).unwrap();
        let l2 = lift_pair(&full, &maj).unwrap();
        assert_eq!(l2.a, SetFamily::full(4).unwrap());
        assert_eq!(l2.a.influence(1).unwrap(), Dyadic::zero());
    }

    #[test]
    fn lift_pair_spectrum_relation() {
        // B̂(S) = f̂(S) for odd |S| and −f̂(S ∪ {1}) for even |S|, S ⊆ {2..n}.
        let maj = majority(3).unwrap();
        let tribes_like = SetFamily::from_fn(3, |m| m & 1 == 1 || m & 6 == 6).unwrap();
        for b in [maj.clone(), tribes_like] {
            let lifted = lift_pair(&maj, &b).unwrap();
            let fhat = wht(&lifted.f);
            let bhat = wht(&b.indicator());
            for s in 0..8u32 {
                let big = s << 1;
                let want = if s.count_ones() % 2 == 1 {
                    fhat.coeff(big).clone()
                } else {
                    -fhat.coeff(big | 1)
                };
                assert_eq!(bhat.coeff(s), &want, "S = {s:#b}");
            }
            for t in 0..16u32 {
                if t.count_ones() % 2 == 0 {
                    assert!(fhat.coeff(t).is_zero());
                }
            }
        }
    }
}
