use hypercorr::families::{random_increasing_with, rng_from_seed, RandomModel};
use hypercorr::inequalities::{
    average_weights, evaluate, evaluate_families, max_coordinate_weights, nondiagonal_sum_via_differences,
    CheckerId, Params, Permutation,
};
use hypercorr::io::{family_digest, family_from_json, family_to_json, Encoding};
use hypercorr::search::{local_search, scan, Budget, LocalSearchSpec, Objective, ScanSpec, SearchClass};
use hypercorr::{inverse_wht, wht, Dyadic, FamilyProfile, SetFamily, Value};
use num_rational::BigRational;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

fn any_family(n: usize, seed: u64) -> SetFamily {
    let mut rng = rng_from_seed(seed);
    let density = rng.gen_range(0.0..1.0);
    SetFamily::from_fn(n, |_| rng.gen_bool(density)).unwrap()
}

fn increasing(n: usize, seed: u64) -> SetFamily {
    let mut rng = rng_from_seed(seed);
    let model = if seed % 2 == 0 {
        RandomModel::Generators { count: 1 + seed as usize % (n + 3) }
    } else {
        RandomModel::ThresholdPerturbation { steps: 2 * n }
    };
    random_increasing_with(n, &mut rng, model).unwrap()
}

fn maxint(n: usize, seed: u64) -> SetFamily {
    SearchClass::MaximalIntersecting.sample(n, &mut rng_from_seed(seed)).unwrap()
}

fn exact(v: &Value) -> BigRational {
    v.as_exact().expect("exact value").clone()
}

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, failure_persistence: None, ..ProptestConfig::default() }
}

proptest! {
    #![proptest_config(config(128))]

    #[test]
    fn parseval_and_inversion(n in 1usize..=8, seed in any::<u64>()) {
        let f = any_family(n, seed);
        let s = wht(&f.indicator());
        prop_assert_eq!(s.energy(), f.measure());
        prop_assert_eq!(inverse_wht(&s), f.indicator());
    }

    #[test]
    fn influences_from_the_spectrum(n in 1usize..=8, seed in any::<u64>()) {
        let f = any_family(n, seed);
        let s = wht(&f.indicator());
        for k in 1..=n {
            let bit = 1u32 << (k - 1);
            let mass: Dyadic = (0..1u32 << n).filter(|m| m & bit != 0).map(|m| s.coeff(m).square()).sum();
            prop_assert_eq!(mass.scale_pow2(2), f.influence(k).unwrap());
        }
    }

    #[test]
    fn monotone_linear_coefficients(n in 1usize..=8, seed in any::<u64>()) {
        let f = increasing(n, seed);
        let s = wht(&f.indicator());
        for k in 1..=n {
            prop_assert_eq!(-s.coeff(1 << (k - 1)).scale_pow2(1), f.influence(k).unwrap());
        }
    }

    #[test]
    fn correlation_two_ways(n in 1usize..=8, sa in any::<u64>(), sb in any::<u64>()) {
        let (a, b) = (any_family(n, sa), any_family(n, sb));
        let spectral = wht(&a.indicator()).covariance(&wht(&b.indicator())).unwrap();
        prop_assert_eq!(&spectral, &a.correlation(&b).unwrap());
        let (pa, pb) = (FamilyProfile::new(a), FamilyProfile::new(b));
        prop_assert_eq!(pa.correlation_numerator(&pb).unwrap(), pa.spectral_correlation_numerator(&pb).unwrap());
    }

    #[test]
    fn duality_and_complements(n in 1usize..=8, sa in any::<u64>(), sb in any::<u64>()) {
        let (a, b) = (any_family(n, sa), any_family(n, sb));
        prop_assert_eq!(a.dual().dual(), a.clone());
        prop_assert_eq!(a.complement().correlation(&b.complement()).unwrap(), a.correlation(&b).unwrap());
        let up = increasing(n, sa);
        prop_assert!(up.dual().is_increasing());
        prop_assert_eq!(up.is_antipodal(), up == up.dual());
    }

    #[test]
    fn harris_and_harper(n in 1usize..=8, sa in any::<u64>(), sb in any::<u64>()) {
        let (a, b) = (increasing(n, sa), increasing(n, sb));
        let r = evaluate_families(CheckerId::Harris, &a, &b, &Params::default()).unwrap();
        prop_assert!(!r.margin.is_negative());
        let pa = FamilyProfile::new(any_family(n, sa));
        let h = evaluate(CheckerId::Harper, Some(&pa), None, &Params::default()).unwrap();
        prop_assert!(h.passes());
    }

    #[test]
    fn nondiagonal_sum_through_differences(n in 1usize..=6, sa in any::<u64>(), sb in any::<u64>()) {
        let (a, b) = (increasing(n, sa), maxint(n, sb));
        let r = evaluate_families(CheckerId::AlphaNondiag, &a, &b, &Params::default()).unwrap();
        let via = nondiagonal_sum_via_differences(&a, &b, 0.5).unwrap();
        prop_assert!((r.rhs.to_f64() - via).abs() <= 1e-9 * (1.0 + via.abs()));
    }

    #[test]
    fn diagonal_forms_are_ordered(n in 1usize..=7, sa in any::<u64>(), sb in any::<u64>()) {
        let (a, b) = (increasing(n, sa), maxint(n, sb));
        let p = Params::default();
        let weak = evaluate_families(CheckerId::DiagWeak, &a, &b, &p).unwrap();
        let strong = evaluate_families(CheckerId::DiagStrong, &a, &b, &p).unwrap();
        let four = evaluate_families(CheckerId::DiagMaxint, &a, &b, &p).unwrap();
        prop_assert!(exact(&strong.rhs) >= exact(&weak.rhs));
        prop_assert_eq!(exact(&four.rhs), exact(&weak.rhs) * BigRational::from_integer(4.into()));
    }

    #[test]
    fn kahn_weight_chain(n in 1usize..=7, sa in any::<u64>(), sb in any::<u64>()) {
        let (a, b) = (increasing(n, sa), maxint(n, sb));
        let rhs = |perm: Permutation| {
            let p = Params { permutation: perm, ..Params::default() };
            exact(&evaluate_families(CheckerId::KahnCorrA, &a, &b, &p).unwrap().rhs)
        };
        let mut order: Vec<usize> = (1..=n).collect();
        order.shuffle(&mut rng_from_seed(sa ^ sb));
        let (asc, any, desc) = (
            rhs(Permutation::AscendingInfluence),
            rhs(Permutation::Explicit(order)),
            rhs(Permutation::DescendingInfluence),
        );
        let avg = exact(&evaluate_families(CheckerId::KahnCorrB, &a, &b, &Params::default()).unwrap().rhs);
        prop_assert!(asc >= any && any >= desc);
        prop_assert!(asc >= avg && avg >= desc);
    }

    #[test]
    fn kahn_weights_sum_to_a_quarter(n in 1usize..=8, seed in any::<u64>()) {
        let b = FamilyProfile::new(maxint(n, seed));
        let rank: Vec<usize> = (0..n).collect();
        let quarter = Dyadic::new(1, 2);
        prop_assert_eq!(max_coordinate_weights(&b, &rank, false).into_iter().sum::<Dyadic>(), quarter.clone());
        prop_assert_eq!(average_weights(&b, false).into_iter().sum::<BigRational>(), quarter.to_rational());
    }

    #[test]
    fn json_round_trip(n in 1usize..=9, seed in any::<u64>()) {
        let f = any_family(n, seed);
        let up = increasing(n, seed);
        for enc in [Encoding::List, Encoding::TruthTable] {
            let back = family_from_json(&family_to_json(&f, enc).unwrap()).unwrap();
            prop_assert_eq!(family_digest(&back), family_digest(&f));
            prop_assert_eq!(back, f.clone());
        }
        let back = family_from_json(&family_to_json(&up, Encoding::UpGenerators).unwrap()).unwrap();
        prop_assert_eq!(back, up.clone());
        let down = up.complement();
        let back = family_from_json(&family_to_json(&down, Encoding::DownGenerators).unwrap()).unwrap();
        prop_assert_eq!(back, down);
    }
}

proptest! {
    #![proptest_config(config(12))]

    #[test]
    fn sampled_scans_are_reproducible(n in 2usize..=6, seed in any::<u64>(), jobs in 1usize..=4) {
        let mut spec = ScanSpec::new(n, CheckerId::Dream, SearchClass::Increasing, SearchClass::Increasing);
        spec.budget = Budget::Samples(150);
        spec.seed = seed;
        spec.jobs = Some(1);
        let one = scan(&spec).unwrap();
        spec.jobs = Some(jobs);
        let many = scan(&spec).unwrap();
        prop_assert_eq!(&one, &many);
        if let (Some(best), Some(a), Some(b)) = (&one.best, &one.witness_a, &one.witness_b) {
            let r = evaluate_families(CheckerId::Dream, a, b, &Params::default()).unwrap();
            prop_assert_eq!(Objective::MinMargin.of(&r), Some(best.clone()));
        }
    }

    #[test]
    fn local_search_never_worsens(n in 2usize..=5, seed in any::<u64>()) {
        let spec = LocalSearchSpec {
            checker: CheckerId::ChvatalEquiv,
            params: Params::default(),
            objective: Objective::MinMargin,
            a_class: SearchClass::Increasing,
            b_class: SearchClass::MaximalIntersecting,
            budget: 300,
            seed,
        };
        let (a, b) = (increasing(n, seed), maxint(n, seed));
        let rec = local_search(&spec, &a, &b).unwrap();
        prop_assert!(rec.trace.windows(2).all(|w| w[1].compare(&w[0]).is_le()));
        prop_assert!(SearchClass::MaximalIntersecting.admits(rec.witness_b.as_ref().unwrap()));
        prop_assert!(!rec.best.unwrap().is_negative());
    }
}
