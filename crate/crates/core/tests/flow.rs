use hypercorr::families::{enumerate, majority, principal, FamilyClass};
use hypercorr::flow::{
    check_kahn_flow, direct_criterion, flow_to, kahn_lambda, kleitman_feasible, FlowInstance, LambdaScheme,
};
use hypercorr::value::ratio;
use hypercorr::{antipodal_lift, f_star, SetFamily};
use num_rational::BigRational;
use num_traits::{One, Zero};

fn point_mass(n: usize, at: u32) -> Vec<BigRational> {
    (0..1u32 << n).map(|x| if x == at { BigRational::one() } else { BigRational::zero() }).collect()
}

fn indicator(f: &SetFamily) -> Vec<BigRational> {
    (0..1u32 << f.n()).map(|x| if f.contains(x) { BigRational::one() } else { BigRational::zero() }).collect()
}

#[test]
fn identity_flow() {
    let f = indicator(&principal(2, 1).unwrap());
    let inst = FlowInstance::new(2, f.clone(), f).unwrap();
    let r = flow_to(&inst).unwrap();
    assert!(r.feasible && r.verify(&inst));
    assert!(r.flow.keys().all(|(a, b)| a == b));
}

#[test]
fn bottom_to_top_and_back() {
    let n = 3;
    let top = (1 << n) - 1;
    let up = FlowInstance::new(n, point_mass(n, 0), point_mass(n, top)).unwrap();
    let r = flow_to(&up).unwrap();
    assert!(r.feasible);
    assert_eq!(r.flow.len(), 1);
    assert_eq!(r.flow.get(&(0, top)), Some(&BigRational::one()));

    let down = FlowInstance::new(n, point_mass(n, top), point_mass(n, 0)).unwrap();
    let r = flow_to(&down).unwrap();
    assert!(!r.feasible);
    let cert = r.certificate.clone().unwrap();
    assert_eq!(cert, SetFamily::from_masks(n, [0]).unwrap());
    assert!(r.verify(&down));
}

#[test]
fn unequal_totals_are_structural() {
    let inst = FlowInstance::new(2, point_mass(2, 0), vec![BigRational::zero(); 4]).unwrap();
    let r = flow_to(&inst).unwrap();
    assert!(!r.feasible && r.structurally_infeasible && r.certificate.is_none());
    assert!(FlowInstance::new(1, vec![ratio(-1, 2), ratio(1, 2)], point_mass(1, 0)).is_err());
}

#[test]
fn lambda_examples() {
    let dict = antipodal_lift(&principal(3, 1).unwrap()).function;
    for scheme in [LambdaScheme::max_coordinate(), LambdaScheme::Average] {
        assert_eq!(kahn_lambda(&dict, &scheme).unwrap(), vec![ratio(1, 1), ratio(0, 1), ratio(0, 1)]);
    }
    let maj = antipodal_lift(&majority(3).unwrap()).function;
    assert_eq!(
        kahn_lambda(&maj, &LambdaScheme::max_coordinate()).unwrap(),
        vec![ratio(1, 4), ratio(1, 4), ratio(1, 2)]
    );
    assert_eq!(kahn_lambda(&maj, &LambdaScheme::Average).unwrap(), vec![ratio(1, 3); 3]);
    let reversed = LambdaScheme::MaxCoordinate { order: Some(vec![3, 2, 1]) };
    assert_eq!(kahn_lambda(&maj, &reversed).unwrap(), vec![ratio(1, 2), ratio(1, 4), ratio(1, 4)]);
}

#[test]
fn lambda_totals_match_the_positive_part() {
    for n in 1..=5 {
        for fam in enumerate(n, FamilyClass::MaximalIntersecting).unwrap() {
            let f = antipodal_lift(&fam).function;
            let star: BigRational = f_star(&f).values().iter().map(|d| d.to_rational()).sum();
            let expected = star / BigRational::from_integer(num_bigint::BigInt::one() << (n - 1));
            assert_eq!(expected, BigRational::one());
            for scheme in [LambdaScheme::max_coordinate(), LambdaScheme::Average] {
                let total: BigRational = kahn_lambda(&f, &scheme).unwrap().into_iter().sum();
                assert_eq!(total, expected);
            }
        }
    }
}

#[test]
fn kahn_and_kleitman_examples() {
    let maj = majority(3).unwrap();
    let k = check_kahn_flow(&maj, &LambdaScheme::max_coordinate()).unwrap();
    assert!(k.result.feasible && k.direct == Some(true));
    let f1 = principal(4, 1).unwrap();
    let k = check_kahn_flow(&f1, &LambdaScheme::Average).unwrap();
    assert_eq!(k.instance.supply(), k.instance.demand());

    let kl = kleitman_feasible(&f1).unwrap();
    assert_eq!(kl.lambda.unwrap(), vec![ratio(1, 1), ratio(0, 1), ratio(0, 1), ratio(0, 1)]);
    assert!(kleitman_feasible(&maj).unwrap().feasible);
    assert!(check_kahn_flow(&SetFamily::full(3).unwrap(), &LambdaScheme::Average).is_err());
    assert!(kleitman_feasible(&majority(7).unwrap()).is_err());
}

#[test]
fn max_flow_matches_the_cut_criterion_exhaustively_at_n2() {
    // every pair of 0/1/2-valued functions on the 4 points of {0,1}^2
    let values = |code: u32| -> Vec<BigRational> {
        (0..4).map(|i| BigRational::from_integer(((code / 3u32.pow(i)) % 3).into())).collect()
    };
    for cf in 0..81 {
        for cg in 0..81 {
            let (f, g) = (values(cf), values(cg));
            if f.iter().sum::<BigRational>() != g.iter().sum::<BigRational>() {
                continue;
            }
            let inst = FlowInstance::new(2, f, g).unwrap();
            let r = flow_to(&inst).unwrap();
            assert_eq!(r.feasible, direct_criterion(&inst).unwrap());
            assert!(r.verify(&inst));
        }
    }
}
