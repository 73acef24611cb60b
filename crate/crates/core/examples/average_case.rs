//! Averaged correlation bounds over random ensembles of increasing families.

use hypercorr::families::{principal, random_increasing, RandomModel};
use hypercorr::inequalities::{evaluate_ensemble, EnsembleChecker};
use hypercorr::SetFamily;

fn main() -> hypercorr::Result<()> {
    let dictators: Vec<SetFamily> = (1..=4).map(|i| principal(4, i)).collect::<Result<_, _>>()?;
    let r = evaluate_ensemble(EnsembleChecker::AvgDream, &dictators, 1.0)?;
    println!("dictators on 4 points: E[Cor] = {}, bound = {}", r.expected_cor, r.rhs);

    for seed in 0..5 {
        let ens: Vec<SetFamily> = (0..6)
            .map(|k| random_increasing(6, seed * 100 + k, RandomModel::Generators { count: 3 }))
            .collect::<Result<_, _>>()?;
        let r = evaluate_ensemble(EnsembleChecker::AvgDream, &ens, 1.0)?;
        println!("seed {seed}: E[Cor] = {:.6}  margin = {:.6}  holds = {}", r.lhs.to_f64(), r.margin.to_f64(), r.holds);
    }

    // the s_γ bound is only guaranteed when γ log2(1/t) is an integer
    let single = vec![SetFamily::from_masks(4, [15])?];
    for gamma in [0.25, 0.3] {
        let r = evaluate_ensemble(EnsembleChecker::AvgSgamma, &single, gamma)?;
        println!("avg_sgamma γ = {gamma}: q = {:?}, integral = {:?}, holds = {}", r.q, r.q_integral, r.holds);
    }
    Ok(())
}
