//! Hill-climbing towards the smallest balanced_c ratio from threshold starts.

use hypercorr::families::threshold;
use hypercorr::inequalities::{CheckerId, Params};
use hypercorr::search::{local_search, LocalSearchSpec, Objective, SearchClass};

fn main() -> hypercorr::Result<()> {
    let n = 6;
    for seed in 0..4u64 {
        // thresholds keep I_min(A) > 0 and 0 < μ(B) < 1; the seed picks the move order
        let a = threshold(n, 2 + seed as usize % 3)?;
        let b = threshold(n, 3)?;
        let spec = LocalSearchSpec {
            checker: CheckerId::BalancedC,
            params: Params::default(),
            objective: Objective::MinRatio,
            a_class: SearchClass::Increasing,
            b_class: SearchClass::Increasing,
            budget: 4000,
            seed,
        };
        let rec = local_search(&spec, &a, &b)?;
        let trace: Vec<String> = rec.trace.iter().map(|v| format!("{:.4}", v.to_f64())).collect();
        println!("seed {seed}: best {:?} after {} evaluations", rec.best.map(|v| v.to_f64()), rec.examined);
        println!("  trace {}", trace.join(" → "));
    }
    Ok(())
}
