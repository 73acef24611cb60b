//! Every registered inequality on one pair of small families.

use hypercorr::families::{majority, threshold};
use hypercorr::inequalities::{evaluate_families, CheckerId, Params};

fn main() -> hypercorr::Result<()> {
    let a = threshold(5, 2)?;
    let maj = majority(5)?;
    let four = threshold(5, 4)?;
    let params = Params::default();
    for id in CheckerId::ALL {
        // the "small" rows want an intersecting B; the ratio row a decreasing one
        let (a, b) = match id {
            CheckerId::ChvatalSmall | CheckerId::KahnSmallA | CheckerId::KahnSmallB => (&a, four.clone()),
            CheckerId::KahnSmallRatio => (&four, threshold(5, 5)?.complement()),
            _ => (&a, maj.clone()),
        };
        match evaluate_families(id, a, &b, &params) {
            Ok(r) => println!(
                "{:<18} {:<18} lhs {:>10.6} rhs {:>10.6}  {}",
                id.name(),
                format!("{:?}", r.kind),
                r.lhs.to_f64(),
                r.rhs.to_f64(),
                r.verdict
            ),
            Err(e) => println!("{:<18} skipped: {e}", id.name()),
        }
    }
    Ok(())
}
