//! Exhaustive check of Cor(A,B) ≥ I_min(A)/4 for increasing A and maximal
//! intersecting B at n = 5.

use std::time::Instant;

use hypercorr::inequalities::CheckerId;
use hypercorr::search::{scan, ScanSpec, SearchClass};

fn main() -> hypercorr::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let start = Instant::now();
    let spec = ScanSpec::new(n, CheckerId::ChvatalEquiv, SearchClass::Increasing, SearchClass::MaximalIntersecting);
    let rec = scan(&spec)?;
    println!("n = {n}: {} pairs, {} failures, in {:.2?}", rec.examined, rec.failures, start.elapsed());
    if let (Some(best), Some(a), Some(b)) = (rec.best, rec.witness_a, rec.witness_b) {
        println!("smallest margin {best} at");
        println!("  A = {:?}", a.member_subsets());
        println!("  B = {:?}", b.member_subsets());
    }
    Ok(())
}
