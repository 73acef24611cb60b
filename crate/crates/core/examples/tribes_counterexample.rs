//! The tribes pair drives Cor / (I_min μ_B(1−μ_B)) down towards ln 2.

use hypercorr::families::{tribes_exact, TribesParams};
use hypercorr::search::{tribes_sweep, SweepMode};

fn main() -> hypercorr::Result<()> {
    let small = tribes_exact(TribesParams::new(3, 4)?)?;
    println!(
        "r=3 m=4 (brute force): Cor = {:?}, ratio = {:.6}",
        small.cor.as_exact().map(ToString::to_string),
        small.ratio_balanced.to_f64()
    );

    let sweep = tribes_sweep(1..=14, SweepMode::ClosedForm)?;
    println!("{:>3} {:>6} {:>8} {:>10} {:>10} {:>10}", "r", "m", "n", "mu_B", "balanced", "chvatal");
    for row in &sweep.rows {
        println!(
            "{:>3} {:>6} {:>8} {:>10.6} {:>10.6} {:>10.6}",
            row.params.r,
            row.params.m,
            row.params.n(),
            row.mu_b.to_f64(),
            row.ratio_balanced.to_f64(),
            row.ratio_chvatal.to_f64()
        );
    }
    println!("ln 2 = {:.6}, ln 2 / 4 = {:.6}", std::f64::consts::LN_2, std::f64::consts::LN_2 / 4.0);
    Ok(())
}
