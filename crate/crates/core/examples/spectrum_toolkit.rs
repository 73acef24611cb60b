//! Spectrum, influences and correlation of a few small families.

use hypercorr::families::{majority, principal, threshold};
use hypercorr::{wht, SetFamily};

fn show(name: &str, f: &SetFamily) {
    let s = wht(&f.indicator());
    let infl = f.influences();
    println!("{name}: μ = {}, I = {}, I_min = {}", f.measure(), infl.total, infl.minimum);
    let levels: Vec<String> = s.level_weights().iter().map(ToString::to_string).collect();
    println!("  spectral weight by level: [{}]", levels.join(", "));
    for (mask, c) in s.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()).take(8) {
        println!("  f̂({:?}) = {c}", hypercorr::set_family::mask_elements(mask as u32));
    }
}

fn main() -> hypercorr::Result<()> {
    let maj = majority(5)?;
    let dict = principal(5, 1)?;
    let thr = threshold(5, 4)?;
    show("majority(5)", &maj);
    show("dictator F_1", &dict);
    show("at least 4 of 5", &thr);
    println!("Cor(majority, F_1) = {}", maj.correlation(&dict)?);
    println!("Cor(majority, ≥4)  = {}", maj.correlation(&thr)?);
    println!("majority is self-dual: {}", maj == maj.dual());
    Ok(())
}
