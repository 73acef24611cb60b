//! Kahn's flows and Kleitman's weights for every maximal intersecting family
//! on four points.

use hypercorr::families::{enumerate, FamilyClass};
use hypercorr::flow::{check_kahn_flow, kleitman_feasible, LambdaScheme};

fn main() -> hypercorr::Result<()> {
    for f in enumerate(4, FamilyClass::MaximalIntersecting)? {
        let max = check_kahn_flow(&f, &LambdaScheme::max_coordinate())?;
        let avg = check_kahn_flow(&f, &LambdaScheme::Average)?;
        let kl = kleitman_feasible(&f)?;
        let lambda: Vec<String> = max.lambda.iter().map(ToString::to_string).collect();
        println!(
            "{:<40} λ = ({}) max:{} avg:{} kleitman:{}",
            format!("{:?}", f.minimal_members().iter().map(|&m| hypercorr::set_family::mask_elements(m)).collect::<Vec<_>>()),
            lambda.join(", "),
            max.result.feasible,
            avg.result.feasible,
            kl.feasible
        );
    }
    Ok(())
}
