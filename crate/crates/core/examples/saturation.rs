//! Saturation, satiety and the exponents that witness it.

use curvereg::regularity::satiety_with;
use curvereg::{Ideal, PolyRing, PrimeField};

fn main() -> curvereg::Result<()> {
    let r = PolyRing::standard(PrimeField::default_field(), 4);
    let cubic = ["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"];
    let gens: Vec<String> = cubic.iter().flat_map(|g| (0..4).map(move |j| format!("x{j}*({g})"))).collect();
    let refs: Vec<&str> = gens.iter().map(|s| s.as_str()).collect();
    let i = Ideal::from_strs(&r, &refs)?;

    let sat = i.saturate()?;
    println!("saturated: {}", i.is_saturated()?);
    println!("saturation:");
    for g in sat.minimal_generators()? {
        println!("  {g}");
    }
    println!("satiety: {}", satiety_with(&i, &sat)?);
    for (g, exps) in i.saturation_witnesses(&sat, 8)? {
        println!("  x_j^r * ({g}) in I for r = {exps:?}");
    }
    // the definition via an extra variable gives the same ideal
    println!("agrees with the definition: {}", sat.equals(&i.saturate_by_definition()?)?);
    Ok(())
}
