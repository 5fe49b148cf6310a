//! Ideals of rational curves from a parametrization, by kernels of the
//! substitution map and by elimination.

use curvereg::constructions::{implicitize, ImplicitMethod, Parametrization};
use curvereg::Rationals;

fn main() -> curvereg::Result<()> {
    let p = Parametrization::from_strs(Rationals, &["u^4", "u^3*v", "u*v^3", "v^4"])?;
    let r = implicitize(&p, ImplicitMethod::Both, Some(6))?;
    println!("rational quartic:");
    for g in r.ideal.minimal_generators()? {
        println!("  {g}");
    }
    println!("  possibly truncated: {}", r.possibly_truncated);

    let p = Parametrization::from_strs(Rationals, &["u^12 + v^12", "u^11*v + u*v^11", "u^10*v^2 + v^12", "u^9*v^3"])?;
    let r = implicitize(&p, ImplicitMethod::LinearAlgebra, Some(13))?;
    let h = r.ideal.hilbert()?;
    println!("degree-12 curve: P(t) = {}, generator degrees {:?}", h.polynomial, r.ideal.generator_degrees()?);

    // too low a bound leaves a curve of the wrong degree
    match implicitize(&p, ImplicitMethod::LinearAlgebra, Some(5)) {
        Ok(r) => println!("with bound 5: possibly truncated = {}", r.possibly_truncated),
        Err(e) => println!("with bound 5: {e}"),
    }
    Ok(())
}
