//! Invariants of a large rational curve computed in its image algebra,
//! without implicitizing.

use curvereg::constructions::fixtures::DEGREE_30;
use curvereg::constructions::{analyze_image, Parametrization};
use curvereg::PrimeField;

fn main() -> curvereg::Result<()> {
    let p = Parametrization::from_strs(PrimeField::default_field(), &DEGREE_30)?;
    let a = analyze_image(&p, 0, 3)?;
    let r = &a.report;
    println!("degree {}, P(t) = {}t {:+}", a.degree, a.degree, a.hilbert_constant);
    println!("rho + 1 = {}, rho_Z = {}, sat(J) = {}", r.rho_x + 1, r.rho_z, r.sat_j);
    println!("minimal generators per degree: {:?}", a.generators_by_degree);
    println!("alpha_I = {}, omega_I = {}, reg = {}, case {}", a.alpha, a.omega, r.reg_x, r.case.number());
    Ok(())
}
