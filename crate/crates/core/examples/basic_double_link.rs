//! Basic double links: curves with generators in high degree.

use curvereg::constructions::basic_double_link_general;
use curvereg::constructions::fixtures::elliptic_quintic_p3;
use curvereg::regularity::regularity_curve;
use curvereg::PrimeField;

fn main() -> curvereg::Result<()> {
    let c0 = elliptic_quintic_p3(PrimeField::default_field(), 3)?;
    println!("start: P(t) = {}", c0.hilbert()?.polynomial);
    let c1 = basic_double_link_general(&c0, &[1, 5], 10)?;
    println!("type (1,5): P(t) = {}, general form {}", c1.ideal.hilbert()?.polynomial, c1.f1);
    let c2 = basic_double_link_general(&c1.ideal, &[1, 7], 11)?;
    let r = regularity_curve(&c2.ideal, 0, 3)?;
    println!("type (1,7): P(t) = {}", c2.ideal.hilbert()?.polynomial);
    println!("  generator degrees {:?}", c2.ideal.generator_degrees()?);
    println!("  reg {} = rho + {}, rho_Z = {}, case {}", r.reg_x, r.reg_x - r.rho_x, r.rho_z, r.case.number());
    Ok(())
}
