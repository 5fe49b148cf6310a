//! Least degrees of a complete intersection containing a curve or its section.

use curvereg::constructions::fixtures::fixture;
use curvereg::constructions::minimal_ci_degrees;
use curvereg::regularity::general_section;
use curvereg::PrimeField;

fn main() -> curvereg::Result<()> {
    let field = PrimeField::default_field();
    for name in ["twisted-cubic", "ex42-1b", "ex42-3", "ex44-2"] {
        let fx = fixture(field, name, 0)?;
        let i = fx.ideal().unwrap();
        let w = minimal_ci_degrees(i, 3, 0, fx.integral)?;
        let z = general_section(i, 0, 3)?.section_ideal;
        let wz = minimal_ci_degrees(&z, 3, 0, false)?;
        println!("{name}: curve {:?}, section {:?}, reg(W) = {}", w.degrees, wz.degrees, w.regularity());
    }
    Ok(())
}
