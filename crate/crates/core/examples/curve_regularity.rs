//! Regularity of curves from the general hyperplane section: the three
//! formulas and the case split.

use curvereg::constructions::fixtures::fixture;
use curvereg::regularity::regularity_curve;
use curvereg::PrimeField;

fn main() -> curvereg::Result<()> {
    let field = PrimeField::default_field();
    println!("{:<14} {:>4} {:>4} {:>6} {:>6} {:>4} {:>5}", "curve", "deg", "rho", "rho_Z", "sat_J", "reg", "case");
    for name in ["twisted-cubic", "ex42-1b", "ex42-2b", "ex42-3", "ex36-2", "ex36-3"] {
        let fx = fixture(field, name, 1)?;
        let r = regularity_curve(fx.ideal().unwrap(), 1, 3)?;
        assert_eq!(r.reg_x, r.reg_via_delta);
        assert_eq!(r.reg_x, r.reg_via_satiety);
        println!("{:<14} {:>4} {:>4} {:>6} {:>6} {:>4} {:>5}", name, r.degree, r.rho_x, r.rho_z, r.sat_j, r.reg_x, r.case.number());
    }
    Ok(())
}
