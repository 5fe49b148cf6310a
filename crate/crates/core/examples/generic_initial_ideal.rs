//! Generic initial ideals and the shape of the gin of plane points.

use curvereg::bounds::lambda0_check;
use curvereg::constructions::fixtures::fixture;
use curvereg::regularity::{general_section, gin, gin_shape, regularity_via_gin};
use curvereg::Rationals;

fn main() -> curvereg::Result<()> {
    for name in ["twisted-cubic", "elliptic-quintic-p3"] {
        let fx = fixture(Rationals, name, 0)?;
        let i = fx.ideal().unwrap();
        let (reg, g) = regularity_via_gin(i, 0, 3)?;
        println!("{name}: gin = {}, reg = {reg}", g.gin.display_with(i.ring().names()));

        let z = general_section(i, 0, 3)?.section_ideal;
        let h = z.hilbert()?;
        let gz = gin(&z, 0, 3)?.gin;
        let shape = gin_shape(&gz, Some(h.degree as u32), Some(h.rho))?;
        println!("  section gin {} has s = {}, lambdas = {:?}", gz.display_with(z.ring().names()), shape.s, shape.lambdas);
        println!("  spacing ok: {}, degree/lambda inequalities: {}", shape.spacing_ok(), lambda0_check(shape.s, shape.lambda0(), h.degree as u64)?);
    }
    Ok(())
}
