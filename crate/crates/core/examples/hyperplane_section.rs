//! General hyperplane sections of curves, certified across several seeds.

use curvereg::constructions::fixtures::fixture;
use curvereg::regularity::{general_section, satiety_with};
use curvereg::Rationals;

fn main() -> curvereg::Result<()> {
    for name in ["twisted-cubic", "ex42-2b"] {
        let fx = fixture(Rationals, name, 0)?;
        let i = fx.ideal().unwrap();
        let s = general_section(i, 0, 3)?;
        let z = s.section_ideal.hilbert()?;
        println!("{name}: section of degree {} in P^{}", z.degree, s.section_ideal.nvars() - 1);
        println!("  H_Z = {:?}", z.values);
        println!("  rho_Z = {}, sat(J) = {}", z.rho, satiety_with(&s.raw_j, &s.section_ideal)?);
        println!("  lies in a hyperplane: {}", s.is_degenerate()?);
        println!("  seeds agreeing: {}, rejected: {:?}", s.seeds_agreeing, s.rejected_seeds);
    }
    Ok(())
}
