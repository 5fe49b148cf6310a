//! Linkage by complete intersections and the Hilbert function identity.

use curvereg::constructions::{link, CIWitness};
use curvereg::{Ideal, PolyRing, Rationals, TermOrder};

fn main() -> curvereg::Result<()> {
    let r = PolyRing::new(Rationals, vec!["x".into(), "y".into(), "z".into()], TermOrder::DegRevLex)?;
    let z = Ideal::from_strs(&r, &["x*y", "x*z", "y*z"])?;
    let w = CIWitness::from_polys(Ideal::from_strs(&r, &["x*y", "x*z + y*z"])?.gens().to_vec(), 0)?;
    let y = link(&z, &w)?;
    println!("three points linked by a (2,2) complete intersection:");
    println!("  residual {:?}, degree {}", y.ideal.minimal_generators()?.iter().map(|g| g.to_string()).collect::<Vec<_>>(), y.ideal.hilbert()?.degree);
    println!("  identity checked: {}", y.delta_identity_checked);
    let back = link(&y.ideal, &w)?;
    println!("  linking back recovers the points: {}", back.ideal.equals(&z)?);
    let own = link(&w.ideal()?, &w)?;
    println!("  linking W to itself is empty: {}", own.empty);
    Ok(())
}
