//! Reduced Groebner bases, normal forms and ideal membership.

use curvereg::{Ideal, PolyRing, PrimeField, Rationals, TermOrder};

fn main() -> curvereg::Result<()> {
    let r = PolyRing::standard(Rationals, 4);
    let i = Ideal::from_strs(&r, &["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"])?;
    println!("degrevlex basis:");
    for g in i.groebner_basis()? {
        println!("  {g}");
    }
    println!("lex basis:");
    for g in i.groebner_in(TermOrder::Lex)? {
        println!("  {g}");
    }

    let f = curvereg::parse::parse_polynomial(&r, "x0^2*x3 - x1^3")?;
    println!("normal form of {f}: {}", i.normal_form(&f)?);
    println!("x0^2*x3 - x1^3 in I: {}", i.contains(&f)?);
    println!("leading ideal: {}", i.leading_ideal()?.display_with(r.names()));

    // the same ideal mod p
    let rp = PolyRing::standard(PrimeField::new(101)?, 4);
    let ip = Ideal::from_strs(&rp, &["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"])?;
    println!("GF(101) basis size: {}", ip.groebner_basis()?.len());
    Ok(())
}
