//! Reading rings, ideals and parametrizations from the text format.

use curvereg::parse::{parse_file, FieldKind};
use curvereg::{Ideal, PrimeField};

const TEXT: &str = "
# twisted cubic, given twice
ring GF(31991) vars x0 x1 x2 x3 order degrevlex;
ideal I = x0*x2 - x1^2, x0*x3 - x1*x2, x1*x3 - x2^2;
params u v;
map x0 = u^3;
map x1 = u^2*v;
map x2 = u*v^2;
map x3 = v^3;
";

fn main() -> curvereg::Result<()> {
    let file = parse_file(TEXT)?;
    let FieldKind::Prime(p) = file.ring.field else { unreachable!() };
    let ring = file.ring.build(PrimeField::new(p)?)?;
    let i = Ideal::new(&ring, file.generators(&ring, Some("I"))?)?;
    let (_, images) = file.parametrization(&ring)?.expect("file has a map");
    for (name, f) in ring.names().iter().zip(&images) {
        println!("{name} -> {f}");
    }
    for g in i.gens() {
        println!("{g} vanishes: {}", g.substitute(&images)?.is_zero());
    }
    match parse_file("ring GF(31991) vars x y;\nideal I = x^2 +;") {
        Err(e) => println!("bad input: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
