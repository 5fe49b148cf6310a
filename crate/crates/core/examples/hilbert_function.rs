//! Hilbert series, Hilbert polynomial and the index where they agree.

use curvereg::{HilbertProfile, Ideal, MonomialIdeal, PolyRing, PrimeField};

fn main() -> curvereg::Result<()> {
    let m = MonomialIdeal::from_exps(5, &[&[2, 0, 0, 0, 0], &[0, 3, 0, 0, 0], &[0, 0, 4, 0, 0], &[0, 1, 2, 1, 0], &[1, 2, 1, 0, 0]]);
    let h = HilbertProfile::of_monomial_ideal(&m);
    println!("monomial curve: numerator {:?}", h.numerator);
    println!("  dim {}, degree {}, P(t) = {}", h.dim, h.degree, h.polynomial);
    println!("  H(t) for t = 0..: {:?}", h.values);
    println!("  H and P agree from t = {}", h.rho);

    let r = PolyRing::standard(PrimeField::default_field(), 4);
    let i = Ideal::from_strs(&r, &["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"])?;
    let h = i.hilbert()?;
    println!("twisted cubic: P(t) = {}, rho = {}, first differences {:?}", h.polynomial, h.rho, (0..5).map(|t| h.delta(t)).collect::<Vec<_>>());
    Ok(())
}
