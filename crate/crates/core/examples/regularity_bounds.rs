//! Bounds on the regularity from numerical invariants, checked against
//! computed values and against published invariants.

use curvereg::bounds::{arithmetic_suite, bound_report, check_row, verdict, BoundInputs, Flags};
use curvereg::constructions::fixtures::fixture;
use curvereg::reproduce::{curve_invariants, Want};
use curvereg::PrimeField;

fn main() -> curvereg::Result<()> {
    let fx = fixture(PrimeField::default_field(), "ex42-3", 0)?;
    let inv = curve_invariants(fx.ideal().unwrap(), 0, 3, false, Want { alpha: true, ..Want::default() })?;
    let inputs = BoundInputs {
        n: 4,
        deg: inv.degree as u64,
        rho: inv.rho,
        alpha_i: inv.alpha_i,
        omega_i: inv.omega_i,
        alpha: inv.alpha.clone(),
        generator_degrees: inv.generator_degrees.clone(),
        flags: Flags::default(),
    };
    let report = verdict(bound_report(&inputs), inv.reg)?;
    println!("computed reg {}", inv.reg);
    for b in &report.entries {
        match b.value {
            Some(v) => println!("  {:<10} {v}{}", b.name, if b.sharp == Some(true) { " (sharp)" } else { "" }),
            None => println!("  {:<10} n/a: {}", b.name, b.reason.as_deref().unwrap_or("")),
        }
    }

    println!("published invariants:");
    for row in arithmetic_suite() {
        let out = check_row(&row);
        println!("  {:<12} {}", out.name, if out.passed { "ok".to_string() } else { out.mismatches.join("; ") });
    }
    Ok(())
}
