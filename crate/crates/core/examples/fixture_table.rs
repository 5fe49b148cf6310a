//! Rebuilds the example curves and compares them with their records.
//!
//! `cargo run --example fixture_table -- [seed] [qq] [name,name,...]`

use curvereg::reproduce::{check_fixture, fast_fixture_names, FixtureCheck};
use curvereg::{PrimeField, Rationals};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let seed = args.first().and_then(|s| s.parse().ok()).unwrap_or(0);
    let qq = args.iter().any(|a| a == "qq");
    let names: Vec<String> = match args.iter().find(|a| a.contains('-')) {
        Some(list) => list.split(',').map(String::from).collect(),
        None => fast_fixture_names().into_iter().map(String::from).collect(),
    };
    for name in &names {
        let c: FixtureCheck = if qq {
            check_fixture(Rationals, name, seed, 3)
        } else {
            check_fixture(PrimeField::default_field(), name, seed, 3)
        };
        let status = if c.passed() { "pass" } else { "FAIL" };
        println!("{name:<22} {status} ({} values, {:.2}s)", c.rows.len(), c.seconds);
        for r in c.rows.iter().filter(|r| !r.pass) {
            println!("    {}: expected {}, computed {}", r.invariant, r.expected, r.computed);
        }
        if let Some(e) = c.error {
            println!("    error: {e}");
        }
    }
}
