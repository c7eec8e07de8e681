//! Directed-set families: order, down-sets, joins and the sampled axiom check.
//!
//! `cargo run --example directed_sets`

use netdensity::directed::{validate_axioms, DirectedSet, Element, TruncationPolicy};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    for spec in ["N", "N^2", "div", "div1", "prod(N,div)"] {
        let ds: DirectedSet = spec.parse()?;
        println!("{spec}: arity {}, least element {}", ds.arity(), ds.min_element());
    }

    let div = DirectedSet::Divisibility;
    let twelve = Element::single(12);
    let below: Vec<String> = div.down_set(&twelve)?.iter().map(|e| e.to_string()).collect();
    println!("divisors of 12: {}", below.join(" "));
    println!("4 ∨ 6 = {}", div.join(&4.into(), &6.into())?);
    println!("4 ≤ 12? {}  5 ≤ 12? {}", div.leq(&4.into(), &twelve)?, div.leq(&5.into(), &twelve)?);

    let grid = DirectedSet::Grid(2);
    let b: Element = "(3,4)".parse()?;
    println!("|D_(3,4)| in N^2 = {}", grid.down_set_size(&b)?);

    let policy = TruncationPolicy::new(25, 50)?;
    let report = validate_axioms(&div, &policy)?;
    for check in &report.checks {
        println!("  {:<18} {} ({} instances)", check.axiom.to_string(), if check.passed { "ok" } else { "FAIL" }, check.checked);
    }
    assert!(report.passed());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
