//! Product directed sets: densities of cylinders `A × D` and of products `A × B`.
//!
//! `cargo run --release --example product_sets`

use netdensity::density::{density, product_density_check, AnalyticDensity, SetPredicate};
use netdensity::directed::{DirectedSet, TruncationPolicy};
use netdensity::fixtures::is_square;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let n = DirectedSet::Naturals;
    let evens = SetPredicate::new(|e| e.coords()[0] % 2 == 0);
    let threes = SetPredicate::new(|e| e.coords()[0] % 3 == 0);
    let policy = TruncationPolicy::new(100, 200)?;

    let check = product_density_check(&evens, Some(&threes), &n, &n, &policy)?;
    println!("evens:              {:.4}", check.factor.upper_est);
    println!("evens × N:          {:.4}", check.cylinder.upper_est);
    println!("factor vs cylinder: {:.2e}", check.discrepancy);

    // A density-zero factor makes every product A × B density zero.
    let squares = SetPredicate::new(|e| is_square(e.coords()[0])).with_analytic(AnalyticDensity::exact(0.0));
    let check = product_density_check(&squares, Some(&threes), &n, &n, &policy)?;
    if let Some(p) = &check.product {
        println!("squares × threes:   [{:.4}, {:.4}]", p.lower_est, p.upper_est);
    }

    let mixed = DirectedSet::product(n.clone(), DirectedSet::Divisibility);
    let even_first = SetPredicate::new(|e| e.coords()[0] % 2 == 0);
    let r = density(&even_first, &mixed, &TruncationPolicy::for_family(&mixed, 256)?)?;
    println!("N × div, even first coordinate: [{:.4}, {:.4}] {}", r.lower_est, r.upper_est, r.exists);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
