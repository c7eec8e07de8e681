//! Truncated liminf / limsup of real-valued nets, across refinement steps.
//!
//! `cargo run --example limit_estimates`

use netdensity::density::limit_estimates;
use netdensity::directed::{DirectedSet, TruncationPolicy};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let n = DirectedSet::Naturals;
    let policy = TruncationPolicy::new(500, 1000)?;

    let nets: [(&str, fn(u64) -> f64); 3] = [
        ("(-1)^n", |n| if n % 2 == 0 { 1.0 } else { -1.0 }),
        ("(-1)^n / n", |n| if n % 2 == 0 { 1.0 } else { -1.0 } / n as f64),
        ("sin n", |n| (n as f64).sin()),
    ];
    for (name, f) in nets {
        let (lo, hi) = limit_estimates(|e| f(e.coords()[0]), &n, &policy)?;
        let steps: Vec<String> = lo
            .steps
            .iter()
            .zip(&hi.steps)
            .map(|(l, h)| format!("H={}: [{:+.4}, {:+.4}]", l.horizon, l.value, h.value))
            .collect();
        println!("{name:<11} {}", steps.join("  "));
    }

    // On N^2 the tail of 1/(x1 + x2) shrinks in both coordinates.
    let grid = DirectedSet::Grid(2);
    let (lo, hi) = limit_estimates(
        |e| 1.0 / (e.coords()[0] + e.coords()[1]) as f64,
        &grid,
        &TruncationPolicy::new(50, 100)?,
    )?;
    println!("1/(x1+x2) on N^2: liminf {:.4}, limsup {:.4}", lo.value, hi.value);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
