//! Exact density ratios and truncated density reports.
//!
//! `cargo run --example density_ratios`

use netdensity::density::{density, ratio, union_complement_ratios, SetPredicate};
use netdensity::directed::{DirectedSet, Element, TruncationPolicy};
use netdensity::report::write_density_csv;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let evens = SetPredicate::new(|e| e.coords()[0] % 2 == 0);
    let n = DirectedSet::Naturals;
    println!("|evens ∩ D_10| / |D_10| = {}", ratio(&evens, &10.into(), &n)?);

    let report = density(&evens, &n, &TruncationPolicy::new(5000, 10_000)?)?;
    println!("evens: lower {:.4} upper {:.4} ({})", report.lower_est, report.upper_est, report.exists);

    // Diagonal of N^3: the ratio at the corner (m,m,m) is 1/m².
    let cube = DirectedSet::Grid(3);
    let diagonal = SetPredicate::new(|e| {
        let c = e.coords();
        c[0] == c[1] && c[1] == c[2]
    });
    println!("diagonal at (4,4,4): {}", ratio(&diagonal, &[4, 4, 4].into(), &cube)?);
    let report = density(&diagonal, &cube, &TruncationPolicy::single(2, 4)?)?;
    write_density_csv(&report, 3, std::io::stdout().lock())?;

    // Exact identities at one element.
    let threes = SetPredicate::new(|e| e.coords()[0] % 3 == 0);
    let u = union_complement_ratios(&evens, &threes, &Element::single(30), &n)?;
    println!("union {} ≤ sum {}: {}; complement identity: {}", u.union, u.sum, u.subadditive(), u.complement_identity());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
