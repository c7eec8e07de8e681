//! The naturals ordered by divisibility: down-sets are divisor sets, so the
//! density ratio of the odd numbers at `2^k` is `1/(k+1)` and at any odd `m`
//! it is `1`.
//!
//! `cargo run --release --example divisor_lattice`

use netdensity::density::{condition_star, density, ratio, SetPredicate};
use netdensity::directed::{divisor_count, DirectedSet, Element, TruncationPolicy};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let div = DirectedSet::Divisibility;
    let odd = SetPredicate::new(|e| e.coords()[0] % 2 == 1);

    for k in [1u32, 5, 10, 20] {
        let m = 1u64 << k;
        println!("2^{k:<2}: τ = {:>2}, ratio {}", divisor_count(m), ratio(&odd, &Element::single(m), &div)?);
    }
    println!("3^13: ratio {}", ratio(&odd, &Element::single(3u64.pow(13)), &div)?);

    // Frontier defaults to ⌊√H⌋ so that any two frontier elements have their
    // least common multiple inside the horizon.
    let policy = TruncationPolicy::for_family(&div, 1 << 16)?;
    let report = density(&odd, &div, &policy)?;
    for s in &report.steps {
        println!("F={:<4} H={:<6} lower={} upper={}", s.frontier, s.horizon, s.lower, s.upper);
    }

    let div1 = DirectedSet::DivisibilityExcludingOne;
    let policy = TruncationPolicy::for_family(&div1, 10_000)?;
    for g in [2u64, 3, 5, 7] {
        let star = condition_star(&Element::single(g), &div1, &policy)?;
        println!("up-set of {g} in div1: upper density ≈ {:.3}, positive: {}", star.limsup_est, star.holds);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
