//! Statistically Cauchy nets: witness search, the link with convergence, pair
//! densities, products and uniformly continuous images.
//!
//! `cargo run --release --example statistical_cauchy`

use netdensity::directed::{DirectedSet, Element, TruncationPolicy};
use netdensity::fixtures;
use netdensity::nets::{
    cauchy_product_checks, convergent_implies_cauchy, pairwise_bound, stat_cauchy, uc_map_cauchy, IndexMode, Net,
    DEFAULT_TOL,
};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let policy = TruncationPolicy::new(2000, 4000)?;
    let inv = Net::scalar(DirectedSet::Naturals, |e| 1.0 / e.coords()[0] as f64);
    let alt = Net::scalar(DirectedSet::Naturals, |e| if e.coords()[0] % 2 == 0 { 1.0 } else { -1.0 });

    for (name, net) in [("1/n", &inv), ("(-1)^n", &alt)] {
        let v = stat_cauchy(net, 1.0, &policy, DEFAULT_TOL)?;
        let witness = v.witness.map_or_else(|| "none".to_string(), |w| w.to_string());
        println!("{name:<7} Cauchy at eps 1: {} (witness {witness}, {} candidates)", v.cauchy, v.candidates_tried);
    }

    for seed in 0..4 {
        let f = fixtures::stat_convergent(seed);
        let r = convergent_implies_cauchy(&f.net, &f.limit, 0.1, &f.policy, DEFAULT_TOL)?;
        println!(
            "{:<48} witness {:<8} containment {}/{} ok",
            f.label,
            r.witness.map_or_else(|| "-".into(), |w| w.to_string()),
            r.containment_checked - r.containment_violations,
            r.containment_checked
        );
    }

    let small = TruncationPolicy::new(60, 120)?;
    let b = pairwise_bound(&alt, &Element::single(3), 1.0, &small)?;
    println!("(-1)^n pairs: upper {:.3} ≤ 2 · {:.3}: {}", b.pair.upper_est, b.single.upper_est, b.holds);

    let r = cauchy_product_checks(&inv, &alt, IndexMode::Shared, 1.0, &policy, DEFAULT_TOL)?;
    println!("zip(1/n, (-1)^n): combined {}, parts {} {}, consistent {}", r.combined.cauchy, r.x.cauchy, r.y.cauchy, r.consistent);

    let r = uc_map_cauchy(|t| vec![t[0].sin()], 1, |eps| eps, &inv, 0.1, &policy, DEFAULT_TOL)?;
    println!("sin(1/n) keeps the witness {:?}: {}", r.premise.witness.map(|w| w.to_string()), r.passed);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
