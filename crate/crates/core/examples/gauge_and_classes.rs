//! The gauge of a bounded net and membership in M ⊇ M_cy ⊇ M_ct ⊇ M_0.
//!
//! `cargo run --release --example gauge_and_classes`

use netdensity::directed::{DirectedSet, TruncationPolicy};
use netdensity::fixtures::is_square;
use netdensity::nets::Net;
use netdensity::netspace::{classify, gauge, gauge_scaling_property, in_n_u, BalancedNeighborhood, ClassifyOptions};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let policy = TruncationPolicy::new(5000, 10_000)?;
    let ball = BalancedNeighborhood::new(1.0)?;

    let nets = [
        ("0", Net::constant(DirectedSet::Naturals, vec![0.0])),
        ("1/n", Net::scalar(DirectedSet::Naturals, |e| 1.0 / e.coords()[0] as f64)),
        ("1, or 2 on squares", Net::scalar(DirectedSet::Naturals, |e| if is_square(e.coords()[0]) { 2.0 } else { 1.0 })),
        ("(-1)^n", Net::scalar(DirectedSet::Naturals, |e| if e.coords()[0] % 2 == 0 { 1.0 } else { -1.0 })),
    ];
    println!("{:<20} {:>6} {:>5}  M  M_cy M_ct M_0", "net", "gauge", "N_U");
    for (name, net) in &nets {
        let g = gauge(net, &ball, &policy)?;
        let c = classify(net, &policy, &ClassifyOptions::default())?;
        assert!(c.chain_holds());
        let flag = |b: bool| if b { "✓" } else { "·" };
        println!(
            "{name:<20} {:>6} {:>5}  {}  {}    {}    {}",
            g.to_string(),
            in_n_u(net, &ball, &policy)?,
            flag(c.in_m),
            flag(c.in_m_cy),
            flag(c.in_m_ct),
            flag(c.in_m_0)
        );
    }

    let s = gauge_scaling_property(&nets[1].1, &ball, -4.0, &policy)?;
    println!("gauge(-4 · 1/n) = {} = {} / 4: {}", s.scaled, s.original, s.holds);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
