//! Statistical convergence of nets, and the constructions that preserve it.
//!
//! `cargo run --release --example statistical_convergence`

use netdensity::directed::{DirectedSet, TruncationPolicy};
use netdensity::fixtures::is_square;
use netdensity::nets::{
    add_nets, detect_limit, map_net, pair_net, project_verdict, scale_nets, stat_converges_to, uniqueness_check,
    zip_net, IndexMode, Net, Scalar, DEFAULT_EPS, DEFAULT_TOL,
};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let policy = TruncationPolicy::new(5000, 10_000)?;
    let inv = Net::scalar(DirectedSet::Naturals, |e| 1.0 / e.coords()[0] as f64);

    // Not convergent in the ordinary sense, but the bad indices have density 0.
    let bumped = Net::scalar(DirectedSet::Naturals, |e| {
        let n = e.coords()[0];
        if is_square(n) {
            1.0
        } else {
            1.0 / n as f64
        }
    });
    let v = stat_converges_to(&bumped, &[0.0], &DEFAULT_EPS, &policy, DEFAULT_TOL)?;
    for (eps, r) in &v.per_eps {
        println!("eps {eps:<5} exceptional density ≤ {:.4}", r.upper_est);
    }
    println!("bumped net → 0 statistically: {}", v.converges);

    let alt = Net::scalar(DirectedSet::Naturals, |e| if e.coords()[0] % 2 == 0 { 1.0 } else { -1.0 });
    let u = uniqueness_check(&alt, &[1.0], &[-1.0], &[1.0], &policy, DEFAULT_TOL)?;
    println!("(-1)^n: converges to 1? {}  to -1? {}", u.x.converges, u.y.converges);

    // A pair indexed by N × N, and its projections.
    let small = TruncationPolicy::new(250, 500)?;
    let pair = pair_net(&inv, &alt);
    let v = stat_converges_to(&pair, &[0.0, 1.0], &[0.5], &small, DEFAULT_TOL)?;
    let (vx, vy) = project_verdict(&pair, &v)?;
    println!("(1/n, (-1)^m): pair {}, first {}, second {}", v.converges, vx.converges, vy.converges);

    let z = zip_net(&inv, &inv)?;
    println!("zip(1/n, 1/n) → (0,0): {}", stat_converges_to(&z, &[0.0, 0.0], &DEFAULT_EPS, &policy, DEFAULT_TOL)?.converges);

    let squared = map_net(|t| vec![t[0] * t[0]], 1, &bumped);
    println!("square of the bumped net → 0: {}", stat_converges_to(&squared, &[0.0], &DEFAULT_EPS, &policy, DEFAULT_TOL)?.converges);

    let x = Net::scalar(DirectedSet::Naturals, |e| 2.0 + 1.0 / e.coords()[0] as f64);
    let y = Net::scalar(DirectedSet::Naturals, |e| 3.0 + 1.0 / e.coords()[0] as f64);
    let sum = add_nets(&x, &y, IndexMode::Shared)?;
    let product = scale_nets(&Scalar::Net(x), &y, IndexMode::Shared)?;
    let long = TruncationPolicy::new(10_000, 20_000)?;
    println!("detected limit of x + y: {:.4} (heuristic)", detect_limit(&sum, &DEFAULT_EPS, &long, DEFAULT_TOL)?.limit[0]);
    println!("detected limit of x · y: {:.4} (heuristic)", detect_limit(&product, &DEFAULT_EPS, &long, DEFAULT_TOL)?.limit[0]);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
