//! Seeded nets with known statistical behaviour, for property tests and demos.
//!
//! A statistically convergent fixture is an ordinarily convergent base net
//! `c + a / t^p` (with `t = n`, or `t = x1 + x2` on `N^2`) that is overwritten
//! by an arbitrary bump on a density-zero set: the perfect squares on `N`, the
//! diagonal on `N^2`. Its statistical limit is `c`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::directed::{DirectedSet, Element, TruncationPolicy};
use crate::nets::{Net, Point};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FixtureFamily {
    Naturals,
    Grid2,
}

#[derive(Clone, Debug)]
pub struct Fixture {
    pub net: Net,
    pub limit: Point,
    /// A policy at which the fixture resolves with the default tolerances.
    pub policy: TruncationPolicy,
    pub label: String,
}

pub fn is_square(n: u64) -> bool {
    let r = (n as f64).sqrt().round() as u64;
    r.checked_mul(r) == Some(n)
}

/// Horizons at which every fixture's exceptional sets resolve below the
/// default tolerance at `eps ≥ 0.05`.
pub fn fixture_policy(family: FixtureFamily) -> TruncationPolicy {
    match family {
        FixtureFamily::Naturals => TruncationPolicy::new(5000, 10_000),
        FixtureFamily::Grid2 => TruncationPolicy::new(60, 120),
    }
    .expect("valid fixture policy")
}

/// A statistically convergent fixture with the given limit.
pub fn stat_convergent_with_limit(family: FixtureFamily, limit: f64, seed: u64) -> Fixture {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sign = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
    let bump: f64 = rng.gen_range(1.0..5.0) * sign;
    let (net, label) = match family {
        FixtureFamily::Naturals => {
            let a: f64 = rng.gen_range(0.5..2.0) * sign;
            let p: f64 = rng.gen_range(1.0..2.0);
            let net = Net::scalar(DirectedSet::Naturals, move |e: &Element| {
                let n = e.coords()[0];
                if is_square(n) {
                    limit + bump
                } else {
                    limit + a / (n as f64).powf(p)
                }
            });
            (net, format!("{limit} + {a:.3}/n^{p:.3}, {bump:+.3} on squares"))
        }
        FixtureFamily::Grid2 => {
            let a: f64 = rng.gen_range(0.5..1.5) * sign;
            let p: f64 = rng.gen_range(1.5..3.0);
            let net = Net::scalar(DirectedSet::Grid(2), move |e: &Element| {
                let c = e.coords();
                if c[0] == c[1] {
                    limit + bump
                } else {
                    limit + a / ((c[0] + c[1]) as f64).powf(p)
                }
            });
            (net, format!("{limit} + {a:.3}/(x1+x2)^{p:.3}, {bump:+.3} on the diagonal"))
        }
    };
    Fixture {
        net,
        limit: vec![limit],
        policy: fixture_policy(family),
        label,
    }
}

/// The `seed`-th fixture of the generated family: alternates between `N` and
/// `N^2`, with a limit drawn from `[-3, 3]`.
pub fn stat_convergent(seed: u64) -> Fixture {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let limit = (rng.gen_range(-3.0f64..3.0) * 8.0).round() / 8.0;
    let family = if seed % 2 == 0 {
        FixtureFamily::Naturals
    } else {
        FixtureFamily::Grid2
    };
    stat_convergent_with_limit(family, limit, seed)
}

/// A net on `N` with independent values in `[-1, 1]` (repeating past `len`).
pub fn bounded_random_net(seed: u64, len: usize) -> (Net, Vec<f64>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let table: Vec<f64> = (0..len.max(1)).map(|_| rng.gen_range(-1.0..=1.0)).collect();
    let t = table.clone();
    let net = Net::scalar(DirectedSet::Naturals, move |e: &Element| {
        t[(e.coords()[0] as usize - 1) % t.len()]
    });
    (net, table)
}
