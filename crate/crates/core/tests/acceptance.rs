//! Acceptance criteria: one PASS/FAIL line each; exits non-zero if any fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use netdensity::density::{
    condition_star, density, liminf_estimate, ratio, union_complement_ratios, Existence, SetPredicate,
};
use netdensity::directed::{DirectedSet, Element, TruncationPolicy};
use netdensity::fixtures::{bounded_random_net, stat_convergent, stat_convergent_with_limit, FixtureFamily};
use netdensity::nets::{
    add_nets, convergent_implies_cauchy, detect_limit, pair_net, project_verdict, scale_nets, stat_converges_to,
    zip_net, IndexMode, Net, Scalar, DEFAULT_EPS, DEFAULT_TOL,
};
use netdensity::netspace::{classify, gauge, gauge_scaling_property, BalancedNeighborhood, ClassifyOptions, GaugeValue};
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn within(t: Instant, limit: Duration) -> (bool, String) {
    let e = t.elapsed();
    (e <= limit, format!("{:.2}s of {}s", e.as_secs_f64(), limit.as_secs()))
}

fn diagonal_of_n3() -> Outcome {
    let t = Instant::now();
    let diag = SetPredicate::new(|e: &Element| e.coords()[0] == e.coords()[1] && e.coords()[1] == e.coords()[2]);
    let r = density(&diag, &DirectedSet::Grid(3), &TruncationPolicy::new(25, 50).unwrap()).map_err(|e| e.to_string())?;
    let (fast, time) = within(t, Duration::from_secs(5));
    check(
        r.upper_est <= 0.03 && r.lower_est <= r.upper_est && fast,
        format!("lower={:.6} upper={:.6}, {time}", r.lower_est, r.upper_est),
    )
}

fn evens() -> Outcome {
    let t = Instant::now();
    let evens = SetPredicate::new(|e: &Element| e.coords()[0] % 2 == 0);
    let r = density(&evens, &DirectedSet::Naturals, &TruncationPolicy::new(5000, 10_000).unwrap())
        .map_err(|e| e.to_string())?;
    let (fast, time) = within(t, Duration::from_secs(1));
    let close = (r.lower_est - 0.5).abs() <= 0.01 && (r.upper_est - 0.5).abs() <= 0.01;
    check(
        close && r.exists == Existence::Exists && fast,
        format!("lower={:.6} upper={:.6} {}, {time}", r.lower_est, r.upper_est, r.exists),
    )
}

fn odd_under_divisibility() -> Outcome {
    let t = Instant::now();
    let ds = DirectedSet::Divisibility;
    let odd = SetPredicate::new(|e: &Element| e.coords()[0] % 2 == 1);
    let at_two = ratio(&odd, &Element::single(1 << 20), &ds).map_err(|e| e.to_string())?;
    let at_three = ratio(&odd, &Element::single(3u64.pow(13)), &ds).map_err(|e| e.to_string())?;
    let policy = TruncationPolicy::for_family(&ds, 1 << 20).map_err(|e| e.to_string())?;
    let r = density(&odd, &ds, &policy).map_err(|e| e.to_string())?;
    let (fast, time) = within(t, Duration::from_secs(10));
    let ratios = at_two == Ratio::new(1, 21) && at_three == Ratio::from_integer(1);
    let split = r.exists == Existence::DoesNotExist && r.lower_est <= 0.05 && r.upper_est >= 0.95;
    check(
        ratios && split && fast,
        format!(
            "ratios {at_two} and {at_three}; estimates at F={} lower={:.6} upper={:.6} {}, {time}",
            policy.frontier(),
            r.lower_est,
            r.upper_est,
            r.exists
        ),
    )
}

fn up_set_in_grid() -> Outcome {
    let ds = DirectedSet::Grid(2);
    let gamma = Element::new(&[2, 2]);
    let up = SetPredicate::up_set(&ds, &gamma);
    let r = density(&up, &ds, &TruncationPolicy::new(100, 200).unwrap()).map_err(|e| e.to_string())?;
    let corner = ratio(&up, &Element::new(&[200, 200]), &ds).map_err(|e| e.to_string())?;
    check(
        r.lower_est >= 0.95 && corner == Ratio::new(199 * 199, 200 * 200),
        format!("lower={:.6} corner={corner}", r.lower_est),
    )
}

fn div1_up_sets() -> Outcome {
    let ds = DirectedSet::DivisibilityExcludingOne;
    let policy = TruncationPolicy::for_family(&ds, 10_000).unwrap();
    let mut ok = true;
    let mut parts = Vec::new();
    for g in [2u64, 3, 5] {
        let s = condition_star(&Element::single(g), &ds, &policy).map_err(|e| e.to_string())?;
        ok &= s.holds && s.limsup_est >= 0.5;
        parts.push(format!("{g}:{:.4}", s.limsup_est));
    }
    check(ok, parts.join(" "))
}

fn convergent_is_cauchy() -> Outcome {
    let t = Instant::now();
    let mut failed = Vec::new();
    for seed in 0..100 {
        let f = stat_convergent(seed);
        let r = convergent_implies_cauchy(&f.net, &f.limit, 0.1, &f.policy, DEFAULT_TOL).map_err(|e| e.to_string())?;
        if !r.passed {
            failed.push(seed);
        }
    }
    let (fast, time) = within(t, Duration::from_secs(30));
    check(failed.is_empty() && fast, format!("{} of 100 fixtures failed {failed:?}, {time}", failed.len()))
}

fn projections_agree() -> Outcome {
    let mut mismatches = 0;
    let mut max_gap: f64 = 0.0;
    for i in 0..25u64 {
        let (net, limit, policy, eps, x, y) = if i % 2 == 0 {
            let x = stat_convergent(2 * i);
            let y = stat_convergent(2 * i + 100);
            let z = zip_net(&x.net, &y.net).map_err(|e| e.to_string())?;
            let limit = [x.limit.clone(), y.limit.clone()].concat();
            (z, limit, x.policy.clone(), DEFAULT_EPS.to_vec(), x, y)
        } else {
            let x = stat_convergent_with_limit(FixtureFamily::Naturals, 0.25 * i as f64, i);
            let y = stat_convergent_with_limit(FixtureFamily::Naturals, -0.5, i + 1000);
            let limit = [x.limit.clone(), y.limit.clone()].concat();
            (pair_net(&x.net, &y.net), limit, TruncationPolicy::new(150, 300).unwrap(), vec![0.5, 0.2], x, y)
        };
        let v = stat_converges_to(&net, &limit, &eps, &policy, DEFAULT_TOL).map_err(|e| e.to_string())?;
        let (px, py) = project_verdict(&net, &v).map_err(|e| e.to_string())?;
        for (projected, component) in [(px, &x), (py, &y)] {
            let direct = stat_converges_to(&component.net, &component.limit, &eps, &policy, DEFAULT_TOL)
                .map_err(|e| e.to_string())?;
            if projected.converges != direct.converges {
                mismatches += 1;
            }
            for (a, b) in projected.per_eps.iter().zip(&direct.per_eps) {
                max_gap = max_gap.max((a.1.upper_est - b.1.upper_est).abs());
            }
        }
    }
    check(
        mismatches == 0 && max_gap <= 1e-12,
        format!("{mismatches} verdict mismatches, max upper-estimate gap {max_gap:e}"),
    )
}

fn linearity() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for (k, (lx, ly)) in [(0.0, 1.0), (2.0, 3.0)].into_iter().enumerate() {
        let x = stat_convergent_with_limit(FixtureFamily::Naturals, lx, 40 + k as u64);
        let y = stat_convergent_with_limit(FixtureFamily::Naturals, ly, 50 + k as u64);
        let sum = add_nets(&x.net, &y.net, IndexMode::Shared).map_err(|e| e.to_string())?;
        let prod = scale_nets(&Scalar::Net(x.net.clone()), &y.net, IndexMode::Shared).map_err(|e| e.to_string())?;
        let ds = detect_limit(&sum, &DEFAULT_EPS, &x.policy, DEFAULT_TOL).map_err(|e| e.to_string())?;
        let dp = detect_limit(&prod, &DEFAULT_EPS, &x.policy, DEFAULT_TOL).map_err(|e| e.to_string())?;
        let (s, p) = (ds.limit[0], dp.limit[0]);
        ok &= (s - (lx + ly)).abs() <= 0.02 && (p - lx * ly).abs() <= 0.02;
        parts.push(format!("x={lx} y={ly}: sum→{s:.4} product→{p:.4}"));
    }
    check(ok, parts.join("; "))
}

fn random_set(seed: u64) -> SetPredicate {
    SetPredicate::new(move |e: &Element| {
        let mut h = seed;
        for &c in e.coords() {
            h = (h ^ c).wrapping_mul(0x0100_0000_01b3);
            h ^= h >> 31;
        }
        h % 3 == 0
    })
}

fn union_complement() -> Outcome {
    let families = [
        DirectedSet::Naturals,
        DirectedSet::Grid(2),
        DirectedSet::Grid(3),
        DirectedSet::Divisibility,
        DirectedSet::DivisibilityExcludingOne,
        DirectedSet::product(DirectedSet::Naturals, DirectedSet::Divisibility),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut failures = 0;
    for _ in 0..1000 {
        let ds = &families[rng.gen_range(0..families.len())];
        let min = ds.min_element();
        let coords: Vec<u64> = min.coords().iter().map(|m| m + rng.gen_range(0..30)).collect();
        let beta = Element::new(&coords);
        let (a, b) = (random_set(rng.gen()), random_set(rng.gen()));
        let u = union_complement_ratios(&a, &b, &beta, ds).map_err(|e| e.to_string())?;
        if !(u.subadditive() && u.complement_identity()) {
            failures += 1;
        }
    }
    check(failures == 0, format!("{failures} of 1000 triples violate an identity"))
}

fn gauge_properties() -> Outcome {
    let policy = TruncationPolicy::new(100, 200).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut bad = 0;
    for seed in 0..100 {
        let (net, _) = bounded_random_net(seed, 200);
        let c = rng.gen_range(0.1..10.0) * if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
        let r = rng.gen_range(0.1..5.0);
        let u = BalancedNeighborhood::new(r).unwrap();
        let u2 = BalancedNeighborhood::new(2.0 * r).unwrap();
        let scaling = gauge_scaling_property(&net, &u, c, &policy).map_err(|e| e.to_string())?;
        let g1 = gauge(&net, &u, &policy).map_err(|e| e.to_string())?.value();
        let g2 = gauge(&net, &u2, &policy).map_err(|e| e.to_string())?.value();
        if !scaling.holds || g2 != 2.0 * g1 {
            bad += 1;
        }
    }
    let zero = Net::constant(DirectedSet::Naturals, vec![0.0]);
    let zero_gauge = gauge(&zero, &BalancedNeighborhood::new(1.0).unwrap(), &policy).map_err(|e| e.to_string())?;
    let mut chain_violations = 0;
    let opts = ClassifyOptions::default();
    for seed in 0..12 {
        let f = stat_convergent(seed);
        if !classify(&f.net, &f.policy, &opts).map_err(|e| e.to_string())?.chain_holds() {
            chain_violations += 1;
        }
        let (net, _) = bounded_random_net(seed, 50);
        if !classify(&net, &TruncationPolicy::new(1000, 2000).unwrap(), &opts).map_err(|e| e.to_string())?.chain_holds() {
            chain_violations += 1;
        }
    }
    check(
        bad == 0 && zero_gauge == GaugeValue::Infinite && chain_violations == 0,
        format!("{bad} of 100 nets break scaling or linearity; zero net gauge {zero_gauge}; {chain_violations} chain violations"),
    )
}

fn liminf_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut mismatches = 0;
    for seed in 0..50 {
        let h = rng.gen_range(2..=200u64);
        let f = rng.gen_range(1..=h);
        let (net, values) = bounded_random_net(1000 + seed, h as usize);
        let policy = TruncationPolicy::single(f, h).unwrap();
        let est = liminf_estimate(|e: &Element| net.eval(e)[0], &DirectedSet::Naturals, &policy)
            .map_err(|e| e.to_string())?
            .value;
        let mut oracle = f64::NEG_INFINITY;
        for beta in 1..=f as usize {
            let mut m = f64::INFINITY;
            for alpha in beta..=h as usize {
                m = m.min(values[alpha - 1]);
            }
            oracle = oracle.max(m);
        }
        if est != oracle {
            mismatches += 1;
        }
    }
    check(mismatches == 0, format!("{mismatches} of 50 nets differ from the double loop"))
}

fn paper_examples_golden() -> Outcome {
    let base = std::env::temp_dir().join(format!("netdensity-acceptance-{}", std::process::id()));
    let dirs = [base.join("a"), base.join("b")];
    for d in &dirs {
        let o = Command::new(env!("CARGO_BIN_EXE_netdensity"))
            .args(["paper-examples", "--out"])
            .arg(d)
            .output()
            .map_err(|e| e.to_string())?;
        let rows_pass = String::from_utf8_lossy(&o.stdout)
            .lines()
            .filter(|l| !l.starts_with("note:"))
            .all(|l| l.starts_with("pass "));
        if o.status.code() != Some(0) || !rows_pass {
            return Err(format!("exit {:?}, every row pass: {rows_pass}", o.status.code()));
        }
    }
    let mut files = 0;
    let mut identical = true;
    for entry in std::fs::read_dir(&dirs[0]).map_err(|e| e.to_string())? {
        let name = entry.map_err(|e| e.to_string())?.file_name();
        files += 1;
        identical &= std::fs::read(dirs[0].join(&name)).ok() == std::fs::read(dirs[1].join(&name)).ok();
    }
    let _ = std::fs::remove_dir_all(&base);
    check(identical && files > 0, format!("{files} golden files, byte-identical: {identical}"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("diagonal of N^3 has vanishing upper density", diagonal_of_n3),
        ("even numbers have density 1/2", evens),
        ("odd numbers under divisibility: ratios and non-existence", odd_under_divisibility),
        ("up-set of (2,2) in N^2 has density 1", up_set_in_grid),
        ("up-sets in div1 have positive upper density", div1_up_sets),
        ("statistically convergent fixtures are statistically Cauchy", convergent_is_cauchy),
        ("projections of pair and zip verdicts match the components", projections_agree),
        ("limits of sums and products", linearity),
        ("union and complement identities on exact ratios", union_complement),
        ("gauge scaling, radius linearity and the class chain", gauge_properties),
        ("liminf estimate matches a double-loop oracle", liminf_oracle),
        ("paper-examples passes with reproducible golden files", paper_examples_golden),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
