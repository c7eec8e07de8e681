//! Properties of statistical convergence that hold for every seeded fixture.

use netdensity::directed::{DirectedSet, Element, TruncationPolicy};
use netdensity::fixtures::{stat_convergent, stat_convergent_with_limit, FixtureFamily};
use netdensity::nets::{
    add_nets, convergent_implies_cauchy, exceptional_set, pair_net, project_verdict, scale_nets,
    stat_converges_to, uniqueness_check, zip_net, IndexMode, Net, Scalar, DEFAULT_TOL,
};

fn n_policy() -> TruncationPolicy {
    TruncationPolicy::new(2000, 4000).unwrap()
}

#[test]
fn ordinary_convergence_implies_statistical() {
    let nets = [
        (Net::scalar(DirectedSet::Naturals, |e: &Element| 1.0 / e.coords()[0] as f64), 0.0),
        (Net::scalar(DirectedSet::Naturals, |e: &Element| 2.0 - 3.0 / e.coords()[0] as f64), 2.0),
        (Net::scalar(DirectedSet::Naturals, |e: &Element| (e.coords()[0] as f64).sin() / e.coords()[0] as f64), 0.0),
    ];
    for (net, x) in &nets {
        let v = stat_converges_to(net, &[*x], &[0.5, 0.1], &n_policy(), DEFAULT_TOL).unwrap();
        assert!(v.converges);
        // Finite exceptional sets: the estimate only shrinks as F grows.
        for (_, r) in &v.per_eps {
            let uppers: Vec<f64> = r.steps.iter().map(|s| netdensity::density::to_f64(s.upper)).collect();
            assert!(uppers.windows(2).all(|w| w[1] <= w[0]), "{uppers:?}");
        }
    }
}

#[test]
fn zipped_exceptional_set_is_the_union() {
    for seed in [0u64, 2, 4] {
        let x = stat_convergent(seed);
        let y = stat_convergent(seed + 10);
        let z = zip_net(&x.net, &y.net).unwrap();
        let limit = [x.limit.clone(), y.limit.clone()].concat();
        for eps in [0.5, 0.1, 0.01] {
            let ez = exceptional_set(&z, &limit, eps).unwrap();
            let ex = exceptional_set(&x.net, &x.limit, eps).unwrap();
            let ey = exceptional_set(&y.net, &y.limit, eps).unwrap();
            for n in 1..=3000u64 {
                let e = Element::single(n);
                assert_eq!(ez.contains(&e), ex.contains(&e) || ey.contains(&e), "n = {n}");
            }
        }
    }
}

#[test]
fn zip_rejects_different_index_sets() {
    let a = Net::constant(DirectedSet::Naturals, vec![0.0]);
    let b = Net::constant(DirectedSet::Grid(2), vec![0.0]);
    assert!(zip_net(&a, &b).is_err());
}

#[test]
fn projections_of_a_zip_are_the_component_verdicts() {
    let x = stat_convergent_with_limit(FixtureFamily::Naturals, 1.5, 3);
    let y = stat_convergent_with_limit(FixtureFamily::Naturals, -2.0, 4);
    let z = zip_net(&x.net, &y.net).unwrap();
    let eps = [0.5, 0.1];
    let v = stat_converges_to(&z, &[1.5, -2.0], &eps, &x.policy, DEFAULT_TOL).unwrap();
    let (px, py) = project_verdict(&z, &v).unwrap();
    let dx = stat_converges_to(&x.net, &[1.5], &eps, &x.policy, DEFAULT_TOL).unwrap();
    let dy = stat_converges_to(&y.net, &[-2.0], &eps, &y.policy, DEFAULT_TOL).unwrap();
    assert_eq!(px.converges, dx.converges);
    assert_eq!(py.converges, dy.converges);
    for (a, b) in px.per_eps.iter().zip(&dx.per_eps).chain(py.per_eps.iter().zip(&dy.per_eps)) {
        assert_eq!(a.1.upper_est, b.1.upper_est);
    }
    assert!(v.converges && px.converges && py.converges);
}

#[test]
fn projections_of_a_pair_are_the_component_verdicts() {
    let x = Net::scalar(DirectedSet::Naturals, |e: &Element| 1.0 + 1.0 / e.coords()[0] as f64);
    let y = Net::scalar(DirectedSet::Naturals, |e: &Element| if e.coords()[0] % 2 == 0 { 1.0 } else { 0.0 });
    let p = pair_net(&x, &y);
    let policy = TruncationPolicy::new(100, 200).unwrap();
    let eps = [0.5, 0.2];
    let v = stat_converges_to(&p, &[1.0, 1.0], &eps, &policy, DEFAULT_TOL).unwrap();
    let (px, py) = project_verdict(&p, &v).unwrap();
    let dx = stat_converges_to(&x, &[1.0], &eps, &policy, DEFAULT_TOL).unwrap();
    let dy = stat_converges_to(&y, &[1.0], &eps, &policy, DEFAULT_TOL).unwrap();
    assert_eq!((px.converges, py.converges), (dx.converges, dy.converges));
    assert!(px.converges && !py.converges && !v.converges);
    for (a, b) in px.per_eps.iter().zip(&dx.per_eps).chain(py.per_eps.iter().zip(&dy.per_eps)) {
        assert!((a.1.upper_est - b.1.upper_est).abs() <= 1e-12);
    }
}

#[test]
fn limits_are_linear() {
    let x = stat_convergent_with_limit(FixtureFamily::Naturals, 0.5, 11);
    let y = stat_convergent_with_limit(FixtureFamily::Naturals, -1.25, 12);
    let eps = [0.5, 0.1, 0.05];
    let sum = add_nets(&x.net, &y.net, IndexMode::Shared).unwrap();
    assert!(stat_converges_to(&sum, &[-0.75], &eps, &x.policy, DEFAULT_TOL).unwrap().converges);
    let scaled = scale_nets(&Scalar::Constant(4.0), &x.net, IndexMode::Shared).unwrap();
    assert!(stat_converges_to(&scaled, &[2.0], &eps, &x.policy, DEFAULT_TOL).unwrap().converges);
    let product = scale_nets(&Scalar::Net(x.net.clone()), &y.net, IndexMode::Shared).unwrap();
    assert!(stat_converges_to(&product, &[-0.625], &eps, &x.policy, DEFAULT_TOL).unwrap().converges);
    assert!(!stat_converges_to(&product, &[0.0], &eps, &x.policy, DEFAULT_TOL).unwrap().converges);
}

#[test]
fn accepted_limits_are_unique() {
    for seed in 0..4 {
        let f = stat_convergent(seed);
        let other = vec![f.limit[0] + 0.3];
        let u = uniqueness_check(&f.net, &f.limit, &other, &[0.5, 0.1], &f.policy, DEFAULT_TOL).unwrap();
        assert!(u.consistent);
        assert!(u.x.converges && !u.y.converges);
    }
}

#[test]
fn convergent_fixtures_are_cauchy() {
    for seed in 0..6 {
        let f = stat_convergent(seed);
        let r = convergent_implies_cauchy(&f.net, &f.limit, 0.1, &f.policy, DEFAULT_TOL).unwrap();
        assert!(r.applicable && r.passed, "{}", f.label);
        assert_eq!(r.containment_violations, 0);
    }
}
