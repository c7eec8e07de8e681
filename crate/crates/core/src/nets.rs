//! Nets valued in `R^k`: statistical convergence, statistical Cauchyness, and
//! the product / map / algebraic constructions that preserve them.
//!
//! Neighbourhoods are metric balls: `x_α` is "outside `U_ε` of `x`" when
//! `d(x_α, x) ≥ ε`. Every verdict is a density computation on a set of indices,
//! so it inherits the truncation of the [`TruncationPolicy`] it was run with.

use std::fmt;
use std::sync::Arc;

use crate::density::{density, DensityReport, SetPredicate};
use crate::directed::{DirectedSet, Element, TruncationPolicy};
use crate::error::{Error, Result};
use crate::grid::BoxGrid;

pub type Point = Vec<f64>;

pub const DEFAULT_TOL: f64 = 0.05;
pub const DEFAULT_EPS: [f64; 3] = [0.5, 0.1, 0.02];
/// Most witnesses tried by [`stat_cauchy`].
pub const MAX_WITNESS_CANDIDATES: usize = 32;

/// A norm-induced metric on `R^k`.
#[derive(Clone, Debug, PartialEq)]
pub enum Metric {
    Euclidean,
    Max,
    /// Consecutive blocks of the given dimensions, each with its own metric,
    /// combined by taking the maximum.
    Product(Vec<(usize, Metric)>),
}

impl Metric {
    pub fn distance(&self, a: &[f64], b: &[f64]) -> f64 {
        match self {
            Metric::Euclidean => a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt(),
            Metric::Max => a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max),
            Metric::Product(blocks) => {
                let mut at = 0;
                let mut d: f64 = 0.0;
                for (k, m) in blocks {
                    d = d.max(m.distance(&a[at..at + k], &b[at..at + k]));
                    at += k;
                }
                d
            }
        }
    }

    pub fn norm(&self, a: &[f64]) -> f64 {
        self.distance(a, &vec![0.0; a.len()])
    }

    /// The metric restricted to the coordinates `[start, start + len)`, when
    /// that range is a block of a product metric (or any range otherwise).
    fn block(&self, start: usize, len: usize) -> Metric {
        match self {
            Metric::Product(blocks) => {
                let mut at = 0;
                for (k, m) in blocks {
                    if at == start && *k == len {
                        return m.clone();
                    }
                    at += k;
                }
                Metric::Max
            }
            other => other.clone(),
        }
    }
}

/// How a combined net was assembled, kept so verdicts can be projected back.
#[derive(Clone, Debug, PartialEq)]
enum Layout {
    /// Indexed by `D1 × D2`; the first `left_dim` coordinates come from `D1`.
    Pair { left_arity: usize, left_dim: usize },
    /// Indexed by a shared `D`.
    Zip { left_dim: usize },
}

type Eval = dyn Fn(&Element) -> Point + Send + Sync;

/// A net `(x_α)_{α ∈ D}` in `R^dim`.
#[derive(Clone)]
pub struct Net {
    ds: DirectedSet,
    dim: usize,
    metric: Metric,
    eval: Arc<Eval>,
    constant: Option<Point>,
    layout: Option<Layout>,
}

impl fmt::Debug for Net {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Net")
            .field("ds", &self.ds)
            .field("dim", &self.dim)
            .field("metric", &self.metric)
            .field("constant", &self.constant)
            .finish_non_exhaustive()
    }
}

impl Net {
    pub fn new<F>(ds: DirectedSet, dim: usize, f: F) -> Self
    where
        F: Fn(&Element) -> Point + Send + Sync + 'static,
    {
        Net {
            ds,
            dim,
            metric: Metric::Euclidean,
            eval: Arc::new(f),
            constant: None,
            layout: None,
        }
    }

    /// A real-valued net.
    pub fn scalar<F>(ds: DirectedSet, f: F) -> Self
    where
        F: Fn(&Element) -> f64 + Send + Sync + 'static,
    {
        Net::new(ds, 1, move |e| vec![f(e)])
    }

    pub fn constant(ds: DirectedSet, value: Point) -> Self {
        let v = value.clone();
        let mut net = Net::new(ds, value.len(), move |_| v.clone());
        net.constant = Some(value);
        net
    }

    pub fn with_metric(mut self, metric: Metric) -> Self {
        self.metric = metric;
        self
    }

    pub fn ds(&self) -> &DirectedSet {
        &self.ds
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn metric(&self) -> &Metric {
        &self.metric
    }

    pub fn eval(&self, e: &Element) -> Point {
        (self.eval)(e)
    }

    pub fn distance(&self, a: &[f64], b: &[f64]) -> f64 {
        self.metric.distance(a, b)
    }

    fn check_point(&self, x: &[f64]) -> Result<()> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: x.len(),
            });
        }
        Ok(())
    }
}

fn check_eps(eps: f64) -> Result<()> {
    if eps > 0.0 && eps.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("eps must be positive and finite, got {eps}")))
    }
}

fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 && tol < 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("tol must lie in (0, 1), got {tol}")))
    }
}

/// `{α : d(x_α, x) ≥ eps}`.
pub fn exceptional_set(net: &Net, x: &[f64], eps: f64) -> Result<SetPredicate> {
    net.check_point(x)?;
    check_eps(eps)?;
    if let Some(c) = &net.constant {
        if net.distance(c, x) < eps {
            return Ok(SetPredicate::empty());
        }
    }
    let (n, x) = (net.clone(), x.to_vec());
    Ok(SetPredicate::new(move |a| n.distance(&n.eval(a), &x) >= eps))
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConvergenceVerdict {
    pub limit: Point,
    /// Density report of the exceptional set at each `eps`.
    pub per_eps: Vec<(f64, DensityReport)>,
    pub converges: bool,
    pub tol: f64,
}

fn verdict_from(limit: Point, per_eps: Vec<(f64, DensityReport)>, tol: f64) -> ConvergenceVerdict {
    let converges = per_eps.iter().all(|(_, r)| r.upper_est <= tol);
    ConvergenceVerdict {
        limit,
        per_eps,
        converges,
        tol,
    }
}

/// Statistical convergence to `x`: every exceptional set has upper density
/// estimate at most `tol`.
pub fn stat_converges_to(
    net: &Net,
    x: &[f64],
    eps_list: &[f64],
    policy: &TruncationPolicy,
    tol: f64,
) -> Result<ConvergenceVerdict> {
    if eps_list.is_empty() {
        return Err(Error::InvalidArgument("eps list is empty".into()));
    }
    check_tol(tol)?;
    let per_eps = eps_list
        .iter()
        .map(|&eps| Ok((eps, density(&exceptional_set(net, x, eps)?, &net.ds, policy)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(verdict_from(x.to_vec(), per_eps, tol))
}

#[derive(Clone, Debug, PartialEq)]
pub struct UniquenessReport {
    /// Both candidate limits passed.
    pub applicable: bool,
    pub distance: f64,
    /// Largest distance between two accepted limits that is still consistent.
    pub tolerance: f64,
    pub consistent: bool,
    pub x: ConvergenceVerdict,
    pub y: ConvergenceVerdict,
}

/// Two accepted statistical limits must coincide, up to `2 · min eps`.
pub fn uniqueness_check(
    net: &Net,
    x: &[f64],
    y: &[f64],
    eps_list: &[f64],
    policy: &TruncationPolicy,
    tol: f64,
) -> Result<UniquenessReport> {
    let vx = stat_converges_to(net, x, eps_list, policy, tol)?;
    let vy = stat_converges_to(net, y, eps_list, policy, tol)?;
    let applicable = vx.converges && vy.converges;
    let distance = net.distance(x, y);
    let tolerance = 2.0 * eps_list.iter().copied().fold(f64::INFINITY, f64::min);
    Ok(UniquenessReport {
        applicable,
        distance,
        tolerance,
        consistent: !applicable || distance <= tolerance,
        x: vx,
        y: vy,
    })
}

/// `(α, β) ↦ (x_α, y_β)` on `D1 × D2`, under the max of the component metrics.
pub fn pair_net(x: &Net, y: &Net) -> Net {
    let left_arity = x.ds.arity();
    let (nx, ny) = (x.clone(), y.clone());
    let mut net = Net::new(DirectedSet::product(x.ds.clone(), y.ds.clone()), x.dim + y.dim, move |e| {
        let (a, b) = e.split(left_arity);
        let mut p = nx.eval(&a);
        p.extend(ny.eval(&b));
        p
    })
    .with_metric(Metric::Product(vec![(x.dim, x.metric.clone()), (y.dim, y.metric.clone())]));
    net.layout = Some(Layout::Pair {
        left_arity,
        left_dim: x.dim,
    });
    net
}

/// `α ↦ (x_α, y_α)` on a shared index set.
pub fn zip_net(x: &Net, y: &Net) -> Result<Net> {
    if x.ds != y.ds {
        return Err(Error::DirectedSetMismatch(format!("{} vs {}", x.ds, y.ds)));
    }
    let (nx, ny) = (x.clone(), y.clone());
    let mut net = Net::new(x.ds.clone(), x.dim + y.dim, move |e| {
        let mut p = nx.eval(e);
        p.extend(ny.eval(e));
        p
    })
    .with_metric(Metric::Product(vec![(x.dim, x.metric.clone()), (y.dim, y.metric.clone())]));
    net.layout = Some(Layout::Zip { left_dim: x.dim });
    Ok(net)
}

/// Component verdicts of a paired or zipped net, derived from its own verdict:
/// the exceptional set of a component is the cylinder (pair) or coordinate
/// projection (zip) of the combined one, evaluated with the same policy.
pub fn project_verdict(net: &Net, verdict: &ConvergenceVerdict) -> Result<(ConvergenceVerdict, ConvergenceVerdict)> {
    let layout = net
        .layout
        .clone()
        .ok_or_else(|| Error::InvalidArgument("net was not built by pair_net or zip_net".into()))?;
    net.check_point(&verdict.limit)?;
    let left_dim = match layout {
        Layout::Pair { left_dim, .. } | Layout::Zip { left_dim } => left_dim,
    };
    let right_dim = net.dim - left_dim;
    let mut left = Vec::new();
    let mut right = Vec::new();
    for (eps, report) in &verdict.per_eps {
        let policy = &report.policy_used;
        for (side, start, len) in [(&mut left, 0, left_dim), (&mut right, left_dim, right_dim)] {
            let metric = net.metric.block(start, len);
            let target = verdict.limit[start..start + len].to_vec();
            let n = net.clone();
            let eps = *eps;
            // On a product index the component value depends on one factor
            // only, so this set is a cylinder.
            let set = SetPredicate::new(move |e: &Element| {
                let p = n.eval(e);
                metric.distance(&p[start..start + len], &target) >= eps
            });
            side.push((eps, density(&set, &net.ds, policy)?));
        }
    }
    Ok((
        verdict_from(verdict.limit[..left_dim].to_vec(), left, verdict.tol),
        verdict_from(verdict.limit[left_dim..].to_vec(), right, verdict.tol),
    ))
}

/// `α ↦ f(x_α)`; continuity of `f` is the caller's claim.
pub fn map_net<F>(f: F, out_dim: usize, net: &Net) -> Net
where
    F: Fn(&[f64]) -> Point + Send + Sync + 'static,
{
    let f = Arc::new(f);
    let (n, g) = (net.clone(), f.clone());
    let mut out = Net::new(net.ds.clone(), out_dim, move |e| g(&n.eval(e)));
    out.constant = net.constant.as_ref().map(|c| f(c));
    out
}

/// Index set of a combined net.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndexMode {
    /// `(α, β) ↦ x_α ∘ y_β` on `D1 × D2`.
    Product,
    /// `α ↦ x_α ∘ y_α` on a shared `D`.
    Shared,
}

fn combine(
    x: &Net,
    y: &Net,
    mode: IndexMode,
    dim: usize,
    op: impl Fn(&[f64], &[f64]) -> Point + Send + Sync + 'static,
) -> Result<Net> {
    let (nx, ny) = (x.clone(), y.clone());
    match mode {
        IndexMode::Product => {
            let left_arity = x.ds.arity();
            Ok(Net::new(DirectedSet::product(x.ds.clone(), y.ds.clone()), dim, move |e| {
                let (a, b) = e.split(left_arity);
                op(&nx.eval(&a), &ny.eval(&b))
            })
            .with_metric(y.metric.clone()))
        }
        IndexMode::Shared => {
            if x.ds != y.ds {
                return Err(Error::DirectedSetMismatch(format!("{} vs {}", x.ds, y.ds)));
            }
            Ok(Net::new(x.ds.clone(), dim, move |e| op(&nx.eval(e), &ny.eval(e))).with_metric(y.metric.clone()))
        }
    }
}

pub fn add_nets(x: &Net, y: &Net, mode: IndexMode) -> Result<Net> {
    if x.dim != y.dim {
        return Err(Error::DimensionMismatch {
            expected: x.dim,
            found: y.dim,
        });
    }
    combine(x, y, mode, y.dim, |a, b| a.iter().zip(b).map(|(s, t)| s + t).collect())
}

/// The scalar factor of [`scale_nets`].
#[derive(Clone, Debug)]
pub enum Scalar {
    Constant(f64),
    /// A real-valued net.
    Net(Net),
}

/// `a · y`, with `a` a constant or a net of scalars.
pub fn scale_nets(a: &Scalar, y: &Net, mode: IndexMode) -> Result<Net> {
    match a {
        Scalar::Constant(c) => {
            let c = *c;
            let mut out = map_net(move |p| p.iter().map(|v| c * v).collect(), y.dim, y).with_metric(y.metric.clone());
            out.layout = None;
            Ok(out)
        }
        Scalar::Net(a) => {
            if a.dim != 1 {
                return Err(Error::DimensionMismatch {
                    expected: 1,
                    found: a.dim,
                });
            }
            combine(a, y, mode, y.dim, |s, p| p.iter().map(|v| s[0] * v).collect())
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CauchyVerdict {
    /// The first passing witness γ, if any.
    pub witness: Option<Element>,
    /// Report for the passing witness, or for the best candidate tried.
    pub per_eps: Vec<(f64, DensityReport)>,
    pub cauchy: bool,
    pub candidates_tried: usize,
}

/// `{α ≥ γ : d(x_α, x_γ) ≥ eps}`.
pub fn cauchy_set(net: &Net, gamma: &Element, eps: f64) -> Result<SetPredicate> {
    net.ds.check(gamma)?;
    check_eps(eps)?;
    let xg = net.eval(gamma);
    if let Some(c) = &net.constant {
        if net.distance(c, &xg) < eps {
            return Ok(SetPredicate::empty());
        }
    }
    let (n, g) = (net.clone(), gamma.clone());
    Ok(SetPredicate::new(move |a| {
        n.ds.leq_unchecked(g.coords(), a.coords()) && n.distance(&n.eval(a), &xg) >= eps
    }))
}

/// Frontier elements of the last refinement step with their net values.
fn frontier_values(net: &Net, policy: &TruncationPolicy) -> Result<Vec<(Element, Point)>> {
    let (frontier, _) = *policy.steps_for(&net.ds)?.last().expect("at least one step");
    let grid = BoxGrid::new(&net.ds, frontier, policy.element_cap())?;
    Ok(grid.elements().into_iter().map(|e| {
        let v = net.eval(&e);
        (e, v)
    }).collect())
}

fn coordinate_median(values: &[&Point], dim: usize) -> Point {
    (0..dim)
        .map(|k| {
            let mut col: Vec<f64> = values.iter().map(|p| p[k]).collect();
            col.sort_by(f64::total_cmp);
            let n = col.len();
            if n == 0 {
                0.0
            } else if n % 2 == 1 {
                col[n / 2]
            } else {
                (col[n / 2 - 1] + col[n / 2]) / 2.0
            }
        })
        .collect()
}

/// Statistical Cauchyness at one `eps`: some witness γ among the frontier
/// elements (most central values first, at most [`MAX_WITNESS_CANDIDATES`])
/// whose set `{α ≥ γ : d(x_α, x_γ) ≥ eps}` has upper density at most `tol`.
pub fn stat_cauchy(net: &Net, eps: f64, policy: &TruncationPolicy, tol: f64) -> Result<CauchyVerdict> {
    check_eps(eps)?;
    check_tol(tol)?;
    let values = frontier_values(net, policy)?;
    let refs: Vec<&Point> = values.iter().map(|(_, v)| v).collect();
    let median = coordinate_median(&refs, net.dim);
    let mut ranked: Vec<(f64, usize)> = values
        .iter()
        .enumerate()
        .map(|(i, (_, v))| (net.distance(v, &median), i))
        .collect();
    ranked.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
    let mut best: Option<(Element, DensityReport)> = None;
    let mut tried = 0;
    for &(_, i) in ranked.iter().take(MAX_WITNESS_CANDIDATES) {
        tried += 1;
        let gamma = &values[i].0;
        let report = density(&cauchy_set(net, gamma, eps)?, &net.ds, policy)?;
        if report.upper_est <= tol {
            return Ok(CauchyVerdict {
                witness: Some(gamma.clone()),
                per_eps: vec![(eps, report)],
                cauchy: true,
                candidates_tried: tried,
            });
        }
        if best.as_ref().is_none_or(|(_, b)| report.upper_est < b.upper_est) {
            best = Some((gamma.clone(), report));
        }
    }
    Ok(CauchyVerdict {
        witness: None,
        per_eps: best.map(|(_, r)| vec![(eps, r)]).unwrap_or_default(),
        cauchy: false,
        candidates_tried: tried,
    })
}

/// Cauchy verdict at a fixed witness.
fn cauchy_at(net: &Net, gamma: &Element, eps: f64, policy: &TruncationPolicy, tol: f64) -> Result<CauchyVerdict> {
    let report = density(&cauchy_set(net, gamma, eps)?, &net.ds, policy)?;
    let cauchy = report.upper_est <= tol;
    Ok(CauchyVerdict {
        witness: cauchy.then(|| gamma.clone()),
        per_eps: vec![(eps, report)],
        cauchy,
        candidates_tried: 1,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct ImplicationReport {
    /// The premise held and a witness close to the limit was found.
    pub applicable: bool,
    pub premise: ConvergenceVerdict,
    pub witness: Option<Element>,
    pub cauchy: Option<CauchyVerdict>,
    /// Horizon elements of `{α ≥ γ : d(x_α, x_γ) ≥ eps}`.
    pub containment_checked: u64,
    /// Of those, how many fall outside the `eps/2`-exceptional set of `x`.
    pub containment_violations: u64,
    pub passed: bool,
}

/// Convergence at `eps/2` to `x` yields Cauchyness at `eps`, with a witness γ
/// satisfying `d(x_γ, x) < eps/2`: by the triangle inequality the Cauchy set
/// of γ lies inside the exceptional set of `x`.
pub fn convergent_implies_cauchy(
    net: &Net,
    x: &[f64],
    eps: f64,
    policy: &TruncationPolicy,
    tol: f64,
) -> Result<ImplicationReport> {
    check_eps(eps)?;
    let premise = stat_converges_to(net, x, &[eps / 2.0], policy, tol)?;
    let mut report = ImplicationReport {
        applicable: false,
        premise,
        witness: None,
        cauchy: None,
        containment_checked: 0,
        containment_violations: 0,
        passed: false,
    };
    if !report.premise.converges {
        return Ok(report);
    }
    let witness = frontier_values(net, policy)?
        .into_iter()
        .map(|(e, v)| (net.distance(&v, x), e))
        .filter(|(d, _)| *d < eps / 2.0)
        .min_by(|a, b| a.0.total_cmp(&b.0))
        .map(|(_, e)| e);
    let Some(gamma) = witness else {
        return Ok(report);
    };
    let cauchy = cauchy_at(net, &gamma, eps, policy, tol)?;
    let c_set = cauchy_set(net, &gamma, eps)?;
    let e_set = exceptional_set(net, x, eps / 2.0)?;
    let grid = BoxGrid::new(&net.ds, policy.horizon(), policy.element_cap())?;
    grid.for_each(|_, coords| {
        let a = Element::new(coords);
        if c_set.contains(&a) {
            report.containment_checked += 1;
            if !e_set.contains(&a) {
                report.containment_violations += 1;
            }
        }
    });
    report.applicable = true;
    report.passed = cauchy.cauchy && report.containment_violations == 0;
    report.witness = Some(gamma);
    report.cauchy = Some(cauchy);
    Ok(report)
}

/// Density on `D × D` of `{(α, β) : d(x_α, x_β) ≥ eps, α ≥ γ, β ≥ γ}`.
pub fn pairwise_cauchy_density(
    net: &Net,
    gamma: &Element,
    eps: f64,
    policy: &TruncationPolicy,
) -> Result<DensityReport> {
    net.ds.check(gamma)?;
    check_eps(eps)?;
    if gamma.coords().iter().any(|&c| c > policy.horizon()) {
        return Err(Error::InvalidElement {
            element: gamma.to_string(),
            reason: format!("outside the horizon {}", policy.horizon()),
        });
    }
    let arity = net.ds.arity();
    let square = DirectedSet::product(net.ds.clone(), net.ds.clone());
    let (n, g) = (net.clone(), gamma.clone());
    let set = SetPredicate::new(move |e| {
        let (a, b) = e.split(arity);
        n.ds.leq_unchecked(g.coords(), a.coords())
            && n.ds.leq_unchecked(g.coords(), b.coords())
            && n.distance(&n.eval(&a), &n.eval(&b)) >= eps
    });
    density(&set, &square, policy)
}

#[derive(Clone, Debug, PartialEq)]
pub struct PairwiseBound {
    pub pair: DensityReport,
    /// Single-index Cauchy set of γ at `eps/2`.
    pub single: DensityReport,
    /// `2 · single.upper_est` plus a floating slack.
    pub bound: f64,
    pub holds: bool,
}

/// The pair set sits inside the union of the two cylinders over the
/// single-index set at `eps/2`, so its upper density is at most twice that one.
pub fn pairwise_bound(net: &Net, gamma: &Element, eps: f64, policy: &TruncationPolicy) -> Result<PairwiseBound> {
    let pair = pairwise_cauchy_density(net, gamma, eps, policy)?;
    let single = density(&cauchy_set(net, gamma, eps / 2.0)?, &net.ds, policy)?;
    let bound = 2.0 * single.upper_est + 1e-12;
    Ok(PairwiseBound {
        holds: pair.upper_est <= bound,
        pair,
        single,
        bound,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct ProductCauchyReport {
    pub mode: IndexMode,
    pub x: CauchyVerdict,
    pub y: CauchyVerdict,
    pub combined: CauchyVerdict,
    /// Components Cauchy ⟹ combined Cauchy.
    pub forward_holds: bool,
    /// Whether the converse was checked: always for shared indices, only under
    /// positive up-set density on both factors for product indices.
    pub converse_checked: bool,
    /// Combined Cauchy ⟹ components Cauchy, when checked.
    pub converse_holds: Option<bool>,
    pub consistent: bool,
}

/// Cauchyness of `(x, y)` against Cauchyness of the components.
pub fn cauchy_product_checks(
    x: &Net,
    y: &Net,
    mode: IndexMode,
    eps: f64,
    policy: &TruncationPolicy,
    tol: f64,
) -> Result<ProductCauchyReport> {
    let combined_net = match mode {
        IndexMode::Product => pair_net(x, y),
        IndexMode::Shared => zip_net(x, y)?,
    };
    let vx = stat_cauchy(x, eps, policy, tol)?;
    let vy = stat_cauchy(y, eps, policy, tol)?;
    let combined = stat_cauchy(&combined_net, eps, policy, tol)?;
    let forward_holds = !(vx.cauchy && vy.cauchy) || combined.cauchy;
    let converse_checked = match mode {
        IndexMode::Shared => true,
        IndexMode::Product => {
            let gammas = match &combined.witness {
                Some(w) => w.split(x.ds.arity()),
                None => (x.ds.min_element(), y.ds.min_element()),
            };
            crate::density::condition_star(&gammas.0, &x.ds, policy)?.holds
                && crate::density::condition_star(&gammas.1, &y.ds, policy)?.holds
        }
    };
    let converse_holds = converse_checked.then_some(!combined.cauchy || (vx.cauchy && vy.cauchy));
    Ok(ProductCauchyReport {
        mode,
        consistent: forward_holds && converse_holds.unwrap_or(true),
        x: vx,
        y: vy,
        combined,
        forward_holds,
        converse_checked,
        converse_holds,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct UniformMapReport {
    pub applicable: bool,
    pub delta: f64,
    pub premise: CauchyVerdict,
    pub image: Option<CauchyVerdict>,
    pub passed: bool,
}

/// A uniformly continuous `f` with modulus `eps ↦ delta` maps a statistically
/// Cauchy net to one, with the same witness.
pub fn uc_map_cauchy<F, M>(
    f: F,
    out_dim: usize,
    modulus: M,
    net: &Net,
    eps: f64,
    policy: &TruncationPolicy,
    tol: f64,
) -> Result<UniformMapReport>
where
    F: Fn(&[f64]) -> Point + Send + Sync + 'static,
    M: Fn(f64) -> f64,
{
    check_eps(eps)?;
    let delta = modulus(eps);
    check_eps(delta)?;
    let premise = stat_cauchy(net, delta, policy, tol)?;
    let Some(gamma) = premise.witness.clone() else {
        return Ok(UniformMapReport {
            applicable: false,
            delta,
            premise,
            image: None,
            passed: false,
        });
    };
    let image = cauchy_at(&map_net(f, out_dim, net), &gamma, eps, policy, tol)?;
    Ok(UniformMapReport {
        applicable: true,
        delta,
        passed: image.cauchy,
        premise,
        image: Some(image),
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct DetectedLimit {
    /// Coordinate-wise median of the frontier values: a heuristic guess.
    pub limit: Point,
    pub verdict: ConvergenceVerdict,
}

/// Guesses a statistical limit and checks it.
pub fn detect_limit(net: &Net, eps_list: &[f64], policy: &TruncationPolicy, tol: f64) -> Result<DetectedLimit> {
    let values = frontier_values(net, policy)?;
    let refs: Vec<&Point> = values.iter().map(|(_, v)| v).collect();
    let limit = coordinate_median(&refs, net.dim);
    let verdict = stat_converges_to(net, &limit, eps_list, policy, tol)?;
    Ok(DetectedLimit { limit, verdict })
}
