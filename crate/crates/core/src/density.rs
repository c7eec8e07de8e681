//! Asymptotic density over directed sets.
//!
//! For `A ⊆ D` and `β ∈ D` the density ratio is `|A ∩ D_β| / |D_β|`, an exact
//! rational. Lower and upper densities are the `liminf` and `limsup` of that
//! net, `sup_β inf_{α≥β}` and `inf_β sup_{α≥β}`, which this module estimates on
//! a [`TruncationPolicy`]: `β` ranges over the frontier and `α` over the
//! truncated up-set of `β` inside the horizon.
//!
//! Truncated estimates carry no a-priori error bound. A report is labelled
//! [`Existence::Exists`] or [`Existence::DoesNotExist`] only when the gap between
//! the estimates is small (or large) on the last two refinement steps.

use std::fmt;
use std::sync::Arc;

use num_rational::Ratio;

use crate::directed::{DirectedSet, Element, TruncationPolicy};
use crate::error::{Error, Result};
use crate::grid::BoxGrid;

/// Exact density ratio.
pub type ExactRatio = Ratio<u64>;

/// Known lower and upper density of a set, used as a test oracle.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AnalyticDensity {
    pub lower: f64,
    pub upper: f64,
}

impl AnalyticDensity {
    pub fn exact(value: f64) -> Self {
        AnalyticDensity {
            lower: value,
            upper: value,
        }
    }

    pub fn new(lower: f64, upper: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&lower) || !(0.0..=1.0).contains(&upper) || lower > upper {
            return Err(Error::InvalidArgument(format!(
                "analytic density needs 0 ≤ lower ≤ upper ≤ 1, got ({lower}, {upper})"
            )));
        }
        Ok(AnalyticDensity { lower, upper })
    }

    pub fn exists(&self) -> bool {
        self.lower == self.upper
    }
}

type Membership = dyn Fn(&Element) -> bool + Send + Sync;

/// A subset `A ⊆ D` given by a deterministic membership test.
#[derive(Clone)]
pub struct SetPredicate {
    member: Arc<Membership>,
    analytic: Option<AnalyticDensity>,
    known_empty: bool,
}

impl fmt::Debug for SetPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SetPredicate")
            .field("analytic", &self.analytic)
            .field("known_empty", &self.known_empty)
            .finish_non_exhaustive()
    }
}

impl SetPredicate {
    pub fn new<F>(member: F) -> Self
    where
        F: Fn(&Element) -> bool + Send + Sync + 'static,
    {
        SetPredicate {
            member: Arc::new(member),
            analytic: None,
            known_empty: false,
        }
    }

    pub fn empty() -> Self {
        SetPredicate {
            member: Arc::new(|_| false),
            analytic: Some(AnalyticDensity::exact(0.0)),
            known_empty: true,
        }
    }

    pub fn full() -> Self {
        SetPredicate::new(|_| true).with_analytic(AnalyticDensity::exact(1.0))
    }

    /// `{α : γ ≤ α}`.
    pub fn up_set(ds: &DirectedSet, gamma: &Element) -> Self {
        let ds = ds.clone();
        let gamma = gamma.clone();
        SetPredicate::new(move |a| ds.leq_unchecked(gamma.coords(), a.coords()))
    }

    pub fn with_analytic(mut self, analytic: AnalyticDensity) -> Self {
        self.analytic = Some(analytic);
        self
    }

    pub fn analytic(&self) -> Option<AnalyticDensity> {
        self.analytic
    }

    pub fn is_known_empty(&self) -> bool {
        self.known_empty
    }

    pub fn contains(&self, e: &Element) -> bool {
        (self.member)(e)
    }

    pub fn union(&self, other: &SetPredicate) -> SetPredicate {
        let (a, b) = (self.member.clone(), other.member.clone());
        SetPredicate {
            member: Arc::new(move |e| a(e) || b(e)),
            analytic: None,
            known_empty: self.known_empty && other.known_empty,
        }
    }

    pub fn intersection(&self, other: &SetPredicate) -> SetPredicate {
        let (a, b) = (self.member.clone(), other.member.clone());
        SetPredicate {
            member: Arc::new(move |e| a(e) && b(e)),
            analytic: None,
            known_empty: self.known_empty || other.known_empty,
        }
    }

    pub fn complement(&self) -> SetPredicate {
        let a = self.member.clone();
        SetPredicate {
            member: Arc::new(move |e| !a(e)),
            analytic: self.analytic.map(|d| AnalyticDensity {
                lower: 1.0 - d.upper,
                upper: 1.0 - d.lower,
            }),
            known_empty: false,
        }
    }

    /// `A × D₂` inside a product whose left factor has arity `left_arity`.
    pub fn cylinder(&self, left_arity: usize) -> SetPredicate {
        let a = self.member.clone();
        SetPredicate {
            member: Arc::new(move |e| a(&Element::new(&e.coords()[..left_arity]))),
            analytic: self.analytic,
            known_empty: self.known_empty,
        }
    }

    /// `A × B` inside a product whose left factor has arity `left_arity`.
    pub fn product(&self, right: &SetPredicate, left_arity: usize) -> SetPredicate {
        let (a, b) = (self.member.clone(), right.member.clone());
        SetPredicate {
            member: Arc::new(move |e| {
                let (l, r) = e.split(left_arity);
                a(&l) && b(&r)
            }),
            analytic: None,
            known_empty: self.known_empty || right.known_empty,
        }
    }
}

/// `|A ∩ D_b| / |D_b|`, counting the down-set directly.
pub fn ratio(a: &SetPredicate, b: &Element, ds: &DirectedSet) -> Result<ExactRatio> {
    let size = ds.down_set_size(b)?;
    let hits = ds.down_set(b)?.iter().filter(|x| a.contains(x)).count() as u64;
    Ok(Ratio::new(hits, size))
}

/// Ratios for every element of the grid: membership indicators summed over
/// down-sets, divided by the down-set sizes.
fn ratio_table(a: &SetPredicate, grid: &BoxGrid) -> Vec<ExactRatio> {
    let mut hits = vec![0u64; grid.len()];
    grid.for_each(|idx, coords| {
        hits[idx] = u64::from(a.contains(&Element::new(coords)));
    });
    grid.down_sums(&mut hits);
    let mut sizes = vec![1u64; grid.len()];
    grid.down_sums(&mut sizes);
    hits.into_iter().zip(sizes).map(|(h, s)| Ratio::new(h, s)).collect()
}

/// `(sup_β inf_{α≥β} v, inf_β sup_{α≥β} v)` with `β` over the frontier sub-box.
fn frontier_extremes<T: Copy + PartialOrd>(grid: &BoxGrid, values: &[T], frontier: u64) -> Result<(T, T)> {
    let (tail_min, tail_max) = grid.tail_extrema(values);
    let mut lower: Option<T> = None;
    let mut upper: Option<T> = None;
    grid.for_each_in(frontier, |idx, _| {
        if lower.is_none_or(|l| tail_min[idx] > l) {
            lower = Some(tail_min[idx]);
        }
        if upper.is_none_or(|u| tail_max[idx] < u) {
            upper = Some(tail_max[idx]);
        }
    });
    match (lower, upper) {
        (Some(l), Some(u)) => Ok((l, u)),
        _ => Err(Error::InvalidPolicy(format!(
            "empty frontier (F = {frontier}, H = {})",
            grid.bound()
        ))),
    }
}

/// One refinement step of a `liminf` / `limsup` estimate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StepValue {
    pub frontier: u64,
    pub horizon: u64,
    pub value: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LimitEstimate {
    /// Value at the final step.
    pub value: f64,
    pub steps: Vec<StepValue>,
}

/// Truncated `liminf` and `limsup` of a real-valued net, evaluated at every
/// refinement step of `policy`.
pub fn limit_estimates<F>(f: F, ds: &DirectedSet, policy: &TruncationPolicy) -> Result<(LimitEstimate, LimitEstimate)>
where
    F: Fn(&Element) -> f64,
{
    let mut lows = Vec::new();
    let mut highs = Vec::new();
    for (frontier, horizon) in policy.steps_for(ds)? {
        let grid = BoxGrid::new(ds, horizon, policy.element_cap())?;
        let mut values = vec![0.0; grid.len()];
        let mut bad = None;
        grid.for_each(|idx, coords| {
            let e = Element::new(coords);
            let v = f(&e);
            if !v.is_finite() && bad.is_none() {
                bad = Some((v, e));
            }
            values[idx] = v;
        });
        if let Some((value, e)) = bad {
            return Err(Error::NonFinite {
                value,
                element: e.to_string(),
            });
        }
        let (lo, hi) = frontier_extremes(&grid, &values, frontier)?;
        lows.push(StepValue { frontier, horizon, value: lo });
        highs.push(StepValue { frontier, horizon, value: hi });
    }
    let pack = |steps: Vec<StepValue>| LimitEstimate {
        value: steps.last().expect("at least one step").value,
        steps,
    };
    Ok((pack(lows), pack(highs)))
}

pub fn liminf_estimate<F>(f: F, ds: &DirectedSet, policy: &TruncationPolicy) -> Result<LimitEstimate>
where
    F: Fn(&Element) -> f64,
{
    Ok(limit_estimates(f, ds, policy)?.0)
}

pub fn limsup_estimate<F>(f: F, ds: &DirectedSet, policy: &TruncationPolicy) -> Result<LimitEstimate>
where
    F: Fn(&Element) -> f64,
{
    Ok(limit_estimates(f, ds, policy)?.1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Existence {
    Exists,
    DoesNotExist,
    Inconclusive,
}

impl fmt::Display for Existence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Existence::Exists => "exists",
            Existence::DoesNotExist => "does-not-exist",
            Existence::Inconclusive => "inconclusive",
        })
    }
}

/// Thresholds for density reports.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DensityOptions {
    /// Largest `upper − lower` gap still read as "the density exists".
    pub gap_tolerance: f64,
    /// Smallest gap read as "the density does not exist".
    pub separation: f64,
    /// An up-set counts as having positive upper density above this estimate.
    pub positivity: f64,
}

impl Default for DensityOptions {
    fn default() -> Self {
        DensityOptions {
            gap_tolerance: 0.05,
            separation: 0.5,
            positivity: 0.05,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DensityStep {
    pub frontier: u64,
    pub horizon: u64,
    pub lower: ExactRatio,
    pub upper: ExactRatio,
}

impl DensityStep {
    pub fn gap(&self) -> f64 {
        to_f64(self.upper) - to_f64(self.lower)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DensityReport {
    pub lower_est: f64,
    pub upper_est: f64,
    pub exists: Existence,
    /// Exact ratios at the frontier elements of the final step.
    pub series: Vec<(Element, ExactRatio)>,
    pub steps: Vec<DensityStep>,
    pub policy_used: TruncationPolicy,
}

impl DensityReport {
    pub fn lower_exact(&self) -> ExactRatio {
        self.steps.last().map_or(Ratio::from_integer(0), |s| s.lower)
    }

    pub fn upper_exact(&self) -> ExactRatio {
        self.steps.last().map_or(Ratio::from_integer(0), |s| s.upper)
    }
}

pub fn to_f64(r: ExactRatio) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

pub fn density(a: &SetPredicate, ds: &DirectedSet, policy: &TruncationPolicy) -> Result<DensityReport> {
    density_with(a, ds, policy, &DensityOptions::default())
}

pub fn density_with(
    a: &SetPredicate,
    ds: &DirectedSet,
    policy: &TruncationPolicy,
    opts: &DensityOptions,
) -> Result<DensityReport> {
    let steps_wanted = policy.steps_for(ds)?;
    if a.is_known_empty() {
        return Ok(DensityReport {
            lower_est: 0.0,
            upper_est: 0.0,
            exists: Existence::Exists,
            series: Vec::new(),
            steps: Vec::new(),
            policy_used: policy.clone(),
        });
    }
    let mut steps = Vec::new();
    let mut series = Vec::new();
    let last = steps_wanted.len() - 1;
    for (k, &(frontier, horizon)) in steps_wanted.iter().enumerate() {
        let grid = BoxGrid::new(ds, horizon, policy.element_cap())?;
        let table = ratio_table(a, &grid);
        let (lower, upper) = frontier_extremes(&grid, &table, frontier)?;
        if k == last {
            grid.for_each_in(frontier, |idx, coords| series.push((Element::new(coords), table[idx])));
        }
        steps.push(DensityStep {
            frontier,
            horizon,
            lower,
            upper,
        });
    }
    let tail = &steps[steps.len().saturating_sub(2)..];
    let exists = if tail.iter().all(|s| s.gap() <= opts.gap_tolerance) {
        Existence::Exists
    } else if tail.iter().all(|s| s.gap() > opts.separation) {
        Existence::DoesNotExist
    } else {
        Existence::Inconclusive
    };
    let fin = steps.last().expect("at least one step");
    Ok(DensityReport {
        lower_est: to_f64(fin.lower),
        upper_est: to_f64(fin.upper),
        exists,
        series,
        steps,
        policy_used: policy.clone(),
    })
}

/// Exact union and complement ratios at one element.
#[derive(Clone, Debug, PartialEq)]
pub struct UnionComplement {
    pub union: ExactRatio,
    /// `ratio(A) + ratio(B)`; may exceed one.
    pub sum: ExactRatio,
    pub complement_of_a: ExactRatio,
    pub ratio_a: ExactRatio,
    pub ratio_b: ExactRatio,
}

impl UnionComplement {
    pub fn subadditive(&self) -> bool {
        self.union <= self.sum
    }

    pub fn complement_identity(&self) -> bool {
        self.complement_of_a + self.ratio_a == Ratio::from_integer(1)
    }
}

pub fn union_complement_ratios(
    a: &SetPredicate,
    b: &SetPredicate,
    at: &Element,
    ds: &DirectedSet,
) -> Result<UnionComplement> {
    let size = ds.down_set_size(at)?;
    let (mut in_a, mut in_b, mut in_union) = (0u64, 0u64, 0u64);
    for x in ds.down_set(at)? {
        let (ma, mb) = (a.contains(&x), b.contains(&x));
        in_a += u64::from(ma);
        in_b += u64::from(mb);
        in_union += u64::from(ma || mb);
    }
    let ratio_a = Ratio::new(in_a, size);
    let ratio_b = Ratio::new(in_b, size);
    Ok(UnionComplement {
        union: Ratio::new(in_union, size),
        sum: ratio_a + ratio_b,
        complement_of_a: Ratio::new(size - in_a, size),
        ratio_a,
        ratio_b,
    })
}

/// Density of `A` on `D₁` against densities of `A × D₂` (and `A × B`) on the
/// product order.
#[derive(Clone, Debug, PartialEq)]
pub struct ProductDensityCheck {
    pub factor: DensityReport,
    pub cylinder: DensityReport,
    /// Present when `B` was given and `A` carries an analytic density of zero.
    pub product: Option<DensityReport>,
    /// Largest difference between the cylinder and factor estimates.
    pub discrepancy: f64,
}

pub fn product_density_check(
    a: &SetPredicate,
    b: Option<&SetPredicate>,
    ds1: &DirectedSet,
    ds2: &DirectedSet,
    policy: &TruncationPolicy,
) -> Result<ProductDensityCheck> {
    let prod = DirectedSet::product(ds1.clone(), ds2.clone());
    let k = ds1.arity();
    let factor = density(a, ds1, policy)?;
    let cylinder = density(&a.cylinder(k), &prod, policy)?;
    let discrepancy = (cylinder.lower_est - factor.lower_est)
        .abs()
        .max((cylinder.upper_est - factor.upper_est).abs());
    let product = match (b, a.analytic()) {
        (Some(b), Some(d)) if d.exists() && d.lower == 0.0 => Some(density(&a.product(b, k), &prod, policy)?),
        _ => None,
    };
    Ok(ProductDensityCheck {
        factor,
        cylinder,
        product,
        discrepancy,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConditionStar {
    pub gamma: Element,
    pub limsup_est: f64,
    pub lower_est: f64,
    pub holds: bool,
    pub report: DensityReport,
}

/// Upper density of the up-set of `gamma`; the up-set condition asks it to be positive.
pub fn condition_star(gamma: &Element, ds: &DirectedSet, policy: &TruncationPolicy) -> Result<ConditionStar> {
    condition_star_with(gamma, ds, policy, &DensityOptions::default())
}

pub fn condition_star_with(
    gamma: &Element,
    ds: &DirectedSet,
    policy: &TruncationPolicy,
    opts: &DensityOptions,
) -> Result<ConditionStar> {
    ds.check(gamma)?;
    if gamma.coords().iter().any(|&c| c > policy.horizon()) {
        return Err(Error::InvalidElement {
            element: gamma.to_string(),
            reason: format!("outside the horizon {}", policy.horizon()),
        });
    }
    let report = density_with(&SetPredicate::up_set(ds, gamma), ds, policy, opts)?;
    Ok(ConditionStar {
        gamma: gamma.clone(),
        limsup_est: report.upper_est,
        lower_est: report.lower_est,
        holds: report.upper_est > opts.positivity,
        report,
    })
}
