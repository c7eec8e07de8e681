//! Directed sets with finite down-sets, their truncations, and order-axiom checks.

use std::fmt;
use std::str::FromStr;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::grid::BoxGrid;

/// A point of a directed set: a tuple of positive integer coordinates.
///
/// The derived `Ord` is the lexicographic order on coordinates and is only used
/// for deterministic enumeration; the directed order is [`DirectedSet::leq`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element(SmallVec<[u64; 4]>);

impl Element {
    pub fn new(coords: &[u64]) -> Self {
        Element(SmallVec::from_slice(coords))
    }

    pub fn single(value: u64) -> Self {
        Element(smallvec::smallvec![value])
    }

    pub fn coords(&self) -> &[u64] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    /// Concatenates two elements into an element of a product set.
    pub fn concat(&self, right: &Element) -> Element {
        let mut coords = self.0.clone();
        coords.extend_from_slice(&right.0);
        Element(coords)
    }

    /// Splits after the first `left_arity` coordinates.
    pub fn split(&self, left_arity: usize) -> (Element, Element) {
        (
            Element::new(&self.0[..left_arity]),
            Element::new(&self.0[left_arity..]),
        )
    }
}

impl From<u64> for Element {
    fn from(value: u64) -> Self {
        Element::single(value)
    }
}

impl<const N: usize> From<[u64; N]> for Element {
    fn from(coords: [u64; N]) -> Self {
        Element::new(&coords)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() == 1 {
            return write!(f, "{}", self.0[0]);
        }
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Element {
    type Err = Error;

    /// Accepts `5`, `2,3,4` or `(2,3,4)`.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        let coords = trimmed
            .split(',')
            .map(|part| part.trim().parse::<u64>())
            .collect::<std::result::Result<SmallVec<[u64; 4]>, _>>()
            .map_err(|e| Error::InvalidElement {
                element: s.to_string(),
                reason: e.to_string(),
            })?;
        Ok(Element(coords))
    }
}

/// One coordinate of a (possibly product) directed set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Factor {
    /// Positive integers in their usual order.
    Chain,
    /// Integers `≥ min` ordered by divisibility.
    Divisor { min: u64 },
}

impl Factor {
    pub(crate) fn min(self) -> u64 {
        match self {
            Factor::Chain => 1,
            Factor::Divisor { min } => min,
        }
    }

    fn down_values(self, b: u64) -> Vec<u64> {
        match self {
            Factor::Chain => (1..=b).collect(),
            Factor::Divisor { min } => divisors(b).into_iter().filter(|&d| d >= min).collect(),
        }
    }

    fn down_size(self, b: u64) -> u64 {
        match self {
            Factor::Chain => b,
            Factor::Divisor { min } => divisor_count(b) - u64::from(min > 1),
        }
    }

    fn up_values(self, g: u64, bound: u64) -> Vec<u64> {
        match self {
            Factor::Chain => (g..=bound).collect(),
            Factor::Divisor { .. } => (1..=bound / g).map(|k| k * g).collect(),
        }
    }

    fn join(self, a: u64, b: u64) -> Option<u64> {
        match self {
            Factor::Chain => Some(a.max(b)),
            Factor::Divisor { .. } => (a / gcd(a, b)).checked_mul(b),
        }
    }
}

/// The supported directed sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum DirectedSet {
    /// `N = {1, 2, ...}` with the usual order.
    Naturals,
    /// `N^d` with the coordinatewise order.
    Grid(usize),
    /// `N` ordered by divisibility.
    Divisibility,
    /// `N \ {1}` ordered by divisibility.
    DivisibilityExcludingOne,
    /// Cartesian product with the coordinatewise order.
    Product(Box<DirectedSet>, Box<DirectedSet>),
}

impl DirectedSet {
    pub fn grid(d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::FamilySpec {
                spec: "N^0".into(),
                reason: "grid arity must be at least 1".into(),
            });
        }
        Ok(DirectedSet::Grid(d))
    }

    pub fn product(left: DirectedSet, right: DirectedSet) -> Self {
        DirectedSet::Product(Box::new(left), Box::new(right))
    }

    pub fn arity(&self) -> usize {
        match self {
            DirectedSet::Naturals | DirectedSet::Divisibility | DirectedSet::DivisibilityExcludingOne => 1,
            DirectedSet::Grid(d) => *d,
            DirectedSet::Product(l, r) => l.arity() + r.arity(),
        }
    }

    pub(crate) fn factors(&self) -> Vec<Factor> {
        match self {
            DirectedSet::Naturals => vec![Factor::Chain],
            DirectedSet::Grid(d) => vec![Factor::Chain; *d],
            DirectedSet::Divisibility => vec![Factor::Divisor { min: 1 }],
            DirectedSet::DivisibilityExcludingOne => vec![Factor::Divisor { min: 2 }],
            DirectedSet::Product(l, r) => {
                let mut f = l.factors();
                f.extend(r.factors());
                f
            }
        }
    }

    pub(crate) fn has_divisor_factor(&self) -> bool {
        self.factors().iter().any(|f| matches!(f, Factor::Divisor { .. }))
    }

    /// The least element (every coordinate at its minimum).
    pub fn min_element(&self) -> Element {
        let coords: Vec<u64> = self.factors().iter().map(|f| f.min()).collect();
        Element::new(&coords)
    }

    pub fn check(&self, e: &Element) -> Result<()> {
        let factors = self.factors();
        if e.arity() != factors.len() {
            return Err(Error::InvalidElement {
                element: e.to_string(),
                reason: format!("arity {} does not match {} (arity {})", e.arity(), self, factors.len()),
            });
        }
        for (c, f) in e.coords().iter().zip(&factors) {
            if *c < f.min() {
                return Err(Error::InvalidElement {
                    element: e.to_string(),
                    reason: format!("coordinate {c} is below the minimum {}", f.min()),
                });
            }
        }
        Ok(())
    }

    pub fn leq(&self, a: &Element, b: &Element) -> Result<bool> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.leq_unchecked(a.coords(), b.coords()))
    }

    pub(crate) fn leq_unchecked(&self, a: &[u64], b: &[u64]) -> bool {
        match self {
            DirectedSet::Naturals | DirectedSet::Grid(_) => a.iter().zip(b).all(|(x, y)| x <= y),
            DirectedSet::Divisibility | DirectedSet::DivisibilityExcludingOne => b[0] % a[0] == 0,
            DirectedSet::Product(l, r) => {
                let k = l.arity();
                l.leq_unchecked(&a[..k], &b[..k]) && r.leq_unchecked(&a[k..], &b[k..])
            }
        }
    }

    /// `D_b = {a : a ≤ b}` in lexicographic order.
    pub fn down_set(&self, b: &Element) -> Result<Vec<Element>> {
        self.check(b)?;
        let size = self.down_set_size(b)?;
        if size > TruncationPolicy::DEFAULT_ELEMENT_CAP {
            return Err(Error::ResourceLimit {
                requested: u128::from(size),
                cap: TruncationPolicy::DEFAULT_ELEMENT_CAP,
            });
        }
        let per_coord: Vec<Vec<u64>> = self
            .factors()
            .iter()
            .zip(b.coords())
            .map(|(f, &v)| f.down_values(v))
            .collect();
        Ok(cartesian(&per_coord))
    }

    /// `|D_b|`, from closed forms: `b` on chains, `τ(b)` (or `τ(b) − 1`) on
    /// divisibility factors, multiplied across coordinates.
    pub fn down_set_size(&self, b: &Element) -> Result<u64> {
        self.check(b)?;
        self.factors()
            .iter()
            .zip(b.coords())
            .try_fold(1u64, |acc, (f, &v)| {
                let size = f.down_size(v);
                acc.checked_mul(size).ok_or(Error::ResourceLimit {
                    requested: u128::from(acc) * u128::from(size),
                    cap: u64::MAX,
                })
            })
    }

    /// Least upper bound: coordinatewise max on chains, lcm on divisibility factors.
    pub fn join(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check(a)?;
        self.check(b)?;
        let coords = self
            .factors()
            .iter()
            .zip(a.coords().iter().zip(b.coords()))
            .map(|(f, (&x, &y))| f.join(x, y))
            .collect::<Option<Vec<u64>>>()
            .ok_or_else(|| Error::InvalidElement {
                element: format!("join of {a} and {b}"),
                reason: "overflow".into(),
            })?;
        Ok(Element::new(&coords))
    }

    /// All elements within the frontier or horizon bound of `policy`.
    pub fn enumerate_frontier(&self, policy: &TruncationPolicy, which: Bound) -> Result<Vec<Element>> {
        let bound = match which {
            Bound::Frontier => policy.frontier(),
            Bound::Horizon => policy.horizon(),
        };
        Ok(BoxGrid::new(self, bound, policy.element_cap())?.elements())
    }

    /// `{a : g ≤ a}` restricted to the horizon of `policy`, lexicographic.
    pub fn up_set_within(&self, g: &Element, policy: &TruncationPolicy) -> Result<Vec<Element>> {
        self.check(g)?;
        let bound = policy.horizon();
        if g.coords().iter().any(|&c| c > bound) {
            return Err(Error::InvalidElement {
                element: g.to_string(),
                reason: format!("outside the horizon {bound}"),
            });
        }
        let per_coord: Vec<Vec<u64>> = self
            .factors()
            .iter()
            .zip(g.coords())
            .map(|(f, &v)| f.up_values(v, bound))
            .collect();
        let size: u128 = per_coord.iter().map(|v| v.len() as u128).product();
        if size > u128::from(policy.element_cap()) {
            return Err(Error::ResourceLimit {
                requested: size,
                cap: policy.element_cap(),
            });
        }
        Ok(cartesian(&per_coord))
    }
}

fn cartesian(per_coord: &[Vec<u64>]) -> Vec<Element> {
    let mut out = vec![Element(SmallVec::new())];
    for values in per_coord {
        let mut next = Vec::with_capacity(out.len() * values.len());
        for prefix in &out {
            for &v in values {
                let mut e = prefix.clone();
                e.0.push(v);
                next.push(e);
            }
        }
        out = next;
    }
    out
}

impl fmt::Display for DirectedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DirectedSet::Naturals => write!(f, "N"),
            DirectedSet::Grid(d) => write!(f, "N^{d}"),
            DirectedSet::Divisibility => write!(f, "div"),
            DirectedSet::DivisibilityExcludingOne => write!(f, "div1"),
            DirectedSet::Product(l, r) => write!(f, "prod({l},{r})"),
        }
    }
}

impl FromStr for DirectedSet {
    type Err = Error;

    /// Parses `N`, `N^d`, `div`, `div1` and `prod(<spec>,<spec>)`.
    fn from_str(s: &str) -> Result<Self> {
        let spec = s.trim();
        let err = |reason: &str| Error::FamilySpec {
            spec: s.to_string(),
            reason: reason.to_string(),
        };
        match spec {
            "N" => return Ok(DirectedSet::Naturals),
            "div" => return Ok(DirectedSet::Divisibility),
            "div1" => return Ok(DirectedSet::DivisibilityExcludingOne),
            _ => {}
        }
        if let Some(d) = spec.strip_prefix("N^") {
            let d: usize = d.trim().parse().map_err(|_| err("grid arity must be a positive integer"))?;
            return DirectedSet::grid(d).map_err(|_| err("grid arity must be at least 1"));
        }
        if let Some(inner) = spec.strip_prefix("prod(").and_then(|r| r.strip_suffix(')')) {
            // split at the top-level comma
            let mut depth = 0usize;
            for (i, ch) in inner.char_indices() {
                match ch {
                    '(' => depth += 1,
                    ')' => depth = depth.checked_sub(1).ok_or_else(|| err("unbalanced parentheses"))?,
                    ',' if depth == 0 => {
                        let left = inner[..i].parse()?;
                        let right = inner[i + 1..].parse()?;
                        return Ok(DirectedSet::product(left, right));
                    }
                    _ => {}
                }
            }
            return Err(err("prod needs two comma-separated components"));
        }
        Err(err("expected N, N^d, div, div1 or prod(a,b)"))
    }
}

/// Which truncation bound to enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bound {
    Frontier,
    Horizon,
}

/// Finite stand-in for an infinite directed set.
///
/// On chains and divisibility factors the horizon keeps integers `≤ H`; on
/// grids and products it keeps the box with every coordinate `≤ H`. Estimates
/// take the sup (or inf) over frontier elements `β` (every coordinate `≤ F`) of
/// the inf (or sup) over the truncated up-set of `β`. The refinement schedule
/// lists `(F, H)` pairs, strictly increasing in both, ending at `(F, H)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncationPolicy {
    frontier: u64,
    horizon: u64,
    refinement: Vec<(u64, u64)>,
    element_cap: u64,
}

impl TruncationPolicy {
    pub const DEFAULT_ELEMENT_CAP: u64 = 5_000_000;

    /// Policy with an explicit frontier and the default three-step schedule
    /// `(F/4, H/4), (F/2, H/2), (F, H)` (steps that would not be strictly
    /// increasing are dropped).
    pub fn new(frontier: u64, horizon: u64) -> Result<Self> {
        let steps = [4, 2, 1].iter().map(|&k| (frontier / k, horizon / k)).collect();
        Self::from_steps(steps, true)
    }

    /// Single-step policy, no refinement.
    pub fn single(frontier: u64, horizon: u64) -> Result<Self> {
        Self::from_steps(vec![(frontier, horizon)], false)
    }

    /// Family-aware defaults: `F = H/2` when every factor is a chain, and
    /// `F = ⌊√H⌋` when a divisibility factor is present, so that any two
    /// frontier elements have their lcm inside the horizon.
    pub fn for_family(ds: &DirectedSet, horizon: u64) -> Result<Self> {
        let steps = [4, 2, 1]
            .iter()
            .map(|&k| {
                let h = horizon / k;
                (default_frontier(ds, h), h)
            })
            .collect();
        Self::from_steps(steps, true)
    }

    /// Replaces the schedule. The last step becomes the policy's `(F, H)`.
    pub fn with_refinement(self, steps: Vec<(u64, u64)>) -> Result<Self> {
        let cap = self.element_cap;
        Ok(Self::from_steps(steps, false)?.with_element_cap(cap))
    }

    pub fn with_element_cap(mut self, cap: u64) -> Self {
        self.element_cap = cap;
        self
    }

    fn from_steps(mut steps: Vec<(u64, u64)>, prune: bool) -> Result<Self> {
        if prune {
            let last = *steps.last().expect("nonempty schedule");
            let mut kept: Vec<(u64, u64)> = Vec::new();
            for &(f, h) in steps.iter().rev() {
                match kept.last() {
                    Some(&(nf, nh)) if !(f >= 1 && f < nf && h < nh) => {}
                    _ => kept.push((f, h)),
                }
            }
            kept.reverse();
            debug_assert_eq!(kept.last(), Some(&last));
            steps = kept;
        }
        let Some(&(frontier, horizon)) = steps.last() else {
            return Err(Error::InvalidPolicy("empty refinement schedule".into()));
        };
        for &(f, h) in &steps {
            if f == 0 || h == 0 {
                return Err(Error::InvalidPolicy(format!("bounds must be positive, got ({f}, {h})")));
            }
            if f > h {
                return Err(Error::InvalidPolicy(format!("frontier {f} exceeds horizon {h}")));
            }
        }
        for w in steps.windows(2) {
            if !(w[0].0 < w[1].0 && w[0].1 < w[1].1) {
                return Err(Error::InvalidPolicy(format!(
                    "refinement must be strictly increasing, got {:?} then {:?}",
                    w[0], w[1]
                )));
            }
        }
        Ok(TruncationPolicy {
            frontier,
            horizon,
            refinement: steps,
            element_cap: Self::DEFAULT_ELEMENT_CAP,
        })
    }

    pub fn frontier(&self) -> u64 {
        self.frontier
    }

    pub fn horizon(&self) -> u64 {
        self.horizon
    }

    pub fn refinement(&self) -> &[(u64, u64)] {
        &self.refinement
    }

    pub fn element_cap(&self) -> u64 {
        self.element_cap
    }

    /// Refinement steps usable on `ds`: earlier steps whose frontier lies
    /// below the least element are skipped; the final step must be usable.
    pub(crate) fn steps_for(&self, ds: &DirectedSet) -> Result<Vec<(u64, u64)>> {
        let least = ds.factors().iter().map(|f| f.min()).max().unwrap_or(1);
        if self.frontier < least {
            return Err(Error::InvalidPolicy(format!(
                "frontier {} is below the least element of {ds}",
                self.frontier
            )));
        }
        let steps: Vec<(u64, u64)> = self.refinement.iter().copied().filter(|&(f, _)| f >= least).collect();
        if ds.has_divisor_factor() {
            // frontier elements need a common upper bound inside the horizon
            if let Some(&(f, h)) = steps.iter().find(|&&(f, h)| u128::from(f) * u128::from(f) > u128::from(h)) {
                return Err(Error::InvalidPolicy(format!(
                    "on {ds} the frontier must satisfy F² ≤ H, got F = {f}, H = {h}"
                )));
            }
        }
        Ok(steps)
    }
}

pub(crate) fn default_frontier(ds: &DirectedSet, horizon: u64) -> u64 {
    if ds.has_divisor_factor() {
        horizon.isqrt()
    } else {
        horizon / 2
    }
}

/// Sorted divisors by trial division up to `√m`.
pub fn divisors(m: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= m {
        if m % d == 0 {
            small.push(d);
            if d * d != m {
                large.push(m / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// `τ(m)` from the prime factorization by trial division.
pub fn divisor_count(mut m: u64) -> u64 {
    let mut count = 1;
    let mut p = 2;
    while p * p <= m {
        let mut e = 0;
        while m % p == 0 {
            m /= p;
            e += 1;
        }
        count *= e + 1;
        p += 1;
    }
    if m > 1 {
        count *= 2;
    }
    count
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

// ---------------------------------------------------------------------------
// Axiom validation

/// An order that can be validated by [`validate_axioms`].
pub trait OrderModel {
    fn arity(&self) -> usize;

    fn leq(&self, a: &Element, b: &Element) -> bool;

    /// Elements with every coordinate in `[min, bound]`, lexicographic.
    fn elements_within(&self, bound: u64, cap: u64) -> Result<Vec<Element>>;

    /// An upper bound of `a` and `b` inside `candidates`, if any.
    fn upper_bound(&self, a: &Element, b: &Element, candidates: &[Element]) -> Option<Element> {
        candidates.iter().find(|c| self.leq(a, c) && self.leq(b, c)).cloned()
    }
}

impl OrderModel for DirectedSet {
    fn arity(&self) -> usize {
        DirectedSet::arity(self)
    }

    fn leq(&self, a: &Element, b: &Element) -> bool {
        self.leq_unchecked(a.coords(), b.coords())
    }

    fn elements_within(&self, bound: u64, cap: u64) -> Result<Vec<Element>> {
        Ok(BoxGrid::new(self, bound, cap)?.elements())
    }

    /// The join is an explicit witness, so it need not lie among `candidates`.
    fn upper_bound(&self, a: &Element, b: &Element, _candidates: &[Element]) -> Option<Element> {
        let j = self.join(a, b).ok()?;
        (self.leq_unchecked(a.coords(), j.coords()) && self.leq_unchecked(b.coords(), j.coords())).then_some(j)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axiom {
    Reflexivity,
    Antisymmetry,
    Transitivity,
    Directedness,
    FiniteDownSets,
    UpSetGrowth,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::Reflexivity => "reflexivity",
            Axiom::Antisymmetry => "antisymmetry",
            Axiom::Transitivity => "transitivity",
            Axiom::Directedness => "directedness",
            Axiom::FiniteDownSets => "finite-down-sets",
            Axiom::UpSetGrowth => "up-set-growth",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    pub checked: u64,
    pub passed: bool,
    /// First violating instance, rendered.
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
    pub sampled: usize,
    /// An incomparable sampled pair together with the upper bound found for it.
    pub join_example: Option<(Element, Element, Element)>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, axiom: Axiom) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }
}

const AXIOM_SAMPLE: usize = 48;
const GROWTH_SAMPLE: usize = 12;

fn spread_sample<T: Clone>(items: &[T], n: usize) -> Vec<T> {
    if items.len() <= n {
        return items.to_vec();
    }
    (0..n).map(|i| items[i * (items.len() - 1) / (n - 1)].clone()).collect()
}

/// Checks the order axioms on a deterministic sample of the horizon.
///
/// Directedness asks the model for an upper bound (by default, a scan of the
/// doubled horizon). Finiteness of a down-set is proxied by its count being the
/// same inside the horizon and inside the doubled horizon; infiniteness of up-sets by strict growth of the
/// truncated up-set along the refinement horizons.
pub fn validate_axioms<M: OrderModel + ?Sized>(model: &M, policy: &TruncationPolicy) -> Result<AxiomReport> {
    let horizon = policy.horizon();
    let cap = policy.element_cap();
    let within = model.elements_within(horizon, cap)?;
    let doubled = model.elements_within(horizon.saturating_mul(2), cap)?;
    let sample = spread_sample(&within, AXIOM_SAMPLE);
    let mut checks = Vec::new();

    let mut run = |axiom: Axiom, results: &mut dyn Iterator<Item = std::result::Result<(), String>>| {
        let mut checked = 0;
        let mut witness = None;
        for r in results {
            checked += 1;
            if let Err(w) = r {
                witness = Some(w);
                break;
            }
        }
        checks.push(AxiomCheck {
            axiom,
            checked,
            passed: witness.is_none(),
            witness,
        });
    };

    run(
        Axiom::Reflexivity,
        &mut sample
            .iter()
            .map(|a| if model.leq(a, a) { Ok(()) } else { Err(format!("{a} ≰ {a}")) }),
    );

    let pairs: Vec<(&Element, &Element)> = sample.iter().flat_map(|a| sample.iter().map(move |b| (a, b))).collect();
    run(
        Axiom::Antisymmetry,
        &mut pairs.iter().map(|&(a, b)| {
            if a != b && model.leq(a, b) && model.leq(b, a) {
                Err(format!("{a} ≤ {b} and {b} ≤ {a}"))
            } else {
                Ok(())
            }
        }),
    );

    run(
        Axiom::Transitivity,
        &mut pairs
            .iter()
            .filter(|(a, b)| model.leq(a, b))
            .flat_map(|&(a, b)| sample.iter().map(move |c| (a, b, c)))
            .map(|(a, b, c)| {
                if model.leq(b, c) && !model.leq(a, c) {
                    Err(format!("{a} ≤ {b} ≤ {c} but {a} ≰ {c}"))
                } else {
                    Ok(())
                }
            }),
    );

    let mut join_example = None;
    run(
        Axiom::Directedness,
        &mut pairs.iter().map(|&(a, b)| match model.upper_bound(a, b, &doubled) {
            Some(u) => {
                if join_example.is_none() && !model.leq(a, b) && !model.leq(b, a) {
                    join_example = Some((a.clone(), b.clone(), u));
                }
                Ok(())
            }
            None => Err(format!("no upper bound of {a} and {b} within {}", horizon.saturating_mul(2))),
        }),
    );

    let growth_sample = spread_sample(&sample, GROWTH_SAMPLE);
    run(
        Axiom::FiniteDownSets,
        &mut growth_sample.iter().map(|b| {
            let inner = within.iter().filter(|a| model.leq(a, b)).count();
            let outer = doubled.iter().filter(|a| model.leq(a, b)).count();
            if inner == outer {
                Ok(())
            } else {
                Err(format!(
                    "down-set of {b} grows from {inner} to {outer} when the horizon doubles"
                ))
            }
        }),
    );

    let mut horizons: Vec<u64> = policy.refinement().iter().map(|&(_, h)| h).collect();
    if horizons.len() < 2 {
        horizons.push(horizon.saturating_mul(2));
    }
    let largest = if *horizons.last().unwrap() == horizon.saturating_mul(2) {
        doubled.clone()
    } else {
        within.clone()
    };
    let first = horizons[0];
    let growth_elems: Vec<Element> = spread_sample(
        &within
            .iter()
            .filter(|e| e.coords().iter().all(|&c| c <= first))
            .cloned()
            .collect::<Vec<_>>(),
        GROWTH_SAMPLE,
    );
    run(
        Axiom::UpSetGrowth,
        &mut growth_elems.iter().map(|g| {
            let counts: Vec<usize> = horizons
                .iter()
                .map(|&h| {
                    largest
                        .iter()
                        .filter(|a| a.coords().iter().all(|&c| c <= h) && model.leq(g, a))
                        .count()
                })
                .collect();
            if counts.windows(2).all(|w| w[0] < w[1]) {
                Ok(())
            } else {
                Err(format!("up-set of {g} does not grow along horizons {horizons:?}: {counts:?}"))
            }
        }),
    );

    Ok(AxiomReport {
        checks,
        sampled: sample.len(),
        join_example,
    })
}
