//! The gauge of a bounded net with respect to a norm ball, and classification
//! of truncated nets into bounded (`M`), statistically Cauchy (`M_cy`),
//! statistically convergent (`M_ct`) and statistically null (`M_0`) nets.
//!
//! For the open ball `U` of radius `r`, `p_U(x) = sup {λ ≥ 0 : λ x_α ∈ U ∀α}`
//! equals `r / s` with `s` the sup-norm of the net (over the horizon), and is
//! unbounded when `s = 0`. Whether `U` is open or closed does not change it.

use std::fmt;

use crate::directed::{Element, TruncationPolicy};
use crate::error::{Error, Result};
use crate::grid::BoxGrid;
use crate::nets::{
    detect_limit, scale_nets, stat_cauchy, stat_converges_to, CauchyVerdict, ConvergenceVerdict, IndexMode, Net,
    Point, Scalar, DEFAULT_EPS, DEFAULT_TOL,
};

/// Open ball of radius `r` about zero in the net's norm.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BalancedNeighborhood {
    radius: f64,
}

impl BalancedNeighborhood {
    pub fn new(radius: f64) -> Result<Self> {
        if radius > 0.0 && radius.is_finite() {
            Ok(BalancedNeighborhood { radius })
        } else {
            Err(Error::InvalidArgument(format!("radius must be positive and finite, got {radius}")))
        }
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum GaugeValue {
    Finite(f64),
    /// Every `λ` qualifies (the net is identically zero).
    Infinite,
}

impl GaugeValue {
    pub fn value(self) -> f64 {
        match self {
            GaugeValue::Finite(v) => v,
            GaugeValue::Infinite => f64::INFINITY,
        }
    }
}

impl fmt::Display for GaugeValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GaugeValue::Finite(v) => write!(f, "{v}"),
            GaugeValue::Infinite => f.write_str("inf"),
        }
    }
}

/// `max ‖x_α‖` over the horizon box.
pub fn sup_norm(net: &Net, policy: &TruncationPolicy) -> Result<f64> {
    let grid = BoxGrid::new(net.ds(), policy.horizon(), policy.element_cap())?;
    let mut s: f64 = 0.0;
    let mut bad = None;
    grid.for_each(|_, coords| {
        let e = Element::new(coords);
        let v = net.metric().norm(&net.eval(&e));
        if v.is_nan() && bad.is_none() {
            bad = Some(e);
        }
        s = s.max(v);
    });
    match bad {
        Some(e) => Err(Error::NonFinite {
            value: f64::NAN,
            element: e.to_string(),
        }),
        None => Ok(s),
    }
}

pub fn gauge(net: &Net, u: &BalancedNeighborhood, policy: &TruncationPolicy) -> Result<GaugeValue> {
    let s = sup_norm(net, policy)?;
    Ok(if s == 0.0 {
        GaugeValue::Infinite
    } else {
        GaugeValue::Finite(u.radius / s)
    })
}

/// `p_U(x) < 1`, i.e. the net leaves the ball somewhere on the horizon.
pub fn in_n_u(net: &Net, u: &BalancedNeighborhood, policy: &TruncationPolicy) -> Result<bool> {
    Ok(gauge(net, u, policy)?.value() < 1.0)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScalingReport {
    pub c: f64,
    pub original: GaugeValue,
    pub scaled: GaugeValue,
    /// `original / |c|`.
    pub expected: GaugeValue,
    pub holds: bool,
}

/// Relative tolerance of [`gauge_scaling_property`].
pub const GAUGE_TOLERANCE: f64 = 1e-12;

/// `p_U(c·x) = p_U(x) / |c|`.
pub fn gauge_scaling_property(
    net: &Net,
    u: &BalancedNeighborhood,
    c: f64,
    policy: &TruncationPolicy,
) -> Result<ScalingReport> {
    if c == 0.0 || !c.is_finite() {
        return Err(Error::InvalidArgument(format!("scale must be nonzero and finite, got {c}")));
    }
    let original = gauge(net, u, policy)?;
    let scaled = gauge(&scale_nets(&Scalar::Constant(c), net, IndexMode::Shared)?, u, policy)?;
    let expected = match original {
        GaugeValue::Finite(v) => GaugeValue::Finite(v / c.abs()),
        GaugeValue::Infinite => GaugeValue::Infinite,
    };
    let holds = match (scaled, expected) {
        (GaugeValue::Infinite, GaugeValue::Infinite) => true,
        (GaugeValue::Finite(a), GaugeValue::Finite(b)) => (a - b).abs() <= GAUGE_TOLERANCE * a.abs().max(b.abs()),
        _ => false,
    };
    Ok(ScalingReport {
        c,
        original,
        scaled,
        expected,
        holds,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClassifyOptions {
    pub eps: Vec<f64>,
    pub tol: f64,
    /// Sup-norms above this count as unbounded.
    pub bound_cap: f64,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            eps: DEFAULT_EPS.to_vec(),
            tol: DEFAULT_TOL,
            bound_cap: 1e9,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Classification {
    pub in_m: bool,
    pub in_m_cy: bool,
    pub in_m_ct: bool,
    pub in_m_0: bool,
    pub sup_norm: f64,
    /// The accepted statistical limit, if any.
    pub limit: Option<Point>,
    pub cauchy: Vec<CauchyVerdict>,
    pub detected: ConvergenceVerdict,
    pub zero: ConvergenceVerdict,
}

impl Classification {
    /// `M_0 ⊆ M_ct ⊆ M_cy ⊆ M` on the returned flags.
    pub fn chain_holds(&self) -> bool {
        (!self.in_m_0 || self.in_m_ct) && (!self.in_m_ct || self.in_m_cy) && (!self.in_m_cy || self.in_m)
    }
}

/// Classifies a truncated net. Every class lives inside `M`, and a net accepted
/// as convergent (to its detected limit or to zero) is also counted as Cauchy,
/// since statistical convergence implies statistical Cauchyness.
pub fn classify(net: &Net, policy: &TruncationPolicy, opts: &ClassifyOptions) -> Result<Classification> {
    let sup = sup_norm(net, policy)?;
    let in_m = sup.is_finite() && sup <= opts.bound_cap;
    let zero = stat_converges_to(net, &vec![0.0; net.dim()], &opts.eps, policy, opts.tol)?;
    let detected = detect_limit(net, &opts.eps, policy, opts.tol)?.verdict;
    let cauchy = opts
        .eps
        .iter()
        .map(|&eps| stat_cauchy(net, eps, policy, opts.tol))
        .collect::<Result<Vec<_>>>()?;
    let in_m_0 = in_m && zero.converges;
    let in_m_ct = in_m && (detected.converges || in_m_0);
    let in_m_cy = in_m && (cauchy.iter().all(|v| v.cauchy) || in_m_ct);
    let limit = if in_m_0 {
        Some(zero.limit.clone())
    } else if in_m_ct {
        Some(detected.limit.clone())
    } else {
        None
    };
    Ok(Classification {
        in_m,
        in_m_cy,
        in_m_ct,
        in_m_0,
        sup_norm: sup,
        limit,
        cauchy,
        detected,
        zero,
    })
}
