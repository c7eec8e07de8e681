//! Asymptotic density on directed sets and statistical convergence of nets.
//!
//! The crate works with directed sets whose down-sets `{α : α ≤ β}` are finite
//! and whose up-sets are infinite: the naturals, finite grids `N^d` under the
//! product order, the naturals ordered by divisibility (with or without `1`),
//! and finite products of these. On top of that it provides
//!
//! * exact density ratios `|A ∩ D_β| / |D_β|` and truncated `liminf` / `limsup`
//!   estimators over the net `β ↦ ratio`,
//! * statistical convergence and statistical Cauchyness of nets valued in
//!   `R^k` with a norm-induced metric,
//! * the gauge `p_U` on bounded nets and a classification into the net spaces
//!   `M ⊇ M_cy ⊇ M_ct ⊇ M_0`,
//! * a small expression language and a command line front end.
//!
//! Limits over an infinite directed set cannot be computed from finite data, so
//! every estimate is taken over a finite truncation (see [`TruncationPolicy`])
//! and checked for stability across a refinement schedule.

pub mod cli;
pub mod density;
pub mod directed;
mod error;
pub mod expr;
pub mod fixtures;
mod grid;
pub mod nets;
pub mod netspace;
pub mod report;

pub use density::{
    condition_star, density, density_with, liminf_estimate, limsup_estimate,
    product_density_check, ratio, union_complement_ratios, DensityOptions, DensityReport,
    Existence, SetPredicate,
};
pub use directed::{DirectedSet, Element, TruncationPolicy};
pub use error::{Error, Result};
pub use nets::{ConvergenceVerdict, CauchyVerdict, Metric, Net, Point};
pub use netspace::{classify, gauge, in_n_u, BalancedNeighborhood, GaugeValue};
