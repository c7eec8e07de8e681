//! Serialization: CSV series (header row, LF endings, `.` decimals, twelve
//! fractional digits) and `key: value` text reports.

use std::fmt;
use std::io::Write;

use crate::density::{ConditionStar, DensityReport, LimitEstimate};
use crate::directed::AxiomReport;
use crate::nets::{CauchyVerdict, ConvergenceVerdict};
use crate::netspace::Classification;

pub fn decimal(v: f64) -> String {
    format!("{v:.12}")
}

fn csv_writer<W: Write>(w: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .flexible(true)
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(w)
}

/// One row per frontier element `β` of the final step with the exact ratio at
/// `β`, then a `summary` footer row.
pub fn write_density_csv<W: Write>(report: &DensityReport, arity: usize, w: W) -> csv::Result<()> {
    let mut out = csv_writer(w);
    let mut header: Vec<String> = (1..=arity).map(|i| format!("x{i}")).collect();
    header.extend(["numerator", "denominator", "ratio"].map(String::from));
    out.write_record(&header)?;
    for (e, r) in &report.series {
        let mut row: Vec<String> = e.coords().iter().map(u64::to_string).collect();
        row.push(r.numer().to_string());
        row.push(r.denom().to_string());
        row.push(decimal(*r.numer() as f64 / *r.denom() as f64));
        out.write_record(&row)?;
    }
    out.write_record([
        "summary".to_string(),
        format!("lower_est={}", decimal(report.lower_est)),
        format!("upper_est={}", decimal(report.upper_est)),
        format!("exists={}", report.exists),
    ])?;
    out.flush()?;
    Ok(())
}

/// `frontier,horizon,liminf,limsup` per refinement step.
pub fn write_estimates_csv<W: Write>(lower: &LimitEstimate, upper: &LimitEstimate, w: W) -> csv::Result<()> {
    let mut out = csv_writer(w);
    out.write_record(["frontier", "horizon", "liminf", "limsup"])?;
    for (lo, hi) in lower.steps.iter().zip(&upper.steps) {
        out.write_record([
            lo.frontier.to_string(),
            lo.horizon.to_string(),
            decimal(lo.value),
            decimal(hi.value),
        ])?;
    }
    out.flush()?;
    Ok(())
}

/// `eps,lower_est,upper_est,exists` for each density report.
pub fn write_per_eps_csv<W: Write>(per_eps: &[(f64, DensityReport)], w: W) -> csv::Result<()> {
    let mut out = csv_writer(w);
    out.write_record(["eps", "lower_est", "upper_est", "exists"])?;
    for (eps, r) in per_eps {
        out.write_record([
            eps.to_string(),
            decimal(r.lower_est),
            decimal(r.upper_est),
            r.exists.to_string(),
        ])?;
    }
    out.flush()?;
    Ok(())
}

pub const CLASSIFICATION_HEADER: [&str; 7] = ["label", "in_m", "in_m_cy", "in_m_ct", "in_m_0", "sup_norm", "limit"];

pub fn write_classifications_csv<W: Write>(rows: &[(String, Classification)], w: W) -> csv::Result<()> {
    let mut out = csv_writer(w);
    out.write_record(CLASSIFICATION_HEADER)?;
    for (label, c) in rows {
        out.write_record([
            label.clone(),
            c.in_m.to_string(),
            c.in_m_cy.to_string(),
            c.in_m_ct.to_string(),
            c.in_m_0.to_string(),
            decimal(c.sup_norm),
            c.limit.as_ref().map_or_else(String::new, |l| point(l)),
        ])?;
    }
    out.flush()?;
    Ok(())
}

pub fn point(p: &[f64]) -> String {
    let parts: Vec<String> = p.iter().map(|v| v.to_string()).collect();
    if parts.len() == 1 {
        parts[0].clone()
    } else {
        format!("({})", parts.join(","))
    }
}

/// Ordered `key: value` lines.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TextReport {
    lines: Vec<(String, String)>,
}

impl TextReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl ToString) -> &mut Self {
        self.lines.push((key.into(), value.to_string()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.lines.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn lines(&self) -> &[(String, String)] {
        &self.lines
    }
}

impl fmt::Display for TextReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in &self.lines {
            writeln!(f, "{k}: {v}")?;
        }
        Ok(())
    }
}

pub fn density_text(r: &DensityReport) -> TextReport {
    let mut t = TextReport::new();
    t.push("lower_est", decimal(r.lower_est))
        .push("upper_est", decimal(r.upper_est))
        .push("lower_exact", r.lower_exact())
        .push("upper_exact", r.upper_exact())
        .push("exists", r.exists)
        .push("frontier", r.policy_used.frontier())
        .push("horizon", r.policy_used.horizon());
    for (i, s) in r.steps.iter().enumerate() {
        t.push(
            format!("step.{i}"),
            format!(
                "F={} H={} lower={} upper={}",
                s.frontier,
                s.horizon,
                decimal(crate::density::to_f64(s.lower)),
                decimal(crate::density::to_f64(s.upper))
            ),
        );
    }
    t
}

pub fn estimates_text(lower: &LimitEstimate, upper: &LimitEstimate) -> TextReport {
    let mut t = TextReport::new();
    t.push("liminf_est", decimal(lower.value)).push("limsup_est", decimal(upper.value));
    for (i, (lo, hi)) in lower.steps.iter().zip(&upper.steps).enumerate() {
        t.push(
            format!("step.{i}"),
            format!("F={} H={} liminf={} limsup={}", lo.frontier, lo.horizon, decimal(lo.value), decimal(hi.value)),
        );
    }
    t
}

fn per_eps_lines(t: &mut TextReport, per_eps: &[(f64, DensityReport)]) {
    for (eps, r) in per_eps {
        t.push(
            format!("eps.{eps}"),
            format!("lower={} upper={} exists={}", decimal(r.lower_est), decimal(r.upper_est), r.exists),
        );
    }
}

pub fn convergence_text(v: &ConvergenceVerdict) -> TextReport {
    let mut t = TextReport::new();
    t.push("limit", point(&v.limit)).push("converges", v.converges).push("tol", v.tol);
    per_eps_lines(&mut t, &v.per_eps);
    t
}

pub fn cauchy_text(v: &CauchyVerdict) -> TextReport {
    let mut t = TextReport::new();
    t.push("cauchy", v.cauchy)
        .push("witness", v.witness.as_ref().map_or_else(|| "none".into(), |w| w.to_string()))
        .push("candidates_tried", v.candidates_tried);
    per_eps_lines(&mut t, &v.per_eps);
    t
}

pub fn star_text(s: &ConditionStar) -> TextReport {
    let mut t = TextReport::new();
    t.push("gamma", &s.gamma)
        .push("holds", s.holds)
        .push("limsup_est", decimal(s.limsup_est))
        .push("lower_est", decimal(s.lower_est));
    t
}

pub fn classification_text(c: &Classification) -> TextReport {
    let mut t = TextReport::new();
    t.push("in_m", c.in_m)
        .push("in_m_cy", c.in_m_cy)
        .push("in_m_ct", c.in_m_ct)
        .push("in_m_0", c.in_m_0)
        .push("sup_norm", decimal(c.sup_norm))
        .push("limit", c.limit.as_ref().map_or_else(|| "none".into(), |l| point(l)))
        .push("detected_limit (heuristic)", point(&c.detected.limit));
    t
}

pub fn axioms_text(r: &AxiomReport) -> TextReport {
    let mut t = TextReport::new();
    t.push("passed", r.passed()).push("sampled", r.sampled);
    for c in &r.checks {
        let status = if c.passed { "pass" } else { "fail" };
        let w = c.witness.as_deref().map(|w| format!(" ({w})")).unwrap_or_default();
        t.push(c.axiom.to_string(), format!("{status} checked={}{w}", c.checked));
    }
    if let Some((a, b, j)) = &r.join_example {
        t.push("join_example", format!("{a} ∨ {b} = {j}"));
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::density::{density, SetPredicate};
    use crate::directed::{DirectedSet, TruncationPolicy};

    #[test]
    fn density_csv_layout() {
        let evens = SetPredicate::new(|e| e.coords()[0] % 2 == 0);
        let p = TruncationPolicy::single(2, 4).unwrap();
        let r = density(&evens, &DirectedSet::Naturals, &p).unwrap();
        let mut buf = Vec::new();
        write_density_csv(&r, 1, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(
            text,
            "x1,numerator,denominator,ratio\n\
             1,0,1,0.000000000000\n\
             2,1,2,0.500000000000\n\
             summary,lower_est=0.333333333333,upper_est=0.500000000000,exists=inconclusive\n"
        );
    }

    #[test]
    fn text_report() {
        let mut t = TextReport::new();
        t.push("a", 1).push("b", "x");
        assert_eq!(t.to_string(), "a: 1\nb: x\n");
        assert_eq!(t.get("b"), Some("x"));
        assert_eq!(point(&[1.0, -2.5]), "(1,-2.5)");
    }
}
