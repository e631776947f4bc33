//! Closed-form upper bounds on ψ_k from vertex degrees, for cross-checking
//! solvers and for reporting.
//!
//! Real-valued bounds use double precision; the sums involved are short and
//! well conditioned, so comparisons against integer optima are made with a
//! 1e-9 slack. Formula values below the trivial 0 are reported as-is, never
//! clamped.

use std::fmt;

use num_rational::Ratio;

use crate::graph::Graph;

pub type Rational = Ratio<u64>;

/// Caro–Wei bound on the vertex cover number: n - Σ 1/(1 + d(v)).
pub fn bound_caro_wei_vc(g: &Graph) -> f64 {
    let indep: f64 = g.vertices().map(|v| 1.0 / (1.0 + g.degree(v) as f64)).sum();
    g.n() as f64 - indep
}

/// Göring-style bound on ψ3:
/// n - Σ_v 1/(1 + d(v)) - Σ_{uv in E} 2 / (|N(u) ∪ N(v)| (|N(u) ∪ N(v)| - 1)).
///
/// For an edge uv the union of open neighborhoods contains both u and v, so
/// the denominator never vanishes.
pub fn bound_goering(g: &Graph) -> f64 {
    let edge_term: f64 = g
        .edges()
        .into_iter()
        .map(|(u, v)| {
            let union = g.neighbor_set(u).union(g.neighbor_set(v)).count() as f64;
            2.0 / (union * (union - 1.0))
        })
        .sum();
    bound_caro_wei_vc(g) - edge_term
}

/// Generalized Caro–Wei bound: ψ_k <= n - (k-1)/k · Σ_v 2/(1 + d(v)).
pub fn bound_generalized_cw(g: &Graph, k: usize) -> f64 {
    assert!(k >= 2, "the generalized bound needs k >= 2");
    let sum: f64 = g.vertices().map(|v| 2.0 / (1.0 + g.degree(v) as f64)).sum();
    g.n() as f64 - (k - 1) as f64 / k as f64 * sum
}

/// Exact rational (2n + m)/6 — the sparse solver's guarantee for ψ3. Kept
/// rational so tight families can be tested with equality.
pub fn bound_sparse3(g: &Graph) -> Rational {
    Ratio::new(2 * g.n() as u64 + g.m() as u64, 6)
}

/// All bounds applicable to a given k, with an optional known optimum for
/// comparison. Every upper bound here is >= psi_known whenever present
/// (checked by the test suite, not at construction).
#[derive(Clone, Debug)]
pub struct BoundReport {
    pub k: usize,
    pub generalized_cw: f64,
    /// Only for k = 2.
    pub caro_wei_vc: Option<f64>,
    /// Only for k = 3.
    pub goering: Option<f64>,
    /// Only for k = 3.
    pub sparse3: Option<Rational>,
    pub psi_known: Option<usize>,
}

pub fn bound_report(g: &Graph, k: usize, psi_known: Option<usize>) -> BoundReport {
    BoundReport {
        k,
        generalized_cw: bound_generalized_cw(g, k),
        caro_wei_vc: (k == 2).then(|| bound_caro_wei_vc(g)),
        goering: (k == 3).then(|| bound_goering(g)),
        sparse3: (k == 3).then(|| bound_sparse3(g)),
        psi_known,
    }
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "generalized_caro_wei: {}", self.generalized_cw)?;
        if let Some(b) = self.caro_wei_vc {
            writeln!(f, "caro_wei_vc: {b}")?;
        }
        if let Some(b) = self.goering {
            writeln!(f, "goering: {b}")?;
        }
        if let Some(b) = self.sparse3 {
            writeln!(f, "sparse3: {b}")?;
        }
        if let Some(psi) = self.psi_known {
            writeln!(f, "psi: {psi}")?;
        }
        Ok(())
    }
}
