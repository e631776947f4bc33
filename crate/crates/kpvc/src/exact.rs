//! Brute-force computation of ψ_k and a minimum cover. Ground truth for
//! every other solver, so it favors correctness and determinism over speed.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{delete_vertices, Graph, VertexSet};
use crate::verify::path_avoiding;

/// Default cap on the instance size the subset sweep will accept.
pub const DEFAULT_ORACLE_CAP: usize = 20;

/// ψ_k together with a witness cover attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactResult {
    pub psi: usize,
    pub cover: VertexSet,
}

/// Computes ψ_k(g) exactly by enumerating vertex subsets in order of
/// increasing size, lexicographically within each size, stopping at the
/// first cover. That order makes the result the lexicographically least
/// minimum cover, with no second pass needed.
///
/// `budget` overrides the hard size cap (default 20). Oversized instances
/// are rejected outright — never approximated.
///
/// Isolated vertices are excluded from candidate covers: for k >= 2 they lie
/// on no forbidden path, so no minimum cover contains one.
pub fn psi_exact(g: &Graph, k: usize, budget: Option<usize>) -> Result<ExactResult> {
    if k < 2 {
        return Err(Error::InvalidK(
            "the oracle requires k >= 2 (every 1-path cover is all of V)".into(),
        ));
    }
    let cap = budget.unwrap_or(DEFAULT_ORACLE_CAP);
    if g.n() > cap {
        return Err(Error::InstanceTooLarge { n: g.n(), cap });
    }

    // Disjoint components are independent; solving them separately preserves
    // the lexicographically-least guarantee because the merged cover differs
    // from any other minimum cover first inside some single component.
    let comps = g.components();
    let mut cover = Vec::new();
    if comps.len() == 1 {
        cover = sweep_component(g, k);
    } else {
        for comp in comps {
            let outside: VertexSet = g.vertices().filter(|v| !comp.contains(v)).collect();
            let (sub, back) = delete_vertices(g, &outside);
            cover.extend(sweep_component(&sub, k).into_iter().map(|v| back[v]));
        }
    }
    let cover = VertexSet::from_unsorted(cover);
    Ok(ExactResult {
        psi: cover.len(),
        cover,
    })
}

fn sweep_component(g: &Graph, k: usize) -> Vec<usize> {
    let candidates: Vec<usize> = g.vertices().filter(|&v| g.degree(v) > 0).collect();
    let mut mask = vec![false; g.n()];
    for size in 0..=candidates.len() {
        for combo in candidates.iter().copied().combinations(size) {
            for &v in &combo {
                mask[v] = true;
            }
            let covered = path_avoiding(g, k, &mask).is_none();
            for &v in &combo {
                mask[v] = false;
            }
            if covered {
                return combo;
            }
        }
    }
    // removing every non-isolated vertex always works for k >= 2
    unreachable!("subset sweep exhausted without finding a cover");
}
