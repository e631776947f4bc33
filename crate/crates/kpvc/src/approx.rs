//! Non-exact cover constructions: the k-approximation, the subcubic solver,
//! the sparse two-phase solver, and the randomized Caro–Wei-style cover.
//!
//! Seeded randomness is pinned to one concrete recipe so results reproduce
//! anywhere: a ChaCha8 stream seeded through `SeedableRng::seed_from_u64`
//! (SplitMix64 expansion), driving a Fisher–Yates shuffle in which position
//! i (from n-1 down to 1) swaps with `next_u64() % (i + 1)`.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{Error, Result};
use crate::graph::{delete_vertices, Graph, VertexSet};
use crate::partition::cover3_via_partition;
use crate::tree::pvcp_tree;
use crate::verify::path_avoiding;

/// Repeatedly finds a path on k vertices and takes all k of them.
///
/// Every removed batch intersects every optimal cover, so the result has at
/// most k * ψ_k(g) vertices.
pub fn greedy_k_approx(g: &Graph, k: usize) -> VertexSet {
    assert!(k >= 2, "greedy approximation requires k >= 2");
    let mut cur = g.clone();
    let mut to_orig: Vec<usize> = g.vertices().collect();
    let mut cover = Vec::new();

    while let Some(path) = path_avoiding(&cur, k, &vec![false; cur.n()]) {
        cover.extend(path.iter().map(|&v| to_orig[v]));
        let (next, back) = delete_vertices(&cur, &path.iter().copied().collect());
        to_orig = back.into_iter().map(|v| to_orig[v]).collect();
        cur = next;
    }
    VertexSet::from_unsorted(cover)
}

/// Deletes, lowest index first, vertices whose degree in the remaining graph
/// is at least `threshold`; returns the selections in order.
fn strip_by_degree(g: &Graph, threshold: usize) -> Vec<usize> {
    let mut degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut alive = vec![true; g.n()];
    let mut picked = Vec::new();
    loop {
        let Some(v) = g.vertices().find(|&v| alive[v] && degree[v] >= threshold) else {
            return picked;
        };
        alive[v] = false;
        for u in g.neighbors(v) {
            if alive[u] {
                degree[u] -= 1;
            }
        }
        degree[v] = 0;
        picked.push(v);
    }
}

/// 3-path cover of a graph with maximum degree at most 3, of size at most
/// min(n/2, m/2).
///
/// Runs two strategies and keeps the smaller result (the degree strategy on
/// ties): (a) repeatedly delete the lowest-index vertex of current degree at
/// least 2, which costs at most m/2 selections; (b) the partition cover,
/// which costs at most n/2 for subcubic graphs.
pub fn subcubic_cover3(g: &Graph) -> Result<VertexSet> {
    let delta = g.max_degree();
    if delta > 3 {
        return Err(Error::DegreeExceeded {
            found: delta,
            limit: 3,
        });
    }
    let by_degree: VertexSet = strip_by_degree(g, 2).into_iter().collect();
    let by_partition = cover3_via_partition(g);
    Ok(if by_degree.len() <= by_partition.len() {
        by_degree
    } else {
        by_partition
    })
}

/// What the sparse solver did: the cover plus how many vertices each phase
/// selected, for checking the (2n + m)/6 accounting.
#[derive(Clone, Debug)]
pub struct Sparse3Trace {
    pub cover: VertexSet,
    /// First phase: vertices that had degree >= 4 when selected.
    pub high_degree_selected: usize,
    /// Second phase: size of the subcubic cover of the remainder.
    pub subcubic_selected: usize,
}

/// 3-path cover of size at most (2n + m)/6 for an arbitrary graph.
///
/// Phase one strips vertices of current degree at least 4 (lowest index
/// first); phase two runs the subcubic solver on what is left. With s and d
/// the phase sizes, s + 2d <= n and 4s + 2d <= m.
pub fn sparse3(g: &Graph) -> VertexSet {
    sparse3_trace(g).cover
}

pub fn sparse3_trace(g: &Graph) -> Sparse3Trace {
    let stripped = strip_by_degree(g, 4);
    let high: VertexSet = stripped.iter().copied().collect();
    let (rest, back) = delete_vertices(g, &high);
    let sub = subcubic_cover3(&rest).expect("stripping leaves maximum degree <= 3");
    let cover = high.union(&sub.iter().map(|v| back[v]).collect());
    Sparse3Trace {
        cover,
        high_degree_selected: stripped.len(),
        subcubic_selected: sub.len(),
    }
}

/// Fisher–Yates permutation of 0..n under the pinned RNG recipe above.
pub fn seeded_permutation(n: usize, seed: u64) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = (rng.next_u64() % (i as u64 + 1)) as usize;
        perm.swap(i, j);
    }
    perm
}

/// Greedy 1-degenerate set: process vertices in the seeded random order and
/// take each one unless two of its neighbors were already taken. Every
/// member has at most one earlier neighbor in the set, so the set induces a
/// forest.
pub fn one_degenerate_set(g: &Graph, seed: u64) -> VertexSet {
    let mut taken = vec![false; g.n()];
    for &v in &seeded_permutation(g.n(), seed) {
        let earlier = g.neighbors(v).filter(|&u| taken[u]).count();
        if earlier < 2 {
            taken[v] = true;
        }
    }
    g.vertices().filter(|&v| taken[v]).collect()
}

/// Randomized cover: protect everything outside the 1-degenerate set S, then
/// solve the forest induced by S optimally. The size is at most
/// n - (1 - 1/k) * |S|.
pub fn caro_wei_cover(g: &Graph, k: usize, seed: u64) -> VertexSet {
    assert!(k >= 2, "caro-wei cover requires k >= 2");
    let s = one_degenerate_set(g, seed);
    let outside = s.complement(g.n());
    let (forest, back) = delete_vertices(g, &outside);
    let on_forest = pvcp_tree(&forest, k).expect("a 1-degenerate set induces a forest");
    outside.union(&on_forest.iter().map(|v| back[v]).collect())
}
