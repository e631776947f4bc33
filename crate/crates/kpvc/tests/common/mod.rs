//! Shared test support: seeded instance generators and independent
//! brute-force oracles. The oracles here deliberately avoid the library's
//! own path search and subset sweep so they can stand as second opinions.

#![allow(dead_code)] // each integration test binary uses a different subset

use kpvc::approx::seeded_permutation;
use kpvc::graph::Graph;

/// All vertex pairs of an n-vertex graph in lexicographic order.
pub fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    pairs
}

/// Random graph with exactly min(m_target, C(n,2)) edges, chosen as a seeded
/// random subset of all pairs.
pub fn rand_graph(n: usize, m_target: usize, seed: u64) -> Graph {
    let pairs = all_pairs(n);
    let perm = seeded_permutation(pairs.len(), seed);
    let m = m_target.min(pairs.len());
    let mut g = Graph::new(n);
    for &i in perm.iter().take(m) {
        let (u, v) = pairs[i];
        g.add_edge(u, v);
    }
    g
}

/// Like `rand_graph`, but every vertex ends with degree at least 1 (each
/// isolated vertex gets one extra edge to its cyclic successor).
pub fn rand_graph_no_isolated(n: usize, m_target: usize, seed: u64) -> Graph {
    assert!(n >= 2);
    let mut g = rand_graph(n, m_target, seed);
    for v in 0..n {
        if g.degree(v) == 0 {
            g.add_edge(v, (v + 1) % n);
        }
    }
    g
}

/// Random graph with maximum degree at most 3: scan the pairs in seeded
/// random order and take an edge whenever both endpoints still have room.
pub fn rand_subcubic(n: usize, m_target: usize, seed: u64) -> Graph {
    let pairs = all_pairs(n);
    let perm = seeded_permutation(pairs.len(), seed);
    let mut g = Graph::new(n);
    for &i in perm.iter() {
        if g.m() >= m_target {
            break;
        }
        let (u, v) = pairs[i];
        if g.degree(u) < 3 && g.degree(v) < 3 {
            g.add_edge(u, v);
        }
    }
    g
}

fn adjacency_masks(g: &Graph) -> Vec<u32> {
    assert!(g.n() <= 32);
    let mut masks = vec![0u32; g.n()];
    for (u, v) in g.edges() {
        masks[u] |= 1 << v;
        masks[v] |= 1 << u;
    }
    masks
}

/// Minimum vertex cover size by direct subset enumeration over edges.
pub fn min_vertex_cover_brute(g: &Graph) -> usize {
    let edges = g.edges();
    let n = g.n();
    assert!(n <= 20);
    for size in 0..=n {
        let mut found = None;
        visit_subsets(n, size, &mut |mask| {
            if found.is_none() && edges.iter().all(|&(u, v)| mask & (1 << u) != 0 || mask & (1 << v) != 0) {
                found = Some(size);
            }
        });
        if let Some(s) = found {
            return s;
        }
    }
    unreachable!("V itself covers all edges")
}

/// Maximum independent set size by exhaustive mask enumeration.
pub fn max_independent_set_brute(g: &Graph) -> usize {
    let masks = adjacency_masks(g);
    let n = g.n();
    assert!(n <= 20);
    let mut best = 0;
    for mask in 0u32..1 << n {
        if mask.count_ones() as usize > best
            && (0..n).all(|v| mask & (1 << v) == 0 || masks[v] & mask == 0)
        {
            best = mask.count_ones() as usize;
        }
    }
    best
}

/// Dissociation number: the largest vertex set inducing maximum degree <= 1,
/// by exhaustive mask enumeration.
pub fn dissociation_brute(g: &Graph) -> usize {
    let masks = adjacency_masks(g);
    let n = g.n();
    assert!(n <= 20);
    let mut best = 0;
    for mask in 0u32..1 << n {
        if mask.count_ones() as usize > best
            && (0..n).all(|v| mask & (1 << v) == 0 || (masks[v] & mask).count_ones() <= 1)
        {
            best = mask.count_ones() as usize;
        }
    }
    best
}

fn visit_subsets(n: usize, size: usize, f: &mut impl FnMut(u32)) {
    fn rec(n: usize, size: usize, start: usize, mask: u32, f: &mut impl FnMut(u32)) {
        if size == 0 {
            f(mask);
            return;
        }
        for v in start..=n.saturating_sub(size) {
            rec(n, size - 1, v + 1, mask | (1 << v), f);
        }
    }
    rec(n, size, 0, 0, f);
}

/// Exhaustive path-existence check over all vertex sequences of length k.
pub fn has_path_by_sequences(g: &Graph, k: usize) -> bool {
    fn rec(g: &Graph, k: usize, seq: &mut Vec<usize>) -> bool {
        if seq.len() == k {
            return true;
        }
        for v in g.vertices() {
            if seq.contains(&v) {
                continue;
            }
            if let Some(&last) = seq.last() {
                if !g.has_edge(last, v) {
                    continue;
                }
            }
            seq.push(v);
            if rec(g, k, seq) {
                return true;
            }
            seq.pop();
        }
        false
    }
    rec(g, k, &mut Vec::new())
}
