//! Path detection and cover verification: does a graph contain a path of
//! order k, and does a given vertex set hit every such path?

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A simple path on k distinct vertices, consecutive ones adjacent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathWitness {
    vertices: Vec<usize>,
}

impl PathWitness {
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }
}

/// Searches for a simple path on `k` vertices via depth-bounded DFS.
///
/// Deterministic: start vertices ascending, neighbors ascending; the first
/// witness found under that order is returned. Worst case O(n * Δ^(k-1)),
/// fine for the small fixed k this crate targets.
pub fn find_path_of_order(g: &Graph, k: usize) -> Result<Option<PathWitness>> {
    if k == 0 {
        return Err(Error::InvalidK("path order k must be at least 1".into()));
    }
    Ok(path_avoiding(g, k, &vec![false; g.n()]).map(|vertices| PathWitness { vertices }))
}

/// True iff `s` is a k-path vertex cover of `g`: no path of order k survives
/// in the graph left after removing `s`.
pub fn is_k_path_cover(g: &Graph, s: &VertexSet, k: usize) -> Result<bool> {
    if k == 0 {
        return Err(Error::InvalidK("path order k must be at least 1".into()));
    }
    s.validate_for(g).map_err(|e| match e {
        Error::InvalidVertexSet(msg) => Error::InvalidVertexSet(msg),
        other => other,
    })?;
    Ok(path_avoiding(g, k, &s.mask(g.n())).is_none())
}

/// DFS for a simple path on `k` vertices that avoids every masked vertex.
/// Equivalent to searching `delete_vertices(g, s)` but with no re-indexing,
/// so the exact oracle can call it in a tight loop.
pub(crate) fn path_avoiding(g: &Graph, k: usize, excluded: &[bool]) -> Option<Vec<usize>> {
    debug_assert!(k >= 1);
    if k > g.n() {
        return None;
    }
    let mut visited = vec![false; g.n()];
    let mut path = Vec::with_capacity(k);
    let mut iters = Vec::with_capacity(k);

    for start in g.vertices() {
        if excluded[start] {
            continue;
        }
        if k == 1 {
            return Some(vec![start]);
        }
        visited[start] = true;
        path.push(start);
        iters.push(g.neighbor_set(start).iter());

        while let Some(it) = iters.last_mut() {
            match it.next() {
                Some(&v) => {
                    if visited[v] || excluded[v] {
                        continue;
                    }
                    visited[v] = true;
                    path.push(v);
                    if path.len() == k {
                        return Some(path);
                    }
                    iters.push(g.neighbor_set(v).iter());
                }
                None => {
                    iters.pop();
                    let u = path.pop().expect("path tracks iters");
                    visited[u] = false;
                }
            }
        }
        // the unwind above cleared every visited flag
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::delete_vertices;

    fn path_graph(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>())
    }

    fn c4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])
    }

    #[test]
    fn first_witness_on_p5_is_prefix() {
        let w = find_path_of_order(&path_graph(5), 3).unwrap().unwrap();
        assert_eq!(w.vertices(), &[0, 1, 2]);
    }

    #[test]
    fn star_has_no_path_of_order_four() {
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        assert!(find_path_of_order(&star, 4).unwrap().is_none());
        // order 3 exists: leaf-center-leaf
        let w = find_path_of_order(&star, 3).unwrap().unwrap();
        assert_eq!(w.vertices(), &[1, 0, 2]);
    }

    #[test]
    fn c4_hamiltonian_witness() {
        let w = find_path_of_order(&c4(), 4).unwrap().unwrap();
        assert_eq!(w.vertices(), &[0, 1, 2, 3]);
    }

    #[test]
    fn k_larger_than_n_finds_nothing() {
        for k in 5..9 {
            assert!(find_path_of_order(&c4(), k).unwrap().is_none());
        }
    }

    #[test]
    fn k_zero_rejected() {
        assert!(matches!(
            find_path_of_order(&c4(), 0),
            Err(Error::InvalidK(_))
        ));
        assert!(matches!(
            is_k_path_cover(&c4(), &VertexSet::new(), 0),
            Err(Error::InvalidK(_))
        ));
    }

    #[test]
    fn opposite_vertices_cover_c4() {
        let s = VertexSet::from_unsorted(vec![0, 2]);
        assert!(is_k_path_cover(&c4(), &s, 3).unwrap());
    }

    #[test]
    fn single_vertex_does_not_cover_c4() {
        let s = VertexSet::from_unsorted(vec![0]);
        assert!(!is_k_path_cover(&c4(), &s, 3).unwrap());
        // the surviving path is 1-2-3
        let (rest, map) = delete_vertices(&c4(), &s);
        let w = find_path_of_order(&rest, 3).unwrap().unwrap();
        let orig: Vec<usize> = w.vertices().iter().map(|&v| map[v]).collect();
        assert_eq!(orig, vec![1, 2, 3]);
    }

    #[test]
    fn full_vertex_set_covers_everything() {
        let g = c4();
        let all: VertexSet = g.vertices().collect();
        for k in 1..6 {
            assert!(is_k_path_cover(&g, &all, k).unwrap());
        }
    }

    #[test]
    fn only_full_set_is_a_one_path_cover() {
        let g = path_graph(3);
        let all: VertexSet = g.vertices().collect();
        assert!(is_k_path_cover(&g, &all, 1).unwrap());
        let partial = VertexSet::from_unsorted(vec![0, 1]);
        assert!(!is_k_path_cover(&g, &partial, 1).unwrap());
    }

    #[test]
    fn invalid_cover_set_rejected() {
        let s = VertexSet::from_unsorted(vec![9]);
        assert!(matches!(
            is_k_path_cover(&c4(), &s, 3),
            Err(Error::InvalidVertexSet(_))
        ));
    }

    /// Independent oracle: enumerate every vertex sequence of length k.
    fn has_path_by_sequences(g: &Graph, k: usize) -> bool {
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

    #[test]
    fn dfs_agrees_with_sequence_enumeration_on_small_graphs() {
        // deterministic sweep over all graphs on 4 vertices plus a few on 5
        for bits in 0u32..64 {
            let edges: Vec<(usize, usize)> = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
                .iter()
                .enumerate()
                .filter(|(i, _)| bits & (1 << i) != 0)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edges(4, &edges);
            for k in 1..=5 {
                assert_eq!(
                    find_path_of_order(&g, k).unwrap().is_some(),
                    has_path_by_sequences(&g, k),
                    "bits={bits} k={k}"
                );
            }
        }
    }
}
