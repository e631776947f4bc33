//! Vertex partition into classes of bounded induced degree via deterministic
//! local search, and the 3-path cover it yields.
//!
//! With p classes and maximum degree Δ, every vertex ends with at most
//! ⌊Δ/p⌋ same-class neighbors. Each move strictly decreases the total number
//! of intra-class edges, so at most m moves happen.

use crate::graph::{Graph, VertexSet};

/// Assignment of every vertex to one of `p` classes, with per-vertex counts
/// of same-class neighbors and the number of local-search moves performed.
#[derive(Clone, Debug)]
pub struct Partition {
    pub classes: Vec<usize>,
    pub p: usize,
    pub intra: Vec<usize>,
    pub moves: usize,
}

impl Partition {
    /// Members of each class, ascending within a class.
    pub fn class_members(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.p];
        for (v, &c) in self.classes.iter().enumerate() {
            out[c].push(v);
        }
        out
    }
}

/// Partitions the vertices into `p` classes so that every vertex has at most
/// ⌊Δ/p⌋ neighbors in its own class.
///
/// Start from class(v) = v mod p; repeatedly take the lowest-index vertex
/// exceeding the target and move it to the class where it has fewest
/// neighbors (lowest class index on ties). Pigeonhole guarantees that class
/// has at most ⌊Δ/p⌋ of its neighbors, so the move strictly reduces the
/// intra-class edge count and the search halts.
pub fn partition_bounded_degree(g: &Graph, p: usize) -> Partition {
    assert!(p >= 1, "class count must be positive");
    let n = g.n();
    let target = g.max_degree() / p;

    let mut classes: Vec<usize> = (0..n).map(|v| v % p).collect();
    let mut intra = vec![0usize; n];
    for v in g.vertices() {
        intra[v] = g.neighbors(v).filter(|&u| classes[u] == classes[v]).count();
    }

    let mut moves = 0;
    while let Some(v) = g.vertices().find(|&v| intra[v] > target) {
        let mut counts = vec![0usize; p];
        for u in g.neighbors(v) {
            counts[classes[u]] += 1;
        }
        let dest = (0..p).min_by_key(|&c| counts[c]).unwrap();
        debug_assert!(counts[dest] <= target && dest != classes[v]);

        let src = classes[v];
        for u in g.neighbors(v) {
            if classes[u] == src {
                intra[u] -= 1;
            } else if classes[u] == dest {
                intra[u] += 1;
            }
        }
        classes[v] = dest;
        intra[v] = counts[dest];
        moves += 1;
    }

    Partition {
        classes,
        p,
        intra,
        moves,
    }
}

/// 3-path cover from the bounded-degree partition: split into ⌈(Δ+1)/2⌉
/// classes (each then induces maximum degree at most 1, so it is free of
/// paths on 3 vertices) and protect everything outside the largest class.
///
/// The result has at most ⌈(Δ-1)/2⌉/⌈(Δ+1)/2⌉ · n vertices. Edgeless input
/// yields the empty set.
pub fn cover3_via_partition(g: &Graph) -> VertexSet {
    let delta = g.max_degree();
    if delta == 0 {
        return VertexSet::new();
    }
    let p = (delta + 1).div_ceil(2);
    let part = partition_bounded_degree(g, p);
    debug_assert!(part.intra.iter().all(|&x| x <= 1));

    let mut sizes = vec![0usize; p];
    for &c in &part.classes {
        sizes[c] += 1;
    }
    let keep = (0..p).max_by_key(|&c| (sizes[c], std::cmp::Reverse(c))).unwrap();
    g.vertices().filter(|&v| part.classes[v] != keep).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::is_k_path_cover;

    fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    fn c4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])
    }

    #[test]
    fn k4_splits_into_two_pairs() {
        let part = partition_bounded_degree(&complete(4), 2);
        let members = part.class_members();
        assert_eq!(members[0].len(), 2);
        assert_eq!(members[1].len(), 2);
        assert!(part.intra.iter().all(|&x| x <= 1));
    }

    #[test]
    fn even_cycle_bipartition_needs_no_moves() {
        let part = partition_bounded_degree(&c4(), 2);
        assert_eq!(part.moves, 0);
        assert!(part.intra.iter().all(|&x| x == 0));
    }

    #[test]
    fn edgeless_graph_is_trivial() {
        let g = Graph::new(5);
        let part = partition_bounded_degree(&g, 3);
        assert!(part.intra.iter().all(|&x| x == 0));
        assert!(cover3_via_partition(&g).is_empty());
    }

    #[test]
    fn single_class_always_satisfiable() {
        let part = partition_bounded_degree(&complete(5), 1);
        assert_eq!(part.moves, 0);
        assert!(part.intra.iter().all(|&x| x == 4));
    }

    #[test]
    fn cover_of_k4_has_size_two() {
        let g = complete(4);
        let s = cover3_via_partition(&g);
        assert_eq!(s.len(), 2);
        assert!(is_k_path_cover(&g, &s, 3).unwrap());
    }

    #[test]
    fn cover_of_c4_has_size_two() {
        let g = c4();
        let s = cover3_via_partition(&g);
        assert_eq!(s.len(), 2);
        assert!(is_k_path_cover(&g, &s, 3).unwrap());
    }

    #[test]
    fn cover_of_p3_has_size_one() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        let s = cover3_via_partition(&g);
        assert!(s.len() <= 1);
        assert!(is_k_path_cover(&g, &s, 3).unwrap());
    }

    #[test]
    fn intra_counts_stay_consistent() {
        // dense enough to force moves
        let g = complete(7);
        let part = partition_bounded_degree(&g, 3);
        for v in g.vertices() {
            let recount = g
                .neighbors(v)
                .filter(|&u| part.classes[u] == part.classes[v])
                .count();
            assert_eq!(part.intra[v], recount);
            assert!(recount <= 6 / 3);
        }
        assert!(part.moves <= g.m());
    }
}
