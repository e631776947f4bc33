//! Simple undirected graphs over dense 0-based vertex indices, plus the
//! edge-list text format shared by every solver and the CLI.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Simple undirected graph: no loops, no parallel edges.
///
/// Adjacency is stored as one sorted set per vertex, so neighbor iteration
/// is always in ascending order — every deterministic tie-break in this
/// crate relies on that.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![BTreeSet::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges, each counted once.
    pub fn m(&self) -> usize {
        let total: usize = self.adj.iter().map(BTreeSet::len).sum();
        debug_assert!(total.is_multiple_of(2));
        total / 2
    }

    /// Inserts the undirected edge {u, v}. Re-adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n() && v < self.n(), "vertex index out of range");
        assert_ne!(u, v, "self-loops are not allowed");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).max().unwrap_or(0)
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub(crate) fn neighbor_set(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    /// All edges as (u, v) with u < v, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in self.vertices() {
            for v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut comps = Vec::new();
        for start in self.vertices() {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Checks the structural invariants: symmetry, no loops, even degree sum.
    /// Cheap enough to run after parsing and in tests.
    pub(crate) fn check_invariants(&self) {
        let mut total = 0;
        for u in self.vertices() {
            assert!(!self.adj[u].contains(&u), "self-loop at {u}");
            for &v in &self.adj[u] {
                assert!(v < self.n(), "neighbor {v} out of range");
                assert!(self.adj[v].contains(&u), "asymmetric edge ({u}, {v})");
            }
            total += self.adj[u].len();
        }
        assert!(total.is_multiple_of(2), "odd degree sum");
    }
}

/// Sorted, duplicate-free set of vertex indices. Sortedness is the canonical
/// form used for equality and for lexicographic comparisons between covers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct VertexSet {
    members: Vec<usize>,
}

impl VertexSet {
    pub fn new() -> Self {
        VertexSet::default()
    }

    pub fn from_unsorted(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSet { members }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut merged = self.members.clone();
        merged.extend_from_slice(&other.members);
        VertexSet::from_unsorted(merged)
    }

    /// Vertices of a graph on `n` vertices that are not in this set.
    pub fn complement(&self, n: usize) -> VertexSet {
        VertexSet {
            members: (0..n).filter(|&v| !self.contains(v)).collect(),
        }
    }

    /// All indices must lie in [0, n) for the associated graph.
    pub fn validate_for(&self, g: &Graph) -> Result<()> {
        match self.members.last() {
            Some(&v) if v >= g.n() => Err(Error::InvalidVertexSet(format!(
                "vertex {} out of range for a graph on {} vertices",
                v,
                g.n()
            ))),
            _ => Ok(()),
        }
    }

    pub(crate) fn mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for &v in &self.members {
            mask[v] = true;
        }
        mask
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_unsorted(iter.into_iter().collect())
    }
}

/// Parses the edge-list text format.
///
/// Lines starting with '#' and blank lines are ignored. The first payload
/// line is `n m`; every further payload line is an edge `u v` with
/// `0 <= u, v < n` and `u != v`. Duplicate edges (in either orientation) are
/// deduplicated silently; `m` must equal the number of distinct edges.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut payload = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = payload
        .next()
        .ok_or_else(|| Error::Parse {
            line: 1,
            msg: "missing header line \"n m\"".into(),
        })?;
    let mut it = header.split_whitespace();
    let n: usize = parse_field(it.next(), header_line, "vertex count")?;
    let m: usize = parse_field(it.next(), header_line, "edge count")?;
    if it.next().is_some() {
        return Err(Error::Parse {
            line: header_line,
            msg: "header must be exactly \"n m\"".into(),
        });
    }

    let mut g = Graph::new(n);
    let mut last_line = header_line;
    for (line, l) in payload {
        last_line = line;
        let mut it = l.split_whitespace();
        let u: usize = parse_field(it.next(), line, "edge endpoint")?;
        let v: usize = parse_field(it.next(), line, "edge endpoint")?;
        if it.next().is_some() {
            return Err(Error::Parse {
                line,
                msg: "edge line must be exactly \"u v\"".into(),
            });
        }
        if u >= n || v >= n {
            return Err(Error::Parse {
                line,
                msg: format!("vertex index out of range: {} (n = {})", u.max(v), n),
            });
        }
        if u == v {
            return Err(Error::Parse {
                line,
                msg: format!("self-loop at vertex {u}"),
            });
        }
        g.add_edge(u, v);
    }

    if g.m() != m {
        return Err(Error::Parse {
            line: last_line,
            msg: format!("header declares {} edges, found {} distinct", m, g.m()),
        });
    }
    g.check_invariants();
    Ok(g)
}

fn parse_field(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    tok.ok_or_else(|| Error::Parse {
        line,
        msg: format!("missing {what}"),
    })?
    .parse()
    .map_err(|_| Error::Parse {
        line,
        msg: format!("malformed {what}"),
    })
}

/// Canonical edge-list form: `n m` header, then edges as `u v` with u < v,
/// sorted lexicographically. `parse_edge_list` round-trips it exactly.
pub fn serialize_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}", g.n(), g.m());
    for (u, v) in g.edges() {
        write!(out, "\n{u} {v}").unwrap();
    }
    out
}

/// Induced subgraph on `V \ s`, re-indexed densely by ascending original
/// index. The returned vector maps each new index to its original vertex.
pub fn delete_vertices(g: &Graph, s: &VertexSet) -> (Graph, Vec<usize>) {
    let n = g.n();
    let keep: Vec<usize> = (0..n).filter(|&v| !s.contains(v)).collect();
    let mut new_index = vec![usize::MAX; n];
    for (i, &v) in keep.iter().enumerate() {
        new_index[v] = i;
    }
    let mut h = Graph::new(keep.len());
    for (i, &v) in keep.iter().enumerate() {
        for w in g.neighbors(v) {
            if w > v && new_index[w] != usize::MAX {
                h.add_edge(i, new_index[w]);
            }
        }
    }
    (h, keep)
}
