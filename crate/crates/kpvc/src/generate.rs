//! Instance generators: basic families, seeded random trees and maximal
//! outerplanar graphs, the extremal families for the (2n+m)/6 and n/2
//! bounds, and the vertex-cover-to-k-path-cover gadget.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::outerplanar::{triangulate, MaxOuterplanarRep};

/// The gadget graph G' produced by the reduction, with the mapping from its
/// vertices back to the original graph (None for the attached path vertices).
#[derive(Clone, Debug)]
pub struct ReductionMap {
    pub gadget: Graph,
    pub original_of: Vec<Option<usize>>,
}

/// Reduces minimum vertex cover to minimum k-path vertex cover by attaching
/// a path of ⌊(k-1)/2⌋ new vertices to every original vertex: for k = 3 or 4
/// a pendant leaf, for k = 5 or 6 a two-vertex tail, and so on. The gadget
/// satisfies ψ_k(G') = VC(G).
///
/// Originals keep their indices; vertex n + v·t + j is the j-th tail vertex
/// of original v, where t = ⌊(k-1)/2⌋.
pub fn reduce_vc_to_kpvc(g: &Graph, k: usize) -> Result<ReductionMap> {
    if k < 3 {
        return Err(Error::InvalidK(
            "reduction requires k >= 3; for k = 2 the problem is vertex cover itself".into(),
        ));
    }
    let n = g.n();
    let tail = (k - 1) / 2;
    let mut gadget = Graph::new(n * (1 + tail));
    for (u, v) in g.edges() {
        gadget.add_edge(u, v);
    }
    for v in 0..n {
        let mut prev = v;
        for j in 0..tail {
            let w = n + v * tail + j;
            gadget.add_edge(prev, w);
            prev = w;
        }
    }
    let original_of = (0..gadget.n()).map(|w| (w < n).then_some(w)).collect();
    Ok(ReductionMap {
        gadget,
        original_of,
    })
}

pub fn path(n: usize) -> Result<Graph> {
    require(n >= 1, "path needs n >= 1")?;
    Ok(Graph::from_edges(
        n,
        &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>(),
    ))
}

pub fn cycle(n: usize) -> Result<Graph> {
    require(n >= 3, "cycle needs n >= 3")?;
    let mut g = Graph::new(n);
    for i in 0..n {
        g.add_edge(i, (i + 1) % n);
    }
    Ok(g)
}

/// Star on n vertices total: center 0, leaves 1..n.
pub fn star(n: usize) -> Result<Graph> {
    require(n >= 1, "star needs n >= 1")?;
    Ok(Graph::from_edges(
        n,
        &(1..n).map(|v| (0, v)).collect::<Vec<_>>(),
    ))
}

pub fn complete(n: usize) -> Result<Graph> {
    require(n >= 1, "complete graph needs n >= 1")?;
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    Ok(g)
}

/// K6 minus the perfect matching {(0,1), (2,3), (4,5)}: 4-regular, 12 edges,
/// ψ3 = 4.
pub fn h6() -> Graph {
    let mut g = Graph::new(6);
    for u in 0..6 {
        for v in u + 1..6 {
            if !matches!((u, v), (0, 1) | (2, 3) | (4, 5)) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Disjoint union of x copies of C4 and y copies of H6. Has n = 4x + 6y
/// vertices, m = 4x + 12y edges, and ψ3 = 2x + 4y = (2n + m)/6 — the family
/// on which the sparse bound is tight.
pub fn tight_sparse3(x: usize, y: usize) -> Graph {
    let mut g = Graph::new(4 * x + 6 * y);
    for c in 0..x {
        let base = 4 * c;
        for i in 0..4 {
            g.add_edge(base + i, base + (i + 1) % 4);
        }
    }
    for c in 0..y {
        let base = 4 * x + 6 * c;
        for (u, v) in h6().edges() {
            g.add_edge(base + u, base + v);
        }
    }
    g
}

/// Uniform random labeled tree from a seeded Prüfer sequence.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    require(n >= 1, "random tree needs n >= 1")?;
    if n == 1 {
        return Ok(Graph::new(1));
    }
    if n == 2 {
        return Ok(Graph::from_edges(2, &[(0, 1)]));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let prufer: Vec<usize> = (0..n - 2)
        .map(|_| (rng.next_u64() % n as u64) as usize)
        .collect();

    let mut degree = vec![1usize; n];
    for &a in &prufer {
        degree[a] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut g = Graph::new(n);
    for &a in &prufer {
        let u = leaves.pop_first().expect("prufer decoding keeps a leaf");
        g.add_edge(u, a);
        degree[a] -= 1;
        if degree[a] == 1 {
            leaves.insert(a);
        }
    }
    let u = leaves.pop_first().unwrap();
    let v = leaves.pop_first().unwrap();
    g.add_edge(u, v);
    Ok(g)
}

/// Random maximal outerplanar graph grown by ear insertion: starting from a
/// triangle, repeatedly pick a random boundary edge and hang a new vertex on
/// it (the old edge becomes a chord). Seedable and valid, but not uniform
/// over all triangulations.
pub fn gen_random_mop(n: usize, seed: u64) -> Result<MaxOuterplanarRep> {
    require(n >= 3, "maximal outerplanar graph needs n >= 3")?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut boundary = vec![0, 1, 2];
    let mut chords = Vec::new();
    for w in 3..n {
        let e = (rng.next_u64() % boundary.len() as u64) as usize;
        let u = boundary[e];
        let v = boundary[(e + 1) % boundary.len()];
        chords.push((u, v));
        boundary.insert(e + 1, w);
    }
    triangulate(boundary, chords)
}

/// Hangs a new degree-2 vertex on every boundary edge of a 2-connected
/// outerplanar graph. The result has 2n vertices, the original edges plus
/// 2n new ones, and needs at least n vertices in any 3-path cover — the
/// family showing the n/2 bound is tight.
pub fn gen_outerplanar_doubled(h: &MaxOuterplanarRep) -> Graph {
    let n = h.n();
    let cycle = h.cycle();
    let mut g = Graph::new(2 * n);
    for (u, v) in h.graph().edges() {
        g.add_edge(u, v);
    }
    for i in 0..n {
        g.add_edge(n + i, cycle[i]);
        g.add_edge(n + i, cycle[(i + 1) % n]);
    }
    g
}

/// String-keyed dispatch used by the CLI. `seed` only matters for
/// `random_tree`.
pub fn gen_family(name: &str, params: &[usize], seed: u64) -> Result<Graph> {
    let one = |what: &str| -> Result<usize> {
        match params {
            [n] => Ok(*n),
            _ => Err(Error::InvalidFamily(format!(
                "{what} takes exactly one parameter, got {}",
                params.len()
            ))),
        }
    };
    match name {
        "path" => path(one("path")?),
        "cycle" => cycle(one("cycle")?),
        "star" => star(one("star")?),
        "complete" => complete(one("complete")?),
        "random_tree" => random_tree(one("random_tree")?, seed),
        "h6" => {
            require(params.is_empty(), "h6 takes no parameters")?;
            Ok(h6())
        }
        "tight_sparse3" => match params {
            [x, y] => Ok(tight_sparse3(*x, *y)),
            _ => Err(Error::InvalidFamily(
                "tight_sparse3 takes exactly two parameters: x y".into(),
            )),
        },
        other => Err(Error::InvalidFamily(format!("unknown family \"{other}\""))),
    }
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidFamily(msg.into()))
    }
}
