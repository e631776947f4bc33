//! Triangulated (maximal) outerplanar graphs and the constructive 3-path
//! cover of size at most n/2.
//!
//! Inputs are always embeddings — a Hamiltonian boundary cycle plus
//! non-crossing chords — never raw graphs; recognizing outerplanarity is out
//! of scope here.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A maximal outerplanar graph: boundary cycle (vertex labels in cyclic
/// order) plus exactly n - 3 pairwise non-crossing chords stored as label
/// pairs (u, v) with u < v.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxOuterplanarRep {
    cycle: Vec<usize>,
    chords: BTreeSet<(usize, usize)>,
}

impl MaxOuterplanarRep {
    pub fn n(&self) -> usize {
        self.cycle.len()
    }

    pub fn cycle(&self) -> &[usize] {
        &self.cycle
    }

    pub fn chords(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.chords.iter().copied()
    }

    /// The underlying graph: boundary edges plus chords.
    pub fn graph(&self) -> Graph {
        let n = self.n();
        let mut g = Graph::new(n);
        for i in 0..n {
            g.add_edge(self.cycle[i], self.cycle[(i + 1) % n]);
        }
        for &(u, v) in &self.chords {
            g.add_edge(u, v);
        }
        g
    }
}

fn crossing(a: (usize, usize), b: (usize, usize)) -> bool {
    let (p, q) = a;
    let (r, s) = b;
    (p < r && r < q && q < s) || (r < p && p < s && s < q)
}

/// Completes a boundary cycle plus non-crossing chords into a full
/// triangulation (n - 3 chords), keeping every input chord.
///
/// Completion is deterministic: candidate chords are scanned in
/// lexicographic position order and added greedily whenever they cross
/// nothing already present. With no input chords this fans every face from
/// its lowest-position vertex.
pub fn triangulate(
    cycle: Vec<usize>,
    chords: impl IntoIterator<Item = (usize, usize)>,
) -> Result<MaxOuterplanarRep> {
    let n = cycle.len();
    if n < 3 {
        return Err(Error::InvalidEmbedding(format!(
            "boundary cycle needs at least 3 vertices, got {n}"
        )));
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &label) in cycle.iter().enumerate() {
        if label >= n || pos[label] != usize::MAX {
            return Err(Error::InvalidEmbedding(format!(
                "cycle must be a permutation of 0..{n}"
            )));
        }
        pos[label] = i;
    }

    // validate input chords in position space
    let mut pchords: Vec<(usize, usize)> = Vec::new();
    for (u, v) in chords {
        if u >= n || v >= n || u == v {
            return Err(Error::InvalidEmbedding(format!("bad chord ({u}, {v})")));
        }
        let (a, b) = {
            let (x, y) = (pos[u], pos[v]);
            (x.min(y), x.max(y))
        };
        if b - a == 1 || (a == 0 && b == n - 1) {
            return Err(Error::InvalidEmbedding(format!(
                "chord ({u}, {v}) duplicates a boundary edge"
            )));
        }
        if pchords.contains(&(a, b)) {
            continue;
        }
        for &c in &pchords {
            if crossing((a, b), c) {
                let lab = |p: (usize, usize)| (cycle[p.0], cycle[p.1]);
                return Err(Error::CrossingChords {
                    first: lab(c),
                    second: lab((a, b)),
                });
            }
        }
        pchords.push((a, b));
    }

    let chords = complete_positions(n, pchords)
        .into_iter()
        .map(|(a, b)| {
            let (u, v) = (cycle[a], cycle[b]);
            (u.min(v), u.max(v))
        })
        .collect();
    Ok(MaxOuterplanarRep { cycle, chords })
}

/// Greedy completion of a valid non-crossing chord set to a full
/// triangulation, in position space. Candidates are scanned in lexicographic
/// order; added chords never unblock skipped candidates, so one pass reaches
/// a maximal set, which for a convex polygon always has n - 3 chords.
fn complete_positions(n: usize, mut pchords: Vec<(usize, usize)>) -> Vec<(usize, usize)> {
    for i in 0..n {
        for j in i + 2..n {
            if i == 0 && j == n - 1 {
                continue;
            }
            if pchords.contains(&(i, j)) || pchords.iter().any(|&c| crossing((i, j), c)) {
                continue;
            }
            pchords.push((i, j));
        }
    }
    debug_assert_eq!(pchords.len(), n - 3);
    pchords
}

/// 3-path vertex cover of the triangulation (hence of any outerplanar graph
/// on the same boundary), of size at most ⌊n/2⌋.
///
/// Vertices of degree 2 are white, the rest black. If every boundary edge
/// has a white end, the blacks are the cover. Otherwise take a bad edge
/// (both ends black) whose inner-triangle apex cuts off the shortest
/// boundary arc: that arc alternates colors, its blacks plus one edge
/// endpoint join the cover, the whole stretch is cut away, and the rest is
/// re-closed, re-triangulated, and solved recursively.
pub fn outerplanar_cover3(h: &MaxOuterplanarRep) -> VertexSet {
    let n = h.n();
    let mut pos = vec![0usize; n];
    for (i, &label) in h.cycle.iter().enumerate() {
        pos[label] = i;
    }
    let pchords: Vec<(usize, usize)> = h
        .chords
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (pos[u], pos[v]);
            (a.min(b), a.max(b))
        })
        .collect();
    let mut out = Vec::new();
    cover_rec(h.cycle.clone(), pchords, &mut out);
    VertexSet::from_unsorted(out)
}

/// One level of the recursion. `cycle` carries the original vertex labels;
/// `pchords` are normalized position pairs relative to it.
fn cover_rec(cycle: Vec<usize>, pchords: Vec<(usize, usize)>, out: &mut Vec<usize>) {
    let n = cycle.len();
    if n < 3 {
        return;
    }
    if n == 3 {
        out.push(*cycle.iter().min().unwrap());
        return;
    }

    let mut degree = vec![2usize; n];
    for &(a, b) in &pchords {
        degree[a] += 1;
        degree[b] += 1;
    }
    let white: Vec<bool> = degree.iter().map(|&d| d == 2).collect();
    for i in 0..n {
        assert!(
            !(white[i] && white[(i + 1) % n]),
            "triangulations have no two consecutive degree-2 vertices"
        );
    }

    let bad: Vec<usize> = (0..n)
        .filter(|&i| !white[i] && !white[(i + 1) % n])
        .collect();
    if bad.is_empty() {
        // colors alternate all the way around: n is even, blacks are n/2
        assert!(n.is_multiple_of(2));
        out.extend((0..n).filter(|&i| !white[i]).map(|i| cycle[i]));
        return;
    }

    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for i in 0..n {
        adj[i].insert((i + 1) % n);
        adj[(i + 1) % n].insert(i);
    }
    for &(a, b) in &pchords {
        adj[a].insert(b);
        adj[b].insert(a);
    }

    let arc = |a: usize, b: usize| (b + n - a) % n;
    let mut best: Option<(usize, usize, usize)> = None; // (sigma, edge position, apex)
    for &i in &bad {
        let succ = (i + 1) % n;
        let common: Vec<usize> = adj[i].intersection(&adj[succ]).copied().collect();
        assert_eq!(common.len(), 1, "each boundary edge lies on one inner triangle");
        let apex = common[0];
        assert!(!white[apex], "apex over a bad edge is black");
        let sigma = arc(succ, apex).min(arc(apex, i));
        if best.is_none_or(|(s, bi, _)| (sigma, i) < (s, bi)) {
            best = Some((sigma, i, apex));
        }
    }
    let (sigma, i, apex) = best.unwrap();
    assert!(sigma.is_multiple_of(2), "shortest arc over a minimal bad edge has even length");

    let succ = (i + 1) % n;
    let len_fwd = arc(succ, apex);
    // the short arc from the bad edge to the apex; every vertex on it
    // alternates black/white, black at both ends
    let (removed, batch) = if len_fwd <= arc(apex, i) {
        let path: Vec<usize> = (0..=len_fwd).map(|t| (succ + t) % n).collect();
        check_alternation(&path, &white);
        let mut batch = vec![cycle[i], cycle[apex]];
        batch.extend(interior_blacks(&path, &white).map(|q| cycle[q]));
        let removed: Vec<usize> = (0..=len_fwd + 1).map(|t| (i + t) % n).collect();
        (removed, batch)
    } else {
        let len_bwd = arc(apex, i);
        let path: Vec<usize> = (0..=len_bwd).map(|t| (i + n - t) % n).collect();
        check_alternation(&path, &white);
        let mut batch = vec![cycle[succ], cycle[apex]];
        batch.extend(interior_blacks(&path, &white).map(|q| cycle[q]));
        let removed: Vec<usize> = (0..=len_bwd + 1).map(|t| (apex + t) % n).collect();
        (removed, batch)
    };
    debug_assert_eq!(removed.len(), sigma + 2);
    debug_assert_eq!(batch.len(), sigma / 2 + 1);

    // survivors keep their cyclic order, starting just past the removed arc
    let keep_count = n - removed.len();
    if keep_count >= 3 {
        let mut gone = vec![false; n];
        for &q in &removed {
            gone[q] = true;
        }
        let start = (removed[removed.len() - 1] + 1) % n;
        let new_cycle: Vec<usize> = (0..keep_count).map(|t| cycle[(start + t) % n]).collect();
        let relabel = |q: usize| (q + n - start) % n;
        // re-close the polygon: the arc ends become boundary-adjacent, so a
        // chord joining them (if any) turns into the closing boundary edge
        let close = (0, keep_count - 1);
        let surviving: Vec<(usize, usize)> = pchords
            .iter()
            .filter(|&&(a, b)| !gone[a] && !gone[b])
            .map(|&(a, b)| {
                let (a, b) = (relabel(a), relabel(b));
                (a.min(b), a.max(b))
            })
            .filter(|&c| c != close)
            .collect();
        // cutting a boundary arc keeps relative positions, so the surviving
        // chords stay non-crossing and can be completed again
        cover_rec(new_cycle, complete_positions(keep_count, surviving), out);
    }
    out.extend(batch);
}

fn check_alternation(path: &[usize], white: &[bool]) {
    for (t, &p) in path.iter().enumerate() {
        assert_eq!(
            white[p],
            t % 2 == 1,
            "arc to the apex must alternate black/white"
        );
    }
}

fn interior_blacks<'a>(
    path: &'a [usize],
    white: &'a [bool],
) -> impl Iterator<Item = usize> + 'a {
    path[1..path.len() - 1]
        .iter()
        .copied()
        .filter(move |&q| !white[q])
}

/// Parses the maximal-outerplanar text format: `n`, then the cyclic order as
/// n space-separated labels, then one chord `u v` per line. Lines starting
/// with '#' and blank lines are ignored. Missing chords are filled in by
/// `triangulate`.
pub fn parse_mop(text: &str) -> Result<MaxOuterplanarRep> {
    let mut payload = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line, header) = payload.next().ok_or_else(|| Error::Parse {
        line: 1,
        msg: "missing vertex count".into(),
    })?;
    let n: usize = header.parse().map_err(|_| Error::Parse {
        line,
        msg: "malformed vertex count".into(),
    })?;

    let (line, order) = payload.next().ok_or_else(|| Error::Parse {
        line: line + 1,
        msg: "missing cyclic order".into(),
    })?;
    let cycle: Vec<usize> = order
        .split_whitespace()
        .map(|t| t.parse::<usize>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::Parse {
            line,
            msg: "malformed cyclic order".into(),
        })?;
    if cycle.len() != n {
        return Err(Error::Parse {
            line,
            msg: format!("cyclic order lists {} vertices, expected {n}", cycle.len()),
        });
    }

    let mut chords = Vec::new();
    for (line, l) in payload {
        let mut it = l.split_whitespace();
        let parse = |t: Option<&str>| -> Result<usize> {
            t.ok_or_else(|| Error::Parse {
                line,
                msg: "chord line must be \"u v\"".into(),
            })?
            .parse()
            .map_err(|_| Error::Parse {
                line,
                msg: "malformed chord endpoint".into(),
            })
        };
        let u = parse(it.next())?;
        let v = parse(it.next())?;
        if it.next().is_some() {
            return Err(Error::Parse {
                line,
                msg: "chord line must be \"u v\"".into(),
            });
        }
        chords.push((u, v));
    }
    triangulate(cycle, chords)
}

/// Inverse of `parse_mop` for complete representations.
pub fn serialize_mop(h: &MaxOuterplanarRep) -> String {
    let mut out = h.n().to_string();
    out.push('\n');
    out.push_str(
        &h.cycle
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" "),
    );
    for &(u, v) in &h.chords {
        out.push_str(&format!("\n{u} {v}"));
    }
    out
}
