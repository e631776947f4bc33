//! Optimal ψ_k for forests in linear time.
//!
//! One post-order pass per component: at each vertex the two longest
//! surviving downward paths through distinct children are combined; if the
//! subtree rooted there contains a path on k vertices while no child subtree
//! does (a properly rooted subtree), the vertex is selected and its whole
//! subtree drops out of the search.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Rooted scaffolding for the sweep: parents, a post-order listing, and the
/// per-vertex `down` value — the order of the longest downward path starting
/// at the vertex within its surviving subtree (0 once the subtree is removed).
#[derive(Clone, Debug)]
pub struct RootedView {
    pub roots: Vec<usize>,
    pub parent: Vec<Option<usize>>,
    pub order: Vec<usize>,
    pub down: Vec<usize>,
}

impl RootedView {
    /// Roots every component at its lowest-index vertex. Fails on cyclic input.
    pub fn build(g: &Graph) -> Result<RootedView> {
        let n = g.n();
        let mut parent = vec![None; n];
        let mut order = Vec::with_capacity(n);
        let mut roots = Vec::new();
        let mut state = vec![0u8; n]; // 0 unseen, 1 on stack, 2 done

        for root in g.vertices() {
            if state[root] != 0 {
                continue;
            }
            roots.push(root);
            let mut stack = vec![(root, g.neighbor_set(root).iter())];
            state[root] = 1;
            while let Some((u, it)) = stack.last_mut() {
                let u = *u;
                match it.next() {
                    Some(&v) => {
                        if parent[u] == Some(v) {
                            continue;
                        }
                        if state[v] != 0 {
                            return Err(Error::NotAForest { u, v });
                        }
                        parent[v] = Some(u);
                        state[v] = 1;
                        stack.push((v, g.neighbor_set(v).iter()));
                    }
                    None => {
                        state[u] = 2;
                        order.push(u);
                        stack.pop();
                    }
                }
            }
        }
        Ok(RootedView {
            roots,
            parent,
            order,
            down: vec![0; n],
        })
    }
}

/// Minimum k-path vertex cover of a forest. The result is optimal and has at
/// most n/k vertices; the input must be acyclic and k at least 2.
pub fn pvcp_tree(g: &Graph, k: usize) -> Result<VertexSet> {
    if k < 2 {
        return Err(Error::InvalidK(
            "tree solver requires k >= 2 (a 1-path cover must be all of V)".into(),
        ));
    }
    let mut view = RootedView::build(g)?;
    let mut picked = Vec::new();

    for idx in 0..view.order.len() {
        let v = view.order[idx];
        // children appear before v in post-order, so their down values are final
        let (mut m1, mut m2) = (0, 0);
        for c in g.neighbors(v) {
            if view.parent[c] == Some(v) {
                let d = view.down[c];
                // no surviving child subtree holds a P_k of its own
                debug_assert!(d < k);
                if d > m1 {
                    m2 = m1;
                    m1 = d;
                } else if d > m2 {
                    m2 = d;
                }
            }
        }
        if 1 + m1 + m2 >= k {
            // properly rooted: the surviving subtree at v holds a P_k, no
            // surviving child subtree does — select v, drop the subtree
            picked.push(v);
            view.down[v] = 0;
        } else {
            view.down[v] = 1 + m1;
        }
    }
    Ok(VertexSet::from_unsorted(picked))
}
