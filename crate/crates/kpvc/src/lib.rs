//! Minimum k-path vertex cover: ψ_k(G) is the least number of vertices
//! needed to hit every simple path on k vertices of G. ψ2 is the classical
//! vertex cover number; ψ3 is n minus the dissociation number.
//!
//! The crate provides:
//!
//! - [`graph`]: the shared graph type, edge-list parsing, vertex deletion;
//! - [`verify`]: path detection and cover checking;
//! - [`exact`]: a brute-force oracle for ψ_k, the ground truth everywhere;
//! - [`tree`]: the linear-time optimal solver for forests;
//! - [`partition`]: bounded-induced-degree partitions and the cover derived
//!   from them;
//! - [`approx`]: the k-approximation, the subcubic min(n/2, m/2) solver, the
//!   (2n+m)/6 sparse solver, and the seeded randomized cover;
//! - [`outerplanar`]: triangulated outerplanar embeddings and the n/2 cover;
//! - [`generate`]: instance families, seeded random trees and embeddings,
//!   extremal families, and the vertex-cover reduction gadget;
//! - [`bounds`]: closed-form degree-based upper bounds.
//!
//! ```
//! use kpvc::{parse_edge_list, is_k_path_cover};
//! use kpvc::exact::psi_exact;
//!
//! let g = parse_edge_list("4 4\n0 1\n1 2\n2 3\n3 0")?; // a 4-cycle
//! let best = psi_exact(&g, 3, None)?;
//! assert_eq!(best.psi, 2);
//! assert!(is_k_path_cover(&g, &best.cover, 3)?);
//! # Ok::<(), kpvc::Error>(())
//! ```

pub mod approx;
pub mod bounds;
pub mod error;
pub mod exact;
pub mod generate;
pub mod graph;
pub mod outerplanar;
pub mod partition;
pub mod tree;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{delete_vertices, parse_edge_list, serialize_edge_list, Graph, VertexSet};
pub use verify::{find_path_of_order, is_k_path_cover, PathWitness};
