//! Exact clique analysis: clique polynomials, clique incidence matrices,
//! machine-checked clique-counting identities and seeded conjecture fuzzing.
//!
//! Graphs have at most 64 vertices (one adjacency word per vertex). All
//! counting and polynomial arithmetic is exact and overflow-checked.

pub mod bits;
pub mod campaign;
pub mod catalog;
pub mod cliques;
pub mod conjectures;
pub mod error;
pub mod formats;
pub mod graph;
pub mod identities;
pub mod incidence;
pub mod poly;
pub mod random;
pub mod report;

pub use bits::VertexSet;
pub use cliques::{
    brute_force_counts, clique_polynomial, clique_value, count_cliques, enumerate_cliques, Clique,
    CliqueCatalog,
};
pub use error::{CliqueError, Result};
pub use formats::{parse_edge_list, parse_graph6, to_edge_list, to_graph6};
pub use graph::{EdgeRef, Graph};
pub use poly::{poly_equal, CliquePolynomial, Poly};
pub use random::{random_gnp, RngSpec};
pub use report::{IdentityReport, Params, Side};
