//! Polycirculant unit-distance embeddings of the Gray graph.
//!
//! The crate builds the Gray graph three ways (LCF code, Levi graph of the
//! 3×3×3 grid configuration, and a two-parameter planar construction with
//! 3-fold rotational symmetry), and certifies the combinatorial and
//! geometric properties of each: girth, bipartition, automorphism group and
//! orbits, unit edge lengths, rotational symmetry, and isomorphism.
//!
//! With the default `parallel` feature the parameter sweep runs on rayon;
//! without it every routine is single-threaded.

pub mod cli;
pub mod config;
pub mod embedding;
pub mod graph;
pub mod io;
pub mod lcf;
pub mod render;
pub mod symmetry;

pub use config::{grid2_configuration, grid3_configuration, levi_graph, IncidenceConfiguration};
pub use embedding::{assemble, build_g0, extract_graph, ConstructionParams, Embedding};
pub use graph::{bipartition, girth, verify_hamiltonian_cycle, Graph, Role};
pub use lcf::{gray_graph, lcf_graph, LcfCode};
