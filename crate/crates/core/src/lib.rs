//! Exact monopole-dimer partition functions on dicots.
//!
//! A dicot is a vertex-weighted graph with two kinds of edges: oriented
//! *solid* edges and unoriented *dashed* edges, whose union is bipartite.
//! The partition function of the monopole-dimer model on a dicot is the
//! signed sum over configurations of isolated vertices and directed even
//! loops (each carrying an even number of dashed edges), and it equals the
//! determinant of the complex adjacency matrix.
//!
//! The crate is organised as:
//!
//! - [`dicot`]: the data model, validation, loop and configuration weights;
//! - [`linalg`]: Gaussian-rational matrices and the exact determinant;
//! - [`enumerate`]: the brute-force configuration oracle;
//! - [`planar`]: face tracing, Kasteleyn orientations and enclosed-vertex signs;
//! - [`quotient`]: fixed-point-free involutions, adapted partitions and quotient dicots;
//! - [`families`]: cycle, grid and wheel generators with their closed forms;
//! - [`free_energy`]: closed-form and quadrature free energies;
//! - [`cli`]: the `monodimer` command-line front-end.
//!
//! Runnable walkthroughs live in the crate's `examples/` directory.

pub mod cli;
pub mod dicot;
pub mod enumerate;
pub mod families;
pub mod free_energy;
pub mod json;
pub mod linalg;
pub mod planar;
pub mod quadrature;
pub mod quotient;
pub mod random;
pub mod rational;

pub use dicot::{
    complete_dicot, config_weight, loop_weight, validate_dicot, Dicot, DicotBuilder, DicotError,
    EdgeKind, Graph, Loop, MonopoleDimerConfig, VertexId,
};
pub use enumerate::{brute_force_partition_function, check_positivity, enumerate_configs};
pub use linalg::{adjacency_matrix, partition_function, ComplexMatrix, GaussianRational};
pub use rational::Rational;
