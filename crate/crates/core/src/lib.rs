//! Exact-arithmetic toolkit for homomorphism densities in step kernels
//! and certified failures of strong commonness.
//!
//! A graph `H` is *strongly common* when
//! `t_H(W) + t_H(1-W) >= t_K2(W)^e + t_K2(1-W)^e` holds for every graphon
//! `W`. This crate evaluates both sides exactly over finite step kernels
//! and, for any graph of odd girth that is not a cycle, produces a
//! machine-checkable certificate that the inequality fails on an explicit
//! two-point witness kernel — all in arbitrary-precision rational
//! arithmetic, with no floating point anywhere.
//!
//! ## Layout
//!
//! - [`graph`] — graphs, edge-list and graph6 parsing, girth, k-cycle
//!   counting, GF(2) cycle-space enumeration;
//! - [`kernel`] — step kernels, the witness family, complements, edge
//!   density, graphon export;
//! - [`density`] — three independent exact evaluators for `t_H` and the
//!   ε-polynomial of the witness density;
//! - [`commonness`] — deficits, the ε threshold, the bound chain, and
//!   certificates;
//! - [`cli`] — the command layer behind the `strongcommon` binary;
//! - [`rational`] — exact rational scalars and their `"p/q"` string form.
//!
//! ## Runnable examples
//!
//! Each major capability has a runnable example:
//!
//! ```bash
//! cargo run -p strongcommon --example analyze_graph
//! cargo run -p strongcommon --example witness_kernel
//! cargo run -p strongcommon --example three_evaluators
//! cargo run -p strongcommon --example eps_polynomial
//! cargo run -p strongcommon --example certify_paw
//! cargo run -p strongcommon --example proof_chain
//! cargo run -p strongcommon --example alpha_scan
//! cargo run -p strongcommon --example odd_cycles_tight
//! ```

pub mod cli;
pub mod commonness;
pub mod density;
pub mod graph;
pub mod kernel;
pub mod rational;

pub use commonness::{
    certify, common_deficit, epsilon_threshold, proof_chain_bounds, strong_common_deficit,
    witness_deficit, Certificate, ProofChainBounds,
};
pub use density::{
    edge_subset_correlation, eps_polynomial, even_subgraph_density, hom_density,
    subset_expansion_density, Caps, EpsPolynomial,
};
pub use graph::{EdgeSubset, Girth, Graph};
pub use kernel::{StepGraphonExport, StepKernel};
pub use rational::{parse_rational, Rational};
