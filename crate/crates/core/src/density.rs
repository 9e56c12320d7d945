//! Exact homomorphism-density evaluators.
//!
//! Three independent routes compute `t_H` for the two-point witness kernel
//! and must agree exactly:
//!
//! 1. [`hom_density`] — direct enumeration of all point assignments,
//!    defined for every step kernel;
//! 2. [`subset_expansion_density`] — the full expansion over all edge
//!    subsets, each weighted by its closed-form correlation;
//! 3. [`even_subgraph_density`] — the same sum restricted to the GF(2)
//!    cycle space, where all other terms vanish.
//!
//! The closed form behind routes 2 and 3: for the witness sign pattern,
//! the expectation of the edge product over a subset `S` is `0` unless
//! every vertex has even degree in `S`, and `(-1)^{|S|}` otherwise. The
//! expectation factorizes over vertices, each odd-degree vertex averaging
//! a sign that cancels. Route 1 never uses this fact, which is what makes
//! the cross-checks meaningful.

use num::{BigInt, One, Zero};
use thiserror::Error;

use crate::graph::{CycleSpaceCapError, EdgeSubset, Graph};
use crate::kernel::StepKernel;
use crate::rational::Rational;

/// Enumeration budgets for the exact evaluators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Caps {
    /// Maximum number of point assignments `m^v` for direct enumeration.
    pub max_assignments: u64,
    /// Maximum cycle-space dimension for even-subgraph enumeration.
    pub max_cycle_dimension: u32,
    /// Maximum edge count for the full `2^e` subset expansion.
    pub max_subset_edges: u32,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_assignments: 1 << 24,
            max_cycle_dimension: 30,
            max_subset_edges: 20,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DensityError {
    #[error("direct enumeration needs {needed} assignments, over the cap {cap}")]
    AssignmentCapExceeded { needed: String, cap: u64 },
    #[error("subset expansion over {edges} edges exceeds the cap of {cap} edges")]
    SubsetCapExceeded { edges: usize, cap: u32 },
    #[error(transparent)]
    CycleSpaceCap(#[from] CycleSpaceCapError),
}

/// Exact homomorphism density of `h` in a step kernel, by enumerating all
/// `m^v` assignments of vertices to kernel points.
pub fn hom_density(h: &Graph, kernel: &StepKernel, caps: &Caps) -> Result<Rational, DensityError> {
    let points = kernel.point_count();
    let vertices = h.vertex_count();
    match (points as u128).checked_pow(vertices as u32) {
        Some(needed) if needed <= caps.max_assignments as u128 => {}
        needed => {
            return Err(DensityError::AssignmentCapExceeded {
                needed: needed.map_or_else(
                    || format!("{points}^{vertices}"),
                    |n| n.to_string(),
                ),
                cap: caps.max_assignments,
            })
        }
    }
    let mut lower_neighbors: Vec<Vec<usize>> = vec![Vec::new(); vertices];
    for &(u, v) in h.edges() {
        lower_neighbors[u.max(v)].push(u.min(v));
    }
    let mut assignment = vec![0usize; vertices];
    let mut total = Rational::zero();
    assign_rest(
        0,
        kernel,
        &lower_neighbors,
        &mut assignment,
        &Rational::one(),
        &mut total,
    );
    Ok(total)
}

fn assign_rest(
    vertex: usize,
    kernel: &StepKernel,
    lower_neighbors: &[Vec<usize>],
    assignment: &mut Vec<usize>,
    partial: &Rational,
    total: &mut Rational,
) {
    if vertex == lower_neighbors.len() {
        *total += partial;
        return;
    }
    for point in 0..kernel.point_count() {
        let mut factor = kernel.weight(point).clone();
        for &u in &lower_neighbors[vertex] {
            factor *= kernel.value(assignment[u], point);
        }
        if factor.is_zero() {
            // every completion of this branch contributes exactly zero
            continue;
        }
        assignment[vertex] = point;
        let product = partial * factor;
        assign_rest(
            vertex + 1,
            kernel,
            lower_neighbors,
            assignment,
            &product,
            total,
        );
    }
}

/// Expectation of the witness sign product over the edges of `subset`,
/// in closed form: `0` if some vertex meets the subset oddly, otherwise
/// `(-1)^{|S|}`.
pub fn edge_subset_correlation(h: &Graph, subset: &EdgeSubset) -> Rational {
    let degrees = h.subset_degrees(subset);
    if degrees.iter().any(|d| d % 2 == 1) {
        Rational::zero()
    } else if subset.count() % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `t_h(alpha + epsilon f)` as the full sum over all `2^e` edge subsets of
/// `eps^{|S|} alpha^{e-|S|} * correlation(S)`.
pub fn subset_expansion_density(
    h: &Graph,
    alpha: &Rational,
    epsilon: &Rational,
    caps: &Caps,
) -> Result<Rational, DensityError> {
    let edges = h.edge_count();
    if edges > caps.max_subset_edges as usize || edges >= 64 {
        return Err(DensityError::SubsetCapExceeded {
            edges,
            cap: caps.max_subset_edges,
        });
    }
    let alpha_powers = power_table(alpha, edges);
    let epsilon_powers = power_table(epsilon, edges);
    let mut subset = EdgeSubset::empty(edges);
    let mut total = Rational::zero();
    // Gray-code walk over all subsets: one bit flip per step.
    for index in 0..1u64 << edges {
        if index > 0 {
            flip(&mut subset, index.trailing_zeros() as usize);
        }
        let correlation = edge_subset_correlation(h, &subset);
        if correlation.is_zero() {
            continue;
        }
        let size = subset.count();
        total += &epsilon_powers[size] * &alpha_powers[edges - size] * correlation;
    }
    Ok(total)
}

fn flip(subset: &mut EdgeSubset, index: usize) {
    let mut single = EdgeSubset::empty(subset.bit_len());
    single.insert(index);
    subset.xor_assign(&single);
}

fn power_table(base: &Rational, max_exponent: usize) -> Vec<Rational> {
    let mut table = Vec::with_capacity(max_exponent + 1);
    table.push(Rational::one());
    for _ in 0..max_exponent {
        table.push(table.last().unwrap() * base);
    }
    table
}

/// Number of even subgraphs of each size, indexed by `|S|`; length `e + 1`.
///
/// This one enumeration backs both the scalar evaluator and the
/// ε-polynomial.
pub fn even_subgraph_size_counts(h: &Graph, caps: &Caps) -> Result<Vec<u64>, DensityError> {
    let mut counts = vec![0u64; h.edge_count() + 1];
    h.visit_even_subgraphs(caps.max_cycle_dimension, |subset| {
        counts[subset.count()] += 1;
    })?;
    Ok(counts)
}

/// `t_h(alpha + epsilon f)` summed over even subgraphs only:
/// `sum_S alpha^{e-|S|} (-epsilon)^{|S|}`.
pub fn even_subgraph_density(
    h: &Graph,
    alpha: &Rational,
    epsilon: &Rational,
    caps: &Caps,
) -> Result<Rational, DensityError> {
    Ok(eps_polynomial(h, alpha, caps)?.evaluate(epsilon))
}

/// The density of `h` in the witness kernel as a polynomial in ε with
/// exact rational coefficients.
///
/// Coefficient `j` is `(-1)^j N_j alpha^{e-j}` where `N_j` counts even
/// subgraphs of size `j`. Stored dense, length `e + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpsPolynomial {
    coefficients: Vec<Rational>,
}

impl EpsPolynomial {
    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn coefficient(&self, degree: usize) -> &Rational {
        &self.coefficients[degree]
    }

    /// Degree bound `e(h)`; trailing zero coefficients are stored.
    pub fn degree_bound(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// Exact value at `epsilon` (Horner form).
    pub fn evaluate(&self, epsilon: &Rational) -> Rational {
        let mut value = Rational::zero();
        for coefficient in self.coefficients.iter().rev() {
            value = value * epsilon + coefficient;
        }
        value
    }

    /// Partial sum of the terms of degree at most `max_degree`.
    pub fn evaluate_truncated(&self, epsilon: &Rational, max_degree: usize) -> Rational {
        let mut value = Rational::zero();
        for coefficient in self.coefficients.iter().take(max_degree + 1).rev() {
            value = value * epsilon + coefficient;
        }
        value
    }
}

/// Expands `t_h(alpha + epsilon f)` in powers of ε via the even-subgraph
/// size counts.
pub fn eps_polynomial(
    h: &Graph,
    alpha: &Rational,
    caps: &Caps,
) -> Result<EpsPolynomial, DensityError> {
    let counts = even_subgraph_size_counts(h, caps)?;
    let edges = h.edge_count();
    let alpha_powers = power_table(alpha, edges);
    let coefficients = counts
        .iter()
        .enumerate()
        .map(|(size, &count)| {
            let mut coefficient =
                Rational::from_integer(BigInt::from(count)) * &alpha_powers[edges - size];
            if size % 2 == 1 {
                coefficient = -coefficient;
            }
            coefficient
        })
        .collect();
    Ok(EpsPolynomial { coefficients })
}
