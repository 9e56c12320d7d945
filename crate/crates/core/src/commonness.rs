//! Strong-commonness deficits and counterexample certificates.
//!
//! For a graph `h` of odd girth `k` with more edges than `k`, the witness
//! kernel `alpha + epsilon f` drives `t_h(W) + t_h(1-W)` strictly below
//! `alpha^e + (1-alpha)^e` for every sufficiently small `epsilon > 0`.
//! This module computes the sufficiency threshold, evaluates the deficit
//! exactly, reproduces the intermediate bound chain, and packages the
//! result as a machine-checkable [`Certificate`].
//!
//! Everything here is exact rational arithmetic: a negative deficit is a
//! proof, not an approximation.

use num::{BigInt, One, Signed};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::density::{
    even_subgraph_density, hom_density, subset_expansion_density, Caps, DensityError,
};
use crate::graph::{Girth, Graph};
use crate::kernel::StepKernel;
use crate::rational::{format_rational, pow, ratio, serde_ratio, two_pow, Rational};

/// Version tag carried by every emitted certificate.
pub const CERTIFICATE_SCHEMA_VERSION: u32 = 1;

/// Evaluator names recorded in certificates.
pub const EVALUATOR_EVEN_SUBGRAPH: &str = "even_subgraph";
pub const EVALUATOR_DIRECT: &str = "direct";

/// A rejected certification hypothesis, with the reason.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypothesisViolation {
    #[error("graph is acyclic: a finite odd girth is required")]
    Acyclic,
    #[error("girth {girth} is even: an odd girth is required")]
    EvenGirth { girth: usize },
    #[error("graph is a cycle: odd cycles meet the strong-commonness bound with equality")]
    IsCycle,
    #[error(
        "all {edges} edges form the shortest cycle (girth {girth}): \
         the witness deficit is identically zero on such graphs"
    )]
    NoEdgeBeyondShortestCycle { edges: usize, girth: usize },
    #[error("alpha = 1/2 is excluded: the witness deficit is nonnegative there")]
    AlphaIsHalf,
    #[error("alpha {alpha} must lie strictly between 0 and 1")]
    AlphaOutOfRange { alpha: String },
    #[error("epsilon {epsilon} is outside the certified range (0, {threshold})")]
    EpsilonOutOfRange { epsilon: String, threshold: String },
    #[error("kernel value {value} at ({i}, {j}) lies outside [0, 1]: not a graphon")]
    KernelNotGraphon { i: usize, j: usize, value: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CommonnessError {
    #[error(transparent)]
    Hypothesis(#[from] HypothesisViolation),
    #[error(transparent)]
    Cap(#[from] DensityError),
    /// The deficit or a bound-chain inequality came out wrong under valid
    /// hypotheses. The underlying statement guarantees this cannot happen,
    /// so it is surfaced loudly instead of returned as data.
    #[error("internal consistency failure: {detail}")]
    Inconsistent { detail: String },
    #[error("certificate verification failed: {detail}")]
    VerificationFailed { detail: String },
}

/// Checks that the witness construction applies to `h` and returns the
/// girth. Requires a finite odd girth and at least one edge beyond a
/// shortest cycle.
pub fn check_witness_applicable(h: &Graph) -> Result<usize, HypothesisViolation> {
    let girth = match h.girth() {
        Girth::Acyclic => return Err(HypothesisViolation::Acyclic),
        Girth::Finite(k) => k,
    };
    if girth % 2 == 0 {
        return Err(HypothesisViolation::EvenGirth { girth });
    }
    if h.is_cycle() {
        return Err(HypothesisViolation::IsCycle);
    }
    if h.edge_count() == girth {
        // Only cycles padded with isolated vertices reach here; their
        // densities coincide with the bare cycle's, so the strict
        // inequality is unattainable.
        return Err(HypothesisViolation::NoEdgeBeyondShortestCycle {
            edges: h.edge_count(),
            girth,
        });
    }
    Ok(girth)
}

/// Maps `alpha` into `(1/2, 1)`, rejecting values outside `(0, 1)` and
/// exactly `1/2`. Returns the normalized value and whether it was flipped.
pub fn normalize_alpha(alpha: &Rational) -> Result<(Rational, bool), HypothesisViolation> {
    if !alpha.is_positive() || alpha >= &Rational::one() {
        return Err(HypothesisViolation::AlphaOutOfRange {
            alpha: format_rational(alpha),
        });
    }
    let half = ratio(1, 2);
    match alpha.cmp(&half) {
        std::cmp::Ordering::Equal => Err(HypothesisViolation::AlphaIsHalf),
        std::cmp::Ordering::Less => Ok((Rational::one() - alpha, true)),
        std::cmp::Ordering::Greater => Ok((alpha.clone(), false)),
    }
}

/// The sufficiency threshold `min(1 - alpha, 2^{-2e} (alpha - 1/2))` below
/// which every positive ε certifies. `alpha` is normalized first.
pub fn epsilon_threshold(h: &Graph, alpha: &Rational) -> Result<Rational, HypothesisViolation> {
    check_witness_applicable(h)?;
    let (alpha, _) = normalize_alpha(alpha)?;
    Ok(epsilon_threshold_unchecked(h.edge_count(), &alpha))
}

fn epsilon_threshold_unchecked(edge_count: usize, normalized_alpha: &Rational) -> Rational {
    let slack = Rational::one() - normalized_alpha;
    let scaled = two_pow(-2 * edge_count as i64) * (normalized_alpha - ratio(1, 2));
    slack.min(scaled)
}

/// `t_h(phi) + t_h(1 - phi) - alpha^e - (1-alpha)^e` for the witness
/// kernel `phi = alpha + epsilon f`, exact, with no hypothesis checks:
/// the deficit is a well-defined rational for every `(alpha, epsilon)`.
pub fn witness_deficit(
    h: &Graph,
    alpha: &Rational,
    epsilon: &Rational,
    caps: &Caps,
) -> Result<Rational, DensityError> {
    let beta = Rational::one() - alpha;
    let t_phi = even_subgraph_density(h, alpha, epsilon, caps)?;
    // 1 - (alpha + eps f) is the witness kernel of (1-alpha, -eps)
    let t_complement = even_subgraph_density(h, &beta, &-epsilon, caps)?;
    let edges = h.edge_count();
    Ok(t_phi + t_complement - pow(alpha, edges) - pow(&beta, edges))
}

/// The intermediate upper bounds of the certification argument, together
/// with the exact densities they dominate.
///
/// The chain, for girth `k`, `N` shortest cycles, `e` edges and
/// normalized `alpha`:
///
/// ```text
/// t(phi)   <= alpha^e - eps^k alpha^{e-k} N + 2^e eps^{k+1}      (upper_phi)
/// t(1-phi) <= (1-a)^e + eps^k (1-a)^{e-k} N + 2^e eps^{k+1}      (upper_complement)
/// sum      <= a^e + (1-a)^e + eps^k ((1-a)^{e-k} - a^{e-k})
///                                   + 2^{e+1} eps^{k+1}          (combined_upper)
///          <= a^e + (1-a)^e - 2^{k-e} eps^k (a - 1/2)
///                                   + 2^{e+1} eps^{k+1}          (mvt_upper)
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofChainBounds {
    pub girth: usize,
    pub num_girth_cycles: u64,
    /// Normalized alpha the bounds were computed at.
    pub alpha: Rational,
    pub epsilon: Rational,
    pub actual_phi: Rational,
    pub actual_complement: Rational,
    pub upper_phi: Rational,
    pub upper_complement: Rational,
    pub combined_upper: Rational,
    pub mvt_upper: Rational,
    /// `alpha^e + (1-alpha)^e`, the strong-commonness right-hand side.
    pub rhs: Rational,
}

impl ProofChainBounds {
    /// `t(phi) + t(1-phi)`.
    pub fn lhs(&self) -> Rational {
        &self.actual_phi + &self.actual_complement
    }

    /// Descriptions of any violated chain inequalities; empty when the
    /// whole chain holds.
    pub fn violations(&self) -> Vec<String> {
        let mut failures = Vec::new();
        if self.actual_phi > self.upper_phi {
            failures.push("t(phi) exceeds its truncation bound".to_owned());
        }
        if self.actual_complement > self.upper_complement {
            failures.push("t(1-phi) exceeds its truncation bound".to_owned());
        }
        if &self.upper_phi + &self.upper_complement > self.combined_upper {
            failures.push("sum of the two bounds exceeds the combined bound".to_owned());
        }
        if self.combined_upper > self.mvt_upper {
            failures.push("combined bound exceeds the mean-value bound".to_owned());
        }
        failures
    }

    pub fn holds(&self) -> bool {
        self.violations().is_empty()
    }
}

/// Computes the full bound chain at a normalized `alpha` and `epsilon` in
/// `(0, 1)`.
pub fn proof_chain_bounds(
    h: &Graph,
    alpha: &Rational,
    epsilon: &Rational,
    caps: &Caps,
) -> Result<ProofChainBounds, CommonnessError> {
    let girth = check_witness_applicable(h)?;
    let (alpha, _) = normalize_alpha(alpha)?;
    // epsilon = 0 is allowed as the degenerate case where every bound
    // collapses to alpha^e resp. (1-alpha)^e
    if epsilon.is_negative() || epsilon >= &Rational::one() {
        return Err(HypothesisViolation::EpsilonOutOfRange {
            epsilon: format_rational(epsilon),
            threshold: "1".to_owned(),
        }
        .into());
    }
    let edges = h.edge_count();
    let beta = Rational::one() - &alpha;
    let num_girth_cycles = h.count_k_cycle_subsets(girth);
    let cycles = Rational::from_integer(BigInt::from(num_girth_cycles));

    let actual_phi = even_subgraph_density(h, &alpha, epsilon, caps)?;
    let actual_complement = even_subgraph_density(h, &beta, &-epsilon.clone(), caps)?;

    let alpha_e = pow(&alpha, edges);
    let beta_e = pow(&beta, edges);
    let eps_k = pow(epsilon, girth);
    let tail = two_pow(edges as i64) * pow(epsilon, girth + 1);
    let upper_phi = &alpha_e - &eps_k * pow(&alpha, edges - girth) * &cycles + &tail;
    let upper_complement = &beta_e + &eps_k * pow(&beta, edges - girth) * &cycles + &tail;
    let rhs = &alpha_e + &beta_e;
    let combined_upper = &rhs
        + &eps_k * (pow(&beta, edges - girth) - pow(&alpha, edges - girth))
        + &tail * ratio(2, 1);
    let mvt_upper = &rhs
        - two_pow(girth as i64 - edges as i64) * &eps_k * (&alpha - ratio(1, 2))
        + &tail * ratio(2, 1);

    Ok(ProofChainBounds {
        girth,
        num_girth_cycles,
        alpha,
        epsilon: epsilon.clone(),
        actual_phi,
        actual_complement,
        upper_phi,
        upper_complement,
        combined_upper,
        mvt_upper,
        rhs,
    })
}

/// A machine-checkable record that `(h, alpha, epsilon)` violates strong
/// commonness. Only issued when the exact deficit is negative, the bound
/// chain holds, and `epsilon` lies strictly inside `(0, epsilon0)`.
///
/// Serializes with deterministic field order and all rationals as `"p/q"`
/// strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Certificate {
    pub schema_version: u32,
    pub graph: Graph,
    pub girth_k: usize,
    pub num_k_cycles: u64,
    /// Alpha as requested by the caller.
    #[serde(with = "serde_ratio")]
    pub alpha_requested: Rational,
    /// Alpha after normalization into `(1/2, 1)`; the witness kernel is
    /// built from this value.
    #[serde(with = "serde_ratio")]
    pub alpha: Rational,
    pub alpha_normalized: bool,
    #[serde(with = "serde_ratio")]
    pub epsilon: Rational,
    #[serde(with = "serde_ratio")]
    pub epsilon0: Rational,
    #[serde(with = "serde_ratio")]
    pub lhs: Rational,
    #[serde(with = "serde_ratio")]
    pub rhs: Rational,
    #[serde(with = "serde_ratio")]
    pub deficit: Rational,
    pub evaluator: String,
    pub cross_checked: bool,
}

impl Certificate {
    /// Canonical pretty JSON with a trailing newline; re-serializing a
    /// parsed certificate reproduces the bytes exactly.
    pub fn to_canonical_json(&self) -> String {
        let mut text =
            serde_json::to_string_pretty(self).expect("certificate serialization cannot fail");
        text.push('\n');
        text
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Recomputes everything the certificate claims, using the evaluator
    /// the certificate did *not* use, and compares exactly.
    pub fn replay(&self, caps: &Caps) -> Result<CertificateReplay, CommonnessError> {
        let fail = |detail: String| CommonnessError::VerificationFailed { detail };
        if self.schema_version != CERTIFICATE_SCHEMA_VERSION {
            return Err(fail(format!(
                "unsupported schema version {}",
                self.schema_version
            )));
        }
        let girth = check_witness_applicable(&self.graph)
            .map_err(|violation| fail(format!("hypotheses do not hold: {violation}")))?;
        if girth != self.girth_k {
            return Err(fail(format!(
                "recomputed girth {girth} != recorded girth {}",
                self.girth_k
            )));
        }
        let cycles = self.graph.count_k_cycle_subsets(girth);
        if cycles != self.num_k_cycles {
            return Err(fail(format!(
                "recomputed {cycles} shortest cycles != recorded {}",
                self.num_k_cycles
            )));
        }
        let (alpha, flipped) = normalize_alpha(&self.alpha_requested)
            .map_err(|violation| fail(format!("recorded alpha is invalid: {violation}")))?;
        if alpha != self.alpha || flipped != self.alpha_normalized {
            return Err(fail("alpha normalization does not match".to_owned()));
        }
        let threshold = epsilon_threshold_unchecked(self.graph.edge_count(), &alpha);
        if threshold != self.epsilon0 {
            return Err(fail(format!(
                "recomputed epsilon0 {} != recorded {}",
                format_rational(&threshold),
                format_rational(&self.epsilon0)
            )));
        }
        if !self.epsilon.is_positive() || self.epsilon >= threshold {
            return Err(fail("epsilon is outside (0, epsilon0)".to_owned()));
        }
        let evaluator = match self.evaluator.as_str() {
            EVALUATOR_EVEN_SUBGRAPH => EVALUATOR_DIRECT,
            EVALUATOR_DIRECT => EVALUATOR_EVEN_SUBGRAPH,
            other => {
                return Err(fail(format!("unknown evaluator {other:?}")));
            }
        };
        let (t_phi, t_complement) =
            witness_pair_via(evaluator, &self.graph, &alpha, &self.epsilon, caps)?;
        let edges = self.graph.edge_count();
        let rhs = pow(&alpha, edges) + pow(&(Rational::one() - &alpha), edges);
        let lhs = t_phi + t_complement;
        let deficit = &lhs - &rhs;
        if lhs != self.lhs || rhs != self.rhs || deficit != self.deficit {
            return Err(fail(format!(
                "independent {evaluator} evaluation disagrees: lhs {}, rhs {}, deficit {}",
                format_rational(&lhs),
                format_rational(&rhs),
                format_rational(&deficit)
            )));
        }
        if !deficit.is_negative() {
            return Err(fail("recorded deficit is not negative".to_owned()));
        }
        Ok(CertificateReplay {
            evaluator: evaluator.to_owned(),
            lhs,
            rhs,
            deficit,
        })
    }
}

/// Outcome of an independent certificate replay.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateReplay {
    /// Evaluator used for the replay (not the one in the certificate).
    pub evaluator: String,
    pub lhs: Rational,
    pub rhs: Rational,
    pub deficit: Rational,
}

fn witness_pair_via(
    evaluator: &str,
    h: &Graph,
    alpha: &Rational,
    epsilon: &Rational,
    caps: &Caps,
) -> Result<(Rational, Rational), CommonnessError> {
    let beta = Rational::one() - alpha;
    match evaluator {
        EVALUATOR_DIRECT => {
            let kernel = StepKernel::witness(alpha, epsilon);
            Ok((
                hom_density(h, &kernel, caps)?,
                hom_density(h, &kernel.complement(), caps)?,
            ))
        }
        EVALUATOR_EVEN_SUBGRAPH => Ok((
            even_subgraph_density(h, alpha, epsilon, caps)?,
            even_subgraph_density(h, &beta, &-epsilon.clone(), caps)?,
        )),
        other => Err(CommonnessError::Inconsistent {
            detail: format!("unknown evaluator {other:?}"),
        }),
    }
}

/// Certifies that `h` is not strongly common at `alpha`, choosing
/// `epsilon = epsilon0 / 2` when none is given.
///
/// The returned certificate's deficit is exactly negative, the bound
/// chain has been checked, and the densities have been cross-checked by
/// direct enumeration whenever the caps allow it. A nonnegative deficit
/// under valid hypotheses is impossible and aborts as
/// [`CommonnessError::Inconsistent`].
pub fn certify(
    h: &Graph,
    alpha: &Rational,
    epsilon: Option<&Rational>,
    caps: &Caps,
) -> Result<Certificate, CommonnessError> {
    check_witness_applicable(h)?;
    let (normalized, flipped) = normalize_alpha(alpha)?;
    let threshold = epsilon_threshold_unchecked(h.edge_count(), &normalized);
    let epsilon = match epsilon {
        Some(given) => {
            if !given.is_positive() || given >= &threshold {
                return Err(HypothesisViolation::EpsilonOutOfRange {
                    epsilon: format_rational(given),
                    threshold: format_rational(&threshold),
                }
                .into());
            }
            given.clone()
        }
        None => &threshold / ratio(2, 1),
    };

    let chain = proof_chain_bounds(h, &normalized, &epsilon, caps)?;
    let violations = chain.violations();
    if !violations.is_empty() {
        return Err(CommonnessError::Inconsistent {
            detail: format!("bound chain violated: {}", violations.join("; ")),
        });
    }
    let lhs = chain.lhs();
    let rhs = chain.rhs.clone();
    let deficit = &lhs - &rhs;
    if !deficit.is_negative() {
        return Err(CommonnessError::Inconsistent {
            detail: format!(
                "deficit {} is not negative at alpha {}, epsilon {}",
                format_rational(&deficit),
                format_rational(&normalized),
                format_rational(&epsilon)
            ),
        });
    }

    // Independent routes: direct enumeration and the full subset
    // expansion, each compared exactly when its cap allows it.
    // cross_checked records whether all three evaluators agreed.
    let points_pow = 2u128.checked_pow(h.vertex_count() as u32);
    let direct_ran = match points_pow {
        Some(needed) if needed <= caps.max_assignments as u128 => {
            let (direct_phi, direct_complement) =
                witness_pair_via(EVALUATOR_DIRECT, h, &normalized, &epsilon, caps)?;
            if direct_phi != chain.actual_phi || direct_complement != chain.actual_complement {
                return Err(CommonnessError::Inconsistent {
                    detail: "direct enumeration disagrees with the even-subgraph expansion"
                        .to_owned(),
                });
            }
            true
        }
        _ => false,
    };
    let subset_ran = if h.edge_count() <= caps.max_subset_edges as usize {
        let beta = Rational::one() - &normalized;
        let by_subsets_phi = subset_expansion_density(h, &normalized, &epsilon, caps)?;
        let by_subsets_complement =
            subset_expansion_density(h, &beta, &-epsilon.clone(), caps)?;
        if by_subsets_phi != chain.actual_phi
            || by_subsets_complement != chain.actual_complement
        {
            return Err(CommonnessError::Inconsistent {
                detail: "subset expansion disagrees with the even-subgraph expansion".to_owned(),
            });
        }
        true
    } else {
        false
    };
    let cross_checked = direct_ran && subset_ran;

    Ok(Certificate {
        schema_version: CERTIFICATE_SCHEMA_VERSION,
        graph: h.clone(),
        girth_k: chain.girth,
        num_k_cycles: chain.num_girth_cycles,
        alpha_requested: alpha.clone(),
        alpha: normalized,
        alpha_normalized: flipped,
        epsilon,
        epsilon0: threshold,
        lhs,
        rhs,
        deficit,
        evaluator: EVALUATOR_EVEN_SUBGRAPH.to_owned(),
        cross_checked,
    })
}

/// `t_h(k) + t_h(1-k) - d^e - (1-d)^e` where `d` is the kernel's edge
/// density. Negative values witness failure of strong commonness.
pub fn strong_common_deficit(
    h: &Graph,
    kernel: &StepKernel,
    caps: &Caps,
) -> Result<Rational, CommonnessError> {
    require_graphon(kernel)?;
    let density = kernel.edge_density();
    let edges = h.edge_count();
    let t = hom_density(h, kernel, caps)?;
    let t_complement = hom_density(h, &kernel.complement(), caps)?;
    Ok(t + t_complement - pow(&density, edges) - pow(&(Rational::one() - &density), edges))
}

/// `t_h(k) + t_h(1-k) - 2^{1-e}`. Negative values witness failure of
/// plain commonness.
pub fn common_deficit(
    h: &Graph,
    kernel: &StepKernel,
    caps: &Caps,
) -> Result<Rational, CommonnessError> {
    require_graphon(kernel)?;
    let t = hom_density(h, kernel, caps)?;
    let t_complement = hom_density(h, &kernel.complement(), caps)?;
    Ok(t + t_complement - two_pow(1 - h.edge_count() as i64))
}

fn require_graphon(kernel: &StepKernel) -> Result<(), HypothesisViolation> {
    for i in 0..kernel.point_count() {
        for j in 0..kernel.point_count() {
            let value = kernel.value(i, j);
            if value.is_negative() || value > &Rational::one() {
                return Err(HypothesisViolation::KernelNotGraphon {
                    i,
                    j,
                    value: format_rational(value),
                });
            }
        }
    }
    Ok(())
}
