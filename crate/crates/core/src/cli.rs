//! Command layer behind the `strongcommon` binary.
//!
//! Each command produces one deterministic JSON document: identical inputs
//! give byte-identical output, with no timestamps or paths in the body.
//! Exit codes: 0 success, 1 I/O or parse error, 2 hypothesis violation
//! (including enumeration-cap refusals), 3 internal-consistency or
//! verification failure.

use std::fs;
use std::path::PathBuf;

use serde::Serialize;
use thiserror::Error;

use crate::commonness::{
    certify, epsilon_threshold, normalize_alpha, witness_deficit, Certificate, CommonnessError,
    CERTIFICATE_SCHEMA_VERSION,
};
use crate::density::{eps_polynomial, Caps};
use crate::graph::{Girth, Graph};
use crate::rational::{format_rational, parse_rational, ratio, Rational};
use num::{Signed, Zero};

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Graph6,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CliCommand {
    Analyze,
    Certify,
    Scan,
    Verify,
}

/// One resolved invocation of the tool.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: CliCommand,
    pub graph_path: Option<PathBuf>,
    pub format: GraphFormat,
    pub alpha: Option<Rational>,
    pub alpha_grid: Vec<Rational>,
    pub epsilon: Option<Rational>,
    pub certificate_path: Option<PathBuf>,
    pub out: Option<PathBuf>,
    pub caps: Caps,
}

impl RunConfig {
    pub fn new(command: CliCommand) -> Self {
        RunConfig {
            command,
            graph_path: None,
            format: GraphFormat::EdgeList,
            alpha: None,
            alpha_grid: Vec::new(),
            epsilon: None,
            certificate_path: None,
            out: None,
            caps: Caps::default(),
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Hypothesis(String),
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Parse(_) | CliError::Usage(_) => 1,
            CliError::Hypothesis(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl From<CommonnessError> for CliError {
    fn from(error: CommonnessError) -> Self {
        match error {
            CommonnessError::Hypothesis(violation) => CliError::Hypothesis(violation.to_string()),
            CommonnessError::Cap(cap) => CliError::Hypothesis(cap.to_string()),
            CommonnessError::Inconsistent { .. } | CommonnessError::VerificationFailed { .. } => {
                CliError::Internal(error.to_string())
            }
        }
    }
}

/// Structural report: girth, cycle facts, and the ε-polynomial when an
/// alpha is supplied.
#[derive(Debug, Clone, Serialize)]
pub struct AnalyzeReport {
    pub schema_version: u32,
    pub graph: Graph,
    pub girth: Girth,
    pub is_cycle: bool,
    pub witness_applicable: bool,
    pub cycle_space_dimension: usize,
    pub num_girth_cycles: Option<u64>,
    pub alpha: Option<String>,
    pub eps_polynomial: Option<Vec<String>>,
}

/// One row of a deficit scan.
#[derive(Debug, Clone, Serialize)]
pub struct ScanRow {
    pub alpha: String,
    pub epsilon0: Option<String>,
    pub epsilon: Option<String>,
    pub deficit: Option<String>,
    pub sign: Option<String>,
    /// Whether `0 < epsilon < epsilon0`, so the sign is guaranteed.
    pub guaranteed: Option<bool>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanReport {
    pub schema_version: u32,
    pub graph: Graph,
    pub rows: Vec<ScanRow>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub schema_version: u32,
    pub verified: bool,
    /// Evaluator used for the replay; never the one in the certificate.
    pub evaluator_replayed: String,
    pub lhs: String,
    pub rhs: String,
    pub deficit: String,
    /// Whether the input file was byte-identical to its re-serialization.
    pub canonical: bool,
}

pub fn cmd_analyze(
    graph: &Graph,
    alpha: Option<&Rational>,
    caps: &Caps,
) -> Result<AnalyzeReport, CliError> {
    let girth = graph.girth();
    let num_girth_cycles = girth.finite().map(|k| graph.count_k_cycle_subsets(k));
    let polynomial = match alpha {
        Some(alpha) => Some(
            eps_polynomial(graph, alpha, caps)
                .map_err(|e| CliError::Hypothesis(e.to_string()))?
                .coefficients()
                .iter()
                .map(format_rational)
                .collect(),
        ),
        None => None,
    };
    Ok(AnalyzeReport {
        schema_version: REPORT_SCHEMA_VERSION,
        graph: graph.clone(),
        girth,
        is_cycle: graph.is_cycle(),
        witness_applicable: graph.witness_applicable(),
        cycle_space_dimension: graph.cycle_space_basis().len(),
        num_girth_cycles,
        alpha: alpha.map(format_rational),
        eps_polynomial: polynomial,
    })
}

pub fn cmd_certify(
    graph: &Graph,
    alpha: &Rational,
    epsilon: Option<&Rational>,
    caps: &Caps,
) -> Result<Certificate, CliError> {
    Ok(certify(graph, alpha, epsilon, caps)?)
}

/// One deficit row per grid alpha, in grid order; per-row failures are
/// recorded in the row and the scan continues.
pub fn cmd_scan(
    graph: &Graph,
    grid: &[Rational],
    epsilon: Option<&Rational>,
    caps: &Caps,
) -> Result<ScanReport, CliError> {
    if grid.is_empty() {
        return Err(CliError::Usage(
            "scan needs a nonempty alpha grid (--alpha-grid P1/Q1,P2/Q2,...)".to_owned(),
        ));
    }
    let rows = grid
        .iter()
        .map(|alpha| scan_row(graph, alpha, epsilon, caps))
        .collect();
    Ok(ScanReport {
        schema_version: REPORT_SCHEMA_VERSION,
        graph: graph.clone(),
        rows,
    })
}

fn scan_row(
    graph: &Graph,
    alpha: &Rational,
    epsilon: Option<&Rational>,
    caps: &Caps,
) -> ScanRow {
    let mut row = ScanRow {
        alpha: format_rational(alpha),
        epsilon0: None,
        epsilon: None,
        deficit: None,
        sign: None,
        guaranteed: None,
        error: None,
    };
    let threshold = match epsilon_threshold(graph, alpha) {
        Ok(threshold) => threshold,
        Err(violation) => {
            row.error = Some(violation.to_string());
            return row;
        }
    };
    row.epsilon0 = Some(format_rational(&threshold));
    let epsilon = match epsilon {
        Some(given) => given.clone(),
        None => &threshold / ratio(2, 1),
    };
    row.epsilon = Some(format_rational(&epsilon));
    let normalized = match normalize_alpha(alpha) {
        Ok((normalized, _)) => normalized,
        Err(violation) => {
            row.error = Some(violation.to_string());
            return row;
        }
    };
    match witness_deficit(graph, &normalized, &epsilon, caps) {
        Ok(deficit) => {
            row.sign = Some(
                if deficit.is_negative() {
                    "negative"
                } else if deficit.is_zero() {
                    "zero"
                } else {
                    "positive"
                }
                .to_owned(),
            );
            row.deficit = Some(format_rational(&deficit));
            row.guaranteed = Some(epsilon.is_positive() && epsilon < threshold);
        }
        Err(error) => row.error = Some(error.to_string()),
    }
    row
}

/// Replays a serialized certificate through the evaluator it did not use.
pub fn cmd_verify(certificate_text: &str, caps: &Caps) -> Result<VerifyReport, CliError> {
    let certificate = Certificate::from_json(certificate_text)
        .map_err(|e| CliError::Parse(format!("certificate: {e}")))?;
    let replay = certificate.replay(caps)?;
    Ok(VerifyReport {
        schema_version: CERTIFICATE_SCHEMA_VERSION,
        verified: true,
        evaluator_replayed: replay.evaluator,
        lhs: format_rational(&replay.lhs),
        rhs: format_rational(&replay.rhs),
        deficit: format_rational(&replay.deficit),
        canonical: certificate_text == certificate.to_canonical_json(),
    })
}

/// Parses a comma-separated list of `"p/q"` alphas.
pub fn parse_alpha_grid(text: &str) -> Result<Vec<Rational>, CliError> {
    text.split(',')
        .filter(|part| !part.trim().is_empty())
        .map(|part| {
            parse_rational(part).map_err(|e| CliError::Parse(format!("alpha grid: {e}")))
        })
        .collect()
}

/// Dispatches a resolved configuration and renders the result as one
/// pretty-printed JSON document with a trailing newline.
pub fn run(config: &RunConfig) -> Result<String, CliError> {
    match config.command {
        CliCommand::Analyze => {
            let graph = load_graph(config)?;
            let report = cmd_analyze(&graph, config.alpha.as_ref(), &config.caps)?;
            Ok(render(&report))
        }
        CliCommand::Certify => {
            let graph = load_graph(config)?;
            let alpha = config
                .alpha
                .as_ref()
                .ok_or_else(|| CliError::Usage("certify needs --alpha P/Q".to_owned()))?;
            let certificate =
                cmd_certify(&graph, alpha, config.epsilon.as_ref(), &config.caps)?;
            Ok(certificate.to_canonical_json())
        }
        CliCommand::Scan => {
            let graph = load_graph(config)?;
            let report = cmd_scan(
                &graph,
                &config.alpha_grid,
                config.epsilon.as_ref(),
                &config.caps,
            )?;
            Ok(render(&report))
        }
        CliCommand::Verify => {
            let path = config
                .certificate_path
                .as_ref()
                .ok_or_else(|| CliError::Usage("verify needs a certificate path".to_owned()))?;
            let text = fs::read_to_string(path).map_err(|e| CliError::Io {
                path: path.display().to_string(),
                message: e.to_string(),
            })?;
            let report = cmd_verify(&text, &config.caps)?;
            Ok(render(&report))
        }
    }
}

fn render<T: Serialize>(document: &T) -> String {
    let mut text =
        serde_json::to_string_pretty(document).expect("report serialization cannot fail");
    text.push('\n');
    text
}

fn load_graph(config: &RunConfig) -> Result<Graph, CliError> {
    let path = config
        .graph_path
        .as_ref()
        .ok_or_else(|| CliError::Usage("this command needs --graph PATH".to_owned()))?;
    let text = fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    let context = |message: String| CliError::Parse(format!("{}: {message}", path.display()));
    match config.format {
        GraphFormat::EdgeList => {
            Graph::parse_edge_list(&text).map_err(|e| context(e.to_string()))
        }
        GraphFormat::Graph6 => Graph::parse_graph6(&text).map_err(|e| context(e.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn paw() -> Graph {
        Graph::new(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn analyze_paw_report() {
        let report = cmd_analyze(&paw(), Some(&ratio(3, 4)), &Caps::default()).unwrap();
        assert_eq!(report.girth, Girth::Finite(3));
        assert!(report.witness_applicable);
        assert!(!report.is_cycle);
        assert_eq!(report.num_girth_cycles, Some(1));
        assert_eq!(report.cycle_space_dimension, 1);
        assert_eq!(
            report.eps_polynomial.unwrap(),
            vec!["81/256", "0", "0", "-3/4", "0"]
        );
    }

    #[test]
    fn analyze_without_alpha_skips_polynomial() {
        let report = cmd_analyze(&Graph::path(4), None, &Caps::default()).unwrap();
        assert_eq!(report.girth, Girth::Acyclic);
        assert!(!report.witness_applicable);
        assert_eq!(report.num_girth_cycles, None);
        assert_eq!(report.eps_polynomial, None);
    }

    #[test]
    fn analyze_cycle_is_not_applicable() {
        let report = cmd_analyze(&Graph::cycle(5), None, &Caps::default()).unwrap();
        assert!(report.is_cycle);
        assert!(!report.witness_applicable);
    }

    #[test]
    fn scan_rows_in_grid_order_with_inline_errors() {
        let grid = vec![ratio(3, 5), ratio(1, 2), ratio(3, 4)];
        let report = cmd_scan(&paw(), &grid, None, &Caps::default()).unwrap();
        assert_eq!(report.rows.len(), 3);
        assert_eq!(report.rows[0].alpha, "3/5");
        assert_eq!(report.rows[0].sign.as_deref(), Some("negative"));
        assert_eq!(report.rows[0].guaranteed, Some(true));
        assert!(report.rows[1].error.as_deref().unwrap().contains("1/2"));
        assert!(report.rows[1].deficit.is_none());
        assert_eq!(report.rows[2].sign.as_deref(), Some("negative"));
    }

    #[test]
    fn scan_rejects_empty_grid() {
        let error = cmd_scan(&paw(), &[], None, &Caps::default()).unwrap_err();
        assert_eq!(error.exit_code(), 1);
    }

    #[test]
    fn scan_reports_unbacked_epsilon() {
        // epsilon above the threshold: still computed, flagged unbacked
        let grid = vec![ratio(3, 4)];
        let report = cmd_scan(&paw(), &grid, Some(&ratio(1, 4)), &Caps::default()).unwrap();
        assert_eq!(report.rows[0].guaranteed, Some(false));
        assert!(report.rows[0].deficit.is_some());
    }

    #[test]
    fn verify_accepts_emitted_certificate() {
        let caps = Caps::default();
        let certificate = cmd_certify(&paw(), &ratio(3, 4), None, &caps).unwrap();
        let json = certificate.to_canonical_json();
        let report = cmd_verify(&json, &caps).unwrap();
        assert!(report.verified);
        assert!(report.canonical);
        assert_eq!(report.evaluator_replayed, "direct");
        assert_eq!(report.deficit, "-1/17179869184");
    }

    #[test]
    fn verify_rejects_tampered_certificate() {
        let caps = Caps::default();
        let certificate = cmd_certify(&paw(), &ratio(3, 4), None, &caps).unwrap();
        let json = certificate
            .to_canonical_json()
            .replace("\"girth_k\": 3", "\"girth_k\": 5");
        let error = cmd_verify(&json, &caps).unwrap_err();
        assert_eq!(error.exit_code(), 3);
    }

    #[test]
    fn alpha_grid_parsing() {
        assert_eq!(
            parse_alpha_grid("3/4,2/3, 9/10").unwrap(),
            vec![ratio(3, 4), ratio(2, 3), ratio(9, 10)]
        );
        assert!(parse_alpha_grid("3/4,0.5").is_err());
        assert_eq!(parse_alpha_grid("").unwrap(), Vec::<Rational>::new());
    }

    #[test]
    fn exit_codes_by_error_family() {
        assert_eq!(
            CliError::Parse("x".into()).exit_code(),
            1
        );
        assert_eq!(CliError::Hypothesis("x".into()).exit_code(), 2);
        assert_eq!(CliError::Internal("x".into()).exit_code(), 3);
        let from_cap: CliError = CommonnessError::Cap(
            crate::density::DensityError::SubsetCapExceeded { edges: 30, cap: 20 },
        )
        .into();
        assert_eq!(from_cap.exit_code(), 2);
    }
}
