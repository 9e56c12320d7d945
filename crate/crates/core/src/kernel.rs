//! Step kernels: symmetric rational-valued kernels on finite weighted
//! point spaces.
//!
//! A step kernel is a graphon when all its values lie in `[0, 1]`, but
//! signed kernels are first-class here — the certification witness is
//! assembled from the signed kernel `f` before its range is confirmed.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rational::{
    format_rational, in_unit_interval, serde_ratio_matrix, serde_ratio_vec, Rational,
};
use num::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("a step kernel needs at least one point")]
    NoPoints,
    #[error("weight {index} is not positive")]
    NonPositiveWeight { index: usize },
    #[error("weights sum to {sum}, expected exactly 1")]
    BadWeightSum { sum: String },
    #[error("values must form a {points}x{points} matrix")]
    BadShape { points: usize },
    #[error("values matrix is not symmetric at ({i}, {j})")]
    NotSymmetric { i: usize, j: usize },
    #[error("kernel value {value} at ({i}, {j}) lies outside [0, 1]; not a graphon")]
    NotAGraphon {
        i: usize,
        j: usize,
        value: String,
    },
}

/// Symmetric rational kernel over a finite probability space.
///
/// Serializes as `{"weights": ["1/2", …], "values": [["5/8", …], …]}` with
/// all rationals as `"p/q"` strings; deserialization re-validates the
/// invariants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawKernel")]
pub struct StepKernel {
    #[serde(with = "serde_ratio_vec")]
    weights: Vec<Rational>,
    #[serde(with = "serde_ratio_matrix")]
    values: Vec<Vec<Rational>>,
}

#[derive(Deserialize)]
struct RawKernel {
    #[serde(with = "serde_ratio_vec")]
    weights: Vec<Rational>,
    #[serde(with = "serde_ratio_matrix")]
    values: Vec<Vec<Rational>>,
}

impl TryFrom<RawKernel> for StepKernel {
    type Error = KernelError;

    fn try_from(raw: RawKernel) -> Result<Self, KernelError> {
        StepKernel::new(raw.weights, raw.values)
    }
}

impl StepKernel {
    /// Validates positivity and unit sum of the weights and exact symmetry
    /// of the value matrix.
    pub fn new(weights: Vec<Rational>, values: Vec<Vec<Rational>>) -> Result<Self, KernelError> {
        let points = weights.len();
        if points == 0 {
            return Err(KernelError::NoPoints);
        }
        for (index, weight) in weights.iter().enumerate() {
            if !weight.is_positive() {
                return Err(KernelError::NonPositiveWeight { index });
            }
        }
        let sum: Rational = weights.iter().sum();
        if !sum.is_one() {
            return Err(KernelError::BadWeightSum {
                sum: format_rational(&sum),
            });
        }
        if values.len() != points || values.iter().any(|row| row.len() != points) {
            return Err(KernelError::BadShape { points });
        }
        for i in 0..points {
            for j in i + 1..points {
                if values[i][j] != values[j][i] {
                    return Err(KernelError::NotSymmetric { i, j });
                }
            }
        }
        Ok(StepKernel { weights, values })
    }

    /// One point of weight 1 carrying the constant value `c`.
    pub fn constant(c: &Rational) -> Self {
        StepKernel {
            weights: vec![Rational::one()],
            values: vec![vec![c.clone()]],
        }
    }

    /// The two-point witness kernel `alpha + epsilon * f` on the uniform
    /// space, where `f` is `-1` on the diagonal and `+1` off it.
    pub fn witness(alpha: &Rational, epsilon: &Rational) -> Self {
        let half = Rational::new(1.into(), 2.into());
        let diagonal = alpha - epsilon;
        let off = alpha + epsilon;
        StepKernel {
            weights: vec![half.clone(), half],
            values: vec![
                vec![diagonal.clone(), off.clone()],
                vec![off, diagonal],
            ],
        }
    }

    pub fn point_count(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn weight(&self, i: usize) -> &Rational {
        &self.weights[i]
    }

    pub fn value(&self, i: usize, j: usize) -> &Rational {
        &self.values[i][j]
    }

    /// Pointwise `1 - values`, on the same point space.
    pub fn complement(&self) -> Self {
        let one = Rational::one();
        StepKernel {
            weights: self.weights.clone(),
            values: self
                .values
                .iter()
                .map(|row| row.iter().map(|v| &one - v).collect())
                .collect(),
        }
    }

    /// The edge density `t_{K2}`: the weighted mean of all values.
    pub fn edge_density(&self) -> Rational {
        let mut total = Rational::zero();
        for (i, wi) in self.weights.iter().enumerate() {
            for (j, wj) in self.weights.iter().enumerate() {
                total += wi * wj * &self.values[i][j];
            }
        }
        total
    }

    /// `true` iff every value lies in `[0, 1]`.
    pub fn is_graphon(&self) -> bool {
        self.values
            .iter()
            .all(|row| row.iter().all(in_unit_interval))
    }

    /// Converts to a step graphon on `[0, 1]` with interval lengths equal
    /// to the point weights. Rejects kernels with values outside `[0, 1]`.
    pub fn export_step_graphon(&self) -> Result<StepGraphonExport, KernelError> {
        for (i, row) in self.values.iter().enumerate() {
            for (j, value) in row.iter().enumerate() {
                if !in_unit_interval(value) {
                    return Err(KernelError::NotAGraphon {
                        i,
                        j,
                        value: format_rational(value),
                    });
                }
            }
        }
        let mut breakpoints = Vec::with_capacity(self.weights.len() + 1);
        let mut cumulative = Rational::zero();
        breakpoints.push(cumulative.clone());
        for weight in &self.weights {
            cumulative += weight;
            breakpoints.push(cumulative.clone());
        }
        Ok(StepGraphonExport {
            breakpoints,
            values: self.values.clone(),
        })
    }
}

/// A step graphon on `[0, 1]`: breakpoints `0 = b_0 < … < b_m = 1` and the
/// block value matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StepGraphonExport {
    #[serde(with = "serde_ratio_vec")]
    pub breakpoints: Vec<Rational>,
    #[serde(with = "serde_ratio_matrix")]
    pub values: Vec<Vec<Rational>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{integer, ratio};

    #[test]
    fn constant_kernel_density() {
        assert_eq!(
            StepKernel::constant(&ratio(1, 2)).edge_density(),
            ratio(1, 2)
        );
        assert_eq!(StepKernel::constant(&integer(0)).edge_density(), integer(0));
    }

    #[test]
    fn witness_kernel_entries() {
        let k = StepKernel::witness(&ratio(1, 2), &ratio(1, 2));
        assert_eq!(k.value(0, 0), &integer(0));
        assert_eq!(k.value(1, 1), &integer(0));
        assert_eq!(k.value(0, 1), &integer(1));
        let constant = StepKernel::witness(&ratio(3, 4), &integer(0));
        assert_eq!(constant.value(0, 0), &ratio(3, 4));
        assert_eq!(constant.value(0, 1), &ratio(3, 4));
    }

    #[test]
    fn witness_edge_density_is_alpha() {
        for (a, e) in [(ratio(3, 4), ratio(1, 8)), (ratio(2, 7), ratio(5, 3))] {
            assert_eq!(StepKernel::witness(&a, &e).edge_density(), a);
        }
    }

    #[test]
    fn two_point_bipartite_kernel_density() {
        let k = StepKernel::new(
            vec![ratio(1, 2), ratio(1, 2)],
            vec![
                vec![integer(0), integer(1)],
                vec![integer(1), integer(0)],
            ],
        )
        .unwrap();
        assert_eq!(k.edge_density(), ratio(1, 2));
    }

    #[test]
    fn complement_is_involution() {
        let k = StepKernel::witness(&ratio(3, 4), &ratio(1, 8));
        assert_eq!(k.complement().complement(), k);
        assert_eq!(
            StepKernel::constant(&ratio(1, 4)).complement(),
            StepKernel::constant(&ratio(3, 4))
        );
        let c = k.complement();
        assert_eq!(c.value(0, 0), &(ratio(1, 4) + ratio(1, 8)));
        assert_eq!(c.value(0, 1), &(ratio(1, 4) - ratio(1, 8)));
        assert_eq!(
            k.edge_density() + c.edge_density(),
            integer(1)
        );
    }

    #[test]
    fn graphon_range_check() {
        assert!(StepKernel::witness(&ratio(3, 4), &ratio(1, 8)).is_graphon());
        assert!(!StepKernel::witness(&ratio(3, 4), &ratio(1, 2)).is_graphon());
        assert!(!StepKernel::witness(&integer(0), &integer(1)).is_graphon());
        // boundary: alpha - eps = 0 and alpha + eps = 1 are allowed
        assert!(StepKernel::witness(&ratio(1, 2), &ratio(1, 2)).is_graphon());
    }

    #[test]
    fn export_breakpoints_and_blocks() {
        let export = StepKernel::witness(&ratio(3, 4), &ratio(1, 8))
            .export_step_graphon()
            .unwrap();
        assert_eq!(
            export.breakpoints,
            vec![integer(0), ratio(1, 2), integer(1)]
        );
        assert_eq!(export.values[0][0], ratio(5, 8));
        assert_eq!(export.values[0][1], ratio(7, 8));
        assert!(StepKernel::witness(&ratio(1, 4), &ratio(1, 2))
            .export_step_graphon()
            .is_err());
        let single = StepKernel::constant(&ratio(1, 2)).export_step_graphon().unwrap();
        assert_eq!(single.breakpoints, vec![integer(0), integer(1)]);
    }

    #[test]
    fn validation_errors() {
        assert_eq!(StepKernel::new(vec![], vec![]), Err(KernelError::NoPoints));
        assert_eq!(
            StepKernel::new(vec![ratio(1, 2), ratio(1, 3)], vec![vec![integer(0); 2]; 2]),
            Err(KernelError::BadWeightSum {
                sum: "5/6".to_owned()
            })
        );
        assert_eq!(
            StepKernel::new(vec![integer(2), integer(-1)], vec![vec![integer(0); 2]; 2]),
            Err(KernelError::NonPositiveWeight { index: 1 })
        );
        let asymmetric = StepKernel::new(
            vec![ratio(1, 2), ratio(1, 2)],
            vec![
                vec![integer(0), integer(1)],
                vec![integer(0), integer(0)],
            ],
        );
        assert_eq!(asymmetric, Err(KernelError::NotSymmetric { i: 0, j: 1 }));
    }

    #[test]
    fn json_round_trip() {
        let k = StepKernel::witness(&ratio(3, 4), &ratio(1, 8));
        let json = serde_json::to_string(&k).unwrap();
        assert_eq!(
            json,
            r#"{"weights":["1/2","1/2"],"values":[["5/8","7/8"],["7/8","5/8"]]}"#
        );
        let back: StepKernel = serde_json::from_str(&json).unwrap();
        assert_eq!(back, k);
        // invalid kernels are rejected on parse
        let bad = r#"{"weights":["1/2","1/3"],"values":[["0","0"],["0","0"]]}"#;
        assert!(serde_json::from_str::<StepKernel>(bad).is_err());
    }
}
