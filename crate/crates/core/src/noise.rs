//! Deterministic noise coefficients F(t) for the multiplicative noise
//! term F(t)·dW.
//!
//! The closed-form solvers and the stochastic-exponential lifting all
//! require F deterministic; piecewise-constant-in-time functions keep
//! the drift integrals ∫F ds and ∫F² ds exact. The constant
//! τ = (ess-sup |F|)² of the decay estimates is computed exactly from
//! the values.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub enum NoiseModel {
    Zero,
    Constant(f64),
    /// `values[i]` on [breakpoints[i-1], breakpoints[i]) with the
    /// implicit outer endpoints 0 and +inf; `breakpoints` are the
    /// interior jump times, so `values.len() == breakpoints.len() + 1`.
    PiecewiseConstant {
        breakpoints: Vec<f64>,
        values: Vec<f64>,
    },
}

impl NoiseModel {
    pub fn validate(&self) -> Result<()> {
        match self {
            NoiseModel::Zero => Ok(()),
            NoiseModel::Constant(f) => {
                if f.is_finite() {
                    Ok(())
                } else {
                    Err(Error::invalid("noise value must be finite"))
                }
            }
            NoiseModel::PiecewiseConstant {
                breakpoints,
                values,
            } => {
                if values.len() != breakpoints.len() + 1 {
                    return Err(Error::invalid(format!(
                        "piecewise noise needs values.len() == breakpoints.len() + 1, got {} and {}",
                        values.len(),
                        breakpoints.len()
                    )));
                }
                if breakpoints.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(Error::invalid("noise breakpoints must be strictly increasing"));
                }
                if breakpoints.iter().any(|t| !t.is_finite() || *t <= 0.0) {
                    return Err(Error::invalid("noise breakpoints must be positive and finite"));
                }
                if values.iter().any(|v| !v.is_finite()) {
                    return Err(Error::invalid("noise values must be finite"));
                }
                Ok(())
            }
        }
    }

    /// F(t).
    pub fn value(&self, t: f64) -> f64 {
        match self {
            NoiseModel::Zero => 0.0,
            NoiseModel::Constant(f) => *f,
            NoiseModel::PiecewiseConstant {
                breakpoints,
                values,
            } => {
                let idx = breakpoints.partition_point(|&b| b <= t);
                values[idx]
            }
        }
    }

    /// τ = (ess-sup |F|)², exact from the stored values.
    pub fn tau(&self) -> f64 {
        match self {
            NoiseModel::Zero => 0.0,
            NoiseModel::Constant(f) => f * f,
            NoiseModel::PiecewiseConstant { values, .. } => values
                .iter()
                .map(|v| v * v)
                .fold(0.0, f64::max),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            NoiseModel::Zero => true,
            NoiseModel::Constant(f) => *f == 0.0,
            NoiseModel::PiecewiseConstant { values, .. } => values.iter().all(|v| *v == 0.0),
        }
    }

    /// ∫_a^b F(s) ds, exact for the piecewise-constant family.
    pub fn integral(&self, a: f64, b: f64) -> f64 {
        self.piecewise_integral(a, b, |v| v)
    }

    /// ∫_a^b F(s)² ds, exact.
    pub fn integral_sq(&self, a: f64, b: f64) -> f64 {
        self.piecewise_integral(a, b, |v| v * v)
    }

    fn piecewise_integral(&self, a: f64, b: f64, f: impl Fn(f64) -> f64) -> f64 {
        if b <= a {
            return 0.0;
        }
        match self {
            NoiseModel::Zero => 0.0,
            NoiseModel::Constant(v) => f(*v) * (b - a),
            NoiseModel::PiecewiseConstant {
                breakpoints,
                values,
            } => {
                let mut total = 0.0;
                let mut lo = a;
                for (i, &bp) in breakpoints.iter().enumerate() {
                    if bp <= lo {
                        continue;
                    }
                    if bp >= b {
                        break;
                    }
                    total += f(values[i]) * (bp - lo);
                    lo = bp;
                }
                let idx = breakpoints.partition_point(|&bp| bp <= lo);
                total += f(values[idx]) * (b - lo);
                total
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tau_closed_forms() {
        assert_eq!(NoiseModel::Zero.tau(), 0.0);
        assert_eq!(NoiseModel::Constant(0.5).tau(), 0.25);
        assert_eq!(NoiseModel::Constant(-2.0).tau(), 4.0);
        let pw = NoiseModel::PiecewiseConstant {
            breakpoints: vec![0.5],
            values: vec![0.3, -0.7],
        };
        assert!((pw.tau() - 0.49).abs() < 1e-15);
    }

    #[test]
    fn piecewise_integrals_exact() {
        let pw = NoiseModel::PiecewiseConstant {
            breakpoints: vec![0.25, 0.75],
            values: vec![1.0, -2.0, 3.0],
        };
        pw.validate().unwrap();
        // ∫_0^1 = 1·0.25 − 2·0.5 + 3·0.25 = 0.0
        assert!((pw.integral(0.0, 1.0)).abs() < 1e-15);
        // ∫_0.5^1 = −2·0.25 + 3·0.25 = 0.25
        assert!((pw.integral(0.5, 1.0) - 0.25).abs() < 1e-15);
        // ∫_0^1 F² = 0.25 + 4·0.5 + 9·0.25 = 4.5
        assert!((pw.integral_sq(0.0, 1.0) - 4.5).abs() < 1e-15);
    }

    #[test]
    fn value_lookup() {
        let pw = NoiseModel::PiecewiseConstant {
            breakpoints: vec![0.5],
            values: vec![1.0, 2.0],
        };
        assert_eq!(pw.value(0.0), 1.0);
        assert_eq!(pw.value(0.49), 1.0);
        assert_eq!(pw.value(0.5), 2.0);
        assert_eq!(pw.value(10.0), 2.0);
    }

    #[test]
    fn validation_catches_shape_errors() {
        assert!(NoiseModel::PiecewiseConstant {
            breakpoints: vec![0.5, 0.5],
            values: vec![1.0, 2.0, 3.0],
        }
        .validate()
        .is_err());
        assert!(NoiseModel::PiecewiseConstant {
            breakpoints: vec![0.5],
            values: vec![1.0],
        }
        .validate()
        .is_err());
    }
}
