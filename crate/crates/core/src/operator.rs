//! Evolution operator descriptions.
//!
//! Three families on a one-dimensional interval:
//!
//! - `Heat`:        A = Δ with Dirichlet ends,
//! - `FourthOrder`: A = −Δ² with hinged ends (v = Δv = 0),
//! - `Degenerate`:  A v = (x^α v′)′ on (0, 1), weakly degenerate
//!   (Dirichlet at both ends, α ∈ (0,1)) or strongly degenerate
//!   (zero weighted flux x^α v′ at 0 and Dirichlet at 1, α ∈ [1,2)).
//!
//! `sigma_exponent` is the expected growth exponent γ of the spectral
//! condition C(λ) ≤ N·exp(N·λ^γ): 1/2 for heat, 1/4 for fourth order,
//! and σ(α) for the degenerate family (3/4 for α ≠ 1; for α = 1 the
//! source formula σ = 3/(2γ) leaves γ a free parameter, exposed here
//! as `gamma_choice` and defaulted to 1.9 so that σ ∈ (0,1)).

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OperatorFamily {
    Heat,
    FourthOrder,
    Degenerate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Degeneracy {
    /// α ∈ (0,1): Dirichlet at both endpoints.
    Weak,
    /// α ∈ [1,2): zero weighted flux at x = 0, Dirichlet at x = 1.
    Strong,
}

pub const DEFAULT_GAMMA_CHOICE: f64 = 1.9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OperatorSpec {
    pub family: OperatorFamily,
    /// Degeneracy power α ∈ (0,2); meaningful only for `Degenerate`.
    pub alpha: f64,
    pub degeneracy: Option<Degeneracy>,
    pub interval: (f64, f64),
    pub sigma_exponent: f64,
    /// Free parameter of σ(α) at α = 1; unused otherwise.
    pub gamma_choice: f64,
}

impl OperatorSpec {
    pub fn heat() -> Self {
        OperatorSpec {
            family: OperatorFamily::Heat,
            alpha: 0.0,
            degeneracy: None,
            interval: (0.0, 1.0),
            sigma_exponent: 0.5,
            gamma_choice: DEFAULT_GAMMA_CHOICE,
        }
    }

    pub fn fourth_order() -> Self {
        OperatorSpec {
            family: OperatorFamily::FourthOrder,
            alpha: 0.0,
            degeneracy: None,
            interval: (0.0, 1.0),
            sigma_exponent: 0.25,
            gamma_choice: DEFAULT_GAMMA_CHOICE,
        }
    }

    pub fn degenerate(alpha: f64) -> Result<Self> {
        Self::degenerate_with_gamma(alpha, DEFAULT_GAMMA_CHOICE)
    }

    pub fn degenerate_with_gamma(alpha: f64, gamma_choice: f64) -> Result<Self> {
        let spec = OperatorSpec {
            family: OperatorFamily::Degenerate,
            alpha,
            degeneracy: Some(if alpha < 1.0 {
                Degeneracy::Weak
            } else {
                Degeneracy::Strong
            }),
            interval: (0.0, 1.0),
            sigma_exponent: sigma_of_alpha(alpha, gamma_choice)?,
            gamma_choice,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let (lo, hi) = self.interval;
        if !(lo < hi) {
            return Err(Error::invalid(format!("interval ({lo}, {hi})")));
        }
        if !(self.sigma_exponent > 0.0 && self.sigma_exponent < 1.0) {
            return Err(Error::invalid(format!(
                "sigma_exponent {} outside (0,1)",
                self.sigma_exponent
            )));
        }
        match self.family {
            OperatorFamily::Degenerate => {
                if !(self.alpha > 0.0 && self.alpha < 2.0) {
                    return Err(Error::invalid(format!("alpha {} outside (0,2)", self.alpha)));
                }
                if (lo, hi) != (0.0, 1.0) {
                    return Err(Error::invalid("degenerate operator lives on (0,1)"));
                }
                match self.degeneracy {
                    Some(Degeneracy::Weak) if self.alpha < 1.0 => Ok(()),
                    Some(Degeneracy::Strong) if self.alpha >= 1.0 => Ok(()),
                    Some(_) => Err(Error::invalid(format!(
                        "degeneracy flag inconsistent with alpha = {}",
                        self.alpha
                    ))),
                    None => Err(Error::invalid("degenerate operator needs a degeneracy flag")),
                }
            }
            _ => {
                if self.degeneracy.is_some() {
                    Err(Error::invalid("degeneracy flag only applies to Degenerate"))
                } else {
                    Ok(())
                }
            }
        }
    }
}

/// σ(α): 3/4 away from α = 1, and 3/(2γ) at α = 1 where γ is a free
/// choice; σ must land in (0,1), which forces γ ∈ (3/2, 2).
pub fn sigma_of_alpha(alpha: f64, gamma_choice: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha < 2.0) {
        return Err(Error::invalid(format!("alpha {alpha} outside (0,2)")));
    }
    if alpha == 1.0 {
        let sigma = 3.0 / (2.0 * gamma_choice);
        if !(sigma > 0.0 && sigma < 1.0) {
            return Err(Error::invalid(format!(
                "gamma_choice {gamma_choice} gives sigma {sigma} outside (0,1)"
            )));
        }
        Ok(sigma)
    } else {
        Ok(0.75)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors_validate() {
        OperatorSpec::heat().validate().unwrap();
        OperatorSpec::fourth_order().validate().unwrap();
        let weak = OperatorSpec::degenerate(0.5).unwrap();
        assert_eq!(weak.degeneracy, Some(Degeneracy::Weak));
        assert_eq!(weak.sigma_exponent, 0.75);
        let strong = OperatorSpec::degenerate(1.5).unwrap();
        assert_eq!(strong.degeneracy, Some(Degeneracy::Strong));
        assert!(OperatorSpec::degenerate(2.0).is_err());
        assert!(OperatorSpec::degenerate(0.0).is_err());
    }

    #[test]
    fn sigma_at_alpha_one_uses_gamma_choice() {
        let op = OperatorSpec::degenerate(1.0).unwrap();
        assert!((op.sigma_exponent - 3.0 / 3.8).abs() < 1e-15);
        assert!(OperatorSpec::degenerate_with_gamma(1.0, 1.0).is_err());
        let op = OperatorSpec::degenerate_with_gamma(1.0, 1.6).unwrap();
        assert!((op.sigma_exponent - 0.9375).abs() < 1e-15);
    }

    #[test]
    fn degeneracy_flag_must_match_alpha() {
        let mut op = OperatorSpec::degenerate(0.5).unwrap();
        op.degeneracy = Some(Degeneracy::Strong);
        assert!(op.validate().is_err());
    }
}
