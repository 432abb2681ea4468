use serde::{Deserialize, Serialize};

use super::EconError;

/// Isoelastic (CRRA) utility of per capita consumption.
///
/// `eta` is the elasticity of marginal utility of consumption. `eta = 0`
/// gives linear utility, `eta = 1` the logarithmic limit (handled by an
/// explicit branch, not an approximation), and larger values a more concave,
/// more inequality-averse function.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UtilityParams {
    pub eta: f64,
}

impl UtilityParams {
    pub fn new(eta: f64) -> Result<Self, EconError> {
        if !(eta >= 0.0) || !eta.is_finite() {
            return Err(EconError::InvalidParameter {
                name: "eta",
                message: "must be finite and >= 0",
                value: eta,
            });
        }
        Ok(Self { eta })
    }

    pub fn log() -> Self {
        Self { eta: 1.0 }
    }

    /// u(x) = x^(1-eta)/(1-eta), or ln(x) when eta = 1. Defined for x > 0.
    pub fn utility(&self, x: f64) -> f64 {
        if self.eta == 1.0 {
            x.ln()
        } else {
            x.powf(1.0 - self.eta) / (1.0 - self.eta)
        }
    }

    /// u'(x) = x^(-eta), strictly positive and (for eta > 0) strictly
    /// decreasing on x > 0.
    pub fn marginal_utility(&self, x: f64) -> f64 {
        if self.eta == 0.0 {
            1.0
        } else if self.eta == 1.0 {
            1.0 / x
        } else {
            x.powf(-self.eta)
        }
    }

    /// Inverts u: returns the consumption level whose utility equals `u`,
    /// or `None` when `u` lies outside the range of the utility function
    /// (e.g. u >= 0 for eta > 1, where utility is bounded above by zero).
    pub fn consumption_for_utility(&self, u: f64) -> Option<f64> {
        if self.eta == 1.0 {
            return Some(u.exp());
        }
        let scaled = (1.0 - self.eta) * u;
        if scaled <= 0.0 {
            return None;
        }
        Some(scaled.powf(1.0 / (1.0 - self.eta)))
    }
}
