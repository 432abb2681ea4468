use serde::{Deserialize, Serialize};

use super::EconError;

/// Quadratic abatement cost `C(A) = k A^2 + m A + n`.
///
/// The curvature `C'' = 2k` is constant, so the marginal abatement cost
/// `C'(A) = 2kA + m` is linear and inverts in closed form: a region facing
/// carbon price `tau` abates `A(tau) = (tau - m) / 2k`, clamped at zero for
/// prices below the linear coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadraticCost {
    /// Curvature coefficient (money per abatement squared), k > 0.
    pub k: f64,
    /// Linear coefficient (money per abatement), m >= 0.
    pub m: f64,
    /// Fixed term (money), n >= 0.
    pub n: f64,
}

impl QuadraticCost {
    pub fn new(k: f64, m: f64, n: f64) -> Result<Self, EconError> {
        if !(k > 0.0) || !k.is_finite() {
            return Err(EconError::InvalidParameter {
                name: "k",
                message: "cost curvature must be finite and > 0",
                value: k,
            });
        }
        if !(m >= 0.0) || !m.is_finite() {
            return Err(EconError::InvalidParameter {
                name: "m",
                message: "linear cost coefficient must be finite and >= 0",
                value: m,
            });
        }
        if !(n >= 0.0) || !n.is_finite() {
            return Err(EconError::InvalidParameter {
                name: "n",
                message: "fixed cost term must be finite and >= 0",
                value: n,
            });
        }
        Ok(Self { k, m, n })
    }

    /// Pure quadratic `k A^2`.
    pub fn pure(k: f64) -> Result<Self, EconError> {
        Self::new(k, 0.0, 0.0)
    }

    pub fn cost(&self, abatement: f64) -> f64 {
        (self.k * abatement + self.m) * abatement + self.n
    }

    /// Marginal abatement cost `C'(A) = 2kA + m`.
    pub fn mac(&self, abatement: f64) -> f64 {
        2.0 * self.k * abatement + self.m
    }

    /// Constant second derivative `C'' = 2k`.
    pub fn curvature(&self) -> f64 {
        2.0 * self.k
    }

    /// Inverse MAC: the abatement chosen by a region that optimally responds
    /// to carbon price `tau`, clamped at zero below the linear coefficient.
    pub fn abatement_at_price(&self, tau: f64) -> f64 {
        ((tau - self.m) / (2.0 * self.k)).max(0.0)
    }
}
