use serde::{Deserialize, Serialize};

use super::EconError;

/// Quadratic climate damage in remaining emissions,
/// `D(A) = d0 + d1 (Ebar - A) + d2 (Ebar - A)^2`,
/// where `A` is *global* abatement and `Ebar` the baseline emissions level.
///
/// On `0 <= A <= Ebar` the function is decreasing in abatement
/// (`D'(A) = -d1 - 2 d2 (Ebar - A) <= 0`) and convex (`D'' = 2 d2 >= 0`);
/// it is strictly so whenever the respective coefficients are positive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadraticDamage {
    /// Level term (money), d0 >= 0.
    pub d0: f64,
    /// Slope in remaining emissions (money per emissions), d1 >= 0.
    pub d1: f64,
    /// Curvature in remaining emissions (money per emissions squared), d2 >= 0.
    pub d2: f64,
    /// Baseline emissions (emissions units), Ebar > 0.
    pub e_bar: f64,
}

impl QuadraticDamage {
    pub fn new(d0: f64, d1: f64, d2: f64, e_bar: f64) -> Result<Self, EconError> {
        for (name, v) in [("d0", d0), ("d1", d1), ("d2", d2)] {
            if !(v >= 0.0) || !v.is_finite() {
                return Err(EconError::InvalidParameter {
                    name,
                    message: "damage coefficient must be finite and >= 0",
                    value: v,
                });
            }
        }
        if !(e_bar > 0.0) || !e_bar.is_finite() {
            return Err(EconError::InvalidParameter {
                name: "e_bar",
                message: "baseline emissions must be finite and > 0",
                value: e_bar,
            });
        }
        Ok(Self { d0, d1, d2, e_bar })
    }

    /// Damage level at global abatement `a`.
    pub fn damage(&self, a: f64) -> f64 {
        let rem = self.e_bar - a;
        self.d0 + (self.d1 + self.d2 * rem) * rem
    }

    /// Marginal damage of abatement `D'(A) = -d1 - 2 d2 (Ebar - A)`,
    /// negative on the interior of the domain: abating reduces damages.
    pub fn slope(&self, a: f64) -> f64 {
        -self.d1 - 2.0 * self.d2 * (self.e_bar - a)
    }

    /// Constant second derivative `D'' = 2 d2`.
    pub fn curvature(&self) -> f64 {
        2.0 * self.d2
    }

    /// True when damages respond to abatement at all.
    pub fn is_active(&self) -> bool {
        self.d1 > 0.0 || self.d2 > 0.0
    }
}

/// Builds an aggregate regional damage function from a per-endowment one by
/// scaling every coefficient with the aggregate endowment `L * w`, the
/// "simplified RICE" form `D_i(A) = L_i w_i d_i(A)`.
///
/// The per-endowment shape must be decreasing and convex in abatement;
/// negative coefficients are rejected as a shape violation before they can
/// reach `QuadraticDamage::new`, so the caller learns *which* region's shape
/// was bad.
pub fn simplified_rice_damage(
    region_name: &str,
    population: f64,
    endowment_per_capita: f64,
    per_endowment: &QuadraticDamage,
) -> Result<QuadraticDamage, EconError> {
    if per_endowment.d1 < 0.0 || per_endowment.d2 < 0.0 {
        return Err(EconError::InvalidDamageShape {
            name: region_name.to_owned(),
        });
    }
    let scale = population * endowment_per_capita;
    QuadraticDamage::new(
        scale * per_endowment.d0,
        scale * per_endowment.d1,
        scale * per_endowment.d2,
        per_endowment.e_bar,
    )
}
