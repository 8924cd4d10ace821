//! Physical coupling parameters and their normalized counterparts.

use crate::error::{IsingError, Result};
use crate::scalar::Real;

/// Normalized quantities `b± = B±/R`, `j = J/R`. Only defined when `R > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Normalized<T> {
    pub field_sum: T,
    pub field_diff: T,
    pub coupling: T,
}

/// Inputs `(J, B1, B2)` of the Hamiltonian
/// `H = -J σ1·σ2 + B1 σ1z + B2 σ2z` together with derived quantities.
///
/// `J` may be negative; the `j ∈ [0, 1/2]` range only applies for `J ≥ 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CouplingParams<T> {
    coupling: T,
    field_1: T,
    field_2: T,
    field_sum: T,
    field_diff: T,
    scale: T,
    normalized: Option<Normalized<T>>,
}

impl<T: Real> CouplingParams<T> {
    /// Builds parameters from the coupling `J` and the two local fields.
    pub fn new(coupling: T, field_1: T, field_2: T) -> Result<Self> {
        if !(coupling.is_finite() && field_1.is_finite() && field_2.is_finite()) {
            return Err(IsingError::InvalidArgument(format!(
                "non-finite parameters J={coupling}, B1={field_1}, B2={field_2}"
            )));
        }
        let field_sum = field_1 + field_2;
        let field_diff = field_1 - field_2;
        let two = T::lit(2.0);
        let scale = field_diff.hypot(two * coupling);
        let normalized = (scale > T::zero()).then(|| Normalized {
            field_sum: field_sum / scale,
            field_diff: field_diff / scale,
            coupling: coupling / scale,
        });
        Ok(Self {
            coupling,
            field_1,
            field_2,
            field_sum,
            field_diff,
            scale,
            normalized,
        })
    }

    /// Builds parameters from `J`, `B+ = B1 + B2` and `B- = B1 - B2`.
    pub fn from_sum_diff(coupling: T, field_sum: T, field_diff: T) -> Result<Self> {
        let half = T::lit(0.5);
        Self::new(
            coupling,
            half * (field_sum + field_diff),
            half * (field_sum - field_diff),
        )
    }

    /// Parameters with `R = 1`, so that physical and scaled time coincide.
    ///
    /// `field_diff` is `b-`; it must satisfy `b-² + 4j² = 1` within `1e-9`.
    pub fn from_normalized(coupling: T, field_diff: T, field_sum: T) -> Result<Self> {
        let residual = field_diff * field_diff + T::lit(4.0) * coupling * coupling - T::one();
        if residual.abs() > T::lit(1e-9) {
            return Err(IsingError::InvalidArgument(format!(
                "normalized fields violate b-^2 + 4 j^2 = 1 (residual {residual})"
            )));
        }
        Self::from_sum_diff(coupling, field_sum, field_diff)
    }

    /// Parameters with `R = 1`, `b+ = 0` and `b- = +sqrt(1 - 4 j²)`.
    pub fn from_reduced_coupling(coupling: T) -> Result<Self> {
        let half = T::lit(0.5);
        if !(coupling.abs() <= half) || coupling == T::zero() {
            return Err(IsingError::InvalidArgument(format!(
                "reduced coupling must lie in (0, 1/2] in magnitude, got {coupling}"
            )));
        }
        let diff = (T::one() - T::lit(4.0) * coupling * coupling).max(T::zero()).sqrt();
        Self::from_sum_diff(coupling, T::zero(), diff)
    }

    pub fn coupling(&self) -> T {
        self.coupling
    }

    pub fn field_1(&self) -> T {
        self.field_1
    }

    pub fn field_2(&self) -> T {
        self.field_2
    }

    /// `B+ = B1 + B2`.
    pub fn field_sum(&self) -> T {
        self.field_sum
    }

    /// `B- = B1 - B2`.
    pub fn field_diff(&self) -> T {
        self.field_diff
    }

    /// `R = sqrt(B-² + 4J²)`.
    pub fn scale(&self) -> T {
        self.scale
    }

    /// True when `R = 0` (`J = 0` and `B1 = B2`).
    pub fn is_degenerate(&self) -> bool {
        self.normalized.is_none()
    }

    pub fn normalized(&self) -> Option<Normalized<T>> {
        self.normalized
    }

    pub fn try_normalized(&self) -> Result<Normalized<T>> {
        self.normalized.ok_or(IsingError::DegenerateParameters)
    }

    /// Dimensionless time `t' = R t`.
    pub fn scaled_time(&self, t: T) -> T {
        self.scale * t
    }

    /// Period `2π/R` of the `|01>,|10>` block.
    pub fn period(&self) -> Result<T> {
        if self.is_degenerate() {
            return Err(IsingError::DegenerateParameters);
        }
        Ok(T::TAU() / self.scale)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_zero_is_degenerate() {
        let p = CouplingParams::<f64>::new(0.0, 0.0, 0.0).unwrap();
        assert!(p.is_degenerate());
        assert_eq!(p.scale(), 0.0);
        assert_eq!(p.try_normalized(), Err(IsingError::DegenerateParameters));
    }

    #[test]
    fn opposite_fields() {
        let p = CouplingParams::<f64>::new(1.0, 1.0, -1.0).unwrap();
        let n = p.normalized().unwrap();
        assert_eq!(p.field_sum(), 0.0);
        assert_eq!(p.field_diff(), 2.0);
        assert!((p.scale() - 2.0 * 2f64.sqrt()).abs() < 1e-15);
        assert!((n.coupling - 1.0 / (2.0 * 2f64.sqrt())).abs() < 1e-15);
        assert!((n.field_diff - 1.0 / 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn homogeneous_field() {
        for b in [-3.0, 0.0, 0.7, 5.0] {
            let p = CouplingParams::<f64>::new(1.0, b, b).unwrap();
            let n = p.normalized().unwrap();
            assert_eq!(p.field_diff(), 0.0);
            assert_eq!(p.scale(), 2.0);
            assert_eq!(n.coupling, 0.5);
            assert_eq!(n.field_diff, 0.0);
        }
    }

    #[test]
    fn rejects_non_finite() {
        assert!(matches!(
            CouplingParams::<f64>::new(f64::NAN, 0.0, 0.0),
            Err(IsingError::InvalidArgument(_))
        ));
        assert!(CouplingParams::<f64>::new(1.0, f64::INFINITY, 0.0).is_err());
    }

    #[test]
    fn sum_diff_roundtrip() {
        let p = CouplingParams::<f64>::from_sum_diff(1.0, 3.0, 1.0).unwrap();
        assert_eq!(p.field_1(), 2.0);
        assert_eq!(p.field_2(), 1.0);
    }

    #[test]
    fn reduced_coupling_has_unit_scale() {
        let p = CouplingParams::<f64>::from_reduced_coupling(0.25).unwrap();
        assert!((p.scale() - 1.0).abs() < 1e-15);
        assert!(CouplingParams::<f64>::from_reduced_coupling(0.6).is_err());
        assert!(CouplingParams::<f64>::from_reduced_coupling(0.0).is_err());
        assert!(CouplingParams::<f64>::from_normalized(0.25, 0.2, 0.0).is_err());
    }

    #[test]
    fn works_in_single_precision() {
        let p = CouplingParams::<f32>::new(1.0, 2.0, 1.0).unwrap();
        assert!((p.scale() - 5f32.sqrt()).abs() < 1e-6);
    }
}
