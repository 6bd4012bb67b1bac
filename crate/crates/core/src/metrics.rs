//! Error measures reported by the experiments.

use crate::error::{Error, Result};
use crate::numerics::Scalar;
use crate::operators::DiffOperator;

/// `max_i |numeric_i - exact_i|` (complex modulus). NaN anywhere propagates.
pub fn linf_error<T: Scalar>(numeric: &[T], exact: &[T]) -> f64 {
    assert_eq!(numeric.len(), exact.len(), "linf_error needs equal lengths");
    let mut worst = 0.0_f64;
    for (&a, &b) in numeric.iter().zip(exact) {
        let d = (a - b).modulus();
        if d.is_nan() {
            return f64::NAN;
        }
        worst = worst.max(d);
    }
    worst
}

/// `‖D₁u_h − D₁u‖₂ / ‖D₁u‖₂` with the full (affine) action of `d1` on both fields.
pub fn h1_seminorm_error<T: Scalar>(u_h: &[T], u_exact: &[T], d1: &DiffOperator<T>) -> Result<f64> {
    if u_h.len() != u_exact.len() || u_h.len() != d1.grid().len() {
        return Err(Error::InvalidParameter("H1 error needs fields on the operator's grid".into()));
    }
    let du_h = d1.apply_full(u_h);
    let du = d1.apply_full(u_exact);
    let num: f64 = du_h.iter().zip(&du).map(|(&a, &b)| (a - b).modulus().powi(2)).sum();
    let den: f64 = du.iter().map(|v| v.modulus().powi(2)).sum();
    if den == 0.0 {
        return Err(Error::InvalidParameter(
            "exact solution has zero derivative; H1 seminorm error undefined".into(),
        ));
    }
    Ok((num / den).sqrt())
}
