use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::metrics::linf_error;
use crate::operators::{apply_stencil, BoundaryPolicy};
use crate::stencils::WeightVector;

use super::{exact, ProblemSpec};

#[derive(Debug, Clone)]
pub struct DiffSolution {
    pub derivative: Vec<Complex64>,
    pub exact: Vec<Complex64>,
    pub error: f64,
}

/// Applies a first-derivative stencil to the sampled exact function with exact exterior
/// values and compares against the exact derivative.
pub fn differentiate(spec: &ProblemSpec, d1: &WeightVector) -> Result<DiffSolution> {
    let (u, du) = match (spec.exact(), exact::derivative_fn(&spec.physics)) {
        (Some(u), Some(du)) => (u, du),
        _ => {
            return Err(Error::InvalidParameter(format!(
                "{} is not a differentiation problem",
                spec.experiment
            )))
        }
    };
    if d1.spec().order() != 1 {
        return Err(Error::InvalidParameter("differentiation needs an order-1 stencil".into()));
    }
    let grid = spec.grid()?;
    let field = grid.sample(|x| u(x));
    let exterior = u.clone();
    let policy = BoundaryPolicy::exact(move |x| exterior(x));
    let derivative = apply_stencil(d1, &grid, &policy, &field)?;
    let exact = grid.sample(|x| du(x));
    let error = linf_error(&derivative, &exact);
    Ok(DiffSolution { derivative, exact, error })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problems::{catalog, Overrides};
    use crate::stencils::{fd_weights, StencilSpec};

    #[test]
    fn central_difference_matches_symbol_error() {
        let spec = catalog("diff-smallk", &Overrides::default()).unwrap();
        let h = spec.grid().unwrap().h();
        let w = fd_weights(&StencilSpec::new(1, 1, h).unwrap()).unwrap();
        let s = differentiate(&spec, &w).unwrap();
        // (e^{ikh} − e^{−ikh}) / 2h = i sin(kh)/h, so the error is |k − sin(kh)/h|
        let expect = (45.0 - (45.0 * h).sin() / h).abs();
        assert!((s.error - expect).abs() < 1e-12 * expect, "{} vs {expect}", s.error);
    }

    #[test]
    fn expdecay_value_at_origin() {
        let spec = catalog("diff-expdecay", &Overrides::default()).unwrap();
        let u0 = spec.exact().unwrap()(0.0);
        let geometric = (1.0 - (-8.1_f64).exp()) / (1.0 - (-0.1_f64).exp());
        assert!((u0.re - geometric).abs() < 1e-12 * geometric);
        assert!(u0.im.abs() < 1e-15);
    }
}
