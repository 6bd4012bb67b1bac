use crate::error::{Error, Result};
use crate::numerics::sym_eigen;
use crate::operators::{build_matrix, BoundaryPolicy};
use crate::stencils::WeightVector;

use super::{Physics, ProblemSpec};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenResult {
    pub mode: usize,
    pub computed: f64,
    /// `n + 1/2`.
    pub exact: f64,
    pub relative_error: f64,
}

/// Node count and half-length used for half-width `m` when none is fixed.
///
/// `N = M + 1` with the tabulated domains at `M = 50` and `M = 200`; other sizes
/// interpolate the half-length linearly in `√N` between those two.
pub(crate) fn default_grid(m: usize) -> (usize, f64) {
    match m {
        50 => (51, 8.7),
        200 => (201, 17.6),
        _ => {
            let n = m + 1;
            let (s0, s1) = ((51.0_f64).sqrt(), (201.0_f64).sqrt());
            let t = ((n as f64).sqrt() - s0) / (s1 - s0);
            (n, (8.7 + t * (17.6 - 8.7)).max(1.0))
        }
    }
}

/// Full spectrum of `H = −½D₂ + x²/2` with zero exterior values.
pub fn solve_eigen(spec: &ProblemSpec, d2: &WeightVector) -> Result<Vec<EigenResult>> {
    if !matches!(spec.physics, Physics::Oscillator { .. }) {
        return Err(Error::InvalidParameter(format!("{} is not the eigenproblem", spec.experiment)));
    }
    if d2.spec().order() != 2 {
        return Err(Error::InvalidParameter("eigenproblem needs an order-2 stencil".into()));
    }
    let grid = spec.grid_for(d2.half_width())?;
    if (d2.spec().h() - grid.h()).abs() > 1e-12 * grid.h() {
        return Err(Error::InvalidParameter(format!(
            "stencil spacing {} does not match grid spacing {}",
            d2.spec().h(),
            grid.h()
        )));
    }
    let (mut h, _) = build_matrix::<f64>(d2, &grid, &BoundaryPolicy::ZeroExterior)?.into_parts();
    let n = grid.len();
    h *= -0.5;
    for i in 0..n {
        let x = grid.x(i as isize);
        h[(i, i)] += 0.5 * x * x;
    }
    // symmetric weights give a symmetric matrix; remove rounding asymmetry
    let sym = (&h + h.transpose()) * 0.5;
    let eig = sym_eigen(&sym)?;
    Ok(eig
        .values
        .iter()
        .enumerate()
        .map(|(mode, &computed)| {
            let exact = mode as f64 + 0.5;
            EigenResult {
                mode,
                computed,
                exact,
                relative_error: (computed - exact).abs() / exact,
            }
        })
        .collect())
}
