use crate::error::{Error, Result};
use crate::metrics::linf_error;
use crate::numerics::{lu_solve, pbcg_solve, DenseOperator, PbcgOptions};
use crate::operators::{build_matrix, BoundaryPolicy};
use crate::stencils::WeightVector;

use super::{Physics, ProblemSpec, SolverKind};

#[derive(Debug, Clone)]
pub struct BvpSolution {
    pub u: Vec<f64>,
    pub exact: Vec<f64>,
    pub error: f64,
    pub iterations: Option<usize>,
}

/// Solves `(D₂ − I) u = f − b` where `b` carries the exact exterior values.
pub fn solve_bvp(spec: &ProblemSpec, d2: &WeightVector) -> Result<BvpSolution> {
    if !matches!(
        spec.physics,
        Physics::BoydBvp { .. } | Physics::ConfinedBvp { .. } | Physics::WideBvp { .. }
    ) {
        return Err(Error::InvalidParameter(format!("{} is not a BVP", spec.experiment)));
    }
    if d2.spec().order() != 2 {
        return Err(Error::InvalidParameter("BVP needs an order-2 stencil".into()));
    }
    let (u, f) = (spec.exact().expect("BVP exact"), spec.rhs().expect("BVP rhs"));
    let grid = spec.grid()?;
    let exterior = u.clone();
    let policy = BoundaryPolicy::exact(move |x| exterior(x).re);
    let (mut a, affine) = build_matrix(d2, &grid, &policy)?.into_parts();
    for i in 0..grid.len() {
        a[(i, i)] -= 1.0;
    }
    let rhs: Vec<f64> = grid
        .nodes()
        .iter()
        .zip(&affine)
        .map(|(&x, &b)| f(x).re - b)
        .collect();
    let (sol, iterations) = match spec.solver {
        SolverKind::Dense => (lu_solve(&a, &rhs)?, None),
        SolverKind::Pbcg => {
            let report = pbcg_solve(&DenseOperator(&a), &rhs, &PbcgOptions::default())?;
            (report.solution, Some(report.iterations))
        }
    };
    let exact = grid.sample(|x| u(x).re);
    let error = linf_error(&sol, &exact);
    Ok(BvpSolution { u: sol, exact, error, iterations })
}
