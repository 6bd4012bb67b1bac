use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::metrics::{h1_seminorm_error, linf_error};
use crate::numerics::{lu_solve, pbcg_solve, DenseOperator, PbcgOptions, Scalar};
use crate::operators::{build_matrix, BoundaryPolicy};
use crate::stencils::WeightVector;

use super::{exact, Physics, ProblemSpec, SolverKind};

#[derive(Debug, Clone)]
pub struct HelmholtzSolution {
    pub u: Vec<Complex64>,
    pub exact: Vec<Complex64>,
    /// `e₁` for the constant-source problem, max-norm otherwise.
    pub error: f64,
    pub iterations: Option<usize>,
}

fn linear_solve<T: Scalar>(a: &DMatrix<f64>, rhs: &[T], solver: SolverKind) -> Result<(Vec<T>, Option<usize>)> {
    match solver {
        SolverKind::Dense => Ok((lu_solve(a, rhs)?, None)),
        SolverKind::Pbcg => {
            let report = pbcg_solve(&DenseOperator(a), rhs, &PbcgOptions::default())?;
            Ok((report.solution, Some(report.iterations)))
        }
    }
}

/// Solves the Helmholtz problems with exact exterior values on both sides.
///
/// `d1` is required for the constant-source problem, whose error is measured in the
/// `H¹` seminorm through the same scheme's first-derivative operator.
pub fn solve_helmholtz(
    spec: &ProblemSpec,
    d2: &WeightVector,
    d1: Option<&WeightVector>,
) -> Result<HelmholtzSolution> {
    if d2.spec().order() != 2 {
        return Err(Error::InvalidParameter("Helmholtz needs an order-2 stencil".into()));
    }
    let grid = spec.grid()?;
    let n = grid.len();
    match spec.physics {
        Physics::HelmConst { k } => {
            let d1 = d1.ok_or_else(|| {
                Error::InvalidParameter("constant-source Helmholtz needs a first-derivative stencil".into())
            })?;
            let policy = BoundaryPolicy::exact(move |x| exact::helm_const_exact(k, x));
            // −(D₂u + b) − k²u = −1: the closed-form solution satisfies u'' + k²u = 1
            let (mut a, affine) = build_matrix(d2, &grid, &policy)?.into_parts();
            a.neg_mut();
            for i in 0..n {
                a[(i, i)] -= k * k;
            }
            let rhs: Vec<Complex64> = affine.iter().map(|&b| b - 1.0).collect();
            let (u, iterations) = linear_solve(&a, &rhs, spec.solver)?;
            let exact = grid.sample(|x| exact::helm_const_exact(k, x));
            let d1_op = build_matrix(d1, &grid, &policy)?;
            let error = if u.iter().all(|v| v.is_finite()) {
                h1_seminorm_error(&u, &exact, &d1_op)?
            } else {
                f64::NAN
            };
            Ok(HelmholtzSolution { u, exact, error, iterations })
        }
        Physics::HelmMulti { k } => {
            let policy = BoundaryPolicy::exact(move |x| exact::helm_multi_exact(k, x));
            let (mut a, affine) = build_matrix(d2, &grid, &policy)?.into_parts();
            let k2 = (k * k) as f64;
            for i in 0..n {
                a[(i, i)] += k2;
            }
            let rhs: Vec<f64> = grid
                .nodes()
                .iter()
                .zip(&affine)
                .map(|(&x, &b)| exact::helm_multi_rhs(k, x) - b)
                .collect();
            let (u, iterations) = linear_solve(&a, &rhs, spec.solver)?;
            let exact = grid.sample(|x| exact::helm_multi_exact(k, x));
            let error = linf_error(&u, &exact);
            Ok(HelmholtzSolution {
                u: u.into_iter().map(|v| Complex64::new(v, 0.0)).collect(),
                exact: exact.into_iter().map(|v| Complex64::new(v, 0.0)).collect(),
                error,
                iterations,
            })
        }
        _ => Err(Error::InvalidParameter(format!(
            "{} is not a Helmholtz problem",
            spec.experiment
        ))),
    }
}
