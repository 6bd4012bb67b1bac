use std::fmt;
use std::io::Write;
use std::sync::Arc;

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::numerics::{DenseOperator, LinearOperator, Scalar};
use crate::operators::Grid;
use crate::stencils::WeightVector;

/// Source of field values at nodes outside `0..N`.
pub enum BoundaryPolicy<T: Scalar = f64> {
    /// Values of a known function at `x = a + i h`; must cover `[a - M h, b + M h]`.
    ExactExterior(Arc<dyn Fn(f64) -> T + Send + Sync>),
    /// Indices wrap modulo `N`. Requires a periodic grid.
    Periodic,
    /// Exterior values are zero.
    ZeroExterior,
}

impl<T: Scalar> BoundaryPolicy<T> {
    pub fn exact<F: Fn(f64) -> T + Send + Sync + 'static>(f: F) -> Self {
        BoundaryPolicy::ExactExterior(Arc::new(f))
    }

    fn validate(&self, grid: &Grid) -> Result<()> {
        match (self, grid.is_periodic()) {
            (BoundaryPolicy::Periodic, true) => Ok(()),
            (BoundaryPolicy::Periodic, false) => Err(Error::InvalidParameter(
                "periodic wrap requested on a bounded grid".into(),
            )),
            (_, true) => Err(Error::InvalidParameter(
                "periodic grids take the periodic boundary policy".into(),
            )),
            (_, false) => Ok(()),
        }
    }
}

impl<T: Scalar> Clone for BoundaryPolicy<T> {
    fn clone(&self) -> Self {
        match self {
            BoundaryPolicy::ExactExterior(f) => BoundaryPolicy::ExactExterior(Arc::clone(f)),
            BoundaryPolicy::Periodic => BoundaryPolicy::Periodic,
            BoundaryPolicy::ZeroExterior => BoundaryPolicy::ZeroExterior,
        }
    }
}

impl<T: Scalar> fmt::Debug for BoundaryPolicy<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundaryPolicy::ExactExterior(_) => f.write_str("ExactExterior(..)"),
            BoundaryPolicy::Periodic => f.write_str("Periodic"),
            BoundaryPolicy::ZeroExterior => f.write_str("ZeroExterior"),
        }
    }
}

/// `out_i = Σ_j δ_j u(x_i + j h)` with exterior values from `policy`.
pub fn apply_stencil<T: Scalar>(
    weights: &WeightVector,
    grid: &Grid,
    policy: &BoundaryPolicy<T>,
    field: &[T],
) -> Result<Vec<T>> {
    policy.validate(grid)?;
    let n = grid.len() as isize;
    if field.len() != grid.len() {
        return Err(Error::InvalidParameter(format!(
            "field has {} values, grid has {n} nodes",
            field.len()
        )));
    }
    let value = |k: isize| -> T {
        if (0..n).contains(&k) {
            return field[k as usize];
        }
        match policy {
            BoundaryPolicy::Periodic => field[k.rem_euclid(n) as usize],
            BoundaryPolicy::ExactExterior(f) => f(grid.x(k)),
            BoundaryPolicy::ZeroExterior => T::zero(),
        }
    };
    Ok((0..n)
        .map(|i| weights.iter().map(|(j, d)| value(i + j) * d).sum())
        .collect())
}

/// Assembles the `N x N` matrix of the stencil and the affine vector of known exterior terms.
pub fn build_matrix<T: Scalar>(
    weights: &WeightVector,
    grid: &Grid,
    policy: &BoundaryPolicy<T>,
) -> Result<DiffOperator<T>> {
    policy.validate(grid)?;
    let n = grid.len();
    let ni = n as isize;
    let mut matrix = DMatrix::<f64>::zeros(n, n);
    let mut affine = vec![T::zero(); n];
    for i in 0..ni {
        for (j, d) in weights.iter() {
            let k = i + j;
            if (0..ni).contains(&k) {
                matrix[(i as usize, k as usize)] += d;
                continue;
            }
            match policy {
                // wide stencils on short periodic grids fold onto the same column
                BoundaryPolicy::Periodic => matrix[(i as usize, k.rem_euclid(ni) as usize)] += d,
                BoundaryPolicy::ExactExterior(f) => affine[i as usize] += f(grid.x(k)) * d,
                BoundaryPolicy::ZeroExterior => {}
            }
        }
    }
    Ok(DiffOperator {
        matrix,
        affine,
        grid: *grid,
        weights: weights.clone(),
    })
}

/// Linear part and affine boundary contribution of a discretized derivative.
#[derive(Debug, Clone)]
pub struct DiffOperator<T: Scalar = f64> {
    matrix: DMatrix<f64>,
    affine: Vec<T>,
    grid: Grid,
    weights: WeightVector,
}

impl<T: Scalar> DiffOperator<T> {
    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    pub fn affine(&self) -> &[T] {
        &self.affine
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    pub fn into_parts(self) -> (DMatrix<f64>, Vec<T>) {
        (self.matrix, self.affine)
    }

    /// `A u + affine`, the full stencil action.
    pub fn apply_full(&self, field: &[T]) -> Vec<T> {
        let mut out = vec![T::zero(); field.len()];
        self.apply(field, &mut out);
        for (o, &b) in out.iter_mut().zip(&self.affine) {
            *o += b;
        }
        out
    }

    pub fn write_matrix_csv<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        for row in self.matrix.row_iter() {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(out, "{}", cells.join(","))?;
        }
        Ok(())
    }
}

impl<T: Scalar> LinearOperator<T> for DiffOperator<T> {
    fn dim(&self) -> usize {
        self.matrix.nrows()
    }
    fn apply(&self, x: &[T], y: &mut [T]) {
        DenseOperator(&self.matrix).apply(x, y)
    }
    fn apply_adjoint(&self, x: &[T], y: &mut [T]) {
        DenseOperator(&self.matrix).apply_adjoint(x, y)
    }
    fn diagonal(&self) -> Vec<T> {
        DenseOperator(&self.matrix).diagonal()
    }
}
