use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::numerics::Scalar;

/// Action of a square linear map on real or complex vectors.
pub trait LinearOperator<T: Scalar> {
    fn dim(&self) -> usize;
    /// `y = A x`
    fn apply(&self, x: &[T], y: &mut [T]);
    /// `y = A^H x`
    fn apply_adjoint(&self, x: &[T], y: &mut [T]);
    /// Main diagonal, used by the Jacobi preconditioner.
    fn diagonal(&self) -> Vec<T>;
}

/// Real dense matrix viewed as an operator on any [`Scalar`] field.
#[derive(Debug, Clone)]
pub struct DenseOperator<'a>(pub &'a DMatrix<f64>);

fn real_matvec<T: Scalar>(a: &DMatrix<f64>, transpose: bool, x: &[T], y: &mut [T]) {
    let n = a.nrows();
    if transpose {
        for (j, yj) in y.iter_mut().enumerate() {
            let col = a.column(j);
            *yj = col.iter().zip(x).map(|(&aij, &xi)| xi * aij).sum();
        }
    } else {
        y.iter_mut().for_each(|v| *v = T::zero());
        // column-major storage: accumulate column by column
        for (j, &xj) in x.iter().enumerate() {
            let col = a.column(j);
            for i in 0..n {
                let aij = col[i];
                if aij != 0.0 {
                    y[i] += xj * aij;
                }
            }
        }
    }
}

impl<T: Scalar> LinearOperator<T> for DenseOperator<'_> {
    fn dim(&self) -> usize {
        self.0.nrows()
    }
    fn apply(&self, x: &[T], y: &mut [T]) {
        real_matvec(self.0, false, x, y);
    }
    fn apply_adjoint(&self, x: &[T], y: &mut [T]) {
        real_matvec(self.0, true, x, y);
    }
    fn diagonal(&self) -> Vec<T> {
        (0..self.0.nrows()).map(|i| T::from_real(self.0[(i, i)])).collect()
    }
}

#[derive(Debug, Clone, Copy)]
pub struct PbcgOptions {
    /// Target relative residual `||b - A x|| / ||b||`.
    pub tol: f64,
    /// Iteration cap; `None` means `10 * dim`.
    pub max_iter: Option<usize>,
    /// Jacobi (diagonal) preconditioning.
    pub jacobi: bool,
}

impl Default for PbcgOptions {
    fn default() -> Self {
        Self {
            tol: 1e-12,
            max_iter: None,
            jacobi: true,
        }
    }
}

#[derive(Debug, Clone)]
pub struct PbcgReport<T> {
    pub solution: Vec<T>,
    pub iterations: usize,
    /// True relative residual of the returned solution.
    pub residual: f64,
}

fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).map(|(&x, &y)| x.conj() * y).sum()
}

fn norm<T: Scalar>(a: &[T]) -> f64 {
    a.iter().map(|v| v.modulus().powi(2)).sum::<f64>().sqrt()
}

fn true_residual<T: Scalar, A: LinearOperator<T> + ?Sized>(a: &A, x: &[T], b: &[T], bnorm: f64) -> f64 {
    let mut ax = vec![T::zero(); b.len()];
    a.apply(x, &mut ax);
    let r: Vec<T> = b.iter().zip(&ax).map(|(&bi, &ai)| bi - ai).collect();
    norm(&r) / bnorm
}

/// Preconditioned biconjugate gradient.
///
/// Returns only solutions whose recomputed residual meets `opts.tol`; anything else is
/// reported as [`Error::NoConvergence`] or [`Error::Breakdown`].
pub fn pbcg_solve<T: Scalar, A: LinearOperator<T> + ?Sized>(
    a: &A,
    b: &[T],
    opts: &PbcgOptions,
) -> Result<PbcgReport<T>> {
    let n = a.dim();
    assert_eq!(b.len(), n, "right-hand side length must match operator dimension");
    let max_iter = opts.max_iter.unwrap_or(10 * n.max(1));
    let bnorm = norm(b);
    if bnorm == 0.0 {
        return Ok(PbcgReport {
            solution: vec![T::zero(); n],
            iterations: 0,
            residual: 0.0,
        });
    }
    if !bnorm.is_finite() {
        return Err(Error::NoConvergence {
            iterations: 0,
            residual: f64::NAN,
        });
    }

    let inv_diag: Vec<T> = if opts.jacobi {
        a.diagonal()
            .into_iter()
            .map(|d| {
                if d.modulus() > 0.0 && d.is_finite() {
                    T::from_real(1.0) / d
                } else {
                    T::from_real(1.0)
                }
            })
            .collect()
    } else {
        vec![T::from_real(1.0); n]
    };
    let precond = |r: &[T], out: &mut [T]| {
        for ((o, &ri), &di) in out.iter_mut().zip(r).zip(&inv_diag) {
            *o = ri * di;
        }
    };
    let precond_adj = |r: &[T], out: &mut [T]| {
        for ((o, &ri), &di) in out.iter_mut().zip(r).zip(&inv_diag) {
            *o = ri * di.conj();
        }
    };

    let mut x = vec![T::zero(); n];
    let mut r = b.to_vec();
    let mut rt = r.clone();
    let mut z = vec![T::zero(); n];
    let mut zt = vec![T::zero(); n];
    precond(&r, &mut z);
    precond_adj(&rt, &mut zt);
    let mut p = z.clone();
    let mut pt = zt.clone();
    let mut q = vec![T::zero(); n];
    let mut qt = vec![T::zero(); n];
    let mut rho = dot(&rt, &z);

    let tiny = f64::MIN_POSITIVE.sqrt();
    let mut last_resid = 1.0;
    for iter in 1..=max_iter {
        if rho.modulus() <= tiny || !rho.is_finite() {
            return Err(Error::Breakdown { iteration: iter });
        }
        a.apply(&p, &mut q);
        a.apply_adjoint(&pt, &mut qt);
        let denom = dot(&pt, &q);
        if denom.modulus() <= tiny || !denom.is_finite() {
            return Err(Error::Breakdown { iteration: iter });
        }
        let alpha = rho / denom;
        let alpha_c = alpha.conj();
        for i in 0..n {
            x[i] += alpha * p[i];
            r[i] -= alpha * q[i];
            rt[i] -= alpha_c * qt[i];
        }
        last_resid = norm(&r) / bnorm;
        if last_resid <= opts.tol {
            let actual = true_residual(a, &x, b, bnorm);
            if actual <= opts.tol {
                return Ok(PbcgReport {
                    solution: x,
                    iterations: iter,
                    residual: actual,
                });
            }
            // recursive residual drifted: restart from the true residual
            let mut ax = vec![T::zero(); n];
            a.apply(&x, &mut ax);
            for i in 0..n {
                r[i] = b[i] - ax[i];
            }
            rt.copy_from_slice(&r);
            precond(&r, &mut z);
            precond_adj(&rt, &mut zt);
            p.copy_from_slice(&z);
            pt.copy_from_slice(&zt);
            rho = dot(&rt, &z);
            continue;
        }
        precond(&r, &mut z);
        precond_adj(&rt, &mut zt);
        let rho_next = dot(&rt, &z);
        let beta = rho_next / rho;
        let beta_c = beta.conj();
        for i in 0..n {
            p[i] = z[i] + beta * p[i];
            pt[i] = zt[i] + beta_c * pt[i];
        }
        rho = rho_next;
    }
    let actual = true_residual(a, &x, b, bnorm);
    Err(Error::NoConvergence {
        iterations: max_iter,
        residual: if actual.is_finite() { actual } else { last_resid },
    })
}
