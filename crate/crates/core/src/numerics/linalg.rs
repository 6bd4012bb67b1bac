use nalgebra::{DMatrix, DVector, SymmetricEigen, SVD};

use crate::error::{Error, Result};
use crate::numerics::Scalar;

/// Minimum-norm least-squares solution of `g x = chi` by truncated SVD.
///
/// Singular values below `truncation * sigma_max` are treated as zero.
pub fn svd_lstsq(g: &DMatrix<f64>, chi: &[f64], truncation: f64) -> Result<Vec<f64>> {
    let n = g.nrows();
    if g.ncols() != n || chi.len() != n {
        return Err(Error::InvalidParameter(format!(
            "svd_lstsq needs a square system, got {}x{} with rhs {}",
            g.nrows(),
            g.ncols(),
            chi.len()
        )));
    }
    if !(truncation > 0.0 && truncation < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "truncation must lie in (0, 1), got {truncation}"
        )));
    }
    if g.iter().any(|v| !v.is_finite()) || chi.iter().any(|v| !v.is_finite()) {
        return Err(Error::InvalidParameter("non-finite entry in least-squares system".into()));
    }
    let svd = SVD::try_new(g.clone(), true, true, f64::EPSILON, 200 * n.max(10))
        .ok_or(Error::SvdNoConvergence)?;
    let u = svd.u.as_ref().expect("requested U");
    let vt = svd.v_t.as_ref().expect("requested V^T");
    let sigma_max = svd.singular_values.max();
    if sigma_max <= 0.0 {
        return Err(Error::AllSingular);
    }
    let cutoff = truncation * sigma_max;
    let rhs = DVector::from_column_slice(chi);
    let mut x = DVector::<f64>::zeros(n);
    let mut kept = 0;
    for (i, &s) in svd.singular_values.iter().enumerate() {
        if s > cutoff {
            kept += 1;
            let coef = u.column(i).dot(&rhs) / s;
            x.axpy(coef, &vt.row(i).transpose(), 1.0);
        }
    }
    if kept == 0 {
        return Err(Error::AllSingular);
    }
    Ok(x.as_slice().to_vec())
}

/// Dense LU solve of a real matrix against a real or complex right-hand side.
pub fn lu_solve<T: Scalar>(a: &DMatrix<f64>, b: &[T]) -> Result<Vec<T>> {
    let x = T::lu_solve_real(a, b).ok_or(Error::Singular)?;
    if x.iter().any(|v| !v.is_finite()) {
        return Err(Error::Singular);
    }
    Ok(x)
}

/// Full spectrum of a real symmetric matrix.
#[derive(Debug, Clone)]
pub struct SymEigen {
    /// Ascending eigenvalues.
    pub values: Vec<f64>,
    /// Eigenvectors as columns, in the order of `values`.
    pub vectors: DMatrix<f64>,
}

/// Householder tridiagonalization followed by implicit shifted QL/QR sweeps.
pub fn sym_eigen(a: &DMatrix<f64>) -> Result<SymEigen> {
    let n = a.nrows();
    if a.ncols() != n {
        return Err(Error::InvalidParameter("sym_eigen needs a square matrix".into()));
    }
    if a.iter().any(|v| !v.is_finite()) {
        return Err(Error::EigenNoConvergence);
    }
    let eig = SymmetricEigen::try_new(a.clone(), f64::EPSILON, 100 * n.max(10))
        .ok_or(Error::EigenNoConvergence)?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[i].total_cmp(&eig.eigenvalues[j]));
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let mut vectors = DMatrix::<f64>::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        vectors.set_column(dst, &eig.eigenvectors.column(src));
    }
    Ok(SymEigen { values, vectors })
}
