use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use nalgebra::DMatrix;
use num_complex::Complex64;

/// Field value type: real for most problems, complex for plane waves and Helmholtz.
///
/// All stencil matrices are real, so anything acting on a field only needs
/// multiplication by `f64`.
pub trait Scalar:
    Copy
    + Send
    + Sync
    + Debug
    + Display
    + PartialEq
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Mul<f64, Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + Sum
    + 'static
{
    fn zero() -> Self;
    fn from_real(x: f64) -> Self;
    fn conj(self) -> Self;
    fn modulus(self) -> f64;
    fn is_finite(self) -> bool;

    /// Solves `a x = b` for a real matrix by LU with partial pivoting.
    fn lu_solve_real(a: &DMatrix<f64>, b: &[Self]) -> Option<Vec<Self>>;
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn from_real(x: f64) -> Self {
        x
    }
    fn conj(self) -> Self {
        self
    }
    fn modulus(self) -> f64 {
        self.abs()
    }
    fn is_finite(self) -> bool {
        f64::is_finite(self)
    }
    fn lu_solve_real(a: &DMatrix<f64>, b: &[Self]) -> Option<Vec<Self>> {
        let lu = a.clone().lu();
        let rhs = nalgebra::DVector::from_column_slice(b);
        lu.solve(&rhs).map(|x| x.as_slice().to_vec())
    }
}

impl Scalar for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn from_real(x: f64) -> Self {
        Complex64::new(x, 0.0)
    }
    fn conj(self) -> Self {
        Complex64::conj(&self)
    }
    fn modulus(self) -> f64 {
        self.norm()
    }
    fn is_finite(self) -> bool {
        Complex64::is_finite(self)
    }
    fn lu_solve_real(a: &DMatrix<f64>, b: &[Self]) -> Option<Vec<Self>> {
        // One real factorization, two right-hand sides.
        let n = b.len();
        let lu = a.clone().lu();
        let mut rhs = DMatrix::<f64>::zeros(n, 2);
        for (i, z) in b.iter().enumerate() {
            rhs[(i, 0)] = z.re;
            rhs[(i, 1)] = z.im;
        }
        let x = lu.solve(&rhs)?;
        Some((0..n).map(|i| Complex64::new(x[(i, 0)], x[(i, 1)])).collect())
    }
}
