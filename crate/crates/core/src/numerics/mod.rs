//! Numerical kernels shared by the stencil generators and the experiment solvers.

mod krylov;
mod linalg;
mod quadrature;
mod scalar;
pub mod special;
mod spectrum;

pub use krylov::{pbcg_solve, DenseOperator, LinearOperator, PbcgOptions, PbcgReport};
pub use linalg::{lu_solve, svd_lstsq, sym_eigen, SymEigen};
pub use quadrature::{gauss_legendre, QuadratureRule};
pub use scalar::Scalar;
pub use spectrum::{dft, dft_spectrum, idft, SpectrumReport};
