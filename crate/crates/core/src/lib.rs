//! High-order differentiation stencils and the benchmark problems used to compare them.
//!
//! Seven stencil families are provided through [`stencils::Scheme`]: standard finite
//! differences, truncated sinc, Boyd's sum-accelerated finite differences, Euler and
//! modified-Euler accelerated sinc, sech-weighted least-squares differences, and the
//! regularized Shannon kernel of the discrete singular convolution (DSC-RSK).
//!
//! The [`problems`] module carries the differentiation, boundary-value, Helmholtz,
//! transport, Navier–Stokes and eigenvalue experiments, and [`harness`] runs parameter
//! sweeps over them and writes CSV/SVG artifacts.

pub mod error;
pub mod harness;
pub mod metrics;
pub mod numerics;
pub mod operators;
pub mod problems;
pub mod stencils;

pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use numerics::Scalar;
pub use operators::{BoundaryPolicy, DiffOperator, Grid, Topology};
pub use problems::{Experiment, ProblemSpec};
pub use stencils::{Scheme, StencilSpec, WeightVector};
