//! Grid differentiation operators assembled from weight vectors, and explicit time stepping.

mod assemble;
mod grid;
mod time;

pub use assemble::{apply_stencil, build_matrix, BoundaryPolicy, DiffOperator};
pub use grid::{Grid, Topology};
pub use time::rk4_step;
