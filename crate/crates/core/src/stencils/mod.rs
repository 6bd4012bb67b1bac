//! Differentiation weight vectors for the seven stencil families.
//!
//! Every stencil approximates `d^n u/dx^n` at `x0 + offset` as
//! `Σ_{j=-M..M} δ_j u(x0 + j h)`. Weights carry their `h^{-n}` scaling, so
//! operators never rescale them.

mod accel;
mod fd;
mod rsk;
mod scheme;
mod sech;
mod sinc;

use std::io::Write;

use num_complex::Complex64;

use crate::error::{Error, Result};

pub use accel::{
    accelerate, boyd_fd_acceleration, boyd_fd_acceleration_with, euler_acceleration,
    euler_acceleration_with, meuler_acceleration, meuler_acceleration_with, AccelerationFamily,
    AccelerationWeights, BoydCenter, FactorialMode,
};
pub use fd::fd_weights;
pub use rsk::{dsc_rsk_weights, rsk_kernel_eval, RskParams};
pub use scheme::{Method, Scheme};
pub use sech::{sech_gram_system, sech_weights, GramSystem, Parity, SechParams};
pub use sinc::sinc_weights;

/// Derivative order, half-width, spacing and evaluation offset of a stencil.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StencilSpec {
    order: u8,
    half_width: usize,
    h: f64,
    offset: f64,
}

impl StencilSpec {
    /// On-grid stencil.
    pub fn new(order: u8, half_width: usize, h: f64) -> Result<Self> {
        if order > 2 {
            return Err(Error::InvalidStencil(format!(
                "derivative order {order} not supported (0, 1 or 2)"
            )));
        }
        if half_width < 1 {
            return Err(Error::InvalidStencil("half-width M must be at least 1".into()));
        }
        if !(h > 0.0 && h.is_finite()) {
            return Err(Error::InvalidStencil(format!("spacing must be positive, got {h}")));
        }
        Ok(Self {
            order,
            half_width,
            h,
            offset: 0.0,
        })
    }

    /// Moves the differentiation point to `offset` in `[0, h)` past the centre node.
    pub fn with_offset(mut self, offset: f64) -> Result<Self> {
        if !(offset >= 0.0 && offset < self.h) {
            return Err(Error::InvalidStencil(format!(
                "offset must lie in [0, h) = [0, {}), got {offset}",
                self.h
            )));
        }
        self.offset = offset;
        Ok(self)
    }

    pub fn order(&self) -> u8 {
        self.order
    }

    pub fn half_width(&self) -> usize {
        self.half_width
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn offset(&self) -> f64 {
        self.offset
    }

    pub fn is_on_grid(&self) -> bool {
        self.offset == 0.0
    }

    pub fn width(&self) -> usize {
        2 * self.half_width + 1
    }
}

/// The `2M+1` weights of a stencil, stored for `j = -M..=M`.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector {
    spec: StencilSpec,
    weights: Vec<f64>,
}

impl WeightVector {
    pub(crate) fn from_parts(spec: StencilSpec, weights: Vec<f64>) -> Self {
        debug_assert_eq!(weights.len(), spec.width());
        Self { spec, weights }
    }

    /// Builds an on-grid vector from the non-negative half `δ_0..δ_M`, extended by
    /// the parity of the derivative order.
    pub(crate) fn from_half(spec: StencilSpec, half: &[f64]) -> Self {
        let m = spec.half_width();
        debug_assert_eq!(half.len(), m + 1);
        let odd = spec.order() % 2 == 1;
        let mut weights = vec![0.0; 2 * m + 1];
        weights[m] = if odd { 0.0 } else { half[0] };
        for j in 1..=m {
            weights[m + j] = half[j];
            weights[m - j] = if odd { -half[j] } else { half[j] };
        }
        Self { spec, weights }
    }

    pub fn spec(&self) -> &StencilSpec {
        &self.spec
    }

    pub fn half_width(&self) -> usize {
        self.spec.half_width
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Weight `δ_j`, `-M <= j <= M`.
    pub fn get(&self, j: isize) -> f64 {
        let m = self.spec.half_width as isize;
        assert!(j.abs() <= m, "index {j} outside stencil of half-width {m}");
        self.weights[(j + m) as usize]
    }

    /// Weights ordered `j = -M..=M`.
    pub fn as_slice(&self) -> &[f64] {
        &self.weights
    }

    pub fn iter(&self) -> impl Iterator<Item = (isize, f64)> + '_ {
        let m = self.spec.half_width as isize;
        self.weights.iter().enumerate().map(move |(i, &w)| (i as isize - m, w))
    }

    pub fn is_finite(&self) -> bool {
        self.weights.iter().all(|w| w.is_finite())
    }

    /// `Σ_j δ_j e^{i j K}`: the factor the stencil applies to `e^{ikx}` with `K = k h`.
    pub fn symbol(&self, scaled_k: f64) -> Complex64 {
        self.iter()
            .map(|(j, w)| Complex64::from_polar(w, j as f64 * scaled_k))
            .sum()
    }

    pub fn write_csv<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "j,weight")?;
        for (j, w) in self.iter() {
            writeln!(out, "{j},{w}")?;
        }
        Ok(())
    }
}
