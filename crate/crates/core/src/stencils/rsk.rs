use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::stencils::{StencilSpec, WeightVector};

/// Below this `|πx/h|` the sinc factor and its derivatives use their Taylor series;
/// the closed forms lose about `ε/t³` to cancellation.
const SERIES_CUTOFF: f64 = 0.1;

/// Gaussian width ratio `r` of the regularized Shannon kernel, `σ = r h`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RskParams {
    r: f64,
}

impl RskParams {
    pub fn new(r: f64) -> Result<Self> {
        if !(r > 0.0) || r.is_nan() {
            return Err(Error::InvalidParameter(format!("RSK width ratio must be positive, got {r}")));
        }
        Ok(Self { r })
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn sigma(&self, h: f64) -> f64 {
        self.r * h
    }

    /// `a²` in the equivalent sum-acceleration weights `w_{Mk} = exp(-a² k²)`.
    pub fn a_squared(&self) -> f64 {
        0.5 / (self.r * self.r)
    }

    pub fn a(&self) -> f64 {
        self.a_squared().sqrt()
    }

    /// `1/√(M+1)`: the `a` whose Gaussian best resembles the Boyd-FD multipliers.
    pub fn a_fd(half_width: usize) -> f64 {
        1.0 / ((half_width + 1) as f64).sqrt()
    }
}

/// `S(t) = sin t / t` and its first two derivatives.
fn sinc_and_derivatives(t: f64, sin_t: f64, cos_t: f64) -> [f64; 3] {
    if t.abs() < SERIES_CUTOFF {
        let t2 = t * t;
        let (mut s0, mut s1, mut s2) = (1.0, 0.0, 0.0);
        // a_k = (-1)^k / (2k+1)!, S = Σ a_k t^{2k}
        let mut a = 1.0;
        let mut pow = 1.0; // t^{2k-2}
        for k in 1..9 {
            let two_k = 2.0 * k as f64;
            a /= -(two_k * (two_k + 1.0));
            s0 += a * pow * t2;
            s1 += a * two_k * pow * t;
            s2 += a * two_k * (two_k - 1.0) * pow;
            pow *= t2;
        }
        [s0, s1, s2]
    } else {
        let t2 = t * t;
        [
            sin_t / t,
            (t * cos_t - sin_t) / t2,
            -sin_t / t - 2.0 * cos_t / t2 + 2.0 * sin_t / (t2 * t),
        ]
    }
}

fn kernel_with_trig(x: f64, order: u8, h: f64, sigma: f64, sin_t: f64, cos_t: f64) -> f64 {
    let g = (-0.5 * x * x / (sigma * sigma)).exp();
    kernel_with_gaussian(x, order, h, sigma, sin_t, cos_t, g)
}

fn kernel_with_gaussian(
    x: f64,
    order: u8,
    h: f64,
    sigma: f64,
    sin_t: f64,
    cos_t: f64,
    g: f64,
) -> f64 {
    let c = PI / h;
    let t = c * x;
    let [s0, s1, s2] = sinc_and_derivatives(t, sin_t, cos_t);
    let inv_s2 = 1.0 / (sigma * sigma);
    match order {
        0 => s0 * g,
        1 => (c * s1 - s0 * x * inv_s2) * g,
        _ => {
            let g2 = x * x * inv_s2 * inv_s2 - inv_s2;
            (c * c * s2 - 2.0 * c * s1 * x * inv_s2 + s0 * g2) * g
        }
    }
}

/// Regularized Shannon kernel `sin(πx/h)/(πx/h) · exp(-x²/2σ²)` or its first or
/// second derivative at `x`. Finite at `x = 0` with the exact limits.
pub fn rsk_kernel_eval(x: f64, order: u8, h: f64, sigma: f64) -> f64 {
    assert!(order <= 2, "RSK kernel derivatives are provided up to order 2");
    let t = PI * x / h;
    let (sin_t, cos_t) = t.sin_cos();
    kernel_with_trig(x, order, h, sigma, sin_t, cos_t)
}

/// DSC-RSK weights `δ_j = δ^{(n)}(offset - j h)`, on or off the grid.
pub fn dsc_rsk_weights(spec: &StencilSpec, params: &RskParams) -> Result<WeightVector> {
    let h = spec.h();
    let sigma = params.sigma(h);
    let m = spec.half_width() as isize;
    let weights = (-m..=m)
        .map(|j| {
            let x = spec.offset() - j as f64 * h;
            if spec.is_on_grid() {
                // exact trigonometric values at the nodes; Gaussian from the integer offset
                let cos_t = if j % 2 == 0 { 1.0 } else { -1.0 };
                let g = (-params.a_squared() * (j * j) as f64).exp();
                kernel_with_gaussian(x, spec.order(), h, sigma, 0.0, cos_t, g)
            } else {
                rsk_kernel_eval(x, spec.order(), h, sigma)
            }
        })
        .collect();
    Ok(WeightVector::from_parts(*spec, weights))
}
