use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::stencils::{StencilSpec, WeightVector};

/// Truncated sinc pseudospectral weights: derivatives of `sin(πx/h)/(πx/h)` at the nodes.
///
/// The second-derivative off-centre weights are `-2(-1)^j/(h²j²)`.
pub fn sinc_weights(spec: &StencilSpec) -> Result<WeightVector> {
    if !spec.is_on_grid() {
        return Err(Error::Unsupported {
            scheme: "sinc",
            what: "off-grid evaluation".into(),
        });
    }
    let h = spec.h();
    let m = spec.half_width();
    let mut half = vec![0.0; m + 1];
    match spec.order() {
        1 => {
            for (j, d) in half.iter_mut().enumerate().skip(1) {
                let sgn = if j % 2 == 1 { 1.0 } else { -1.0 };
                *d = sgn / (h * j as f64);
            }
        }
        2 => {
            half[0] = -PI * PI / (3.0 * h * h);
            for (j, d) in half.iter_mut().enumerate().skip(1) {
                let sgn = if j % 2 == 1 { 1.0 } else { -1.0 };
                *d = 2.0 * sgn / (h * h * (j * j) as f64);
            }
        }
        _ => {
            return Err(Error::Unsupported {
                scheme: "sinc",
                what: "derivative order 0".into(),
            })
        }
    }
    Ok(WeightVector::from_half(*spec, &half))
}
