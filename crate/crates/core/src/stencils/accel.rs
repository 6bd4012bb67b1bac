//! Sum-acceleration multipliers `w_{Mj}` applied to truncated sinc weights.
//!
//! `δ_j = w_{M|j|} d_j^{sinc}`, so a family is fully described by `w_{M0..MM}` plus,
//! for modified Euler, a replacement centre used only by second derivatives.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::numerics::special::{central_ratio, ln_binomial, saturating_factorial};
use crate::stencils::{sinc_weights, StencilSpec, WeightVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AccelerationFamily {
    BoydFd,
    Euler,
    MEuler,
}

/// Constant in the Boyd-FD centre weight `w_{M0} = c Σ_{k=1..M} 1/k²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BoydCenter {
    /// `c = 6/π²`: `w_{M0} → 1` and the second-derivative stencil equals standard FD.
    #[default]
    Consistent,
    /// `c = 6/π`, the constant as commonly printed. Kept for reproduction only.
    AsPrinted,
}

/// How factorial ratios are evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FactorialMode {
    /// Telescoped logarithms; finite and accurate for any half-width.
    #[default]
    LogSpace,
    /// Direct products of double-precision factorials clamped at `f64::MAX`.
    ///
    /// Emulates a gamma routine that saturates past `170!`. Boyd-FD weights become
    /// `inf/inf` from `M ≈ 86` on and Euler weights underflow to zero from `M = 171`.
    SaturatingGamma,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AccelerationWeights {
    family: AccelerationFamily,
    w: Vec<f64>,
    mu: Option<Vec<f64>>,
    center_second: Option<f64>,
}

impl AccelerationWeights {
    pub fn family(&self) -> AccelerationFamily {
        self.family
    }

    pub fn half_width(&self) -> usize {
        self.w.len() - 1
    }

    /// `w_{Mj}` for `j = 0..=M`.
    pub fn w(&self) -> &[f64] {
        &self.w
    }

    /// Binomial terms `μ_{Mk}`, `k = 0..=M` (Euler families only).
    pub fn mu(&self) -> Option<&[f64]> {
        self.mu.as_deref()
    }

    /// Modified centre multiplier `w_{M0}^{mod}` (modified Euler only).
    pub fn modified_center(&self) -> Option<f64> {
        self.center_second
    }

    /// Multiplier applied to the sinc centre weight of an order-`n` stencil.
    pub fn center_for_order(&self, order: u8) -> f64 {
        match (order, self.center_second) {
            (2, Some(c)) => c,
            _ => self.w[0],
        }
    }
}

fn check_m(m: usize) -> Result<()> {
    if m == 0 {
        return Err(Error::InvalidParameter("half-width M must be at least 1".into()));
    }
    Ok(())
}

pub fn boyd_fd_acceleration(m: usize) -> Result<AccelerationWeights> {
    boyd_fd_acceleration_with(m, BoydCenter::Consistent, FactorialMode::LogSpace)
}

/// `w_{Mj} = (M!)² / ((M-j)! (M+j)!)` for `j >= 1`, `w_{M0} = c Σ_{k<=M} 1/k²`.
pub fn boyd_fd_acceleration_with(
    m: usize,
    center: BoydCenter,
    mode: FactorialMode,
) -> Result<AccelerationWeights> {
    check_m(m)?;
    let c = match center {
        BoydCenter::Consistent => 6.0 / (PI * PI),
        BoydCenter::AsPrinted => 6.0 / PI,
    };
    let mut w = Vec::with_capacity(m + 1);
    w.push(c * (1..=m).map(|k| 1.0 / (k * k) as f64).sum::<f64>());
    match mode {
        FactorialMode::LogSpace => {
            w.extend((1..=m).map(|j| central_ratio(m, j)));
        }
        FactorialMode::SaturatingGamma => {
            let fm = saturating_factorial(m);
            let num = fm * fm;
            w.extend((1..=m).map(|j| {
                num / (saturating_factorial(m - j) * saturating_factorial(m + j))
            }));
        }
    }
    Ok(AccelerationWeights {
        family: AccelerationFamily::BoydFd,
        w,
        mu: None,
        center_second: None,
    })
}

pub fn euler_acceleration(m: usize) -> Result<AccelerationWeights> {
    euler_acceleration_with(m, FactorialMode::LogSpace)
}

/// `μ_{Mk} = C(M,k)/2^M`, `w_{Mj} = Σ_{k>=j} μ_{Mk}`.
pub fn euler_acceleration_with(m: usize, mode: FactorialMode) -> Result<AccelerationWeights> {
    check_m(m)?;
    let ln2m = m as f64 * std::f64::consts::LN_2;
    let mu: Vec<f64> = match mode {
        FactorialMode::LogSpace => (0..=m).map(|k| (ln_binomial(m, k) - ln2m).exp()).collect(),
        FactorialMode::SaturatingGamma => {
            let fm = saturating_factorial(m);
            let two_m = 2f64.powi(m as i32);
            (0..=m)
                .map(|k| fm / (saturating_factorial(k) * saturating_factorial(m - k)) / two_m)
                .collect()
        }
    };
    let mut w = vec![0.0; m + 1];
    match mode {
        FactorialMode::LogSpace => {
            // each half from the side where the partial sum is small
            let split = m / 2;
            let mut head = 0.0;
            for j in 0..=split {
                w[j] = 1.0 - head;
                head += mu[j];
            }
            let mut tail = 0.0;
            for j in ((split + 1)..=m).rev() {
                tail += mu[j];
                w[j] = tail;
            }
            for j in 1..=m {
                w[j] = w[j].min(w[j - 1]);
            }
        }
        FactorialMode::SaturatingGamma => {
            let mut tail = 0.0;
            for j in (0..=m).rev() {
                tail += mu[j];
                w[j] = tail;
            }
        }
    }
    Ok(AccelerationWeights {
        family: AccelerationFamily::Euler,
        w,
        mu: Some(mu),
        center_second: None,
    })
}

pub fn meuler_acceleration(m: usize) -> Result<AccelerationWeights> {
    meuler_acceleration_with(m, FactorialMode::LogSpace)
}

/// Euler weights with the second-derivative centre replaced by
/// `w_{M0}^{mod} = (12/π²) Σ_{j=1..M} (-1)^{j+1} w_{Mj}/j²`, which makes the stencil
/// annihilate constants.
pub fn meuler_acceleration_with(m: usize, mode: FactorialMode) -> Result<AccelerationWeights> {
    let mut acc = euler_acceleration_with(m, mode)?;
    let series: f64 = (1..=m)
        .map(|j| {
            let sgn = if j % 2 == 1 { 1.0 } else { -1.0 };
            sgn * acc.w[j] / (j * j) as f64
        })
        .sum();
    acc.family = AccelerationFamily::MEuler;
    acc.center_second = Some(12.0 / (PI * PI) * series);
    Ok(acc)
}

/// Applies the multipliers to sinc weights of the same half-width.
pub fn accelerate(accel: &AccelerationWeights, spec: &StencilSpec) -> Result<WeightVector> {
    if accel.half_width() != spec.half_width() {
        return Err(Error::InvalidStencil(format!(
            "acceleration weights have M = {}, stencil has M = {}",
            accel.half_width(),
            spec.half_width()
        )));
    }
    let sinc = sinc_weights(spec)?;
    let m = spec.half_width() as isize;
    let weights = sinc
        .iter()
        .map(|(j, d)| {
            let mult = if j == 0 {
                accel.center_for_order(spec.order())
            } else {
                accel.w[j.unsigned_abs()]
            };
            if d == 0.0 {
                0.0
            } else {
                mult * d
            }
        })
        .collect::<Vec<_>>();
    debug_assert_eq!(weights.len() as isize, 2 * m + 1);
    Ok(WeightVector::from_parts(*spec, weights))
}
