use std::f64::consts::PI;
use std::io::Write;

use num_complex::Complex64;

/// Frequency response of a sampled field on the scaled wavenumber axis `K = k h`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumReport {
    /// Scaled wavenumbers in `[-π, π)`, ascending.
    pub k: Vec<f64>,
    /// `|X_m| / N`.
    pub magnitude: Vec<f64>,
    /// Grid spacing the samples were taken at.
    pub h: f64,
}

impl SpectrumReport {
    pub fn write_csv<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "K,magnitude")?;
        for (k, m) in self.k.iter().zip(&self.magnitude) {
            writeln!(out, "{k},{m}")?;
        }
        Ok(())
    }

    /// Physical wavenumber for each entry, `K / h`.
    pub fn wavenumbers(&self) -> Vec<f64> {
        self.k.iter().map(|k| k / self.h).collect()
    }
}

fn transform(samples: &[Complex64], sign: f64) -> Vec<Complex64> {
    let n = samples.len();
    // twiddles indexed by (m * j) mod n keep the phase exact for large products
    let twiddle: Vec<Complex64> = (0..n)
        .map(|t| Complex64::from_polar(1.0, sign * 2.0 * PI * t as f64 / n as f64))
        .collect();
    (0..n)
        .map(|m| {
            samples
                .iter()
                .enumerate()
                .map(|(j, &x)| x * twiddle[(m * j) % n])
                .sum()
        })
        .collect()
}

/// Unnormalized forward DFT, `X_m = Σ_j x_j e^{-2πi mj/N}`.
pub fn dft(samples: &[Complex64]) -> Vec<Complex64> {
    transform(samples, -1.0)
}

/// Inverse DFT including the `1/N` factor.
pub fn idft(coeffs: &[Complex64]) -> Vec<Complex64> {
    let n = coeffs.len() as f64;
    transform(coeffs, 1.0).into_iter().map(|z| z / n).collect()
}

/// Direct `O(N²)` DFT magnitudes on the scaled-wavenumber axis.
///
/// # Panics
/// If fewer than two samples are given.
pub fn dft_spectrum(samples: &[Complex64], h: f64) -> SpectrumReport {
    let n = samples.len();
    assert!(n >= 2, "spectrum needs at least two samples");
    let coeffs = dft(samples);
    let lo = -((n / 2) as isize);
    let hi = lo + n as isize;
    let mut k = Vec::with_capacity(n);
    let mut magnitude = Vec::with_capacity(n);
    for m in lo..hi {
        let idx = m.rem_euclid(n as isize) as usize;
        k.push(2.0 * PI * m as f64 / n as f64);
        magnitude.push(coeffs[idx].norm() / n as f64);
    }
    SpectrumReport { k, magnitude, h }
}
