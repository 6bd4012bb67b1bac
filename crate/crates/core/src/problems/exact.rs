//! Closed-form solutions and forcing terms.

use std::f64::consts::PI;
use std::sync::Arc;

use num_complex::Complex64;

use super::{Physics, TransportProfile};

pub type ExactFn = Arc<dyn Fn(f64) -> Complex64 + Send + Sync>;

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn gaussian_cos(x: f64, a: f64, beta: f64) -> f64 {
    (-x * x / (2.0 * a * a)).exp() * (beta * x).cos()
}

/// `(G cos βx)'' − G cos βx` with `G = exp(−x²/2a²)`.
fn gaussian_cos_forcing(x: f64, a: f64, beta: f64) -> f64 {
    let g = (-x * x / (2.0 * a * a)).exp();
    let a2 = a * a;
    2.0 * beta * x / a2 * g * (beta * x).sin()
        + (x * x / (a2 * a2) - 1.0 / a2 - beta * beta - 1.0) * g * (beta * x).cos()
}

pub(crate) fn helm_const_exact(k: f64, x: f64) -> Complex64 {
    let (s, c) = (k * x).sin_cos();
    Complex64::new(1.0 - c - k.sin() * s, (k.cos() - 1.0) * s) / (k * k)
}

pub(crate) fn helm_const_derivative(k: f64, x: f64) -> Complex64 {
    let (s, c) = (k * x).sin_cos();
    Complex64::new(s - k.sin() * c, (k.cos() - 1.0) * c) / k
}

pub(crate) fn helm_multi_exact(k: usize, x: f64) -> f64 {
    (0..=k / 2).map(|j| (2.0 * j as f64 * x).cos()).sum()
}

pub(crate) fn helm_multi_rhs(k: usize, x: f64) -> f64 {
    let k2 = (k * k) as f64;
    (0..k / 2)
        .map(|j| {
            let j = j as f64;
            (k2 - 4.0 * j * j) * (2.0 * j * x).cos()
        })
        .sum()
}

/// `(κ, c)` pairs with `u₀(x) = Σ c e^{iκx}`.
pub(crate) fn transport_modes(profile: TransportProfile) -> Vec<(f64, Complex64)> {
    match profile {
        TransportProfile::Sin4 { k } => {
            // sin⁴θ = 3/8 − cos 2θ / 2 + cos 4θ / 8
            let w = k * PI;
            vec![
                (0.0, re(3.0 / 8.0)),
                (2.0 * w, re(-0.25)),
                (-2.0 * w, re(-0.25)),
                (4.0 * w, re(1.0 / 16.0)),
                (-4.0 * w, re(1.0 / 16.0)),
            ]
        }
        TransportProfile::Comb { k } => (1..=k / 2)
            .flat_map(|j| {
                let kappa = 2.0 * PI * j as f64;
                // sin θ = (e^{iθ} − e^{−iθ}) / 2i
                [(kappa, Complex64::new(0.0, -0.5)), (-kappa, Complex64::new(0.0, 0.5))]
            })
            .collect(),
    }
}

pub(crate) fn transport_initial(profile: TransportProfile, x: f64) -> f64 {
    match profile {
        TransportProfile::Sin4 { k } => (k * PI * x).sin().powi(4),
        TransportProfile::Comb { k } => (1..=k / 2).map(|j| (2.0 * PI * j as f64 * x).sin()).sum(),
    }
}

/// `u(t, x) = u₀(x − t³/3)`.
pub(crate) fn transport_exact(profile: TransportProfile, t: f64, x: f64) -> f64 {
    transport_initial(profile, x - t * t * t / 3.0)
}

pub(crate) fn exact_fn(physics: &Physics) -> Option<ExactFn> {
    Some(match *physics {
        Physics::PlaneWave { k } => Arc::new(move |x: f64| Complex64::from_polar(1.0, k * x)),
        Physics::ExpDecay { sigma, k_max } => Arc::new(move |x: f64| {
            (0..=k_max)
                .map(|k| Complex64::from_polar((-(k as f64) * sigma).exp(), k as f64 * x))
                .sum()
        }),
        Physics::BoydBvp { s } => {
            Arc::new(move |x: f64| re((PI * x / (2.0 * s)).cos() / x.cosh()))
        }
        Physics::ConfinedBvp { a, b } => Arc::new(move |x: f64| re(gaussian_cos(x, a, b * PI))),
        Physics::WideBvp { a, terms } => Arc::new(move |x: f64| {
            re((1..=terms).map(|q| gaussian_cos(x, a, 10.0 * q as f64 * PI)).sum())
        }),
        Physics::HelmConst { k } => Arc::new(move |x: f64| helm_const_exact(k, x)),
        Physics::HelmMulti { k } => Arc::new(move |x: f64| re(helm_multi_exact(k, x))),
        Physics::Transport { profile, .. } => {
            Arc::new(move |x: f64| re(transport_initial(profile, x)))
        }
        Physics::TaylorGreen { .. } | Physics::Oscillator { .. } => return None,
    })
}

/// Exact first derivative for the differentiation tests.
pub(crate) fn derivative_fn(physics: &Physics) -> Option<ExactFn> {
    Some(match *physics {
        Physics::PlaneWave { k } => {
            Arc::new(move |x: f64| Complex64::new(0.0, k) * Complex64::from_polar(1.0, k * x))
        }
        Physics::ExpDecay { sigma, k_max } => Arc::new(move |x: f64| {
            (1..=k_max)
                .map(|k| {
                    let k = k as f64;
                    Complex64::new(0.0, k) * Complex64::from_polar((-k * sigma).exp(), k * x)
                })
                .sum()
        }),
        Physics::HelmConst { k } => Arc::new(move |x: f64| helm_const_derivative(k, x)),
        _ => return None,
    })
}

pub(crate) fn rhs_fn(physics: &Physics) -> Option<ExactFn> {
    Some(match *physics {
        Physics::BoydBvp { s } => Arc::new(move |x: f64| {
            let sech = 1.0 / x.cosh();
            let w = PI * x / (2.0 * s);
            re((-2.0 * sech.powi(3) - PI * PI / (4.0 * s * s) * sech) * w.cos()
                + PI / s * sech * x.tanh() * w.sin())
        }),
        Physics::ConfinedBvp { a, b } => {
            Arc::new(move |x: f64| re(gaussian_cos_forcing(x, a, b * PI)))
        }
        Physics::WideBvp { a, terms } => Arc::new(move |x: f64| {
            re((1..=terms)
                .map(|q| gaussian_cos_forcing(x, a, 10.0 * q as f64 * PI))
                .sum())
        }),
        Physics::HelmConst { .. } => Arc::new(|_| re(-1.0)),
        Physics::HelmMulti { k } => Arc::new(move |x: f64| re(helm_multi_rhs(k, x))),
        _ => return None,
    })
}
