use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::metrics::linf_error;
use crate::operators::{rk4_step, Grid};
use crate::stencils::WeightVector;

use super::{exact, Physics, ProblemSpec, TransportProfile};

#[derive(Debug, Clone)]
pub struct HyperbolicSolution {
    pub u: Vec<f64>,
    pub exact: Vec<f64>,
    pub error: f64,
    pub steps: usize,
}

/// Stencil folded onto an `n`-periodic grid: `c[q] = Σ_{j ≡ q mod n} δ_j`.
pub(crate) fn folded(w: &WeightVector, n: usize) -> Vec<f64> {
    let mut c = vec![0.0; n];
    for (j, d) in w.iter() {
        c[j.rem_euclid(n as isize) as usize] += d;
    }
    c
}

/// `out_i = Σ_q c_q y_{(i+q) mod n}`.
pub(crate) fn circulant_apply(c: &[f64], y: &[f64], out: &mut [f64]) {
    let n = y.len();
    for (i, o) in out.iter_mut().enumerate() {
        let (head, tail) = c.split_at(n - i);
        let mut s = 0.0;
        for (cq, yq) in head.iter().zip(&y[i..]) {
            s += cq * yq;
        }
        for (cq, yq) in tail.iter().zip(&y[..i]) {
            s += cq * yq;
        }
        *o = s;
    }
}

fn transport_params(spec: &ProblemSpec) -> Result<(TransportProfile, f64, f64, usize)> {
    match spec.physics {
        Physics::Transport { profile, t_end, dt } => {
            let steps = (t_end / dt).round() as usize;
            if steps == 0 || ((steps as f64) * dt - t_end).abs() > 1e-9 * t_end {
                return Err(Error::InvalidParameter(format!(
                    "t_end = {t_end} is not a whole number of steps of {dt}"
                )));
            }
            Ok((profile, t_end, dt, steps))
        }
        _ => Err(Error::InvalidParameter(format!(
            "{} is not a transport problem",
            spec.experiment
        ))),
    }
}

const GROWTH_LIMIT: f64 = 1e6;

/// Method of lines for `u_t = −t² D₁ u` on the periodic grid, advanced by RK4.
pub fn solve_hyperbolic(spec: &ProblemSpec, d1: &WeightVector) -> Result<HyperbolicSolution> {
    let (profile, t_end, dt, steps) = transport_params(spec)?;
    if d1.spec().order() != 1 {
        return Err(Error::InvalidParameter("transport needs an order-1 stencil".into()));
    }
    let grid = spec.grid()?;
    if !grid.is_periodic() {
        return Err(Error::InvalidParameter("transport problems are periodic".into()));
    }
    let c = folded(d1, grid.len());
    let mut y = grid.sample(|x| exact::transport_initial(profile, x));
    let scale = y.iter().fold(0.0_f64, |m, v| m.max(v.abs())).max(f64::MIN_POSITIVE);
    let mut scratch = vec![0.0; y.len()];
    for step in 0..steps {
        let t = step as f64 * dt;
        y = rk4_step(
            |t, u: &[f64]| {
                circulant_apply(&c, u, &mut scratch);
                scratch.iter().map(|v| -t * t * v).collect()
            },
            t,
            &y,
            dt,
        );
        let peak = y.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
        if !(peak <= GROWTH_LIMIT * scale) {
            return Err(Error::BlowUp { time: t + dt });
        }
    }
    let exact = grid.sample(|x| exact::transport_exact(profile, t_end, x));
    let error = linf_error(&y, &exact);
    Ok(HyperbolicSolution { u: y, exact, error, steps })
}

/// Error left when space is differentiated exactly and only RK4 discretizes time.
///
/// Each Fourier mode `e^{iκx}` obeys `z' = −iκt² z`; integrating those scalar ODEs
/// with the same step gives the time-integration floor of the experiment.
pub fn rk4_limit(spec: &ProblemSpec) -> Result<f64> {
    let (profile, t_end, dt, steps) = transport_params(spec)?;
    let grid: Grid = spec.grid()?;
    let modes = exact::transport_modes(profile);
    let kappas: Vec<f64> = modes.iter().map(|m| m.0).collect();
    let mut z = vec![Complex64::new(1.0, 0.0); modes.len()];
    for step in 0..steps {
        let t = step as f64 * dt;
        z = rk4_step(
            |t, z: &[Complex64]| {
                z.iter()
                    .zip(&kappas)
                    .map(|(&zi, &k)| zi * Complex64::new(0.0, -k * t * t))
                    .collect()
            },
            t,
            &z,
            dt,
        );
    }
    let numeric = grid.sample(|x| {
        modes
            .iter()
            .zip(&z)
            .map(|(&(k, c), &zi)| c * zi * Complex64::from_polar(1.0, k * x))
            .sum::<Complex64>()
            .re
    });
    let exact = grid.sample(|x| exact::transport_exact(profile, t_end, x));
    Ok(linf_error(&numeric, &exact))
}
