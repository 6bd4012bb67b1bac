//! The benchmark experiments: exact solutions, right-hand sides, assembly and error metrics.
//!
//! A [`ProblemSpec`] is pure data. [`ProblemSpec::stencils`] generates the weights a
//! scheme needs for it and [`ProblemSpec::solve`] runs the solver, so callers can time
//! the two phases separately.

mod bvp;
mod catalog;
mod diff;
mod eigen;
mod exact;
mod helmholtz;
mod hyperbolic;
mod navier_stokes;

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::operators::{Grid, Topology};
use crate::stencils::{Scheme, StencilSpec, WeightVector};

pub use bvp::{solve_bvp, BvpSolution};
pub use catalog::{catalog, Overrides};
pub use diff::{differentiate, DiffSolution};
pub use eigen::{solve_eigen, EigenResult};
pub use helmholtz::{solve_helmholtz, HelmholtzSolution};
pub use hyperbolic::{rk4_limit, solve_hyperbolic, HyperbolicSolution};
pub use navier_stokes::{
    periodic_helmholtz_matrix, solve_navier_stokes, taylor_green, NsSolution, NsState,
    PeriodicHelmholtz2d,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Experiment {
    DiffSmallK,
    DiffMediumK,
    DiffExpDecay,
    BvpBoyd,
    BvpConfined,
    BvpWide,
    HelmConst,
    HelmMulti,
    HypFew,
    HypComb,
    Ns2d,
    EigenHo,
}

impl Experiment {
    pub const ALL: [Experiment; 12] = [
        Experiment::DiffSmallK,
        Experiment::DiffMediumK,
        Experiment::DiffExpDecay,
        Experiment::BvpBoyd,
        Experiment::BvpConfined,
        Experiment::BvpWide,
        Experiment::HelmConst,
        Experiment::HelmMulti,
        Experiment::HypFew,
        Experiment::HypComb,
        Experiment::Ns2d,
        Experiment::EigenHo,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Experiment::DiffSmallK => "diff-smallk",
            Experiment::DiffMediumK => "diff-mediumk",
            Experiment::DiffExpDecay => "diff-expdecay",
            Experiment::BvpBoyd => "bvp-boyd",
            Experiment::BvpConfined => "bvp-confined",
            Experiment::BvpWide => "bvp-wide",
            Experiment::HelmConst => "helm-const",
            Experiment::HelmMulti => "helm-multi",
            Experiment::HypFew => "hyp-few",
            Experiment::HypComb => "hyp-comb",
            Experiment::Ns2d => "ns-2d",
            Experiment::EigenHo => "eigen-ho",
        }
    }

    /// Derivative orders whose stencils the solver consumes.
    pub fn orders(&self) -> &'static [u8] {
        match self {
            Experiment::DiffSmallK | Experiment::DiffMediumK | Experiment::DiffExpDecay => &[1],
            Experiment::HypFew | Experiment::HypComb => &[1],
            Experiment::BvpBoyd | Experiment::BvpConfined | Experiment::BvpWide => &[2],
            Experiment::HelmMulti | Experiment::EigenHo => &[2],
            Experiment::HelmConst | Experiment::Ns2d => &[1, 2],
        }
    }
}

impl fmt::Display for Experiment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Experiment {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase();
        Experiment::ALL
            .into_iter()
            .find(|e| e.name() == key)
            .ok_or_else(|| Error::UnknownExperiment(s.to_string()))
    }
}

/// How the reported error is measured.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Metric {
    /// Absolute max-norm over nodes, complex modulus.
    Linf,
    /// `‖D₁(u_h − u)‖₂ / ‖D₁u‖₂` with the scheme's own first-derivative operator.
    H1Seminorm,
    /// Largest relative eigenvalue error over the tracked low modes.
    EigenRelative,
}

impl Metric {
    pub fn name(&self) -> &'static str {
        match self {
            Metric::Linf => "linf",
            Metric::H1Seminorm => "h1-seminorm",
            Metric::EigenRelative => "eigen-relative",
        }
    }
}

/// Linear solver route.
///
/// On the periodic 2D flow problem `Dense` means the exact DFT diagonalization of the
/// circulant operators; the singular pressure system always takes that route.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolverKind {
    Pbcg,
    Dense,
}

impl SolverKind {
    pub fn name(&self) -> &'static str {
        match self {
            SolverKind::Pbcg => "pbcg",
            SolverKind::Dense => "dense",
        }
    }
}

impl FromStr for SolverKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "pbcg" => Ok(SolverKind::Pbcg),
            "dense" | "lu" => Ok(SolverKind::Dense),
            other => Err(Error::Parse(format!("unknown solver '{other}'"))),
        }
    }
}

/// Initial profile of the periodic transport problems.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TransportProfile {
    /// `sin⁴(kπx)`.
    Sin4 { k: f64 },
    /// `Σ_{j=1..k/2} sin(2jπx)`.
    Comb { k: usize },
}

/// Discrete Laplacian of the pressure Poisson equation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PressureLaplacian {
    /// The scheme's second-derivative stencil in each direction.
    #[default]
    Stencil,
    /// The first-derivative stencil applied twice, so the projected field has zero
    /// discrete divergence.
    Projection,
}

impl PressureLaplacian {
    pub fn name(&self) -> &'static str {
        match self {
            PressureLaplacian::Stencil => "stencil",
            PressureLaplacian::Projection => "projection",
        }
    }
}

impl FromStr for PressureLaplacian {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "stencil" | "d2" => Ok(PressureLaplacian::Stencil),
            "projection" | "d1d1" => Ok(PressureLaplacian::Projection),
            _ => Err(Error::Parse(format!("unknown pressure Laplacian '{s}'"))),
        }
    }
}

/// Physical parameters of each experiment family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Physics {
    /// Differentiate `exp(ikx)`.
    PlaneWave { k: f64 },
    /// Differentiate `Σ_{k=0..k_max} e^{-kσ} e^{ikx}`.
    ExpDecay { sigma: f64, k_max: usize },
    /// `u = sech(x) cos(πx/2s)`, `u'' − u = f`; `s` is fixed by the problem, not the grid.
    BoydBvp { s: f64 },
    /// `u = exp(−x²/2a²) cos(bπx)`, `u'' − u = f`.
    ConfinedBvp { a: f64, b: f64 },
    /// `u = Σ_{q=1..terms} exp(−x²/2a²) cos(10qπx)`, `u'' − u = f`.
    WideBvp { a: f64, terms: usize },
    /// `−u'' − k²u = −1`, `u(0) = 0`, `u'(1) − iku(1) = 0`.
    ///
    /// The source sign is the one the closed-form solution actually satisfies.
    HelmConst { k: f64 },
    /// `u'' + k²u = Σ_{j<k/2} (k² − 4j²) cos 2jx`; `k` must be even.
    HelmMulti { k: usize },
    /// `u_t = −t² u_x`, periodic.
    Transport { profile: TransportProfile, t_end: f64, dt: f64 },
    /// Decaying Taylor–Green vortex on the periodic square.
    TaylorGreen { k: f64, re: f64, dt: f64, steps: usize, pressure: PressureLaplacian },
    /// `−½u'' + x²/2 u = E u`.
    Oscillator { modes: usize },
}

/// A fully-populated experiment.
#[derive(Debug, Clone, PartialEq)]
pub struct ProblemSpec {
    pub experiment: Experiment,
    pub a: f64,
    pub b: f64,
    /// Node count per direction.
    pub n: usize,
    pub topology: Topology,
    pub physics: Physics,
    pub metric: Metric,
    pub solver: SolverKind,
    /// Domain half-length and node count were set explicitly (eigen problem only).
    pub fixed_eigen_grid: bool,
}

/// Weights generated for one (scheme, M) cell.
#[derive(Debug, Clone)]
pub struct Stencils {
    pub first: Option<WeightVector>,
    pub second: Option<WeightVector>,
}

impl Stencils {
    fn first(&self) -> Result<&WeightVector> {
        self.first
            .as_ref()
            .ok_or_else(|| Error::InvalidParameter("problem needs a first-derivative stencil".into()))
    }

    fn second(&self) -> Result<&WeightVector> {
        self.second
            .as_ref()
            .ok_or_else(|| Error::InvalidParameter("problem needs a second-derivative stencil".into()))
    }
}

/// Final state of a solve.
#[derive(Debug, Clone)]
pub enum Solution {
    Field(Vec<Complex64>),
    Flow(Box<NsState>),
    Spectrum(Vec<EigenResult>),
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub error: f64,
    pub solution: Solution,
    /// PBCG iterations, summed over solves.
    pub iterations: Option<usize>,
    /// Largest `‖div u‖∞ / ‖u‖∞` observed after a projection step.
    pub max_divergence: Option<f64>,
}

impl ProblemSpec {
    /// Grid used for half-width `m`. Only the eigenproblem ties the grid to `m`.
    pub fn grid_for(&self, m: usize) -> Result<Grid> {
        if self.experiment == Experiment::EigenHo && !self.fixed_eigen_grid {
            let (n, half) = eigen::default_grid(m);
            return Grid::bounded(-half, half, n);
        }
        Grid::new(self.a, self.b, self.n, self.topology)
    }

    pub fn grid(&self) -> Result<Grid> {
        Grid::new(self.a, self.b, self.n, self.topology)
    }

    /// Generates every stencil the solver needs for `scheme` at half-width `m`.
    pub fn stencils(&self, scheme: &Scheme, m: usize) -> Result<Stencils> {
        let h = self.grid_for(m)?.h();
        let mut out = Stencils { first: None, second: None };
        for &order in self.experiment.orders() {
            let w = scheme.weights(&StencilSpec::new(order, m, h)?)?;
            match order {
                1 => out.first = Some(w),
                _ => out.second = Some(w),
            }
        }
        Ok(out)
    }

    /// Runs the experiment with pre-generated stencils.
    pub fn solve(&self, stencils: &Stencils) -> Result<Outcome> {
        match self.physics {
            Physics::PlaneWave { .. } | Physics::ExpDecay { .. } => {
                let s = differentiate(self, stencils.first()?)?;
                Ok(Outcome {
                    error: s.error,
                    solution: Solution::Field(s.derivative),
                    iterations: None,
                    max_divergence: None,
                })
            }
            Physics::BoydBvp { .. } | Physics::ConfinedBvp { .. } | Physics::WideBvp { .. } => {
                let s = solve_bvp(self, stencils.second()?)?;
                Ok(Outcome {
                    error: s.error,
                    solution: Solution::Field(s.u.iter().map(|&v| Complex64::new(v, 0.0)).collect()),
                    iterations: s.iterations,
                    max_divergence: None,
                })
            }
            Physics::HelmConst { .. } | Physics::HelmMulti { .. } => {
                let s = solve_helmholtz(self, stencils.second()?, stencils.first.as_ref())?;
                Ok(Outcome {
                    error: s.error,
                    solution: Solution::Field(s.u),
                    iterations: s.iterations,
                    max_divergence: None,
                })
            }
            Physics::Transport { .. } => {
                let s = solve_hyperbolic(self, stencils.first()?)?;
                Ok(Outcome {
                    error: s.error,
                    solution: Solution::Field(s.u.iter().map(|&v| Complex64::new(v, 0.0)).collect()),
                    iterations: None,
                    max_divergence: None,
                })
            }
            Physics::TaylorGreen { .. } => {
                let s = solve_navier_stokes(self, stencils.first()?, stencils.second()?)?;
                Ok(Outcome {
                    error: s.error,
                    solution: Solution::Flow(Box::new(s.state)),
                    iterations: s.iterations,
                    max_divergence: Some(s.max_divergence),
                })
            }
            Physics::Oscillator { modes } => {
                let results = solve_eigen(self, stencils.second()?)?;
                let error = results
                    .iter()
                    .take(modes + 1)
                    .map(|r| r.relative_error)
                    .fold(0.0_f64, |acc, e| if e.is_nan() || acc.is_nan() { f64::NAN } else { acc.max(e) });
                Ok(Outcome {
                    error,
                    solution: Solution::Spectrum(results),
                    iterations: None,
                    max_divergence: None,
                })
            }
        }
    }

    /// Points per wavelength of the highest wavenumber carried by the exact solution.
    pub fn points_per_wavelength(&self) -> Option<f64> {
        let h = self.grid().ok()?.h();
        let kmax = match self.physics {
            Physics::PlaneWave { k } => k,
            Physics::ExpDecay { k_max, .. } => k_max as f64,
            Physics::BoydBvp { s } => std::f64::consts::PI / (2.0 * s),
            Physics::ConfinedBvp { b, .. } => b * std::f64::consts::PI,
            Physics::WideBvp { terms, .. } => 10.0 * terms as f64 * std::f64::consts::PI,
            Physics::HelmConst { k } => k,
            Physics::HelmMulti { k } => k as f64,
            Physics::Transport { profile, .. } => exact::transport_modes(profile)
                .iter()
                .map(|(kappa, _)| kappa.abs())
                .fold(0.0, f64::max),
            Physics::TaylorGreen { k, .. } => k,
            Physics::Oscillator { .. } => return None,
        };
        Some(2.0 * std::f64::consts::PI / (kmax * h))
    }

    /// Exact steady (or initial) solution as a function of `x`, when one exists.
    pub fn exact(&self) -> Option<exact::ExactFn> {
        exact::exact_fn(&self.physics)
    }

    /// Right-hand side of the steady equation, when one exists.
    pub fn rhs(&self) -> Option<exact::ExactFn> {
        exact::rhs_fn(&self.physics)
    }

    /// Plain-text `key = value` lines describing the spec.
    pub fn to_key_value(&self) -> String {
        catalog::to_key_value(self)
    }

    /// Inverse of [`ProblemSpec::to_key_value`].
    pub fn from_key_value(text: &str) -> Result<Self> {
        catalog::from_key_value(text)
    }
}

pub use exact::ExactFn;
