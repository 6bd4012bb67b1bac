use std::f64::consts::PI;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::operators::Topology;

use super::{Experiment, Metric, Physics, PressureLaplacian, ProblemSpec, SolverKind, TransportProfile};

/// Optional replacements for catalog defaults. Fields that do not apply to an
/// experiment are rejected.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Overrides {
    pub n: Option<usize>,
    pub domain: Option<(f64, f64)>,
    /// Wavenumber parameter `k` of the experiment.
    pub k: Option<f64>,
    pub dt: Option<f64>,
    pub t_end: Option<f64>,
    pub steps: Option<usize>,
    pub solver: Option<SolverKind>,
    /// Pressure Poisson operator of the flow problem.
    pub pressure: Option<PressureLaplacian>,
}

impl Overrides {
    pub fn is_empty(&self) -> bool {
        *self == Overrides::default()
    }
}

fn defaults(experiment: Experiment) -> ProblemSpec {
    let bounded = |a: f64, b: f64, n: usize, physics: Physics, metric: Metric, solver: SolverKind| {
        ProblemSpec {
            experiment,
            a,
            b,
            n,
            topology: Topology::Bounded,
            physics,
            metric,
            solver,
            fixed_eigen_grid: false,
        }
    };
    let transport = |profile| ProblemSpec {
        experiment,
        a: -1.0,
        b: 1.0,
        n: 101,
        topology: Topology::Periodic,
        physics: Physics::Transport { profile, t_end: 1.0, dt: 5e-5 },
        metric: Metric::Linf,
        solver: SolverKind::Dense,
        fixed_eigen_grid: false,
    };
    let tau = 2.0 * PI;
    match experiment {
        Experiment::DiffSmallK => bounded(0.0, tau, 201, Physics::PlaneWave { k: 45.0 }, Metric::Linf, SolverKind::Dense),
        Experiment::DiffMediumK => bounded(0.0, tau, 201, Physics::PlaneWave { k: 60.0 }, Metric::Linf, SolverKind::Dense),
        Experiment::DiffExpDecay => bounded(
            0.0,
            tau,
            201,
            Physics::ExpDecay { sigma: 0.1, k_max: 80 },
            Metric::Linf,
            SolverKind::Dense,
        ),
        Experiment::BvpBoyd => bounded(-30.0, 30.0, 201, Physics::BoydBvp { s: 0.3 }, Metric::Linf, SolverKind::Pbcg),
        Experiment::BvpConfined => bounded(
            -3.0,
            3.0,
            601,
            Physics::ConfinedBvp { a: 0.3, b: 80.0 },
            Metric::Linf,
            SolverKind::Pbcg,
        ),
        Experiment::BvpWide => bounded(
            -3.0,
            3.0,
            601,
            Physics::WideBvp { a: 0.3, terms: 8 },
            Metric::Linf,
            SolverKind::Pbcg,
        ),
        Experiment::HelmConst => bounded(
            0.0,
            1.0,
            526,
            Physics::HelmConst { k: 500.0 * PI },
            Metric::H1Seminorm,
            SolverKind::Dense,
        ),
        Experiment::HelmMulti => bounded(0.0, PI, 526, Physics::HelmMulti { k: 500 }, Metric::Linf, SolverKind::Dense),
        Experiment::HypFew => transport(TransportProfile::Sin4 { k: 10.0 }),
        Experiment::HypComb => transport(TransportProfile::Comb { k: 40 }),
        Experiment::Ns2d => ProblemSpec {
            experiment,
            a: 0.0,
            b: tau,
            n: 51,
            topology: Topology::Periodic,
            physics: Physics::TaylorGreen {
                k: 10.0,
                re: 100.0,
                dt: 1e-5,
                steps: 1000,
                pressure: PressureLaplacian::Stencil,
            },
            metric: Metric::Linf,
            solver: SolverKind::Dense,
            fixed_eigen_grid: false,
        },
        Experiment::EigenHo => bounded(-8.7, 8.7, 51, Physics::Oscillator { modes: 10 }, Metric::EigenRelative, SolverKind::Dense),
    }
}

/// Experiment defaults with `overrides` applied.
pub fn catalog(name: &str, overrides: &Overrides) -> Result<ProblemSpec> {
    let experiment: Experiment = name.parse()?;
    let mut spec = defaults(experiment);
    apply(&mut spec, overrides)?;
    Ok(spec)
}

fn not_applicable(spec: &ProblemSpec, what: &str) -> Error {
    Error::InvalidParameter(format!("'{what}' does not apply to {}", spec.experiment))
}

fn apply(spec: &mut ProblemSpec, o: &Overrides) -> Result<()> {
    if let Some(n) = o.n {
        if n < 3 {
            return Err(Error::InvalidParameter("need at least 3 nodes".into()));
        }
        spec.n = n;
        spec.fixed_eigen_grid = true;
    }
    if let Some((a, b)) = o.domain {
        if !(a.is_finite() && b.is_finite() && b > a) {
            return Err(Error::InvalidParameter(format!("invalid domain [{a}, {b}]")));
        }
        spec.a = a;
        spec.b = b;
        spec.fixed_eigen_grid = true;
    }
    if let Some(solver) = o.solver {
        spec.solver = solver;
    }
    if let Some(choice) = o.pressure {
        match &mut spec.physics {
            Physics::TaylorGreen { pressure, .. } => *pressure = choice,
            _ => return Err(not_applicable(spec, "pressure")),
        }
    }
    if let Some(k) = o.k {
        if !(k.is_finite() && k > 0.0) {
            return Err(Error::InvalidParameter(format!("wavenumber must be positive, got {k}")));
        }
        spec.physics = match spec.physics {
            Physics::PlaneWave { .. } => Physics::PlaneWave { k },
            Physics::HelmConst { .. } => Physics::HelmConst { k },
            Physics::HelmMulti { .. } => Physics::HelmMulti { k: even_integer(k)? },
            Physics::Transport { profile, t_end, dt } => {
                let profile = match profile {
                    TransportProfile::Sin4 { .. } => TransportProfile::Sin4 { k },
                    TransportProfile::Comb { .. } => TransportProfile::Comb { k: even_integer(k)? },
                };
                Physics::Transport { profile, t_end, dt }
            }
            Physics::TaylorGreen { re, dt, steps, pressure, .. } => Physics::TaylorGreen { k, re, dt, steps, pressure },
            _ => return Err(not_applicable(spec, "k")),
        };
    }
    if o.dt.is_some() || o.t_end.is_some() || o.steps.is_some() {
        let positive = |v: f64, what: &str| -> Result<f64> {
            if v.is_finite() && v > 0.0 {
                Ok(v)
            } else {
                Err(Error::InvalidParameter(format!("{what} must be positive, got {v}")))
            }
        };
        spec.physics = match spec.physics {
            Physics::Transport { profile, t_end, dt } => {
                if o.steps.is_some() {
                    return Err(not_applicable(spec, "steps"));
                }
                Physics::Transport {
                    profile,
                    t_end: positive(o.t_end.unwrap_or(t_end), "t_end")?,
                    dt: positive(o.dt.unwrap_or(dt), "dt")?,
                }
            }
            Physics::TaylorGreen { k, re, dt, steps, pressure } => {
                if o.t_end.is_some() {
                    return Err(not_applicable(spec, "t_end"));
                }
                Physics::TaylorGreen {
                    k,
                    re,
                    dt: positive(o.dt.unwrap_or(dt), "dt")?,
                    steps: o.steps.unwrap_or(steps),
                    pressure,
                }
            }
            _ => return Err(not_applicable(spec, "time stepping")),
        };
    }
    Ok(())
}

fn even_integer(k: f64) -> Result<usize> {
    if k.fract() != 0.0 || !(k as usize).is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("k must be an even integer here, got {k}")));
    }
    Ok(k as usize)
}

pub(super) fn to_key_value(spec: &ProblemSpec) -> String {
    let mut s = String::new();
    let mut kv = |k: &str, v: String| {
        let _ = writeln!(s, "{k} = {v}");
    };
    kv("experiment", spec.experiment.name().into());
    kv("a", format!("{:?}", spec.a));
    kv("b", format!("{:?}", spec.b));
    kv("n", spec.n.to_string());
    kv(
        "topology",
        match spec.topology {
            Topology::Bounded => "bounded".into(),
            Topology::Periodic => "periodic".into(),
        },
    );
    kv("metric", spec.metric.name().into());
    kv("solver", spec.solver.name().into());
    kv("fixed_grid", spec.fixed_eigen_grid.to_string());
    match spec.physics {
        Physics::PlaneWave { k } => kv("k", format!("{k:?}")),
        Physics::ExpDecay { sigma, k_max } => {
            kv("sigma", format!("{sigma:?}"));
            kv("k_max", k_max.to_string());
        }
        Physics::BoydBvp { s } => kv("s", format!("{s:?}")),
        Physics::ConfinedBvp { a, b } => {
            kv("gauss_a", format!("{a:?}"));
            kv("freq_b", format!("{b:?}"));
        }
        Physics::WideBvp { a, terms } => {
            kv("gauss_a", format!("{a:?}"));
            kv("terms", terms.to_string());
        }
        Physics::HelmConst { k } => kv("k", format!("{k:?}")),
        Physics::HelmMulti { k } => kv("k", k.to_string()),
        Physics::Transport { profile, t_end, dt } => {
            match profile {
                TransportProfile::Sin4 { k } => {
                    kv("profile", "sin4".into());
                    kv("k", format!("{k:?}"));
                }
                TransportProfile::Comb { k } => {
                    kv("profile", "comb".into());
                    kv("k", k.to_string());
                }
            }
            kv("t_end", format!("{t_end:?}"));
            kv("dt", format!("{dt:?}"));
        }
        Physics::TaylorGreen { k, re, dt, steps, pressure } => {
            kv("pressure", pressure.name().into());
            kv("k", format!("{k:?}"));
            kv("re", format!("{re:?}"));
            kv("dt", format!("{dt:?}"));
            kv("steps", steps.to_string());
        }
        Physics::Oscillator { modes } => kv("modes", modes.to_string()),
    }
    s
}

pub(super) fn from_key_value(text: &str) -> Result<ProblemSpec> {
    let mut pairs = std::collections::BTreeMap::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("line {}: expected 'key = value'", lineno + 1)))?;
        pairs.insert(k.trim().to_string(), v.trim().to_string());
    }
    let get = |k: &str| -> Result<&str> {
        pairs
            .get(k)
            .map(String::as_str)
            .ok_or_else(|| Error::Parse(format!("missing key '{k}'")))
    };
    fn num<T: std::str::FromStr>(k: &str, v: &str) -> Result<T> {
        v.parse().map_err(|_| Error::Parse(format!("bad value for '{k}': {v}")))
    }
    let experiment: Experiment = get("experiment")?.parse()?;
    let mut spec = defaults(experiment);
    spec.a = num("a", get("a")?)?;
    spec.b = num("b", get("b")?)?;
    spec.n = num("n", get("n")?)?;
    spec.topology = match get("topology")? {
        "bounded" => Topology::Bounded,
        "periodic" => Topology::Periodic,
        other => return Err(Error::Parse(format!("unknown topology '{other}'"))),
    };
    spec.solver = get("solver")?.parse()?;
    spec.fixed_eigen_grid = num("fixed_grid", get("fixed_grid")?)?;
    let f = |k: &str| -> Result<f64> { num(k, get(k)?) };
    let u = |k: &str| -> Result<usize> { num(k, get(k)?) };
    spec.physics = match spec.physics {
        Physics::PlaneWave { .. } => Physics::PlaneWave { k: f("k")? },
        Physics::ExpDecay { .. } => Physics::ExpDecay { sigma: f("sigma")?, k_max: u("k_max")? },
        Physics::BoydBvp { .. } => Physics::BoydBvp { s: f("s")? },
        Physics::ConfinedBvp { .. } => Physics::ConfinedBvp { a: f("gauss_a")?, b: f("freq_b")? },
        Physics::WideBvp { .. } => Physics::WideBvp { a: f("gauss_a")?, terms: u("terms")? },
        Physics::HelmConst { .. } => Physics::HelmConst { k: f("k")? },
        Physics::HelmMulti { .. } => Physics::HelmMulti { k: u("k")? },
        Physics::Transport { .. } => {
            let profile = match get("profile")? {
                "sin4" => TransportProfile::Sin4 { k: f("k")? },
                "comb" => TransportProfile::Comb { k: u("k")? },
                other => return Err(Error::Parse(format!("unknown profile '{other}'"))),
            };
            Physics::Transport { profile, t_end: f("t_end")?, dt: f("dt")? }
        }
        Physics::TaylorGreen { .. } => Physics::TaylorGreen {
            k: f("k")?,
            re: f("re")?,
            dt: f("dt")?,
            steps: u("steps")?,
            pressure: get("pressure")?.parse()?,
        },
        Physics::Oscillator { .. } => Physics::Oscillator { modes: u("modes")? },
    };
    Ok(spec)
}
