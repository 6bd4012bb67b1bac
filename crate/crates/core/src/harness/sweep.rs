use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::problems::{catalog, Experiment, Overrides, ProblemSpec};
use crate::stencils::{FactorialMode, Method, Scheme};

use super::presets::preset;

/// Outcome class of one sweep cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CellStatus {
    Ok,
    /// Weights or solution overflowed, or the time integration blew up.
    Nan,
    /// An iterative or eigen solver failed to reach tolerance.
    NoConverge,
    /// The cell could not be set up, e.g. no `r` is tabulated for this `M`.
    Skipped,
}

impl CellStatus {
    pub fn name(&self) -> &'static str {
        match self {
            CellStatus::Ok => "ok",
            CellStatus::Nan => "nan",
            CellStatus::NoConverge => "no-converge",
            CellStatus::Skipped => "skipped",
        }
    }
}

impl fmt::Display for CellStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CellStatus {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "ok" => CellStatus::Ok,
            "nan" => CellStatus::Nan,
            "no-converge" => CellStatus::NoConverge,
            "skipped" => CellStatus::Skipped,
            _ => return Err(Error::Parse(format!("unknown status '{s}'"))),
        })
    }
}

/// One (method, M) cell of a sweep.
#[derive(Debug, Clone, Copy)]
pub struct SweepResult {
    pub experiment: Experiment,
    pub method: Method,
    pub m: usize,
    /// `r` for DSC-RSK, `D` for sech.
    pub param: Option<f64>,
    /// NaN unless `status` is [`CellStatus::Ok`].
    pub error: f64,
    pub cpu_weights_s: f64,
    pub cpu_solve_s: f64,
    pub status: CellStatus,
}

/// Field-wise equality with NaN errors comparing equal to each other.
impl PartialEq for SweepResult {
    fn eq(&self, other: &Self) -> bool {
        let same = |a: f64, b: f64| a == b || (a.is_nan() && b.is_nan());
        self.experiment == other.experiment
            && self.method == other.method
            && self.m == other.m
            && self.param == other.param
            && same(self.error, other.error)
            && self.cpu_weights_s == other.cpu_weights_s
            && self.cpu_solve_s == other.cpu_solve_s
            && self.status == other.status
    }
}

impl SweepResult {
    pub fn is_ok(&self) -> bool {
        self.status == CellStatus::Ok
    }
}

#[derive(Debug, Clone, Default)]
pub struct SweepOptions {
    pub overrides: Overrides,
    /// Replaces the tabulated DSC-RSK width for every `M`.
    pub r: Option<f64>,
    /// Replaces the tabulated sech constant.
    pub d: Option<f64>,
    /// Runs cells one at a time so CPU columns are not skewed by contention.
    pub serial: bool,
    pub factorials: FactorialMode,
}

/// Scheme for `method` at half-width `m`, or `None` when no parameter is available.
pub fn scheme_for(experiment: Experiment, method: Method, m: usize, opts: &SweepOptions) -> Result<Option<Scheme>> {
    let p = preset(experiment);
    let param = match method {
        Method::DscRsk => match opts.r.or_else(|| p.r_for(m)) {
            Some(r) => Some(r),
            None => return Ok(None),
        },
        Method::Sech => Some(opts.d.unwrap_or(p.sech_d)),
        _ => None,
    };
    Ok(Some(Scheme::from_method(method, param)?.with_factorials(opts.factorials)))
}

/// Generates weights and solves one cell, timing each phase.
pub fn run_cell(spec: &ProblemSpec, scheme: &Scheme, m: usize) -> SweepResult {
    let mut result = SweepResult {
        experiment: spec.experiment,
        method: scheme.method(),
        m,
        param: scheme.parameter(),
        error: f64::NAN,
        cpu_weights_s: 0.0,
        cpu_solve_s: 0.0,
        status: CellStatus::Skipped,
    };
    let t = Instant::now();
    let stencils = spec.stencils(scheme, m);
    result.cpu_weights_s = t.elapsed().as_secs_f64();
    let stencils = match stencils {
        Ok(s) => s,
        Err(e) => {
            result.status = classify(&e);
            return result;
        }
    };
    let weights_finite = [&stencils.first, &stencils.second]
        .iter()
        .all(|w| w.as_ref().is_none_or(|w| w.is_finite()));
    if !weights_finite {
        result.status = CellStatus::Nan;
        return result;
    }
    let t = Instant::now();
    let outcome = spec.solve(&stencils);
    result.cpu_solve_s = t.elapsed().as_secs_f64();
    match outcome {
        Ok(o) if o.error.is_finite() => {
            result.error = o.error;
            result.status = CellStatus::Ok;
        }
        Ok(_) => result.status = CellStatus::Nan,
        Err(e) => result.status = classify(&e),
    }
    result
}

fn classify(e: &Error) -> CellStatus {
    if e.is_convergence_failure() {
        CellStatus::NoConverge
    } else if matches!(e, Error::BlowUp { .. } | Error::Singular) {
        CellStatus::Nan
    } else {
        CellStatus::Skipped
    }
}

/// Runs every (method, M) cell, methods outermost, in input order.
///
/// Cell failures become statuses; only an unknown experiment, an empty `M` list or
/// an invalid override aborts the sweep.
pub fn run_sweep(
    experiment: Experiment,
    methods: &[Method],
    m_list: &[usize],
    opts: &SweepOptions,
) -> Result<Vec<SweepResult>> {
    if m_list.is_empty() {
        return Err(Error::InvalidParameter("M list is empty".into()));
    }
    if methods.is_empty() {
        return Err(Error::InvalidParameter("method list is empty".into()));
    }
    let spec = catalog(experiment.name(), &opts.overrides)?;
    let mut cells = Vec::with_capacity(methods.len() * m_list.len());
    for &method in methods {
        for &m in m_list {
            cells.push((method, m, scheme_for(experiment, method, m, opts)?));
        }
    }
    let run = |&(method, m, scheme): &(Method, usize, Option<Scheme>)| match scheme {
        Some(s) => run_cell(&spec, &s, m),
        None => SweepResult {
            experiment,
            method,
            m,
            param: None,
            error: f64::NAN,
            cpu_weights_s: 0.0,
            cpu_solve_s: 0.0,
            status: CellStatus::Skipped,
        },
    };
    Ok(if opts.serial {
        cells.iter().map(run).collect()
    } else {
        cells.par_iter().map(run).collect()
    })
}
