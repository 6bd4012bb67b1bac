use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::stencils::{
    accelerate, boyd_fd_acceleration_with, dsc_rsk_weights, euler_acceleration_with, fd_weights,
    meuler_acceleration_with, sech_weights, sinc_weights, BoydCenter, FactorialMode, RskParams,
    SechParams, StencilSpec, WeightVector,
};

/// Stencil family, without parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Fd,
    BoydFd,
    Euler,
    MEuler,
    Sech,
    Sinc,
    DscRsk,
}

impl Method {
    pub const ALL: [Method; 7] = [
        Method::Fd,
        Method::BoydFd,
        Method::Euler,
        Method::MEuler,
        Method::Sech,
        Method::Sinc,
        Method::DscRsk,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Method::Fd => "FD",
            Method::BoydFd => "BoydFD",
            Method::Euler => "Euler",
            Method::MEuler => "MEuler",
            Method::Sech => "Sech",
            Method::Sinc => "Sinc",
            Method::DscRsk => "DSC-RSK",
        }
    }

    /// Whether the family has a tunable parameter (`D` or `r`).
    pub fn has_parameter(&self) -> bool {
        matches!(self, Method::Sech | Method::DscRsk)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s
            .chars()
            .filter(|c| c.is_ascii_alphanumeric())
            .map(|c| c.to_ascii_lowercase())
            .collect();
        Ok(match key.as_str() {
            "fd" => Method::Fd,
            "boydfd" | "boyd" => Method::BoydFd,
            "euler" => Method::Euler,
            "meuler" => Method::MEuler,
            "sech" => Method::Sech,
            "sinc" => Method::Sinc,
            "dscrsk" | "dsc" | "rsk" => Method::DscRsk,
            _ => return Err(Error::UnknownScheme(s.to_string())),
        })
    }
}

/// A stencil family together with its parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Scheme {
    Fd,
    Sinc,
    BoydFd { center: BoydCenter, factorials: FactorialMode },
    Euler { factorials: FactorialMode },
    MEuler { factorials: FactorialMode },
    Sech(SechParams),
    DscRsk(RskParams),
}

impl Scheme {
    pub fn boyd_fd() -> Self {
        Scheme::BoydFd {
            center: BoydCenter::Consistent,
            factorials: FactorialMode::LogSpace,
        }
    }

    pub fn euler() -> Self {
        Scheme::Euler {
            factorials: FactorialMode::LogSpace,
        }
    }

    pub fn meuler() -> Self {
        Scheme::MEuler {
            factorials: FactorialMode::LogSpace,
        }
    }

    pub fn sech(d: f64) -> Result<Self> {
        Ok(Scheme::Sech(SechParams::new(d)?))
    }

    pub fn dsc_rsk(r: f64) -> Result<Self> {
        Ok(Scheme::DscRsk(RskParams::new(r)?))
    }

    /// Default scheme for a method; `param` supplies `D` (sech) or `r` (DSC-RSK).
    pub fn from_method(method: Method, param: Option<f64>) -> Result<Self> {
        let need = |name: &str| {
            param.ok_or_else(|| Error::InvalidParameter(format!("{name} needs a parameter")))
        };
        Ok(match method {
            Method::Fd => Scheme::Fd,
            Method::Sinc => Scheme::Sinc,
            Method::BoydFd => Scheme::boyd_fd(),
            Method::Euler => Scheme::euler(),
            Method::MEuler => Scheme::meuler(),
            Method::Sech => Scheme::sech(need("Sech")?)?,
            Method::DscRsk => Scheme::dsc_rsk(need("DSC-RSK")?)?,
        })
    }

    /// Switches the factorial evaluation of accelerated families; other schemes are unchanged.
    pub fn with_factorials(self, mode: FactorialMode) -> Self {
        match self {
            Scheme::BoydFd { center, .. } => Scheme::BoydFd {
                center,
                factorials: mode,
            },
            Scheme::Euler { .. } => Scheme::Euler { factorials: mode },
            Scheme::MEuler { .. } => Scheme::MEuler { factorials: mode },
            other => other,
        }
    }

    pub fn method(&self) -> Method {
        match self {
            Scheme::Fd => Method::Fd,
            Scheme::Sinc => Method::Sinc,
            Scheme::BoydFd { .. } => Method::BoydFd,
            Scheme::Euler { .. } => Method::Euler,
            Scheme::MEuler { .. } => Method::MEuler,
            Scheme::Sech(_) => Method::Sech,
            Scheme::DscRsk(_) => Method::DscRsk,
        }
    }

    pub fn name(&self) -> &'static str {
        self.method().name()
    }

    /// `D` for sech, `r` for DSC-RSK.
    pub fn parameter(&self) -> Option<f64> {
        match self {
            Scheme::Sech(p) => Some(p.d()),
            Scheme::DscRsk(p) => Some(p.r()),
            _ => None,
        }
    }

    pub fn weights(&self, spec: &StencilSpec) -> Result<WeightVector> {
        let m = spec.half_width();
        match *self {
            Scheme::Fd => fd_weights(spec),
            Scheme::Sinc => sinc_weights(spec),
            Scheme::BoydFd { center, factorials } => {
                accelerate(&boyd_fd_acceleration_with(m, center, factorials)?, spec)
            }
            Scheme::Euler { factorials } => accelerate(&euler_acceleration_with(m, factorials)?, spec),
            Scheme::MEuler { factorials } => {
                accelerate(&meuler_acceleration_with(m, factorials)?, spec)
            }
            Scheme::Sech(ref p) => sech_weights(spec, p),
            Scheme::DscRsk(ref p) => dsc_rsk_weights(spec, p),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn method_names_round_trip() {
        for m in Method::ALL {
            assert_eq!(m.name().parse::<Method>().unwrap(), m);
        }
        assert_eq!("dsc_rsk".parse::<Method>().unwrap(), Method::DscRsk);
        assert!("spline".parse::<Method>().is_err());
    }

    #[test]
    fn parameterised_methods_need_a_value() {
        assert!(Scheme::from_method(Method::Sech, None).is_err());
        assert!(Scheme::from_method(Method::DscRsk, Some(-1.0)).is_err());
        let s = Scheme::from_method(Method::DscRsk, Some(2.0)).unwrap();
        assert_eq!(s.parameter(), Some(2.0));
        assert_eq!(Scheme::from_method(Method::Fd, Some(2.0)).unwrap(), Scheme::Fd);
    }

    #[test]
    fn every_first_derivative_stencil_annihilates_constants() {
        let spec = StencilSpec::new(1, 12, 0.05).unwrap();
        for m in Method::ALL {
            let scheme = Scheme::from_method(m, Some(0.25).filter(|_| m == Method::Sech).or(Some(3.0)))
                .unwrap();
            let w = scheme.weights(&spec).unwrap();
            let sum: f64 = w.as_slice().iter().sum();
            assert!(sum.abs() < 1e-12, "{m}: {sum}");
            assert_eq!(w.len(), 25);
        }
    }

    #[test]
    fn every_scheme_differentiates_a_resolved_wave() {
        let h = 2.0 * std::f64::consts::PI / 200.0;
        let k = 5.0;
        for order in 1..=2u8 {
            let spec = StencilSpec::new(order, 10, h).unwrap();
            // truncated sinc converges too slowly in M to be included;
            // Euler's second-derivative stencil does not annihilate constants
            let skip = |m: Method| m == Method::Sinc || (order == 2 && m == Method::Euler);
            for m in Method::ALL.into_iter().filter(|&m| !skip(m)) {
                let param = if m == Method::Sech { 0.25 } else { 2.7 };
                let w = Scheme::from_method(m, Some(param)).unwrap().weights(&spec).unwrap();
                let sym = w.symbol(k * h);
                let exact = num_complex::Complex64::new(0.0, k).powi(order as i32);
                let tol = 1e-2;
                assert!(
                    (sym - exact).norm() < tol * exact.norm(),
                    "{m} n={order}: {sym} vs {exact}"
                );
            }
        }
    }
}
