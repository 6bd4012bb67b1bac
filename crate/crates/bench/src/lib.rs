//! Fixtures shared by the criterion benchmarks.

use stencil_core::harness::preset;
use stencil_core::problems::{catalog, Overrides, Stencils};
use stencil_core::stencils::Method;
use stencil_core::{Experiment, ProblemSpec, Scheme, StencilSpec};

/// Representative parameter for each family at half-width `m`.
pub fn scheme(method: Method, m: usize) -> Scheme {
    let param = match method {
        Method::DscRsk => Some(preset(Experiment::HelmConst).r_for(m).unwrap_or(0.2 * m as f64 + 3.0)),
        Method::Sech => Some(0.28),
        _ => None,
    };
    Scheme::from_method(method, param).expect("valid parameter")
}

/// `(label, scheme, spec)` for first- and second-derivative weights at several widths.
pub fn weight_cases(widths: &[usize]) -> Vec<(String, Scheme, StencilSpec)> {
    let mut out = Vec::new();
    for &method in &Method::ALL {
        for &m in widths {
            for order in [1u8, 2] {
                let spec = StencilSpec::new(order, m, 0.1).expect("valid stencil");
                out.push((format!("{}/n{order}/M{m}", method.name()), scheme(method, m), spec));
            }
        }
    }
    out
}

/// A problem with its weights already generated, ready to time the solve alone.
pub struct SolveCase {
    pub label: String,
    pub spec: ProblemSpec,
    pub stencils: Stencils,
}

/// One reduced-size case per experiment so a full bench run stays short.
pub fn solve_cases() -> Vec<SolveCase> {
    let cases: [(Experiment, usize, Overrides); 6] = [
        (Experiment::DiffMediumK, 30, Overrides::default()),
        (Experiment::BvpBoyd, 20, Overrides::default()),
        (Experiment::BvpConfined, 40, Overrides::default()),
        (Experiment::HelmConst, 50, Overrides { n: Some(201), ..Default::default() }),
        (Experiment::HypFew, 20, Overrides { t_end: Some(0.01), ..Default::default() }),
        (Experiment::EigenHo, 50, Overrides::default()),
    ];
    cases
        .into_iter()
        .map(|(e, m, o)| {
            let spec = catalog(e.name(), &o).expect("catalog entry");
            let stencils = spec.stencils(&scheme(Method::DscRsk, m), m).expect("weights");
            SolveCase { label: format!("{}/M{m}", e.name()), spec, stencils }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_fixtures_are_finite() {
        for (label, scheme, spec) in weight_cases(&[4, 16]) {
            assert!(scheme.weights(&spec).unwrap().is_finite(), "{label}");
        }
    }

    #[test]
    fn solve_fixtures_solve() {
        for case in solve_cases() {
            let o = case.spec.solve(&case.stencils).unwrap();
            assert!(o.error.is_finite(), "{}", case.label);
        }
    }
}
