use std::f64::consts::PI;

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::numerics::{gauss_legendre, svd_lstsq};
use crate::stencils::{StencilSpec, WeightVector};

/// Width constant and solver settings of the sech-weighted least-squares stencil.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SechParams {
    d: f64,
    quadrature_nodes: usize,
    svd_truncation: f64,
}

impl SechParams {
    /// 512 quadrature nodes and a `1e-12` relative singular-value cutoff.
    pub fn new(d: f64) -> Result<Self> {
        if !(d > 0.0) || !d.is_finite() {
            return Err(Error::InvalidParameter(format!("sech width D must be positive, got {d}")));
        }
        Ok(Self {
            d,
            quadrature_nodes: 512,
            svd_truncation: 1e-12,
        })
    }

    pub fn with_quadrature_nodes(mut self, nodes: usize) -> Result<Self> {
        if nodes < 2 {
            return Err(Error::InvalidParameter("at least two quadrature nodes required".into()));
        }
        self.quadrature_nodes = nodes;
        Ok(self)
    }

    pub fn with_svd_truncation(mut self, truncation: f64) -> Result<Self> {
        if !(truncation > 0.0 && truncation < 1.0) {
            return Err(Error::InvalidParameter(format!(
                "SVD truncation must lie in (0, 1), got {truncation}"
            )));
        }
        self.svd_truncation = truncation;
        Ok(self)
    }

    pub fn d(&self) -> f64 {
        self.d
    }

    pub fn quadrature_nodes(&self) -> usize {
        self.quadrature_nodes
    }

    pub fn svd_truncation(&self) -> f64 {
        self.svd_truncation
    }

    /// `ω(K) = sech(Kπ / 2D)`.
    pub fn omega(&self, k: f64) -> f64 {
        1.0 / (k * PI / (2.0 * self.d)).cosh()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    /// `φ_j = sin(jK)`, `j = 1..M`.
    Odd,
    /// `φ_j = cos(jK)`, `j = 0..M`.
    Even,
}

impl Parity {
    pub fn of_order(order: u8) -> Self {
        if order % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    /// Frequencies `j` of the basis functions, in row order.
    pub fn frequencies(&self, half_width: usize) -> std::ops::RangeInclusive<usize> {
        match self {
            Parity::Odd => 1..=half_width,
            Parity::Even => 0..=half_width,
        }
    }

    pub fn basis(&self, j: usize, k: f64) -> f64 {
        match self {
            Parity::Odd => (j as f64 * k).sin(),
            Parity::Even => (j as f64 * k).cos(),
        }
    }
}

/// Weighted normal equations `G c = χ` for the stencil symbol on `[-π, π]`.
///
/// `G_{ij} = ∫ φ_i φ_j ω dK`, `χ_i = ∫ φ_i τ ω dK` with target symbol `τ(K) = K`
/// (odd) or `-K²` (even), where `Σ_j δ_j e^{ijK} = i·Σ c_j φ_j` or `Σ c_j φ_j`.
#[derive(Debug, Clone, PartialEq)]
pub struct GramSystem {
    pub g: DMatrix<f64>,
    pub chi: Vec<f64>,
    pub parity: Parity,
    pub d: f64,
}

impl GramSystem {
    pub fn dim(&self) -> usize {
        self.chi.len()
    }
}

fn target(parity: Parity, k: f64) -> f64 {
    match parity {
        Parity::Odd => k,
        Parity::Even => -k * k,
    }
}

pub fn sech_gram_system(order: u8, half_width: usize, params: &SechParams) -> Result<GramSystem> {
    if order == 0 || order > 2 {
        return Err(Error::Unsupported {
            scheme: "sech",
            what: format!("derivative order {order}"),
        });
    }
    let parity = Parity::of_order(order);
    let freqs: Vec<usize> = parity.frequencies(half_width).collect();
    let rule = gauss_legendre(params.quadrature_nodes, -PI, PI);
    let nq = rule.len();
    let nb = freqs.len();

    // rows: basis functions scaled by sqrt(weight·ω)
    let mut phi = DMatrix::<f64>::zeros(nb, nq);
    let mut chi = vec![0.0; nb];
    for (q, (&k, &wq)) in rule.nodes.iter().zip(&rule.weights).enumerate() {
        let wo = wq * params.omega(k);
        let sw = wo.sqrt();
        let tau = target(parity, k);
        for (i, &j) in freqs.iter().enumerate() {
            let b = parity.basis(j, k);
            phi[(i, q)] = b * sw;
            chi[i] += b * tau * wo;
        }
    }
    let mut g = &phi * phi.transpose();
    // exact symmetry
    for i in 0..nb {
        for j in (i + 1)..nb {
            let avg = 0.5 * (g[(i, j)] + g[(j, i)]);
            g[(i, j)] = avg;
            g[(j, i)] = avg;
        }
    }
    Ok(GramSystem {
        g,
        chi,
        parity,
        d: params.d,
    })
}

/// Sech spectrally-weighted stencil: the least-squares fit of the exact symbol under
/// `ω(K) = sech(Kπ/2D)`, solved by truncated SVD.
pub fn sech_weights(spec: &StencilSpec, params: &SechParams) -> Result<WeightVector> {
    if !spec.is_on_grid() {
        return Err(Error::Unsupported {
            scheme: "sech",
            what: "off-grid evaluation".into(),
        });
    }
    let m = spec.half_width();
    let system = sech_gram_system(spec.order(), m, params)?;
    let coef = svd_lstsq(&system.g, &system.chi, params.svd_truncation).map_err(|e| match e {
        Error::AllSingular => Error::DegenerateGram,
        other => other,
    })?;
    let scale = spec.h().powi(-(spec.order() as i32));
    let mut half = vec![0.0; m + 1];
    match system.parity {
        Parity::Odd => {
            for (j, c) in (1..=m).zip(&coef) {
                half[j] = 0.5 * c * scale;
            }
        }
        Parity::Even => {
            half[0] = coef[0] * scale;
            for j in 1..=m {
                half[j] = 0.5 * coef[j] * scale;
            }
        }
    }
    Ok(WeightVector::from_half(*spec, &half))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::sym_eigen;
    use crate::stencils::sinc_weights;

    fn simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, intervals: usize) -> f64 {
        let h = (b - a) / intervals as f64;
        let mut s = f(a) + f(b);
        for i in 1..intervals {
            let x = a + i as f64 * h;
            s += if i % 2 == 1 { 4.0 } else { 2.0 } * f(x);
        }
        s * h / 3.0
    }

    #[test]
    fn parity_for_preset_widths() {
        for &d in &[0.17, 0.18, 0.25, 0.28, 0.36] {
            let p = SechParams::new(d).unwrap();
            for m in (1..=100).step_by(3).chain([100]) {
                let w1 = sech_weights(&StencilSpec::new(1, m, 1.0).unwrap(), &p).unwrap();
                let w2 = sech_weights(&StencilSpec::new(2, m, 1.0).unwrap(), &p).unwrap();
                assert_eq!(w1.get(0), 0.0);
                for j in 1..=m as isize {
                    assert_eq!(w1.get(-j), -w1.get(j));
                    assert_eq!(w2.get(-j), w2.get(j));
                }
                assert!(w1.is_finite() && w2.is_finite());
            }
        }
    }

    #[test]
    fn flat_weight_limit_is_truncated_sinc() {
        // ω → 1: the unweighted fit; orthogonal sines give c_j = 2(-1)^{j+1}/j
        let p = SechParams::new(1e7).unwrap();
        let spec = StencilSpec::new(1, 2, 1.0).unwrap();
        let w = sech_weights(&spec, &p).unwrap();

        // independent oracle: Simpson-integrated 2x2 normal equations
        let intervals = 100_000;
        let g11 = simpson(|k| k.sin().powi(2), -PI, PI, intervals);
        let g12 = simpson(|k| k.sin() * (2.0 * k).sin(), -PI, PI, intervals);
        let g22 = simpson(|k| (2.0 * k).sin().powi(2), -PI, PI, intervals);
        let c1 = simpson(|k| k.sin() * k, -PI, PI, intervals);
        let c2 = simpson(|k| (2.0 * k).sin() * k, -PI, PI, intervals);
        let det = g11 * g22 - g12 * g12;
        let x1 = (c1 * g22 - c2 * g12) / det;
        let x2 = (g11 * c2 - g12 * c1) / det;
        assert!((w.get(1) - 0.5 * x1).abs() < 1e-8, "{} vs {}", w.get(1), 0.5 * x1);
        assert!((w.get(2) - 0.5 * x2).abs() < 1e-8);

        let sinc = sinc_weights(&spec).unwrap();
        for (a, b) in w.as_slice().iter().zip(sinc.as_slice()) {
            assert!((a - b).abs() < 1e-8);
        }
    }

    #[test]
    fn gram_entries_match_dense_simpson() {
        let p = SechParams::new(0.25).unwrap();
        for (order, m) in [(1u8, 20usize), (2, 20), (1, 3), (2, 7)] {
            let sys = sech_gram_system(order, m, &p).unwrap();
            let freqs: Vec<usize> = sys.parity.frequencies(m).collect();
            for (a, &i) in freqs.iter().enumerate() {
                for (b, &j) in freqs.iter().enumerate().skip(a) {
                    let oracle = simpson(
                        |k| sys.parity.basis(i, k) * sys.parity.basis(j, k) * p.omega(k),
                        -PI,
                        PI,
                        100_000,
                    );
                    assert!((sys.g[(a, b)] - oracle).abs() < 1e-12, "G[{i},{j}]");
                }
                let oracle = simpson(
                    |k| sys.parity.basis(i, k) * target(sys.parity, k) * p.omega(k),
                    -PI,
                    PI,
                    100_000,
                );
                assert!((sys.chi[a] - oracle).abs() < 1e-12, "chi[{i}]");
            }
        }
    }

    #[test]
    fn gram_is_symmetric_positive_semidefinite() {
        for &d in &[0.17, 0.36] {
            let p = SechParams::new(d).unwrap();
            for (order, m) in [(1u8, 40usize), (2, 40), (2, 150)] {
                let sys = sech_gram_system(order, m, &p).unwrap();
                assert_eq!(sys.g, sys.g.transpose());
                let eig = sym_eigen(&sys.g).unwrap();
                let top = eig.values[eig.values.len() - 1];
                assert!(eig.values.iter().all(|&l| l >= -1e-13 * top));
            }
        }
    }

    #[test]
    fn second_derivative_symbol_in_passband() {
        let p = SechParams::new(0.25).unwrap();
        let w = sech_weights(&StencilSpec::new(2, 8, 1.0).unwrap(), &p).unwrap();
        // golden residual curve |Σδ_j e^{ijK} + K²| at K = iπ/10
        let golden = [
            9.03986068535173e-6,
            5.156169324033177e-6,
            1.0105166369789309e-5,
            4.6370578107524096e-5,
            9.07959264222491e-5,
            1.146095687012405e-4,
            2.1880186649942956e-3,
            1.2442100003447365e-2,
            3.834118946979448e-2,
            3.0788630093679714e-2,
            1.0312798241929766,
        ];
        for (i, g) in golden.into_iter().enumerate() {
            let k = i as f64 * PI / 10.0;
            let sym = w.symbol(k);
            let res = (sym.re + k * k).abs();
            assert!(sym.im.abs() < 1e-12);
            assert!((res - g).abs() < 1e-6 * g + 1e-10, "K={i}π/10: residual {res} vs {g}");
        }
        // passband: relative symbol error below 1e-3 up to K = π/2
        for i in 1..=50 {
            let k = i as f64 * PI / 100.0;
            assert!((w.symbol(k).re + k * k).abs() < 1e-3 * k * k + 1e-5);
        }
    }

    #[test]
    fn input_validation() {
        assert!(SechParams::new(0.0).is_err());
        let p = SechParams::new(0.2).unwrap();
        assert!(p.with_quadrature_nodes(1).is_err());
        assert!(p.with_svd_truncation(0.0).is_err());
        assert!(sech_gram_system(0, 3, &p).is_err());
        let off = StencilSpec::new(1, 3, 1.0).unwrap().with_offset(0.1).unwrap();
        assert!(sech_weights(&off, &p).is_err());
    }
}
