use std::f64::consts::PI;

/// Gauss–Legendre nodes and weights on `[a, b]`, nodes ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub interval: (f64, f64),
}

impl QuadratureRule {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn integrate<F: FnMut(f64) -> f64>(&self, mut f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

/// `(P_n(x), P_n'(x))` by the three-term recurrence.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// Root `i` (1-based, by decreasing abscissa) of `P_n`.
///
/// Newton iteration safeguarded by bisection inside the bracket given by Bruns'
/// inequality `(i - 1/2)π/(n + 1/2) < θ_i < iπ/(n + 1/2)`, `x_i = cos θ_i`.
fn legendre_root(n: usize, i: usize) -> f64 {
    let nf = n as f64 + 0.5;
    let mut lo = (i as f64 * PI / nf).cos();
    let mut hi = ((i as f64 - 0.5) * PI / nf).cos();
    let p_lo = legendre(n, lo).0;
    let mut x = ((i as f64 - 0.25) * PI / nf).cos();
    for _ in 0..100 {
        let (p, dp) = legendre(n, x);
        if p == 0.0 {
            return x;
        }
        if (p > 0.0) == (p_lo > 0.0) {
            lo = x;
        } else {
            hi = x;
        }
        let mut next = x - p / dp;
        if !(next > lo && next < hi) {
            next = 0.5 * (lo + hi);
        }
        if (next - x).abs() <= 4.0 * f64::EPSILON * x.abs().max(1e-300) {
            return next;
        }
        x = next;
    }
    x
}

/// Gauss–Legendre rule with `npoints` nodes on `[a, b]`.
///
/// Exact for polynomials of degree `<= 2 npoints - 1`.
///
/// # Panics
/// If `npoints == 0` or `a >= b`.
pub fn gauss_legendre(npoints: usize, a: f64, b: f64) -> QuadratureRule {
    assert!(npoints >= 1, "need at least one node");
    assert!(a < b, "interval must satisfy a < b");
    let n = npoints;
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    for i in 1..=n.div_ceil(2) {
        let root = if n % 2 == 1 && i == n.div_ceil(2) {
            0.0
        } else {
            legendre_root(n, i)
        };
        let (_, dp) = legendre(n, root);
        let weight = 2.0 / ((1.0 - root * root) * dp * dp);
        // ascending order: the largest root goes last
        x[n - i] = root;
        x[i - 1] = -root;
        w[n - i] = weight;
        w[i - 1] = weight;
    }
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    QuadratureRule {
        nodes: x.iter().map(|&t| mid + half * t).collect(),
        weights: w.iter().map(|&wt| wt * half).collect(),
        interval: (a, b),
    }
}
