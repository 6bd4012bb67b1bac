use crate::error::{Error, Result};
use crate::stencils::{StencilSpec, WeightVector};

/// Standard finite-difference weights exact for polynomials of degree `<= 2M`.
///
/// Fornberg's recursion over nodes taken in the order `0, 1, -1, 2, -2, …` so every
/// intermediate stencil is nearly centred. The ratio of successive node products is
/// carried in log space; for half-widths in the hundreds the raw products overflow.
pub fn fd_weights(spec: &StencilSpec) -> Result<WeightVector> {
    let m = spec.half_width();
    let order = spec.order() as usize;
    if order > 2 * m {
        return Err(Error::InvalidStencil(format!(
            "order {order} needs more than {} nodes",
            2 * m + 1
        )));
    }
    let z = spec.offset() / spec.h();
    let mut nodes = Vec::with_capacity(2 * m + 1);
    nodes.push(0.0);
    for j in 1..=m {
        nodes.push(j as f64);
        nodes.push(-(j as f64));
    }
    let npts = nodes.len();

    // c[i][k]: weight of node i for derivative k
    let mut c = vec![[0.0_f64; 3]; npts];
    c[0][0] = 1.0;
    let mut ln_c1 = 0.0_f64;
    let mut sign_c1 = 1.0_f64;
    let mut c4 = nodes[0] - z;
    for i in 1..npts {
        let mn = i.min(order);
        let c5 = c4;
        c4 = nodes[i] - z;
        let mut ln_c2 = 0.0_f64;
        let mut sign_c2 = 1.0_f64;
        for j in 0..i {
            let c3 = nodes[i] - nodes[j];
            ln_c2 += c3.abs().ln();
            sign_c2 *= c3.signum();
            if j == i - 1 {
                let ratio = sign_c1 * sign_c2 * (ln_c1 - ln_c2).exp();
                for k in (1..=mn).rev() {
                    c[i][k] = ratio * (k as f64 * c[i - 1][k - 1] - c5 * c[i - 1][k]);
                }
                c[i][0] = -ratio * c5 * c[i - 1][0];
            }
            for k in (1..=mn).rev() {
                c[j][k] = (c4 * c[j][k] - k as f64 * c[j][k - 1]) / c3;
            }
            c[j][0] = c4 * c[j][0] / c3;
        }
        ln_c1 = ln_c2;
        sign_c1 = sign_c2;
    }

    let scale = spec.h().powi(-(order as i32));
    let mut weights = vec![0.0; 2 * m + 1];
    for (node, cw) in nodes.iter().zip(&c) {
        let idx = (*node as isize + m as isize) as usize;
        weights[idx] = cw[order] * scale;
    }
    if spec.is_on_grid() {
        // centred stencils have exact parity; remove the rounding asymmetry
        let odd = order % 2 == 1;
        let half: Vec<f64> = (0..=m)
            .map(|j| {
                let (plus, minus) = (weights[m + j], weights[m - j]);
                if odd {
                    0.5 * (plus - minus)
                } else {
                    0.5 * (plus + minus)
                }
            })
            .collect();
        return Ok(WeightVector::from_half(*spec, &half));
    }
    Ok(WeightVector::from_parts(*spec, weights))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Exact rational arithmetic for the Vandermonde oracle.
    #[derive(Clone, Copy, Debug, PartialEq)]
    struct Q(i128, i128);

    fn gcd(a: i128, b: i128) -> i128 {
        if b == 0 {
            a.abs()
        } else {
            gcd(b, a % b)
        }
    }

    impl Q {
        fn new(n: i128, d: i128) -> Q {
            let g = gcd(n, d).max(1);
            let s = if d < 0 { -1 } else { 1 };
            Q(s * n / g, s * d / g)
        }
        fn sub(self, o: Q) -> Q {
            Q::new(self.0 * o.1 - o.0 * self.1, self.1 * o.1)
        }
        fn mul(self, o: Q) -> Q {
            Q::new(self.0 * o.0, self.1 * o.1)
        }
        fn div(self, o: Q) -> Q {
            Q::new(self.0 * o.1, self.1 * o.0)
        }
        fn f(self) -> f64 {
            self.0 as f64 / self.1 as f64
        }
    }

    /// Solves `Σ_j δ_j j^p = n! [p == n]`, `p = 0..2M`, exactly (unit spacing, on-grid).
    fn vandermonde_oracle(order: usize, m: usize) -> Vec<Q> {
        let npts = 2 * m + 1;
        let xs: Vec<i128> = (-(m as i128)..=m as i128).collect();
        let mut a: Vec<Vec<Q>> = (0..npts)
            .map(|p| {
                let mut row: Vec<Q> = xs.iter().map(|&x| Q::new(x.pow(p as u32), 1)).collect();
                let fact: i128 = (1..=order as i128).product();
                row.push(Q::new(if p == order { fact } else { 0 }, 1));
                row
            })
            .collect();
        for col in 0..npts {
            let piv = (col..npts).find(|&r| a[r][col].0 != 0).unwrap();
            a.swap(col, piv);
            for r in 0..npts {
                if r != col && a[r][col].0 != 0 {
                    let f = a[r][col].div(a[col][col]);
                    for k in col..=npts {
                        a[r][k] = a[r][k].sub(f.mul(a[col][k]));
                    }
                }
            }
        }
        (0..npts).map(|i| a[i][npts].div(a[i][i])).collect()
    }

    fn fd(order: u8, m: usize, h: f64) -> WeightVector {
        fd_weights(&StencilSpec::new(order, m, h).unwrap()).unwrap()
    }

    #[test]
    fn classical_three_point_stencils() {
        assert_eq!(fd(1, 1, 1.0).as_slice(), &[-0.5, 0.0, 0.5]);
        assert_eq!(fd(2, 1, 1.0).as_slice(), &[1.0, -2.0, 1.0]);
    }

    #[test]
    fn five_point_first_derivative_matches_exact_oracle() {
        let oracle = vandermonde_oracle(1, 2);
        let expect = [Q::new(1, 12), Q::new(-2, 3), Q::new(0, 1), Q::new(2, 3), Q::new(-1, 12)];
        assert_eq!(oracle, expect);
        let w = fd(1, 2, 1.0);
        for (a, q) in w.as_slice().iter().zip(&oracle) {
            assert!((a - q.f()).abs() < 1e-15);
        }
    }

    #[test]
    fn matches_exact_oracle_for_small_stencils() {
        for order in 0..=2u8 {
            for m in 1..=4 {
                let oracle = vandermonde_oracle(order as usize, m);
                let w = fd(order, m, 1.0);
                for (a, q) in w.as_slice().iter().zip(&oracle) {
                    assert!((a - q.f()).abs() < 1e-12, "n={order} M={m}: {a} vs {}", q.f());
                }
            }
        }
    }

    #[test]
    fn polynomial_exactness_on_grid_and_off_grid() {
        let h = 0.37;
        for order in 0..=2u8 {
            for m in 1..=4usize {
                for &frac in &[0.0, 0.3, 0.71] {
                    let spec = StencilSpec::new(order, m, h).unwrap().with_offset(frac * h).unwrap();
                    let w = fd_weights(&spec).unwrap();
                    let x0 = frac * h;
                    for p in 0..=(2 * m).min(8) as i32 {
                        let approx: f64 = w.iter().map(|(j, d)| d * (j as f64 * h).powi(p)).sum();
                        let exact = match order {
                            0 => x0.powi(p),
                            1 if p >= 1 => p as f64 * x0.powi(p - 1),
                            2 if p >= 2 => (p * (p - 1)) as f64 * x0.powi(p - 2),
                            _ => 0.0,
                        };
                        let scale = exact.abs().max(1.0);
                        assert!(
                            ((approx - exact) / scale).abs() < 1e-10,
                            "n={order} M={m} off={frac} p={p}: {approx} vs {exact}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn large_stencils_match_closed_form() {
        // centred weights: δ_j = (-1)^{j+1} (M!)^2 / (j (M-j)! (M+j)!)
        for &m in &[50usize, 200, 500] {
            let w1 = fd(1, m, 1.0);
            let w2 = fd(2, m, 1.0);
            let mut center = 0.0;
            for j in 1..=m {
                let ratio = crate::numerics::special::central_ratio(m, j);
                let sgn = if j % 2 == 1 { 1.0 } else { -1.0 };
                let d1 = sgn * ratio / j as f64;
                let d2 = 2.0 * sgn * ratio / (j * j) as f64;
                center -= 2.0 / (j * j) as f64;
                let tol1 = 1e-9 * d1.abs().max(1e-280);
                assert!((w1.get(j as isize) - d1).abs() <= tol1, "M={m} j={j}");
                assert!((w2.get(j as isize) - d2).abs() <= 1e-9 * d2.abs().max(1e-280));
            }
            assert!((w2.get(0) - center).abs() < 1e-10 * center.abs());
        }
    }

    #[test]
    fn rejects_unsupported_order() {
        // the StencilSpec bound already keeps n <= 2 <= 2M
        assert!(StencilSpec::new(3, 1, 1.0).is_err());
    }
}
