use crate::numerics::Scalar;

/// One classical fourth-order Runge–Kutta step of `y' = f(t, y)`.
pub fn rk4_step<T: Scalar, F: FnMut(f64, &[T]) -> Vec<T>>(mut f: F, t: f64, y: &[T], dt: f64) -> Vec<T> {
    let axpy = |a: f64, x: &[T]| -> Vec<T> { y.iter().zip(x).map(|(&yi, &xi)| yi + xi * a).collect() };
    let k1 = f(t, y);
    let k2 = f(t + 0.5 * dt, &axpy(0.5 * dt, &k1));
    let k3 = f(t + 0.5 * dt, &axpy(0.5 * dt, &k2));
    let k4 = f(t + dt, &axpy(dt, &k3));
    let sixth = dt / 6.0;
    y.iter()
        .enumerate()
        .map(|(i, &yi)| yi + (k1[i] + (k2[i] + k3[i]) * 2.0 + k4[i]) * sixth)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    #[test]
    fn zero_field_is_stationary() {
        let y = vec![1.0, -2.0, 3.5];
        assert_eq!(rk4_step(|_, y: &[f64]| vec![0.0; y.len()], 0.0, &y, 0.3), y);
    }

    #[test]
    fn exponential_growth() {
        let y = rk4_step(|_, y: &[f64]| y.to_vec(), 0.0, &[1.0], 0.1)[0];
        // Taylor polynomial of degree 4
        let taylor = 1.0 + 0.1 + 0.01 / 2.0 + 0.001 / 6.0 + 0.0001 / 24.0;
        assert!((y - taylor).abs() < 1e-15);
        assert!((y - 0.1f64.exp()).abs() < 1e-7);
        assert!((y - 1.105170833).abs() < 1e-9);
    }

    #[test]
    fn fifth_order_local_error() {
        // y' = -2 y cos t: y = exp(-2 sin t)
        let step = |dt: f64| {
            let y = rk4_step(|t, y: &[f64]| vec![-2.0 * t.cos() * y[0]], 0.3, &[(-2.0 * 0.3f64.sin()).exp()], dt)[0];
            (y - (-2.0 * (0.3 + dt).sin()).exp()).abs()
        };
        let ratio = step(0.02) / step(0.01);
        assert!(ratio > 25.0 && ratio < 40.0, "ratio {ratio}");
    }

    #[test]
    fn complex_rotation() {
        let i = Complex64::new(0.0, 1.0);
        let mut y = vec![Complex64::new(1.0, 0.0)];
        let dt = 0.01;
        for n in 0..100 {
            y = rk4_step(|_, y: &[Complex64]| vec![i * y[0]], n as f64 * dt, &y, dt);
        }
        assert!((y[0] - Complex64::from_polar(1.0, 1.0)).norm() < 1e-9);
    }
}
