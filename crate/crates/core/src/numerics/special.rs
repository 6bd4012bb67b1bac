//! Factorial ratios used by the sum-acceleration weights.
//!
//! The ratios are formed in log space so that nothing overflows for half-widths in
//! the hundreds. [`saturating_factorial`] reproduces the alternative behaviour of a
//! double-precision gamma routine that clamps to the largest finite double once `n!`
//! no longer fits, which is what made published Euler and Boyd-FD tables break down
//! at large stencils.

/// `ln(n! / m!)` for `n >= m`, as a telescoped sum of logarithms.
pub fn ln_factorial_ratio(n: usize, m: usize) -> f64 {
    assert!(n >= m, "ln_factorial_ratio requires n >= m");
    ((m + 1)..=n).map(|i| (i as f64).ln()).sum()
}

/// `ln((M!)^2 / ((M-j)! (M+j)!))`, always `<= 0`.
///
/// Written as `sum_{i=1..j} ln((M-j+i)/(M+i))`, each term through `ln_1p` to keep the
/// relative accuracy of the exponentiated ratio near machine precision.
pub fn ln_central_ratio(m: usize, j: usize) -> f64 {
    assert!(j <= m);
    (1..=j)
        .map(|i| (-(j as f64) / ((m + i) as f64)).ln_1p())
        .sum()
}

/// `(M!)^2 / ((M-j)! (M+j)!)` as a rescaled product of `j` ratios.
///
/// Relative error grows like `√j ε`, well under the `j ε` of exponentiating
/// [`ln_central_ratio`]. Values below the double range round to zero.
pub fn central_ratio(m: usize, j: usize) -> f64 {
    assert!(j <= m);
    const SCALE: f64 = 1.0e150;
    let mut acc = 1.0_f64;
    let mut rescales = 0i32;
    for i in 1..=j {
        acc *= (m - j + i) as f64 / (m + i) as f64;
        if acc < 1.0e-150 {
            acc *= SCALE;
            rescales += 1;
        }
    }
    for _ in 0..rescales {
        acc /= SCALE;
    }
    acc
}

/// `ln C(n, k)`.
pub fn ln_binomial(n: usize, k: usize) -> f64 {
    assert!(k <= n);
    let k = k.min(n - k);
    (1..=k)
        .map(|i| ((n - k + i) as f64 / i as f64).ln())
        .sum()
}

/// `n!` in double precision, clamped to `f64::MAX` once the true value overflows.
pub fn saturating_factorial(n: usize) -> f64 {
    let mut acc = 1.0_f64;
    for i in 2..=n {
        acc *= i as f64;
        if !acc.is_finite() {
            return f64::MAX;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ratios_are_exact() {
        assert!((ln_factorial_ratio(5, 2).exp() - 60.0).abs() < 1e-12);
        assert!((ln_central_ratio(2, 1).exp() - 2.0 / 3.0).abs() < 1e-15);
        assert!((ln_central_ratio(2, 2).exp() - 1.0 / 6.0).abs() < 1e-15);
        assert!((ln_binomial(10, 3).exp() - 120.0).abs() < 1e-11);
        assert_eq!(ln_central_ratio(7, 0), 0.0);
    }

    /// Double-double product of exact integer quotients: an independent high-precision oracle.
    fn dd_central_ratio(m: usize, j: usize) -> (f64, i32) {
        let (mut hi, mut lo, mut exp2) = (1.0_f64, 0.0_f64, 0i32);
        for i in 1..=j {
            let (n, d) = ((m - j + i) as f64, (m + i) as f64);
            let q = n / d;
            let ql = (-q).mul_add(d, n) / d;
            let p = hi * q;
            let pl = hi.mul_add(q, -p) + hi * ql + lo * q;
            hi = p + pl;
            lo = pl - (hi - p);
            if hi < 1e-100 {
                hi *= 2f64.powi(300);
                lo *= 2f64.powi(300);
                exp2 -= 300;
            }
        }
        (hi + lo, exp2)
    }

    #[test]
    fn central_ratio_matches_double_double_oracle() {
        for &(m, j) in &[(500usize, 1usize), (500, 37), (300, 300), (120, 60), (500, 500), (50, 25)] {
            let (mant, exp2) = dd_central_ratio(m, j);
            let oracle = mant * 2f64.powi(exp2);
            let got = central_ratio(m, j);
            assert!(((got - oracle) / oracle).abs() < 1e-13, "m={m} j={j}: {got} vs {oracle}");
            let via_log = ln_central_ratio(m, j);
            let ln_oracle = mant.ln() + exp2 as f64 * std::f64::consts::LN_2;
            assert!((via_log - ln_oracle).abs() < 1e-12 * ln_oracle.abs().max(1.0));
        }
        assert_eq!(central_ratio(600, 600), 0.0);
        assert!(central_ratio(600, 500) > 0.0);
    }

    #[test]
    fn saturating_factorial_clamps() {
        assert_eq!(saturating_factorial(0), 1.0);
        assert_eq!(saturating_factorial(5), 120.0);
        assert!(saturating_factorial(170).is_finite());
        assert!(saturating_factorial(170) < f64::MAX);
        assert_eq!(saturating_factorial(171), f64::MAX);
        assert_eq!(saturating_factorial(500), f64::MAX);
    }
}
