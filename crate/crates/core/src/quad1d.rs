//! One-dimensional Gauss quadrature rules.
//!
//! Two rules cover everything the grids need: Gauss–Legendre on [-1, 1]
//! (weight 1) and Gauss–Chebyshev of the second kind (weight √(1-t²),
//! closed-form nodes). An n-point rule integrates polynomials of degree
//! ≤ 2n-1 exactly against its weight.

/// Nodes and weights of a quadrature rule on [-1, 1].
#[derive(Debug, Clone)]
pub struct Rule1d {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl Rule1d {
    /// Apply the rule to samples taken at `self.nodes`.
    pub fn integrate_samples(&self, samples: &[f64]) -> f64 {
        assert_eq!(samples.len(), self.nodes.len());
        self.weights
            .iter()
            .zip(samples)
            .map(|(w, f)| w * f)
            .sum()
    }

    /// Apply the rule to a function.
    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

/// Gauss–Legendre rule with `n` nodes. Weights sum to 2.
pub fn gauss_legendre(n: usize) -> Rule1d {
    assert!(n >= 1, "gauss_legendre needs at least one node");
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Tricomi-style initial guess, then Newton on P_n.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (_, dp) = legendre_with_derivative(n, x);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
        let (_, d) = legendre_with_derivative(n, 0.0);
        weights[n / 2] = 2.0 / (d * d);
    }
    Rule1d { nodes, weights }
}

/// Gauss–Chebyshev rule of the second kind with `n` nodes: integrates
/// f against √(1-t²) dt on [-1, 1]. Weights sum to π/2.
pub fn gauss_chebyshev_u(n: usize) -> Rule1d {
    assert!(n >= 1, "gauss_chebyshev_u needs at least one node");
    let mut nodes = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    let nf = n as f64 + 1.0;
    for i in 1..=n {
        let phi = std::f64::consts::PI * i as f64 / nf;
        nodes.push(phi.cos());
        weights.push(std::f64::consts::PI / nf * phi.sin() * phi.sin());
    }
    Rule1d { nodes, weights }
}

/// Legendre polynomial P_n and its derivative at x, by the three-term
/// recurrence.
pub fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    if n == 0 {
        return (1.0, 0.0);
    }
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    // P'_n(x) = n (x P_n - P_{n-1}) / (x² - 1)
    let d = if (x * x - 1.0).abs() < 1e-300 {
        // endpoint formula, only reachable if a caller asks for x = ±1
        x.signum().powi(n as i32 + 1) * n as f64 * (n as f64 + 1.0) / 2.0
    } else {
        n as f64 * (x * p1 - p0) / (x * x - 1.0)
    };
    (p1, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn legendre_weights_sum_to_two() {
        for n in [1, 2, 5, 16, 33, 64, 128] {
            let r = gauss_legendre(n);
            let s: f64 = r.weights.iter().sum();
            assert!((s - 2.0).abs() < 1e-13, "n={n}, sum={s}");
        }
    }

    #[test]
    fn legendre_exact_for_polynomials() {
        // n nodes integrate degree 2n-1 exactly: ∫ x^{2m} = 2/(2m+1).
        let r = gauss_legendre(9);
        for m in 0..9 {
            let exact = 2.0 / (2.0 * m as f64 + 1.0);
            let got = r.integrate(|x| x.powi(2 * m));
            assert!((got - exact).abs() < 1e-13, "m={m}: {got} vs {exact}");
        }
        let odd = r.integrate(|x| x.powi(7));
        assert!(odd.abs() < 1e-15);
    }

    #[test]
    fn chebyshev_u_moments() {
        // ∫ √(1-t²) dt = π/2, ∫ t² √(1-t²) dt = π/8.
        let r = gauss_chebyshev_u(8);
        assert!((r.integrate(|_| 1.0) - std::f64::consts::PI / 2.0).abs() < 1e-13);
        assert!((r.integrate(|t| t * t) - std::f64::consts::PI / 8.0).abs() < 1e-13);
        // Chebyshev-U orthogonality: ∫ U_2 U_4 √(1-t²) = 0.
        let u2 = |t: f64| 4.0 * t * t - 1.0;
        let u4 = |t: f64| 16.0 * t.powi(4) - 12.0 * t * t + 1.0;
        assert!(r.integrate(|t| u2(t) * u4(t)).abs() < 1e-13);
    }

    #[test]
    fn legendre_large_rule_accuracy() {
        let r = gauss_legendre(128);
        // smooth non-polynomial integrand: ∫ e^t dt = e - 1/e
        let exact = std::f64::consts::E - 1.0 / std::f64::consts::E;
        assert!((r.integrate(f64::exp) - exact).abs() < 1e-14);
    }
}
