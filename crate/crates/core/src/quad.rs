//! Gauss–Legendre quadrature: single rules, composite rules, and
//! panels clipped to a finite union of intervals.

use crate::set::FiniteUnionSet;

/// Nodes and weights of the n-point Gauss–Legendre rule on [-1, 1].
///
/// Newton iteration on P_n from the Chebyshev-like initial guesses;
/// accurate to machine precision for the orders used here (n ≤ 1024).
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // Legendre recurrence for P_n(x) and P_n'(x).
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                // one extra polish step
                let mut q0 = 1.0;
                let mut q1 = x;
                for k in 2..=n {
                    let kf = k as f64;
                    let q2 = ((2.0 * kf - 1.0) * x * q1 - (kf - 1.0) * q0) / kf;
                    q0 = q1;
                    q1 = q2;
                }
                dp = n as f64 * (x * q1 - q0) / (x * x - 1.0);
                x -= q1 / dp;
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        // roots come out in descending order from this guess; store ascending
        nodes[n - 1 - i] = x;
        weights[n - 1 - i] = w;
        nodes[i] = -x;
        weights[i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    (nodes, weights)
}

/// n-point rule mapped to [a, b].
pub fn gauss_legendre_on(a: f64, b: f64, n: usize) -> (Vec<f64>, Vec<f64>) {
    let (x, w) = gauss_legendre(n);
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    (
        x.iter().map(|&t| mid + half * t).collect(),
        w.iter().map(|&t| half * t).collect(),
    )
}

/// Composite rule on [a, b]: `n_panels` equal panels with an
/// `order`-point rule on each; `n_panels * order` nodes total.
pub fn composite_on(a: f64, b: f64, n_panels: usize, order: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n_panels >= 1);
    let (xr, wr) = gauss_legendre(order);
    let width = (b - a) / n_panels as f64;
    let mut nodes = Vec::with_capacity(n_panels * order);
    let mut weights = Vec::with_capacity(n_panels * order);
    for p in 0..n_panels {
        let lo = a + p as f64 * width;
        let mid = lo + 0.5 * width;
        let half = 0.5 * width;
        for (&t, &w) in xr.iter().zip(&wr) {
            nodes.push(mid + half * t);
            weights.push(half * w);
        }
    }
    (nodes, weights)
}

/// Quadrature nodes and weights covering a finite union of intervals:
/// each component is split into panels of width at most `max_width`,
/// each carrying an `order`-point rule.
pub fn panels_over_set(set: &FiniteUnionSet, order: usize, max_width: f64) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = Vec::new();
    let mut weights = Vec::new();
    for &(a, b) in set.intervals() {
        let n_panels = ((b - a) / max_width).ceil().max(1.0) as usize;
        let (x, w) = composite_on(a, b, n_panels, order);
        nodes.extend(x);
        weights.extend(w);
    }
    (nodes, weights)
}
