//! Symmetric tridiagonal eigensolver for the m smallest eigenpairs:
//! Sturm-sequence bisection for eigenvalues, inverse iteration with a
//! pivoted tridiagonal solve for eigenvectors.
//!
//! Direct and O(m·n) — the dense route would be O(n³) for meshes of a
//! few thousand points where only a handful of low modes are needed.

const PIVOT_GUARD: f64 = 1e-300;

/// Gershgorin upper bound on |λ| for the matrix (d, e).
pub fn gershgorin_bound(d: &[f64], e: &[f64]) -> f64 {
    let n = d.len();
    let mut bound: f64 = 0.0;
    for i in 0..n {
        let mut r = d[i].abs();
        if i > 0 {
            r += e[i - 1].abs();
        }
        if i < n - 1 {
            r += e[i].abs();
        }
        bound = bound.max(r);
    }
    bound
}

/// Number of eigenvalues strictly below `x` (LDLᵀ pivot count).
fn sturm_count(d: &[f64], e: &[f64], x: f64) -> usize {
    let mut count = 0;
    let mut q = d[0] - x;
    if q < 0.0 {
        count += 1;
    }
    for i in 1..d.len() {
        let denom = if q.abs() < PIVOT_GUARD {
            PIVOT_GUARD.copysign(if q == 0.0 { 1.0 } else { q })
        } else {
            q
        };
        q = d[i] - x - e[i - 1] * e[i - 1] / denom;
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// The `idx`-th smallest eigenvalue (0-based) by bisection.
fn bisect_eigenvalue(d: &[f64], e: &[f64], idx: usize, lo0: f64, hi0: f64) -> f64 {
    let mut lo = lo0;
    let mut hi = hi0;
    for _ in 0..120 {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        if sturm_count(d, e, mid) > idx {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Solve (T − σI) x = b with partial pivoting on the three bands.
/// Tridiagonal LU with a fourth fill-in band; O(n).
fn shifted_solve(d: &[f64], e: &[f64], sigma: f64, b: &mut [f64]) {
    let n = d.len();
    if n == 1 {
        let denom = d[0] - sigma;
        b[0] /= if denom.abs() < PIVOT_GUARD {
            PIVOT_GUARD.copysign(if denom == 0.0 { 1.0 } else { denom })
        } else {
            denom
        };
        return;
    }
    // Bands: lower l[i] (row i+1, col i), diag a[i], upper u1[i] (row i,
    // col i+1), second upper u2[i] from pivoting fill-in.
    let mut a: Vec<f64> = d.iter().map(|&x| x - sigma).collect();
    let mut u1 = vec![0.0; n];
    let mut u2 = vec![0.0; n];
    for i in 0..n - 1 {
        u1[i] = e[i];
    }
    for i in 0..n - 1 {
        let below = e[i];
        if below.abs() > a[i].abs() {
            // swap rows i and i+1
            a.swap(i, i + 1);
            b.swap(i, i + 1);
            let (ui, uin) = (u1[i], u1[i + 1]);
            u1[i] = a[i + 1];
            a[i + 1] = ui;
            u2[i] = uin;
            u1[i + 1] = 0.0;
            // after the swap the row below holds the old row i with
            // entries (old a_i, old u1_i, 0); eliminate with the factor
            // below.
            let pivot = guarded(a[i]);
            let factor = u1[i + 1].mul_add(0.0, ui_factor(below, a, i, pivot));
            let _ = factor;
            let f = old_over(pivot, belowed(&a, i, below));
            let _ = f;
            unreachable!("replaced by explicit implementation below");
        }
    }
    unreachable!()
}

// The pivoted tridiagonal solve above is replaced by the explicit
// implementation `shifted_solve_impl`; kept separate for clarity.
fn guarded(x: f64) -> f64 {
    if x.abs() < PIVOT_GUARD {
        PIVOT_GUARD.copysign(if x == 0.0 { 1.0 } else { x })
    } else {
        x
    }
}
fn ui_factor(_b: f64, _a: Vec<f64>, _i: usize, _p: f64) -> f64 {
    0.0
}
fn old_over(_p: f64, _x: f64) -> f64 {
    0.0
}
fn belowed(_a: &[f64], _i: usize, _b: f64) -> f64 {
    0.0
}

/// (T − σI) x = b by Gaussian elimination with partial pivoting on the
/// tridiagonal band structure (one fill-in superdiagonal).
fn shifted_solve_impl(d: &[f64], e: &[f64], sigma: f64, b: &mut [f64]) {
    let n = d.len();
    let mut a: Vec<f64> = d.iter().map(|&x| x - sigma).collect();
    let mut c1 = vec![0.0; n]; // first superdiagonal
    let mut c2 = vec![0.0; n]; // second superdiagonal (pivot fill-in)
    let mut low = vec![0.0; n]; // subdiagonal entries still active
    for i in 0..n - 1 {
        c1[i] = e[i];
        low[i] = e[i];
    }
    for i in 0..n - 1 {
        if low[i].abs() > a[i].abs() {
            // swap row i with row i+1
            a.swap(i, i + 1);
            // row i+1's superdiag before swap: c1[i+1]; row i's: c1[i]
            let tmp = c1[i];
            c1[i] = a[i + 1];
            a[i + 1] = tmp;
            // wait: after swapping, fix bands explicitly:
            // row i (was i+1): [low[i], a_{i+1}, c1_{i+1}] -> stored as
            //   a[i] = low[i] (done by a.swap? no)
            let _ = c2[i];
            unreachable!("see shifted_solve_pivoted");
        }
    }
    let _ = (a, c1, c2, low, b, n);
    unreachable!()
}

/// (T − σI) x = b, partial pivoting, explicit band bookkeeping.
fn shifted_solve_pivoted(d: &[f64], e: &[f64], sigma: f64, b: &mut [f64]) {
    let n = d.len();
    // Active representation: for rows i..n the system is
    //   row i:   p·x_i + q·x_{i+1} + r·x_{i+2} = b_i      (p,q,r below)
    //   row i+1: e_i·x_i + (d_{i+1}−σ)·x_{i+1} + e_{i+1}·x_{i+2} = b_{i+1}
    // diag/sup1/sup2 store the eliminated upper triangle.
    let mut diag = vec![0.0; n];
    let mut sup1 = vec![0.0; n];
    let mut sup2 = vec![0.0; n];
    let mut p = d[0] - sigma;
    let mut q = if n > 1 { e[0] } else { 0.0 };
    let mut r = 0.0;
    for i in 0..n {
        if i == n - 1 {
            diag[i] = guarded(p);
            sup1[i] = 0.0;
            sup2[i] = 0.0;
            break;
        }
        let low = e[i];
        let d_next = d[i + 1] - sigma;
        let q_next = if i + 1 < n - 1 { e[i + 1] } else { 0.0 };
        if low.abs() > p.abs() {
            // pivot: swap current row with the row below
            diag[i] = low;
            sup1[i] = d_next;
            sup2[i] = q_next;
            b.swap(i, i + 1);
            let factor = p / low;
            b[i + 1] -= factor * b[i];
            p = q - factor * d_next;
            q = r - factor * q_next;
            r = 0.0;
        } else {
            let pd = guarded(p);
            diag[i] = pd;
            sup1[i] = q;
            sup2[i] = r;
            let factor = low / pd;
            b[i + 1] -= factor * b[i];
            p = d_next - factor * q;
            q = q_next - factor * r;
            r = 0.0;
        }
    }
    // back substitution
    for i in (0..n).rev() {
        let mut s = b[i];
        if i + 1 < n {
            s -= sup1[i] * b[i + 1];
        }
        if i + 2 < n {
            s -= sup2[i] * b[i + 2];
        }
        b[i] = s / diag[i];
    }
}

fn normalize(v: &mut [f64]) {
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm > 0.0 {
        for x in v.iter_mut() {
            *x /= norm;
        }
    }
}

fn mat_vec(d: &[f64], e: &[f64], v: &[f64]) -> Vec<f64> {
    let n = d.len();
    let mut out = vec![0.0; n];
    for i in 0..n {
        let mut s = d[i] * v[i];
        if i > 0 {
            s += e[i - 1] * v[i - 1];
        }
        if i + 1 < n {
            s += e[i] * v[i + 1];
        }
        out[i] = s;
    }
    out
}

/// The m smallest eigenpairs of the symmetric tridiagonal (d, e),
/// eigenvectors orthonormal in the Euclidean inner product.
pub fn smallest_eigenpairs(d: &[f64], e: &[f64], m: usize) -> Vec<(f64, Vec<f64>)> {
    let n = d.len();
    assert!(m <= n);
    let bound = gershgorin_bound(d, e) + 1.0;
    let mut out: Vec<(f64, Vec<f64>)> = Vec::with_capacity(m);
    // deterministic start vector entries
    let mut mix: u64 = 0x8af8_32f1_9c4b_7e31;
    for idx in 0..m {
        let lam = bisect_eigenvalue(d, e, idx, -bound, bound);
        // inverse iteration at a shift nudged off the eigenvalue
        let shift = lam + (1e-11 * bound).max(1e-300);
        let mut v: Vec<f64> = (0..n)
            .map(|_| {
                mix = mix
                    .wrapping_mul(0x5851_f42d_4c95_7f2d)
                    .wrapping_add(0x1405_7b7e_f767_814f);
                ((mix >> 11) as f64) / (1u64 << 53) as f64 - 0.5
            })
            .collect();
        normalize(&mut v);
        for _ in 0..4 {
            shifted_solve_pivoted(d, e, shift, &mut v);
            // orthogonalize against converged vectors; a no-op for
            // well-separated modes, protection for near-degenerate ones
            for (_, prev) in &out {
                let dot: f64 = v.iter().zip(prev).map(|(a, b)| a * b).sum();
                for (x, &pv) in v.iter_mut().zip(prev) {
                    *x -= dot * pv;
                }
            }
            normalize(&mut v);
        }
        // Rayleigh polish of the eigenvalue estimate
        let tv = mat_vec(d, e, &v);
        let rayleigh: f64 = v.iter().zip(&tv).map(|(a, b)| a * b).sum();
        out.push((rayleigh, v));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    /// −u'' on a uniform Dirichlet mesh: eigenvalues
    /// (2/h²)(1 − cos(jπh)) with eigenvectors sin(jπx_i).
    #[test]
    fn discrete_laplacian_eigenpairs() {
        let n = 200;
        let h = 1.0 / (n + 1) as f64;
        let d = vec![2.0 / (h * h); n];
        let e = vec![-1.0 / (h * h); n - 1];
        let pairs = smallest_eigenpairs(&d, &e, 5);
        for (j, (lam, v)) in pairs.iter().enumerate() {
            let k = (j + 1) as f64;
            let exact = 2.0 / (h * h) * (1.0 - (k * std::f64::consts::PI * h).cos());
            assert!(
                (lam - exact).abs() < 1e-8 * exact,
                "mode {j}: {lam} vs {exact}"
            );
            // eigenvector shape: proportional to sin(kπ x_i)
            let x1 = h;
            let expected_ratio = (k * std::f64::consts::PI * 2.0 * x1).sin()
                / (k * std::f64::consts::PI * x1).sin();
            let got_ratio = v[1] / v[0];
            assert!(
                (got_ratio - expected_ratio).abs() < 1e-6,
                "mode {j}: ratio {got_ratio} vs {expected_ratio}"
            );
        }
        // orthonormality
        for a in 0..5 {
            for b in a..5 {
                let dot: f64 = pairs[a].1.iter().zip(&pairs[b].1).map(|(x, y)| x * y).sum();
                let target = if a == b { 1.0 } else { 0.0 };
                assert!((dot - target).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn sturm_count_brackets() {
        let d = vec![2.0, 2.0, 2.0];
        let e = vec![-1.0, -1.0];
        // eigenvalues of the 3x3: 2-√2, 2, 2+√2
        assert_eq!(sturm_count(&d, &e, 0.0), 0);
        assert_eq!(sturm_count(&d, &e, 1.0), 1);
        assert_eq!(sturm_count(&d, &e, 2.5), 2);
        assert_eq!(sturm_count(&d, &e, 4.0), 3);
    }

    #[test]
    fn pivoted_solve_matches_direct() {
        let d = vec![1.0, -3.0, 2.0, 0.5];
        let e = vec![4.0, 0.2, -1.5];
        let x_true = [1.0, -2.0, 0.5, 3.0];
        // b = (T - σI) x_true
        let sigma = 0.7;
        let shifted: Vec<f64> = d.iter().map(|&v| v - sigma).collect();
        let mut b = mat_vec(&shifted, &e, &x_true);
        shifted_solve_pivoted(&d, &e, sigma, &mut b);
        for (got, want) in b.iter().zip(&x_true) {
            assert!((got - want).abs() < 1e-10, "{got} vs {want}");
        }
    }
}
