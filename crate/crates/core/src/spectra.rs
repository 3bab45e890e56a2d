//! Spectral bases: eigenvalues and orthonormal eigenfunctions of −A.
//!
//! Heat and fourth-order operators on (0,1) have the classical closed
//! forms λ_j = (jπ)² / (jπ)⁴ with e_j = √2·sin(jπx) (Dirichlet and
//! hinged ends respectively). The degenerate family −(x^α u′)′ has no
//! usable closed form for general α, so it is discretized with a
//! conservative face-centered flux stencil and solved as a symmetric
//! tridiagonal eigenproblem (Sturm bisection for the m smallest
//! eigenvalues, inverse iteration for eigenvectors). Face coefficients
//! a_{i±1/2} = (x_i ± h/2)^α never evaluate x^α at the degenerate
//! point x = 0.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::operator::{Degeneracy, OperatorFamily, OperatorSpec};
use crate::quad;

mod tridiag;

/// Ascending eigenvalues of −A with eigenfunctions sampled on a
/// quadrature grid, orthonormal in the stored quadrature inner
/// product.
#[derive(Debug, Clone)]
pub struct SpectralBasis {
    pub op: OperatorSpec,
    pub lambdas: Vec<f64>,
    pub quad_nodes: Vec<f64>,
    pub quad_weights: Vec<f64>,
    /// m × n_nodes table of e_j(x_k).
    pub eigvecs: DMatrix<f64>,
    kind: BasisKind,
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum BasisKind {
    /// Eigenfunctions evaluable anywhere in closed form.
    ClosedForm,
    /// Eigenfunctions known at mesh nodes only; `h` is the mesh width.
    Mesh { h: f64 },
}

impl SpectralBasis {
    pub fn n_modes(&self) -> usize {
        self.lambdas.len()
    }

    /// Number of modes with λ_j ≤ λ.
    pub fn mode_count(&self, lambda: f64) -> usize {
        self.lambdas.partition_point(|&l| l <= lambda)
    }

    pub fn is_closed_form(&self) -> bool {
        self.kind == BasisKind::ClosedForm
    }

    /// Mesh width for finite-difference bases.
    pub(crate) fn mesh_width(&self) -> Option<f64> {
        match self.kind {
            BasisKind::Mesh { h } => Some(h),
            BasisKind::ClosedForm => None,
        }
    }

    /// e_j evaluated at an arbitrary point (closed-form bases only).
    pub(crate) fn eval_closed_form(&self, j: usize, x: f64) -> f64 {
        debug_assert!(self.kind == BasisKind::ClosedForm);
        let n = (j + 1) as f64;
        std::f64::consts::SQRT_2 * (n * std::f64::consts::PI * x).sin()
    }

    /// Quadrature orthonormality residual max_{j,l} |Σ w e_j e_l − δ|.
    pub fn orthonormality_residual(&self) -> f64 {
        let m = self.n_modes();
        let mut worst: f64 = 0.0;
        for j in 0..m {
            for l in j..m {
                let mut s = 0.0;
                for (k, &w) in self.quad_weights.iter().enumerate() {
                    s += w * self.eigvecs[(j, k)] * self.eigvecs[(l, k)];
                }
                let target = if j == l { 1.0 } else { 0.0 };
                worst = worst.max((s - target).abs());
            }
        }
        worst
    }
}

/// Closed-form basis for the heat and fourth-order families on (0,1),
/// sampled on a composite Gauss–Legendre rule with `n_nodes` points.
pub fn closed_form_basis(op: &OperatorSpec, m: usize, n_nodes: usize) -> Result<SpectralBasis> {
    op.validate()?;
    if op.family == OperatorFamily::Degenerate {
        return Err(Error::invalid(
            "closed_form_basis handles Heat and FourthOrder only; use degenerate_basis",
        ));
    }
    if op.interval != (0.0, 1.0) {
        return Err(Error::invalid("closed-form bases are built on (0,1)"));
    }
    if m == 0 || n_nodes == 0 {
        return Err(Error::invalid("m and n_nodes must be >= 1"));
    }
    let (nodes, weights) = if n_nodes % 8 == 0 {
        quad::composite_on(0.0, 1.0, n_nodes / 8, 8)
    } else {
        quad::gauss_legendre_on(0.0, 1.0, n_nodes)
    };
    let lambdas = (1..=m)
        .map(|j| {
            let base = (j as f64 * std::f64::consts::PI).powi(2);
            match op.family {
                OperatorFamily::Heat => base,
                OperatorFamily::FourthOrder => base * base,
                OperatorFamily::Degenerate => unreachable!(),
            }
        })
        .collect();
    let eigvecs = DMatrix::from_fn(m, nodes.len(), |j, k| {
        std::f64::consts::SQRT_2 * ((j + 1) as f64 * std::f64::consts::PI * nodes[k]).sin()
    });
    Ok(SpectralBasis {
        op: *op,
        lambdas,
        quad_nodes: nodes,
        quad_weights: weights,
        eigvecs,
        kind: BasisKind::ClosedForm,
    })
}

/// Finite-difference basis for the degenerate operator −(x^α u′)′.
///
/// Conservative flux discretization on a uniform mesh of width
/// h = 1/mesh_n, assembled as the generalized problem K u = λ M u:
///
/// - weak (α < 1): Dirichlet at both ends, unknowns at x = h..1−h,
///   M = h·I;
/// - strong (α ≥ 1): zero left-face flux, Dirichlet at 1, unknowns at
///   x = 0..1−h; the flux row at x = 0 keeps only the a(h/2) face and
///   the boundary node owns the half cell [0, h/2], so M carries h/2
///   there.
///
/// The reduction C = M^{−1/2} K M^{−1/2} stays symmetric tridiagonal;
/// eigenvectors are normalized in the mesh inner product uᵀMu = 1 and
/// eigenvalues are returned as Rayleigh quotients of the computed
/// vectors.
pub fn degenerate_basis(op: &OperatorSpec, m: usize, mesh_n: usize) -> Result<SpectralBasis> {
    op.validate()?;
    if op.family != OperatorFamily::Degenerate {
        return Err(Error::invalid("degenerate_basis needs the Degenerate family"));
    }
    if mesh_n < 200 {
        return Err(Error::invalid(format!("mesh_n = {mesh_n} below the minimum 200")));
    }
    let strong = op.degeneracy == Some(Degeneracy::Strong);
    let h = 1.0 / mesh_n as f64;
    let n_unknowns = if strong { mesh_n } else { mesh_n - 1 };
    if m == 0 || m > n_unknowns {
        return Err(Error::invalid(format!(
            "m = {m} outside 1..={n_unknowns} for mesh_n = {mesh_n}"
        )));
    }
    let alpha = op.alpha;
    let x0 = if strong { 0.0 } else { h };
    let nodes: Vec<f64> = (0..n_unknowns).map(|i| x0 + i as f64 * h).collect();

    // Flux-form stiffness K (tridiagonal) and lumped mass M.
    let face = |x: f64| x.powf(alpha);
    let mut k_diag = vec![0.0; n_unknowns];
    let mut k_off = vec![0.0; n_unknowns - 1];
    let mut mass = vec![h; n_unknowns];
    for (i, &x) in nodes.iter().enumerate() {
        let a_right = face(x + 0.5 * h);
        let a_left = if strong && i == 0 {
            0.0 // zero flux through the boundary face
        } else {
            face(x - 0.5 * h)
        };
        k_diag[i] = (a_left + a_right) / h;
        if i + 1 < n_unknowns {
            k_off[i] = -a_right / h;
        }
    }
    if strong {
        mass[0] = 0.5 * h;
    }

    // Symmetric reduction C = M^{-1/2} K M^{-1/2}.
    let inv_sqrt_m: Vec<f64> = mass.iter().map(|&c| 1.0 / c.sqrt()).collect();
    let c_diag: Vec<f64> = k_diag
        .iter()
        .zip(&inv_sqrt_m)
        .map(|(&k, &s)| k * s * s)
        .collect();
    let c_off: Vec<f64> = k_off
        .iter()
        .enumerate()
        .map(|(i, &k)| k * inv_sqrt_m[i] * inv_sqrt_m[i + 1])
        .collect();

    let pairs = tridiag::smallest_eigenpairs(&c_diag, &c_off, m);

    let mut lambdas = Vec::with_capacity(m);
    let mut eigvecs = DMatrix::zeros(m, n_unknowns);
    let scale = tridiag::gershgorin_bound(&c_diag, &c_off);
    for (j, (lam_bisect, v)) in pairs.into_iter().enumerate() {
        // Back to the generalized problem: u = M^{-1/2} v, uᵀMu = 1.
        let u: Vec<f64> = v.iter().zip(&inv_sqrt_m).map(|(&vi, &s)| vi * s).collect();
        // Rayleigh quotient in the generalized form.
        let (num, den) = rayleigh_parts(&k_diag, &k_off, &mass, &u);
        let lam = num / den;
        let residual = generalized_residual(&k_diag, &k_off, &mass, &u, lam);
        let tol = 1e-8 * scale.max(1.0);
        if residual > tol || (lam - lam_bisect).abs() > 1e-6 * scale.max(1.0) {
            return Err(Error::MeshTooCoarse {
                mode: j + 1,
                residual,
                tolerance: tol,
            });
        }
        lambdas.push(lam);
        for (i, &ui) in u.iter().enumerate() {
            eigvecs[(j, i)] = ui;
        }
    }

    Ok(SpectralBasis {
        op: *op,
        lambdas,
        quad_nodes: nodes,
        quad_weights: mass,
        eigvecs,
        kind: BasisKind::Mesh { h },
    })
}

fn rayleigh_parts(k_diag: &[f64], k_off: &[f64], mass: &[f64], u: &[f64]) -> (f64, f64) {
    let n = u.len();
    let mut num = 0.0;
    let mut den = 0.0;
    for i in 0..n {
        let mut ku = k_diag[i] * u[i];
        if i > 0 {
            ku += k_off[i - 1] * u[i - 1];
        }
        if i + 1 < n {
            ku += k_off[i] * u[i + 1];
        }
        num += u[i] * ku;
        den += mass[i] * u[i] * u[i];
    }
    (num, den)
}

fn generalized_residual(k_diag: &[f64], k_off: &[f64], mass: &[f64], u: &[f64], lam: f64) -> f64 {
    let n = u.len();
    let mut sum_sq = 0.0;
    for i in 0..n {
        let mut r = (k_diag[i] - lam * mass[i]) * u[i];
        if i > 0 {
            r += k_off[i - 1] * u[i - 1];
        }
        if i + 1 < n {
            r += k_off[i] * u[i + 1];
        }
        sum_sq += r * r;
    }
    sum_sq.sqrt()
}

/// Modal coefficients (⟨f, e_j⟩)_{λ_j ≤ λ} of a function sampled on the
/// basis quadrature nodes. An empty vector when λ < λ_1 is legal.
pub fn project(basis: &SpectralBasis, f: &[f64], lambda: f64) -> Result<Vec<f64>> {
    if f.len() != basis.quad_nodes.len() {
        return Err(Error::invalid(format!(
            "sampled function has {} values, basis has {} nodes",
            f.len(),
            basis.quad_nodes.len()
        )));
    }
    let cut = basis.mode_count(lambda);
    let mut coeffs = Vec::with_capacity(cut);
    for j in 0..cut {
        let mut s = 0.0;
        for (k, &w) in basis.quad_weights.iter().enumerate() {
            s += w * f[k] * basis.eigvecs[(j, k)];
        }
        coeffs.push(s);
    }
    Ok(coeffs)
}

/// Σ c_j e_j sampled on the basis quadrature nodes.
pub fn reconstruct(basis: &SpectralBasis, coeffs: &[f64]) -> Vec<f64> {
    let n = basis.quad_nodes.len();
    let mut out = vec![0.0; n];
    for (j, &c) in coeffs.iter().enumerate() {
        for (k, slot) in out.iter_mut().enumerate() {
            *slot += c * basis.eigvecs[(j, k)];
        }
    }
    out
}
