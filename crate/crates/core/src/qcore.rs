//! Dense complex linear algebra for small comparison states.
//!
//! Comparison states never exceed a few dozen dimensions, so everything here is
//! row-major `Vec` storage with straightforward loops. The only non-trivial
//! routine is the cyclic Jacobi eigensolver for Hermitian matrices, used to
//! check positivity of density matrices.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

pub use num_complex::Complex64;

use crate::error::{Error, Result};

/// Tolerance for Hermiticity, unit trace and vector normalization.
pub const STRUCTURE_TOL: f64 = 1e-9;
/// Smallest eigenvalue still accepted as positive semidefinite.
pub const EIGEN_FLOOR: f64 = -1e-9;
/// Off-diagonal Frobenius norm at which the Jacobi sweeps stop.
pub const JACOBI_TOL: f64 = 1e-12;
const JACOBI_MAX_SWEEPS: usize = 64;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// A normalized ket.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amps: Vec<Complex64>,
}

impl StateVector {
    /// Wraps amplitudes that must already have unit Euclidean norm.
    pub fn new(amps: Vec<Complex64>) -> Result<Self> {
        if amps.is_empty() {
            return Err(Error::DimensionMismatch(
                "state vector must have positive dimension".into(),
            ));
        }
        if amps.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite("state vector".into()));
        }
        let norm = norm(&amps);
        if (norm - 1.0).abs() > STRUCTURE_TOL {
            return Err(Error::NotNormalized { norm });
        }
        Ok(Self { amps })
    }

    /// Scales arbitrary non-zero amplitudes to unit norm.
    pub fn normalized(amps: Vec<Complex64>) -> Result<Self> {
        let n = norm(&amps);
        if n.is_nan() || n <= 0.0 || !n.is_finite() {
            return Err(Error::NotNormalized { norm: n });
        }
        Self::new(amps.into_iter().map(|z| z / n).collect())
    }

    /// The basis ket with a one at `index` (0-based).
    pub fn basis(dim: usize, index: usize) -> Result<Self> {
        if index >= dim {
            return Err(Error::DimensionMismatch(format!(
                "basis index {index} out of range for dimension {dim}"
            )));
        }
        let mut amps = vec![ZERO; dim];
        amps[index] = ONE;
        Ok(Self { amps })
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm(&self) -> f64 {
        norm(&self.amps)
    }

    /// Inner product `<self|other>`.
    pub fn inner(&self, other: &StateVector) -> Result<Complex64> {
        same_dim(self.dim(), other.dim())?;
        Ok(self.amps.iter().zip(&other.amps).map(|(a, b)| a.conj() * b).sum())
    }
}

fn norm(amps: &[Complex64]) -> f64 {
    amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

fn same_dim(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::DimensionMismatch(format!("{a} vs {b}")));
    }
    Ok(())
}

/// Dense `dim x dim` complex matrix, row-major.
#[derive(Clone, PartialEq)]
pub struct SquareMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl SquareMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for k in 0..dim {
            m[(k, k)] = ONE;
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for k in 0..dim {
            for l in 0..dim {
                data.push(f(k, l));
            }
        }
        Self { dim, data }
    }

    /// Builds a matrix from nested rows; every row must have `rows.len()` entries.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch("matrix rows must be square".into()));
        }
        let data: Vec<Complex64> = rows.iter().flatten().copied().collect();
        if data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite("matrix".into()));
        }
        Ok(Self { dim, data })
    }

    /// Real diagonal matrix.
    pub fn diagonal(values: &[f64]) -> Self {
        let mut m = Self::zeros(values.len());
        for (k, &v) in values.iter().enumerate() {
            m[(k, k)] = Complex64::new(v, 0.0);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, k: usize, l: usize) -> Complex64 {
        self.data[k * self.dim + l]
    }

    pub fn diag(&self) -> Vec<Complex64> {
        (0..self.dim).map(|k| self[(k, k)]).collect()
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |k, l| self[(l, k)].conj())
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|z| z * c).collect(),
        }
    }

    pub fn matmul(&self, rhs: &SquareMatrix) -> Result<Self> {
        same_dim(self.dim, rhs.dim)?;
        let n = self.dim;
        let mut out = Self::zeros(n);
        for k in 0..n {
            for m in 0..n {
                let a = self[(k, m)];
                if a == ZERO {
                    continue;
                }
                for l in 0..n {
                    out.data[k * n + l] += a * rhs[(m, l)];
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[Complex64]) -> Result<Vec<Complex64>> {
        same_dim(self.dim, v.len())?;
        Ok((0..self.dim)
            .map(|k| (0..self.dim).map(|l| self[(k, l)] * v[l]).sum())
            .collect())
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest `|m_kl - conj(m_lk)|`.
    pub fn hermitian_deviation(&self) -> f64 {
        let mut worst = 0.0_f64;
        for k in 0..self.dim {
            for l in k..self.dim {
                worst = worst.max((self[(k, l)] - self[(l, k)].conj()).norm());
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermitian_deviation() <= tol
    }

    /// Largest entrywise distance to `other`.
    pub fn max_abs_diff(&self, other: &SquareMatrix) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    fn zip_with(&self, rhs: &SquareMatrix, f: impl Fn(Complex64, Complex64) -> Complex64) -> Self {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        Self {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f(*a, *b)).collect(),
        }
    }
}

impl Index<(usize, usize)> for SquareMatrix {
    type Output = Complex64;
    fn index(&self, (k, l): (usize, usize)) -> &Complex64 {
        &self.data[k * self.dim + l]
    }
}

impl IndexMut<(usize, usize)> for SquareMatrix {
    fn index_mut(&mut self, (k, l): (usize, usize)) -> &mut Complex64 {
        &mut self.data[k * self.dim + l]
    }
}

impl Add for &SquareMatrix {
    type Output = SquareMatrix;
    fn add(self, rhs: &SquareMatrix) -> SquareMatrix {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &SquareMatrix {
    type Output = SquareMatrix;
    fn sub(self, rhs: &SquareMatrix) -> SquareMatrix {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul for &SquareMatrix {
    type Output = SquareMatrix;
    fn mul(self, rhs: &SquareMatrix) -> SquareMatrix {
        self.matmul(rhs).expect("matrix dimension mismatch")
    }
}

impl fmt::Debug for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SquareMatrix({})", self.dim)?;
        for k in 0..self.dim {
            let row: Vec<String> = (0..self.dim)
                .map(|l| {
                    let z = self[(k, l)];
                    format!("{:+.6}{:+.6}i", z.re, z.im)
                })
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// A validated density operator: Hermitian, unit trace, positive semidefinite.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    inner: SquareMatrix,
}

impl DensityMatrix {
    pub fn new(m: SquareMatrix) -> Result<Self> {
        check_density(&m)?;
        Ok(Self { inner: m })
    }

    /// The pure state `|v><v|`.
    pub fn pure(v: &StateVector) -> Result<Self> {
        Self::new(outer_product(v, v)?)
    }

    pub fn dim(&self) -> usize {
        self.inner.dim()
    }

    pub fn matrix(&self) -> &SquareMatrix {
        &self.inner
    }

    pub fn into_matrix(self) -> SquareMatrix {
        self.inner
    }

    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> Vec<f64> {
        hermitian_eigenvalues(&self.inner).expect("density matrix is Hermitian")
    }

    /// Number of eigenvalues above `tol`.
    pub fn rank(&self, tol: f64) -> usize {
        self.eigenvalues().iter().filter(|&&e| e > tol).count()
    }

    /// `tr(rho^2)`; one for pure states.
    pub fn purity(&self) -> f64 {
        trace(&(&self.inner * &self.inner)).re
    }
}

/// Checks the three density-operator conditions on an arbitrary matrix.
pub fn check_density(m: &SquareMatrix) -> Result<()> {
    if m.dim() == 0 {
        return Err(Error::InvalidDensity("dimension is zero".into()));
    }
    if m.data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::NonFinite("density matrix".into()));
    }
    let deviation = m.hermitian_deviation();
    if deviation > STRUCTURE_TOL {
        return Err(Error::NotHermitian { deviation });
    }
    let tr = trace(m);
    if (tr.re - 1.0).abs() > STRUCTURE_TOL || tr.im.abs() > STRUCTURE_TOL {
        return Err(Error::InvalidDensity(format!("trace is {tr}, expected 1")));
    }
    let eigs = hermitian_eigenvalues(m)?;
    if let Some(&min) = eigs.first() {
        if min < EIGEN_FLOOR {
            return Err(Error::InvalidDensity(format!("negative eigenvalue {min:e}")));
        }
    }
    Ok(())
}

/// `|v><w|`, entry `(k,l) = v_k conj(w_l)`.
pub fn outer_product(v: &StateVector, w: &StateVector) -> Result<SquareMatrix> {
    same_dim(v.dim(), w.dim())?;
    Ok(SquareMatrix::from_fn(v.dim(), |k, l| v.amps[k] * w.amps[l].conj()))
}

/// `v (x) w` with amplitude `i * w.dim + j = v_i w_j`.
pub fn tensor_product(v: &StateVector, w: &StateVector) -> StateVector {
    let amps = v.amps.iter().flat_map(|a| w.amps.iter().map(move |b| a * b)).collect();
    StateVector { amps }
}

pub fn trace(m: &SquareMatrix) -> Complex64 {
    (0..m.dim()).map(|k| m[(k, k)]).sum()
}

/// Eigenvalues of a Hermitian matrix in ascending order.
pub fn hermitian_eigenvalues(m: &SquareMatrix) -> Result<Vec<f64>> {
    hermitian_eigen(m).map(|(vals, _)| vals)
}

/// Eigen-decomposition of a Hermitian matrix by cyclic Jacobi rotations.
///
/// Returns ascending eigenvalues and a unitary whose column `k` is the
/// eigenvector for eigenvalue `k`.
///
/// Each rotation first removes the phase of the pivot `a_pq = r e^{i phi}` with
/// `diag(1, e^{-i phi})`, then applies the real symmetric Jacobi rotation that
/// annihilates the now-real pivot.
pub fn hermitian_eigen(m: &SquareMatrix) -> Result<(Vec<f64>, SquareMatrix)> {
    let deviation = m.hermitian_deviation();
    if deviation > STRUCTURE_TOL {
        return Err(Error::NotHermitian { deviation });
    }
    let n = m.dim();
    let mut a = m.clone();
    for k in 0..n {
        a[(k, k)] = Complex64::new(a[(k, k)].re, 0.0);
    }
    let mut vecs = SquareMatrix::identity(n);
    let threshold = JACOBI_TOL * m.frobenius_norm().max(1.0);

    let mut converged = false;
    for _ in 0..JACOBI_MAX_SWEEPS {
        if off_diagonal_norm(&a) <= threshold {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut vecs, p, q);
            }
        }
    }
    if !converged && off_diagonal_norm(&a) > threshold {
        return Err(Error::NoConvergence {
            sweeps: JACOBI_MAX_SWEEPS,
        });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let sorted = SquareMatrix::from_fn(n, |k, l| vecs[(k, order[l])]);
    Ok((values, sorted))
}

fn off_diagonal_norm(a: &SquareMatrix) -> f64 {
    let n = a.dim();
    let mut s = 0.0;
    for k in 0..n {
        for l in 0..n {
            if k != l {
                s += a[(k, l)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

fn rotate(a: &mut SquareMatrix, vecs: &mut SquareMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let phase = Complex64::from_polar(1.0, -apq.arg());
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;

    let theta = (aqq - app) / (2.0 * r);
    let t = if theta == 0.0 {
        1.0
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    // V = diag(1, e^{-i phi}) * [[c, s], [-s, c]] restricted to (p, q).
    let vpp = Complex64::new(c, 0.0);
    let vpq = Complex64::new(s, 0.0);
    let vqp = phase * -s;
    let vqq = phase * c;

    let n = a.dim();
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * vpp + akq * vqp;
        a[(k, q)] = akp * vpq + akq * vqq;

        let wkp = vecs[(k, p)];
        let wkq = vecs[(k, q)];
        vecs[(k, p)] = wkp * vpp + wkq * vqp;
        vecs[(k, q)] = wkp * vpq + wkq * vqq;
    }
    for l in 0..n {
        let apl = a[(p, l)];
        let aql = a[(q, l)];
        a[(p, l)] = vpp.conj() * apl + vqp.conj() * aql;
        a[(q, l)] = vpq.conj() * apl + vqq.conj() * aql;
    }
    a[(p, q)] = ZERO;
    a[(q, p)] = ZERO;
    a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);
}
