//! Toeplitz assembly and small dense singular-value machinery.
//!
//! Everything here works on matrices of a few dozen rows at most. The
//! operator norm is taken from a one-sided (Hestenes) Jacobi SVD, which
//! gives singular values to near machine precision at these sizes.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type C64 = Complex64;

/// Threshold below which an imaginary part of `a0` is treated as rounding.
const REAL_DIAGONAL_TOL: f64 = 1e-12;

/// Tolerances for the Jacobi SVD.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LinalgConfig {
    /// Relative off-orthogonality below which a column pair is left alone.
    pub tol: f64,
    pub max_sweeps: usize,
}

impl Default for LinalgConfig {
    fn default() -> Self {
        Self {
            tol: 1e-12,
            max_sweeps: 64,
        }
    }
}

/// Row-major dense complex matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<C64>,
}

impl DenseComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![C64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = C64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_row_major(rows: usize, cols: usize, data: Vec<C64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch {
                expected: rows * cols,
                got: data.len(),
            });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_diagonal(diag: &[C64]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = d;
        }
        m
    }

    /// Lower-triangular Toeplitz matrix with the given first column.
    pub fn lower_triangular_toeplitz(first_column: &[C64]) -> Self {
        let n = first_column.len();
        let mut m = Self::zeros(n, n);
        for j in 0..n {
            for k in 0..=j {
                m[(j, k)] = first_column[j - k];
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[C64] {
        &self.data
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for j in 0..self.rows {
            for k in 0..self.cols {
                out[(k, j)] = self[(j, k)].conj();
            }
        }
        out
    }

    pub fn scaled(&self, factor: C64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| x * factor).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[C64]) -> Vec<C64> {
        assert_eq!(v.len(), self.cols, "vector length must match column count");
        (0..self.rows)
            .map(|j| (0..self.cols).map(|k| self[(j, k)] * v[k]).sum())
            .collect()
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.is_square()
            && (0..self.rows)
                .all(|j| (0..self.cols).all(|k| (self[(j, k)] - self[(k, j)].conj()).norm() <= tol))
    }

    fn column(&self, k: usize) -> Vec<C64> {
        (0..self.rows).map(|j| self[(j, k)]).collect()
    }
}

impl std::ops::Index<(usize, usize)> for DenseComplexMatrix {
    type Output = C64;

    fn index(&self, (j, k): (usize, usize)) -> &C64 {
        &self.data[j * self.cols + k]
    }
}

impl std::ops::IndexMut<(usize, usize)> for DenseComplexMatrix {
    fn index_mut(&mut self, (j, k): (usize, usize)) -> &mut C64 {
        &mut self.data[j * self.cols + k]
    }
}

/// Entries `a0..aN` of a self-adjoint Toeplitz matrix `(a_{j-k})`, with
/// `a_{-n} = conj(a_n)` implied.
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianToeplitzSpec {
    coefficients: Vec<C64>,
}

impl HermitianToeplitzSpec {
    pub fn new(coefficients: Vec<C64>) -> Result<Self> {
        let mut coefficients = coefficients;
        let a0 = *coefficients.first().ok_or(Error::EmptyCoefficients)?;
        if a0.im.abs() > REAL_DIAGONAL_TOL * a0.re.abs().max(1.0) {
            return Err(Error::NonRealDiagonal(a0.im));
        }
        coefficients[0] = C64::new(a0.re, 0.0);
        Ok(Self { coefficients })
    }

    /// Order `N`; the matrix is `(N+1) x (N+1)`.
    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[C64] {
        &self.coefficients
    }

    pub fn a0(&self) -> f64 {
        self.coefficients[0].re
    }

    /// `a_n` for any integer `n`, zero outside `-N..=N`.
    pub fn coefficient(&self, n: isize) -> C64 {
        let idx = n.unsigned_abs();
        match self.coefficients.get(idx) {
            None => C64::new(0.0, 0.0),
            Some(&a) if n < 0 => a.conj(),
            Some(&a) => a,
        }
    }

    /// `a_{-N}, ..., a_0, ..., a_N`.
    pub fn two_sided(&self) -> Vec<C64> {
        let n = self.order() as isize;
        (-n..=n).map(|m| self.coefficient(m)).collect()
    }

    pub fn to_matrix(&self) -> DenseComplexMatrix {
        build_toeplitz(&self.two_sided()).expect("two-sided list always has odd length")
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(|a| a.norm() == 0.0)
    }

    /// True when every off-diagonal coefficient is below `threshold`.
    pub fn is_diagonal(&self, threshold: f64) -> bool {
        self.coefficients[1..].iter().all(|a| a.norm() < threshold)
    }

    pub fn scaled(&self, t: f64) -> Self {
        Self {
            coefficients: self.coefficients.iter().map(|&a| a * t).collect(),
        }
    }
}

/// Matrix with entry `(j, k)` equal to `a_{j-k}`, from `a_{-N}..a_N`.
pub fn build_toeplitz(two_sided: &[C64]) -> Result<DenseComplexMatrix> {
    if two_sided.len().is_multiple_of(2) {
        return Err(Error::EvenLength(two_sided.len()));
    }
    let n = two_sided.len() / 2;
    let size = n + 1;
    let mut m = DenseComplexMatrix::zeros(size, size);
    for j in 0..size {
        for k in 0..size {
            // a_{j-k} sits at offset n + j - k
            m[(j, k)] = two_sided[n + j - k];
        }
    }
    Ok(m)
}

/// Singular values in decreasing order with matching right singular vectors.
#[derive(Clone, Debug)]
pub struct Svd {
    pub singular_values: Vec<f64>,
    pub right_vectors: Vec<Vec<C64>>,
    pub sweeps: usize,
}

/// One-sided Jacobi SVD of a square matrix.
pub fn jacobi_svd(m: &DenseComplexMatrix, cfg: &LinalgConfig) -> Result<Svd> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.cols();
    let mut cols: Vec<Vec<C64>> = (0..n).map(|k| m.column(k)).collect();
    let mut v: Vec<Vec<C64>> = (0..n)
        .map(|k| {
            let mut e = vec![C64::new(0.0, 0.0); n];
            e[k] = C64::new(1.0, 0.0);
            e
        })
        .collect();

    // Columns at roundoff level relative to the whole matrix count as zero.
    let fro: f64 = cols
        .iter()
        .flatten()
        .map(|x| x.norm_sqr())
        .sum::<f64>()
        .sqrt();
    let negligible = (f64::EPSILON * 1e-2 * fro).powi(2);
    let mut sweeps = 0;
    let mut worst = f64::INFINITY;
    let mut converged = n < 2;
    while !converged && sweeps < cfg.max_sweeps {
        sweeps += 1;
        worst = 0.0;
        let mut rotated = false;
        for p in 0..n - 1 {
            for q in p + 1..n {
                let alpha: f64 = cols[p].iter().map(|x| x.norm_sqr()).sum();
                let beta: f64 = cols[q].iter().map(|x| x.norm_sqr()).sum();
                let gamma: C64 = cols[p]
                    .iter()
                    .zip(&cols[q])
                    .map(|(a, b)| a.conj() * b)
                    .sum();
                let g = gamma.norm();
                if g == 0.0 || alpha <= negligible || beta <= negligible {
                    continue;
                }
                let rel = g / alpha.sqrt() / beta.sqrt();
                worst = worst.max(rel);
                if rel <= cfg.tol {
                    continue;
                }
                rotated = true;
                let phase = gamma / g;
                let zeta = (beta - alpha) / (2.0 * g);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                rotate(&mut cols, p, q, c, s, phase);
                rotate(&mut v, p, q, c, s, phase);
            }
        }
        converged = !rotated;
    }
    if !converged {
        return Err(Error::NonConvergence {
            sweeps,
            residual: worst,
        });
    }

    let norms: Vec<f64> = cols
        .iter()
        .map(|c| c.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt())
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| norms[b].total_cmp(&norms[a]));
    Ok(Svd {
        singular_values: order.iter().map(|&k| norms[k]).collect(),
        right_vectors: order.iter().map(|&k| v[k].clone()).collect(),
        sweeps,
    })
}

/// `[x_p, x_q] <- [x_p, x_q] * [[c, s], [-s conj(phase), c conj(phase)]]`.
fn rotate(cols: &mut [Vec<C64>], p: usize, q: usize, c: f64, s: f64, phase: C64) {
    let w = phase.conj();
    let (head, tail) = cols.split_at_mut(q);
    let (xp, xq) = (&mut head[p], &mut tail[0]);
    for (a, b) in xp.iter_mut().zip(xq.iter_mut()) {
        let bw = *b * w;
        let new_a = *a * c - bw * s;
        let new_b = *a * s + bw * c;
        *a = new_a;
        *b = new_b;
    }
}

pub fn operator_norm(m: &DenseComplexMatrix) -> Result<f64> {
    operator_norm_with(m, &LinalgConfig::default())
}

pub fn operator_norm_with(m: &DenseComplexMatrix, cfg: &LinalgConfig) -> Result<f64> {
    Ok(jacobi_svd(m, cfg)?
        .singular_values
        .first()
        .copied()
        .unwrap_or(0.0))
}

/// Largest singular value and a unit maximizing vector.
///
/// The vector's phase is fixed by making its first entry of modulus above
/// `1e-10` real and positive.
pub fn max_singular_pair(m: &DenseComplexMatrix) -> Result<(f64, Vec<C64>)> {
    max_singular_pair_with(m, &LinalgConfig::default())
}

pub fn max_singular_pair_with(
    m: &DenseComplexMatrix,
    cfg: &LinalgConfig,
) -> Result<(f64, Vec<C64>)> {
    let svd = jacobi_svd(m, cfg)?;
    let sigma = svd.singular_values.first().copied().unwrap_or(0.0);
    let mut v = svd.right_vectors.into_iter().next().unwrap_or_default();
    normalize_phase(&mut v);
    Ok((sigma, v))
}

pub(crate) fn normalize_phase(v: &mut [C64]) {
    let norm = v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
    if norm == 0.0 {
        return;
    }
    let pivot = v
        .iter()
        .find(|x| x.norm() > 1e-10 * norm)
        .copied()
        .unwrap_or(C64::new(1.0, 0.0));
    let rot = pivot.conj() / (pivot.norm() * norm);
    for x in v.iter_mut() {
        *x *= rot;
    }
}

/// Euclidean norm of a complex vector.
pub fn vec_norm(v: &[C64]) -> f64 {
    v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
}
