//! Small dense complex matrices (dimension at most 8) and their norms.

use std::ops::{Add, AddAssign, Mul, Sub};

use num_complex::Complex64;

pub const MAX_DIM: usize = 8;

const POWER_TOL: f64 = 1e-12;
const POWER_MAX_ITERS: usize = 10_000;
const STAGNATION_FLOOR: f64 = 1e-15;

/// Row-major square complex matrix of dimension `dim <= MAX_DIM`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CMatrix {
    dim: usize,
    data: [Complex64; MAX_DIM * MAX_DIM],
}

impl CMatrix {
    pub fn zeros(dim: usize) -> Self {
        assert!((1..=MAX_DIM).contains(&dim), "matrix dimension {dim} outside 1..={MAX_DIM}");
        Self { dim, data: [Complex64::new(0.0, 0.0); MAX_DIM * MAX_DIM] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn scalar(z: Complex64) -> Self {
        let mut m = Self::zeros(1);
        m[(0, 0)] = z;
        m
    }

    pub fn from_real_rows(rows: &[&[f64]]) -> Self {
        let mut m = Self::zeros(rows.len());
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), rows.len());
            for (j, &x) in row.iter().enumerate() {
                m[(i, j)] = Complex64::new(x, 0.0);
            }
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(j, i)].conj())
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::from_fn(self.dim, |i, j| self[(i, j)] * s)
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn mul_vec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.dim);
        (0..self.dim).map(|i| (0..self.dim).map(|j| self[(i, j)] * v[j]).sum()).collect()
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim);
        (0..self.dim * self.dim)
            .map(|k| (self.entry(k) - other.entry(k)).norm())
            .fold(0.0, f64::max)
    }

    fn entry(&self, k: usize) -> Complex64 {
        self.data[(k / self.dim) * MAX_DIM + k % self.dim]
    }
}

impl std::ops::Index<(usize, usize)> for CMatrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        debug_assert!(i < self.dim && j < self.dim);
        &self.data[i * MAX_DIM + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        debug_assert!(i < self.dim && j < self.dim);
        &mut self.data[i * MAX_DIM + j]
    }
}

impl Mul for CMatrix {
    type Output = CMatrix;

    fn mul(self, rhs: CMatrix) -> CMatrix {
        assert_eq!(self.dim, rhs.dim);
        CMatrix::from_fn(self.dim, |i, j| (0..self.dim).map(|k| self[(i, k)] * rhs[(k, j)]).sum())
    }
}

impl Add for CMatrix {
    type Output = CMatrix;

    fn add(self, rhs: CMatrix) -> CMatrix {
        assert_eq!(self.dim, rhs.dim);
        CMatrix::from_fn(self.dim, |i, j| self[(i, j)] + rhs[(i, j)])
    }
}

impl AddAssign for CMatrix {
    fn add_assign(&mut self, rhs: CMatrix) {
        *self = *self + rhs;
    }
}

impl Sub for CMatrix {
    type Output = CMatrix;

    fn sub(self, rhs: CMatrix) -> CMatrix {
        assert_eq!(self.dim, rhs.dim);
        CMatrix::from_fn(self.dim, |i, j| self[(i, j)] - rhs[(i, j)])
    }
}

fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Power iteration on the Hermitian matrix `h` from `start`; returns the
/// converged Rayleigh quotient.
fn power_iterate(h: &CMatrix, start: Vec<Complex64>) -> f64 {
    let mut v = start;
    let mut lambda = 0.0;
    for _ in 0..POWER_MAX_ITERS {
        let w = h.mul_vec(&v);
        let n = norm(&w);
        if n == 0.0 {
            return 0.0;
        }
        v = w.into_iter().map(|z| z / n).collect();
        // |h v| with |v| = 1
        let converged = (n - lambda).abs() <= POWER_TOL * n;
        lambda = n;
        if converged {
            break;
        }
    }
    // Rayleigh quotient of the final unit vector
    let hv = h.mul_vec(&v);
    let rq: f64 = v.iter().zip(&hv).map(|(a, b)| (a.conj() * b).re).sum();
    rq.max(0.0)
}

/// Largest singular value.
///
/// Power iteration on `M* M` from the start vector `(1, .., 1)/sqrt(d)`,
/// restarted from `e_1` when the Rayleigh quotient stagnates below `1e-15`.
/// The standard basis vectors are also tried so that a start orthogonal to
/// the top singular subspace cannot hide it; the maximum is returned.
pub fn op_norm(m: &CMatrix) -> f64 {
    let d = m.dim();
    if d == 1 {
        return m[(0, 0)].norm();
    }
    let h = m.adjoint() * *m;
    let s = 1.0 / (d as f64).sqrt();
    let mut best = power_iterate(&h, vec![Complex64::new(s, 0.0); d]);
    if best < STAGNATION_FLOOR {
        let mut e1 = vec![Complex64::new(0.0, 0.0); d];
        e1[0] = Complex64::new(1.0, 0.0);
        best = power_iterate(&h, e1);
    }
    for i in 0..d {
        let mut e = vec![Complex64::new(0.0, 0.0); d];
        e[i] = Complex64::new(1.0, 0.0);
        best = best.max(power_iterate(&h, e));
    }
    best.max(0.0).sqrt()
}

/// Hilbert-Schmidt (Frobenius) norm.
pub fn hs_norm(m: &CMatrix) -> f64 {
    let d = m.dim();
    let mut acc = 0.0;
    for i in 0..d {
        for j in 0..d {
            acc += m[(i, j)].norm_sqr();
        }
    }
    acc.sqrt()
}
