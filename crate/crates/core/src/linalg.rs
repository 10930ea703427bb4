//! Small dense complex matrix helpers on top of `nalgebra`.

use std::f64::consts::TAU;

use nalgebra::DMatrix;
use num_complex::Complex64 as C64;

pub type CMatrix = DMatrix<C64>;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);

/// Eigen-decomposition of a Hermitian matrix, eigenvalues ascending and
/// eigenvectors as the matching columns.
pub fn hermitian_eigen(m: &CMatrix) -> (Vec<f64>, CMatrix) {
    let n = m.nrows();
    // symmetrize away rounding so the solver sees an exactly Hermitian input
    let h = (m + m.adjoint()).scale(0.5);
    let eig = nalgebra::SymmetricEigen::new(h);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let mut vectors = CMatrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        vectors.set_column(dst, &eig.eigenvectors.column(src));
    }
    (values, vectors)
}

/// `H^p` for Hermitian positive definite `H`.
pub fn hermitian_power(m: &CMatrix, p: f64) -> CMatrix {
    let (values, vectors) = hermitian_eigen(m);
    let diag = CMatrix::from_diagonal(&nalgebra::DVector::from_iterator(
        values.len(),
        values.iter().map(|&v| C64::new(v.powf(p), 0.0)),
    ));
    &vectors * diag * vectors.adjoint()
}

/// Largest entrywise modulus.
pub fn max_abs(m: &CMatrix) -> f64 {
    m.iter().fold(0.0, |acc, z| acc.max(z.norm()))
}

pub fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    a.iter().zip(b.iter()).fold(0.0, |acc, (x, y)| acc.max((x - y).norm()))
}

/// Argument of `z` mapped into `[0, 2π)`, with values within `tol` of the
/// positive real axis (or of zero) sent to exactly 0.
pub fn phase(z: C64, tol: f64) -> f64 {
    if z.norm() < tol {
        return 0.0;
    }
    let mut a = z.arg();
    if a < 0.0 {
        a += TAU;
    }
    if a > TAU - tol || a < tol {
        0.0
    } else {
        a
    }
}

/// `e^{2πi k / n}`
pub fn root_of_unity(k: usize, n: usize) -> C64 {
    let k = k % n;
    C64::from_polar(1.0, TAU * k as f64 / n as f64)
}

pub fn identity(n: usize) -> CMatrix {
    CMatrix::identity(n, n)
}
