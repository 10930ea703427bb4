use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::linalg::root_of_unity;

/// Closed form for `C_N` with element `k` identified with `g^k`:
/// `W(gⁿ; j) = Σ_{n'} ψ(g^{n−n'}) e^{2πi j·2n'/N} ψ(g^{n+n'})*`.
pub fn wigner_cyclic_fast(psi: &[C64], n: usize, j: usize, point: usize) -> Result<C64> {
    if n.is_multiple_of(2) {
        return Err(Error::EvenOrderGroup(n));
    }
    if psi.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: psi.len() });
    }
    if point >= n || j >= n {
        return Err(Error::OutOfRange { index: point.max(j), bound: n });
    }
    Ok((0..n)
        .map(|np| {
            psi[(point + n - np) % n] * root_of_unity(2 * j * np, n) * psi[(point + np) % n].conj()
        })
        .sum())
}

/// All `N × N` values, indexed `[n][j]`.
pub fn wigner_cyclic_table(psi: &[C64], n: usize) -> Result<Vec<Vec<C64>>> {
    (0..n)
        .map(|point| (0..n).map(|j| wigner_cyclic_fast(psi, n, j, point)).collect())
        .collect()
}
