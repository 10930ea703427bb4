use num_complex::Complex64 as C64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::linalg::{CMatrix, ZERO};

/// A state in the position basis, `psi[g] = ⟨g|ψ⟩`.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    pub psi: Vec<C64>,
}

impl StateVector {
    pub fn new(psi: Vec<C64>) -> Self {
        StateVector { psi }
    }

    /// Normalizes `psi`; fails on the zero vector.
    pub fn normalized(psi: Vec<C64>) -> Result<Self> {
        let norm = psi.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if !(norm > 0.0) || !norm.is_finite() {
            return Err(Error::InvalidState("cannot normalize a zero or non-finite vector".into()));
        }
        Ok(StateVector {
            psi: psi.into_iter().map(|z| z / norm).collect(),
        })
    }

    /// Position eigenstate `|g⟩`.
    pub fn basis(n: usize, g: usize) -> Self {
        let mut psi = vec![ZERO; n];
        psi[g] = C64::new(1.0, 0.0);
        StateVector { psi }
    }

    pub fn uniform(n: usize) -> Self {
        StateVector {
            psi: vec![C64::new(1.0 / (n as f64).sqrt(), 0.0); n],
        }
    }

    /// Complex standard normal components, normalized.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let psi = (0..n)
            .map(|_| C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
            .collect();
        Self::normalized(psi).expect("gaussian vector is nonzero")
    }

    pub fn len(&self) -> usize {
        self.psi.len()
    }

    pub fn is_empty(&self) -> bool {
        self.psi.is_empty()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.psi.iter().map(|z| z.norm_sqr()).sum()
    }

    /// `⟨self|other⟩`
    pub fn inner(&self, other: &StateVector) -> C64 {
        self.psi.iter().zip(&other.psi).map(|(a, b)| a.conj() * b).sum()
    }

    /// `(L_{g'}ψ)(g) = ψ(g'⁻¹g)`
    pub fn left_translate(&self, group: &GroupTable, gp: usize) -> StateVector {
        let gi = group.inv(gp);
        StateVector {
            psi: (0..self.len()).map(|g| self.psi[group.mul(gi, g)]).collect(),
        }
    }

    /// `(R_{g'}ψ)(g) = ψ(g g')`
    pub fn right_translate(&self, group: &GroupTable, gp: usize) -> StateVector {
        StateVector {
            psi: (0..self.len()).map(|g| self.psi[group.mul(g, gp)]).collect(),
        }
    }

    pub fn check_len(&self, n: usize) -> Result<()> {
        if self.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: self.len() });
        }
        Ok(())
    }

    pub fn to_density(&self) -> DensityOperator {
        let n = self.len();
        DensityOperator {
            rho: CMatrix::from_fn(n, n, |a, b| self.psi[a] * self.psi[b].conj()),
        }
    }
}

/// A general state as an `N × N` matrix in the position basis.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityOperator {
    pub rho: CMatrix,
}

impl DensityOperator {
    /// Checks Hermiticity, unit trace and positivity (eigenvalues ≥ −1e-10).
    pub fn new(rho: CMatrix) -> Result<Self> {
        if rho.nrows() != rho.ncols() {
            return Err(Error::InvalidState("density matrix is not square".into()));
        }
        if crate::linalg::max_abs_diff(&rho, &rho.adjoint()) > 1e-10 {
            return Err(Error::InvalidState("density matrix is not Hermitian".into()));
        }
        if (rho.trace() - 1.0).norm() > 1e-10 {
            return Err(Error::InvalidState("density matrix trace is not 1".into()));
        }
        let (values, _) = crate::linalg::hermitian_eigen(&rho);
        if values.first().is_some_and(|&v| v < -1e-10) {
            return Err(Error::InvalidState("density matrix is not positive".into()));
        }
        Ok(DensityOperator { rho })
    }

    pub fn maximally_mixed(n: usize) -> Self {
        DensityOperator {
            rho: CMatrix::identity(n, n) / C64::new(n as f64, 0.0),
        }
    }

    pub fn dim(&self) -> usize {
        self.rho.nrows()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn random_is_normalized_and_seeded() {
        let mut a = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut b = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let s = StateVector::random(9, &mut a);
        assert!((s.norm_sqr() - 1.0).abs() < 1e-14);
        assert_eq!(s, StateVector::random(9, &mut b));
    }

    #[test]
    fn zero_vector_rejected() {
        assert!(StateVector::normalized(vec![ZERO; 3]).is_err());
    }

    #[test]
    fn density_validation() {
        let mut a = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        let s = StateVector::random(5, &mut a);
        assert!(DensityOperator::new(s.to_density().rho).is_ok());
        assert!(DensityOperator::new(CMatrix::identity(3, 3)).is_err());
        let mut bad = CMatrix::zeros(2, 2);
        bad[(0, 0)] = C64::new(1.5, 0.0);
        bad[(1, 1)] = C64::new(-0.5, 0.0);
        assert!(DensityOperator::new(bad).is_err());
        assert!(DensityOperator::new(DensityOperator::maximally_mixed(4).rho).is_ok());
    }
}
