//! Regular actions and the momentum basis `|jmn⟩`.

use num_complex::Complex64 as C64;

use crate::group::GroupTable;
use crate::linalg::{identity, max_abs_diff, CMatrix, ONE};
use crate::repr::irreps::IrrepSet;

/// Left and right regular representations as permutations:
/// `L_{g'}|g⟩ = |g'g⟩`, `R_{g'}|g⟩ = |g g'⁻¹⟩`.
#[derive(Clone, Debug)]
pub struct RegularActions {
    /// `left[g'][g]` is the index of `g'g`.
    pub left: Vec<Vec<usize>>,
    /// `right[g'][g]` is the index of `g g'⁻¹`.
    pub right: Vec<Vec<usize>>,
}

impl RegularActions {
    pub fn left_matrix(&self, g: usize) -> CMatrix {
        permutation_matrix(&self.left[g])
    }

    pub fn right_matrix(&self, g: usize) -> CMatrix {
        permutation_matrix(&self.right[g])
    }

    /// Whether `L` and `R` are homomorphisms and commute with each other,
    /// checked exactly by composing permutations.
    pub fn check_relations(&self, group: &GroupTable) -> bool {
        let n = group.order();
        let compose = |p: &[usize], q: &[usize]| -> Vec<usize> { (0..n).map(|x| p[q[x]]).collect() };
        (0..n).all(|a| {
            (0..n).all(|b| {
                let ab = group.mul(a, b);
                compose(&self.left[a], &self.left[b]) == self.left[ab]
                    && compose(&self.right[a], &self.right[b]) == self.right[ab]
                    && compose(&self.left[a], &self.right[b]) == compose(&self.right[b], &self.left[a])
            })
        })
    }
}

/// Column `g` has its single 1 in row `perm[g]`.
pub fn permutation_matrix(perm: &[usize]) -> CMatrix {
    let n = perm.len();
    let mut m = CMatrix::zeros(n, n);
    for (g, &row) in perm.iter().enumerate() {
        m[(row, g)] = ONE;
    }
    m
}

pub fn regular_actions(group: &GroupTable) -> RegularActions {
    let n = group.order();
    RegularActions {
        left: (0..n).map(|a| (0..n).map(|g| group.mul(a, g)).collect()).collect(),
        right: (0..n)
            .map(|a| {
                let ai = group.inv(a);
                (0..n).map(|g| group.mul(g, ai)).collect()
            })
            .collect(),
    }
}

/// The momentum eigenstates as columns of an `N × N` unitary matrix, in
/// the `(j, m, n)` order of [`IrrepSet::momentum_labels`].
#[derive(Clone, Debug)]
pub struct MomentumBasis {
    pub labels: Vec<(usize, usize, usize)>,
    pub vectors: CMatrix,
}

impl MomentumBasis {
    /// Column index of `|jmn⟩`.
    pub fn index(&self, j: usize, m: usize, n: usize) -> Option<usize> {
        self.labels.iter().position(|&l| l == (j, m, n))
    }

    /// Largest deviation of the Gram matrix from the identity.
    pub fn orthonormality_residual(&self) -> f64 {
        let n = self.vectors.ncols();
        max_abs_diff(&(self.vectors.adjoint() * &self.vectors), &identity(n))
    }

    /// Largest deviation of `Σ |jmn⟩⟨jmn|` from the identity.
    pub fn completeness_residual(&self) -> f64 {
        let n = self.vectors.nrows();
        max_abs_diff(&(&self.vectors * self.vectors.adjoint()), &identity(n))
    }
}

/// `⟨g|jmn⟩ = √(N_j/N) D^j_{mn}(g)`
pub fn momentum_basis(irreps: &IrrepSet) -> MomentumBasis {
    let n = irreps.group().order();
    let labels = irreps.momentum_labels();
    let mut vectors = CMatrix::zeros(n, labels.len());
    for (col, &(j, m, k)) in labels.iter().enumerate() {
        let norm = (irreps.dim(j) as f64 / n as f64).sqrt();
        for g in 0..n {
            vectors[(g, col)] = irreps.entry(j, g, m, k) * norm;
        }
    }
    MomentumBasis { labels, vectors }
}

/// Largest residual of the completely reduced regular actions:
/// `L_g|jmn⟩ = Σ_{m'} D^j_{mm'}(g⁻¹)|jm'n⟩` and
/// `R_g|jmn⟩ = Σ_{n'} D^j_{n'n}(g)|jmn'⟩`.
pub fn verify_reduced_actions(irreps: &IrrepSet, basis: &MomentumBasis) -> f64 {
    let group = irreps.group();
    let n = group.order();
    let actions = regular_actions(group);
    let mut worst: f64 = 0.0;
    for g in 0..n {
        let lg = actions.left_matrix(g);
        let rg = actions.right_matrix(g);
        let gi = group.inv(g);
        for (col, &(j, m, k)) in basis.labels.iter().enumerate() {
            let v = basis.vectors.column(col);
            let d = irreps.dim(j);
            let left = &lg * v;
            let right = &rg * v;
            let mut left_expect = nalgebra::DVector::<C64>::zeros(n);
            let mut right_expect = nalgebra::DVector::<C64>::zeros(n);
            for p in 0..d {
                let lm = basis.index(j, p, k).expect("label present");
                left_expect += basis.vectors.column(lm) * irreps.entry(j, gi, m, p);
                let rn = basis.index(j, m, p).expect("label present");
                right_expect += basis.vectors.column(rn) * irreps.entry(j, g, p, k);
            }
            worst = worst
                .max((left - left_expect).camax())
                .max((right - right_expect).camax());
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, GroupSpec};
    use crate::repr::irreps::compute_irreps;

    fn f21() -> GroupTable {
        build_group(&GroupSpec::semidirect(
            GroupSpec::cyclic(7),
            GroupSpec::cyclic(3),
            vec![0, 2, 4, 6, 1, 3, 5],
        ))
        .unwrap()
    }

    #[test]
    fn identity_actions() {
        let g = f21();
        let a = regular_actions(&g);
        assert_eq!(a.left_matrix(0), identity(21));
        assert_eq!(a.right_matrix(0), identity(21));
    }

    #[test]
    fn cyclic_left_is_shift() {
        let g = build_group(&GroupSpec::cyclic(3)).unwrap();
        let a = regular_actions(&g);
        assert_eq!(a.left[1], vec![1, 2, 0]);
        assert_eq!(a.right[1], vec![2, 0, 1]);
    }

    #[test]
    fn relations_exact() {
        for g in [f21(), build_group(&GroupSpec::cyclic(5)).unwrap()] {
            assert!(regular_actions(&g).check_relations(&g));
        }
    }

    #[test]
    fn cyclic_three_basis() {
        let set = compute_irreps(&build_group(&GroupSpec::cyclic(3)).unwrap()).unwrap();
        let b = momentum_basis(&set);
        let w = crate::linalg::root_of_unity(1, 3);
        for j in 0..3 {
            for g in 0..3 {
                let expect = w.powu((j * g) as u32) / 3f64.sqrt();
                assert!((b.vectors[(g, j)] - expect).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn trivial_group_basis() {
        let set = compute_irreps(&build_group(&GroupSpec::cyclic(1)).unwrap()).unwrap();
        let b = momentum_basis(&set);
        assert_eq!(b.vectors, CMatrix::from_element(1, 1, ONE));
    }

    #[test]
    fn f21_basis_and_reduced_actions() {
        let set = compute_irreps(&f21()).unwrap();
        let b = momentum_basis(&set);
        assert_eq!(b.labels.len(), 21);
        assert!(b.orthonormality_residual() < 1e-9);
        assert!(b.completeness_residual() < 1e-9);
        assert!(verify_reduced_actions(&set, &b) < 1e-9);
    }

    #[test]
    fn c5_reduced_actions() {
        let set = compute_irreps(&build_group(&GroupSpec::cyclic(5)).unwrap()).unwrap();
        assert!(verify_reduced_actions(&set, &momentum_basis(&set)) < 1e-12);
    }
}
