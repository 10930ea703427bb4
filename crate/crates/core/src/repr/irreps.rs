//! Explicit unitary irreducible representation matrices.
//!
//! Each irrep of dimension `d > 1` is cut out of the right regular
//! representation: the central projector onto its isotypic component gives
//! a `d²`-dimensional subspace on which the left translations act as `d`
//! copies of the dual irrep. A random Hermitian element of the left action
//! splits that subspace into `d` eigenspaces, each invariant under right
//! translations and irreducible. Restricting the right action to the lowest
//! of them gives the matrices, which are then unitarized by the invariant
//! Gram average and brought to a fixed basis.

use num_complex::Complex64 as C64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::linalg::{hermitian_eigen, hermitian_power, identity, max_abs_diff, phase, CMatrix};
use crate::repr::characters::{character_table, CharacterTable};

const MAX_ATTEMPTS: usize = 8;
const SEED: u64 = 0x1_22e9;

/// One unitary irrep: `matrices[g]` is `D^j(g)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Irrep {
    pub label: usize,
    pub dim: usize,
    pub matrices: Vec<CMatrix>,
}

/// The complete family of inequivalent unitary irreps of a group, with
/// `j = 0` the trivial representation.
#[derive(Clone, Debug)]
pub struct IrrepSet {
    group: GroupTable,
    characters: CharacterTable,
    irreps: Vec<Irrep>,
}

impl IrrepSet {
    /// Assembles an irrep set from explicit matrices, e.g. ones loaded from
    /// disk. Shapes are checked; the algebraic identities are not (see the
    /// `verify` module for that). The character table is taken from traces.
    pub fn from_parts(group: GroupTable, irreps: Vec<Irrep>) -> Result<Self> {
        let n = group.order();
        for (j, irrep) in irreps.iter().enumerate() {
            if irrep.matrices.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: irrep.matrices.len() });
            }
            if let Some(bad) = irrep.matrices.iter().find(|m| m.nrows() != irrep.dim || m.ncols() != irrep.dim) {
                return Err(Error::DimensionMismatch { expected: irrep.dim, found: bad.nrows() });
            }
            if irrep.label != j {
                return Err(Error::Parse(format!("irrep at position {j} is labeled {}", irrep.label)));
            }
        }
        let classes = group.conjugacy_classes();
        let mut class_of = vec![0; n];
        for (c, members) in classes.iter().enumerate() {
            for &x in members {
                class_of[x] = c;
            }
        }
        let chars = irreps
            .iter()
            .map(|ir| classes.iter().map(|c| ir.matrices[c[0]].trace()).collect())
            .collect();
        let characters = CharacterTable {
            classes,
            class_of,
            chars,
            dims: irreps.iter().map(|ir| ir.dim).collect(),
        };
        Ok(IrrepSet { group, characters, irreps })
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn characters(&self) -> &CharacterTable {
        &self.characters
    }

    pub fn irreps(&self) -> &[Irrep] {
        &self.irreps
    }

    pub fn num_irreps(&self) -> usize {
        self.irreps.len()
    }

    pub fn dim(&self, j: usize) -> usize {
        self.irreps[j].dim
    }

    pub fn dims(&self) -> Vec<usize> {
        self.irreps.iter().map(|ir| ir.dim).collect()
    }

    /// `D^j(g)`
    #[inline]
    pub fn matrix(&self, j: usize, g: usize) -> &CMatrix {
        &self.irreps[j].matrices[g]
    }

    /// `D^j_{mn}(g)`
    #[inline]
    pub fn entry(&self, j: usize, g: usize, m: usize, n: usize) -> C64 {
        self.irreps[j].matrices[g][(m, n)]
    }

    /// `(j, m, n)` triples in lexicographic order; there are exactly `N`.
    pub fn momentum_labels(&self) -> Vec<(usize, usize, usize)> {
        self.irreps
            .iter()
            .flat_map(|ir| {
                let d = ir.dim;
                (0..d * d).map(move |k| (ir.label, k / d, k % d))
            })
            .collect()
    }
}

/// Computes all unitary irreps of `group`.
pub fn compute_irreps(group: &GroupTable) -> Result<IrrepSet> {
    let characters = character_table(group)?;
    let n = group.order();
    let mut irreps = Vec::with_capacity(characters.num_irreps());
    for (j, &dim) in characters.dims.iter().enumerate() {
        let matrices = if dim == 1 {
            (0..n)
                .map(|g| CMatrix::from_element(1, 1, characters.value(j, g)))
                .collect()
        } else {
            let block = extract_block(group, &characters, j)?;
            fix_basis(unitarize(block))
        };
        irreps.push(Irrep { label: j, dim, matrices });
    }
    Ok(IrrepSet {
        group: group.clone(),
        characters,
        irreps,
    })
}

fn extract_block(group: &GroupTable, chars: &CharacterTable, j: usize) -> Result<Vec<CMatrix>> {
    let n = group.order();
    let d = chars.dims[j];

    // R_g|h> = |h g⁻¹>
    let mut projector = CMatrix::zeros(n, n);
    for g in 0..n {
        let c = chars.value(j, g).conj() * (d as f64 / n as f64);
        let gi = group.inv(g);
        for h in 0..n {
            projector[(group.mul(h, gi), h)] += c;
        }
    }
    let (values, vectors) = hermitian_eigen(&projector);
    let cols: Vec<usize> = (0..n).filter(|&k| values[k] > 0.5).collect();
    if cols.len() != d * d {
        return Err(Error::ReducibleBlock(j));
    }
    let range = vectors.select_columns(&cols);

    for attempt in 0..MAX_ATTEMPTS {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ ((j as u64) << 16) ^ attempt as u64);
        // Hermitian element of the left-translation algebra: L_g|h> = |g h>
        let mut left = CMatrix::zeros(n, n);
        for g in 0..n {
            let c = C64::new(StandardNormal.sample(&mut rng), StandardNormal.sample(&mut rng));
            let gi = group.inv(g);
            for h in 0..n {
                left[(group.mul(g, h), h)] += c;
                left[(group.mul(gi, h), h)] += c.conj();
            }
        }
        let restricted = range.adjoint() * &left * &range;
        let (vals, vecs) = hermitian_eigen(&restricted);
        let scale = vals.iter().fold(1.0f64, |m, v| m.max(v.abs()));
        if vals[d - 1] - vals[0] > 1e-8 * scale || vals[d] - vals[d - 1] < 1e-6 * scale {
            continue;
        }
        let basis = &range * vecs.columns(0, d);

        let matrices: Vec<CMatrix> = (0..n)
            .map(|g| {
                let gi = group.inv(g);
                let mut rb = CMatrix::zeros(n, d);
                for h in 0..n {
                    rb.set_row(group.mul(h, gi), &basis.row(h));
                }
                basis.adjoint() * rb
            })
            .collect();

        let schur: f64 = matrices.iter().map(|m| m.trace().norm_sqr()).sum();
        let traces_match = (0..n).all(|g| (matrices[g].trace() - chars.value(j, g)).norm() < 1e-8);
        if traces_match && (schur - n as f64).abs() < 1e-8 {
            return Ok(matrices);
        }
    }
    Err(Error::ReducibleBlock(j))
}

/// Conjugates by `H^{1/2}` where `H = (1/N) Σ_g D(g)† D(g)` is the invariant
/// Gram matrix, making every `D(g)` unitary.
fn unitarize(matrices: Vec<CMatrix>) -> Vec<CMatrix> {
    let n = matrices.len();
    let d = matrices[0].nrows();
    let mut gram = CMatrix::zeros(d, d);
    for m in &matrices {
        gram += m.adjoint() * m;
    }
    gram /= C64::new(n as f64, 0.0);
    let root = hermitian_power(&gram, 0.5);
    let inv_root = hermitian_power(&gram, -0.5);
    matrices.iter().map(|m| &root * m * &inv_root).collect()
}

/// Diagonalizes the image of the first element with distinct eigenvalues
/// (sorted by phase), then fixes the remaining diagonal phase freedom by
/// making the first row of the first suitable element real and positive.
fn fix_basis(mut matrices: Vec<CMatrix>) -> Vec<CMatrix> {
    let d = matrices[0].nrows();
    if let Some(v) = matrices.iter().find_map(distinct_eigenbasis) {
        matrices = matrices.iter().map(|m| v.adjoint() * m * &v).collect();
    }
    let pivot = matrices
        .iter()
        .find(|m| (1..d).all(|k| m[(0, k)].norm() > 1e-6))
        .cloned();
    if let Some(p) = pivot {
        let mut diag = identity(d);
        for k in 1..d {
            diag[(k, k)] = p[(0, k)].conj() / p[(0, k)].norm();
        }
        matrices = matrices.iter().map(|m| diag.adjoint() * m * &diag).collect();
    }
    matrices
}

/// Eigenvectors of a unitary matrix with pairwise distinct eigenvalues, as
/// columns ordered by eigenvalue phase. `None` if eigenvalues repeat.
fn distinct_eigenbasis(m: &CMatrix) -> Option<CMatrix> {
    let d = m.nrows();
    // rotation by an angle that is not a rational multiple of π keeps
    // distinct roots of unity distinct after projecting to the real axis
    let rot = C64::from_polar(1.0, 0.3);
    let h = m * rot + m.adjoint() * rot.conj();
    let (_, vecs) = hermitian_eigen(&h);
    let mut pairs: Vec<(f64, usize)> = Vec::with_capacity(d);
    let mut lambdas = Vec::with_capacity(d);
    for k in 0..d {
        let v = vecs.column(k);
        let lambda = (v.adjoint() * m * v)[(0, 0)];
        if (m * v - v * lambda).norm() > 1e-9 {
            return None;
        }
        lambdas.push(lambda);
        pairs.push((phase(lambda, 1e-9), k));
    }
    for a in 0..d {
        for b in a + 1..d {
            if (lambdas[a] - lambdas[b]).norm() < 1e-6 {
                return None;
            }
        }
    }
    pairs.sort_by(|x, y| x.0.total_cmp(&y.0));
    let cols: Vec<usize> = pairs.iter().map(|p| p.1).collect();
    Some(vecs.select_columns(&cols))
}

/// Residuals of the irrep axioms, each the largest entrywise deviation.
#[derive(Clone, Debug, Default, serde::Serialize)]
pub struct IrrepResiduals {
    pub composition: f64,
    pub unitarity: f64,
    pub orthogonality: f64,
    pub completeness: f64,
    pub identity: f64,
    pub dimension_sum_ok: bool,
}

impl IrrepResiduals {
    pub fn max(&self) -> f64 {
        self.composition
            .max(self.unitarity)
            .max(self.orthogonality)
            .max(self.completeness)
            .max(self.identity)
    }
}

/// Evaluates composition, unitarity, Schur orthogonality and completeness
/// directly from the matrices.
pub fn irrep_residuals(set: &IrrepSet) -> IrrepResiduals {
    let group = set.group();
    let n = group.order();
    let mut r = IrrepResiduals {
        dimension_sum_ok: set.dims().iter().map(|d| d * d).sum::<usize>() == n,
        ..Default::default()
    };
    for j in 0..set.num_irreps() {
        let d = set.dim(j);
        r.identity = r.identity.max(max_abs_diff(set.matrix(j, 0), &identity(d)));
        for a in 0..n {
            let da = set.matrix(j, a);
            r.unitarity = r.unitarity.max(max_abs_diff(&(da * da.adjoint()), &identity(d)));
            for b in 0..n {
                let prod = da * set.matrix(j, b);
                r.composition = r.composition.max(max_abs_diff(&prod, set.matrix(j, group.mul(a, b))));
            }
        }
    }

    // X[g, (j m n)] = D^j_{mn}(g)
    let labels = set.momentum_labels();
    if labels.len() != n {
        r.orthogonality = f64::INFINITY;
        r.completeness = f64::INFINITY;
        return r;
    }
    let mut x = CMatrix::zeros(n, n);
    for (col, &(j, m, k)) in labels.iter().enumerate() {
        for g in 0..n {
            x[(g, col)] = set.entry(j, g, m, k);
        }
    }
    let gram = x.transpose() * x.map(|z| z.conj());
    for (a, &(ja, _, _)) in labels.iter().enumerate() {
        for b in 0..n {
            let expect = if a == b { n as f64 / set.dim(ja) as f64 } else { 0.0 };
            r.orthogonality = r.orthogonality.max((gram[(a, b)] - expect).norm());
        }
    }
    let weights = CMatrix::from_diagonal(&nalgebra::DVector::from_iterator(
        n,
        labels.iter().map(|&(j, _, _)| C64::new(set.dim(j) as f64, 0.0)),
    ));
    let complete = &x * weights * x.adjoint();
    for g in 0..n {
        for h in 0..n {
            let expect = if g == h { n as f64 } else { 0.0 };
            r.completeness = r.completeness.max((complete[(g, h)] - expect).norm());
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, GroupSpec};
    use crate::linalg::root_of_unity;

    fn f21() -> GroupTable {
        build_group(&GroupSpec::semidirect(
            GroupSpec::cyclic(7),
            GroupSpec::cyclic(3),
            vec![0, 2, 4, 6, 1, 3, 5],
        ))
        .unwrap()
    }

    #[test]
    fn cyclic_five_formula() {
        let set = compute_irreps(&build_group(&GroupSpec::cyclic(5)).unwrap()).unwrap();
        assert_eq!(set.dims(), vec![1; 5]);
        for j in 0..5 {
            for g in 0..5 {
                assert!((set.entry(j, g, 0, 0) - root_of_unity(j * g, 5)).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn trivial_irrep_is_one() {
        for g in [build_group(&GroupSpec::cyclic(9)).unwrap(), f21()] {
            let set = compute_irreps(&g).unwrap();
            for x in 0..g.order() {
                assert_eq!(set.entry(0, x, 0, 0), C64::new(1.0, 0.0));
            }
        }
    }

    #[test]
    fn f21_axioms() {
        let set = compute_irreps(&f21()).unwrap();
        assert_eq!(set.dims(), vec![1, 1, 1, 3, 3]);
        let r = irrep_residuals(&set);
        assert!(r.dimension_sum_ok);
        assert!(r.max() < 1e-9, "{r:?}");
    }

    #[test]
    fn deterministic_output() {
        let a = compute_irreps(&f21()).unwrap();
        let b = compute_irreps(&f21()).unwrap();
        for j in 0..a.num_irreps() {
            for g in 0..21 {
                assert_eq!(a.matrix(j, g), b.matrix(j, g));
            }
        }
    }

    #[test]
    fn basis_is_fixed_by_first_distinct_element() {
        let set = compute_irreps(&f21()).unwrap();
        for j in 3..5 {
            let first = (0..21)
                .find(|&g| distinct_eigenbasis(set.matrix(j, g)).is_some())
                .unwrap();
            let m = set.matrix(j, first);
            for a in 0..3 {
                for b in 0..3 {
                    if a != b {
                        assert!(m[(a, b)].norm() < 1e-10);
                    }
                }
            }
            let phases: Vec<f64> = (0..3).map(|k| phase(m[(k, k)], 1e-9)).collect();
            assert!(phases.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn traces_reproduce_characters() {
        let g = f21();
        let set = compute_irreps(&g).unwrap();
        let chars = set.characters();
        for j in 0..set.num_irreps() {
            for x in 0..21 {
                assert!((set.matrix(j, x).trace() - chars.value(j, x)).norm() < 1e-10);
            }
        }
    }
}
