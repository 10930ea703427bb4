//! Phase-point operators `Ŵ(g; jmm')`, whose expectation values are the
//! variant I distribution and which form an operator basis.

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::linalg::{identity, max_abs_diff, CMatrix, ONE, ZERO};
use crate::repr::{IrrepSet, MomentumBasis};
use crate::wigner::state::StateVector;

/// `Ŵ(g; jmm') = Σ_{g'} |g'g⟩ D^j_{mm'}(g'²) ⟨g'⁻¹g|`
#[derive(Clone, Debug, PartialEq)]
pub struct PhasePointOperator {
    pub g: usize,
    pub j: usize,
    pub m: usize,
    pub mp: usize,
    pub matrix: CMatrix,
}

impl PhasePointOperator {
    /// `⟨ψ|Ŵ|ψ⟩`
    pub fn expectation(&self, state: &StateVector) -> C64 {
        let psi = nalgebra::DVector::from_column_slice(&state.psi);
        (psi.adjoint() * &self.matrix * psi)[(0, 0)]
    }
}

/// Matrix positions `(g'g, g'⁻¹g)` occupied by `Ŵ(g; ·)`, indexed by `g'`.
fn support(irreps: &IrrepSet, g: usize) -> Vec<(usize, usize)> {
    let group = irreps.group();
    (0..group.order())
        .map(|gp| (group.mul(gp, g), group.mul(group.inv(gp), g)))
        .collect()
}

/// `acc += weight · Ŵ(g; jmm')` touching only the support.
fn accumulate(acc: &mut CMatrix, irreps: &IrrepSet, g: usize, j: usize, m: usize, mp: usize, weight: C64) {
    let group = irreps.group();
    for (gp, (row, col)) in support(irreps, g).into_iter().enumerate() {
        acc[(row, col)] += irreps.entry(j, group.square(gp), m, mp) * weight;
    }
}

pub fn phase_point_operator(g: usize, j: usize, m: usize, mp: usize, irreps: &IrrepSet) -> Result<PhasePointOperator> {
    let group = irreps.group();
    group.require_odd()?;
    let n = group.order();
    if g >= n {
        return Err(Error::OutOfRange { index: g, bound: n });
    }
    if j >= irreps.num_irreps() {
        return Err(Error::OutOfRange { index: j, bound: irreps.num_irreps() });
    }
    let d = irreps.dim(j);
    if m >= d || mp >= d {
        return Err(Error::OutOfRange { index: m.max(mp), bound: d });
    }
    let mut matrix = CMatrix::zeros(n, n);
    accumulate(&mut matrix, irreps, g, j, m, mp, ONE);
    Ok(PhasePointOperator { g, j, m, mp, matrix })
}

/// Every phase-point operator, ordered by `g`, then `(j, m, m')`.
pub fn phase_point_family(irreps: &IrrepSet) -> Result<Vec<PhasePointOperator>> {
    let n = irreps.group().order();
    let labels = irreps.momentum_labels();
    let mut ops = Vec::with_capacity(n * labels.len());
    for g in 0..n {
        for &(j, m, mp) in &labels {
            ops.push(phase_point_operator(g, j, m, mp, irreps)?);
        }
    }
    Ok(ops)
}

/// The operator at the origin `(e; 000)`, which maps `|g⟩` to `|g⁻¹⟩`.
pub fn inversion_operator(irreps: &IrrepSet) -> Result<CMatrix> {
    Ok(phase_point_operator(0, 0, 0, 0, irreps)?.matrix)
}

/// Residuals of the sum rules
/// `(N_j/N) Σ_g Ŵ(g; jmm') = Σ_n |jmn⟩⟨jm'n|` and
/// `Σ_{jm} (N_j/N) Ŵ(g; jmm) = |g⟩⟨g|`.
#[derive(Clone, Copy, Debug, Default, PartialEq, serde::Serialize)]
pub struct PhasePointSums {
    pub momentum: f64,
    pub position: f64,
}

pub fn phase_point_sums(irreps: &IrrepSet, basis: &MomentumBasis) -> Result<PhasePointSums> {
    irreps.group().require_odd()?;
    let n = irreps.group().order();
    let nf = n as f64;
    let mut out = PhasePointSums::default();

    for j in 0..irreps.num_irreps() {
        let d = irreps.dim(j);
        let w = C64::new(d as f64 / nf, 0.0);
        for m in 0..d {
            for mp in 0..d {
                let mut lhs = CMatrix::zeros(n, n);
                for g in 0..n {
                    accumulate(&mut lhs, irreps, g, j, m, mp, w);
                }
                let mut rhs = CMatrix::zeros(n, n);
                for k in 0..d {
                    let a = basis.vectors.column(basis.index(j, m, k).expect("label"));
                    let b = basis.vectors.column(basis.index(j, mp, k).expect("label"));
                    rhs += a * b.adjoint();
                }
                out.momentum = out.momentum.max(max_abs_diff(&lhs, &rhs));
            }
        }
    }

    for g in 0..n {
        let mut lhs = CMatrix::zeros(n, n);
        for j in 0..irreps.num_irreps() {
            let d = irreps.dim(j);
            for m in 0..d {
                accumulate(&mut lhs, irreps, g, j, m, m, C64::new(d as f64 / nf, 0.0));
            }
        }
        let mut rhs = CMatrix::zeros(n, n);
        rhs[(g, g)] = ONE;
        out.position = out.position.max(max_abs_diff(&lhs, &rhs));
    }
    Ok(out)
}

/// Structural residuals of the family: adjoint rule, trace rule, and the
/// trace orthogonality `Tr[Ŵ_a Ŵ_b†] = (N/N_j) δ_ab` over all pairs.
#[derive(Clone, Copy, Debug, Default, PartialEq, serde::Serialize)]
pub struct PhasePointStructure {
    pub adjoint: f64,
    pub trace: f64,
    pub orthogonality: f64,
}

pub fn phase_point_structure(irreps: &IrrepSet) -> Result<PhasePointStructure> {
    let n = irreps.group().order();
    let family = phase_point_family(irreps)?;
    let labels = irreps.momentum_labels();
    let per_g = labels.len();
    let mut out = PhasePointStructure::default();

    for (a, op) in family.iter().enumerate() {
        let partner = &family[(a / per_g) * per_g
            + labels.iter().position(|&l| l == (op.j, op.mp, op.m)).expect("label")];
        out.adjoint = out.adjoint.max(max_abs_diff(&op.matrix.adjoint(), &partner.matrix));
        let expect = if op.m == op.mp { ONE } else { ZERO };
        out.trace = out.trace.max((op.matrix.trace() - expect).norm());
    }

    let supports: Vec<Vec<(usize, usize)>> = (0..n).map(|g| support(irreps, g)).collect();
    for (a, op_a) in family.iter().enumerate() {
        let supp = &supports[op_a.g];
        for (b, op_b) in family.iter().enumerate() {
            // every nonzero entry of Ŵ_a lies on its support
            let tr: C64 = supp
                .iter()
                .map(|&(r, c)| op_a.matrix[(r, c)] * op_b.matrix[(r, c)].conj())
                .sum();
            let expect = if a == b { n as f64 / irreps.dim(op_a.j) as f64 } else { 0.0 };
            out.orthogonality = out.orthogonality.max((tr - expect).norm());
        }
    }
    Ok(out)
}

/// `|g'g⟩⟨g'⁻¹g| = Σ_{jmm'} (N_j/N) D^j_{mm'}(g'²)* Ŵ(g; jmm')`
pub fn reconstruct_dyad(g: usize, gp: usize, irreps: &IrrepSet) -> Result<CMatrix> {
    let group = irreps.group();
    group.require_odd()?;
    let n = group.order();
    if gp >= n {
        return Err(Error::OutOfRange { index: gp, bound: n });
    }
    let sq = group.square(gp);
    let mut acc = CMatrix::zeros(n, n);
    for (j, m, mp) in irreps.momentum_labels() {
        let w = irreps.entry(j, sq, m, mp).conj() * (irreps.dim(j) as f64 / n as f64);
        accumulate(&mut acc, irreps, g, j, m, mp, w);
    }
    Ok(acc)
}

/// Coefficients of `op` in the phase-point basis, in
/// [`phase_point_family`] order: `c_a = (N_j/N) Tr[op Ŵ_a†]`.
pub fn expand_operator(op: &CMatrix, irreps: &IrrepSet) -> Result<Vec<C64>> {
    let n = irreps.group().order();
    if op.nrows() != n || op.ncols() != n {
        return Err(Error::DimensionMismatch { expected: n, found: op.nrows() });
    }
    let family = phase_point_family(irreps)?;
    Ok(family
        .iter()
        .map(|w| {
            let tr: C64 = support(irreps, w.g)
                .iter()
                .map(|&(r, c)| op[(r, c)] * w.matrix[(r, c)].conj())
                .sum();
            tr * (irreps.dim(w.j) as f64 / n as f64)
        })
        .collect())
}

/// Inverse of [`expand_operator`].
pub fn synthesize_operator(coeffs: &[C64], irreps: &IrrepSet) -> Result<CMatrix> {
    let group = irreps.group();
    group.require_odd()?;
    let n = group.order();
    let labels = irreps.momentum_labels();
    if coeffs.len() != n * labels.len() {
        return Err(Error::DimensionMismatch { expected: n * labels.len(), found: coeffs.len() });
    }
    let mut acc = CMatrix::zeros(n, n);
    for g in 0..n {
        for (k, &(j, m, mp)) in labels.iter().enumerate() {
            accumulate(&mut acc, irreps, g, j, m, mp, coeffs[g * labels.len() + k]);
        }
    }
    Ok(acc)
}

/// Largest deviation of `Ŵ(e;000)|g⟩` from `|g⁻¹⟩`, together with the
/// deviation of its square from the identity.
pub fn inversion_residual(irreps: &IrrepSet) -> Result<(f64, f64)> {
    let group = irreps.group();
    let n = group.order();
    let inv = inversion_operator(irreps)?;
    let mut expect = CMatrix::zeros(n, n);
    for g in 0..n {
        expect[(group.inv(g), g)] = ONE;
    }
    Ok((max_abs_diff(&inv, &expect), max_abs_diff(&(&inv * &inv), &identity(n))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, GroupSpec};
    use crate::repr::{compute_irreps, momentum_basis};
    use crate::wigner::distribution::wigner_i;
    use rand::SeedableRng;
    use rand_distr::{Distribution, StandardNormal};

    fn set(spec: GroupSpec) -> IrrepSet {
        compute_irreps(&build_group(&spec).unwrap()).unwrap()
    }

    #[test]
    fn origin_is_inversion() {
        let irreps = set(GroupSpec::semidirect(GroupSpec::cyclic(7), GroupSpec::cyclic(3), vec![0, 2, 4, 6, 1, 3, 5]));
        let (act, square) = inversion_residual(&irreps).unwrap();
        assert_eq!(act, 0.0);
        assert_eq!(square, 0.0);
    }

    #[test]
    fn c7_structure() {
        let irreps = set(GroupSpec::cyclic(7));
        let s = phase_point_structure(&irreps).unwrap();
        assert!(s.adjoint < 1e-12 && s.trace < 1e-12 && s.orthogonality < 1e-12, "{s:?}");
    }

    #[test]
    fn trivial_group_sums() {
        let irreps = set(GroupSpec::cyclic(1));
        let s = phase_point_sums(&irreps, &momentum_basis(&irreps)).unwrap();
        assert_eq!(s, PhasePointSums { momentum: 0.0, position: 0.0 });
    }

    #[test]
    fn c9_sums() {
        let irreps = set(GroupSpec::cyclic(9));
        let s = phase_point_sums(&irreps, &momentum_basis(&irreps)).unwrap();
        assert!(s.momentum < 1e-12 && s.position < 1e-12, "{s:?}");
    }

    #[test]
    fn expectation_matches_distribution() {
        let irreps = set(GroupSpec::cyclic(5));
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let s = StateVector::random(5, &mut rng);
        let w = wigner_i(&s, &irreps).unwrap();
        for g in 0..5 {
            for j in 0..5 {
                let op = phase_point_operator(g, j, 0, 0, &irreps).unwrap();
                assert!((op.expectation(&s) - w.value(g, j, 0, 0)).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn dyads_on_c3() {
        let irreps = set(GroupSpec::cyclic(3));
        let group = irreps.group().clone();
        for g in 0..3 {
            for gp in 0..3 {
                let mut expect = CMatrix::zeros(3, 3);
                expect[(group.mul(gp, g), group.mul(group.inv(gp), g))] = ONE;
                assert!(max_abs_diff(&reconstruct_dyad(g, gp, &irreps).unwrap(), &expect) < 1e-12);
            }
        }
    }

    #[test]
    fn random_operator_round_trip_c7() {
        let irreps = set(GroupSpec::cyclic(7));
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(12);
        let op = CMatrix::from_fn(7, 7, |_, _| C64::new(StandardNormal.sample(&mut rng), StandardNormal.sample(&mut rng)));
        let coeffs = expand_operator(&op, &irreps).unwrap();
        let back = synthesize_operator(&coeffs, &irreps).unwrap();
        assert!(max_abs_diff(&op, &back) < 1e-9);
    }

    #[test]
    fn index_errors() {
        let irreps = set(GroupSpec::cyclic(3));
        assert!(matches!(phase_point_operator(3, 0, 0, 0, &irreps), Err(Error::OutOfRange { .. })));
        assert!(matches!(phase_point_operator(0, 0, 1, 0, &irreps), Err(Error::OutOfRange { .. })));
        let even = set(GroupSpec::cyclic(6));
        assert_eq!(phase_point_operator(0, 0, 0, 0, &even), Err(Error::EvenOrderGroup(6)));
    }
}
