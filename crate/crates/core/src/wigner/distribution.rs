//! The two Wigner distributions on the `(g; j)` phase-space array, their
//! marginals, traciality and covariance under the regular actions.
//!
//! Values are kept as full `N_j × N_j` matrices per point. The
//! distributions carry no leading `1/N`; every marginal formula applies the
//! `N_j/N` weights explicitly.

use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{max_abs_diff, CMatrix};
use crate::repr::{IrrepSet, MomentumBasis};
use crate::wigner::state::{DensityOperator, StateVector};

/// Which of the two distributions: `I` is built from left-shifted
/// amplitudes `ψ(g'⁻¹g) ψ(g'g)*`, `II` from right-shifted ones
/// `ψ(gg'⁻¹) ψ(gg')*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Variant {
    I,
    II,
}

impl std::str::FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "I" | "i" | "1" => Ok(Variant::I),
            "II" | "ii" | "2" => Ok(Variant::II),
            other => Err(Error::Parse(format!("unknown Wigner variant {other:?}"))),
        }
    }
}

/// `data[g][j]` is the `N_j × N_j` matrix `W(g; j)`.
#[derive(Clone, Debug, PartialEq)]
pub struct WignerTensor {
    pub variant: Variant,
    pub dims: Vec<usize>,
    pub data: Vec<Vec<CMatrix>>,
}

impl WignerTensor {
    pub fn order(&self) -> usize {
        self.data.len()
    }

    pub fn get(&self, g: usize, j: usize) -> &CMatrix {
        &self.data[g][j]
    }

    pub fn value(&self, g: usize, j: usize, m: usize, mp: usize) -> C64 {
        self.data[g][j][(m, mp)]
    }

    /// Largest `|W(g;j)† − W(g;j)|` entry.
    pub fn hermiticity_residual(&self) -> f64 {
        self.data
            .iter()
            .flatten()
            .map(|m| max_abs_diff(m, &m.adjoint()))
            .fold(0.0, f64::max)
    }

    /// Largest entrywise difference; infinite if shapes differ.
    pub fn max_abs_diff(&self, other: &WignerTensor) -> f64 {
        if self.dims != other.dims || self.order() != other.order() {
            return f64::INFINITY;
        }
        self.data
            .iter()
            .flatten()
            .zip(other.data.iter().flatten())
            .map(|(a, b)| max_abs_diff(a, b))
            .fold(0.0, f64::max)
    }
}

/// Amplitudes `ψ_{jmn} = ⟨jmn|ψ⟩`, aligned with the basis labels.
#[derive(Clone, Debug)]
pub struct MomentumWavefunction {
    pub labels: Vec<(usize, usize, usize)>,
    pub amplitudes: Vec<C64>,
    offsets: Vec<usize>,
    dims: Vec<usize>,
}

impl MomentumWavefunction {
    pub fn get(&self, j: usize, m: usize, n: usize) -> C64 {
        self.amplitudes[self.offsets[j] + m * self.dims[j] + n]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|z| z.norm_sqr()).sum()
    }

    /// Polarized momentum sums a single variant can reproduce:
    /// `I`: `[m][m'] = Σ_n ψ*_{jmn} ψ_{jm'n}`; `II`: `[n][n'] = Σ_m ψ_{jmn} ψ*_{jmn'}`.
    pub fn polarized(&self, variant: Variant) -> Vec<CMatrix> {
        self.dims
            .iter()
            .enumerate()
            .map(|(j, &d)| {
                CMatrix::from_fn(d, d, |a, b| {
                    (0..d)
                        .map(|k| match variant {
                            Variant::I => self.get(j, a, k).conj() * self.get(j, b, k),
                            Variant::II => self.get(j, k, a) * self.get(j, k, b).conj(),
                        })
                        .sum()
                })
            })
            .collect()
    }
}

pub fn momentum_wavefunction(state: &StateVector, basis: &MomentumBasis) -> MomentumWavefunction {
    let psi = nalgebra::DVector::from_column_slice(&state.psi);
    let amps = basis.vectors.adjoint() * psi;
    let mut dims = Vec::new();
    let mut offsets = Vec::new();
    for &(j, m, n) in &basis.labels {
        if m == 0 && n == 0 {
            offsets.push(dims.iter().map(|d: &usize| d * d).sum());
            dims.push(0);
        }
        dims[j] = dims[j].max(m + 1);
    }
    MomentumWavefunction {
        labels: basis.labels.clone(),
        amplitudes: amps.iter().copied().collect(),
        offsets,
        dims,
    }
}

/// `Σ_{g'} c(g, g') D^j(g'²)` for every `(g, j)`.
fn assemble(irreps: &IrrepSet, variant: Variant, coeff: impl Fn(usize, usize) -> C64) -> Result<WignerTensor> {
    let group = irreps.group();
    group.require_odd()?;
    let n = group.order();
    let squares: Vec<usize> = (0..n).map(|x| group.square(x)).collect();
    let dims = irreps.dims();
    let mut data = Vec::with_capacity(n);
    let mut c = vec![C64::new(0.0, 0.0); n];
    for g in 0..n {
        for (gp, slot) in c.iter_mut().enumerate() {
            *slot = coeff(g, gp);
        }
        let row = dims
            .iter()
            .enumerate()
            .map(|(j, &d)| {
                let mut acc = CMatrix::zeros(d, d);
                for gp in 0..n {
                    acc += irreps.matrix(j, squares[gp]) * c[gp];
                }
                acc
            })
            .collect();
        data.push(row);
    }
    Ok(WignerTensor { variant, dims, data })
}

/// `W_ψ(g; jmm') = Σ_{g'} ψ(g'⁻¹g) D^j_{mm'}(g'²) ψ(g'g)*`
pub fn wigner_i(state: &StateVector, irreps: &IrrepSet) -> Result<WignerTensor> {
    let group = irreps.group();
    state.check_len(group.order())?;
    let psi = &state.psi;
    assemble(irreps, Variant::I, |g, gp| {
        psi[group.mul(group.inv(gp), g)] * psi[group.mul(gp, g)].conj()
    })
}

/// `W_ρ(g; jmm') = Σ_{g'} ⟨g'⁻¹g|ρ|g'g⟩ D^j_{mm'}(g'²)`
pub fn wigner_i_density(state: &DensityOperator, irreps: &IrrepSet) -> Result<WignerTensor> {
    let group = irreps.group();
    if state.dim() != group.order() {
        return Err(Error::DimensionMismatch { expected: group.order(), found: state.dim() });
    }
    let rho = &state.rho;
    assemble(irreps, Variant::I, |g, gp| {
        rho[(group.mul(group.inv(gp), g), group.mul(gp, g))]
    })
}

/// `W'_ψ(g; jnn') = Σ_{g'} ψ(gg'⁻¹) D^j_{nn'}(g'²) ψ(gg')*`
pub fn wigner_ii(state: &StateVector, irreps: &IrrepSet) -> Result<WignerTensor> {
    let group = irreps.group();
    state.check_len(group.order())?;
    let psi = &state.psi;
    assemble(irreps, Variant::II, |g, gp| {
        psi[group.mul(g, group.inv(gp))] * psi[group.mul(g, gp)].conj()
    })
}

pub fn wigner(state: &StateVector, irreps: &IrrepSet, variant: Variant) -> Result<WignerTensor> {
    match variant {
        Variant::I => wigner_i(state, irreps),
        Variant::II => wigner_ii(state, irreps),
    }
}

/// `(1/N) Σ_{jm} N_j W(g; jmm)` for every `g`, before discarding the
/// (vanishing) imaginary part.
pub fn marginal_position_complex(w: &WignerTensor) -> Vec<C64> {
    let n = w.order() as f64;
    w.data
        .iter()
        .map(|row| {
            row.iter()
                .zip(&w.dims)
                .map(|(m, &d)| m.trace() * d as f64)
                .sum::<C64>()
                / n
        })
        .collect()
}

/// Position marginal; equals `|ψ(g)|²`.
pub fn marginal_position(w: &WignerTensor) -> Vec<f64> {
    marginal_position_complex(w).iter().map(|z| z.re).collect()
}

/// `(N_j/N) Σ_g W(g; j)` for every `j`.
pub fn marginal_momentum(w: &WignerTensor) -> Vec<CMatrix> {
    let n = w.order() as f64;
    w.dims
        .iter()
        .enumerate()
        .map(|(j, &d)| {
            let mut acc = CMatrix::zeros(d, d);
            for row in &w.data {
                acc += &row[j];
            }
            acc * C64::new(d as f64 / n, 0.0)
        })
        .collect()
}

/// `(1/N) Σ_g Σ_{jmm'} N_j W_φ(g; jm'm) W_ψ(g; jmm')` as a complex number.
pub fn traciality_complex(w_phi: &WignerTensor, w_psi: &WignerTensor) -> Result<C64> {
    if w_phi.variant != w_psi.variant {
        return Err(Error::VariantMismatch(w_phi.variant, w_psi.variant));
    }
    if w_phi.dims != w_psi.dims || w_phi.order() != w_psi.order() {
        return Err(Error::DimensionMismatch { expected: w_phi.order(), found: w_psi.order() });
    }
    let n = w_phi.order() as f64;
    let total: C64 = w_phi
        .data
        .iter()
        .zip(&w_psi.data)
        .flat_map(|(a, b)| a.iter().zip(b).zip(&w_phi.dims))
        .map(|((a, b), &d)| (a * b).trace() * d as f64)
        .sum();
    Ok(total / n)
}

/// Overlap formula; equals `|⟨φ|ψ⟩|²`.
pub fn traciality(w_phi: &WignerTensor, w_psi: &WignerTensor) -> Result<f64> {
    traciality_complex(w_phi, w_psi).map(|z| z.re)
}

/// Residuals of the transformation laws under `L_{g'}` and `R_{g'}`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize)]
pub struct CovarianceReport {
    pub left: f64,
    pub right: f64,
}

impl CovarianceReport {
    pub fn max(&self) -> f64 {
        self.left.max(self.right)
    }
}

/// Checks, for every `(g, j)`, how the distribution of `L_{g'}ψ` and
/// `R_{g'}ψ` relates to that of `ψ`. Variant I: the left translation
/// conjugates by `D^j(g')` at the shifted point `g'⁻¹g`, the right
/// translation is the pure point shift `g ↦ gg'`. Variant II swaps roles.
pub fn covariance_check(
    state: &StateVector,
    irreps: &IrrepSet,
    gp: usize,
    variant: Variant,
) -> Result<CovarianceReport> {
    let group = irreps.group();
    let n = group.order();
    if gp >= n {
        return Err(Error::OutOfRange { index: gp, bound: n });
    }
    let base = wigner(state, irreps, variant)?;
    let left = wigner(&state.left_translate(group, gp), irreps, variant)?;
    let right = wigner(&state.right_translate(group, gp), irreps, variant)?;
    let gpi = group.inv(gp);
    let conj = |j: usize, m: &CMatrix| irreps.matrix(j, gp) * m * irreps.matrix(j, gpi);

    let mut report = CovarianceReport::default();
    for g in 0..n {
        let shifted_left = group.mul(gpi, g);
        let shifted_right = group.mul(g, gp);
        for j in 0..irreps.num_irreps() {
            let (l_expect, r_expect) = match variant {
                Variant::I => (conj(j, base.get(shifted_left, j)), base.get(shifted_right, j).clone()),
                Variant::II => (base.get(shifted_left, j).clone(), conj(j, base.get(shifted_right, j))),
            };
            report.left = report.left.max(max_abs_diff(left.get(g, j), &l_expect));
            report.right = report.right.max(max_abs_diff(right.get(g, j), &r_expect));
        }
    }
    Ok(report)
}
