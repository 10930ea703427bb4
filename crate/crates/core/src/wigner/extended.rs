//! The overcomplete four-index distribution `w_ψ(g; j m n' m' n)`, whose
//! partial traces give both Wigner variants, and its reconstruction from
//! the variant I distribution alone.

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::linalg::CMatrix;
use crate::repr::IrrepSet;
use crate::wigner::distribution::{MomentumWavefunction, Variant, WignerTensor};
use crate::wigner::state::StateVector;

/// `data[g][j]` holds the `N_j⁴` values of `w(g; j m n' m' n)` with `m`
/// slowest and `n` fastest.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtendedWignerTensor {
    pub dims: Vec<usize>,
    pub data: Vec<Vec<Vec<C64>>>,
}

impl ExtendedWignerTensor {
    pub fn order(&self) -> usize {
        self.data.len()
    }

    #[inline]
    fn offset(d: usize, m: usize, np: usize, mp: usize, n: usize) -> usize {
        ((m * d + np) * d + mp) * d + n
    }

    /// `w(g; j m n' m' n)`
    pub fn get(&self, g: usize, j: usize, m: usize, np: usize, mp: usize, n: usize) -> C64 {
        self.data[g][j][Self::offset(self.dims[j], m, np, mp, n)]
    }

    pub fn max_abs_diff(&self, other: &ExtendedWignerTensor) -> f64 {
        if self.dims != other.dims || self.order() != other.order() {
            return f64::INFINITY;
        }
        self.data
            .iter()
            .flatten()
            .flatten()
            .zip(other.data.iter().flatten().flatten())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// `Σ_n w(g; j m n m' n)`, the variant I distribution.
    pub fn trace_to_variant_i(&self) -> WignerTensor {
        self.partial_trace(Variant::I)
    }

    /// `Σ_m w(g; j m n' m n)`, the variant II distribution.
    pub fn trace_to_variant_ii(&self) -> WignerTensor {
        self.partial_trace(Variant::II)
    }

    fn partial_trace(&self, variant: Variant) -> WignerTensor {
        let data = (0..self.order())
            .map(|g| {
                self.dims
                    .iter()
                    .enumerate()
                    .map(|(j, &d)| {
                        CMatrix::from_fn(d, d, |a, b| {
                            (0..d)
                                .map(|k| match variant {
                                    Variant::I => self.get(g, j, a, k, b, k),
                                    Variant::II => self.get(g, j, k, b, k, a),
                                })
                                .sum()
                        })
                    })
                    .collect()
            })
            .collect();
        WignerTensor {
            variant,
            dims: self.dims.clone(),
            data,
        }
    }

    /// Largest `|w(g; jmn'm'n)* − w(g; jm'n mn')|`.
    pub fn conjugation_residual(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for g in 0..self.order() {
            for (j, &d) in self.dims.iter().enumerate() {
                for_each_index(d, |m, np, mp, n| {
                    let diff = self.get(g, j, m, np, mp, n).conj() - self.get(g, j, mp, n, m, np);
                    worst = worst.max(diff.norm());
                });
            }
        }
        worst
    }

    /// Largest deviation of `(N_j/N) Σ_g w(g; jmn'm'n)` from
    /// `ψ_{jm'n} ψ*_{jmn'}`.
    pub fn momentum_residual(&self, mom: &MomentumWavefunction) -> f64 {
        let nf = self.order() as f64;
        let mut worst: f64 = 0.0;
        for (j, &d) in self.dims.iter().enumerate() {
            for_each_index(d, |m, np, mp, n| {
                let sum: C64 = (0..self.order()).map(|g| self.get(g, j, m, np, mp, n)).sum();
                let lhs = sum * (d as f64 / nf);
                let rhs = mom.get(j, mp, n) * mom.get(j, m, np).conj();
                worst = worst.max((lhs - rhs).norm());
            });
        }
        worst
    }

    /// `(1/N) Σ_{jmn} N_j w(g; jmn mn)` for every `g`.
    pub fn position_marginal(&self) -> Vec<C64> {
        let nf = self.order() as f64;
        (0..self.order())
            .map(|g| {
                let mut acc = C64::new(0.0, 0.0);
                for (j, &d) in self.dims.iter().enumerate() {
                    for m in 0..d {
                        for n in 0..d {
                            acc += self.get(g, j, m, n, m, n) * d as f64;
                        }
                    }
                }
                acc / nf
            })
            .collect()
    }
}

fn for_each_index(d: usize, mut f: impl FnMut(usize, usize, usize, usize)) {
    for m in 0..d {
        for np in 0..d {
            for mp in 0..d {
                for n in 0..d {
                    f(m, np, mp, n);
                }
            }
        }
    }
}

/// `Σ_{g'} c(g, g') D^j_{mn'}(a(g, g')) D^j_{nm'}(b(g, g'))` for all indices.
fn assemble(
    irreps: &IrrepSet,
    coeff: impl Fn(usize, usize) -> C64,
    a: impl Fn(&GroupTable, usize, usize) -> usize,
    b: impl Fn(&GroupTable, usize, usize) -> usize,
) -> Result<ExtendedWignerTensor> {
    let group = irreps.group();
    group.require_odd()?;
    let size = group.order();
    let dims = irreps.dims();
    let data = (0..size)
        .map(|g| {
            let c: Vec<C64> = (0..size).map(|gp| coeff(g, gp)).collect();
            dims.iter()
                .enumerate()
                .map(|(j, &d)| {
                    let mut out = vec![C64::new(0.0, 0.0); d * d * d * d];
                    for gp in 0..size {
                        if c[gp] == C64::new(0.0, 0.0) {
                            continue;
                        }
                        let da = irreps.matrix(j, a(group, g, gp));
                        let db = irreps.matrix(j, b(group, g, gp));
                        for_each_index(d, |m, np, mp, n| {
                            out[ExtendedWignerTensor::offset(d, m, np, mp, n)] +=
                                c[gp] * da[(m, np)] * db[(n, mp)];
                        });
                    }
                    out
                })
                .collect()
        })
        .collect();
    Ok(ExtendedWignerTensor { dims, data })
}

/// `w_ψ(g; jmn'm'n) = Σ_{g'} ψ(g'⁻¹g) D^j_{mn'}(g'g) D^j_{nm'}(g⁻¹g') ψ(g'g)*`
pub fn extended_wigner(state: &StateVector, irreps: &IrrepSet) -> Result<ExtendedWignerTensor> {
    let group = irreps.group();
    state.check_len(group.order())?;
    let psi = &state.psi;
    assemble(
        irreps,
        |g, gp| psi[group.mul(group.inv(gp), g)] * psi[group.mul(gp, g)].conj(),
        |grp, g, gp| grp.mul(gp, g),
        |grp, g, gp| grp.mul(grp.inv(g), gp),
    )
}

/// The same distribution written with right-shifted amplitudes:
/// `Σ_{g'} ψ(gg'⁻¹) D^j_{mn'}(gg') D^j_{nm'}(g'g⁻¹) ψ(gg')*`.
pub fn extended_wigner_right_form(state: &StateVector, irreps: &IrrepSet) -> Result<ExtendedWignerTensor> {
    let group = irreps.group();
    state.check_len(group.order())?;
    let psi = &state.psi;
    assemble(
        irreps,
        |g, gp| psi[group.mul(g, group.inv(gp))] * psi[group.mul(g, gp)].conj(),
        |grp, g, gp| grp.mul(g, gp),
        |grp, g, gp| grp.mul(gp, grp.inv(g)),
    )
}

/// Rebuilds `w` from the variant I distribution alone: first the dyad
/// amplitudes `ψ(g'g)* ψ(g'⁻¹g) = Σ_{j''m''n''} (N_{j''}/N) D^{j''}_{m''n''}(g'²)* W(g; j''m''n'')`,
/// then the defining sum.
pub fn reconstruct_extended(w: &WignerTensor, irreps: &IrrepSet) -> Result<ExtendedWignerTensor> {
    if w.variant != Variant::I {
        return Err(Error::VariantMismatch(Variant::I, w.variant));
    }
    let group = irreps.group();
    group.require_odd()?;
    let size = group.order();
    if w.order() != size || w.dims != irreps.dims() {
        return Err(Error::DimensionMismatch { expected: size, found: w.order() });
    }
    let labels = irreps.momentum_labels();
    let nf = size as f64;
    let dyad: Vec<Vec<C64>> = (0..size)
        .map(|g| {
            (0..size)
                .map(|gp| {
                    let sq = group.square(gp);
                    labels
                        .iter()
                        .map(|&(j, m, n)| {
                            irreps.entry(j, sq, m, n).conj() * w.value(g, j, m, n) * (irreps.dim(j) as f64 / nf)
                        })
                        .sum()
                })
                .collect()
        })
        .collect();
    assemble(
        irreps,
        |g, gp| dyad[g][gp],
        |grp, g, gp| grp.mul(gp, g),
        |grp, g, gp| grp.mul(grp.inv(g), gp),
    )
}
