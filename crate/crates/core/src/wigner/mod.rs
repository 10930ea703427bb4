//! Wigner distributions on the `(g; j)` phase space of an odd-order group.

pub mod cyclic;
pub mod distribution;
pub mod extended;
pub mod phase_point;
pub mod state;

pub use cyclic::{wigner_cyclic_fast, wigner_cyclic_table};
pub use distribution::{
    covariance_check, marginal_momentum, marginal_position, momentum_wavefunction, traciality, wigner, wigner_i,
    wigner_i_density, wigner_ii, CovarianceReport, MomentumWavefunction, Variant, WignerTensor,
};
pub use extended::{extended_wigner, extended_wigner_right_form, reconstruct_extended, ExtendedWignerTensor};
pub use phase_point::{
    expand_operator, inversion_operator, inversion_residual, phase_point_family, phase_point_operator, phase_point_structure,
    phase_point_sums, reconstruct_dyad, synthesize_operator, PhasePointOperator, PhasePointStructure,
    PhasePointSums,
};
pub use state::{DensityOperator, StateVector};

/// `D^j(g⁻¹) W(g; j) D^j(g)`: the variant II matrix predicted from the
/// variant I one. Returns the largest deviation from `w2`.
pub fn variant_relation_residual(w1: &WignerTensor, w2: &WignerTensor, irreps: &crate::repr::IrrepSet) -> f64 {
    let group = irreps.group();
    let mut worst: f64 = 0.0;
    for g in 0..w1.order() {
        for j in 0..irreps.num_irreps() {
            let predicted = irreps.matrix(j, group.inv(g)) * w1.get(g, j) * irreps.matrix(j, g);
            worst = worst.max(crate::linalg::max_abs_diff(&predicted, w2.get(g, j)));
        }
    }
    worst
}
