//! Representation theory: characters, unitary irreps and the momentum basis.

pub mod characters;
pub mod irreps;
pub mod momentum;

pub use characters::{character_table, CharacterTable};
pub use irreps::{compute_irreps, irrep_residuals, Irrep, IrrepResiduals, IrrepSet};
pub use momentum::{momentum_basis, regular_actions, verify_reduced_actions, MomentumBasis, RegularActions};
