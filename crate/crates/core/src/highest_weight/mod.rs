//! Sector ground states, the norm and determinant recursions, and the
//! brute-force classification of highest-weight vectors in a truncated
//! Fock space.

mod classify;
mod determinant;
mod ground;
mod kernel;
mod label;
mod norms;

pub use classify::{classify_spectrum, check_feasible, SectorEntry};
pub use determinant::{
    determinant_operator, determinant_recursion_check, determinant_recursion_coefficient, p_polynomial_check,
};
pub use ground::{build_ground_state, gram_matrix, ground_state_requirements, verify_hw_conditions, GramReport};
pub use kernel::lowering_operators;
pub use label::{weight_from_sector, SectorLabel, Weight};
pub use norms::{brute_force_norm, norm_checks, norm_recursion_oracle, NormQuery, Branch};
