//! Young-diagram combinatorics, the sector/gauge-irrep dictionary for
//! `U(N)` and `O(N)`, and the flavor (gauge) generators on Fock space.

mod diagram;
mod dictionary;
mod gauge;

pub use diagram::{conjugate_relative, pieri_add_box, pieri_add_two_boxes_row, YoungDiagram};
pub use dictionary::{
    bijection_roundtrip_check_o, bijection_roundtrip_check_u, charge_residue, complex_sectors,
    irrep_o_to_sector, irrep_u_to_sector, real_sectors, sector_to_irrep_o, sector_to_irrep_u,
    u_highest_weight, weyl_dimension, weyl_dimension_u, BijectionReport, BijectionRow, GaugeIrrepO,
    GaugeIrrepU, OLabel, Sign,
};
pub use gauge::{apply_gauge_generator, gauge_annihilation_check, gauge_commutant_check, GaugeReport};
