//! Laver tables, their right-divisibility order, the rack cochain complex
//! over them, and the positive braid invariants built from its cocycles.

pub mod bits;
pub mod braid;
pub mod cochain;
pub mod cocycle_checks;
pub mod cocycles;
pub mod complex;
pub mod error;
pub mod identities;
pub mod io;
pub mod poset;
pub mod report;
pub mod table;
pub mod testing;

pub use bits::ElementSet;
pub use braid::{
    color_propagate, color_propagate_shadow, invariant2, invariant3, parse_word, region_colors, rewrite_check,
    rewrite_check_many, BraidWord, ColoringBudget, ColoringTrace, Crossing, Mode, Rewrite,
};
pub use cochain::Cochain;
pub use cocycle_checks::{check_families, check_z2_properties, check_z3_properties, not_zero_one_check};
pub use cocycles::{
    basis2, basis3, cocycle_space, const_cochain, const_prime, decompose2, gamma, lift_cochain, period_from_cocycle,
    periods_from_cocycle, phi2, phi3, phi3_prime, psi2, theta, threshold_from_cocycle, thresholds_from_cocycle,
    CocycleSpaceReport, Decomposition2, Family2,
};
pub use complex::{
    bicomplex_check, cocycle_defect, cocycle_lattice_basis, cohomology, differential, differential_generic,
    differential_matrix, differential_ranks, face_map, is_coboundary, is_cocycle, Cohomology, ComplexCaps, Flavor,
};
pub use error::{LaverError, Result};
pub use identities::{check_identities, check_selfdistributivity, check_selfdistributivity_with, Suite, SweepBudget};
pub use poset::{
    beforesym_demo, check_order_axioms, check_structure, column_set, divides, occurrence_check, ColumnSet,
    DivisibilityPoset, LatticeVerdict, POSET_MAX_N,
};
pub use report::{CheckReport, Failure};
pub use table::{project, Element, LaverTable, Magma, DEFAULT_MAX_N, HARD_MAX_N};
