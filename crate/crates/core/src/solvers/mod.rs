//! Maximum weight independent sets, list colouring and clique
//! approximation.

mod approx;
mod coloring;
mod mwis;
mod nice;

pub use approx::{approx_clique, approx_clique_with, clique_lower_bound_from_width, CliqueApproximation, CliqueBoundFormula};
pub use coloring::{
    brute_list_coloring, list_coloring_on_td, robust_list_k_coloring, robust_list_k_coloring_with, ColorListAssignment,
    RobustOutcome,
};
pub use mwis::{
    mwis_brute, mwis_k1q, mwis_k1q_tables, mwis_on_td, LayerEntry, MwisLayerTable, MwisSolution, MWIS_BRUTE_MAX_ORDER,
};
pub use nice::{NiceKind, NiceNode, NiceTreeDecomposition};
