//! Worst-case trees for LR-drawing width: the lower-bound family, the
//! dominance frontier enumeration, and the power-law fit of its table.

mod fit;
mod frontier;
mod lower_bound;

pub use fit::{fit_power_law, fit_power_law_points, FitError, PowerLaw};
pub use frontier::{
    dominates, min_nodes_table, min_nodes_table_from, table_to_csv, Entry, FrontierError, FrontierSet, SizedSeq, Witness as FrontierWitness, table_from,
};
pub use lower_bound::{lower_bound_tree, node_count_bound_check, pi_sequence, ruler_sequence, sqrt5_power};

/// Reference minimum node counts for widths 1..=22, from a long exhaustive run.
pub const PUBLISHED_TABLE: [(u32, usize); 22] = [
    (1, 1),
    (2, 3),
    (3, 7),
    (4, 11),
    (5, 19),
    (6, 27),
    (7, 35),
    (8, 47),
    (9, 61),
    (10, 77),
    (11, 95),
    (12, 111),
    (13, 135),
    (14, 159),
    (15, 185),
    (16, 215),
    (17, 243),
    (18, 275),
    (19, 311),
    (20, 343),
    (21, 383),
    (22, 427),
];
