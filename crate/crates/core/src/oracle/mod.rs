//! Brute-force ground truth: standard tableau counts and enumerated
//! generating functions of semistandard fillings, reverse plane partitions
//! and row-strict tableaux.

mod fillings;
mod syt;

pub use fillings::{
    count_box_rpp, gf_bounded, gf_bounded_with, gf_fixed_diag, gf_fixed_diag_with, gf_tableaux, gf_tableaux_with,
    gf_trace, gf_trace_with, trace_cells, TableauKind,
};
pub use syt::{count_syt, count_syt_corners, count_syt_downset, count_syt_with, rpp_numerator, DownsetKey};

/// Environment variable overriding the cell caps.
pub const CAP_ENV: &str = "TABLEAU_FORGE_CAP";

/// Size limits that keep brute force predictable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Cells in a shape whose standard fillings are counted.
    pub count_cells: usize,
    /// Cells in a shape whose fillings are enumerated one by one.
    pub enumeration_cells: usize,
    /// Largest truncation order for enumerated series.
    pub series_weight: i64,
    /// Largest `abc` for boxed plane partitions.
    pub box_volume: usize,
    /// Largest number of excited diagrams explored.
    pub excited_diagrams: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { count_cells: 24, enumeration_cells: 96, series_weight: 30, box_volume: 64, excited_diagrams: 1_000_000 }
    }
}

impl Caps {
    /// Defaults, with both cell caps replaced by `TABLEAU_FORGE_CAP` if set.
    pub fn from_env() -> Self {
        let mut caps = Caps::default();
        if let Some(n) = std::env::var(CAP_ENV).ok().and_then(|v| v.trim().parse::<usize>().ok()) {
            caps.count_cells = n;
            caps.enumeration_cells = n.max(caps.enumeration_cells);
        }
        caps
    }
}
