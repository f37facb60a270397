//! Computational trees of non-deterministic machines and the cost of
//! simulating them deterministically.
//!
//! A non-deterministic machine of degree `d` explored to depth `k` spans a
//! tree with up to `d^k` leaves. A deterministic machine that re-executes
//! every path of every length `1..=k` from the initial configuration pays
//! `Σ j·d^j` steps; [`simulation_cost`] evaluates that sum in closed form
//! for finite and infinite `k`, and [`observability`] decides which of the
//! resulting quantities still fit in a sequence of `①` observations.
//!
//! ```
//! use grossone::simulate::{observability, simulation_cost};
//! use grossone::GrossNumber;
//!
//! assert_eq!(simulation_cost(3, &GrossNumber::from(3)).unwrap(), GrossNumber::from(102));
//!
//! let g = GrossNumber::grossone();
//! assert_eq!(simulation_cost(2, &g).unwrap().to_string(), "2*2^(g)*g - 2*2^(g) + 2");
//! let v = observability(2, &g).unwrap();
//! assert!(v.depth_ok && !v.steps_ok && !v.leaves_ok);
//! ```

mod bfs;
mod cost;
mod report;
mod tree;

use thiserror::Error;

use crate::grossnum::GrossError;
use crate::turing::{MachineSpec, TuringError};

pub use bfs::{bfs_simulate, bfs_simulate_with, SimulationMode, SimulationOptions};
pub use cost::{
    leaf_count, node_count, observability, poly_depth_check, simulation_cost, PolyDepth, Verdicts, MAX_POLY_DEPTH,
};
pub use report::{render, ReportFormat, SimulationReport};
pub use tree::{build_tree, build_tree_with_cap, ComputationTree, TreeNode};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimulateError {
    #[error("desk cap exceeded: more than {limit} {what}")]
    DeskCapExceeded { limit: u64, what: &'static str },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Turing(#[from] TuringError),
    #[error(transparent)]
    Gross(#[from] GrossError),
}

impl SimulateError {
    pub fn name(&self) -> &'static str {
        match self {
            SimulateError::DeskCapExceeded { .. } => "DeskCapExceeded",
            SimulateError::InvalidParameter(_) => "InvalidParameter",
            SimulateError::Turing(e) => e.name(),
            SimulateError::Gross(e) => e.name(),
        }
    }
}

/// Largest transition set of the machine: 1 when deterministic, 0 when no
/// transition is defined.
pub fn nondet_degree(spec: &MachineSpec) -> usize {
    spec.transitions
        .values()
        .flat_map(|row| row.values())
        .map(Vec::len)
        .max()
        .unwrap_or(0)
}

fn check_depth(k: u64) -> Result<(), SimulateError> {
    if k == 0 {
        return Err(SimulateError::InvalidParameter("depth must be at least 1".into()));
    }
    Ok(())
}
