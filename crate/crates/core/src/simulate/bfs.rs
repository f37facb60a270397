use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::grossnum::GrossNumber;
use crate::turing::{step, Configuration, MachineSpec, TuringError, DEFAULT_DESK_CAP};

use super::{check_depth, nondet_degree, SimulateError, SimulationReport};

/// How [`bfs_simulate_with`] reaches each node.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SimulationMode {
    /// Replay every path from the initial configuration; a path of length
    /// `j` costs `j` steps.
    #[default]
    ReExecute,
    /// Extend stored frontier configurations by one step each. Cheaper, and
    /// its step count does not follow the re-execution cost model.
    Cached,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SimulationOptions {
    pub mode: SimulationMode,
    /// Maximum number of executed steps.
    pub step_cap: u64,
}

impl Default for SimulationOptions {
    fn default() -> Self {
        Self {
            mode: SimulationMode::ReExecute,
            step_cap: DEFAULT_DESK_CAP,
        }
    }
}

struct Frontier {
    path: Vec<usize>,
    /// Kept only in cached mode.
    config: Option<Configuration>,
    branching: usize,
}

fn replay(spec: &MachineSpec, root: &Configuration, path: &[usize]) -> Configuration {
    path.iter().fold(root.clone(), |c, &choice| {
        step(spec, &c, choice).expect("recorded path stays inside the tree")
    })
}

/// Deterministic breadth-first simulation with the default options.
pub fn bfs_simulate(spec: &MachineSpec, input: &[String], depth: u64) -> Result<SimulationReport, SimulateError> {
    bfs_simulate_with(spec, input, depth, SimulationOptions::default())
}

/// Visit every computation path of length `1..=depth`, level by level and
/// in choice-index order, collecting the halting configurations found.
///
/// Paths of one level are simulated in parallel; the report does not
/// depend on scheduling.
pub fn bfs_simulate_with(
    spec: &MachineSpec,
    input: &[String],
    depth: u64,
    options: SimulationOptions,
) -> Result<SimulationReport, SimulateError> {
    check_depth(depth)?;
    spec.validate()?;
    if let Some(bad) = input.iter().find(|s| !spec.in_io_alphabet(s)) {
        return Err(TuringError::InputNotInAlphabet(bad.clone()).into());
    }
    let cached = options.mode == SimulationMode::Cached;
    let root = Configuration::initial(spec, input);
    let mut finals = BTreeSet::new();
    let mut measured = 0u64;
    let mut paths = 0u64;
    let mut level_sizes = Vec::new();

    let mut frontier = vec![Frontier {
        path: Vec::new(),
        config: cached.then(|| root.clone()),
        branching: root.branching(spec),
    }];
    if frontier[0].branching == 0 {
        finals.insert(root.clone());
        frontier.clear();
    }

    for j in 1..=depth {
        let width: u64 = frontier.iter().map(|f| f.branching as u64).sum();
        if width == 0 {
            break;
        }
        let unit = if cached { 1 } else { j };
        let cost = width
            .checked_mul(unit)
            .and_then(|c| c.checked_add(measured))
            .filter(|&c| c <= options.step_cap)
            .ok_or(SimulateError::DeskCapExceeded {
                limit: options.step_cap,
                what: "simulation steps",
            })?;
        measured = cost;
        paths += width;
        level_sizes.push(width);

        let children: Vec<Vec<(Frontier, Configuration)>> = frontier
            .par_iter()
            .map(|f| {
                (0..f.branching)
                    .map(|choice| {
                        let mut path = f.path.clone();
                        path.push(choice);
                        let config = match &f.config {
                            Some(c) => step(spec, c, choice).expect("choice within branching"),
                            None => replay(spec, &root, &path),
                        };
                        let next = Frontier {
                            path,
                            config: cached.then(|| config.clone()),
                            branching: config.branching(spec),
                        };
                        (next, config)
                    })
                    .collect()
            })
            .collect();

        frontier = Vec::with_capacity(width as usize);
        for (next, config) in children.into_iter().flatten() {
            if next.branching == 0 {
                finals.insert(config);
            } else {
                frontier.push(next);
            }
        }
    }

    SimulationReport::executed(
        nondet_degree(spec) as u64,
        GrossNumber::from(depth),
        measured,
        paths,
        level_sizes,
        finals,
        options.mode,
    )
}
