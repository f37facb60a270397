use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::turing::{step, Configuration, MachineSpec, DEFAULT_DESK_CAP};

use super::{check_depth, SimulateError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeNode {
    pub config: Configuration,
    /// Index of the parent in the previous level (the root for level 1).
    pub parent: usize,
    /// Branch of the parent's transition set that produced this node.
    pub choice: usize,
}

/// Breadth-first expansion of every computation up to a fixed depth.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComputationTree {
    /// Level 0; not counted as a node.
    pub root: Configuration,
    /// `levels[j - 1]` holds the configurations reached after `j` steps,
    /// ordered by parent and then by choice index.
    pub levels: Vec<Vec<TreeNode>>,
    pub depth: u64,
    halted: Vec<Vec<bool>>,
    root_halted: bool,
}

impl ComputationTree {
    /// Nodes on level `j`; the root is level 0.
    pub fn level_size(&self, j: usize) -> usize {
        match j {
            0 => 1,
            _ => self.levels.get(j - 1).map_or(0, Vec::len),
        }
    }

    /// Nodes below the root.
    pub fn node_count(&self) -> u64 {
        self.levels.iter().map(|l| l.len() as u64).sum()
    }

    /// Nodes without children: every halted node plus every node on the
    /// last level. A halted root is a leaf of its own one-node tree.
    pub fn leaf_count(&self) -> u64 {
        if self.root_halted {
            return 1;
        }
        let last = self.levels.len();
        self.halted
            .iter()
            .enumerate()
            .map(|(i, flags)| {
                if i + 1 == last && last as u64 == self.depth {
                    flags.len() as u64
                } else {
                    flags.iter().filter(|&&h| h).count() as u64
                }
            })
            .sum()
    }

    pub fn is_halted(&self, level: usize, index: usize) -> bool {
        match level {
            0 => self.root_halted,
            _ => self.halted[level - 1][index],
        }
    }

    /// Halting configurations at any level, the root included.
    pub fn halting_configurations(&self) -> BTreeSet<Configuration> {
        let mut out = BTreeSet::new();
        if self.root_halted {
            out.insert(self.root.clone());
        }
        for (level, flags) in self.levels.iter().zip(&self.halted) {
            for (node, &h) in level.iter().zip(flags) {
                if h {
                    out.insert(node.config.clone());
                }
            }
        }
        out
    }

    /// Choice indices from the root to `(level, index)`.
    pub fn path(&self, level: usize, mut index: usize) -> Vec<usize> {
        let mut choices = Vec::with_capacity(level);
        for l in (1..=level).rev() {
            let node = &self.levels[l - 1][index];
            choices.push(node.choice);
            index = node.parent;
        }
        choices.reverse();
        choices
    }

    /// Every internal node has exactly `d` children and every leaf sits on
    /// level `k`.
    pub fn is_complete(&self, d: usize) -> bool {
        !self.root_halted
            && self.levels.len() as u64 == self.depth
            && self.levels.iter().enumerate().all(|(j, l)| {
                (l.len() as u128) == (d as u128).pow(j as u32 + 1)
                    && (j + 1 == self.levels.len() || self.halted[j].iter().all(|h| !h))
            })
    }
}

pub fn build_tree(spec: &MachineSpec, input: &[String], depth: u64) -> Result<ComputationTree, SimulateError> {
    build_tree_with_cap(spec, input, depth, DEFAULT_DESK_CAP)
}

/// Expand the tree of `spec` on `input` to `depth` levels, failing once more
/// than `node_cap` nodes would be stored.
///
/// Levels are expanded in parallel; the node order is the same as a
/// sequential expansion in choice-index order.
pub fn build_tree_with_cap(
    spec: &MachineSpec,
    input: &[String],
    depth: u64,
    node_cap: u64,
) -> Result<ComputationTree, SimulateError> {
    check_depth(depth)?;
    spec.validate()?;
    if let Some(bad) = input.iter().find(|s| !spec.in_io_alphabet(s)) {
        return Err(crate::turing::TuringError::InputNotInAlphabet(bad.clone()).into());
    }
    let root = Configuration::initial(spec, input);
    let root_halted = root.is_halted(spec);
    let mut levels: Vec<Vec<TreeNode>> = Vec::new();
    let mut halted: Vec<Vec<bool>> = Vec::new();
    let mut total = 0u64;

    if !root_halted {
        let mut frontier: Vec<(usize, &Configuration)> = vec![(0, &root)];
        let mut storage: Vec<TreeNode>;
        for _ in 0..depth {
            let width: u64 = frontier.iter().map(|(_, c)| c.branching(spec) as u64).sum();
            if width == 0 {
                break;
            }
            total += width;
            if total > node_cap {
                return Err(SimulateError::DeskCapExceeded {
                    limit: node_cap,
                    what: "tree nodes",
                });
            }
            let children: Vec<Vec<TreeNode>> = frontier
                .par_iter()
                .map(|&(parent, config)| {
                    (0..config.branching(spec))
                        .map(|choice| TreeNode {
                            config: step(spec, config, choice).expect("choice within branching"),
                            parent,
                            choice,
                        })
                        .collect()
                })
                .collect();
            storage = children.into_iter().flatten().collect();
            halted.push(storage.par_iter().map(|n| n.config.is_halted(spec)).collect());
            levels.push(storage);
            let (last, flags) = (levels.last().unwrap(), halted.last().unwrap());
            frontier = last
                .iter()
                .enumerate()
                .zip(flags)
                .filter(|(_, &h)| !h)
                .map(|((i, n), _)| (i, &n.config))
                .collect();
        }
    }
    Ok(ComputationTree {
        root,
        levels,
        depth,
        halted,
        root_halted,
    })
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::machine;
    use super::*;

    #[test]
    fn complete_degree3_tree() {
        let spec = machine("branching_degree3.tm");
        let t = build_tree(&spec, &[], 3).unwrap();
        assert_eq!(t.level_size(1), 3);
        assert_eq!(t.level_size(2), 9);
        assert_eq!(t.leaf_count(), 27);
        assert_eq!(t.node_count(), 3 + 9 + 27);
        assert!(t.is_complete(3));
        assert_eq!(t.halting_configurations().len(), 27);
        assert_eq!(t.path(3, 26), vec![2, 2, 2]);
        assert_eq!(t.path(2, 4), vec![1, 1]);
    }

    #[test]
    fn deterministic_path() {
        // Never halts: writes 1 and moves right forever.
        let spec: MachineSpec = "states: q\nblank: _\ntape_alphabet: _, 1\nio_alphabet: 1\ninitial: q\nq,_ -> 1,R,q"
            .parse()
            .unwrap();
        let t = build_tree(&spec, &[], 5).unwrap();
        assert_eq!(t.node_count(), 5);
        assert_eq!(t.leaf_count(), 1);
        assert!(t.halting_configurations().is_empty());
        assert!(t.is_complete(1));
    }

    #[test]
    fn early_halts_become_leaves() {
        let spec: MachineSpec = "
            states: a, f
            blank: _
            tape_alphabet: _, 1
            initial: a
            final: f
            a,_ -> 1,N,f
            a,_ -> 1,R,a
        "
        .parse()
        .unwrap();
        let t = build_tree(&spec, &[], 3).unwrap();
        // each level: one halting child and one continuing child
        assert_eq!((t.level_size(1), t.level_size(2), t.level_size(3)), (2, 2, 2));
        assert_eq!(t.leaf_count(), 1 + 1 + 2);
        assert_eq!(t.halting_configurations().len(), 3);
        assert!(!t.is_complete(2));
    }

    #[test]
    fn halted_root() {
        let spec: MachineSpec = "states: a\nblank: _\ntape_alphabet: _\ninitial: a".parse().unwrap();
        let t = build_tree(&spec, &[], 4).unwrap();
        assert_eq!((t.node_count(), t.leaf_count()), (0, 1));
        assert_eq!(
            t.halting_configurations().into_iter().collect::<Vec<_>>(),
            vec![t.root.clone()]
        );
    }

    #[test]
    fn cap_and_depth_errors() {
        let spec = machine("branching_degree3.tm");
        assert_eq!(
            build_tree_with_cap(&spec, &[], 3, 20),
            Err(SimulateError::DeskCapExceeded {
                limit: 20,
                what: "tree nodes"
            })
        );
        assert!(matches!(
            build_tree(&spec, &[], 0),
            Err(SimulateError::InvalidParameter(_))
        ));
    }
}
