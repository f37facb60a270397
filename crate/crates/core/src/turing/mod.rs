//! Single-tape Turing machines, deterministic or not.
//!
//! A [`MachineSpec`] is the usual 7-tuple: states, tape alphabet, blank,
//! input/output alphabet, initial state, final states and a partial
//! transition function that returns a *set* of `(write, move, next)`
//! triplets. Machines whose every set is a singleton are deterministic.
//!
//! ```
//! use grossone::turing::{run, Budget, MachineSpec, RunStatus};
//!
//! let spec: MachineSpec = "
//!     states: q0, qf
//!     blank: _
//!     tape_alphabet: _, 1
//!     io_alphabet: 1
//!     initial: q0
//!     final: qf
//!     q0,1 -> 1,R,q0
//!     q0,_ -> 1,N,qf
//! ".parse().unwrap();
//! let input = spec.parse_input("11").unwrap();
//! let result = run(&spec, &input, Budget::Steps(100)).unwrap();
//! assert_eq!(result.status, RunStatus::Halted);
//! assert_eq!(result.output.concat(), "111");
//! ```

mod exec;
mod format;
mod observe;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

pub use exec::{run, run_with_cap, step, Budget, Configuration, RunResult, RunStatus, DEFAULT_DESK_CAP};
pub use observe::{
    code_length, enumeration_bound, kstar, output_observable, recode_length, sequence_count_bound, PhysicalProfile,
    Recoded,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TuringError {
    #[error("invalid machine: {0}")]
    InvalidSpec(String),
    #[error("no transition from state {state:?} on symbol {symbol:?}")]
    NoTransition { state: String, symbol: String },
    #[error("choice {choice} out of range: {branching} transitions available")]
    BadChoice { choice: usize, branching: usize },
    #[error("input symbol {0:?} is not in the input/output alphabet")]
    InputNotInAlphabet(String),
    #[error("machine is non-deterministic; run needs a deterministic machine")]
    NotDeterministic,
    #[error("machine file line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl TuringError {
    pub fn name(&self) -> &'static str {
        match self {
            TuringError::InvalidSpec(_) => "InvalidSpec",
            TuringError::NoTransition { .. } => "NoTransition",
            TuringError::BadChoice { .. } => "BadChoice",
            TuringError::InputNotInAlphabet(_) => "InputNotInAlphabet",
            TuringError::NotDeterministic => "NotDeterministic",
            TuringError::Parse { .. } => "ParseError",
            TuringError::InvalidParameter(_) => "InvalidParameter",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Move {
    Left,
    Right,
    /// No move.
    Stay,
}

impl Move {
    pub fn offset(self) -> i64 {
        match self {
            Move::Left => -1,
            Move::Right => 1,
            Move::Stay => 0,
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Move::Left => "L",
            Move::Right => "R",
            Move::Stay => "N",
        })
    }
}

/// One `(write, move, next)` triplet.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Transition {
    pub write: String,
    pub movement: Move,
    pub next: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Determinism {
    Deterministic,
    Nondeterministic,
}

/// Transition sets keyed by state, then by the symbol under the head.
/// Branches keep the order in which they were declared; that order defines
/// choice indices.
pub type TransitionTable = BTreeMap<String, BTreeMap<String, Vec<Transition>>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MachineSpec {
    pub states: Vec<String>,
    pub tape_alphabet: Vec<String>,
    pub blank: String,
    pub io_alphabet: Vec<String>,
    pub initial: String,
    pub finals: BTreeSet<String>,
    pub transitions: TransitionTable,
}

impl MachineSpec {
    /// Check every structural constraint and report whether the machine
    /// is deterministic.
    pub fn validate(&self) -> Result<Determinism, TuringError> {
        let invalid = |msg: String| Err(TuringError::InvalidSpec(msg));
        if self.states.is_empty() {
            return invalid("state set is empty".into());
        }
        let states: BTreeSet<&str> = self.states.iter().map(String::as_str).collect();
        let gamma: BTreeSet<&str> = self.tape_alphabet.iter().map(String::as_str).collect();
        if states.len() != self.states.len() {
            return invalid("duplicate state".into());
        }
        if gamma.len() != self.tape_alphabet.len() {
            return invalid("duplicate tape symbol".into());
        }
        if !gamma.contains(self.blank.as_str()) {
            return invalid(format!("blank {:?} is not in the tape alphabet", self.blank));
        }
        for s in &self.io_alphabet {
            if *s == self.blank {
                return invalid(format!("blank {s:?} listed in the input/output alphabet"));
            }
            if !gamma.contains(s.as_str()) {
                return invalid(format!("input/output symbol {s:?} is not in the tape alphabet"));
            }
        }
        if !states.contains(self.initial.as_str()) {
            return invalid(format!("initial state {:?} is not declared", self.initial));
        }
        for f in &self.finals {
            if !states.contains(f.as_str()) {
                return invalid(format!("final state {f:?} is not declared"));
            }
        }
        let mut deterministic = true;
        for (q, row) in &self.transitions {
            if !states.contains(q.as_str()) {
                return invalid(format!("transition from undeclared state {q:?}"));
            }
            if self.finals.contains(q) {
                return invalid(format!("transition from final state {q:?}"));
            }
            for (sym, branches) in row {
                if !gamma.contains(sym.as_str()) {
                    return invalid(format!("transition on undeclared symbol {sym:?}"));
                }
                if branches.is_empty() {
                    return invalid(format!("empty transition set for ({q}, {sym})"));
                }
                let distinct: BTreeSet<&Transition> = branches.iter().collect();
                if distinct.len() != branches.len() {
                    return invalid(format!("repeated triplet for ({q}, {sym})"));
                }
                for t in branches {
                    if !gamma.contains(t.write.as_str()) {
                        return invalid(format!("write of undeclared symbol {:?}", t.write));
                    }
                    if !states.contains(t.next.as_str()) {
                        return invalid(format!("move to undeclared state {:?}", t.next));
                    }
                }
                deterministic &= branches.len() == 1;
            }
        }
        Ok(if deterministic {
            Determinism::Deterministic
        } else {
            Determinism::Nondeterministic
        })
    }

    /// Branches available in `state` reading `symbol`; empty when the
    /// transition function is undefined there.
    pub fn transitions_for(&self, state: &str, symbol: &str) -> &[Transition] {
        self.transitions
            .get(state)
            .and_then(|row| row.get(symbol))
            .map_or(&[], Vec::as_slice)
    }

    pub fn is_final(&self, state: &str) -> bool {
        self.finals.contains(state)
    }

    pub fn in_io_alphabet(&self, symbol: &str) -> bool {
        self.io_alphabet.iter().any(|s| s == symbol)
    }

    /// Split an input string into symbols: on commas when present,
    /// otherwise one symbol per character.
    pub fn parse_input(&self, text: &str) -> Result<Vec<String>, TuringError> {
        let symbols: Vec<String> = if text.contains(',') {
            text.split(',').map(|s| s.trim().to_string()).collect()
        } else {
            text.chars().map(String::from).collect()
        };
        for s in &symbols {
            if !self.in_io_alphabet(s) {
                return Err(TuringError::InputNotInAlphabet(s.clone()));
            }
        }
        Ok(symbols)
    }
}
