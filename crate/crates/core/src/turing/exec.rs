use std::collections::BTreeMap;
use std::fmt;

use crate::grossnum::GrossNumber;

use super::{Determinism, MachineSpec, Transition, TuringError};

/// Step cap used when a run is given a budget of `①` steps.
pub const DEFAULT_DESK_CAP: u64 = 1_000_000;

/// State, head position and the non-blank cells of the tape.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Configuration {
    pub state: String,
    /// Only non-blank cells are stored.
    pub tape: BTreeMap<i64, String>,
    pub head: i64,
}

impl Configuration {
    /// Input written from cell 0 rightwards, head on cell 0.
    pub fn initial(spec: &MachineSpec, input: &[String]) -> Self {
        let tape = input
            .iter()
            .enumerate()
            .filter(|(_, s)| **s != spec.blank)
            .map(|(i, s)| (i as i64, s.clone()))
            .collect();
        Self {
            state: spec.initial.clone(),
            tape,
            head: 0,
        }
    }

    pub fn read<'a>(&'a self, blank: &'a str) -> &'a str {
        self.tape.get(&self.head).map_or(blank, String::as_str)
    }

    /// Number of transitions that can fire here; zero once the machine has
    /// halted.
    pub fn branching(&self, spec: &MachineSpec) -> usize {
        if spec.is_final(&self.state) {
            return 0;
        }
        spec.transitions_for(&self.state, self.read(&spec.blank)).len()
    }

    pub fn is_halted(&self, spec: &MachineSpec) -> bool {
        self.branching(spec) == 0
    }

    pub(crate) fn apply(&mut self, t: &Transition, blank: &str) {
        if t.write == blank {
            self.tape.remove(&self.head);
        } else {
            self.tape.insert(self.head, t.write.clone());
        }
        self.head += t.movement.offset();
        self.state.clone_from(&t.next);
    }

    /// Tape contents between the leftmost and rightmost non-blank cells.
    pub fn tape_string(&self, blank: &str) -> String {
        let (Some((&lo, _)), Some((&hi, _))) = (self.tape.first_key_value(), self.tape.last_key_value()) else {
            return String::new();
        };
        (lo..=hi)
            .map(|i| self.tape.get(&i).map_or(blank, String::as_str))
            .collect()
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}[", self.state, self.head)?;
        for (i, (cell, sym)) in self.tape.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{cell}:{sym}")?;
        }
        write!(f, "]")
    }
}

/// Apply branch `choice` of the transition set at `config`.
///
/// The head cell is written before the head moves.
pub fn step(spec: &MachineSpec, config: &Configuration, choice: usize) -> Result<Configuration, TuringError> {
    let symbol = config.read(&spec.blank);
    let branches = if spec.is_final(&config.state) {
        &[]
    } else {
        spec.transitions_for(&config.state, symbol)
    };
    if branches.is_empty() {
        return Err(TuringError::NoTransition {
            state: config.state.clone(),
            symbol: symbol.to_string(),
        });
    }
    let t = branches.get(choice).ok_or(TuringError::BadChoice {
        choice,
        branching: branches.len(),
    })?;
    let mut next = config.clone();
    next.apply(t, &spec.blank);
    Ok(next)
}

/// Step allowance for a run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Budget {
    Steps(u64),
    /// `①` steps. Execution stops at the desk cap; the budget itself stays
    /// symbolic for observability checks.
    Grossone,
}

impl Budget {
    pub fn as_gross(&self) -> GrossNumber {
        match self {
            Budget::Steps(n) => GrossNumber::from(*n),
            Budget::Grossone => GrossNumber::grossone(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RunStatus {
    /// A final state was reached or no transition was defined.
    Halted,
    BudgetExhausted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunResult {
    pub status: RunStatus,
    pub steps_executed: u64,
    pub final_config: Configuration,
    /// Input/output symbols written, one entry per write event.
    pub output: Vec<String>,
    pub budget: Budget,
}

impl RunResult {
    pub fn output_length(&self) -> GrossNumber {
        GrossNumber::from(self.output.len())
    }

    /// Halted in a final state.
    pub fn accepted(&self, spec: &MachineSpec) -> bool {
        self.status == RunStatus::Halted && spec.is_final(&self.final_config.state)
    }
}

/// Run a deterministic machine, capping `①` budgets at
/// [`DEFAULT_DESK_CAP`] executed steps.
pub fn run(spec: &MachineSpec, input: &[String], budget: Budget) -> Result<RunResult, TuringError> {
    run_with_cap(spec, input, budget, DEFAULT_DESK_CAP)
}

pub fn run_with_cap(
    spec: &MachineSpec,
    input: &[String],
    budget: Budget,
    desk_cap: u64,
) -> Result<RunResult, TuringError> {
    if spec.validate()? != Determinism::Deterministic {
        return Err(TuringError::NotDeterministic);
    }
    if let Some(bad) = input.iter().find(|s| !spec.in_io_alphabet(s)) {
        return Err(TuringError::InputNotInAlphabet(bad.clone()));
    }
    let limit = match budget {
        Budget::Steps(0) => return Err(TuringError::InvalidParameter("budget must be at least 1".into())),
        Budget::Steps(n) => n,
        Budget::Grossone if desk_cap == 0 => {
            return Err(TuringError::InvalidParameter("desk cap must be at least 1".into()))
        }
        Budget::Grossone => desk_cap,
    };

    let mut config = Configuration::initial(spec, input);
    let mut output = Vec::new();
    let mut steps = 0u64;
    let status = loop {
        let Some(t) = (!spec.is_final(&config.state))
            .then(|| spec.transitions_for(&config.state, config.read(&spec.blank)).first())
            .flatten()
            .cloned()
        else {
            break RunStatus::Halted;
        };
        if steps == limit {
            break RunStatus::BudgetExhausted;
        }
        config.apply(&t, &spec.blank);
        if spec.in_io_alphabet(&t.write) {
            output.push(t.write);
        }
        steps += 1;
    };
    Ok(RunResult {
        status,
        steps_executed: steps,
        final_config: config,
        output,
        budget,
    })
}
