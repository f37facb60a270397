//! Line-based machine files.
//!
//! ```text
//! # comment
//! states: q0, q1, qf
//! blank: _
//! tape_alphabet: _, 0, 1
//! io_alphabet: 0, 1
//! initial: q0
//! final: qf
//! q0,1 -> 1,R,q0
//! q0,_ -> _,N,q1
//! ```
//!
//! Headers may appear in any order. A transition line is
//! `STATE,READ -> WRITE,MOVE,NEXT` with `MOVE` one of `L`, `R`, `N`.
//! Repeating a `(STATE, READ)` pair adds a non-deterministic branch; the
//! order of lines fixes the choice index of each branch. The parsed spec
//! is validated before it is returned.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::{MachineSpec, Move, Transition, TuringError};

fn parse_error(line: usize, message: impl Into<String>) -> TuringError {
    TuringError::Parse {
        line,
        message: message.into(),
    }
}

fn list(value: &str) -> Vec<String> {
    value
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(String::from)
        .collect()
}

fn parse_transition(line: usize, text: &str) -> Result<(String, String, Transition), TuringError> {
    let (lhs, rhs) = text
        .split_once("->")
        .ok_or_else(|| parse_error(line, "expected '->'"))?;
    let lhs: Vec<&str> = lhs.split(',').map(str::trim).collect();
    let rhs: Vec<&str> = rhs.split(',').map(str::trim).collect();
    let [state, read] = lhs[..] else {
        return Err(parse_error(line, "left side must be STATE,READ"));
    };
    let [write, movement, next] = rhs[..] else {
        return Err(parse_error(line, "right side must be WRITE,MOVE,NEXT"));
    };
    let movement = match movement {
        "L" => Move::Left,
        "R" => Move::Right,
        "N" => Move::Stay,
        other => return Err(parse_error(line, format!("unknown move {other:?}"))),
    };
    if [state, read, write, next].iter().any(|s| s.is_empty()) {
        return Err(parse_error(line, "empty field"));
    }
    Ok((
        state.to_string(),
        read.to_string(),
        Transition {
            write: write.to_string(),
            movement,
            next: next.to_string(),
        },
    ))
}

impl FromStr for MachineSpec {
    type Err = TuringError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut states = None;
        let mut blank = None;
        let mut tape_alphabet = None;
        let mut io_alphabet = None;
        let mut initial = None;
        let mut finals = None;
        let mut transitions = super::TransitionTable::new();

        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            if content.contains("->") {
                let (q, read, t) = parse_transition(line, content)?;
                transitions.entry(q).or_default().entry(read).or_default().push(t);
                continue;
            }
            let (key, value) = content
                .split_once(':')
                .ok_or_else(|| parse_error(line, format!("unrecognized line {content:?}")))?;
            let value = value.trim();
            let slot = match key.trim() {
                "states" => states.replace(list(value)).is_some(),
                "tape_alphabet" => tape_alphabet.replace(list(value)).is_some(),
                "io_alphabet" => io_alphabet.replace(list(value)).is_some(),
                "final" => finals
                    .replace(list(value).into_iter().collect::<BTreeSet<_>>())
                    .is_some(),
                "blank" => blank.replace(value.to_string()).is_some(),
                "initial" => initial.replace(value.to_string()).is_some(),
                other => return Err(parse_error(line, format!("unknown header {other:?}"))),
            };
            if slot {
                return Err(parse_error(line, format!("header {:?} given twice", key.trim())));
            }
        }

        let missing = |name: &str| parse_error(0, format!("missing header {name:?}"));
        let spec = MachineSpec {
            states: states.ok_or_else(|| missing("states"))?,
            tape_alphabet: tape_alphabet.ok_or_else(|| missing("tape_alphabet"))?,
            blank: blank.ok_or_else(|| missing("blank"))?,
            io_alphabet: io_alphabet.unwrap_or_default(),
            initial: initial.ok_or_else(|| missing("initial"))?,
            finals: finals.unwrap_or_default(),
            transitions,
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl fmt::Display for MachineSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "states: {}", self.states.join(", "))?;
        writeln!(f, "blank: {}", self.blank)?;
        writeln!(f, "tape_alphabet: {}", self.tape_alphabet.join(", "))?;
        writeln!(f, "io_alphabet: {}", self.io_alphabet.join(", "))?;
        writeln!(f, "initial: {}", self.initial)?;
        let finals: Vec<&str> = self.finals.iter().map(String::as_str).collect();
        writeln!(f, "final: {}", finals.join(", "))?;
        for (q, row) in &self.transitions {
            for (read, branches) in row {
                for t in branches {
                    writeln!(f, "{q},{read} -> {},{},{}", t.write, t.movement, t.next)?;
                }
            }
        }
        Ok(())
    }
}
