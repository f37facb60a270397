//! Extensional numeral systems.
//!
//! A numeral system lists the finite values it can name plus a few
//! infinite anchors, each with a finite set of offsets. A value is
//! expressible iff it is one of the finite numerals or equals
//! `anchor + offset` for some template. Nothing is closed under arithmetic:
//! a system that names 1 and 2 does not thereby name 3.
//!
//! # File format
//!
//! ```text
//! # comments and blank lines are ignored
//! name: p_hat
//! finite: 1, 2
//! template: g/2 ± {0, 1, 2}
//! template: g + {-2, -1, 0}
//! ```
//!
//! `finite:` may repeat; its entries must be finite rationals. A
//! `template:` line is `ANCHOR OP {OFFSETS}` where `ANCHOR` is an infinite
//! gross-number literal, `OP` is `+` (offsets used as written) or `±` /
//! `+-` (each offset used with both signs), and `OFFSETS` is a
//! comma-separated list of finite rationals.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use thiserror::Error;

use crate::grossnum::{Classification, GrossNumber, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("numeral file line {line}: {message}")]
pub struct NumeralFileError {
    pub line: usize,
    pub message: String,
}

/// Infinite values `anchor + offset` for each listed offset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumeralTemplate {
    anchor: GrossNumber,
    offsets: BTreeSet<Rational>,
}

impl NumeralTemplate {
    /// `anchor` must be infinite.
    pub fn new(anchor: GrossNumber, offsets: impl IntoIterator<Item = Rational>) -> Option<Self> {
        if anchor.classify() != Classification::Infinite {
            return None;
        }
        Some(Self {
            anchor,
            offsets: offsets.into_iter().collect(),
        })
    }

    pub fn anchor(&self) -> &GrossNumber {
        &self.anchor
    }

    pub fn offsets(&self) -> &BTreeSet<Rational> {
        &self.offsets
    }

    fn values(&self) -> impl Iterator<Item = GrossNumber> + '_ {
        self.offsets
            .iter()
            .map(|o| &self.anchor + &GrossNumber::from_rational(o.clone()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumeralSystem {
    name: String,
    finite_numerals: BTreeSet<Rational>,
    templates: Vec<NumeralTemplate>,
}

const PIRAHA: &str = include_str!("../../../../fixtures/numerals/pirahá.ns");
const P_HAT: &str = include_str!("../../../../fixtures/numerals/p_hat.ns");
const P_TILDE: &str = include_str!("../../../../fixtures/numerals/p_tilde.ns");

impl NumeralSystem {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            finite_numerals: BTreeSet::new(),
            templates: Vec::new(),
        }
    }

    pub fn with_finite(mut self, values: impl IntoIterator<Item = Rational>) -> Self {
        self.finite_numerals.extend(values);
        self
    }

    pub fn with_template(mut self, template: NumeralTemplate) -> Self {
        self.templates.push(template);
        self
    }

    /// Names only 1 and 2.
    pub fn piraha() -> Self {
        PIRAHA.parse().expect("shipped fixture")
    }

    /// 1 and 2 together with ① used as in `①/2 - 2, ..., ①/2 + 2` and
    /// `① - 2, ① - 1, ①`.
    pub fn p_hat() -> Self {
        P_HAT.parse().expect("shipped fixture")
    }

    /// Numerals 1 to 4 combined with ① through `+`, `-` and `/`.
    pub fn p_tilde() -> Self {
        P_TILDE.parse().expect("shipped fixture")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn finite_numerals(&self) -> &BTreeSet<Rational> {
        &self.finite_numerals
    }

    pub fn templates(&self) -> &[NumeralTemplate] {
        &self.templates
    }

    pub fn expressible(&self, value: &GrossNumber) -> bool {
        if let Some(r) = value.as_rational() {
            return self.finite_numerals.contains(&r);
        }
        self.templates.iter().any(|t| {
            (value - &t.anchor)
                .as_rational()
                .is_some_and(|offset| t.offsets.contains(&offset))
        })
    }

    /// Every value this system can name, in increasing order.
    pub fn candidates(&self) -> Vec<GrossNumber> {
        let mut all: Vec<GrossNumber> = self
            .finite_numerals
            .iter()
            .map(|r| GrossNumber::from_rational(r.clone()))
            .chain(self.templates.iter().flat_map(|t| t.values()))
            .collect();
        all.sort();
        all.dedup();
        all
    }
}

fn parse_rational(text: &str, line: usize) -> Result<Rational, NumeralFileError> {
    let value: GrossNumber = text.trim().parse().map_err(|e| NumeralFileError {
        line,
        message: format!("{text:?}: {e}"),
    })?;
    value.as_rational().ok_or_else(|| NumeralFileError {
        line,
        message: format!("{text:?} is not a finite rational"),
    })
}

fn parse_template(body: &str, line: usize) -> Result<NumeralTemplate, NumeralFileError> {
    let err = |message: String| NumeralFileError { line, message };
    let open = body.rfind('{').ok_or_else(|| err("template needs {offsets}".into()))?;
    let inner = body[open + 1..]
        .trim()
        .strip_suffix('}')
        .ok_or_else(|| err("unterminated offset list".into()))?;
    let head = body[..open].trim_end();
    let (anchor_text, symmetric) = if let Some(a) = head.strip_suffix('±') {
        (a, true)
    } else if let Some(a) = head.strip_suffix("+-") {
        (a, true)
    } else if let Some(a) = head.strip_suffix('+') {
        (a, false)
    } else {
        return Err(err("expected '+', '±' or '+-' before the offset list".into()));
    };
    let anchor: GrossNumber = anchor_text
        .trim()
        .parse()
        .map_err(|e| err(format!("anchor {anchor_text:?}: {e}")))?;
    let mut offsets = Vec::new();
    for item in inner.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let o = parse_rational(item, line)?;
        if symmetric && !o.is_zero() {
            offsets.push(-o.clone());
        }
        offsets.push(o);
    }
    NumeralTemplate::new(anchor, offsets).ok_or_else(|| err(format!("anchor {anchor_text:?} is not infinite")))
}

impl FromStr for NumeralSystem {
    type Err = NumeralFileError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut system = NumeralSystem::new("unnamed");
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (key, value) = content.split_once(':').ok_or_else(|| NumeralFileError {
                line,
                message: format!("expected 'key: value', got {content:?}"),
            })?;
            match key.trim() {
                "name" => system.name = value.trim().to_string(),
                "finite" => {
                    for item in value.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                        system.finite_numerals.insert(parse_rational(item, line)?);
                    }
                }
                "template" => system.templates.push(parse_template(value, line)?),
                other => {
                    return Err(NumeralFileError {
                        line,
                        message: format!("unknown key {other:?}"),
                    })
                }
            }
        }
        Ok(system)
    }
}

impl fmt::Display for NumeralSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "name: {}", self.name)?;
        if !self.finite_numerals.is_empty() {
            let items: Vec<String> = self.finite_numerals.iter().map(|r| r.to_string()).collect();
            writeln!(f, "finite: {}", items.join(", "))?;
        }
        for t in &self.templates {
            let items: Vec<String> = t.offsets.iter().map(|r| r.to_string()).collect();
            writeln!(f, "template: {} + {{{}}}", t.anchor, items.join(", "))?;
        }
        Ok(())
    }
}
