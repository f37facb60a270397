//! Sequences whose length is an explicit gross-number.
//!
//! A sequence is stored as a rule plus a length, so sequences with `①`
//! elements are ordinary values; only elements that are asked for are ever
//! computed. Every constructor enforces `1 <= length <= ①`: no sequence can
//! have more than grossone elements.
//!
//! ```
//! use grossone::{GrossNumber, sequences::ObservableSequence};
//!
//! let g = GrossNumber::grossone();
//! let odds = ObservableSequence::arithmetic(1.into(), 2.into(), g.clone()).unwrap();
//! assert_eq!(odds.last_element(), "2*g - 1".parse().unwrap());
//!
//! let too_long = ObservableSequence::arithmetic(1.into(), 1.into(), &g + &GrossNumber::one());
//! assert!(too_long.is_err());
//! ```

mod family;
mod numeral;

use thiserror::Error;

use crate::grossnum::{GrossError, GrossNumber};

pub use family::{cardinality, SetFamily};
pub use numeral::{NumeralFileError, NumeralSystem, NumeralTemplate};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("sequence length {0} exceeds grossone")]
    LengthExceedsGrossone(GrossNumber),
    #[error("sequence must have at least one element")]
    EmptySequence,
    #[error("sequence length {0} is not an integer")]
    NonIntegerLength(GrossNumber),
    #[error("arithmetic sequence step must be nonzero")]
    ZeroStep,
    #[error("cannot remove {removed} elements from a sequence of length {length}")]
    RemoveTooMany { removed: GrossNumber, length: GrossNumber },
    #[error("index {index} outside 1..={length}")]
    IndexOutOfRange { index: GrossNumber, length: GrossNumber },
    #[error("{0} is not expressible with grossone-based numerals")]
    NotExpressible(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Gross(#[from] GrossError),
}

impl SequenceError {
    pub fn name(&self) -> &'static str {
        match self {
            SequenceError::LengthExceedsGrossone(_) => "LengthExceedsGrossone",
            SequenceError::EmptySequence => "EmptySequence",
            SequenceError::NonIntegerLength(_) => "NonIntegerLength",
            SequenceError::ZeroStep => "ZeroStep",
            SequenceError::RemoveTooMany { .. } => "RemoveTooMany",
            SequenceError::IndexOutOfRange { .. } => "IndexOutOfRange",
            SequenceError::NotExpressible(_) => "NotExpressible",
            SequenceError::InvalidParameter(_) => "InvalidParameter",
            SequenceError::Gross(e) => e.name(),
        }
    }
}

/// How the elements of a sequence are generated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SequenceRule {
    /// `a_n = first + step * (n - 1)`.
    Arithmetic { first: GrossNumber, step: GrossNumber },
    /// An explicit finite list.
    Literal(Vec<GrossNumber>),
    /// `a_n = parent_{start_index + n - 1}`.
    SuffixOf {
        parent: Box<ObservableSequence>,
        start_index: GrossNumber,
    },
    /// All of `head`, then `tail` from its first element on.
    Concat {
        head: Box<ObservableSequence>,
        tail: Box<ObservableSequence>,
    },
}

/// A sequence `{a_n : k}` with an explicit length `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObservableSequence {
    rule: SequenceRule,
    length: GrossNumber,
}

fn check_length(length: &GrossNumber) -> Result<(), SequenceError> {
    if *length < GrossNumber::one() {
        return Err(SequenceError::EmptySequence);
    }
    if *length > GrossNumber::grossone() {
        return Err(SequenceError::LengthExceedsGrossone(length.clone()));
    }
    if !length.is_integer() {
        return Err(SequenceError::NonIntegerLength(length.clone()));
    }
    Ok(())
}

impl ObservableSequence {
    /// `{first + step*(n-1) : length}`.
    pub fn arithmetic(first: GrossNumber, step: GrossNumber, length: GrossNumber) -> Result<Self, SequenceError> {
        if step.is_zero() {
            return Err(SequenceError::ZeroStep);
        }
        check_length(&length)?;
        Ok(Self {
            rule: SequenceRule::Arithmetic { first, step },
            length,
        })
    }

    /// The complete counting sequence `{n : ①}`.
    pub fn naturals() -> Self {
        Self::arithmetic(GrossNumber::one(), GrossNumber::one(), GrossNumber::grossone()).expect("valid")
    }

    pub fn literal(values: Vec<GrossNumber>) -> Result<Self, SequenceError> {
        if values.is_empty() {
            return Err(SequenceError::EmptySequence);
        }
        let length = GrossNumber::from(values.len());
        Ok(Self {
            rule: SequenceRule::Literal(values),
            length,
        })
    }

    pub fn rule(&self) -> &SequenceRule {
        &self.rule
    }

    pub fn len(&self) -> &GrossNumber {
        &self.length
    }

    /// Always false: sequences have at least one element.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// True iff the sequence has exactly `①` elements.
    pub fn is_complete(&self) -> bool {
        self.length == GrossNumber::grossone()
    }

    fn contains_index(&self, index: &GrossNumber) -> bool {
        index.is_integer() && *index >= GrossNumber::one() && *index <= self.length
    }

    /// The element at 1-based `index`.
    pub fn element(&self, index: &GrossNumber) -> Result<GrossNumber, SequenceError> {
        if !self.contains_index(index) {
            return Err(SequenceError::IndexOutOfRange {
                index: index.clone(),
                length: self.length.clone(),
            });
        }
        Ok(self.element_unchecked(index))
    }

    fn element_unchecked(&self, index: &GrossNumber) -> GrossNumber {
        match &self.rule {
            SequenceRule::Arithmetic { first, step } => first + &(step * &(index - &GrossNumber::one())),
            SequenceRule::Literal(values) => {
                let i = index.to_i64().expect("literal index is finite") as usize;
                values[i - 1].clone()
            }
            SequenceRule::SuffixOf { parent, start_index } => {
                parent.element_unchecked(&(&(start_index + index) - &GrossNumber::one()))
            }
            SequenceRule::Concat { head, tail } => {
                if index <= head.len() {
                    head.element_unchecked(index)
                } else {
                    tail.element_unchecked(&(index - head.len()))
                }
            }
        }
    }

    pub fn first_element(&self) -> GrossNumber {
        self.element_unchecked(&GrossNumber::one())
    }

    pub fn last_element(&self) -> GrossNumber {
        self.element_unchecked(&self.length)
    }

    /// Place `a` and then `b` in one sequence. When the combined length
    /// exceeds `①`, the merged sequence stops at exactly `①` elements and
    /// the rest of `b` is returned as a second sequence.
    pub fn concat(a: &Self, b: &Self) -> (Self, Option<Self>) {
        let g = GrossNumber::grossone();
        let total = a.len() + b.len();
        let merged_len = std::cmp::min(total.clone(), g.clone());
        let merged = Self {
            rule: SequenceRule::Concat {
                head: Box::new(a.clone()),
                tail: Box::new(b.clone()),
            },
            length: merged_len,
        };
        if total <= g {
            return (merged, None);
        }
        let taken = &g - a.len();
        let remainder = Self {
            rule: SequenceRule::SuffixOf {
                parent: Box::new(b.clone()),
                start_index: &taken + &GrossNumber::one(),
            },
            length: &total - &g,
        };
        (merged, Some(remainder))
    }

    /// Drop `count` elements from the end, keeping the rule. The result is
    /// always strictly shorter than `self`.
    pub fn remove_elements(&self, count: &GrossNumber) -> Result<Self, SequenceError> {
        if count.signum() == std::cmp::Ordering::Less || count >= &self.length || !count.is_integer() {
            return Err(SequenceError::RemoveTooMany {
                removed: count.clone(),
                length: self.length.clone(),
            });
        }
        let mut rule = self.rule.clone();
        if let SequenceRule::Literal(values) = &mut rule {
            let keep = values.len() - count.to_i64().expect("finite count") as usize;
            values.truncate(keep);
        }
        Ok(Self {
            rule,
            length: &self.length - count,
        })
    }

    /// Every index `i` in `1..=len` with `element(i) == value`, ascending.
    pub fn indices_of(&self, value: &GrossNumber) -> Vec<GrossNumber> {
        let mut found: Vec<GrossNumber> = match &self.rule {
            SequenceRule::Arithmetic { first, step } => (value - first)
                .checked_div(step)
                .map(|q| vec![&q + &GrossNumber::one()])
                .unwrap_or_default(),
            SequenceRule::Literal(values) => values
                .iter()
                .enumerate()
                .filter(|(_, v)| *v == value)
                .map(|(i, _)| GrossNumber::from(i + 1))
                .collect(),
            SequenceRule::SuffixOf { parent, start_index } => parent
                .indices_of(value)
                .into_iter()
                .map(|j| &(&j - start_index) + &GrossNumber::one())
                .collect(),
            SequenceRule::Concat { head, tail } => {
                let mut v = head.indices_of(value);
                v.extend(tail.indices_of(value).into_iter().map(|j| &j + head.len()));
                v
            }
        };
        found.retain(|i| self.contains_index(i));
        found.sort();
        found.dedup();
        found
    }

    /// The `(index, value)` pairs whose value has a numeral in `numerals`,
    /// ordered by index. Candidates are the finitely many values the
    /// numeral system can express; each is located by solving
    /// `element(i) = candidate` rather than by scanning indices.
    pub fn observable_elements(&self, numerals: &NumeralSystem) -> Vec<(GrossNumber, GrossNumber)> {
        let mut out: Vec<(GrossNumber, GrossNumber)> = numerals
            .candidates()
            .into_iter()
            .flat_map(|v| self.indices_of(&v).into_iter().map(move |i| (i, v.clone())))
            .collect();
        out.sort();
        out.dedup();
        out
    }
}
