//! Limits on what a machine's output can show to an observer.

use num_bigint::BigUint;

use crate::grossnum::GrossNumber;

use super::TuringError;

/// Output limits of a physical machine and its user.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PhysicalProfile {
    /// Longest output the machine can produce.
    pub machine_max_output: u64,
    /// Longest output the user can read.
    pub user_max_readable: u64,
    /// Radix of the user's numerals.
    pub user_radix: u32,
}

/// Length of the outputs that can be both computed and read.
pub fn kstar(profile: &PhysicalProfile) -> u64 {
    profile.machine_max_output.min(profile.user_max_readable)
}

/// An output of `length` symbols fits in one sequence iff `length <= ①`.
pub fn output_observable(length: &GrossNumber) -> bool {
    *length <= GrossNumber::grossone()
}

/// Symbols of radix `to` needed per symbol of radix `from`: the least `m`
/// with `to^m >= from`.
pub fn code_length(from: u32, to: u32) -> Result<u32, TuringError> {
    if from < 2 || to < 2 {
        return Err(TuringError::InvalidParameter(format!(
            "radices must be at least 2 (got {from} and {to})"
        )));
    }
    let target = BigUint::from(from);
    let mut power = BigUint::from(1u32);
    let mut m = 0;
    while power < target {
        power *= to;
        m += 1;
    }
    Ok(m.max(1))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recoded {
    pub code_length: u32,
    pub length: GrossNumber,
    pub observable: bool,
}

/// Length of an output after rewriting each radix-`from` symbol as a
/// fixed-width radix-`to` code, and whether the result still fits in a
/// sequence.
///
/// ```
/// use grossone::{GrossNumber, turing::recode_length};
///
/// let r = recode_length(&GrossNumber::grossone(), 3, 2).unwrap();
/// assert_eq!(r.length.to_string(), "2*g");
/// assert!(!r.observable);
/// ```
pub fn recode_length(length: &GrossNumber, from: u32, to: u32) -> Result<Recoded, TuringError> {
    let m = code_length(from, to)?;
    let new_length = length * &GrossNumber::from(m);
    Ok(Recoded {
        code_length: m,
        observable: output_observable(&new_length),
        length: new_length,
    })
}

/// Upper bound `b^①` on the number of complete sequences a radix-`b`
/// output alphabet can produce.
pub fn sequence_count_bound(radix: u32) -> Result<GrossNumber, TuringError> {
    if radix < 2 {
        return Err(TuringError::InvalidParameter(format!(
            "radix {radix} must be at least 2"
        )));
    }
    Ok(GrossNumber::from(radix)
        .pow(&GrossNumber::grossone())
        .expect("integer base with grossone exponent"))
}

/// At most `①` complete sequences can be listed in one sequence,
/// whatever the radix.
pub fn enumeration_bound() -> GrossNumber {
    GrossNumber::grossone()
}
