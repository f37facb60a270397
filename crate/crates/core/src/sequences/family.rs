//! Number of elements of the standard infinite sets, measured in grossone.

use crate::grossnum::GrossNumber;

use super::SequenceError;

/// A named set whose element count has a closed form in `①`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SetFamily {
    /// `{1, 2, ..., ①}`.
    Naturals,
    Evens,
    Odds,
    /// `{-①, ..., -1, 0, 1, ..., ①}`.
    Integers,
    /// The naturals without `m` of their elements.
    NaturalsMinus(u64),
    /// The naturals together with `m` extra elements.
    NaturalsPlus(u64),
    /// Ordered `j`-tuples of naturals.
    Tuples(u32),
    /// Radix-`b` numerals `0.a_1 a_2 ... a_①`, i.e. the points of `[0, 1)`.
    FractionalNumerals(u64),
    /// The same numerals without zero, i.e. the points of `(0, 1)`.
    OpenUnitInterval(u64),
    /// Radix-`b` integer numerals with `①` digit positions.
    IntegerNumerals(u64),
    /// Naturals extended beyond `①` (`① + 1`, `①^2`, ...).
    ExtendedNaturals,
}

fn check_radix(b: u64) -> Result<GrossNumber, SequenceError> {
    if b < 2 {
        return Err(SequenceError::InvalidParameter(format!("radix {b} must be at least 2")));
    }
    Ok(GrossNumber::from(b).pow(&GrossNumber::grossone())?)
}

/// Element count of `family`.
///
/// ```
/// use grossone::sequences::{cardinality, SetFamily};
///
/// assert_eq!(cardinality(SetFamily::Integers).unwrap().to_string(), "2*g + 1");
/// assert_eq!(cardinality(SetFamily::OpenUnitInterval(2)).unwrap().to_string(), "2^(g) - 1");
/// ```
pub fn cardinality(family: SetFamily) -> Result<GrossNumber, SequenceError> {
    let g = GrossNumber::grossone();
    Ok(match family {
        SetFamily::Naturals => g,
        SetFamily::Evens | SetFamily::Odds => g.checked_div(&2.into())?,
        SetFamily::Integers => &(&g * &GrossNumber::from(2)) + &GrossNumber::one(),
        SetFamily::NaturalsMinus(m) => &g - &GrossNumber::from(m),
        SetFamily::NaturalsPlus(m) => &g + &GrossNumber::from(m),
        SetFamily::Tuples(0) => return Err(SequenceError::InvalidParameter("tuple arity must be at least 1".into())),
        SetFamily::Tuples(j) => g.pow(&GrossNumber::from(j))?,
        SetFamily::FractionalNumerals(b) | SetFamily::IntegerNumerals(b) => check_radix(b)?,
        SetFamily::OpenUnitInterval(b) => &check_radix(b)? - &GrossNumber::one(),
        SetFamily::ExtendedNaturals => {
            return Err(SequenceError::NotExpressible("the number of extended naturals".into()))
        }
    })
}
