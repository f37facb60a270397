//! Exact gross-numbers.
//!
//! A [`GrossNumber`] is a finite sum of terms
//! `r * prod(p_i^{E_i}) * ①^p` where `r` is a nonzero rational, each `p_i`
//! is a prime, each `E_i` is a purely infinite polynomial in `①` and `p` is
//! a rational power of grossone. Terms are kept sorted by strictly
//! decreasing dominance, so the representation is canonical: two numbers
//! are equal iff their term lists are identical.
//!
//! ```
//! use grossone::GrossNumber;
//!
//! let g = GrossNumber::grossone();
//! assert_eq!(&g - &g, GrossNumber::zero());
//! assert_eq!(g.checked_div(&g).unwrap(), GrossNumber::one());
//!
//! let x: GrossNumber = "3*g^2 - 2*g + 1/2".parse().unwrap();
//! assert_eq!(x.terms().len(), 3);
//! assert_eq!(x.to_string(), "3*g^2 - 2*g + 1/2");
//! ```

mod display;
mod parse;
mod primes;
mod term;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

pub use parse::parse;
pub use term::{ExponentPoly, GrossTerm};

use term::{Scale, TermKey};

/// Exact rational used for coefficients and powers.
pub type Rational = BigRational;

/// Largest finite integer exponent accepted by [`GrossNumber::pow`].
pub const MAX_FINITE_EXPONENT: u32 = 1 << 20;

/// Largest exponent accepted for a base with more than one term.
pub const MAX_MULTI_TERM_EXPONENT: u32 = 4096;

// Long division gives up after this many quotient terms.
const MAX_DIVISION_STEPS: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GrossError {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unsupported form: {0}")]
    UnsupportedForm(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("no exact quotient in gross-number form")]
    InexactDivision,
    #[error("zero raised to a non-positive power")]
    ZeroToNonpositive,
}

impl GrossError {
    /// Variant name, as reported by the command-line front end.
    pub fn name(&self) -> &'static str {
        match self {
            GrossError::Syntax { .. } => "SyntaxError",
            GrossError::UnsupportedForm(_) => "UnsupportedForm",
            GrossError::DivisionByZero => "DivisionByZero",
            GrossError::InexactDivision => "InexactDivision",
            GrossError::ZeroToNonpositive => "ZeroToNonpositive",
        }
    }
}

/// Classification of a gross-number by its leading term.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Classification {
    Zero,
    Finite,
    Infinite,
    Infinitesimal,
    /// A finite leading part followed by infinitesimal terms.
    Mixed,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GrossNumber {
    terms: Vec<GrossTerm>,
}

impl GrossNumber {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    /// The unit infinite number ①.
    pub fn grossone() -> Self {
        Self::grossone_power(Rational::one())
    }

    /// `①^p` for a rational power `p`.
    pub fn grossone_power(p: Rational) -> Self {
        Self::from_term(GrossTerm::new(
            Rational::one(),
            TermKey {
                exp_factors: BTreeMap::new(),
                gross_power: p,
            },
        ))
    }

    pub fn from_rational(r: Rational) -> Self {
        if r.is_zero() {
            Self::zero()
        } else {
            Self::from_term(GrossTerm::constant(r))
        }
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    /// `numer / denom` as a finite number. Panics if `denom` is zero.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        Self::from_rational(Rational::new(numer.into(), denom.into()))
    }

    fn from_term(t: GrossTerm) -> Self {
        Self { terms: vec![t] }
    }

    /// Build from arbitrary terms, merging equal keys and sorting.
    fn from_unsorted(mut terms: Vec<GrossTerm>) -> Self {
        terms.sort_by(|a, b| b.key.dominance_cmp(&a.key));
        let mut out: Vec<GrossTerm> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.key == t.key => {
                    last.coefficient += t.coefficient;
                    if last.coefficient.is_zero() {
                        out.pop();
                    }
                }
                _ => out.push(t),
            }
        }
        Self { terms: out }
    }

    /// Terms in strictly decreasing dominance order.
    pub fn terms(&self) -> &[GrossTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The rational value, if the number is finite with no infinite or
    /// infinitesimal parts.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [t] if t.key.is_unit() => Some(t.coefficient.clone()),
            _ => None,
        }
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational().filter(|r| r.is_integer()).map(|r| r.to_integer())
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.as_integer().and_then(|n| n.to_i64())
    }

    /// True when the number is a plain rational.
    pub fn is_finite(&self) -> bool {
        self.as_rational().is_some()
    }

    /// Integer in the grossone sense: no infinitesimal part and an
    /// integer finite part. Infinite parts such as `①/4` or `2^①` count as
    /// integers, since ① is divisible by every finite number.
    pub fn is_integer(&self) -> bool {
        self.terms.iter().all(|t| match t.scale() {
            Scale::Infinite => true,
            Scale::Finite => t.coefficient.is_integer(),
            Scale::Infinitesimal => false,
        })
    }

    /// Coefficient of the finite (unit-key) term.
    pub fn finite_part(&self) -> Rational {
        self.terms
            .iter()
            .find(|t| t.key.is_unit())
            .map(|t| t.coefficient.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn signum(&self) -> Ordering {
        match self.terms.first() {
            None => Ordering::Equal,
            Some(t) if t.coefficient.is_positive() => Ordering::Greater,
            Some(_) => Ordering::Less,
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() == Ordering::Less {
            -self
        } else {
            self.clone()
        }
    }

    pub fn classify(&self) -> Classification {
        let Some(lead) = self.terms.first() else {
            return Classification::Zero;
        };
        match lead.scale() {
            Scale::Infinite => Classification::Infinite,
            Scale::Infinitesimal => Classification::Infinitesimal,
            Scale::Finite if self.terms.len() > 1 => Classification::Mixed,
            Scale::Finite => Classification::Finite,
        }
    }

    /// Exact quotient. Single-term divisors divide termwise; otherwise
    /// leading-term long division must reach a zero remainder.
    pub fn checked_div(&self, divisor: &Self) -> Result<Self, GrossError> {
        match divisor.terms.as_slice() {
            [] => Err(GrossError::DivisionByZero),
            [d] => {
                let inv = d.inverse();
                Ok(Self {
                    terms: self.terms.iter().map(|t| t.mul(&inv)).collect(),
                })
            }
            _ => self.long_div(divisor),
        }
    }

    fn long_div(&self, divisor: &Self) -> Result<Self, GrossError> {
        if self.is_zero() {
            return Ok(Self::zero());
        }
        // In an exact product the least dominant terms multiply without
        // cancellation, so no quotient term can lie below this key.
        let floor = self
            .terms
            .last()
            .unwrap()
            .key
            .mul(&divisor.terms.last().unwrap().key.inverse());
        let lead_inv = divisor.terms[0].inverse();
        let mut quotient = Vec::new();
        let mut rest = self.clone();
        for _ in 0..MAX_DIVISION_STEPS {
            let Some(lead) = rest.terms.first() else {
                return Ok(Self::from_unsorted(quotient));
            };
            let q = lead.mul(&lead_inv);
            if q.key.dominance_cmp(&floor) == Ordering::Less {
                return Err(GrossError::InexactDivision);
            }
            rest = &rest - &divisor.mul_term(&q);
            quotient.push(q);
        }
        Err(GrossError::InexactDivision)
    }

    fn mul_term(&self, t: &GrossTerm) -> Self {
        Self {
            terms: self.terms.iter().map(|s| s.mul(t)).collect(),
        }
    }

    /// `self ^ exponent`.
    ///
    /// Accepted forms: a finite non-negative integer exponent; a finite
    /// negative integer exponent on a single-term base; a finite rational
    /// exponent on a unit-coefficient term (`①^(1/2)`); or a finite integer
    /// base `b >= 0` with an exponent made of an integer constant plus a
    /// purely infinite part. In the last case `b` is factored into primes
    /// and `b^constant` is folded into the coefficient, so `4^①` and
    /// `2^(2①)` have the same representation.
    pub fn pow(&self, exponent: &Self) -> Result<Self, GrossError> {
        if let Some(n) = exponent.as_integer() {
            return self.pow_integer(&n);
        }
        if let Some(r) = exponent.as_rational() {
            // Rational powers stay exact only on unit-coefficient terms
            // such as ①^(1/2).
            return match self.terms.as_slice() {
                [t] if t.coefficient.is_one() => Ok(Self::from_term(GrossTerm::new(Rational::one(), t.key.pow(&r)))),
                _ => Err(GrossError::UnsupportedForm(format!(
                    "non-integer exponent {r} on {self}"
                ))),
            };
        }
        let Some(base) = self.as_integer() else {
            return Err(GrossError::UnsupportedForm(format!(
                "base {self} with non-finite exponent {exponent}; only finite integer bases admit infinite exponents"
            )));
        };
        let constant = exponent.finite_part();
        if !constant.is_integer() {
            return Err(GrossError::UnsupportedForm(format!(
                "non-integer finite exponent part {constant}"
            )));
        }
        let mut infinite = Vec::new();
        for t in &exponent.terms {
            match t.scale() {
                Scale::Finite => {}
                Scale::Infinitesimal => {
                    return Err(GrossError::UnsupportedForm(format!(
                        "infinitesimal part in exponent {exponent}"
                    )))
                }
                Scale::Infinite if !t.is_pure_power() => {
                    return Err(GrossError::UnsupportedForm(format!(
                        "exponential inside exponent {exponent}"
                    )))
                }
                Scale::Infinite => infinite.push((t.gross_power().clone(), t.coefficient.clone())),
            }
        }

        if base.is_negative() {
            return Err(GrossError::UnsupportedForm(format!(
                "negative base {base} with infinite exponent"
            )));
        }
        if base.is_zero() {
            return if exponent.signum() == Ordering::Greater {
                Ok(Self::zero())
            } else {
                Err(GrossError::ZeroToNonpositive)
            };
        }
        if base.is_one() {
            return Ok(Self::one());
        }
        let base_u64 = base
            .to_u64()
            .ok_or_else(|| GrossError::UnsupportedForm(format!("base {base} too large to factor")))?;
        let shift = Self::from_integer(base.clone()).pow_integer(&constant.to_integer())?;
        let poly = ExponentPoly::from_monomials(infinite);
        let exp_factors = primes::factorize(base_u64)
            .into_iter()
            .map(|(p, e)| (p, poly.scale(&Rational::from_integer(e.into()))))
            .collect();
        let exponential = Self::from_term(GrossTerm::new(
            Rational::one(),
            TermKey {
                exp_factors,
                gross_power: Rational::zero(),
            },
        ));
        Ok(&shift * &exponential)
    }

    fn pow_integer(&self, n: &BigInt) -> Result<Self, GrossError> {
        if n.is_zero() {
            return if self.is_zero() {
                Err(GrossError::ZeroToNonpositive)
            } else {
                Ok(Self::one())
            };
        }
        let magnitude = n
            .abs()
            .to_u32()
            .filter(|m| *m <= MAX_FINITE_EXPONENT)
            .ok_or_else(|| GrossError::UnsupportedForm(format!("exponent {n} too large")))?;
        match self.terms.as_slice() {
            [] if n.is_negative() => Err(GrossError::ZeroToNonpositive),
            [] => Ok(Self::zero()),
            [t] => {
                let t = if n.is_negative() { t.inverse() } else { t.clone() };
                let coefficient = num_traits::pow(t.coefficient.clone(), magnitude as usize);
                let key = t.key.pow(&Rational::from_integer(magnitude.into()));
                Ok(Self::from_term(GrossTerm::new(coefficient, key)))
            }
            _ if n.is_negative() => Err(GrossError::UnsupportedForm(format!(
                "negative power of multi-term base {self}"
            ))),
            _ if magnitude > MAX_MULTI_TERM_EXPONENT => Err(GrossError::UnsupportedForm(format!(
                "exponent {n} too large for multi-term base"
            ))),
            _ => {
                let mut acc = Self::one();
                let mut square = self.clone();
                let mut e = magnitude;
                while e > 0 {
                    if e & 1 == 1 {
                        acc = &acc * &square;
                    }
                    e >>= 1;
                    if e > 0 {
                        square = &square * &square;
                    }
                }
                Ok(acc)
            }
        }
    }
}

impl Ord for GrossNumber {
    /// Real-number order: the sign of the leading term of `self - other`.
    fn cmp(&self, other: &Self) -> Ordering {
        // Merge-walk both lists; the first key where coefficients differ
        // decides, which avoids building the full difference.
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.terms.get(i), other.terms.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(a), None) => return sign_of(&a.coefficient),
                (None, Some(b)) => return sign_of(&b.coefficient).reverse(),
                (Some(a), Some(b)) => match a.key.dominance_cmp(&b.key) {
                    Ordering::Greater => return sign_of(&a.coefficient),
                    Ordering::Less => return sign_of(&b.coefficient).reverse(),
                    Ordering::Equal => {
                        let c = a.coefficient.cmp(&b.coefficient);
                        if c != Ordering::Equal {
                            return c;
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl PartialOrd for GrossNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn sign_of(r: &Rational) -> Ordering {
    r.cmp(&Rational::zero())
}

impl Add for &GrossNumber {
    type Output = GrossNumber;

    fn add(self, rhs: &GrossNumber) -> GrossNumber {
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < rhs.terms.len() {
            let (a, b) = (&self.terms[i], &rhs.terms[j]);
            match a.key.dominance_cmp(&b.key) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b.clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &a.coefficient + &b.coefficient;
                    if !c.is_zero() {
                        out.push(GrossTerm::new(c, a.key.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&rhs.terms[j..]);
        GrossNumber { terms: out }
    }
}

impl Neg for &GrossNumber {
    type Output = GrossNumber;

    fn neg(self) -> GrossNumber {
        GrossNumber {
            terms: self
                .terms
                .iter()
                .map(|t| GrossTerm::new(-&t.coefficient, t.key.clone()))
                .collect(),
        }
    }
}

impl Sub for &GrossNumber {
    type Output = GrossNumber;

    fn sub(self, rhs: &GrossNumber) -> GrossNumber {
        self + &(-rhs)
    }
}

impl Mul for &GrossNumber {
    type Output = GrossNumber;

    fn mul(self, rhs: &GrossNumber) -> GrossNumber {
        let mut products = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for a in &self.terms {
            for b in &rhs.terms {
                products.push(a.mul(b));
            }
        }
        GrossNumber::from_unsorted(products)
    }
}

macro_rules! forward_owned_binop {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for GrossNumber {
            type Output = GrossNumber;
            fn $method(self, rhs: GrossNumber) -> GrossNumber {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&GrossNumber> for GrossNumber {
            type Output = GrossNumber;
            fn $method(self, rhs: &GrossNumber) -> GrossNumber {
                (&self).$method(rhs)
            }
        }
        impl $trait<GrossNumber> for &GrossNumber {
            type Output = GrossNumber;
            fn $method(self, rhs: GrossNumber) -> GrossNumber {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_owned_binop!(Add::add, Sub::sub, Mul::mul);

impl Neg for GrossNumber {
    type Output = GrossNumber;
    fn neg(self) -> GrossNumber {
        -&self
    }
}

macro_rules! from_primitive {
    ($($t:ty),*) => {$(
        impl From<$t> for GrossNumber {
            fn from(n: $t) -> Self {
                Self::from_integer(n)
            }
        }
    )*};
}

from_primitive!(i32, i64, u32, u64, usize);

impl From<Rational> for GrossNumber {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gn(s: &str) -> GrossNumber {
        s.parse().unwrap_or_else(|e| panic!("{s}: {e}"))
    }

    #[test]
    fn identity_suite() {
        let g = GrossNumber::grossone();
        let zero = GrossNumber::zero();
        let one = GrossNumber::one();
        assert_eq!(&zero * &g, zero);
        assert_eq!(&g - &g, zero);
        assert_eq!(g.checked_div(&g).unwrap(), one);
        assert_eq!(g.pow(&zero).unwrap(), one);
        assert_eq!(one.pow(&g).unwrap(), one);
        assert_eq!(zero.pow(&g).unwrap(), zero);
    }

    #[test]
    fn simple_arithmetic() {
        assert_eq!(gn("g+1") + gn("g+2"), gn("2*g+3"));
        assert_eq!(gn("g/2") * GrossNumber::from(2), gn("g"));
        assert_eq!(gn("2*g/5") + gn("g/5*3"), gn("g"));
        assert_eq!(gn("2*g+2").checked_div(&GrossNumber::from(2)).unwrap(), gn("g+1"));
    }

    #[test]
    fn constant_exponent_folds_into_coefficient() {
        let folded = gn("2^(g+1)");
        assert_eq!(folded, GrossNumber::from(2) * gn("2^g"));
        assert_eq!(folded.terms().len(), 1);
        assert_eq!(folded.terms()[0].coefficient(), &Rational::from_integer(2.into()));
    }

    #[test]
    fn composite_bases_factor() {
        assert_eq!(gn("4^g"), gn("2^(2*g)"));
        assert_eq!(gn("10^g"), gn("2^g") * gn("5^g"));
        assert_eq!(gn("10^g").terms()[0].exp_factors().len(), 2);
    }

    #[test]
    fn rejected_powers() {
        let g = GrossNumber::grossone();
        assert!(matches!(g.pow(&g), Err(GrossError::UnsupportedForm(_))));
        assert!(matches!(gn("2").pow(&gn("1/2")), Err(GrossError::UnsupportedForm(_))));
        assert!(matches!(
            gn("2").pow(&gn("g + 1/2")),
            Err(GrossError::UnsupportedForm(_))
        ));
        assert!(matches!(
            gn("2").pow(&gn("g + g^(-1)")),
            Err(GrossError::UnsupportedForm(_))
        ));
        assert!(matches!(gn("2").pow(&gn("2^g")), Err(GrossError::UnsupportedForm(_))));
        assert!(matches!(gn("-2").pow(&g), Err(GrossError::UnsupportedForm(_))));
        assert!(matches!(gn("g+1").pow(&gn("-1")), Err(GrossError::UnsupportedForm(_))));
        assert_eq!(GrossNumber::zero().pow(&-&g), Err(GrossError::ZeroToNonpositive));
        assert_eq!(
            GrossNumber::zero().pow(&GrossNumber::zero()),
            Err(GrossError::ZeroToNonpositive)
        );
        assert_eq!(GrossNumber::zero().pow(&gn("-1")), Err(GrossError::ZeroToNonpositive));
    }

    #[test]
    fn negative_integer_powers_invert() {
        assert_eq!(gn("g").pow(&gn("-1")).unwrap(), gn("g^(-1)"));
        assert_eq!(gn("2*g^2").pow(&gn("-2")).unwrap(), gn("1/4*g^(-4)"));
        assert_eq!(gn("2").pow(&gn("-3")).unwrap(), gn("1/8"));
    }

    #[test]
    fn multi_term_powers_expand() {
        assert_eq!(gn("g+1").pow(&gn("2")).unwrap(), gn("g^2 + 2*g + 1"));
        assert_eq!(gn("g-1").pow(&gn("3")).unwrap(), gn("g^3 - 3*g^2 + 3*g - 1"));
    }

    #[test]
    fn comparisons() {
        assert!(gn("g+1") > gn("g"));
        assert!(gn("g-1") < gn("g"));
        assert!(gn("2^g") > gn("g^1000"));
        assert!(gn("2^g") > gn("3^(g/2)"));
        assert!(gn("2^g") < gn("3^(2*g/3)"));
        assert!(gn("g^(-1)") > GrossNumber::zero());
        assert!(gn("g^(-1)") < gn("1/1000000"));
        assert!(gn("-g") < gn("-1000000"));
        assert!(gn("2^(-g)") < gn("g^(-1000)"));
        assert_eq!(gn("2^g - 1").cmp(&gn("2^g - 1")), Ordering::Equal);
    }

    #[test]
    fn classification() {
        assert_eq!(GrossNumber::zero().classify(), Classification::Zero);
        assert_eq!(gn("g-2").classify(), Classification::Infinite);
        assert_eq!(gn("g^(-1)").classify(), Classification::Infinitesimal);
        assert_eq!(gn("7/3").classify(), Classification::Finite);
        assert_eq!(gn("3 + g^(-1)").classify(), Classification::Mixed);
        assert_eq!(gn("2^(-g)").classify(), Classification::Infinitesimal);
    }

    #[test]
    fn exact_division() {
        assert_eq!(gn("g^2 - 1").checked_div(&gn("g+1")).unwrap(), gn("g-1"));
        assert_eq!(gn("g^2").checked_div(&gn("g+1")), Err(GrossError::InexactDivision));
        assert_eq!(
            gn("g").checked_div(&GrossNumber::zero()),
            Err(GrossError::DivisionByZero)
        );
        assert_eq!(
            gn("2^g*g - 2^g + g - 1").checked_div(&gn("2^g + 1")).unwrap(),
            gn("g - 1")
        );
    }

    #[test]
    fn integrality() {
        assert!(gn("g/4").is_integer());
        assert!(gn("g/4 + 3").is_integer());
        assert!(!gn("g/4 + 1/2").is_integer());
        assert!(!gn("g + g^(-1)").is_integer());
        assert!(gn("2^g - 1").is_integer());
    }
}
