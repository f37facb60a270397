use std::fmt;

use num_traits::{One, Signed, Zero};

use super::{ExponentPoly, GrossNumber, GrossTerm, Rational};

fn grossone_power(q: &Rational) -> String {
    if q.is_one() {
        "g".to_string()
    } else if q.is_integer() && q.is_positive() {
        format!("g^{q}")
    } else {
        format!("g^({q})")
    }
}

/// Writes `c*f1*f2` (or just `c`, or just the factors when `|c| = 1`)
/// with an explicit leading sign handled by the caller.
fn write_product(f: &mut fmt::Formatter<'_>, magnitude: &Rational, factors: &[String]) -> fmt::Result {
    if factors.is_empty() {
        return write!(f, "{magnitude}");
    }
    if !magnitude.is_one() {
        write!(f, "{magnitude}*")?;
    }
    write!(f, "{}", factors.join("*"))
}

fn write_signed_sum<'a, I>(f: &mut fmt::Formatter<'_>, items: I) -> fmt::Result
where
    I: IntoIterator<Item = (&'a Rational, Vec<String>)>,
{
    let mut first = true;
    for (coefficient, factors) in items {
        let negative = coefficient.is_negative();
        match (first, negative) {
            (true, true) => write!(f, "-")?,
            (true, false) => {}
            (false, true) => write!(f, " - ")?,
            (false, false) => write!(f, " + ")?,
        }
        write_product(f, &coefficient.abs(), &factors)?;
        first = false;
    }
    Ok(())
}

impl fmt::Display for ExponentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_signed_sum(f, self.monomials().map(|(q, a)| (a, vec![grossone_power(q)])))
    }
}

fn term_factors(t: &GrossTerm) -> Vec<String> {
    let mut factors: Vec<String> = t
        .exp_factors()
        .iter()
        .map(|(p, poly)| format!("{p}^({poly})"))
        .collect();
    if !t.gross_power().is_zero() {
        factors.push(grossone_power(t.gross_power()));
    }
    factors
}

impl fmt::Display for GrossTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_signed_sum(f, [(self.coefficient(), term_factors(self))])
    }
}

/// Canonical form: terms in decreasing dominance, e.g.
/// `2^(2*g) + 3*g^2 - 1/2`. Parsing the output yields the same number.
impl fmt::Display for GrossNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        write_signed_sum(f, self.terms().iter().map(|t| (t.coefficient(), term_factors(t))))
    }
}

#[cfg(test)]
mod tests {
    use crate::GrossNumber;

    fn canon(s: &str) -> String {
        s.parse::<GrossNumber>().unwrap().to_string()
    }

    #[test]
    fn canonical_spellings() {
        assert_eq!(canon("g - g"), "0");
        assert_eq!(canon("1/2 - 2*g + 3*g^2 + 4^g"), "2^(2*g) + 3*g^2 - 2*g + 1/2");
        assert_eq!(canon("g/2"), "1/2*g");
        assert_eq!(canon("-g"), "-g");
        assert_eq!(canon("g^(-1)*3"), "3*g^(-1)");
        assert_eq!(canon("2^(g+1)"), "2*2^(g)");
        assert_eq!(canon("10^g"), "2^(g)*5^(g)");
        assert_eq!(canon("(2*g-2)*2^g + 2"), "2*2^(g)*g - 2*2^(g) + 2");
        assert_eq!(canon("2^(g^2 - g/3)"), "2^(g^2 - 1/3*g)");
        assert_eq!(canon("g^(1/2)"), "g^(1/2)");
    }
}
