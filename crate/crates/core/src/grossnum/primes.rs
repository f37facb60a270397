//! Prime factorization of integer bases and exact sign decisions for
//! rational combinations of prime logarithms.

use std::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Rational;

/// Factor `n >= 2` into `(prime, multiplicity)` pairs, ascending.
pub(crate) fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    debug_assert!(n >= 2);
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

// Beyond this many bits the exact product comparison is replaced by a
// float estimate, as long as the estimate is unambiguous.
const EXACT_BITS_LIMIT: f64 = (1u64 << 22) as f64;

/// Sign of `sum(c_p * ln p)` for distinct primes `p`.
///
/// Logarithms of distinct primes are linearly independent over the
/// rationals, so the sum is zero iff every coefficient is zero. Otherwise
/// the denominators are cleared and the two sides are compared as integer
/// products of prime powers.
pub(crate) fn log_combination_sign(coeffs: &[(u64, Rational)]) -> Ordering {
    let nonzero: Vec<&(u64, Rational)> = coeffs.iter().filter(|(_, c)| !c.is_zero()).collect();
    if nonzero.is_empty() {
        return Ordering::Equal;
    }
    if nonzero.len() == 1 {
        // ln p > 0 for every prime.
        return if nonzero[0].1.is_positive() {
            Ordering::Greater
        } else {
            Ordering::Less
        };
    }
    if nonzero.iter().all(|(_, c)| c.is_positive()) {
        return Ordering::Greater;
    }
    if nonzero.iter().all(|(_, c)| c.is_negative()) {
        return Ordering::Less;
    }

    let lcm = nonzero.iter().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let scaled: Vec<(u64, BigInt)> = nonzero
        .iter()
        .map(|(p, c)| (*p, c.numer() * (&lcm / c.denom())))
        .collect();

    let bits: f64 = scaled
        .iter()
        .map(|(p, n)| n.abs().to_f64().unwrap_or(f64::INFINITY) * (*p as f64).log2())
        .sum();
    if bits > EXACT_BITS_LIMIT {
        let mut sum = 0.0f64;
        let mut scale = 0.0f64;
        for (p, c) in &nonzero {
            let term = c.to_f64().unwrap_or(0.0) * (*p as f64).ln();
            sum += term;
            scale += term.abs();
        }
        if sum.abs() > scale * 1e-9 {
            return sum.partial_cmp(&0.0).unwrap_or(Ordering::Equal);
        }
    }

    let mut lhs = BigInt::one();
    let mut rhs = BigInt::one();
    for (p, n) in scaled {
        let e = n
            .abs()
            .to_u32()
            .expect("prime-log exponent exceeds exact comparison range");
        let power = num_traits::pow(BigInt::from(p), e as usize);
        match n.sign() {
            Sign::Plus => lhs *= power,
            Sign::Minus => rhs *= power,
            Sign::NoSign => {}
        }
    }
    lhs.cmp(&rhs)
}
