use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Signed, Zero};

use super::primes::log_combination_sign;
use super::Rational;

/// Purely infinite exponent of a prime base: `sum(a_q * ①^q)` with every
/// `q > 0` and every `a_q != 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ExponentPoly {
    monomials: BTreeMap<Rational, Rational>,
}

impl ExponentPoly {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    /// Build from `(grossone power, coefficient)` pairs. Zero coefficients
    /// are dropped; non-positive powers are rejected.
    pub(crate) fn from_monomials<I>(monomials: I) -> Self
    where
        I: IntoIterator<Item = (Rational, Rational)>,
    {
        let mut poly = Self::new();
        for (q, a) in monomials {
            assert!(q.is_positive(), "exponent polynomial powers must be positive");
            poly.add_monomial(q, a);
        }
        poly
    }

    fn add_monomial(&mut self, q: Rational, a: Rational) {
        if a.is_zero() {
            return;
        }
        let entry = self.monomials.entry(q.clone()).or_insert_with(Rational::zero);
        *entry += a;
        if entry.is_zero() {
            self.monomials.remove(&q);
        }
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    /// Monomials as `(power, coefficient)`, highest power first.
    pub fn monomials(&self) -> impl Iterator<Item = (&Rational, &Rational)> {
        self.monomials.iter().rev()
    }

    pub(crate) fn coefficient(&self, q: &Rational) -> Rational {
        self.monomials.get(q).cloned().unwrap_or_else(Rational::zero)
    }

    pub(crate) fn powers(&self) -> impl Iterator<Item = &Rational> {
        self.monomials.keys()
    }

    pub(crate) fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (q, a) in &other.monomials {
            out.add_monomial(q.clone(), a.clone());
        }
        out
    }

    pub(crate) fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return Self::new();
        }
        Self {
            monomials: self.monomials.iter().map(|(q, a)| (q.clone(), a * k)).collect(),
        }
    }
}

/// Multiplicative part of a term: `prod(p_i^{E_i}) * ①^p`. Two terms can be
/// merged by coefficient addition iff their keys are identical.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub(crate) struct TermKey {
    pub(crate) exp_factors: BTreeMap<u64, ExponentPoly>,
    pub(crate) gross_power: Rational,
}

impl TermKey {
    pub(crate) fn unit() -> Self {
        Self {
            exp_factors: BTreeMap::new(),
            gross_power: Rational::zero(),
        }
    }

    pub(crate) fn is_unit(&self) -> bool {
        self.exp_factors.is_empty() && self.gross_power.is_zero()
    }

    pub(crate) fn mul(&self, other: &Self) -> Self {
        let mut exp_factors = self.exp_factors.clone();
        for (p, poly) in &other.exp_factors {
            let sum = match exp_factors.get(p) {
                Some(mine) => mine.add(poly),
                None => poly.clone(),
            };
            if sum.is_empty() {
                exp_factors.remove(p);
            } else {
                exp_factors.insert(*p, sum);
            }
        }
        Self {
            exp_factors,
            gross_power: &self.gross_power + &other.gross_power,
        }
    }

    pub(crate) fn inverse(&self) -> Self {
        let minus_one = -Rational::one();
        Self {
            exp_factors: self
                .exp_factors
                .iter()
                .map(|(p, poly)| (*p, poly.scale(&minus_one)))
                .collect(),
            gross_power: -&self.gross_power,
        }
    }

    pub(crate) fn pow(&self, n: &Rational) -> Self {
        if n.is_zero() {
            return Self::unit();
        }
        Self {
            exp_factors: self.exp_factors.iter().map(|(p, poly)| (*p, poly.scale(n))).collect(),
            gross_power: &self.gross_power * n,
        }
    }

    /// Dominance order: compares the formal logarithms
    /// `sum_p E_p ln p + gross_power * ln ①`.
    ///
    /// Every `①^q` with `q > 0` outweighs `ln ①`, which outweighs every
    /// finite real; within one `①^q` level the coefficients are rational
    /// combinations of prime logarithms and are compared exactly.
    pub(crate) fn dominance_cmp(&self, other: &Self) -> Ordering {
        let mut powers: BTreeSet<&Rational> = BTreeSet::new();
        for poly in self.exp_factors.values().chain(other.exp_factors.values()) {
            powers.extend(poly.powers());
        }
        for q in powers.into_iter().rev() {
            let mut primes: BTreeSet<u64> = BTreeSet::new();
            primes.extend(self.exp_factors.keys());
            primes.extend(other.exp_factors.keys());
            let diff: Vec<(u64, Rational)> = primes
                .into_iter()
                .map(|p| {
                    let mine = self.exp_factors.get(&p).map(|e| e.coefficient(q));
                    let theirs = other.exp_factors.get(&p).map(|e| e.coefficient(q));
                    let d = mine.unwrap_or_else(Rational::zero) - theirs.unwrap_or_else(Rational::zero);
                    (p, d)
                })
                .filter(|(_, d)| !d.is_zero())
                .collect();
            if !diff.is_empty() {
                return log_combination_sign(&diff);
            }
        }
        self.gross_power.cmp(&other.gross_power)
    }
}

/// Scale of a single term relative to the finite numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Scale {
    Infinitesimal,
    Finite,
    Infinite,
}

/// One summand `coefficient * prod(p_i^{E_i}) * ①^gross_power`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GrossTerm {
    pub(crate) coefficient: Rational,
    pub(crate) key: TermKey,
}

impl GrossTerm {
    pub(crate) fn new(coefficient: Rational, key: TermKey) -> Self {
        debug_assert!(!coefficient.is_zero());
        Self { coefficient, key }
    }

    pub(crate) fn constant(c: Rational) -> Self {
        Self::new(c, TermKey::unit())
    }

    pub fn coefficient(&self) -> &Rational {
        &self.coefficient
    }

    /// Exponential factors keyed by prime base.
    pub fn exp_factors(&self) -> &BTreeMap<u64, ExponentPoly> {
        &self.key.exp_factors
    }

    pub fn gross_power(&self) -> &Rational {
        &self.key.gross_power
    }

    pub(crate) fn mul(&self, other: &Self) -> Self {
        Self::new(&self.coefficient * &other.coefficient, self.key.mul(&other.key))
    }

    pub(crate) fn inverse(&self) -> Self {
        Self::new(self.coefficient.recip(), self.key.inverse())
    }

    pub(crate) fn scale(&self) -> Scale {
        match self.key.dominance_cmp(&TermKey::unit()) {
            Ordering::Less => Scale::Infinitesimal,
            Ordering::Equal => Scale::Finite,
            Ordering::Greater => Scale::Infinite,
        }
    }

    /// True for `c * ①^p` with no exponential factors.
    pub(crate) fn is_pure_power(&self) -> bool {
        self.key.exp_factors.is_empty()
    }
}
