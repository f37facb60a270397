use std::cmp::Ordering;

use crate::grossnum::GrossNumber;

use super::SimulateError;

/// Largest depth `n^l` that [`poly_depth_check`] evaluates exactly.
pub const MAX_POLY_DEPTH: u64 = 100_000;

fn check_args(d: u64, k: &GrossNumber) -> Result<(), SimulateError> {
    if d == 0 {
        return Err(SimulateError::InvalidParameter("degree must be at least 1".into()));
    }
    if !k.is_integer() || *k < GrossNumber::one() {
        return Err(SimulateError::InvalidParameter(format!(
            "depth {k} must be an integer at least 1"
        )));
    }
    Ok(())
}

fn power(d: u64, k: &GrossNumber) -> Result<GrossNumber, SimulateError> {
    Ok(GrossNumber::from(d).pow(k)?)
}

/// Steps spent re-executing every path of every length `1..=k` of a
/// complete tree of degree `d`: `Σ j·d^j`, evaluated in closed form as
/// `d(k·d^(k+1) − (k+1)·d^k + 1)/(d−1)^2`, or `k(k+1)/2` when `d = 1`.
pub fn simulation_cost(d: u64, k: &GrossNumber) -> Result<GrossNumber, SimulateError> {
    check_args(d, k)?;
    let one = GrossNumber::one();
    let k1 = k + &one;
    if d == 1 {
        return Ok((k * &k1).checked_div(&GrossNumber::from(2))?);
    }
    let dg = GrossNumber::from(d);
    let dk = power(d, k)?;
    let dk1 = &dk * &dg;
    let inner = &(&(k * &dk1) - &(&k1 * &dk)) + &one;
    let denom = GrossNumber::from((d - 1) * (d - 1));
    Ok((&dg * &inner).checked_div(&denom)?)
}

/// Leaves `d^k` of a complete tree.
pub fn leaf_count(d: u64, k: &GrossNumber) -> Result<GrossNumber, SimulateError> {
    check_args(d, k)?;
    power(d, k)
}

/// Nodes below the root of a complete tree: `(d^(k+1) − d)/(d − 1)`, or
/// `k` when `d = 1`.
pub fn node_count(d: u64, k: &GrossNumber) -> Result<GrossNumber, SimulateError> {
    check_args(d, k)?;
    if d == 1 {
        return Ok(k.clone());
    }
    let dg = GrossNumber::from(d);
    let top = &(&power(d, k)? * &dg) - &dg;
    Ok(top.checked_div(&GrossNumber::from(d - 1))?)
}

/// Whether each quantity of a depth-`k`, degree-`d` simulation fits in a
/// sequence of at most `①` observations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Verdicts {
    /// `k ≤ ①`.
    pub depth_ok: bool,
    /// Simulation cost `≤ ①`.
    pub steps_ok: bool,
    /// `d^k ≤ ①`.
    pub leaves_ok: bool,
    /// Node count `≤ ①`.
    pub nodes_ok: bool,
}

impl Verdicts {
    /// Named verdicts in report order.
    pub fn entries(&self) -> [(&'static str, bool); 4] {
        [
            ("depth_ok", self.depth_ok),
            ("steps_ok", self.steps_ok),
            ("leaves_ok", self.leaves_ok),
            ("nodes_ok", self.nodes_ok),
        ]
    }
}

pub fn observability(d: u64, k: &GrossNumber) -> Result<Verdicts, SimulateError> {
    let g = GrossNumber::grossone();
    let fits = |x: &GrossNumber| x.cmp(&g) != Ordering::Greater;
    Ok(Verdicts {
        depth_ok: fits(k),
        steps_ok: fits(&simulation_cost(d, k)?),
        leaves_ok: fits(&leaf_count(d, k)?),
        nodes_ok: fits(&node_count(d, k)?),
    })
}

/// Cost of simulating a machine whose depth grows polynomially, `k = n^l`,
/// in the input length `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyDepth {
    pub depth: u64,
    pub cost: GrossNumber,
    /// Always true: the cost is finite, however large.
    pub observable: bool,
}

pub fn poly_depth_check(d: u64, n: u64, l: u32) -> Result<PolyDepth, SimulateError> {
    if d < 2 || n == 0 || l == 0 {
        return Err(SimulateError::InvalidParameter(format!(
            "need d >= 2, n >= 1, l >= 1 (got d={d}, n={n}, l={l})"
        )));
    }
    let too_deep = SimulateError::DeskCapExceeded {
        limit: MAX_POLY_DEPTH,
        what: "levels",
    };
    let depth = n.checked_pow(l).filter(|&k| k <= MAX_POLY_DEPTH).ok_or(too_deep)?;
    let cost = simulation_cost(d, &GrossNumber::from(depth))?;
    Ok(PolyDepth {
        depth,
        observable: cost <= GrossNumber::grossone(),
        cost,
    })
}
