//! Jordan blocks and pole bookkeeping.
//!
//! A summand `(tau, b)` contributes a simple pole at `s = (b+1)/2` to the
//! partial tensor product `L`-function of `pi x tau`. Only elliptic
//! parameters are handled, so every pole is simple.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::parameters::{ArthurParameter, CuspidalDatum, SimpleParameter, TauId};
use crate::Rational;

/// Pole locations, largest first.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PoleSet(#[serde(with = "crate::ratio::vec")] pub Vec<Rational>);

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct PoleProfile {
    pub entries: BTreeMap<TauId, PoleSet>,
}

fn check_elliptic(psi: &ArthurParameter) -> Result<()> {
    if !psi.is_elliptic() {
        return Err(Error::NotElliptic(psi.to_string()));
    }
    if !psi.is_self_dual() {
        return Err(Error::NotSelfDual(psi.to_string()));
    }
    Ok(())
}

pub fn pole_profile(psi: &ArthurParameter) -> Result<PoleProfile> {
    check_elliptic(psi)?;
    let mut entries: BTreeMap<TauId, PoleSet> = BTreeMap::new();
    for sp in psi.summands() {
        entries
            .entry(sp.tau.id.clone())
            .or_default()
            .0
            .push(Rational::new(sp.b as i64 + 1, 2));
    }
    for set in entries.values_mut() {
        set.0.sort_by(|x, y| y.cmp(x));
    }
    Ok(PoleProfile { entries })
}

pub fn t_set(psi: &ArthurParameter) -> BTreeSet<TauId> {
    psi.summands().iter().map(|sp| sp.tau.id.clone()).collect()
}

/// The `b` with `[tau, b]` a Jordan block, strictly decreasing.
pub fn jordan_blocks(psi: &ArthurParameter, tau: &TauId) -> Result<Vec<u32>> {
    let mut bs: Vec<u32> = psi.summands().iter().filter(|sp| &sp.tau.id == tau).map(|sp| sp.b).collect();
    if bs.is_empty() {
        return Err(Error::UnknownTau(format!("{tau} does not occur in {psi}")));
    }
    bs.sort_by(|x, y| y.cmp(x));
    if bs.iter().any(|b| b % 2 != bs[0] % 2) {
        return Err(Error::ParityViolation(format!("parameter violates same-parity rule for {tau}: {bs:?}")));
    }
    Ok(bs)
}

/// One summand per `tau`, the one with the largest `b`.
pub fn maximal_summands(psi: &ArthurParameter) -> Vec<SimpleParameter> {
    let mut best: BTreeMap<&TauId, &SimpleParameter> = BTreeMap::new();
    for sp in psi.summands() {
        let e = best.entry(&sp.tau.id).or_insert(sp);
        if sp.b > e.b {
            *e = sp;
        }
    }
    let mut out: Vec<SimpleParameter> = best.into_values().cloned().collect();
    out.sort();
    out
}

/// `b = 2s - 1` for a pole at `s`; `s` must be a half-integer `>= 1`.
fn b_of(s: &Rational) -> Result<u32> {
    let two_s = s * Rational::from_integer(2);
    if !two_s.is_integer() || *s < Rational::from_integer(1) {
        return Err(Error::Degenerate(format!("pole at {s} is not of the form (b+1)/2 with b >= 1")));
    }
    u32::try_from(two_s.to_integer() - 1).map_err(|_| Error::Degenerate(format!("pole at {s} is out of range")))
}

/// Rebuild the parameter from its poles. `pool` supplies the cuspidal data
/// (and so the `a` of each `tau`); `n` is the expected `N(psi)`.
pub fn reconstruct(profile: &PoleProfile, pool: &[CuspidalDatum], n: u32) -> Result<ArthurParameter> {
    let mut summands = Vec::new();
    for (id, set) in &profile.entries {
        let tau = pool
            .iter()
            .find(|t| &t.id == id)
            .ok_or_else(|| Error::UnknownTau(id.to_string()))?;
        let mut seen = BTreeSet::new();
        for s in &set.0 {
            let b = b_of(s)?;
            if !seen.insert(b) {
                return Err(Error::NotElliptic(format!("pole at {s} for {id} listed twice")));
            }
            summands.push(SimpleParameter::new(tau.clone(), b));
        }
        if let Some(&first) = seen.iter().next() {
            if seen.iter().any(|b| b % 2 != first % 2) {
                return Err(Error::ParityViolation(format!("parameter violates same-parity rule for {id}")));
            }
        }
    }
    let psi = ArthurParameter::new(summands);
    if psi.n() != n {
        return Err(Error::DimensionMismatch(format!("poles account for N = {}, expected {n}", psi.n())));
    }
    Ok(psi)
}
