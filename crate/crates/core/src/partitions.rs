//! Exact partition arithmetic for nilpotent orbits of classical Lie algebras.
//!
//! A [`Partition`] is a weakly decreasing list of positive parts. The
//! [`OrbitFamily`] tag carries the classical parity rules:
//!
//! - `A`: every partition.
//! - `B`: even parts occur with even multiplicity, odd total.
//! - `C`: odd parts occur with even multiplicity, even total.
//! - `D`: even parts occur with even multiplicity, even total.
//!
//! [`bv_dual`] realizes the Barbasch-Vogan map between the dual Lie algebra
//! and the group side as transpose followed by a family collapse.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum OrbitFamily {
    A,
    B,
    C,
    D,
}

impl OrbitFamily {
    pub const ALL: [OrbitFamily; 4] = [OrbitFamily::A, OrbitFamily::B, OrbitFamily::C, OrbitFamily::D];

    /// Parity a part must have to be allowed an odd multiplicity, if constrained.
    fn restricted_parity(self) -> Option<u32> {
        match self {
            OrbitFamily::A => None,
            OrbitFamily::B | OrbitFamily::D => Some(0),
            OrbitFamily::C => Some(1),
        }
    }

    /// Whether a partition total is admissible for the family.
    pub fn total_ok(self, total: u32) -> bool {
        match self {
            OrbitFamily::A => true,
            OrbitFamily::B => total % 2 == 1,
            OrbitFamily::C | OrbitFamily::D => total % 2 == 0,
        }
    }

    /// Complex dimension of the Lie algebra acting on a defining space of
    /// the given size.
    pub fn lie_algebra_dim(self, size: u32) -> u64 {
        let m = size as u64;
        match self {
            OrbitFamily::A => m * m,
            OrbitFamily::B | OrbitFamily::D => m * m.saturating_sub(1) / 2,
            OrbitFamily::C => m * (m + 1) / 2,
        }
    }
}

impl fmt::Display for OrbitFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            OrbitFamily::A => "A",
            OrbitFamily::B => "B",
            OrbitFamily::C => "C",
            OrbitFamily::D => "D",
        };
        f.write_str(s)
    }
}

impl FromStr for OrbitFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(OrbitFamily::A),
            "B" | "b" => Ok(OrbitFamily::B),
            "C" | "c" => Ok(OrbitFamily::C),
            "D" | "d" => Ok(OrbitFamily::D),
            other => Err(Error::Parse(format!("unknown orbit family '{other}'"))),
        }
    }
}

/// Weakly decreasing positive parts. The total is cached.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
    total: u32,
}

impl Partition {
    /// Builds a partition from parts in any order; zero parts are dropped.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let total = parts.iter().sum();
        Partition { parts, total }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// `[part^mult]`, the rectangular partition.
    pub fn rectangle(part: u32, mult: u32) -> Self {
        Partition::new(vec![part; mult as usize])
    }

    /// `[d^c 1^r]`.
    pub fn hook_type(d: u32, c: u32, r: u32) -> Self {
        let mut parts = vec![d; c as usize];
        parts.extend(std::iter::repeat(1).take(r as usize));
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn total(&self) -> u32 {
        self.total
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn multiplicity(&self, part: u32) -> usize {
        self.parts.iter().filter(|&&p| p == part).count()
    }

    /// Prefix sums `p_1, p_1 + p_2, ...` padded with the total to length `len`.
    fn prefix_sums(&self, len: usize) -> Vec<u32> {
        let mut acc = 0;
        (0..len)
            .map(|i| {
                acc += self.parts.get(i).copied().unwrap_or(0);
                acc
            })
            .collect()
    }

    /// Exponent form `[3^2,1^4]`; runs of length one print bare.
    pub fn to_exponent_string(&self) -> String {
        let mut runs: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let mut j = i;
            while j < self.parts.len() && self.parts[j] == p {
                j += 1;
            }
            let m = j - i;
            if m == 1 {
                runs.push(p.to_string());
            } else {
                runs.push(format!("{p}^{m}"));
            }
            i = j;
        }
        format!("[{}]", runs.join(","))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", body.join(","))
    }
}

/// Accepts the flat form `[3,3,1,1]` and the exponent form `[3^2,1^2]`,
/// or any mix of the two.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("partition must be bracketed: '{s}'")))?;
        let mut parts = Vec::new();
        for token in inner.split(',') {
            let token = token.trim();
            if token.is_empty() {
                continue;
            }
            let (base, exp) = match token.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim()),
                None => (token, "1"),
            };
            let base: u32 = base
                .parse()
                .map_err(|_| Error::Parse(format!("bad part '{token}'")))?;
            let exp: u32 = exp
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent '{token}'")))?;
            if base == 0 {
                return Err(Error::Parse(format!("parts must be positive: '{token}'")));
            }
            parts.extend(std::iter::repeat(base).take(exp as usize));
        }
        Ok(Partition::new(parts))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        Ok(Partition::new(parts))
    }
}

/// Reverse lexicographic order; a linear extension of dominance.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.parts.cmp(&other.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Conjugate partition.
pub fn transpose(p: &Partition) -> Partition {
    let width = p.parts.first().copied().unwrap_or(0);
    let parts = (1..=width)
        .map(|k| p.parts.iter().filter(|&&x| x >= k).count() as u32)
        .collect();
    Partition::new(parts)
}

/// `p >= q` in the dominance order.
pub fn dominates(p: &Partition, q: &Partition) -> Result<bool> {
    if p.total != q.total {
        return Err(Error::IncomparableTotals(p.total, q.total));
    }
    let len = p.len().max(q.len());
    let ps = p.prefix_sums(len);
    let qs = q.prefix_sums(len);
    Ok(ps.iter().zip(&qs).all(|(a, b)| a >= b))
}

pub fn is_valid(p: &Partition, fam: OrbitFamily) -> bool {
    if !fam.total_ok(p.total) {
        return false;
    }
    first_violation(p, fam).is_none()
}

/// Largest part with the restricted parity that occurs an odd number of times.
fn first_violation(p: &Partition, fam: OrbitFamily) -> Option<usize> {
    let parity = fam.restricted_parity()?;
    let mut i = 0;
    while i < p.parts.len() {
        let part = p.parts[i];
        let mut j = i;
        while j < p.parts.len() && p.parts[j] == part {
            j += 1;
        }
        if part % 2 == parity && (j - i) % 2 == 1 {
            // index of the last occurrence
            return Some(j - 1);
        }
        i = j;
    }
    None
}

/// The largest `fam`-valid partition dominated by `p`.
///
/// Repeatedly lowers the last copy of the largest offending part by one and
/// raises the first later part that is at least two smaller.
pub fn collapse(p: &Partition, fam: OrbitFamily) -> Result<Partition> {
    if !fam.total_ok(p.total) {
        return Err(Error::InvalidPartition(format!(
            "{p} has total {} which no {fam}-partition can have",
            p.total
        )));
    }
    let mut parts = p.parts.clone();
    while let Some(idx) = first_violation(&Partition::new(parts.clone()), fam) {
        let q = parts[idx];
        parts[idx] = q - 1;
        match parts.iter().position(|&x| x < q - 1) {
            Some(k) => parts[k] += 1,
            None => parts.push(1),
        }
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
    }
    let out = Partition::new(parts);
    debug_assert!(is_valid(&out, fam));
    Ok(out)
}

/// Barbasch-Vogan duality from the dual Lie algebra family to the group family.
///
/// Supported pairs and their recipes:
/// - `(A, A)`: transpose.
/// - `(C, B)`: transpose, add one to the largest part, `B`-collapse.
/// - `(B, C)`: transpose, remove one from the smallest part, `C`-collapse.
/// - `(D, D)`: transpose, `D`-collapse.
pub fn bv_dual(p: &Partition, dual_fam: OrbitFamily, target_fam: OrbitFamily) -> Result<Partition> {
    use OrbitFamily::*;
    if !is_valid(p, dual_fam) {
        return Err(Error::InvalidPartition(format!("{p} is not a {dual_fam}-partition")));
    }
    let t = transpose(p);
    match (dual_fam, target_fam) {
        (A, A) => Ok(t),
        (C, B) => {
            let mut parts = t.parts.clone();
            match parts.first_mut() {
                Some(first) => *first += 1,
                None => parts.push(1),
            }
            collapse(&Partition::new(parts), B)
        }
        (B, C) => {
            let mut parts = t.parts.clone();
            if let Some(last) = parts.last_mut() {
                *last -= 1;
            }
            collapse(&Partition::new(parts), C)
        }
        (D, D) => collapse(&t, D),
        _ => Err(Error::InvalidPartition(format!(
            "no Barbasch-Vogan map from {dual_fam} to {target_fam}"
        ))),
    }
}

/// All partitions of `total`, largest first in reverse lexicographic order.
pub fn all_partitions(total: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(total, total, &mut current, &mut out);
    out
}

fn fill(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::new(current.clone()));
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}

/// All `fam`-valid partitions of `total`, each once, largest first.
pub fn enumerate(total: u32, fam: OrbitFamily) -> Vec<Partition> {
    if !fam.total_ok(total) {
        return Vec::new();
    }
    all_partitions(total)
        .into_iter()
        .filter(|p| is_valid(p, fam))
        .collect()
}
