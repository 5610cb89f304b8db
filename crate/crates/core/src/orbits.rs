//! sl2 gradings attached to partitions `[d^c 1^r]`.
//!
//! The semisimple element of an sl2-triple acts on the defining module with
//! weights `d-1, d-3, ..., 1-d` on each part `d`. The Lie algebra is `V ⊗ V*`
//! (type A), `Sym^2 V` (type C) or `Λ^2 V` (types B, D) as a torus module,
//! so the graded dimensions are pair counts over the weights.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::GroupFamily;
use crate::partitions::{is_valid, OrbitFamily, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedGrading {
    pub partition: Partition,
    pub family: OrbitFamily,
    pub weights: Vec<i32>,
    /// `j -> dim g_j`, only nonzero entries.
    pub dims: BTreeMap<i32, u64>,
}

impl WeightedGrading {
    pub fn dim(&self, j: i32) -> u64 {
        self.dims.get(&j).copied().unwrap_or(0)
    }

    pub fn total_dim(&self) -> u64 {
        self.dims.values().sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnipotentDims {
    pub dim_vx: u64,
    pub dim_g1: u64,
    pub heisenberg_dim: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CoefficientKind {
    Bessel,
    FourierJacobi,
}

impl fmt::Display for CoefficientKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientKind::Bessel => f.write_str("Bessel"),
            CoefficientKind::FourierJacobi => f.write_str("FourierJacobi"),
        }
    }
}

/// Symbolic quadratic or hermitian form: a name, a dimension and an
/// optional opaque invariant.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FormLabel {
    pub name: String,
    pub dim: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub invariant: Option<String>,
}

impl FormLabel {
    fn new(name: &str, dim: u32, invariant: Option<&str>) -> Self {
        FormLabel { name: name.to_string(), dim, invariant: invariant.map(str::to_string) }
    }
}

/// One factor of a stabilizer: family, defining size, and the form it is
/// attached to when the family needs one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilizerFactor {
    pub family: GroupFamily,
    pub size: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form: Option<FormLabel>,
}

impl fmt::Display for StabilizerFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.family {
            GroupFamily::SOodd | GroupFamily::SOeven => "SO",
            GroupFamily::Sp => "Sp",
            GroupFamily::Mp => "Mp",
            GroupFamily::U => "U",
        };
        match &self.form {
            Some(q) => write!(f, "{name}_{}({})", self.size, q.name),
            None => write!(f, "{name}_{}", self.size),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stabilizer {
    pub partition: Partition,
    pub factors: (StabilizerFactor, StabilizerFactor),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalOrbitKey {
    pub partition: Partition,
    pub q_d: Option<FormLabel>,
    pub q_1: Option<FormLabel>,
}

/// `d-1, d-3, ..., 1-d` for each part `d`.
pub fn weights_of(p: &Partition) -> Vec<i32> {
    let mut w = Vec::with_capacity(p.total() as usize);
    for &d in p.parts() {
        let d = d as i32;
        w.extend((0..d).map(|i| d - 1 - 2 * i));
    }
    w
}

pub fn grading(family: OrbitFamily, p: &Partition) -> Result<WeightedGrading> {
    if !is_valid(p, family) {
        return Err(Error::InvalidPartition(format!("{p} is not a {family}-partition")));
    }
    let weights = weights_of(p);
    let mut dims: BTreeMap<i32, u64> = BTreeMap::new();
    let n = weights.len();
    match family {
        OrbitFamily::A => {
            for &u in &weights {
                for &v in &weights {
                    *dims.entry(u - v).or_default() += 1;
                }
            }
        }
        OrbitFamily::C => {
            for i in 0..n {
                for k in i..n {
                    *dims.entry(weights[i] + weights[k]).or_default() += 1;
                }
            }
        }
        OrbitFamily::B | OrbitFamily::D => {
            for i in 0..n {
                for k in i + 1..n {
                    *dims.entry(weights[i] + weights[k]).or_default() += 1;
                }
            }
        }
    }
    Ok(WeightedGrading { partition: p.clone(), family, weights, dims })
}

pub fn unipotent_dims(g: &WeightedGrading) -> UnipotentDims {
    let dim_vx = g.dims.range(2..).map(|(_, v)| v).sum();
    let dim_g1 = g.dim(1);
    UnipotentDims { dim_vx, dim_g1, heisenberg_dim: dim_g1 + 1 }
}

fn check_shape(family: OrbitFamily, d: u32, c: u32, r: u32) -> Result<Partition> {
    if d == 0 || c == 0 {
        return Err(Error::InvalidPartition(format!("[d^c 1^r] needs d, c >= 1 (d = {d}, c = {c})")));
    }
    let p = Partition::hook_type(d, c, r);
    if !is_valid(&p, family) {
        return Err(Error::ParityViolation(format!(
            "{} is not a {family}-partition",
            p.to_exponent_string()
        )));
    }
    Ok(p)
}

/// Bessel when `g_1 = 0`, Fourier-Jacobi otherwise, for `[d^c 1^r]` with `r >= 1`.
pub fn coefficient_kind(family: OrbitFamily, d: u32, c: u32, r: u32) -> Result<CoefficientKind> {
    if r == 0 {
        return Err(Error::Degenerate(format!("no 1-parts in [{d}^{c}]")));
    }
    let p = check_shape(family, d, c, r)?;
    let g = grading(family, &p)?;
    Ok(if g.dim(1) == 0 { CoefficientKind::Bessel } else { CoefficientKind::FourierJacobi })
}

fn orbit_family(family: GroupFamily) -> OrbitFamily {
    family.orbit_family()
}

fn stabilizer_shape(family: GroupFamily, m_size: u32, d: u32, c: u32) -> Result<(Partition, u32)> {
    let cd = c.checked_mul(d).filter(|&x| x <= m_size).ok_or_else(|| {
        Error::ParityViolation(format!("c d = {} exceeds the size {m_size}", c as u64 * d as u64))
    })?;
    let r = m_size - cd;
    let fam = orbit_family(family);
    if !fam.total_ok(m_size) {
        return Err(Error::ParityViolation(format!("{family} has no defining space of size {m_size}")));
    }
    let p = check_shape(fam, d, c, r).map_err(|e| match e {
        Error::ParityViolation(msg) => Error::ParityViolation(format!(
            "{msg}: {} needs {}",
            family,
            match fam {
                OrbitFamily::C => "c even when d is odd",
                OrbitFamily::B | OrbitFamily::D => "c even when d is even",
                OrbitFamily::A => "nothing",
            }
        )),
        other => other,
    })?;
    Ok((p, r))
}

fn factor(family: GroupFamily, size: u32, form: Option<FormLabel>) -> StabilizerFactor {
    StabilizerFactor { family, size, form }
}

fn ortho(size: u32) -> GroupFamily {
    if size % 2 == 1 {
        GroupFamily::SOodd
    } else {
        GroupFamily::SOeven
    }
}

/// Stabilizer of the generic character attached to `[d^c 1^(m_size - cd)]`.
///
/// The first factor acts on a `c`-dimensional space, the second on the
/// `(m_size - cd)`-dimensional space of the 1-parts.
pub fn stabilizer(family: GroupFamily, m_size: u32, d: u32, c: u32) -> Result<Stabilizer> {
    let (partition, r) = stabilizer_shape(family, m_size, d, c)?;
    let keys = keys_for(family, &partition, d, c, r);
    let (qd, q1) = (keys.q_d, keys.q_1);
    let factors = match (family, d % 2) {
        (GroupFamily::Sp, 1) => (factor(GroupFamily::Sp, c, None), factor(GroupFamily::Sp, r, None)),
        (GroupFamily::Sp, _) => (factor(ortho(c), c, qd), factor(GroupFamily::Sp, r, None)),
        (GroupFamily::Mp, 1) => (factor(GroupFamily::Mp, c, None), factor(GroupFamily::Mp, r, None)),
        (GroupFamily::Mp, _) => (factor(ortho(c), c, qd), factor(GroupFamily::Mp, r, None)),
        (GroupFamily::SOeven | GroupFamily::SOodd, 0) => (factor(GroupFamily::Sp, c, None), factor(ortho(r), r, q1)),
        (GroupFamily::SOeven | GroupFamily::SOodd, _) => (factor(ortho(c), c, qd), factor(ortho(r), r, q1)),
        (GroupFamily::U, _) => (factor(GroupFamily::U, c, qd), factor(GroupFamily::U, r, q1)),
    };
    Ok(Stabilizer { partition, factors })
}

fn keys_for(family: GroupFamily, p: &Partition, d: u32, c: u32, r: u32) -> RationalOrbitKey {
    let qd = |inv: Option<&str>| Some(FormLabel::new("q_d", c, inv));
    let q1 = |inv: Option<&str>| Some(FormLabel::new("q_1", r, inv));
    let (q_d, q_1) = match (family, d % 2) {
        (GroupFamily::Sp | GroupFamily::Mp, 1) => (None, None),
        (GroupFamily::Sp | GroupFamily::Mp, _) => (qd(None), None),
        (GroupFamily::SOeven, 0) => (None, q1(Some("anisotropic kernel of q_V"))),
        (GroupFamily::SOodd, 0) => (None, q1(Some("split"))),
        (GroupFamily::SOeven, _) => (qd(None), q1(Some("q_d + q_1 has the anisotropic kernel of q_V"))),
        (GroupFamily::SOodd, _) => (qd(None), q1(Some("q_d + q_1 split"))),
        (GroupFamily::U, 1) => (qd(None), q1(Some("q_d + q_1 has the anisotropic kernel of q_V"))),
        (GroupFamily::U, _) => (qd(None), q1(Some("anisotropic kernel of q_V"))),
    };
    RationalOrbitKey { partition: p.clone(), q_d, q_1 }
}

/// Slot structure of the rational orbits inside the stable orbit. Forms are
/// symbolic, so each case yields a single representative key.
pub fn rational_orbit_keys(family: GroupFamily, d: u32, c: u32, m_size: u32) -> Result<Vec<RationalOrbitKey>> {
    let (p, r) = stabilizer_shape(family, m_size, d, c)?;
    Ok(vec![keys_for(family, &p, d, c, r)])
}
