//! Classical group descriptors and the sign/character labels they carry.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partitions::OrbitFamily;

/// A sign `+1` or `-1`, serialized as the integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `(-1)^e`.
    pub fn pow_minus_one(e: i64) -> Sign {
        if e.rem_euclid(2) == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_i64(v: i64) -> Result<Sign> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(Error::Parse(format!("sign must be 1 or -1, got {other}"))),
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}1", self.symbol())
    }
}

impl FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Sign> {
        match s.trim() {
            "+" | "+1" | "1" | "plus" => Ok(Sign::Plus),
            "-" | "-1" | "minus" => Ok(Sign::Minus),
            other => Err(Error::Parse(format!("bad sign '{other}'"))),
        }
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_i8(self.as_i8())
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let v = i64::deserialize(deserializer)?;
        Sign::from_i64(v).map_err(serde::de::Error::custom)
    }
}

/// Symbolic quadratic character: a formal product of tokens in an
/// elementary abelian 2-group. The empty product is the trivial character.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EtaLabel(BTreeSet<String>);

impl EtaLabel {
    pub fn trivial() -> Self {
        EtaLabel::default()
    }

    pub fn token(t: impl Into<String>) -> Self {
        let mut s = BTreeSet::new();
        s.insert(t.into());
        EtaLabel(s)
    }

    pub fn is_trivial(&self) -> bool {
        self.0.is_empty()
    }

    pub fn tokens(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(|s| s.as_str())
    }
}

impl Mul for &EtaLabel {
    type Output = EtaLabel;

    fn mul(self, rhs: &EtaLabel) -> EtaLabel {
        EtaLabel(self.0.symmetric_difference(&rhs.0).cloned().collect())
    }
}

impl Mul for EtaLabel {
    type Output = EtaLabel;

    fn mul(self, rhs: EtaLabel) -> EtaLabel {
        &self * &rhs
    }
}

impl fmt::Display for EtaLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.0.iter().map(|t| format!("eta_{t}")).collect();
        f.write_str(&parts.join("*"))
    }
}

/// Family tag without size data.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupFamily {
    SOodd,
    Sp,
    SOeven,
    Mp,
    U,
}

impl GroupFamily {
    pub const ALL: [GroupFamily; 5] = [
        GroupFamily::SOodd,
        GroupFamily::Sp,
        GroupFamily::SOeven,
        GroupFamily::Mp,
        GroupFamily::U,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GroupFamily::SOodd => "SOodd",
            GroupFamily::Sp => "Sp",
            GroupFamily::SOeven => "SOeven",
            GroupFamily::Mp => "Mp",
            GroupFamily::U => "U",
        }
    }

    /// Partition family of the defining representation. `Mp` uses the
    /// symplectic rules of the group it covers.
    pub fn orbit_family(self) -> OrbitFamily {
        match self {
            GroupFamily::SOodd => OrbitFamily::B,
            GroupFamily::Sp | GroupFamily::Mp => OrbitFamily::C,
            GroupFamily::SOeven => OrbitFamily::D,
            GroupFamily::U => OrbitFamily::A,
        }
    }
}

impl fmt::Display for GroupFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GroupFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "SOodd" | "SO_odd" | "B" => Ok(GroupFamily::SOodd),
            "Sp" | "C" => Ok(GroupFamily::Sp),
            "SOeven" | "SO_even" | "D" => Ok(GroupFamily::SOeven),
            "Mp" => Ok(GroupFamily::Mp),
            "U" => Ok(GroupFamily::U),
            other => Err(Error::Parse(format!("unknown group family '{other}'"))),
        }
    }
}

/// A classical group: `SO_{2n+1}`, `Sp_{2n}`, `SO_{2n}(eta)`, `Mp_{2n}` or
/// `U_N` with sign `kappa`. Ranks are stored; `U` stores its size.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "family")]
pub enum GroupDatum {
    SOodd { rank: u32 },
    Sp { rank: u32 },
    SOeven { rank: u32, eta: EtaLabel },
    Mp { rank: u32 },
    U { size: u32, kappa: Sign },
}

impl GroupDatum {
    pub fn so_odd(rank: u32) -> Self {
        GroupDatum::SOodd { rank }
    }

    pub fn sp(rank: u32) -> Self {
        GroupDatum::Sp { rank }
    }

    pub fn so_even(rank: u32, eta: EtaLabel) -> Self {
        GroupDatum::SOeven { rank, eta }
    }

    pub fn mp(rank: u32) -> Self {
        GroupDatum::Mp { rank }
    }

    pub fn unitary(size: u32, kappa: Sign) -> Self {
        GroupDatum::U { size, kappa }
    }

    /// `SO_size`, picking the odd or even family by parity.
    pub fn orthogonal(size: u32, eta: EtaLabel) -> Self {
        if size % 2 == 1 {
            GroupDatum::SOodd { rank: size / 2 }
        } else {
            GroupDatum::SOeven { rank: size / 2, eta }
        }
    }

    pub fn family(&self) -> GroupFamily {
        match self {
            GroupDatum::SOodd { .. } => GroupFamily::SOodd,
            GroupDatum::Sp { .. } => GroupFamily::Sp,
            GroupDatum::SOeven { .. } => GroupFamily::SOeven,
            GroupDatum::Mp { .. } => GroupFamily::Mp,
            GroupDatum::U { .. } => GroupFamily::U,
        }
    }

    /// Rank for the orthogonal/symplectic families, size for `U`.
    pub fn index(&self) -> u32 {
        match *self {
            GroupDatum::SOodd { rank }
            | GroupDatum::Sp { rank }
            | GroupDatum::SOeven { rank, .. }
            | GroupDatum::Mp { rank } => rank,
            GroupDatum::U { size, .. } => size,
        }
    }

    /// Size of the general linear group the dual group embeds into.
    pub fn twisted_size(&self) -> u32 {
        match *self {
            GroupDatum::SOodd { rank } => 2 * rank,
            GroupDatum::Sp { rank } => 2 * rank + 1,
            GroupDatum::SOeven { rank, .. } => 2 * rank,
            GroupDatum::Mp { rank } => 2 * rank,
            GroupDatum::U { size, .. } => size,
        }
    }

    /// Dimension of the defining representation.
    pub fn defining_size(&self) -> u32 {
        match *self {
            GroupDatum::SOodd { rank } => 2 * rank + 1,
            GroupDatum::Sp { rank } | GroupDatum::Mp { rank } => 2 * rank,
            GroupDatum::SOeven { rank, .. } => 2 * rank,
            GroupDatum::U { size, .. } => size,
        }
    }

    pub fn eta(&self) -> Option<&EtaLabel> {
        match self {
            GroupDatum::SOeven { eta, .. } => Some(eta),
            _ => None,
        }
    }

    pub fn kappa(&self) -> Option<Sign> {
        match self {
            GroupDatum::U { kappa, .. } => Some(*kappa),
            _ => None,
        }
    }

    /// Same family and size, ignoring the character label of `SOeven`.
    pub fn same_shape(&self, other: &GroupDatum) -> bool {
        self.family() == other.family() && self.index() == other.index() && self.kappa() == other.kappa()
    }

    /// LaTeX name, e.g. `\mathrm{Sp}_{8}`.
    pub fn latex(&self) -> String {
        match self {
            GroupDatum::SOodd { .. } => format!("\\mathrm{{SO}}_{{{}}}", self.defining_size()),
            GroupDatum::Sp { .. } => format!("\\mathrm{{Sp}}_{{{}}}", self.defining_size()),
            GroupDatum::SOeven { eta, .. } if !eta.is_trivial() => {
                format!("\\mathrm{{SO}}_{{{}}}({})", self.defining_size(), eta)
            }
            GroupDatum::SOeven { .. } => format!("\\mathrm{{SO}}_{{{}}}", self.defining_size()),
            GroupDatum::Mp { .. } => format!("\\widetilde{{\\mathrm{{Sp}}}}_{{{}}}", self.defining_size()),
            GroupDatum::U { size, kappa } => format!("\\mathrm{{U}}_{{{size}}}^{{{}}}", kappa.symbol()),
        }
    }
}

impl fmt::Display for GroupDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupDatum::SOodd { .. } => write!(f, "SO_{}", self.defining_size()),
            GroupDatum::Sp { .. } => write!(f, "Sp_{}", self.defining_size()),
            GroupDatum::SOeven { eta, .. } if !eta.is_trivial() => {
                write!(f, "SO_{}({})", self.defining_size(), eta)
            }
            GroupDatum::SOeven { .. } => write!(f, "SO_{}", self.defining_size()),
            GroupDatum::Mp { .. } => write!(f, "Mp_{}", self.defining_size()),
            GroupDatum::U { size, kappa } => write!(f, "U_{size}({})", kappa.symbol()),
        }
    }
}
