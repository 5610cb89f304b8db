//! Normalizing factors of the Eisenstein series induced from
//! `Delta(tau, b) ⊗ sigma`, their pole cases and candidate residual points.
//!
//! All analytic inputs (which `L`-function has a pole, whether a central
//! value vanishes) are supplied by the caller.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::GroupDatum;
use crate::Rational;

/// Group families that carry a `(rho, rho^-)` table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SpectralFamily {
    UEven,
    UOdd,
    SOodd,
    Sp,
    SOeven,
    Mp,
}

impl SpectralFamily {
    pub const ALL: [SpectralFamily; 6] = [
        SpectralFamily::UEven,
        SpectralFamily::UOdd,
        SpectralFamily::SOodd,
        SpectralFamily::Sp,
        SpectralFamily::SOeven,
        SpectralFamily::Mp,
    ];
}

impl From<&GroupDatum> for SpectralFamily {
    fn from(g: &GroupDatum) -> Self {
        match g {
            GroupDatum::SOodd { .. } => SpectralFamily::SOodd,
            GroupDatum::Sp { .. } => SpectralFamily::Sp,
            GroupDatum::SOeven { .. } => SpectralFamily::SOeven,
            GroupDatum::Mp { .. } => SpectralFamily::Mp,
            GroupDatum::U { size, .. } if size % 2 == 0 => SpectralFamily::UEven,
            GroupDatum::U { .. } => SpectralFamily::UOdd,
        }
    }
}

impl FromStr for SpectralFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "UEven" | "U_even" | "Ueven" => Ok(SpectralFamily::UEven),
            "UOdd" | "U_odd" | "Uodd" => Ok(SpectralFamily::UOdd),
            "SOodd" => Ok(SpectralFamily::SOodd),
            "Sp" => Ok(SpectralFamily::Sp),
            "SOeven" => Ok(SpectralFamily::SOeven),
            "Mp" => Ok(SpectralFamily::Mp),
            other => Err(Error::Parse(format!("unknown family '{other}' (UEven, UOdd, SOodd, Sp, SOeven, Mp)"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RhoName {
    AsaiPlus,
    AsaiMinus,
    Sym2,
    Wedge2,
}

impl RhoName {
    pub fn latex(self) -> &'static str {
        match self {
            RhoName::AsaiPlus => "\\mathrm{Asai}^{+}",
            RhoName::AsaiMinus => "\\mathrm{Asai}^{-}",
            RhoName::Sym2 => "\\mathrm{Sym}^{2}",
            RhoName::Wedge2 => "\\wedge^{2}",
        }
    }
}

impl fmt::Display for RhoName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RhoName::AsaiPlus => "Asai+",
            RhoName::AsaiMinus => "Asai-",
            RhoName::Sym2 => "Sym2",
            RhoName::Wedge2 => "Wedge2",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FactorKind {
    RankinSelberg,
    Rho,
    RhoMinus,
}

/// `L(slope * s + intercept, ...)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LFactor {
    pub kind: FactorKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho_name: Option<RhoName>,
    /// Index `i` of the product, absent for the Rankin-Selberg factor.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub index: Option<u32>,
    pub slope: u32,
    #[serde(with = "crate::ratio")]
    pub intercept: Rational,
}

impl LFactor {
    pub fn eval(&self, s: Rational) -> Rational {
        Rational::from_integer(self.slope as i64) * s + self.intercept
    }

    fn argument_latex(&self) -> String {
        let lead = if self.slope == 1 { "s".to_string() } else { format!("{}s", self.slope) };
        let c = self.intercept;
        if c == Rational::from_integer(0) {
            lead
        } else if c.is_integer() {
            format!("{lead}+{}", c.numer())
        } else {
            format!("{lead}+\\frac{{{}}}{{{}}}", c.numer(), c.denom())
        }
    }

    pub fn latex(&self) -> String {
        match self.rho_name {
            None => format!("L({},\\tau\\times\\sigma)", self.argument_latex()),
            Some(r) => format!("L({},\\tau,{})", self.argument_latex(), r.latex()),
        }
    }
}

impl fmt::Display for LFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lead = if self.slope == 1 { "s".to_string() } else { format!("{}s", self.slope) };
        match self.rho_name {
            None => write!(f, "L({lead}+{}, tau x sigma)", self.intercept),
            Some(r) => write!(f, "L({lead}+{}, tau, {r})", self.intercept),
        }
    }
}

/// One of the four pole regimes, `1..=4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PoleCase(u8);

impl PoleCase {
    pub const ALL: [PoleCase; 4] = [PoleCase(1), PoleCase(2), PoleCase(3), PoleCase(4)];

    pub fn new(id: u8) -> Result<Self> {
        if (1..=4).contains(&id) {
            Ok(PoleCase(id))
        } else {
            Err(Error::Parse(format!("pole case must be 1..4, got {id}")))
        }
    }

    pub fn id(self) -> u8 {
        self.0
    }
}

impl fmt::Display for PoleCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Case {}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidualPoint {
    #[serde(with = "crate::ratio")]
    pub s0: Rational,
    pub square_integrable: bool,
}

pub fn rho_pair(family: SpectralFamily) -> Result<(RhoName, RhoName)> {
    use RhoName::*;
    match family {
        SpectralFamily::UEven => Ok((AsaiPlus, AsaiMinus)),
        SpectralFamily::UOdd => Ok((AsaiMinus, AsaiPlus)),
        SpectralFamily::SOodd => Ok((Sym2, Wedge2)),
        SpectralFamily::Sp | SpectralFamily::SOeven => Ok((Wedge2, Sym2)),
        SpectralFamily::Mp => Err(Error::TableUndefined(
            "no (rho, rho^-) assignment is tabulated for the metaplectic group".into(),
        )),
    }
}

/// Factors of `beta_{b,tau,sigma}(s)` with `e_{b,i}(s) = 2s + b + 1 - 2i`.
///
/// With `with_rankin_selberg = false` (no cuspidal `sigma`) the leading
/// `L(s + (b+1)/2, tau x sigma)` is dropped.
pub fn beta_factors(family: SpectralFamily, b: u32, with_rankin_selberg: bool) -> Result<Vec<LFactor>> {
    if b == 0 {
        return Err(Error::Parse("b must be positive".into()));
    }
    let (rho, rho_minus) = rho_pair(family)?;
    let bi = b as i64;
    let mut out = Vec::with_capacity(b as usize + 1);
    if with_rankin_selberg {
        out.push(LFactor {
            kind: FactorKind::RankinSelberg,
            rho_name: None,
            index: None,
            slope: 1,
            intercept: Rational::new(bi + 1, 2),
        });
    }
    let e = |i: i64| bi + 1 - 2 * i;
    for i in 1..=(bi + 1) / 2 {
        out.push(LFactor {
            kind: FactorKind::Rho,
            rho_name: Some(rho),
            index: Some(i as u32),
            slope: 2,
            intercept: Rational::from_integer(e(i) + 1),
        });
    }
    for i in 1..=bi / 2 {
        out.push(LFactor {
            kind: FactorKind::RhoMinus,
            rho_name: Some(rho_minus),
            index: Some(i as u32),
            slope: 2,
            intercept: Rational::from_integer(e(i)),
        });
    }
    Ok(out)
}

/// `beta(s) = ...` as a LaTeX product.
pub fn beta_latex(factors: &[LFactor]) -> String {
    let body: Vec<String> = factors.iter().map(LFactor::latex).collect();
    format!("\\beta_{{b,\\tau,\\sigma}}(s)={}", body.join("\\,"))
}

/// Symbol-level identity pairing each `rho^-` factor with the `rho` factor
/// of the same index: `L(s, tau x tau^*) = L(s, tau, rho) L(s, tau, rho^-)`.
pub const FACTORIZATION_IDENTITY: &str = "L(s,\\tau\\times\\tau^{*})=L(s,\\tau,\\rho)L(s,\\tau,\\rho^{-})";

/// Case from the two caller-asserted facts. The second flag is the central
/// nonvanishing of `L(1/2, tau x sigma)` when `rho` has the pole, and the
/// pole of `L(s, tau x sigma)` at `s = 1` when `rho^-` has it.
pub fn pole_case(rho_has_pole: bool, second_condition: bool) -> PoleCase {
    match (rho_has_pole, second_condition) {
        (true, true) => PoleCase(1),
        (true, false) => PoleCase(2),
        (false, true) => PoleCase(3),
        (false, false) => PoleCase(4),
    }
}

fn top(b: u32, case: PoleCase) -> Rational {
    let b = b as i64;
    match case.0 {
        1 => Rational::new(b, 2),
        2 => Rational::new(b - 2, 2),
        3 => Rational::new(b + 1, 2),
        _ => Rational::new(b - 1, 2),
    }
}

/// Positive candidate poles, largest first.
pub fn x_plus(b: u32, case: PoleCase) -> Vec<Rational> {
    let zero = Rational::from_integer(0);
    let one = Rational::from_integer(1);
    let mut out = Vec::new();
    let mut s = top(b, case);
    while s > zero {
        out.push(s);
        s -= one;
    }
    out
}

/// Candidate poles in `(0, (b+1)/2]` with the square-integrability of the
/// residue; the only exception is `s0 = (b-1)/2` in Case 3.
pub fn residual_points(b: u32, case: PoleCase) -> Vec<ResidualPoint> {
    let upper = Rational::new(b as i64 + 1, 2);
    let exception = Rational::new(b as i64 - 1, 2);
    x_plus(b, case)
        .into_iter()
        .filter(|s| *s <= upper)
        .map(|s0| ResidualPoint { s0, square_integrable: !(case.0 == 3 && s0 == exception) })
        .collect()
}
