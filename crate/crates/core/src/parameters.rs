//! Cuspidal data, simple parameters `(tau, b)` and the formal sum algebra.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::{EtaLabel, GroupDatum, Sign};
use crate::partitions::Partition;

/// Opaque identity of a cuspidal datum. Distinct ids are non-isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TauId(pub String);

impl TauId {
    pub fn new(s: impl Into<String>) -> Self {
        TauId(s.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for TauId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Id reserved for the trivial character of `GL_1`.
pub const TRIVIAL_ID: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Base {
    Plain,
    QuadraticExt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Duality {
    Orthogonal,
    Symplectic,
}

impl Duality {
    pub fn flip(self) -> Duality {
        match self {
            Duality::Orthogonal => Duality::Symplectic,
            Duality::Symplectic => Duality::Orthogonal,
        }
    }
}

/// Type of a simple parameter: orthogonal/symplectic over the base field,
/// or the sign `eta` of a conjugate self-dual parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TypeTag {
    Orthogonal,
    Symplectic,
    Conjugate(Sign),
}

/// Abstract cuspidal representation `tau` of `GL_a`.
///
/// `dual` names the contragredient (or conjugate-contragredient) partner;
/// absent or equal to `id` means self-dual, and then `duality` (plain base)
/// or `eta` (quadratic extension) must be set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CuspidalDatum {
    pub id: TauId,
    pub a: u32,
    pub base: Base,
    #[serde(default)]
    pub duality: Option<Duality>,
    #[serde(default)]
    pub eta: Option<Sign>,
    #[serde(rename = "L_half_nonzero", default)]
    pub central_nonvanishing: Option<bool>,
    #[serde(default)]
    pub is_character: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dual: Option<TauId>,
}

impl CuspidalDatum {
    fn plain(id: &str, a: u32, duality: Duality) -> Self {
        CuspidalDatum {
            id: TauId::new(id),
            a,
            base: Base::Plain,
            duality: Some(duality),
            eta: None,
            central_nonvanishing: None,
            is_character: false,
            dual: None,
        }
    }

    pub fn orthogonal(id: &str, a: u32) -> Self {
        Self::plain(id, a, Duality::Orthogonal)
    }

    /// Panics if `a` is odd; use [`CuspidalDatum::validate`] on untrusted input.
    pub fn symplectic(id: &str, a: u32) -> Self {
        assert!(a % 2 == 0, "symplectic cuspidal data live on GL_a with a even");
        Self::plain(id, a, Duality::Symplectic)
    }

    /// Quadratic character of `GL_1`, orthogonal type.
    pub fn character(id: &str) -> Self {
        let mut c = Self::plain(id, 1, Duality::Orthogonal);
        c.is_character = true;
        c
    }

    pub fn trivial() -> Self {
        Self::character(TRIVIAL_ID)
    }

    /// Conjugate self-dual datum over a quadratic extension with sign `eta`.
    pub fn conjugate(id: &str, a: u32, eta: Sign) -> Self {
        CuspidalDatum {
            id: TauId::new(id),
            a,
            base: Base::QuadraticExt,
            duality: None,
            eta: Some(eta),
            central_nonvanishing: None,
            is_character: false,
            dual: None,
        }
    }

    /// Conjugate self-dual character of `GL_1(E)` with sign `eta`.
    pub fn conjugate_character(id: &str, eta: Sign) -> Self {
        let mut c = Self::conjugate(id, 1, eta);
        c.is_character = true;
        c
    }

    pub fn with_central_nonvanishing(mut self, v: bool) -> Self {
        self.central_nonvanishing = Some(v);
        self
    }

    pub fn with_dual(mut self, partner: &str) -> Self {
        self.dual = Some(TauId::new(partner));
        self
    }

    pub fn is_self_dual(&self) -> bool {
        self.dual.as_ref().map_or(true, |d| d == &self.id)
    }

    pub fn is_trivial(&self) -> bool {
        self.id.as_str() == TRIVIAL_ID
    }

    /// Contribution to the central character of an orthogonal parameter.
    pub fn central_token(&self) -> EtaLabel {
        if self.is_trivial() || self.duality != Some(Duality::Orthogonal) {
            EtaLabel::trivial()
        } else {
            EtaLabel::token(self.id.as_str())
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.a == 0 {
            return Err(Error::InvalidCuspidal(format!("{}: a must be positive", self.id)));
        }
        if self.is_character && self.a != 1 {
            return Err(Error::InvalidCuspidal(format!("{}: a character has a = 1", self.id)));
        }
        if self.is_self_dual() {
            match self.base {
                Base::Plain => match self.duality {
                    None => {
                        return Err(Error::InvalidCuspidal(format!(
                            "{}: self-dual datum needs a duality type",
                            self.id
                        )))
                    }
                    Some(Duality::Symplectic) if self.a % 2 == 1 => {
                        return Err(Error::InvalidCuspidal(format!(
                            "{}: symplectic type forces a even, got a = {}",
                            self.id, self.a
                        )))
                    }
                    _ => {}
                },
                Base::QuadraticExt => {
                    if self.eta.is_none() {
                        return Err(Error::InvalidCuspidal(format!(
                            "{}: conjugate self-dual datum needs eta",
                            self.id
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// The partner datum, synthesized with the same invariants.
    pub fn dual_datum(&self) -> CuspidalDatum {
        match &self.dual {
            Some(partner) if partner != &self.id => {
                let mut d = self.clone();
                d.id = partner.clone();
                d.dual = Some(self.id.clone());
                d
            }
            _ => self.clone(),
        }
    }
}

/// Pair `(tau, b)`. Equality and order use the id of `tau` and `b` only.
#[derive(Debug, Clone)]
pub struct SimpleParameter {
    pub tau: CuspidalDatum,
    pub b: u32,
}

impl SimpleParameter {
    pub fn new(tau: CuspidalDatum, b: u32) -> Self {
        SimpleParameter { tau, b }
    }

    pub fn n(&self) -> u32 {
        self.tau.a * self.b
    }

    fn key(&self) -> (std::cmp::Reverse<u32>, &TauId) {
        (std::cmp::Reverse(self.b), &self.tau.id)
    }
}

impl PartialEq for SimpleParameter {
    fn eq(&self, other: &Self) -> bool {
        self.b == other.b && self.tau.id == other.tau.id
    }
}

impl Eq for SimpleParameter {}

impl std::hash::Hash for SimpleParameter {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.tau.id.hash(state);
        self.b.hash(state);
    }
}

impl PartialOrd for SimpleParameter {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Larger `b` first, then by id.
impl Ord for SimpleParameter {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

impl fmt::Display for SimpleParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.tau.id, self.b)
    }
}

/// Type of `(tau, b)` as a representation of `L_F x SL_2`.
///
/// Over the base field the type flips with the parity of `b`. Over a
/// quadratic extension the sign is `eta_tau (-1)^(b-1)`; if `kappa_a` is
/// given it must satisfy `eta_tau = kappa_a (-1)^(a-1)`.
pub fn sign_of_simple(sp: &SimpleParameter, kappa_a: Option<Sign>) -> Result<TypeTag> {
    let tau = &sp.tau;
    if !tau.is_self_dual() {
        return Err(Error::NotSelfDual(format!("{} is not self-dual", tau.id)));
    }
    tau.validate()?;
    match tau.base {
        Base::Plain => {
            let d = tau.duality.expect("validated");
            let d = if sp.b % 2 == 1 { d } else { d.flip() };
            Ok(match d {
                Duality::Orthogonal => TypeTag::Orthogonal,
                Duality::Symplectic => TypeTag::Symplectic,
            })
        }
        Base::QuadraticExt => {
            let eta = tau.eta.expect("validated");
            if let Some(k) = kappa_a {
                if k * Sign::pow_minus_one(tau.a as i64 - 1) != eta {
                    return Err(Error::InconsistentSign(format!(
                        "eta_{} = {eta} but kappa_a (-1)^(a-1) = {}",
                        tau.id,
                        k * Sign::pow_minus_one(tau.a as i64 - 1)
                    )));
                }
            }
            Ok(TypeTag::Conjugate(eta * Sign::pow_minus_one(sp.b as i64 - 1)))
        }
    }
}

/// `kappa_a (-1)^(ab - a - b + 1)`.
pub fn kappa_ab(kappa_a: Sign, a: u32, b: u32) -> Sign {
    let (a, b) = (a as i64, b as i64);
    kappa_a * Sign::pow_minus_one(a * b - a - b + 1)
}

/// Formal isobaric sum of simple parameters, kept in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ArthurParameter {
    summands: Vec<SimpleParameter>,
}

impl ArthurParameter {
    pub fn new(mut summands: Vec<SimpleParameter>) -> Self {
        summands.sort();
        ArthurParameter { summands }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn simple(tau: CuspidalDatum, b: u32) -> Self {
        Self::new(vec![SimpleParameter::new(tau, b)])
    }

    pub fn summands(&self) -> &[SimpleParameter] {
        &self.summands
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    /// `N(psi) = sum a_i b_i`.
    pub fn n(&self) -> u32 {
        self.summands.iter().map(SimpleParameter::n).sum()
    }

    pub fn contains(&self, sp: &SimpleParameter) -> bool {
        self.summands.contains(sp)
    }

    pub fn boxplus(&self, other: &ArthurParameter) -> ArthurParameter {
        let mut s = self.summands.clone();
        s.extend(other.summands.iter().cloned());
        ArthurParameter::new(s)
    }

    pub fn plus(&self, sp: SimpleParameter) -> ArthurParameter {
        let mut s = self.summands.clone();
        s.push(sp);
        ArthurParameter::new(s)
    }

    pub fn boxminus(&self, sp: &SimpleParameter) -> Result<ArthurParameter> {
        let idx = self
            .summands
            .iter()
            .position(|x| x == sp)
            .ok_or_else(|| Error::NotASummand(format!("{sp} does not occur in {self}")))?;
        let mut s = self.summands.clone();
        s.remove(idx);
        Ok(ArthurParameter { summands: s })
    }

    pub fn dual(&self) -> ArthurParameter {
        ArthurParameter::new(
            self.summands
                .iter()
                .map(|sp| SimpleParameter::new(sp.tau.dual_datum(), sp.b))
                .collect(),
        )
    }

    pub fn is_self_dual(&self) -> bool {
        self.summands.iter().all(|sp| sp.tau.is_self_dual())
    }

    /// Pairwise distinct summands.
    pub fn is_elliptic(&self) -> bool {
        self.summands.windows(2).all(|w| w[0] != w[1])
    }

    /// `[b_i^{a_i}]` concatenated.
    pub fn underlying_partition(&self) -> Partition {
        let mut parts = Vec::new();
        for sp in &self.summands {
            parts.extend(std::iter::repeat(sp.b).take(sp.tau.a as usize));
        }
        Partition::new(parts)
    }

    /// Distinct cuspidal data, ordered by id.
    pub fn cuspidal_data(&self) -> Vec<&CuspidalDatum> {
        let mut m: BTreeMap<&TauId, &CuspidalDatum> = BTreeMap::new();
        for sp in &self.summands {
            m.entry(&sp.tau.id).or_insert(&sp.tau);
        }
        m.into_values().collect()
    }

    /// Symbolic central character of an orthogonal parameter.
    pub fn central_eta(&self) -> EtaLabel {
        self.summands
            .iter()
            .filter(|sp| sp.b % 2 == 1)
            .fold(EtaLabel::trivial(), |acc, sp| &acc * &sp.tau.central_token())
    }

    pub fn latex(&self) -> String {
        if self.summands.is_empty() {
            return "\\emptyset".to_string();
        }
        let parts: Vec<String> = self
            .summands
            .iter()
            .map(|sp| format!("({},{})", latex_id(sp.tau.id.as_str()), sp.b))
            .collect();
        parts.join("\\boxplus")
    }
}

fn latex_id(id: &str) -> String {
    match id {
        "τ" => "\\tau".into(),
        "σ" => "\\sigma".into(),
        "χ" => "\\chi".into(),
        other => format!("\\mathrm{{{other}}}"),
    }
}

impl fmt::Display for ArthurParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.summands.iter().map(|s| s.to_string()).collect();
        f.write_str(&parts.join("⊞"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct SummandRef {
    tau: TauId,
    b: u32,
}

/// File form: cuspidal data listed once, summands referring to them by id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParameterFile {
    #[serde(default)]
    cuspidal_data: Vec<CuspidalDatum>,
    summands: Vec<SummandRef>,
}

impl ParameterFile {
    pub fn resolve(&self) -> Result<ArthurParameter> {
        let mut table: BTreeMap<&TauId, &CuspidalDatum> = BTreeMap::new();
        for c in &self.cuspidal_data {
            c.validate()?;
            if table.insert(&c.id, c).is_some() {
                return Err(Error::InvalidCuspidal(format!("duplicate id {}", c.id)));
            }
        }
        let mut out = Vec::new();
        for s in &self.summands {
            if s.b == 0 {
                return Err(Error::Parse(format!("b must be positive for {}", s.tau)));
            }
            let tau = match table.get(&s.tau) {
                Some(t) => (*t).clone(),
                None if s.tau.as_str() == TRIVIAL_ID => CuspidalDatum::trivial(),
                None => return Err(Error::UnknownTau(s.tau.to_string())),
            };
            out.push(SimpleParameter::new(tau, s.b));
        }
        Ok(ArthurParameter::new(out))
    }
}

impl From<&ArthurParameter> for ParameterFile {
    fn from(psi: &ArthurParameter) -> Self {
        ParameterFile {
            cuspidal_data: psi.cuspidal_data().into_iter().cloned().collect(),
            summands: psi
                .summands
                .iter()
                .map(|sp| SummandRef { tau: sp.tau.id.clone(), b: sp.b })
                .collect(),
        }
    }
}

impl Serialize for ArthurParameter {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ParameterFile::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ArthurParameter {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        ParameterFile::deserialize(deserializer)?
            .resolve()
            .map_err(serde::de::Error::custom)
    }
}

/// Groups `G` with `psi` in the discrete parameter set of `G`.
///
/// Over the base field: all summands orthogonal gives `Sp` (odd `N`) or
/// `SO_N(eta)` (even `N`); all symplectic gives `SO_{N+1}` and `Mp_N`.
/// Over a quadratic extension every summand must satisfy
/// `eta_(tau,b) = kappa (-1)^(N-1)`; a missing `kappa` is read off the
/// first summand. Mixed types give no group.
pub fn classify(psi: &ArthurParameter, kappa: Option<Sign>) -> Result<Vec<GroupDatum>> {
    if psi.is_empty() {
        return Err(Error::Degenerate("empty parameter".into()));
    }
    if !psi.is_elliptic() {
        return Err(Error::NotElliptic(psi.to_string()));
    }
    if !psi.is_self_dual() {
        return Err(Error::NotSelfDual(psi.to_string()));
    }
    let n = psi.n();
    let tags = psi
        .summands
        .iter()
        .map(|sp| sign_of_simple(sp, None))
        .collect::<Result<Vec<_>>>()?;
    let all = |t: TypeTag| tags.iter().all(|x| *x == t);
    if all(TypeTag::Orthogonal) {
        return Ok(if n % 2 == 1 {
            vec![GroupDatum::sp((n - 1) / 2)]
        } else {
            vec![GroupDatum::so_even(n / 2, psi.central_eta())]
        });
    }
    if all(TypeTag::Symplectic) {
        return Ok(vec![GroupDatum::so_odd(n / 2), GroupDatum::mp(n / 2)]);
    }
    let signs: Vec<Sign> = tags
        .iter()
        .filter_map(|t| match t {
            TypeTag::Conjugate(s) => Some(*s),
            _ => None,
        })
        .collect();
    if signs.len() != tags.len() {
        return Ok(Vec::new());
    }
    let twist = Sign::pow_minus_one(n as i64 - 1);
    let kappa = kappa.unwrap_or(signs[0] * twist);
    if signs.iter().all(|&s| s == kappa * twist) {
        Ok(vec![GroupDatum::unitary(n, kappa)])
    } else {
        Ok(Vec::new())
    }
}
