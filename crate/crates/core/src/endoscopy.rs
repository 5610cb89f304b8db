//! Elliptic and twisted endoscopy data attached to `psi = (tau, b) ⊞ psi'`.
//!
//! Every datum satisfies twisted-size additivity:
//! `N(factor_1) + N(factor_2) = N(target)`, where `N` is the size of the
//! general linear group the dual group lives in (see
//! [`GroupDatum::twisted_size`]). This covers the standard, twisted and
//! metaplectic shapes alike.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::{EtaLabel, GroupDatum, GroupFamily, Sign};
use crate::parameters::{classify, sign_of_simple, ArthurParameter, SimpleParameter, TypeTag};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EndoscopyKind {
    Standard,
    Twisted,
    /// Shapes involving the metaplectic group.
    MpVariant,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EndoscopyDatum {
    pub target: GroupDatum,
    pub factors: (GroupDatum, GroupDatum),
    pub kind: EndoscopyKind,
    /// Unitary case: `(kappa_1, kappa_2)` with `kappa_i = (-1)^(N - N_i)`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub signs: Option<(Sign, Sign)>,
    /// Even orthogonal case: characters with `eta = eta_1 eta_2`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eta_pair: Option<(EtaLabel, EtaLabel)>,
    pub conjecture_basis: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub variants: Vec<EndoscopyDatum>,
}

impl EndoscopyDatum {
    fn new(target: GroupDatum, f1: GroupDatum, f2: GroupDatum, kind: EndoscopyKind, basis: &str) -> Self {
        EndoscopyDatum {
            target,
            factors: (f1, f2),
            kind,
            signs: None,
            eta_pair: None,
            conjecture_basis: basis.to_string(),
            variants: Vec::new(),
        }
    }

    /// Unitary datum with relative signs; the factor groups carry the
    /// absolute signs `kappa * kappa_i`.
    pub fn unitary(n: u32, kappa: Sign, n1: u32, basis: &str) -> Self {
        let n2 = n - n1;
        let s1 = Sign::pow_minus_one((n - n1) as i64);
        let s2 = Sign::pow_minus_one((n - n2) as i64);
        let mut e = EndoscopyDatum::new(
            GroupDatum::unitary(n, kappa),
            GroupDatum::unitary(n1, kappa * s1),
            GroupDatum::unitary(n2, kappa * s2),
            EndoscopyKind::Standard,
            basis,
        );
        e.signs = Some((s1, s2));
        e
    }

    fn with_etas(mut self, e1: EtaLabel, e2: EtaLabel) -> Self {
        self.eta_pair = Some((e1, e2));
        self
    }

    /// `G_0 x H -> G` rendered with defining sizes.
    pub fn describe(&self) -> String {
        format!("{} x {} -> {}", self.factors.0, self.factors.1, self.target)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Validation {
    pub ok: bool,
    pub reasons: Vec<String>,
}

fn parity_rule(target: GroupFamily, sp: &SimpleParameter) -> Result<()> {
    let tag = sign_of_simple(sp, None)?;
    let a = sp.tau.a;
    let need = match target {
        GroupFamily::SOodd | GroupFamily::Mp => TypeTag::Symplectic,
        GroupFamily::Sp | GroupFamily::SOeven => TypeTag::Orthogonal,
        GroupFamily::U => return Ok(()),
    };
    if tag == TypeTag::Orthogonal || tag == TypeTag::Symplectic {
        if tag != need {
            let rule = match (need, a % 2) {
                (TypeTag::Symplectic, 0) => "a even: tau symplectic needs b odd, tau orthogonal needs b even",
                (TypeTag::Symplectic, _) => "a odd: tau must be orthogonal and b even",
                (_, 0) => "a even: tau symplectic needs b even, tau orthogonal needs b odd",
                _ => "a odd: tau must be orthogonal and b odd",
            };
            return Err(Error::ParityViolation(format!(
                "{sp} with a = {a} is not of {} type for {target} ({rule})",
                if need == TypeTag::Symplectic { "symplectic" } else { "orthogonal" }
            )));
        }
        Ok(())
    } else {
        Err(Error::GroupMismatch(format!("{sp} is conjugate self-dual but {target} is not unitary")))
    }
}

/// Endoscopy datum `G_0 x H -> G` for `psi = (tau, b) ⊞ psi2` with
/// `(tau, b)` in `G_0` and `psi2` in `H`.
///
/// Metaplectic shapes are returned in `variants`, each with its own target.
pub fn elliptic_decompose(g: &GroupDatum, psi1: &SimpleParameter, psi2: &ArthurParameter) -> Result<EndoscopyDatum> {
    let a = psi1.tau.a;
    let b = psi1.b;
    let ab = a * b;
    let n_total = g.twisted_size();
    if ab > n_total {
        return Err(Error::GroupMismatch(format!("{psi1} has size {ab} > {n_total} for {g}")));
    }
    parity_rule(g.family(), psi1)?;
    let psi = psi2.plus(psi1.clone());
    if psi.n() != n_total {
        return Err(Error::GroupMismatch(format!(
            "N(psi) = {} but {g} needs {n_total}",
            psi.n()
        )));
    }
    let groups = classify(&psi, g.kappa())?;
    if !groups.iter().any(|h| h.same_shape(g)) {
        return Err(Error::GroupMismatch(format!("{psi} does not factor through {g}")));
    }
    let rest = n_total - ab;
    let e1 = ArthurParameter::simple(psi1.tau.clone(), b).central_eta();
    let e2 = psi2.central_eta();
    let out = match g {
        GroupDatum::SOodd { .. } | GroupDatum::Mp { .. } => {
            let n2 = n_total;
            let so_so = |target: GroupDatum, basis: &str, kind| {
                EndoscopyDatum::new(target, GroupDatum::so_odd(ab / 2), GroupDatum::so_odd(rest / 2), kind, basis)
            };
            let so = GroupDatum::so_odd(n2 / 2);
            let mp = GroupDatum::mp(n2 / 2);
            if a % 2 == 0 {
                let std = so_so(so, "eq-3.2", EndoscopyKind::Standard);
                let v1 = EndoscopyDatum::new(
                    mp.clone(),
                    GroupDatum::so_odd(ab / 2),
                    GroupDatum::mp(rest / 2),
                    EndoscopyKind::MpVariant,
                    "eq-3.2-variant",
                );
                let v2 = EndoscopyDatum::new(
                    mp,
                    GroupDatum::mp(ab / 2),
                    GroupDatum::mp(rest / 2),
                    EndoscopyKind::MpVariant,
                    "eq-3.2-variant",
                );
                if matches!(g, GroupDatum::SOodd { .. }) {
                    let mut d = std;
                    d.variants = vec![v1, v2];
                    d
                } else {
                    let mut d = v1;
                    d.variants = vec![v2, std];
                    d
                }
            } else {
                let std = so_so(so.clone(), "eq-3.3", EndoscopyKind::Standard);
                let v1 = EndoscopyDatum::new(
                    so,
                    GroupDatum::mp(ab / 2),
                    GroupDatum::mp(rest / 2),
                    EndoscopyKind::MpVariant,
                    "eq-3.4",
                );
                let v2 = so_so(mp, "eq-3.5", EndoscopyKind::MpVariant);
                if matches!(g, GroupDatum::SOodd { .. }) {
                    let mut d = std;
                    d.variants = vec![v1, v2];
                    d
                } else {
                    let mut d = v2;
                    d.variants = vec![std, v1];
                    d
                }
            }
        }
        GroupDatum::Sp { .. } => {
            if a % 2 == 0 {
                EndoscopyDatum::new(
                    g.clone(),
                    GroupDatum::so_even(ab / 2, e1),
                    GroupDatum::sp((rest - 1) / 2),
                    EndoscopyKind::Standard,
                    "eq-3.6",
                )
            } else {
                EndoscopyDatum::new(
                    g.clone(),
                    GroupDatum::sp((ab - 1) / 2),
                    GroupDatum::so_even(rest / 2, e2),
                    EndoscopyKind::Standard,
                    "eq-3.7",
                )
            }
        }
        GroupDatum::SOeven { .. } => {
            if a % 2 == 0 {
                EndoscopyDatum::new(
                    g.clone(),
                    GroupDatum::so_even(ab / 2, e1.clone()),
                    GroupDatum::so_even(rest / 2, e2.clone()),
                    EndoscopyKind::Standard,
                    "eq-3.10",
                )
                .with_etas(e1, e2)
            } else {
                EndoscopyDatum::new(
                    g.clone(),
                    GroupDatum::sp((ab - 1) / 2),
                    GroupDatum::sp((rest - 1) / 2),
                    EndoscopyKind::Twisted,
                    "eq-3.9",
                )
                .with_etas(e1, e2)
            }
        }
        GroupDatum::U { size, kappa } => {
            let basis = if size % 2 == 0 { "eq-3.12" } else { "eq-3.13" };
            EndoscopyDatum::unitary(*size, *kappa, ab, basis)
        }
    };
    Ok(out)
}

/// All elliptic shapes of `g` with `N_1 <= N_2`, with symbolic labels.
pub fn enumerate_elliptic(g: &GroupDatum) -> Vec<EndoscopyDatum> {
    let n = g.twisted_size();
    let mut out = Vec::new();
    let free = || EtaLabel::token("ξ");
    match g {
        GroupDatum::SOeven { eta, .. } => {
            for n1 in (0..=n / 2).filter(|x| x % 2 == 0) {
                let n2 = n - n1;
                let (e1, e2) = if n1 == 0 { (EtaLabel::trivial(), eta.clone()) } else { (free(), eta * &free()) };
                out.push(
                    EndoscopyDatum::new(
                        g.clone(),
                        GroupDatum::so_even(n1 / 2, e1.clone()),
                        GroupDatum::so_even(n2 / 2, e2.clone()),
                        EndoscopyKind::Standard,
                        "eq-3.8",
                    )
                    .with_etas(e1, e2),
                );
            }
            for n1 in (1..=n / 2).filter(|x| x % 2 == 1) {
                let n2 = n - n1;
                let (e1, e2) = (free(), eta * &free());
                out.push(
                    EndoscopyDatum::new(
                        g.clone(),
                        GroupDatum::sp((n1 - 1) / 2),
                        GroupDatum::sp((n2 - 1) / 2),
                        EndoscopyKind::Twisted,
                        "eq-3.9",
                    )
                    .with_etas(e1, e2),
                );
            }
        }
        GroupDatum::U { size, kappa } => {
            for n1 in 0..=size / 2 {
                out.push(EndoscopyDatum::unitary(*size, *kappa, n1, "eq-3.11"));
            }
        }
        GroupDatum::SOodd { .. } => {
            for n1 in (0..=n / 2).filter(|x| x % 2 == 0) {
                let n2 = n - n1;
                out.push(EndoscopyDatum::new(
                    g.clone(),
                    GroupDatum::so_odd(n1 / 2),
                    GroupDatum::so_odd(n2 / 2),
                    EndoscopyKind::Standard,
                    "eq-3.2",
                ));
            }
            for n1 in (0..=n / 2).filter(|x| x % 2 == 0) {
                let n2 = n - n1;
                out.push(EndoscopyDatum::new(
                    g.clone(),
                    GroupDatum::mp(n1 / 2),
                    GroupDatum::mp(n2 / 2),
                    EndoscopyKind::MpVariant,
                    "eq-3.4",
                ));
            }
        }
        GroupDatum::Sp { .. } => {
            for n1 in (0..n).filter(|x| x % 2 == 0) {
                let n2 = n - n1;
                let e1 = if n1 == 0 { EtaLabel::trivial() } else { free() };
                out.push(EndoscopyDatum::new(
                    g.clone(),
                    GroupDatum::so_even(n1 / 2, e1),
                    GroupDatum::sp((n2 - 1) / 2),
                    EndoscopyKind::Standard,
                    "eq-3.6",
                ));
            }
        }
        GroupDatum::Mp { .. } => {
            for n1 in (0..=n).filter(|x| x % 2 == 0) {
                out.push(EndoscopyDatum::new(
                    g.clone(),
                    GroupDatum::so_odd(n1 / 2),
                    GroupDatum::mp((n - n1) / 2),
                    EndoscopyKind::MpVariant,
                    "eq-3.2-variant",
                ));
            }
            for n1 in (0..=n / 2).filter(|x| x % 2 == 0) {
                let n2 = n - n1;
                out.push(EndoscopyDatum::new(
                    g.clone(),
                    GroupDatum::mp(n1 / 2),
                    GroupDatum::mp(n2 / 2),
                    EndoscopyKind::MpVariant,
                    "eq-3.2-variant",
                ));
                out.push(EndoscopyDatum::new(
                    g.clone(),
                    GroupDatum::so_odd(n1 / 2),
                    GroupDatum::so_odd(n2 / 2),
                    EndoscopyKind::MpVariant,
                    "eq-3.5",
                ));
            }
        }
    }
    out
}

fn allowed_shape(target: GroupFamily, f1: GroupFamily, f2: GroupFamily) -> Option<EndoscopyKind> {
    use GroupFamily::*;
    match (target, f1, f2) {
        (SOodd, SOodd, SOodd) => Some(EndoscopyKind::Standard),
        (SOodd, Mp, Mp) => Some(EndoscopyKind::MpVariant),
        (Sp, SOeven, Sp) | (Sp, Sp, SOeven) => Some(EndoscopyKind::Standard),
        (SOeven, SOeven, SOeven) => Some(EndoscopyKind::Standard),
        (SOeven, Sp, Sp) => Some(EndoscopyKind::Twisted),
        (Mp, SOodd, Mp) | (Mp, Mp, SOodd) | (Mp, Mp, Mp) | (Mp, SOodd, SOodd) => Some(EndoscopyKind::MpVariant),
        (U, U, U) => Some(EndoscopyKind::Standard),
        _ => None,
    }
}

/// Structural checks on a datum and all of its variants.
pub fn validate(e: &EndoscopyDatum) -> Validation {
    let mut reasons = Vec::new();
    check_one(e, &mut reasons);
    for v in &e.variants {
        let mut sub = Vec::new();
        check_one(v, &mut sub);
        reasons.extend(sub.into_iter().map(|r| format!("variant {}: {r}", v.describe())));
    }
    Validation { ok: reasons.is_empty(), reasons }
}

fn check_one(e: &EndoscopyDatum, reasons: &mut Vec<String>) {
    let (f1, f2) = &e.factors;
    let t = &e.target;
    match allowed_shape(t.family(), f1.family(), f2.family()) {
        None => reasons.push(format!(
            "{} x {} is not an endoscopy shape for {}",
            f1.family(),
            f2.family(),
            t.family()
        )),
        Some(kind) if kind != e.kind => {
            reasons.push(format!("shape is {kind:?} but datum is tagged {:?}", e.kind))
        }
        Some(_) => {}
    }
    let (n1, n2, n) = (f1.twisted_size(), f2.twisted_size(), t.twisted_size());
    if n1 + n2 != n {
        reasons.push(format!("twisted sizes {n1} + {n2} != {n}"));
    }
    if e.kind == EndoscopyKind::Twisted && (n1 % 2 == 0 || n2 % 2 == 0) {
        reasons.push(format!("twisted datum needs odd sizes, got ({n1}, {n2})"));
    }
    if let GroupDatum::U { size, kappa } = t {
        match e.signs {
            None => reasons.push("unitary datum without signs".into()),
            Some((s1, s2)) => {
                for (i, (s, f)) in [(s1, f1), (s2, f2)].into_iter().enumerate() {
                    let want = Sign::pow_minus_one(*size as i64 - f.index() as i64);
                    if s != want {
                        reasons.push(format!(
                            "kappa_{} = {s} but (-1)^(N - N_{}) = {want}",
                            i + 1,
                            i + 1
                        ));
                    }
                    if f.kappa() != Some(*kappa * s) {
                        reasons.push(format!("factor {} does not carry kappa * kappa_{}", f, i + 1));
                    }
                }
            }
        }
    } else if e.signs.is_some() {
        reasons.push("signs are only meaningful for unitary targets".into());
    }
    if let Some(eta) = t.eta() {
        match &e.eta_pair {
            None => reasons.push("even orthogonal datum without character pair".into()),
            Some((e1, e2)) => {
                if &(e1 * e2) != eta {
                    reasons.push(format!("eta = {eta} but eta_1 eta_2 = {}", e1 * e2));
                }
                for (lbl, f) in [(e1, f1), (e2, f2)] {
                    if let Some(fe) = f.eta() {
                        if fe != lbl {
                            reasons.push(format!("factor {f} carries {fe} but pair says {lbl}"));
                        }
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parameters::CuspidalDatum;

    fn sp(tau: CuspidalDatum, b: u32) -> SimpleParameter {
        SimpleParameter::new(tau, b)
    }

    #[test]
    fn sp_even_case() {
        // Sp_6, (tau,2) with tau symplectic on GL_2, rest (1,1) ⊞ (sigma,1) with sigma orth on GL_2
        let tau = CuspidalDatum::symplectic("t", 2);
        let rest = ArthurParameter::simple(CuspidalDatum::trivial(), 1)
            .plus(sp(CuspidalDatum::orthogonal("s", 2), 1));
        let g = GroupDatum::sp(3);
        let e = elliptic_decompose(&g, &sp(tau, 2), &rest).unwrap();
        assert_eq!(e.factors.0, GroupDatum::so_even(2, EtaLabel::trivial()));
        assert_eq!(e.factors.1, GroupDatum::sp(1));
        assert_eq!(e.conjecture_basis, "eq-3.6");
        assert!(validate(&e).ok);
    }

    #[test]
    fn sp_odd_case_has_even_orthogonal_factor() {
        // Sp_8, (sigma,1) with sigma orthogonal on GL_3, rest of size 6
        let s = CuspidalDatum::orthogonal("s", 3);
        let rest = ArthurParameter::simple(CuspidalDatum::orthogonal("o", 6), 1);
        let g = GroupDatum::sp(4);
        let e = elliptic_decompose(&g, &sp(s, 1), &rest).unwrap();
        assert_eq!(e.factors.0, GroupDatum::sp(1));
        assert_eq!(e.factors.1, GroupDatum::so_even(3, EtaLabel::token("o")));
        assert_eq!(e.describe(), "Sp_2 x SO_6(eta_o) -> Sp_8");
        assert!(validate(&e).ok);
    }

    #[test]
    fn unitary_odd() {
        // U_5, kappa = +1, (tau,1) with a = 2; eta_(tau,1) must be kappa (-1)^4 = +1
        let tau = CuspidalDatum::conjugate("u", 2, Sign::Plus);
        let rest = ArthurParameter::simple(CuspidalDatum::conjugate("w", 3, Sign::Plus), 1);
        let g = GroupDatum::unitary(5, Sign::Plus);
        let e = elliptic_decompose(&g, &sp(tau, 1), &rest).unwrap();
        assert_eq!(e.signs, Some((Sign::Minus, Sign::Plus)));
        assert_eq!(e.conjecture_basis, "eq-3.13");
        assert!(validate(&e).ok);
    }

    #[test]
    fn parity_errors() {
        let tau = CuspidalDatum::symplectic("t", 2);
        let rest = ArthurParameter::simple(CuspidalDatum::trivial(), 1);
        // (t,1) is symplectic, cannot sit in Sp_2
        let err = elliptic_decompose(&GroupDatum::sp(1), &sp(tau, 1), &rest).unwrap_err();
        assert!(matches!(err, Error::ParityViolation(_)));
    }

    #[test]
    fn enumerate_examples() {
        let soe = enumerate_elliptic(&GroupDatum::so_even(2, EtaLabel::trivial()));
        let std: Vec<_> = soe.iter().filter(|e| e.kind == EndoscopyKind::Standard).collect();
        assert_eq!(std.len(), 2);
        let tw: Vec<_> = soe.iter().filter(|e| e.kind == EndoscopyKind::Twisted).collect();
        assert_eq!(tw.len(), 1);
        assert_eq!(tw[0].factors, (GroupDatum::sp(0), GroupDatum::sp(1)));

        let u = enumerate_elliptic(&GroupDatum::unitary(2, Sign::Plus));
        let signs: Vec<_> = u.iter().map(|e| e.signs.unwrap()).collect();
        assert_eq!(signs, vec![(Sign::Plus, Sign::Plus), (Sign::Minus, Sign::Minus)]);

        for g in [
            GroupDatum::so_odd(4),
            GroupDatum::sp(4),
            GroupDatum::mp(3),
            GroupDatum::so_even(4, EtaLabel::token("q")),
            GroupDatum::unitary(7, Sign::Minus),
        ] {
            for e in enumerate_elliptic(&g) {
                assert!(validate(&e).ok, "{}: {:?}", e.describe(), validate(&e).reasons);
            }
        }
    }

    #[test]
    fn validate_rejects() {
        let bad = EndoscopyDatum::new(
            GroupDatum::sp(2),
            GroupDatum::sp(1),
            GroupDatum::sp(1),
            EndoscopyKind::Standard,
            "hand",
        );
        assert!(!validate(&bad).ok);

        let mut u = EndoscopyDatum::unitary(5, Sign::Plus, 2, "hand");
        u.signs = Some((Sign::Plus, Sign::Plus));
        assert!(!validate(&u).ok);
    }
}
