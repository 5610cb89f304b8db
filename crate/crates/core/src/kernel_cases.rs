//! Construction records for the kernel-function cases with `d = a - 1`,
//! the `(tau, b)`-towers built from them, and the basic triangles.
//!
//! `compile` is total with flags: a record comes back whenever its group
//! sizes exist, with failed range or parity conditions listed as
//! unsatisfied constraints. Cells outside the dispatch table are errors.

use serde::{Deserialize, Serialize};

use crate::dot::DotGraph;
use crate::endoscopy::{EndoscopyDatum, EndoscopyKind};
use crate::error::{Error, Result};
use crate::groups::{EtaLabel, GroupDatum, GroupFamily, Sign};
use crate::orbits::CoefficientKind;
use crate::parameters::{sign_of_simple, ArthurParameter, Base, CuspidalDatum, Duality, SimpleParameter, TypeTag};
use crate::partitions::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constraint {
    pub name: String,
    pub satisfied: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionCase {
    pub target: GroupDatum,
    pub tau: CuspidalDatum,
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
    pub ambient: GroupDatum,
    pub psi0: ArthurParameter,
    /// `[d^c 1^r]` in the ambient group.
    pub orbit: Partition,
    pub coefficient: CoefficientKind,
    pub endoscopy: EndoscopyDatum,
    pub conjecture_tag: String,
    /// `b = 0` or `c = 0`: the transfer is the identity.
    pub identity_transfer: bool,
    pub constraints: Vec<Constraint>,
}

impl ConstructionCase {
    pub fn satisfied(&self) -> bool {
        self.constraints.iter().all(|c| c.satisfied)
    }

    /// `r` in `[d^c 1^r]`.
    pub fn r(&self) -> u32 {
        self.ambient.defining_size() - self.d * self.c
    }
}

/// Caller choices the tables leave open.
#[derive(Debug, Clone, Default)]
pub struct CompileOptions {
    /// Unitary target sign; read off `tau` when absent.
    pub kappa: Option<Sign>,
    /// The character in `psi0 ⊞ (chi, 1)`. Defaults to the token `χ`
    /// (plain base) or the conjugate character of the forced sign.
    pub chi: Option<CuspidalDatum>,
    /// Unitary case: use `m_V = a(b+c) + 1` instead of `a(b+c)`.
    pub unitary_extra: bool,
}

fn free_eta() -> EtaLabel {
    EtaLabel::token("ξ")
}

struct Cell {
    tag: &'static str,
    ambient: GroupDatum,
    psi0: ArthurParameter,
    endoscopy: EndoscopyDatum,
}

fn datum(target: GroupDatum, f1: GroupDatum, f2: GroupDatum, kind: EndoscopyKind, basis: &str) -> EndoscopyDatum {
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

struct Flags(Vec<Constraint>);

impl Flags {
    fn push(&mut self, name: impl Into<String>, satisfied: bool) {
        self.0.push(Constraint { name: name.into(), satisfied });
    }

    /// Type rule for `(tau, b)` with `a` even.
    fn parity(&mut self, sympl: bool, sympl_b_odd: bool, b: u32) {
        let want_odd = if sympl { sympl_b_odd } else { !sympl_b_odd };
        let name = format!(
            "tau {} => b {}",
            if sympl { "symplectic" } else { "orthogonal" },
            if want_odd { "odd" } else { "even" }
        );
        self.push(name, (b % 2 == 1) == want_odd);
    }
}

fn need_parity(b: u32, odd: bool, tag: &str) -> Result<()> {
    if (b % 2 == 1) != odd {
        return Err(Error::ParityViolation(format!(
            "{tag} needs b {}, got b = {b}: the group sizes do not exist",
            if odd { "odd" } else { "even" }
        )));
    }
    Ok(())
}

pub fn compile(target: GroupFamily, tau: &CuspidalDatum, b: u32, c: u32) -> Result<ConstructionCase> {
    compile_with(target, tau, b, c, &CompileOptions::default())
}

/// Dispatch on `(target, a mod 2, c mod 2)` and build the record.
pub fn compile_with(
    target: GroupFamily,
    tau: &CuspidalDatum,
    b: u32,
    c: u32,
    opts: &CompileOptions,
) -> Result<ConstructionCase> {
    tau.validate()?;
    if !tau.is_self_dual() {
        return Err(Error::NotSelfDual(format!("{} is not self-dual", tau.id)));
    }
    let unitary = target == GroupFamily::U;
    if unitary != (tau.base == Base::QuadraticExt) {
        return Err(Error::GroupMismatch(format!(
            "{target} target needs a {} datum, {} is not",
            if unitary { "conjugate self-dual" } else { "self-dual" },
            tau.id
        )));
    }
    let a = tau.a;
    let d = a - 1;
    let mut flags = Flags(Vec::new());
    flags.push("d = a - 1 >= 1", a >= 2);
    let cell = if unitary {
        unitary_cell(tau, a, b, c, opts, &mut flags)?
    } else {
        plain_cell(target, tau, a, b, c, opts, &mut flags)?
    };
    let r = cell.ambient.defining_size() - d * c;
    let coefficient = if d % 2 == 1 { CoefficientKind::Bessel } else { CoefficientKind::FourierJacobi };
    Ok(ConstructionCase {
        target: cell.endoscopy.target.clone(),
        tau: tau.clone(),
        a,
        b,
        c,
        d,
        ambient: cell.ambient,
        psi0: cell.psi0,
        orbit: Partition::hook_type(d, c, r),
        coefficient,
        endoscopy: cell.endoscopy,
        conjecture_tag: cell.tag.to_string(),
        identity_transfer: b == 0 || c == 0,
        constraints: flags.0,
    })
}

fn plain_cell(
    target: GroupFamily,
    tau: &CuspidalDatum,
    a: u32,
    b: u32,
    c: u32,
    opts: &CompileOptions,
    flags: &mut Flags,
) -> Result<Cell> {
    use GroupFamily::*;
    let sympl = tau.duality == Some(Duality::Symplectic);
    let ab = a * b;
    let m = a * (b + c);
    let top = ArthurParameter::simple(tau.clone(), b + c);
    let e1 = if b % 2 == 1 { tau.central_token() } else { EtaLabel::trivial() };
    let cell = match (target, a % 2, c % 2) {
        (Sp, 0, 0) => {
            flags.parity(sympl, false, b);
            flags.push("c >= 2", c >= 2);
            Cell {
                tag: "conj-5.2",
                ambient: GroupDatum::sp(m / 2),
                psi0: top.plus(SimpleParameter::new(CuspidalDatum::trivial(), 1)),
                endoscopy: datum(
                    GroupDatum::sp((ab + c) / 2),
                    GroupDatum::so_even(ab / 2, e1),
                    GroupDatum::sp(c / 2),
                    EndoscopyKind::Standard,
                    "eq-3.6",
                ),
            }
        }
        (SOodd, 0, 1) => {
            flags.parity(sympl, true, b);
            flags.push("c >= 1", c >= 1);
            Cell {
                tag: "conj-5.3",
                ambient: GroupDatum::so_even(m / 2, top.central_eta()),
                psi0: top,
                endoscopy: datum(
                    GroupDatum::so_odd((ab + c - 1) / 2),
                    GroupDatum::so_odd(ab / 2),
                    GroupDatum::so_odd((c - 1) / 2),
                    EndoscopyKind::Standard,
                    "eq-3.2",
                ),
            }
        }
        (SOeven, 0, 0) => {
            flags.parity(sympl, false, b);
            flags.push("b >= 1", b >= 1);
            flags.push("c >= 2", c >= 2);
            // The ambient form is chosen with the discriminant of the
            // orbit's form, so this holds by construction.
            flags.push("eta_{q_V} = eta_{q_0}", true);
            let e2 = free_eta();
            let mut e = datum(
                GroupDatum::so_even((ab + c) / 2, &e1 * &e2),
                GroupDatum::so_even(ab / 2, e1.clone()),
                GroupDatum::so_even(c / 2, e2.clone()),
                EndoscopyKind::Standard,
                "eq-3.10",
            );
            e.eta_pair = Some((e1, e2));
            Cell { tag: "conj-5.4", ambient: GroupDatum::so_even(m / 2, top.central_eta()), psi0: top, endoscopy: e }
        }
        (Mp, 0, 0) => {
            flags.parity(sympl, true, b);
            if sympl {
                flags.push("tau symplectic => L(1/2, tau) != 0", tau.central_nonvanishing == Some(true));
            }
            flags.push("b >= 1", b >= 1);
            flags.push("c >= 2", c >= 2);
            let g = GroupDatum::mp((ab + c) / 2);
            let mut e = datum(
                g.clone(),
                GroupDatum::so_odd(ab / 2),
                GroupDatum::mp(c / 2),
                EndoscopyKind::MpVariant,
                "eq-3.2-variant",
            );
            e.variants =
                vec![datum(g, GroupDatum::mp(ab / 2), GroupDatum::mp(c / 2), EndoscopyKind::MpVariant, "eq-3.2-variant")];
            Cell { tag: "conj-5.5", ambient: GroupDatum::mp(m / 2), psi0: top, endoscopy: e }
        }
        (Sp, 1, 0) => {
            need_parity(b, true, "Sp target with a odd")?;
            flags.push("c >= 1 (c = 0 is the identity on the zero orbit)", c >= 1);
            Cell {
                tag: "conj-5.9",
                ambient: GroupDatum::sp((m - 1) / 2),
                psi0: top,
                endoscopy: datum(
                    GroupDatum::sp((ab + c - 1) / 2),
                    GroupDatum::sp((ab - 1) / 2),
                    GroupDatum::so_even(c / 2, free_eta()),
                    EndoscopyKind::Standard,
                    "eq-3.7",
                ),
            }
        }
        (Mp, 1, 1) => {
            need_parity(b, false, "Mp target with a, c odd")?;
            flags.push("b >= 2", b >= 2);
            Cell {
                tag: "conj-5.10",
                ambient: GroupDatum::sp((m - 1) / 2),
                psi0: top,
                endoscopy: datum(
                    GroupDatum::mp((ab + c - 1) / 2),
                    GroupDatum::so_odd(ab / 2),
                    GroupDatum::so_odd((c - 1) / 2),
                    EndoscopyKind::MpVariant,
                    "eq-3.5",
                ),
            }
        }
        (SOeven, 1, 0) => {
            need_parity(b, true, "SOeven target with a odd")?;
            flags.push("c >= 2", c >= 2);
            let chi = opts.chi.clone().unwrap_or_else(|| CuspidalDatum::character("χ"));
            let psi0 = top.plus(SimpleParameter::new(chi, 1));
            let e2 = free_eta();
            let mut e = datum(
                GroupDatum::so_even((ab + c + 1) / 2, &e1 * &e2),
                GroupDatum::sp((ab - 1) / 2),
                GroupDatum::sp(c / 2),
                EndoscopyKind::Twisted,
                "eq-3.9",
            );
            e.eta_pair = Some((e1, e2));
            Cell { tag: "conj-5.11", ambient: GroupDatum::so_even((m + 1) / 2, psi0.central_eta()), psi0, endoscopy: e }
        }
        (SOodd, 1, 0) => {
            need_parity(b, false, "SOodd target with a odd")?;
            flags.push("c >= 2", c >= 2);
            Cell {
                tag: "conj-5.12",
                ambient: GroupDatum::so_odd(m / 2),
                psi0: top,
                endoscopy: datum(
                    GroupDatum::so_odd((ab + c) / 2),
                    GroupDatum::mp(ab / 2),
                    GroupDatum::mp(c / 2),
                    EndoscopyKind::MpVariant,
                    "eq-3.4",
                ),
            }
        }
        (fam, ap, cp) => {
            return Err(Error::CaseNotConstructed(format!(
                "{fam} target with a {} and c {}",
                if ap == 0 { "even" } else { "odd" },
                if cp == 0 { "even" } else { "odd" }
            )))
        }
    };
    Ok(cell)
}

fn unitary_cell(
    tau: &CuspidalDatum,
    a: u32,
    b: u32,
    c: u32,
    opts: &CompileOptions,
    flags: &mut Flags,
) -> Result<Cell> {
    let d = a - 1;
    let m_v = a * (b + c) + u32::from(opts.unitary_extra);
    let top = SimpleParameter::new(tau.clone(), b + c);
    let eta_top = match sign_of_simple(&top, None)? {
        TypeTag::Conjugate(s) => s,
        _ => unreachable!("conjugate datum"),
    };
    // A summand of U(m_V) has sign kappa (-1)^(m_V - 1).
    let forced = eta_top * Sign::pow_minus_one(m_v as i64 - 1);
    let kappa = opts.kappa.unwrap_or(forced);
    flags.push("eta_(tau,b+c) = kappa (-1)^(m_V - 1)", kappa == forced);
    flags.push("c >= 1", c >= 1);
    let mut psi0 = ArthurParameter::simple(tau.clone(), b + c);
    if opts.unitary_extra {
        let chi = opts.chi.clone().unwrap_or_else(|| CuspidalDatum::conjugate_character("χ", eta_top));
        let chi_sign = match sign_of_simple(&SimpleParameter::new(chi.clone(), 1), None)? {
            TypeTag::Conjugate(s) => s,
            _ => {
                return Err(Error::GroupMismatch(format!("{} is not conjugate self-dual", chi.id)));
            }
        };
        flags.push("eta_chi = eta_(tau,b+c)", chi_sign == eta_top);
        psi0 = psi0.plus(SimpleParameter::new(chi, 1));
    }
    let n = m_v - d * c;
    let n1 = m_v - a * c;
    let basis = if n % 2 == 0 { "eq-3.12" } else { "eq-3.13" };
    Ok(Cell {
        tag: "eq-5.14",
        ambient: GroupDatum::unitary(m_v, kappa),
        psi0,
        endoscopy: EndoscopyDatum::unitary(n, kappa, n1, basis),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TowerStep {
    /// `psi_base ⊞ (tau, b)`.
    Ascend,
    /// `psi_base ⊟ (tau, b)`.
    Descend,
    /// `psi_base ⊞ (tau, 0)`: same parameter, partner group.
    Switch,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerNode {
    pub level_b: u32,
    pub step: TowerStep,
    pub group: GroupDatum,
    pub parameter: ArthurParameter,
    /// e.g. `ψ⊞(τ,3)`.
    pub annotation: String,
}

fn parameter_type(g: &GroupDatum) -> Result<TypeTag> {
    match g.family() {
        GroupFamily::SOodd | GroupFamily::Mp => Ok(TypeTag::Symplectic),
        GroupFamily::Sp | GroupFamily::SOeven => Ok(TypeTag::Orthogonal),
        GroupFamily::U => Err(Error::CaseNotConstructed("towers of unitary groups".into())),
    }
}

fn group_for(ty: TypeTag, n: u32, psi: &ArthurParameter, symplectic_family: GroupFamily) -> GroupDatum {
    match ty {
        TypeTag::Orthogonal if n % 2 == 1 => GroupDatum::sp((n - 1) / 2),
        TypeTag::Orthogonal => GroupDatum::so_even(n / 2, psi.central_eta()),
        _ if symplectic_family == GroupFamily::Mp => GroupDatum::mp(n / 2),
        _ => GroupDatum::so_odd(n / 2),
    }
}

fn toggle(f: GroupFamily) -> GroupFamily {
    match f {
        GroupFamily::Mp => GroupFamily::SOodd,
        _ => GroupFamily::Mp,
    }
}

fn check_base(base: &GroupDatum, psi: &ArthurParameter) -> Result<()> {
    if psi.n() != base.twisted_size() {
        return Err(Error::GroupMismatch(format!(
            "N({psi}) = {} but {base} needs {}",
            psi.n(),
            base.twisted_size()
        )));
    }
    if !psi.is_empty() {
        let groups = crate::parameters::classify(psi, None)?;
        if !groups.iter().any(|g| g.same_shape(base)) {
            return Err(Error::GroupMismatch(format!("{psi} does not factor through {base}")));
        }
    }
    Ok(())
}

/// Is `psi` the parameter of a vertex of the descent chain for `tau`?
fn chain_level(base: &GroupDatum, psi: &ArthurParameter, tau: &CuspidalDatum) -> Option<u32> {
    if tau.duality != Some(Duality::Symplectic) || tau.central_nonvanishing != Some(true) {
        return None;
    }
    let s = psi.summands();
    match base.family() {
        GroupFamily::Mp if s.len() == 1 && s[0].tau.id == tau.id && s[0].b % 2 == 1 => Some(s[0].b),
        GroupFamily::Sp if s.len() == 2 => {
            let (x, y) = (&s[0], &s[1]);
            (x.tau.id == tau.id && x.b % 2 == 0 && y.tau.is_trivial() && y.b == 1).then_some(x.b)
        }
        _ => None,
    }
}

fn chain_vertex(tau: &CuspidalDatum, k: u32) -> (GroupDatum, ArthurParameter) {
    let a = tau.a;
    if k % 2 == 1 {
        (GroupDatum::mp(a * k / 2), ArthurParameter::simple(tau.clone(), k))
    } else {
        let one = SimpleParameter::new(CuspidalDatum::trivial(), 1);
        let psi = if k == 0 { ArthurParameter::new(vec![one]) } else { ArthurParameter::simple(tau.clone(), k).plus(one) };
        (GroupDatum::sp(a * k / 2), psi)
    }
}

/// `(tau, b)`-tower over `(base, psi_base)`, ordered from the lowest node
/// up. The base itself is not listed.
///
/// For a symplectic `tau` with nonvanishing central value over a chain
/// vertex (`Mp` with `(tau, odd)`, or `Sp` with `(tau, even) ⊞ (1,1)`), the
/// tower is the alternating descent chain and climbs one step of `b` at a
/// time. Otherwise each level adds `(tau, b)` with the parity of `b` fixed by
/// the type of `psi_base`, and descending nodes are listed while
/// `(tau, b)` occurs in `psi_base`.
pub fn tower(base: &GroupDatum, psi_base: &ArthurParameter, tau: &CuspidalDatum, steps: u32) -> Result<Vec<TowerNode>> {
    tau.validate()?;
    if !tau.is_self_dual() {
        return Err(Error::NotSelfDual(format!("{} is not self-dual", tau.id)));
    }
    if tau.base != Base::Plain {
        return Err(Error::CaseNotConstructed("towers of unitary groups".into()));
    }
    let ty = parameter_type(base)?;
    check_base(base, psi_base)?;
    if let Some(k0) = chain_level(base, psi_base, tau) {
        return Ok((1..=steps)
            .map(|i| {
                let k = k0 + i;
                let (group, parameter) = chain_vertex(tau, k);
                TowerNode { level_b: k, step: TowerStep::Ascend, group, parameter, annotation: format!("({},{k})", tau.id) }
            })
            .collect());
    }
    let a = tau.a;
    let sympl = tau.duality == Some(Duality::Symplectic);
    let b_odd = (ty == TypeTag::Symplectic) == sympl;
    let b0 = if b_odd { 1 } else { 2 };
    let fam = base.family();
    let sym_family = if a % 2 == 0 { fam } else { toggle(fam) };
    let n = psi_base.n();
    let mut nodes = Vec::new();

    let mut down = Vec::new();
    let mut b = b0;
    loop {
        let sp = SimpleParameter::new(tau.clone(), b);
        if !psi_base.contains(&sp) || a * b > n {
            break;
        }
        let parameter = psi_base.boxminus(&sp)?;
        down.push(TowerNode {
            level_b: b,
            step: TowerStep::Descend,
            group: group_for(ty, n - a * b, &parameter, sym_family),
            parameter,
            annotation: format!("ψ⊟({},{b})", tau.id),
        });
        b += 2;
    }
    nodes.extend(down.into_iter().rev());

    if a % 2 == 1 && !b_odd {
        nodes.push(TowerNode {
            level_b: 0,
            step: TowerStep::Switch,
            group: group_for(ty, n, psi_base, sym_family),
            parameter: psi_base.clone(),
            annotation: format!("ψ⊞({},0)", tau.id),
        });
    }
    for i in 0..steps {
        let b = b0 + 2 * i;
        let parameter = psi_base.plus(SimpleParameter::new(tau.clone(), b));
        nodes.push(TowerNode {
            level_b: b,
            step: TowerStep::Ascend,
            group: group_for(ty, n + a * b, &parameter, sym_family),
            parameter,
            annotation: format!("ψ⊞({},{b})", tau.id),
        });
    }
    Ok(nodes)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ArrowLabel {
    FJ,
    RES,
    LFT,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleVertex {
    pub group: GroupDatum,
    pub parameter: ArthurParameter,
}

/// `from`/`to` index into `vertices` (top, middle, bottom).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleEdge {
    pub from: usize,
    pub to: usize,
    pub label: ArrowLabel,
    pub role: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleDiagram {
    pub vertices: Vec<TriangleVertex>,
    pub edges: Vec<TriangleEdge>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasicTriangles {
    pub tau: CuspidalDatum,
    pub l: u32,
    pub basic: TriangleDiagram,
    /// Present for `l >= 1`.
    pub dual: Option<TriangleDiagram>,
}

fn triangle(tau: &CuspidalDatum, top: u32) -> TriangleDiagram {
    let vertices = [top, top - 1, top - 2]
        .into_iter()
        .map(|k| {
            let (group, parameter) = chain_vertex(tau, k);
            TriangleVertex { group, parameter }
        })
        .collect();
    let edge = |from, to, label, role: &str| TriangleEdge { from, to, label, role: role.into() };
    TriangleDiagram {
        vertices,
        edges: vec![
            edge(0, 1, ArrowLabel::FJ, "descent"),
            edge(1, 2, ArrowLabel::LFT, "descent"),
            edge(2, 0, ArrowLabel::RES, "transfer"),
        ],
    }
}

/// Triangle with vertices at `b = 2l+2, 2l+1, 2l` and its dual at
/// `b = 2l+1, 2l, 2l-1`, for symplectic `tau` with `L(1/2, tau) != 0`.
pub fn basic_triangles(tau: &CuspidalDatum, l: u32) -> Result<BasicTriangles> {
    tau.validate()?;
    if tau.base != Base::Plain || tau.duality != Some(Duality::Symplectic) || !tau.is_self_dual() {
        return Err(Error::Hypothesis(format!("{} must be self-dual of symplectic type", tau.id)));
    }
    if tau.central_nonvanishing != Some(true) {
        return Err(Error::Hypothesis(format!("L(1/2, {}) != 0 is not asserted", tau.id)));
    }
    Ok(BasicTriangles {
        tau: tau.clone(),
        l,
        basic: triangle(tau, 2 * l + 2),
        dual: (l >= 1).then(|| triangle(tau, 2 * l + 1)),
    })
}

pub enum Diagram<'a> {
    Tower(&'a [TowerNode]),
    Triangle(&'a TriangleDiagram),
}

fn vertex_label(g: &GroupDatum, psi: &ArthurParameter) -> String {
    format!("{g} / {psi}")
}

/// Graphviz rendering; node labels are `group / parameter`.
pub fn to_dot(diagram: Diagram<'_>) -> String {
    match diagram {
        Diagram::Tower(nodes) => {
            let mut g = DotGraph::new("tower");
            for (i, n) in nodes.iter().enumerate() {
                g.node(&format!("n{i}"), &vertex_label(&n.group, &n.parameter));
            }
            for i in 1..nodes.len() {
                g.edge(&format!("n{}", i - 1), &format!("n{i}"), None);
            }
            g.render()
        }
        Diagram::Triangle(t) => {
            let mut g = DotGraph::new("triangle");
            for (i, v) in t.vertices.iter().enumerate() {
                g.node(&format!("v{i}"), &vertex_label(&v.group, &v.parameter));
            }
            for e in &t.edges {
                let label = format!("{:?}", e.label);
                g.edge(&format!("v{}", e.from), &format!("v{}", e.to), Some(&label));
            }
            g.render()
        }
    }
}
