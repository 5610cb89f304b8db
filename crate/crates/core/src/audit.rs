//! Enumerated cross-module consistency sweeps.
//!
//! Each sweep builds a list of independent cells and checks them, in
//! parallel when the `parallel` feature is on and [`Mode::Parallel`] is
//! requested. Results are collected in cell order, so the report does not
//! depend on the mode or on scheduling.

use serde::{Deserialize, Serialize};

use crate::endoscopy::{enumerate_elliptic, validate, EndoscopyDatum};
use crate::groups::{EtaLabel, GroupDatum, GroupFamily, Sign};
use crate::jordan::{jordan_blocks, maximal_summands, pole_profile, reconstruct, t_set};
use crate::kernel_cases::{compile_with, CompileOptions};
use crate::orbits::{coefficient_kind, grading};
use crate::parameters::{classify, kappa_ab, ArthurParameter, CuspidalDatum, SimpleParameter};
use crate::partitions::{all_partitions, bv_dual, collapse, dominates, is_valid, OrbitFamily, Partition};
use crate::spectral::{beta_factors, residual_points, rho_pair, x_plus, FactorKind, PoleCase, SpectralFamily};
use crate::{Error, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Parallel,
    Sequential,
}

impl Default for Mode {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Mode::Parallel
        } else {
            Mode::Sequential
        }
    }
}

/// Enumeration bounds and the cuspidal pool. Every field has a default.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct AuditConfig {
    /// Bound on `N(psi)` for parameter and endoscopy sweeps.
    pub max_n: u32,
    pub max_a: u32,
    pub max_b: u32,
    pub max_c: u32,
    pub max_ab_bv: u32,
    pub max_collapse_total: u32,
    pub max_grading_total: u32,
    pub max_sign_ab: u32,
    pub max_m_v: u32,
    pub max_beta_b: u32,
    pub max_residual_b: u32,
    pub tau_pool: Vec<CuspidalDatum>,
}

impl Default for AuditConfig {
    fn default() -> Self {
        AuditConfig {
            max_n: 16,
            max_a: 6,
            max_b: 5,
            max_c: 6,
            max_ab_bv: 40,
            max_collapse_total: 20,
            max_grading_total: 24,
            max_sign_ab: 30,
            max_m_v: 40,
            max_beta_b: 50,
            max_residual_b: 10,
            tau_pool: default_pool(),
        }
    }
}

/// The trivial character, a symplectic `GL_2` datum with nonvanishing
/// central value, and an orthogonal `GL_3` datum.
pub fn default_pool() -> Vec<CuspidalDatum> {
    vec![
        CuspidalDatum::trivial(),
        CuspidalDatum::symplectic("τ2", 2).with_central_nonvanishing(true),
        CuspidalDatum::orthogonal("σ3", 3),
    ]
}

const MAX_LISTED: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub name: String,
    pub checked: usize,
    pub failures: usize,
    /// The first few failure messages.
    pub examples: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub config: AuditConfig,
    pub sweeps: Vec<SweepReport>,
    pub total_checked: usize,
    pub total_failures: usize,
}

impl AuditReport {
    pub fn ok(&self) -> bool {
        self.total_failures == 0
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Outcome of one cell: `None` when skipped, else its failure messages.
type Outcome = Option<Vec<String>>;

fn run_cells<T, F>(mode: Mode, name: &str, cells: &[T], f: F) -> SweepReport
where
    T: Sync,
    F: Fn(&T) -> Outcome + Sync,
{
    let outcomes: Vec<Outcome> = match mode {
        #[cfg(feature = "parallel")]
        Mode::Parallel => {
            use rayon::prelude::*;
            cells.par_iter().map(&f).collect()
        }
        _ => cells.iter().map(&f).collect(),
    };
    let mut checked = 0;
    let mut failures = 0;
    let mut examples = Vec::new();
    for msgs in outcomes.into_iter().flatten() {
        checked += 1;
        if !msgs.is_empty() {
            failures += 1;
            for m in msgs {
                if examples.len() < MAX_LISTED {
                    examples.push(m);
                }
            }
        }
    }
    SweepReport { name: name.to_string(), checked, failures, examples }
}

pub fn run_audit(cfg: &AuditConfig, mode: Mode) -> AuditReport {
    let sweeps = vec![
        sweep_bv(cfg, mode),
        sweep_collapse(cfg, mode),
        sweep_grading(cfg, mode),
        sweep_cases(cfg, mode),
        sweep_signs(cfg, mode),
        sweep_beta(cfg, mode),
        sweep_residual(cfg, mode),
        sweep_parameters(cfg, mode),
        sweep_endoscopy(cfg, mode),
    ];
    let total_checked = sweeps.iter().map(|s| s.checked).sum();
    let total_failures = sweeps.iter().map(|s| s.failures).sum();
    AuditReport { config: cfg.clone(), sweeps, total_checked, total_failures }
}

fn parts(v: &[(u32, u32)]) -> Partition {
    let mut out = Vec::new();
    for &(part, mult) in v {
        out.extend(std::iter::repeat(part).take(mult as usize));
    }
    Partition::new(out)
}

/// Closed form of the dual of `[b^a]` where one is known, `None` otherwise.
///
/// `C -> B`: `[(a+1) a^(b-1)]` for `b` odd, `[(a+1) a^(b-2) (a-1) 1]` for
/// `b` even with `a` even. `D -> D`: `[a^b]` for `b` even,
/// `[a^(b-1) (a-1) 1]` for `b` odd. `B -> C` with `a, b` odd:
/// `[a^(b-1) (a-1)]`. `A -> A`: `[a^b]`.
pub fn bv_rectangle_closed_form(dual: OrbitFamily, a: u32, b: u32) -> Option<Partition> {
    let rect = Partition::rectangle(b, a);
    if !is_valid(&rect, dual) || !dual.total_ok(a * b) {
        return None;
    }
    match dual {
        OrbitFamily::A => Some(parts(&[(a, b)])),
        OrbitFamily::C if b % 2 == 1 => Some(parts(&[(a + 1, 1), (a, b - 1)])),
        OrbitFamily::C if a % 2 == 0 => Some(parts(&[(a + 1, 1), (a, b - 2), (a - 1, 1), (1, 1)])),
        OrbitFamily::D if b % 2 == 0 => Some(parts(&[(a, b)])),
        OrbitFamily::D => Some(parts(&[(a, b - 1), (a - 1, 1), (1, 1)])),
        OrbitFamily::B if a % 2 == 1 && b % 2 == 1 => Some(parts(&[(a, b - 1), (a - 1, 1)])),
        _ => None,
    }
}

pub fn bv_target(dual: OrbitFamily) -> OrbitFamily {
    match dual {
        OrbitFamily::A => OrbitFamily::A,
        OrbitFamily::B => OrbitFamily::C,
        OrbitFamily::C => OrbitFamily::B,
        OrbitFamily::D => OrbitFamily::D,
    }
}

fn sweep_bv(cfg: &AuditConfig, mode: Mode) -> SweepReport {
    let mut cells = Vec::new();
    for fam in OrbitFamily::ALL {
        for a in 1..=cfg.max_ab_bv {
            for b in 1..=cfg.max_ab_bv / a {
                cells.push((fam, a, b));
            }
        }
    }
    run_cells(mode, "partitions.bv_closed_forms", &cells, |&(fam, a, b)| {
        let want = bv_rectangle_closed_form(fam, a, b)?;
        let got = bv_dual(&Partition::rectangle(b, a), fam, bv_target(fam));
        Some(match got {
            Ok(p) if p == want => vec![],
            Ok(p) => vec![format!("{fam}: dual of [{b}^{a}] is {p}, closed form {want}")],
            Err(e) => vec![format!("{fam}: dual of [{b}^{a}] failed: {e}")],
        })
    })
}

fn sweep_collapse(cfg: &AuditConfig, mode: Mode) -> SweepReport {
    let mut cells = Vec::new();
    for total in 1..=cfg.max_collapse_total {
        for p in all_partitions(total) {
            for fam in [OrbitFamily::B, OrbitFamily::C, OrbitFamily::D] {
                if fam.total_ok(total) {
                    cells.push((fam, p.clone()));
                }
            }
        }
    }
    run_cells(mode, "partitions.collapse", &cells, |(fam, p)| {
        let q = match collapse(p, *fam) {
            Ok(q) => q,
            Err(e) => return Some(vec![format!("{fam}-collapse of {p}: {e}")]),
        };
        let mut out = Vec::new();
        if !is_valid(&q, *fam) {
            out.push(format!("{fam}-collapse of {p} is {q}, not valid"));
        }
        if dominates(p, &q) != Ok(true) {
            out.push(format!("{fam}-collapse of {p} is {q}, not dominated"));
        }
        if is_valid(p, *fam) && &q != p {
            out.push(format!("{fam}-collapse moved the valid {p}"));
        }
        Some(out)
    })
}

fn sweep_grading(cfg: &AuditConfig, mode: Mode) -> SweepReport {
    let mut cells = Vec::new();
    for fam in OrbitFamily::ALL {
        for total in 1..=cfg.max_grading_total {
            if !fam.total_ok(total) {
                continue;
            }
            for d in 1..=total {
                for c in 1..=total / d {
                    let r = total - c * d;
                    if r >= 1 && is_valid(&Partition::hook_type(d, c, r), fam) {
                        cells.push((fam, d, c, r));
                    }
                }
            }
        }
    }
    run_cells(mode, "orbits.grading", &cells, |&(fam, d, c, r)| {
        let p = Partition::hook_type(d, c, r);
        let g = match grading(fam, &p) {
            Ok(g) => g,
            Err(e) => return Some(vec![format!("{fam} {p}: {e}")]),
        };
        let mut out = Vec::new();
        if (g.dim(1) == 0) != (d % 2 == 1) {
            out.push(format!("{fam} {p}: dim g_1 = {} with d = {d}", g.dim(1)));
        }
        let want = fam.lie_algebra_dim(p.total());
        if g.total_dim() != want {
            out.push(format!("{fam} {p}: total {} != {want}", g.total_dim()));
        }
        Some(out)
    })
}

fn case_taus(a: u32) -> Vec<CuspidalDatum> {
    let mut v = vec![CuspidalDatum::orthogonal(&format!("o{a}"), a)];
    if a % 2 == 0 {
        v.push(CuspidalDatum::symplectic(&format!("s{a}"), a).with_central_nonvanishing(true));
    }
    for eta in [Sign::Plus, Sign::Minus] {
        v.push(CuspidalDatum::conjugate(&format!("u{a}{}", eta.symbol()), a, eta));
    }
    v
}

/// Checks one compiled record; `None` if the cell is outside the table or
/// has an unsatisfied constraint.
pub fn check_case(
    target: GroupFamily,
    tau: &CuspidalDatum,
    b: u32,
    c: u32,
    opts: &CompileOptions,
) -> Option<Vec<String>> {
    let case = match compile_with(target, tau, b, c, opts) {
        Ok(case) => case,
        Err(Error::CaseNotConstructed(_)) | Err(Error::ParityViolation(_)) | Err(Error::GroupMismatch(_)) => {
            return None
        }
        Err(e) => return Some(vec![format!("{target} {} b={b} c={c}: {e}", tau.id)]),
    };
    if !case.satisfied() {
        return None;
    }
    let label = format!("{target} {} b={b} c={c}", tau.id);
    let mut out = Vec::new();
    match classify(&case.psi0, case.ambient.kappa()) {
        Ok(groups) => {
            if !groups.iter().any(|g| g == &case.ambient) {
                out.push(format!("{label}: psi0 = {} does not classify into {}", case.psi0, case.ambient));
            }
        }
        Err(e) => out.push(format!("{label}: classify failed: {e}")),
    }
    let fam = case.ambient.family().orbit_family();
    match coefficient_kind(fam, case.d, case.c, case.r()) {
        Ok(k) if k == case.coefficient => {}
        Ok(k) => out.push(format!("{label}: coefficient {} but the orbit gives {k}", case.coefficient)),
        Err(e) => out.push(format!("{label}: orbit check failed: {e}")),
    }
    let v = validate(&case.endoscopy);
    if !v.ok {
        out.push(format!("{label}: endoscopy invalid: {}", v.reasons.join("; ")));
    }
    // The target acts on the space of the 1-parts of [d^c 1^r].
    if case.endoscopy.target.defining_size() != case.r() {
        out.push(format!("{label}: target {} but [d^c 1^r] has r = {}", case.endoscopy.target, case.r()));
    }
    if case.d + 1 != case.a {
        out.push(format!("{label}: d != a - 1"));
    }
    Some(out)
}

fn sweep_cases(cfg: &AuditConfig, mode: Mode) -> SweepReport {
    let mut cells = Vec::new();
    for a in 1..=cfg.max_a {
        for tau in case_taus(a) {
            for b in 0..=cfg.max_b {
                for c in 0..=cfg.max_c {
                    for target in GroupFamily::ALL {
                        let extras: &[bool] = if target == GroupFamily::U { &[false, true] } else { &[false] };
                        for &extra in extras {
                            cells.push((target, tau.clone(), b, c, extra));
                        }
                    }
                }
            }
        }
    }
    run_cells(mode, "kernel_cases.table", &cells, |(target, tau, b, c, extra)| {
        let opts = CompileOptions { unitary_extra: *extra, ..CompileOptions::default() };
        check_case(*target, tau, *b, *c, &opts)
    })
}

fn sweep_signs(cfg: &AuditConfig, mode: Mode) -> SweepReport {
    let mut cells = Vec::new();
    for a in 1..=cfg.max_sign_ab {
        for b in 1..=cfg.max_sign_ab / a {
            for k in [Sign::Plus, Sign::Minus] {
                cells.push((0u8, a, b, k));
            }
        }
    }
    for m_v in 1..=cfg.max_m_v {
        for a in 1..=m_v {
            for c in 1..=m_v / a {
                for k in [Sign::Plus, Sign::Minus] {
                    cells.push((1u8, m_v, a * 1000 + c, k));
                }
            }
        }
    }
    run_cells(mode, "signs", &cells, |&(which, x, y, kappa)| {
        let mut out = Vec::new();
        if which == 0 {
            let (a, b) = (x, y);
            let eta = kappa * Sign::pow_minus_one(a as i64 - 1);
            let lhs = kappa_ab(kappa, a, b) * Sign::pow_minus_one((a * b) as i64 - 1);
            let rhs = eta * Sign::pow_minus_one(b as i64 - 1);
            if lhs != rhs {
                out.push(format!("kappa_a = {kappa}, a = {a}, b = {b}: {lhs} != {rhs}"));
            }
        } else {
            let (m_v, a, c) = (x, y / 1000, y % 1000);
            let d = a - 1;
            let n = m_v - d * c;
            let n1 = m_v - a * c;
            let e = EndoscopyDatum::unitary(n, kappa, n1, "eq-3.11");
            let v = validate(&e);
            if !v.ok {
                out.push(format!("U({m_v}) a={a} c={c}: {}", v.reasons.join("; ")));
            }
            let k1 = e.factors.0.kappa();
            let k2 = e.factors.1.kappa();
            if k1 != Some(kappa * Sign::pow_minus_one(c as i64)) {
                out.push(format!("U({m_v}) a={a} c={c}: kappa_(m_V-ac) = {k1:?}"));
            }
            if k2 != Some(kappa * Sign::pow_minus_one((m_v - a * c) as i64)) {
                out.push(format!("U({m_v}) a={a} c={c}: kappa_c = {k2:?}"));
            }
        }
        Some(out)
    })
}

fn sweep_beta(cfg: &AuditConfig, mode: Mode) -> SweepReport {
    let fams = [
        SpectralFamily::UEven,
        SpectralFamily::UOdd,
        SpectralFamily::SOodd,
        SpectralFamily::Sp,
        SpectralFamily::SOeven,
    ];
    let cells: Vec<(SpectralFamily, u32)> =
        fams.iter().flat_map(|&f| (1..=cfg.max_beta_b).map(move |b| (f, b))).collect();
    run_cells(mode, "spectral.beta", &cells, |&(fam, b)| {
        let mut out = Vec::new();
        let f = match beta_factors(fam, b, true) {
            Ok(f) => f,
            Err(e) => return Some(vec![format!("{fam:?} b={b}: {e}")]),
        };
        if f.len() != b as usize + 1 {
            out.push(format!("{fam:?} b={b}: {} factors", f.len()));
        }
        let (rho, rho_minus) = rho_pair(fam).expect("tabulated");
        let bi = b as i64;
        for x in &f {
            let ok = match (x.kind, x.index) {
                (FactorKind::RankinSelberg, None) => x.slope == 1 && x.intercept == Rational::new(bi + 1, 2),
                (FactorKind::Rho, Some(i)) => {
                    x.slope == 2 && x.intercept == Rational::from_integer(bi + 2 - 2 * i as i64) && x.rho_name == Some(rho)
                }
                (FactorKind::RhoMinus, Some(i)) => {
                    x.slope == 2
                        && x.intercept == Rational::from_integer(bi + 1 - 2 * i as i64)
                        && x.rho_name == Some(rho_minus)
                }
                _ => false,
            };
            if !ok {
                out.push(format!("{fam:?} b={b}: bad factor {x}"));
            }
        }
        Some(out)
    })
}

fn sweep_residual(cfg: &AuditConfig, mode: Mode) -> SweepReport {
    let cells: Vec<(u32, PoleCase)> =
        (1..=cfg.max_residual_b).flat_map(|b| PoleCase::ALL.into_iter().map(move |c| (b, c))).collect();
    run_cells(mode, "spectral.residual", &cells, |&(b, case)| {
        let bi = b as i64;
        let top = match case.id() {
            1 => Rational::new(bi, 2),
            2 => Rational::new(bi - 2, 2),
            3 => Rational::new(bi + 1, 2),
            _ => Rational::new(bi - 1, 2),
        };
        let mut want = Vec::new();
        let mut s = top;
        while s > Rational::from_integer(0) {
            want.push(s);
            s -= Rational::from_integer(1);
        }
        let mut out = Vec::new();
        if x_plus(b, case) != want {
            out.push(format!("b={b} {case}: X+ mismatch"));
        }
        for p in residual_points(b, case) {
            let exceptional = case.id() == 3 && p.s0 == Rational::new(bi - 1, 2);
            if p.square_integrable == exceptional {
                out.push(format!("b={b} {case}: s0 = {} flagged {}", p.s0, p.square_integrable));
            }
        }
        Some(out)
    })
}

/// Elliptic parameters from `pool` with `N <= max_n`, in a fixed order.
pub fn enumerate_parameters(pool: &[CuspidalDatum], max_n: u32) -> Vec<ArthurParameter> {
    let mut simples = Vec::new();
    for tau in pool {
        for b in 1..=max_n / tau.a.max(1) {
            simples.push(SimpleParameter::new(tau.clone(), b));
        }
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn go(
        simples: &[SimpleParameter],
        start: usize,
        budget: u32,
        current: &mut Vec<SimpleParameter>,
        out: &mut Vec<ArthurParameter>,
    ) {
        if !current.is_empty() {
            out.push(ArthurParameter::new(current.clone()));
        }
        for i in start..simples.len() {
            let n = simples[i].n();
            if n <= budget {
                current.push(simples[i].clone());
                go(simples, i + 1, budget - n, current, out);
                current.pop();
            }
        }
    }
    go(&simples, 0, max_n, &mut current, &mut out);
    out
}

fn sweep_parameters(cfg: &AuditConfig, mode: Mode) -> SweepReport {
    let cells = enumerate_parameters(&cfg.tau_pool, cfg.max_n);
    run_cells(mode, "parameters.jordan", &cells, |psi| {
        let mut out = Vec::new();
        let n = psi.n();
        let ids = t_set(psi);
        let homogeneous = ids.iter().all(|id| jordan_blocks(psi, id).is_ok());
        match pole_profile(psi).and_then(|p| reconstruct(&p, &cfg.tau_pool, n)) {
            Ok(back) if homogeneous && &back == psi => {}
            Err(Error::ParityViolation(_)) if !homogeneous => {}
            Ok(back) => out.push(format!("{psi}: round trip gave {back}")),
            Err(e) => out.push(format!("{psi}: round trip failed: {e}")),
        }
        let maxes = maximal_summands(psi);
        if maxes.len() != ids.len() || !maxes.iter().all(|m| psi.contains(m) && ids.contains(&m.tau.id)) {
            out.push(format!("{psi}: maximal summands {maxes:?} do not cover the T-set"));
        }
        if let Ok(groups) = classify(psi, None) {
            for g in &groups {
                if g.twisted_size() != n {
                    out.push(format!("{psi}: classified into {g} of size {}", g.twisted_size()));
                }
            }
            if !groups.is_empty() {
                for id in &ids {
                    match jordan_blocks(psi, id) {
                        Ok(bs) => {
                            if !bs.windows(2).all(|w| w[0] > w[1] && w[0] % 2 == w[1] % 2) {
                                out.push(format!("{psi}: blocks {bs:?} for {id}"));
                            }
                        }
                        Err(e) => out.push(format!("{psi}: {e}")),
                    }
                }
            }
        }
        Some(out)
    })
}

fn sweep_endoscopy(cfg: &AuditConfig, mode: Mode) -> SweepReport {
    let mut cells = Vec::new();
    for n in 1..=cfg.max_n {
        if n % 2 == 1 {
            cells.push(GroupDatum::sp((n - 1) / 2));
        } else {
            cells.push(GroupDatum::so_odd(n / 2));
            cells.push(GroupDatum::mp(n / 2));
            cells.push(GroupDatum::so_even(n / 2, EtaLabel::trivial()));
            cells.push(GroupDatum::so_even(n / 2, EtaLabel::token("η")));
        }
        cells.push(GroupDatum::unitary(n, Sign::Plus));
        cells.push(GroupDatum::unitary(n, Sign::Minus));
    }
    run_cells(mode, "endoscopy.enumerate", &cells, |g| {
        let out = enumerate_elliptic(g)
            .iter()
            .filter_map(|e| {
                let v = validate(e);
                (!v.ok).then(|| format!("{}: {}", e.describe(), v.reasons.join("; ")))
            })
            .collect();
        Some(out)
    })
}
